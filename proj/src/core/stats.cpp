#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>

#include "errors.hpp"
#include "hamiltonian.hpp"
#include "parallel.hpp"

namespace magnon {

namespace {

std::string lambda_label(const std::vector<int>& lambdas) {
    std::string s = "(";
    for (std::size_t a = 0; a < lambdas.size(); ++a) s += (a ? "," : "") + std::to_string(lambdas[a]);
    return s + ")";
}

struct Candidate {
    BetheRoots roots;
    double v = 0;
};

std::vector<Candidate> two_magnon_candidates(int n, std::optional<RootClass> filter) {
    auto wanted = [&](RootClass c) { return !filter || *filter == c; };
    std::vector<Candidate> out;
    if (wanted(RootClass::scattering))
        for (auto& r : all_scattering_roots(n)) out.push_back({std::move(r), 0.0});
    if (wanted(RootClass::cosh_bound))
        for (const auto& p : all_bound_roots(n, BoundKind::cosh)) out.push_back({bound_roots(p), p.v});
    if (wanted(RootClass::sinh_bound))
        for (const auto& p : all_bound_roots(n, BoundKind::sinh)) out.push_back({bound_roots(p), p.v});
    if (wanted(RootClass::singular) && n % 2 == 0 && n > 2)
        out.push_back({singular_roots(n), std::numeric_limits<double>::infinity()});
    if (wanted(RootClass::goldstone_mixed))
        for (int l2 = 0; l2 < n; ++l2) out.push_back({solve_two_magnon_scattering(n, 0, l2), 0.0});
    return out;
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t m = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

}  // namespace

SweepResult sweep_two_magnon(int n, std::optional<RootClass> filter) {
    require(n >= 3 && n <= max_sites, "two-magnon sweep needs 3 <= N <= 62");
    const auto candidates = two_magnon_candidates(n, filter);
    const auto hamiltonian = build_hamiltonian(n, 2, 1.0);
    std::unique_ptr<Spectrum> spectrum;
    if (n <= projection_certify_max_sites) spectrum = std::make_unique<Spectrum>(diagonalize(hamiltonian));

    std::vector<std::optional<PopulationRecord>> slots(candidates.size());
    std::vector<std::string> failures(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t i) {
        const auto& c = candidates[i];
        try {
            PopulationRecord rec;
            rec.root_class = c.roots.root_class;
            rec.roots = c.roots;
            rec.v = c.v;
            const StateVector s = bethe_state(c.roots);
            const auto check = verify_eigenstate(hamiltonian, s);
            rec.energy = check.rayleigh;
            rec.eigen_residual = check.residual;
            rec.bae_residual = bae_residual(c.roots);
            rec.profile = concurrence_profile(s);
            bool ok = check.residual < 1e-8;
            if (spectrum) {
                rec.projection = spectrum->eigenspace_projection(s, check.rayleigh);
                ok = ok && *rec.projection >= 1 - 1e-8;
            }
            if (!ok) {
                failures[i] = to_string(rec.root_class) + " " + lambda_label(c.roots.lambdas) +
                              ": not certified as an eigenstate (residual " + std::to_string(check.residual) + ")";
                return;
            }
            slots[i] = std::move(rec);
        } catch (const Error& e) {
            failures[i] = to_string(c.roots.root_class) + " " + lambda_label(c.roots.lambdas) + ": " + e.what();
        }
    });

    SweepResult out;
    out.n_sites = n;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i]) out.records.push_back(std::move(*slots[i]));
        if (!failures[i].empty()) out.errors.push_back(failures[i]);
    }
    const auto expected = static_cast<std::size_t>(binomial(n, 2));
    if (!filter && out.records.size() != expected)
        out.errors.push_back("found " + std::to_string(out.records.size()) + " two-magnon eigenstates, expected " +
                             std::to_string(expected));
    return out;
}

SeparationStats separation_stats(const std::vector<PopulationRecord>& records) {
    require(!records.empty(), "statistics need a nonempty population");
    const int n = records.front().profile.n_sites;
    const std::size_t ranges = static_cast<std::size_t>(n / 2);
    SeparationStats st;
    st.n_sites = n;
    st.population = records.size();
    st.max.assign(ranges, 0.0);
    st.median.assign(ranges, std::nullopt);
    st.percent_nonzero.assign(ranges, 0.0);
    st.nu_histogram.assign(ranges + 1, 0);
    for (std::size_t r = 0; r < ranges; ++r) {
        std::vector<double> positive;
        for (const auto& rec : records) {
            require(rec.profile.values.size() == ranges, "records come from different ring lengths");
            const double c = rec.profile.values[r];
            st.max[r] = std::max(st.max[r], c);
            if (c > 0) positive.push_back(c);
        }
        st.percent_nonzero[r] = 100.0 * static_cast<double>(positive.size()) / static_cast<double>(records.size());
        if (!positive.empty()) st.median[r] = median_of(std::move(positive));
    }
    for (const auto& rec : records) ++st.nu_histogram[static_cast<std::size_t>(rec.profile.nonzero_count())];
    return st;
}

std::size_t QuenchReport::violations() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const QuenchRow& r) { return r.violation; }));
}

QuenchReport quench_survey(int n, int magnons) {
    require(magnons == 3 || magnons == 4, "quench survey covers three or four magnons");
    // beyond half filling the raised states are spin-flip images of fewer-magnon states
    require(n >= 2 * magnons && n <= max_sites, "quench survey needs N >= 2 x magnons");
    if (binomial(n, magnons) > static_cast<double>(max_dense_dimension))
        fail(ErrorCode::resource, "sector too large for the quench survey");

    QuenchReport rep;
    rep.n_sites = n;
    rep.magnons = magnons;

    struct Job {
        std::string label;
        std::string transition;
        std::function<StateVector()> before;
        bool zero_expected;
    };
    std::vector<Job> jobs;
    for (int l2 = 1; l2 < n; ++l2) {
        const std::string label = "one_magnon (" + std::to_string(l2) + ")";
        if (magnons == 3)
            jobs.push_back({label, "1G+1 -> 2G+1",
                            [n, l2] { return apply_total_raising(one_magnon_state(n, l2)); }, true});
        else
            jobs.push_back({label, "2G+1 -> 3G+1",
                            [n, l2] { return apply_total_raising(apply_total_raising(one_magnon_state(n, l2))); },
                            true});
    }
    SweepResult sweep;
    for (auto cls : {RootClass::scattering, RootClass::cosh_bound, RootClass::sinh_bound, RootClass::singular}) {
        auto part = sweep_two_magnon(n, cls);
        for (auto& r : part.records) sweep.records.push_back(std::move(r));
        for (auto& e : part.errors) rep.errors.push_back(e);
    }
    for (const auto& rec : sweep.records) {
        const std::string label = to_string(rec.root_class) + " " + lambda_label(rec.roots.lambdas);
        const BetheRoots roots = rec.roots;
        if (magnons == 3)
            jobs.push_back({label, "0G+2 -> 1G+2", [roots] { return bethe_state(roots); }, false});
        else
            jobs.push_back({label, "1G+2 -> 2G+2", [roots] { return apply_total_raising(bethe_state(roots)); }, true});
    }

    std::vector<std::optional<QuenchRow>> slots(jobs.size());
    std::vector<std::string> failures(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& job = jobs[i];
        try {
            const StateVector before = job.before();
            const StateVector after = apply_total_raising(before);
            const auto pb = concurrence_profile(before);
            const auto pa = concurrence_profile(after);
            QuenchRow row;
            row.state = job.label;
            row.transition = job.transition;
            row.sum_before = pb.sum();
            row.sum_after = pa.sum();
            row.max_after = pa.values.empty() ? 0.0 : *std::max_element(pa.values.begin(), pa.values.end());
            row.zero_expected = job.zero_expected;
            row.violation = (job.zero_expected && row.max_after >= concurrence_zero_tol) ||
                            row.sum_after > row.sum_before + 1e-10;
            slots[i] = row;
        } catch (const Error& e) {
            failures[i] = job.label + ": " + e.what();
        }
    });
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (slots[i]) rep.rows.push_back(*slots[i]);
        if (!failures[i].empty()) rep.errors.push_back(failures[i]);
    }
    return rep;
}

AgsReport ags_survey(int n) {
    require(n >= 2 && n <= 12 && n % 2 == 0, "antiferromagnetic ground state survey needs even N in 2..12");
    std::vector<int> lambdas;
    for (int l = 1; l < n; l += 2) lambdas.push_back(l);

    const auto h = build_hamiltonian(n, n / 2, 1.0);
    const Spectrum spectrum = diagonalize(h);
    AgsReport rep;
    rep.n_sites = n;
    rep.ground_energy = spectrum.eigenvalue(0);

    std::optional<StateVector> state;
    try {
        auto solved = solve_eigenstate(n, lambdas);
        rep.energy = solved.rayleigh;
        rep.provenance = "bethe";
        state = std::move(solved.state);
        if (std::abs(rep.energy - rep.ground_energy) > 1e-8) rep.note = "Bethe state is not the ground state";
    } catch (const Error& e) {
        rep.provenance = "exact_diagonalization";
        rep.note = e.what();
        state = spectrum.eigenvector(0);
        rep.energy = rep.ground_energy;
    }
    rep.profile = concurrence_profile(*state);
    rep.only_nearest_neighbour = !rep.profile.values.empty() && rep.profile.values[0] > 0 &&
                                 std::all_of(rep.profile.values.begin() + 1, rep.profile.values.end(),
                                             [](double c) { return c == 0; });
    return rep;
}

double LengthScanRow::from_longest(int i) const {
    const int longest = profile.n_sites / 2;
    require(i >= 1 && i <= longest, "C_{-i} index out of range");
    return profile.at(longest + 1 - i);
}

LengthScan length_scan(const std::vector<int>& lambdas, int n_min, int n_max) {
    require(n_min >= 2 && n_max >= n_min && n_max <= max_sites, "invalid N range");
    const auto count = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<std::optional<LengthScanRow>> slots(count);
    std::vector<std::string> failures(count);
    parallel_for(count, [&](std::size_t i) {
        const int n = n_min + static_cast<int>(i);
        try {
            auto solved = solve_eigenstate(n, lambdas);
            LengthScanRow row;
            row.n_sites = n;
            row.root_class = solved.roots.root_class;
            row.energy = solved.rayleigh;
            row.eigen_residual = solved.eigen_residual;
            row.profile = concurrence_profile(solved.state);
            slots[i] = std::move(row);
        } catch (const Error& e) {
            failures[i] = "N=" + std::to_string(n) + ": " + e.what();
        }
    });
    LengthScan out;
    out.lambdas = lambdas;
    for (std::size_t i = 0; i < count; ++i) {
        if (slots[i]) out.rows.push_back(std::move(*slots[i]));
        if (!failures[i].empty()) out.errors.push_back(failures[i]);
    }
    return out;
}

}  // namespace magnon

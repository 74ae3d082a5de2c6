#include "reports.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "entangle.hpp"
#include "errors.hpp"
#include "hamiltonian.hpp"
#include "parallel.hpp"
#include "stats.hpp"

namespace magnon {

namespace {

constexpr double pi = std::numbers::pi;

Cell real(double x) { return x; }
Cell integer(long long x) { return x; }
Cell text(std::string s) { return s; }

std::string join(const std::vector<int>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
    return s;
}

std::vector<std::string> concurrence_columns(int ranges, const char* prefix = "C") {
    std::vector<std::string> cols;
    for (int r = 1; r <= ranges; ++r) cols.push_back(prefix + std::to_string(r));
    return cols;
}

void append_profile(std::vector<Cell>& row, const ConcurrenceProfile& p, int width) {
    for (int r = 1; r <= width; ++r)
        row.push_back(r <= static_cast<int>(p.values.size()) ? real(p.at(r)) : Cell{});
}

void append_null(std::vector<Cell>& row, int width) {
    for (int r = 0; r < width; ++r) row.emplace_back();
}

Table make_table(std::string name, std::vector<std::string> columns) {
    return Table{std::move(name), std::move(columns), {}};
}

void push_columns(std::vector<std::string>& cols, const std::vector<std::string>& more) {
    cols.insert(cols.end(), more.begin(), more.end());
}

struct BuiltState {
    StateVector state;
    std::optional<BetheRoots> roots;
};

BuiltState build_state(const StateSpec& s) {
    require(s.raise >= 0, "raise count must be nonnegative");
    std::optional<BuiltState> out;
    switch (s.kind) {
        case StateKind::bethe: {
            auto solved = solve_eigenstate(s.n_sites, s.lambdas);
            out = BuiltState{std::move(solved.state), std::move(solved.roots)};
            break;
        }
        case StateKind::scattering:
            out = BuiltState{scattering_state(s.n_sites, s.p0, s.p1, s.p2), std::nullopt};
            break;
        case StateKind::cosh_bound:
            out = BuiltState{cosh_bound_state(s.n_sites, s.p0, s.p1), std::nullopt};
            break;
        case StateKind::sinh_bound:
            out = BuiltState{sinh_bound_state(s.n_sites, s.p0, s.p1), std::nullopt};
            break;
        case StateKind::singular:
            out = BuiltState{singular_state(s.n_sites), std::nullopt};
            break;
        case StateKind::goldstone:
            out = BuiltState{goldstone_state(s.n_sites, s.count), std::nullopt};
            break;
    }
    for (int g = 0; g < s.raise; ++g) out->state = apply_total_raising(out->state);
    return std::move(*out);
}

void state_meta(Report& rep, const StateSpec& spec, const BuiltState& b) {
    const auto& s = b.state;
    const auto check = verify_eigenstate(build_hamiltonian(s.sites(), s.magnons(), 1.0), s);
    rep.meta.emplace_back("N", integer(s.sites()));
    rep.meta.emplace_back("magnons", integer(s.magnons()));
    rep.meta.emplace_back("dimension", integer(static_cast<long long>(s.size())));
    if (b.roots) {
        rep.meta.emplace_back("lambdas", text(join(b.roots->lambdas)));
        rep.meta.emplace_back("class", text(to_string(b.roots->root_class)));
    }
    rep.meta.emplace_back("goldstone_added", integer(spec.raise));
    rep.meta.emplace_back("energy", real(check.rayleigh));
    rep.meta.emplace_back("eigen_residual", real(check.residual));
    rep.meta.emplace_back("eigenstate", integer(check.accepted() ? 1 : 0));
}

// ---- figures ------------------------------------------------------------

/// Evaluates rows in parallel; a failing point yields null cells and an error.
/// Off-shell grids pass off_shell = true: there a vanishing state is a property
/// of the parameters, so it is counted in the meta instead of reported as a failure.
template <class F>
void fill_rows(Report& rep, Table& t, std::size_t count, int width, F&& row_at, bool off_shell = false) {
    std::vector<std::vector<Cell>> rows(count);
    std::vector<std::string> failures(count);
    std::vector<char> undefined(count, 0);
    parallel_for(count, [&](std::size_t i) {
        try {
            rows[i] = row_at(i);
        } catch (const Error& e) {
            if (off_shell && e.code() == ErrorCode::degenerate_state)
                undefined[i] = 1;
            else
                failures[i] = e.what();
            rows[i].clear();
        }
    });
    long long n_undefined = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (undefined[i]) {
            ++n_undefined;
            rows[i].assign(static_cast<std::size_t>(width), Cell{});
        } else if (!failures[i].empty()) {
            rep.errors.push_back("row " + std::to_string(t.rows.size()) + ": " + failures[i]);
            rows[i].assign(static_cast<std::size_t>(width), Cell{});
        }
        t.rows.push_back(std::move(rows[i]));
    }
    if (off_shell) rep.meta.emplace_back("undefined_points", integer(n_undefined));
}

Report figure_scattering_line(const FigureSpec& f) {
    const int n = f.n_sites ? f.n_sites : 6;
    const int m = n / 2;
    const double lo = f.lo.value_or(0.0), hi = f.hi.value_or(2 * pi);
    require(f.points >= 2, "need at least two grid points");
    Report rep;
    rep.command = "figure";
    rep.meta = {{"figure", text("fig1")}, {"N", integer(n)}, {"phi", real(0.0)}, {"points", integer(f.points)}};
    std::vector<std::string> cols{"param"};
    push_columns(cols, concurrence_columns(m));
    cols.push_back("eigenstate_marker");
    Table t = make_table("concurrence", cols);
    const auto grid = [&](std::size_t i) { return lo + (hi - lo) * static_cast<double>(i) / (f.points - 1); };
    auto row_for = [&](double k, long long marker) {
        std::vector<Cell> row{real(k)};
        append_profile(row, pair_concurrences(scattering_state(n, k, k, 0.0)), m);
        row.push_back(integer(marker));
        return row;
    };
    fill_rows(
        rep, t, static_cast<std::size_t>(f.points), m + 2, [&](std::size_t i) { return row_for(grid(i), 0); }, true);
    fill_rows(rep, t, static_cast<std::size_t>(n), m + 2,
              [&](std::size_t l2) { return row_for(2 * pi * static_cast<double>(l2) / n, 1); });
    rep.tables.push_back(std::move(t));
    return rep;
}

Report figure_goldstone(const FigureSpec& f) {
    const int n_min = f.n_min ? f.n_min : 2;
    const int n_max = f.n_max ? f.n_max : 20;
    require(n_min >= 2 && n_max >= n_min && n_max <= 24, "Goldstone table needs 2 <= N <= 24");
    Report rep;
    rep.command = "figure";
    rep.meta = {{"figure", text("fig2")}, {"N_min", integer(n_min)}, {"N_max", integer(n_max)}};
    Table t = make_table("goldstone", {"param", "n", "C", "C_numeric", "eigenstate_marker"});
    std::vector<std::pair<int, int>> cells;
    for (int n = n_min; n <= n_max; ++n)
        for (int g = 0; g <= n; ++g) cells.emplace_back(n, g);
    fill_rows(rep, t, cells.size(), 5, [&](std::size_t i) {
        const auto [n, g] = cells[i];
        const double numeric = concurrence(two_spin_rdm(goldstone_state(n, g), 1, 2));
        return std::vector<Cell>{integer(n), integer(g), real(goldstone_concurrence(g, n)),
                                 real(numeric < concurrence_zero_tol ? 0.0 : numeric), integer(1)};
    });
    rep.tables.push_back(std::move(t));
    return rep;
}

Report figure_scattering_plane(const FigureSpec& f) {
    const int n = f.n_sites ? f.n_sites : 8;
    const int m = n / 2;
    const double lo = f.lo.value_or(0.0), hi = f.hi.value_or(2 * pi);
    require(f.points >= 2, "need at least two grid points");
    Report rep;
    rep.command = "figure";
    rep.meta = {{"figure", text("fig3")}, {"N", integer(n)}, {"points", integer(f.points)}};
    std::vector<std::string> cols{"param", "phi"};
    push_columns(cols, concurrence_columns(m));
    cols.push_back("eigenstate_marker");
    Table t = make_table("concurrence", cols);
    const auto p = static_cast<std::size_t>(f.points);
    auto row_for = [&](double k, double phi, long long marker) {
        std::vector<Cell> row{real(k), real(phi)};
        append_profile(row, pair_concurrences(scattering_state(n, 0.0, k, phi)), m);
        row.push_back(integer(marker));
        return row;
    };
    fill_rows(rep, t, p * p, m + 3, [&](std::size_t i) {
        const double k = lo + (hi - lo) * static_cast<double>(i / p) / (f.points - 1);
        const double phi = pi * static_cast<double>(i % p) / (f.points - 1);
        return row_for(k, phi, 0);
    }, true);
    std::vector<BetheRoots> eigen;
    for (auto cls : {RootClass::scattering, RootClass::goldstone_mixed}) {
        auto sw = sweep_two_magnon(n, cls);
        for (auto& r : sw.records) eigen.push_back(r.roots);
        for (auto& e : sw.errors) rep.errors.push_back(e);
    }
    fill_rows(rep, t, eigen.size(), m + 3, [&](std::size_t i) {
        const auto& r = eigen[i];
        return row_for((r.ks[1] - r.ks[0]).real(), r.phis[0].real(), 1);
    });
    rep.tables.push_back(std::move(t));
    return rep;
}

Report figure_bound(const FigureSpec& f, BoundKind kind) {
    const int n = f.n_sites ? f.n_sites : 10;
    const int m = n / 2;
    const double lo = f.lo.value_or(0.01), hi = f.hi.value_or(3.0);
    require(f.points >= 2 && lo > 0 && hi > lo, "need v range 0 < lo < hi and at least two points");
    const bool cosh = kind == BoundKind::cosh;
    Report rep;
    rep.command = "figure";
    rep.meta = {{"figure", text(cosh ? "fig4" : "fig5")}, {"N", integer(n)}, {"points", integer(f.points)}};
    std::vector<std::string> cols{"param"};
    push_columns(cols, concurrence_columns(m));
    cols.push_back("eigenstate_marker");
    Table t = make_table("concurrence", cols);
    const double u = cosh ? 0.0 : pi / n;  // translation-invariant choice; concurrence does not depend on u
    auto state_at = [&](double uu, double v) {
        return cosh ? cosh_bound_state(n, uu, v) : sinh_bound_state(n, uu, v);
    };
    auto row_for = [&](double uu, double v, long long marker) {
        std::vector<Cell> row{real(v)};
        append_profile(row, concurrence_profile(state_at(uu, v)), m);
        row.push_back(integer(marker));
        return row;
    };
    fill_rows(rep, t, static_cast<std::size_t>(f.points), m + 2, [&](std::size_t i) {
        return row_for(u, lo + (hi - lo) * static_cast<double>(i) / (f.points - 1), 0);
    }, true);
    const auto roots = all_bound_roots(n, kind);
    fill_rows(rep, t, roots.size(), m + 2, [&](std::size_t i) { return row_for(roots[i].u, roots[i].v, 1); });
    if (!cosh && n % 2 == 0 && n > 2) {
        std::vector<Cell> row{real(std::numeric_limits<double>::infinity())};
        append_profile(row, concurrence_profile(singular_state(n)), m);
        row.push_back(integer(1));
        t.rows.push_back(std::move(row));
    }
    rep.tables.push_back(std::move(t));
    return rep;
}

Table length_table(const LengthScan& scan, int n_max, bool marker) {
    const int m = n_max / 2;
    std::vector<std::string> cols{"param", "class", "energy"};
    push_columns(cols, concurrence_columns(m));
    push_columns(cols, concurrence_columns(m, "Cm"));
    if (marker) cols.push_back("eigenstate_marker");
    Table t = make_table("length_scan", cols);
    for (const auto& r : scan.rows) {
        std::vector<Cell> row{integer(r.n_sites), text(to_string(r.root_class)), real(r.energy)};
        append_profile(row, r.profile, m);
        const int longest = r.n_sites / 2;
        for (int i = 1; i <= m; ++i) row.push_back(i <= longest ? real(r.from_longest(i)) : Cell{});
        if (marker) row.push_back(integer(1));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Report figure_length(const FigureSpec& f) {
    const std::vector<int> lambdas = f.lambdas.empty() ? std::vector<int>{1, 3, 5} : f.lambdas;
    const int n_min = f.n_min ? f.n_min : 6;
    const int n_max = f.n_max ? f.n_max : 20;
    const auto scan = length_scan(lambdas, n_min, n_max);
    Report rep;
    rep.command = "figure";
    rep.meta = {{"figure", text("fig6")}, {"lambdas", text(join(lambdas))},
                {"N_min", integer(n_min)}, {"N_max", integer(n_max)}};
    rep.tables.push_back(length_table(scan, n_max, true));
    rep.errors = scan.errors;
    return rep;
}

}  // namespace

Report solve_report(int n, const std::vector<int>& lambdas) {
    auto solved = solve_eigenstate(n, lambdas);
    const auto& r = solved.roots;
    Report rep;
    rep.command = "solve";
    rep.meta = {{"N", integer(n)},
                {"lambdas", text(join(r.lambdas))},
                {"class", text(to_string(r.root_class))},
                {"bae_residual", real(bae_residual(r))},
                {"energy", real(solved.rayleigh)},
                {"eigen_residual", real(solved.eigen_residual)},
                {"certified", integer(1)}};
    Table ks = make_table("pseudomomenta", {"a", "lambda", "k_re", "k_im"});
    for (std::size_t a = 0; a < r.size(); ++a)
        ks.rows.push_back({integer(static_cast<long long>(a + 1)), integer(r.lambdas[a]), real(r.ks[a].real()),
                           real(r.ks[a].imag())});
    Table ph = make_table("phases", {"a", "b", "phi_re", "phi_im"});
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = a + 1; b < r.size(); ++b)
            ph.rows.push_back({integer(static_cast<long long>(a + 1)), integer(static_cast<long long>(b + 1)),
                               real(r.phi(a, b).real()), real(r.phi(a, b).imag())});
    rep.tables.push_back(std::move(ks));
    rep.tables.push_back(std::move(ph));
    return rep;
}

Report classify_report(int n, std::optional<RootClass> filter) {
    auto sweep = sweep_two_magnon(n, filter);
    Report rep;
    rep.command = "solve";
    rep.meta = {{"N", integer(n)},
                {"class", text(filter ? to_string(*filter) : "all")},
                {"states", integer(static_cast<long long>(sweep.records.size()))}};
    Table t = make_table("states", {"class", "lambda1", "lambda2", "k1_re", "k1_im", "k2_re", "k2_im", "phi_re",
                                    "phi_im", "v", "bae_residual", "energy", "eigen_residual", "projection"});
    for (const auto& rec : sweep.records) {
        const auto& r = rec.roots;
        t.rows.push_back({text(to_string(rec.root_class)), integer(r.lambdas[0]), integer(r.lambdas[1]),
                          real(r.ks[0].real()), real(r.ks[0].imag()), real(r.ks[1].real()), real(r.ks[1].imag()),
                          real(r.phis[0].real()), real(r.phis[0].imag()), real(rec.v), real(rec.bae_residual),
                          real(rec.energy), real(rec.eigen_residual),
                          rec.projection ? real(*rec.projection) : Cell{}});
    }
    rep.tables.push_back(std::move(t));
    rep.errors = sweep.errors;
    return rep;
}

Report state_report(const StateSpec& spec) {
    const auto built = build_state(spec);
    Report rep;
    rep.command = "state";
    state_meta(rep, spec, built);
    Table t = make_table("amplitudes", {"index", "config", "sites", "re", "im"});
    const auto& s = built.state;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Config c = s.basis().config(i);
        std::vector<int> sites;
        for (int b = 0; b < s.sites(); ++b)
            if ((c >> b) & 1U) sites.push_back(b + 1);
        t.rows.push_back({integer(static_cast<long long>(i)), integer(static_cast<long long>(c)),
                          text(join(sites, " ")), real(s[i].real()), real(s[i].imag())});
    }
    rep.tables.push_back(std::move(t));
    return rep;
}

Report profile_report(const StateSpec& spec) {
    const auto built = build_state(spec);
    Report rep;
    rep.command = "profile";
    state_meta(rep, spec, built);
    ConcurrenceProfile p;
    bool invariant = true;
    try {
        p = concurrence_profile(built.state);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::not_translation_invariant) throw;
        invariant = false;
        p = pair_concurrences(built.state);
    }
    rep.meta.emplace_back("translation_invariant", integer(invariant ? 1 : 0));
    const int m = built.state.sites() / 2;
    Table t = make_table("profile", concurrence_columns(m));
    std::vector<Cell> row;
    append_profile(row, p, m);
    t.rows.push_back(std::move(row));
    rep.tables.push_back(std::move(t));
    return rep;
}

Report figure_report(const FigureSpec& f) {
    if (f.kind == "fig1") return figure_scattering_line(f);
    if (f.kind == "fig2") return figure_goldstone(f);
    if (f.kind == "fig3") return figure_scattering_plane(f);
    if (f.kind == "fig4") return figure_bound(f, BoundKind::cosh);
    if (f.kind == "fig5") return figure_bound(f, BoundKind::sinh);
    if (f.kind == "fig6") return figure_length(f);
    fail(ErrorCode::parameter, "unknown figure '" + f.kind + "' (expected fig1 .. fig6)");
}

Report table1_report() {
    constexpr int n = 6;
    const int rows[][2] = {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}, {1, 1}, {4, 5}, {5, 5}};
    Report rep;
    rep.command = "table1";
    rep.meta = {{"N", integer(n)}};
    std::vector<std::string> cols{"lambda1", "lambda2", "class"};
    push_columns(cols, concurrence_columns(3));
    push_columns(cols, concurrence_columns(3, "G_C"));
    push_columns(cols, {"energy", "eigen_residual"});
    Table t = make_table("table1", cols);
    for (const auto& r : rows) {
        try {
            auto solved = solve_eigenstate(n, {r[0], r[1]});
            std::vector<Cell> row{integer(r[0]), integer(r[1]), text(to_string(solved.roots.root_class))};
            append_profile(row, concurrence_profile(solved.state), 3);
            append_profile(row, concurrence_profile(apply_total_raising(solved.state)), 3);
            row.push_back(real(solved.rayleigh));
            row.push_back(real(solved.eigen_residual));
            t.rows.push_back(std::move(row));
        } catch (const Error& e) {
            rep.errors.push_back("lambda=(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "): " + e.what());
            std::vector<Cell> row{integer(r[0]), integer(r[1]), Cell{}};
            append_null(row, 8);
            t.rows.push_back(std::move(row));
        }
    }
    rep.tables.push_back(std::move(t));
    return rep;
}

Report survey_report(const SurveySpec& s) {
    Report rep;
    rep.command = "survey";
    rep.meta.emplace_back("survey", text(s.kind));
    if (s.kind == "sweep") {
        auto sweep = sweep_two_magnon(s.n_sites, s.filter);
        rep.meta.emplace_back("N", integer(s.n_sites));
        rep.meta.emplace_back("class", text(s.filter ? to_string(*s.filter) : "all"));
        rep.meta.emplace_back("population", integer(static_cast<long long>(sweep.records.size())));
        rep.errors = sweep.errors;
        if (sweep.records.empty()) return rep;
        const auto st = separation_stats(sweep.records);
        Table sep = make_table("separation", {"r", "max", "median_nonzero", "percent_nonzero"});
        for (std::size_t r = 0; r < st.max.size(); ++r)
            sep.rows.push_back({integer(static_cast<long long>(r + 1)), real(st.max[r]),
                                st.median[r] ? real(*st.median[r]) : Cell{}, real(st.percent_nonzero[r])});
        Table hist = make_table("nu_histogram", {"nu", "count", "percent"});
        for (std::size_t nu = 0; nu < st.nu_histogram.size(); ++nu)
            hist.rows.push_back({integer(static_cast<long long>(nu)),
                                 integer(static_cast<long long>(st.nu_histogram[nu])),
                                 real(100.0 * static_cast<double>(st.nu_histogram[nu]) /
                                      static_cast<double>(st.population))});
        rep.tables.push_back(std::move(sep));
        rep.tables.push_back(std::move(hist));
        if (s.records) {
            const int m = s.n_sites / 2;
            std::vector<std::string> cols{"class", "lambda1", "lambda2", "v", "energy", "eigen_residual", "projection"};
            push_columns(cols, concurrence_columns(m));
            Table rec = make_table("records", cols);
            for (const auto& r : sweep.records) {
                std::vector<Cell> row{text(to_string(r.root_class)), integer(r.roots.lambdas[0]),
                                      integer(r.roots.lambdas[1]), real(r.v), real(r.energy),
                                      real(r.eigen_residual), r.projection ? real(*r.projection) : Cell{}};
                append_profile(row, r.profile, m);
                rec.rows.push_back(std::move(row));
            }
            rep.tables.push_back(std::move(rec));
        }
        return rep;
    }
    if (s.kind == "quench") {
        const auto q = quench_survey(s.n_sites, s.magnons);
        rep.meta.emplace_back("N", integer(s.n_sites));
        rep.meta.emplace_back("magnons", integer(s.magnons));
        rep.meta.emplace_back("rows", integer(static_cast<long long>(q.rows.size())));
        rep.meta.emplace_back("violations", integer(static_cast<long long>(q.violations())));
        Table t = make_table("quench", {"state", "transition", "sum_before", "sum_after", "max_after",
                                        "zero_expected", "violation"});
        for (const auto& r : q.rows)
            t.rows.push_back({text(r.state), text(r.transition), real(r.sum_before), real(r.sum_after),
                              real(r.max_after), integer(r.zero_expected ? 1 : 0), integer(r.violation ? 1 : 0)});
        rep.tables.push_back(std::move(t));
        rep.errors = q.errors;
        return rep;
    }
    if (s.kind == "ags") {
        const auto a = ags_survey(s.n_sites);
        rep.meta.emplace_back("N", integer(s.n_sites));
        rep.meta.emplace_back("provenance", text(a.provenance));
        if (!a.note.empty()) rep.meta.emplace_back("note", text(a.note));
        rep.meta.emplace_back("energy", real(a.energy));
        rep.meta.emplace_back("ground_energy", real(a.ground_energy));
        rep.meta.emplace_back("only_nearest_neighbour", integer(a.only_nearest_neighbour ? 1 : 0));
        Table t = make_table("profile", {"r", "C"});
        for (int r = 1; r <= static_cast<int>(a.profile.values.size()); ++r)
            t.rows.push_back({integer(r), real(a.profile.at(r))});
        rep.tables.push_back(std::move(t));
        return rep;
    }
    if (s.kind == "length") {
        require(!s.lambdas.empty(), "length scan needs quantum numbers");
        const int n_min = s.n_min ? s.n_min : 6;
        const int n_max = s.n_max ? s.n_max : 20;
        const auto scan = length_scan(s.lambdas, n_min, n_max);
        rep.meta.emplace_back("lambdas", text(join(s.lambdas)));
        rep.meta.emplace_back("N_min", integer(n_min));
        rep.meta.emplace_back("N_max", integer(n_max));
        rep.tables.push_back(length_table(scan, n_max, false));
        rep.errors = scan.errors;
        return rep;
    }
    fail(ErrorCode::parameter, "unknown survey '" + s.kind + "' (expected sweep, quench, ags or length)");
}

}  // namespace magnon

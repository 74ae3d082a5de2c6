#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "bethe.hpp"
#include "errors.hpp"
#include "hamiltonian.hpp"

namespace magnon {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int max_newton_iterations = 200;

std::string describe(int n, const std::vector<int>& lambdas) {
    std::string s = "N=" + std::to_string(n) + " lambda=(";
    for (std::size_t a = 0; a < lambdas.size(); ++a) s += (a ? "," : "") + std::to_string(lambdas[a]);
    return s + ")";
}

double wrap_angle(double x) { return x - 2 * pi * std::round(x / (2 * pi)); }

// ---- real rapidities -------------------------------------------------------
//
// With k = pi - 2 atan(2x) and phi_ab = pi - 2 atan(x_a - x_b) the Bethe
// equations become N atan(2 x_a) - pi I_a - sum_b atan(x_a - x_b) = 0,
// I_a = (N - 2 lambda_a - n - 1 + 2a) / 2 for a = 1..n.

std::optional<std::vector<double>> solve_rapidities(int n_sites, const std::vector<int>& lambdas) {
    const auto m = static_cast<Eigen::Index>(lambdas.size());
    Eigen::VectorXd targets(m), x(m);
    for (Eigen::Index a = 0; a < m; ++a) {
        const int lam = lambdas[static_cast<std::size_t>(a)];
        targets(a) = 0.5 * (n_sites - 2.0 * lam - m - 1 + 2.0 * (a + 1));
        x(a) = 0.5 / std::tan(pi * lam / n_sites);
    }
    auto eval = [&](const Eigen::VectorXd& y) {
        Eigen::VectorXd f(m);
        for (Eigen::Index a = 0; a < m; ++a) {
            double s = n_sites * std::atan(2 * y(a)) - pi * targets(a);
            for (Eigen::Index b = 0; b < m; ++b)
                if (b != a) s -= std::atan(y(a) - y(b));
            f(a) = s;
        }
        return f;
    };
    Eigen::VectorXd f = eval(x);
    for (int it = 0; it < max_newton_iterations; ++it) {
        if (f.cwiseAbs().maxCoeff() < 1e-13) {
            std::vector<double> out(x.data(), x.data() + m);
            return out;
        }
        Eigen::MatrixXd jac(m, m);
        for (Eigen::Index a = 0; a < m; ++a) {
            double diag = 2.0 * n_sites / (1 + 4 * x(a) * x(a));
            for (Eigen::Index b = 0; b < m; ++b) {
                if (b == a) continue;
                const double d = 1 / (1 + (x(a) - x(b)) * (x(a) - x(b)));
                diag -= d;
                jac(a, b) = d;
            }
            jac(a, a) = diag;
        }
        const Eigen::VectorXd step = jac.partialPivLu().solve(-f);
        double damping = 1;
        for (; damping > 1e-6; damping *= 0.5) {
            const Eigen::VectorXd trial = x + damping * step;
            const Eigen::VectorXd ft = eval(trial);
            if (ft.allFinite() && ft.norm() < f.norm()) {
                x = trial;
                f = ft;
                break;
            }
        }
        if (damping <= 1e-6) break;
    }
    if (f.cwiseAbs().maxCoeff() < 1e-11) return std::vector<double>(x.data(), x.data() + m);
    return std::nullopt;
}

BetheRoots roots_from_rapidities(int n_sites, const std::vector<int>& lambdas, const std::vector<double>& x) {
    BetheRoots r;
    r.n_sites = n_sites;
    r.lambdas = lambdas;
    r.root_class = RootClass::scattering;
    for (double xa : x) r.ks.emplace_back(pi - 2 * std::atan(2 * xa));
    r.phis.assign(x.size() * (x.size() - 1) / 2, 0.0);
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b) r.set_phi(a, b, pi - 2 * std::atan(x[a] - x[b]));
    return r;
}

// ---- complex pseudomomenta ----------------------------------------------

using CVec = Eigen::VectorXcd;

/// R_a = N k_a - 2 pi lambda_a - sum_b phi_ab with principal-branch phases.
/// With wrap the real part is reduced mod 2 pi and lambda drops out.
CVec complex_residual(double n, const CVec& k, const std::vector<int>& lambdas, bool wrap) {
    const auto m = k.size();
    CVec r(m);
    for (Eigen::Index a = 0; a < m; ++a) r(a) = n * k(a) - 2 * pi * lambdas[static_cast<std::size_t>(a)];
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a + 1; b < m; ++b) {
            const Complex p = bethe_phase(k(a), k(b));
            r(a) -= p;
            r(b) += p;
        }
    if (wrap)
        for (Eigen::Index a = 0; a < m; ++a) r(a) = Complex(wrap_angle(r(a).real()), r(a).imag());
    return r;
}

Eigen::MatrixXcd complex_jacobian(double n, const CVec& k) {
    const auto m = k.size();
    const Complex i(0, 1);
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(m, m);
    for (Eigen::Index a = 0; a < m; ++a) j(a, a) = n;
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a + 1; b < m; ++b) {
            const Complex ea = std::exp(i * k(a));
            const Complex eb = std::exp(i * k(b));
            const Complex num = 1.0 + ea * eb - 2.0 * ea;
            const Complex den = 1.0 + ea * eb - 2.0 * eb;
            const Complex dpa = ea * (eb - 2.0) / num - ea * eb / den;  // d phi_ab / d k_a
            const Complex dpb = ea * eb / num - eb * (ea - 2.0) / den;  // d phi_ab / d k_b
            j(a, a) -= dpa;
            j(a, b) -= dpb;
            j(b, a) += dpa;
            j(b, b) += dpb;
        }
    return j;
}

std::optional<CVec> complex_newton(double n, CVec k, const std::vector<int>& lambdas) {
    CVec r = complex_residual(n, k, lambdas, true);
    for (int it = 0; it < max_newton_iterations; ++it) {
        if (!r.allFinite()) return std::nullopt;
        if (r.cwiseAbs().maxCoeff() < 1e-12) return k;
        const CVec step = complex_jacobian(n, k).partialPivLu().solve(-r);
        if (!step.allFinite()) return std::nullopt;
        double damping = 1;
        for (; damping > 1e-6; damping *= 0.5) {
            const CVec trial = k + damping * step;
            const CVec rt = complex_residual(n, trial, lambdas, true);
            if (rt.allFinite() && rt.norm() < r.norm()) {
                k = trial;
                r = rt;
                break;
            }
        }
        if (damping <= 1e-6) return std::nullopt;
    }
    if (r.cwiseAbs().maxCoeff() < 1e-12) return k;
    return std::nullopt;
}

BetheRoots roots_from_momenta(int n_sites, const std::vector<int>& lambdas, const CVec& k, RootClass cls) {
    BetheRoots r;
    r.n_sites = n_sites;
    r.lambdas = lambdas;
    r.root_class = cls;
    for (Eigen::Index a = 0; a < k.size(); ++a) r.ks.push_back(k(a));
    r.phis.assign(r.ks.size() * (r.ks.size() - 1) / 2, 0.0);
    for (std::size_t a = 0; a < r.ks.size(); ++a)
        for (std::size_t b = a + 1; b < r.ks.size(); ++b) r.set_phi(a, b, bethe_phase(r.ks[a], r.ks[b]));
    return r;
}

/// Quantum numbers implied by the principal-branch phases, sorted.
std::vector<int> implied_lambdas(int n_sites, const CVec& k) {
    const auto m = k.size();
    std::vector<int> out;
    for (Eigen::Index a = 0; a < m; ++a) {
        Complex z = static_cast<double>(n_sites) * k(a);
        for (Eigen::Index b = 0; b < m; ++b)
            if (b != a) z -= a < b ? bethe_phase(k(a), k(b)) : -bethe_phase(k(b), k(a));
        const long lam = std::lround(z.real() / (2 * pi));
        out.push_back(static_cast<int>(((lam % n_sites) + n_sites) % n_sites));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Verified {
    StateVector state;
    double rayleigh;
    double residual;
};

/// Accept only Goldstone-free eigenstates with pairwise distinct momenta.
std::optional<Verified> verify_complex(int n_sites, const std::vector<int>& lambdas, const CVec& k, double tol) {
    const Complex i(0, 1);
    for (Eigen::Index a = 0; a < k.size(); ++a) {
        if (std::abs(std::exp(i * k(a)) - 1.0) < 1e-6) return std::nullopt;
        for (Eigen::Index b = a + 1; b < k.size(); ++b)
            if (std::abs(k(a) - k(b)) < 1e-6) return std::nullopt;
    }
    try {
        auto roots = roots_from_momenta(n_sites, lambdas, k, RootClass::wavecomplex);
        StateVector s = n_magnon_state(roots);
        const auto h = build_hamiltonian(n_sites, s.magnons(), 1.0);
        const auto check = verify_eigenstate(h, s);
        if (check.residual >= tol || total_lowering_norm(s) >= tol) return std::nullopt;
        return Verified{std::move(s), check.rayleigh, check.residual};
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<CVec> string_seeds(int n_sites, const std::vector<int>& lambdas) {
    const auto m = static_cast<Eigen::Index>(lambdas.size());
    double total = 0;
    for (int l : lambdas) total += l;
    const double big_k = 2 * pi * total / n_sites;
    const double ln_n = std::log(static_cast<double>(n_sites));
    std::vector<double> vs{ln_n / m};
    for (int j = 0; j < 10; ++j) vs.push_back(0.1 + (2 * ln_n - 0.1) * j / 9);
    std::vector<double> us{big_k / m};
    for (int j = 0; j < 13; ++j) us.push_back(-0.5 * pi + 1.5 * pi * j / 12);
    std::vector<CVec> seeds;
    for (double u : us)
        for (double v : vs) {
            CVec k(m);
            double used = 0;
            for (Eigen::Index a = 0; a < m; ++a) {
                const bool middle = m % 2 == 1 && a == m / 2;
                const double re = middle ? 0.0 : u;
                used += re;
                k(a) = Complex(re, v * static_cast<double>(m - 1 - 2 * a));
            }
            if (m % 2 == 1) k(m / 2) = big_k - used;
            seeds.push_back(k);
        }
    return seeds;
}

struct ComplexSolution {
    CVec k;
    Verified verified;
};

std::optional<ComplexSolution> direct_wavecomplex(int n_sites, const std::vector<int>& lambdas, double tol) {
    std::vector<int> want = lambdas;
    std::sort(want.begin(), want.end());
    for (const auto& seed : string_seeds(n_sites, lambdas)) {
        auto k = complex_newton(n_sites, seed, lambdas);
        if (!k || implied_lambdas(n_sites, *k) != want) continue;
        if (auto v = verify_complex(n_sites, lambdas, *k, tol)) return ComplexSolution{*k, std::move(*v)};
    }
    return std::nullopt;
}

/// Solve at a longer ring where the principal-branch labels match, then
/// follow the root with N as a continuous parameter.
std::optional<ComplexSolution> continued_wavecomplex(int n_sites, const std::vector<int>& lambdas, double tol) {
    for (int anchor = n_sites + 1; anchor <= std::min(n_sites + 12, max_sites); ++anchor) {
        if (binomial(anchor, static_cast<int>(lambdas.size())) > 20000) break;
        auto start = direct_wavecomplex(anchor, lambdas, tol);
        if (!start) continue;
        CVec k = start->k;
        double n = anchor;
        double step = 0.05;
        bool lost = false;
        while (n > n_sites && !lost) {
            const double next = std::max(static_cast<double>(n_sites), n - step);
            if (auto kk = complex_newton(next, k, lambdas)) {
                k = *kk;
                n = next;
                step = std::min(0.05, step * 2);
            } else if ((step *= 0.5) < 1e-4) {
                lost = true;
            }
        }
        if (lost) continue;
        if (auto v = verify_complex(n_sites, lambdas, k, tol)) return ComplexSolution{k, std::move(*v)};
    }
    return std::nullopt;
}

// ---- assembly -----------------------------------------------------------

BetheRoots solve_pair(int n, int l1, int l2) {
    if (l1 < l2) {
        try {
            return solve_two_magnon_scattering(n, l1, l2);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::no_root || l2 - l1 > 1) throw;
        }
    }
    const int total = l1 + l2;
    if (n % 2 == 0 && 2 * total == 3 * n) return singular_roots(n);
    if (total % 2 == 0) return bound_roots(solve_cosh_bae(n, total));
    return bound_roots(solve_sinh_bae(n, total));
}

CertifiedState solve_impl(int n, const std::vector<int>& lambdas, const SolveOptions& opt) {
    require(n >= 2 && n <= max_sites, "N out of range");
    require(!lambdas.empty() && lambdas.size() <= static_cast<std::size_t>(max_bethe_magnons),
            "between 1 and 5 quantum numbers are supported");
    require(static_cast<int>(lambdas.size()) <= n, "more magnons than sites");
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
        require(lambdas[a] >= 0 && lambdas[a] < n, "quantum numbers must lie in 0..N-1");
        require(a == 0 || lambdas[a - 1] <= lambdas[a], "quantum numbers must be ascending");
    }
    std::vector<int> rest;
    for (int l : lambdas)
        if (l != 0) rest.push_back(l);
    const std::size_t zeros = lambdas.size() - rest.size();

    BetheRoots core;
    core.n_sites = n;
    std::optional<StateVector> core_state;
    if (rest.size() == 1) {
        core.lambdas = rest;
        core.ks = {2 * pi * rest[0] / n};
        core.root_class = RootClass::scattering;
    } else if (rest.size() == 2) {
        core = solve_pair(n, rest[0], rest[1]);
    } else if (rest.size() >= 3) {
        const bool distinct = std::adjacent_find(rest.begin(), rest.end()) == rest.end();
        std::optional<std::vector<double>> x;
        if (distinct) x = solve_rapidities(n, rest);
        bool done = false;
        if (x) {
            core = roots_from_rapidities(n, rest, *x);
            StateVector s = n_magnon_state(core);
            const auto check = verify_eigenstate(build_hamiltonian(n, s.magnons(), 1.0), s);
            if (check.residual < opt.eigen_tol && total_lowering_norm(s) < opt.eigen_tol) {
                core_state = std::move(s);
                done = true;
            }
        }
        if (!done) {
            auto sol = direct_wavecomplex(n, rest, opt.eigen_tol);
            if (!sol) sol = continued_wavecomplex(n, rest, opt.eigen_tol);
            if (!sol) {
                if (x) fail(ErrorCode::misclassified_root, "real roots for " + describe(n, lambdas) +
                                                               " do not give a Goldstone-free eigenstate");
                fail(ErrorCode::no_root, "no Bethe roots found for " + describe(n, lambdas));
            }
            core = roots_from_momenta(n, rest, sol->k, RootClass::wavecomplex);
            core_state = std::move(sol->verified.state);
        }
    }

    BetheRoots roots;
    roots.n_sites = n;
    roots.lambdas.assign(zeros, 0);
    roots.ks.assign(zeros, 0.0);
    roots.lambdas.insert(roots.lambdas.end(), core.lambdas.begin(), core.lambdas.end());
    roots.ks.insert(roots.ks.end(), core.ks.begin(), core.ks.end());
    roots.phis.assign(roots.ks.size() * (roots.ks.size() - 1) / 2, 0.0);
    for (std::size_t a = 0; a < core.ks.size(); ++a)
        for (std::size_t b = a + 1; b < core.ks.size(); ++b) roots.set_phi(zeros + a, zeros + b, core.phi(a, b));
    roots.root_class = zeros > 0 ? RootClass::goldstone_mixed : core.root_class;
    if (rest.empty()) roots.root_class = RootClass::goldstone_mixed;

    const double bae = bae_residual(roots);
    if (!(bae < opt.bae_tol))
        fail(ErrorCode::no_root, "Bethe equations not met for " + describe(n, lambdas) +
                                     " (residual " + std::to_string(bae) + ")");

    StateVector state = core_state ? std::move(*core_state) : bethe_state(core.ks.empty() ? roots : core);
    if (core_state || !core.ks.empty())
        for (std::size_t g = 0; g < zeros; ++g) state = apply_total_raising(state);
    const auto check = verify_eigenstate(build_hamiltonian(n, state.magnons(), 1.0), state);
    const double tol = lambdas.size() <= 2 ? opt.eigen_tol_two : opt.eigen_tol;
    if (!(check.residual < tol))
        fail(ErrorCode::misclassified_root, "roots for " + describe(n, lambdas) +
                                                " do not give an eigenstate (residual " +
                                                std::to_string(check.residual) + ")");
    return {std::move(roots), std::move(state), check.rayleigh, check.residual};
}

}  // namespace

BetheRoots solve_n_magnon_bae(int n_sites, const std::vector<int>& lambdas, const SolveOptions& opt) {
    return solve_impl(n_sites, lambdas, opt).roots;
}

CertifiedState solve_eigenstate(int n_sites, const std::vector<int>& lambdas, const SolveOptions& opt) {
    return solve_impl(n_sites, lambdas, opt);
}

}  // namespace magnon

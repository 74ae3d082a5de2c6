#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bethe.hpp"
#include "errors.hpp"
#include "root_finding.hpp"

namespace magnon {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int scattering_grid_points = 4001;
constexpr int bound_grid_points = 4001;

double wrap_angle(double x) { return x - 2 * pi * std::round(x / (2 * pi)); }

std::string label(int n, int a, int b) {
    return "N=" + std::to_string(n) + " lambda=(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_sites(int n_sites) { require(n_sites >= 2 && n_sites <= max_sites, "N out of range"); }

double bound_lhs(BoundKind kind, int n, double v) {
    const double t = std::tanh(0.5 * n * v);
    return kind == BoundKind::cosh ? 1.0 / t : t;
}

double bound_f(BoundKind kind, int n, double c, double v) {
    return bound_lhs(kind, n, v) - std::sinh(v) / (std::cosh(v) - c);
}

double bound_df(BoundKind kind, int n, double c, double v) {
    const double ch = std::cosh(0.5 * n * v);
    const double sh = std::sinh(0.5 * n * v);
    const double lhs = kind == BoundKind::cosh ? -0.5 * n / (sh * sh) : 0.5 * n / (ch * ch);
    const double den = std::cosh(v) - c;
    return lhs - (1 - c * std::cosh(v)) / (den * den);
}

std::vector<double> bound_roots_for(int n, int lambda, BoundKind kind) {
    // two magnons on two sites is the polarized state; the equations degenerate there
    if (n < 3) return {};
    const double c = std::cos(pi * lambda / n);
    const double lo = std::pow(n, -1.5);
    const double hi = std::log(static_cast<double>(n));
    if (!(hi > lo)) return {};
    auto f = [&](double v) { return bound_f(kind, n, c, v); };
    auto df = [&](double v) { return bound_df(kind, n, c, v); };
    std::vector<double> out;
    for (const auto& [a, b] : scan_brackets(f, log_grid(lo, hi, bound_grid_points)))
        if (auto r = refine_root(f, df, a, b)) out.push_back(*r);
    return out;
}

BoundParams solve_bound(int n, int lambda, BoundKind kind) {
    check_sites(n);
    require(lambda >= 1 && lambda <= 2 * n - 1, "bound-state lambda must lie in 1..2N-1");
    const bool even = lambda % 2 == 0;
    require(even == (kind == BoundKind::cosh),
            kind == BoundKind::cosh ? "cosh-type states need even lambda" : "sinh-type states need odd lambda");
    const auto roots = bound_roots_for(n, lambda, kind);
    if (roots.empty())
        fail(ErrorCode::no_root, std::string(kind == BoundKind::cosh ? "cosh" : "sinh") +
                                     " equation has no root for N=" + std::to_string(n) +
                                     " lambda=" + std::to_string(lambda));
    return {n, lambda, pi * lambda / n, roots.front(), kind};
}

}  // namespace

std::string to_string(RootClass c) {
    switch (c) {
        case RootClass::scattering: return "scattering";
        case RootClass::cosh_bound: return "cosh_bound";
        case RootClass::sinh_bound: return "sinh_bound";
        case RootClass::singular: return "singular";
        case RootClass::goldstone_mixed: return "goldstone_mixed";
        case RootClass::wavecomplex: return "wavecomplex";
    }
    return "unknown";
}

std::optional<RootClass> root_class_from_string(const std::string& name) {
    for (auto c : {RootClass::scattering, RootClass::cosh_bound, RootClass::sinh_bound, RootClass::singular,
                   RootClass::goldstone_mixed, RootClass::wavecomplex})
        if (to_string(c) == name) return c;
    if (name == "cosh") return RootClass::cosh_bound;
    if (name == "sinh") return RootClass::sinh_bound;
    if (name == "goldstone") return RootClass::goldstone_mixed;
    return std::nullopt;
}

static std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

Complex BetheRoots::phi(std::size_t a, std::size_t b) const {
    if (a == b) return 0.0;
    if (a < b) return phis.at(pair_index(ks.size(), a, b));
    return -phis.at(pair_index(ks.size(), b, a));
}

void BetheRoots::set_phi(std::size_t a, std::size_t b, Complex value) {
    if (a > b) {
        std::swap(a, b);
        value = -value;
    }
    phis.resize(ks.size() * (ks.size() - 1) / 2);
    phis.at(pair_index(ks.size(), a, b)) = value;
}

Complex phase_factor(Complex ka, Complex kb) {
    const Complex i(0, 1);
    const Complex a = std::exp(i * ka);
    const Complex b = std::exp(i * kb);
    return -(1.0 + a * b - 2.0 * a) / (1.0 + a * b - 2.0 * b);
}

Complex bethe_phase(Complex ka, Complex kb) {
    if (std::abs(ka) < 1e-300 || std::abs(kb) < 1e-300) return 0.0;
    return Complex(0, -1) * std::log(phase_factor(ka, kb));
}

double bae_residual(const BetheRoots& r) {
    const std::size_t n = r.size();
    require(r.lambdas.size() == n && r.phis.size() == n * (n - 1) / 2, "inconsistent root tables");
    // The singular pair sits at infinite imaginary momentum; its condition
    // is cos(pi (lambda_1 + lambda_2) / N) = 0 and it does not scatter.
    std::vector<std::size_t> finite;
    int singular_total = 0;
    int singular_count = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (std::isinf(r.ks[a].imag())) {
            singular_total += r.lambdas[a];
            ++singular_count;
        } else {
            finite.push_back(a);
        }
    }
    double worst = 0;
    if (singular_count > 0) {
        if (singular_count != 2) return std::numeric_limits<double>::infinity();
        worst = std::abs(std::cos(pi * singular_total / r.n_sites));
    }
    const Complex i(0, 1);
    for (auto a : finite) {
        Complex lin = static_cast<double>(r.n_sites) * r.ks[a] - 2 * pi * r.lambdas[a];
        for (auto b : finite) lin -= r.phi(a, b);
        worst = std::max(worst, std::abs(Complex(wrap_angle(lin.real()), lin.imag())));
    }
    for (auto a : finite)
        for (auto b : finite) {
            if (b <= a) continue;
            const Complex ea = std::exp(i * r.ks[a]);
            const Complex eb = std::exp(i * r.ks[b]);
            const Complex num = 1.0 + ea * eb - 2.0 * ea;
            const Complex den = 1.0 + ea * eb - 2.0 * eb;
            const Complex ephi = std::exp(i * r.phi(a, b));
            const double scale = std::abs(num) + std::abs(ephi * den);
            if (scale > 0) worst = std::max(worst, std::abs(ephi * den + num) / scale);
        }
    return worst;
}

BetheRoots solve_two_magnon_scattering(int n, int l1, int l2) {
    check_sites(n);
    require(l1 >= 0 && l2 >= l1 && l2 <= n - 1, "scattering needs 0 <= lambda1 <= lambda2 <= N-1");
    BetheRoots r;
    r.n_sites = n;
    r.lambdas = {l1, l2};
    if (l1 == 0) {
        r.ks = {0.0, 2 * pi * l2 / n};
        r.phis = {0.0};
        r.root_class = RootClass::goldstone_mixed;
        return r;
    }
    if (l1 == l2) fail(ErrorCode::no_root, "no real solution for " + label(n, l1, l2));
    auto f = [&](double ph) {
        const double k1 = (2 * pi * l1 + ph) / n;
        const double k2 = (2 * pi * l2 - ph) / n;
        return 2 / std::tan(0.5 * ph) - 1 / std::tan(0.5 * k1) + 1 / std::tan(0.5 * k2);
    };
    auto df = [&](double ph) {
        const double k1 = (2 * pi * l1 + ph) / n;
        const double k2 = (2 * pi * l2 - ph) / n;
        const double s = std::sin(0.5 * ph), s1 = std::sin(0.5 * k1), s2 = std::sin(0.5 * k2);
        return -1 / (s * s) + 0.5 / (n * s1 * s1) + 0.5 / (n * s2 * s2);
    };
    const auto brackets = scan_brackets(f, linear_grid(1e-9, pi - 1e-9, scattering_grid_points));
    std::optional<double> root;
    for (const auto& [a, b] : brackets)
        if ((root = refine_root(f, df, a, b))) break;
    if (!root) fail(ErrorCode::no_root, "no real solution for " + label(n, l1, l2));
    const double ph = *root;
    r.ks = {(2 * pi * l1 + ph) / n, (2 * pi * l2 - ph) / n};
    r.phis = {ph};
    r.root_class = RootClass::scattering;
    return r;
}

std::vector<BetheRoots> all_scattering_roots(int n) {
    std::vector<BetheRoots> out;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            try {
                out.push_back(solve_two_magnon_scattering(n, a, b));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::no_root) throw;
            }
        }
    return out;
}

BoundParams solve_cosh_bae(int n, int lambda) { return solve_bound(n, lambda, BoundKind::cosh); }
BoundParams solve_sinh_bae(int n, int lambda) { return solve_bound(n, lambda, BoundKind::sinh); }

std::vector<BoundParams> all_bound_roots(int n, BoundKind kind) {
    check_sites(n);
    std::vector<BoundParams> out;
    for (int lambda = kind == BoundKind::cosh ? 2 : 1; lambda <= 2 * n - 1; lambda += 2)
        for (double v : bound_roots_for(n, lambda, kind)) out.push_back({n, lambda, pi * lambda / n, v, kind});
    return out;
}

double bound_bae_residual(const BoundParams& p) {
    return std::abs(bound_f(p.kind, p.n_sites, std::cos(pi * p.lambda / p.n_sites), p.v));
}

BetheRoots bound_roots(const BoundParams& p) {
    BetheRoots r;
    r.n_sites = p.n_sites;
    r.lambdas = {p.lambda / 2, p.lambda - p.lambda / 2};
    r.ks = {Complex(p.u, p.v), Complex(p.u, -p.v)};
    r.phis = {bethe_phase(r.ks[0], r.ks[1])};
    r.root_class = p.kind == BoundKind::cosh ? RootClass::cosh_bound : RootClass::sinh_bound;
    return r;
}

BetheRoots singular_roots(int n) {
    check_sites(n);
    if (n % 2 != 0 || n <= 2) fail(ErrorCode::parameter, "the singular state exists only for even N > 2");
    const int total = 3 * n / 2;
    const double inf = std::numeric_limits<double>::infinity();
    BetheRoots r;
    r.n_sites = n;
    r.lambdas = {total / 2, total - total / 2};
    r.ks = {Complex(pi * total / n, inf), Complex(pi * total / n, -inf)};
    r.phis = {Complex(0, inf)};
    r.root_class = RootClass::singular;
    return r;
}

}  // namespace magnon

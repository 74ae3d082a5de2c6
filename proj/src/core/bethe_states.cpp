#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bethe.hpp"
#include "errors.hpp"
#include "hamiltonian.hpp"

namespace magnon {

namespace {

constexpr double pi = std::numbers::pi;

void check_sites(int n_sites) { require(n_sites >= 2 && n_sites <= max_sites, "N out of range"); }

/// Sites (1-based, ascending) of the up spins in c.
template <std::size_t Max>
int sites_of(Config c, std::array<int, Max>& out) {
    int n = 0;
    for (; c; c &= c - 1) out[static_cast<std::size_t>(n++)] = std::countr_zero(c) + 1;
    return n;
}

/// Two-magnon state whose amplitude depends on the separation r = m2 - m1
/// through g(r), times the plane-wave factor e^{i u (m1 + m2)}.
template <class G>
StateVector pair_state(int n, double u, G&& g, double scale) {
    auto basis = enumerate_sector(n, 2);
    std::vector<Complex> amps(basis->size());
    std::array<int, 2> m{};
    for (std::size_t i = 0; i < basis->size(); ++i) {
        sites_of(basis->config(i), m);
        amps[i] = scale * std::polar(1.0, u * (m[0] + m[1])) * g(m[1] - m[0]);
    }
    return StateVector(std::move(basis), std::move(amps));
}

double log_sinh(double x) { return x + std::log1p(-std::exp(-2 * x)) - std::numbers::ln2; }
double log_cosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2 * x)) - std::numbers::ln2;
}

/// sinh((N-1)v) - (N-1) sinh v without cancellation for small v.
double sinh_excess(int n, double v) {
    const double a = n - 1;
    if (a * v > 0.5) return std::sinh(a * v) - a * std::sinh(v);
    double sum = 0;
    double vj = v * v * v / 6.0;  // v^j / j!
    double aj = a * a * a;        // a^j
    for (int j = 3; j < 60; j += 2) {
        const double term = (aj - a) * vj;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        vj *= v * v / ((j + 1.0) * (j + 2.0));
        aj *= a * a;
    }
    return sum;
}

}  // namespace

StateVector one_magnon_state(int n, int lambda1) {
    check_sites(n);
    require(lambda1 >= 0 && lambda1 < n, "lambda1 must lie in 0..N-1");
    auto basis = enumerate_sector(n, 1);
    std::vector<Complex> amps(basis->size());
    const double k = 2 * pi * lambda1 / n;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const int m = std::countr_zero(basis->config(i)) + 1;
        amps[i] = std::polar(1.0 / std::sqrt(n), k * m);
    }
    return StateVector(std::move(basis), std::move(amps));
}

double scattering_inverse_norm_sq(int n, double k, double phi) {
    k = k - 2 * pi * std::round(k / (2 * pi));
    const double one_minus_cos = 1 - std::cos(k);
    if (one_minus_cos >= 1e-9)
        return n * (n - 1.0) +
               (n * std::cos(k + phi) - (n - 1.0) * std::cos(phi) - std::cos(k * n + phi)) / one_minus_cos;
    // sum_r 2(N-r) cos(kr + phi) expanded in k with moments sum_r (N-r) r^j
    double sum = 0;
    double kj = 1;  // k^j / j!
    for (int j = 0; j <= 8; ++j) {
        double moment = 0;
        for (int r = 1; r < n; ++r) moment += (n - r) * std::pow(static_cast<double>(r), j);
        sum += 2 * moment * kj * std::cos(phi + 0.5 * pi * j);
        kj *= k / (j + 1);
    }
    return n * (n - 1.0) + sum;
}

StateVector scattering_state(int n, double total_k, double k, double phi) {
    check_sites(n);
    require(std::isfinite(total_k) && std::isfinite(k) && std::isfinite(phi), "parameters must be finite");
    const double inv = scattering_inverse_norm_sq(n, k, phi);
    if (!(inv > 1e-12 * n * n)) fail(ErrorCode::degenerate_state, "scattering form vanishes identically");
    const double nu = 1 / std::sqrt(inv);
    return pair_state(
        n, 0.5 * total_k, [&](int r) { return std::cos(0.5 * (k * r + phi)); }, 2 * nu);
}

StateVector cosh_bound_state(int n, double u, double v) {
    check_sites(n);
    require(std::isfinite(u) && std::isfinite(v) && v > 0, "cosh-type state needs finite u and v > 0");
    if (v * n <= 700) {
        const double nu = std::sqrt(4 * std::sinh(v) / (n * (std::sinh((n - 1) * v) + (n - 1) * std::sinh(v))));
        return pair_state(
            n, u, [&](int r) { return std::cosh(v * (0.5 * n - r)); }, nu);
    }
    const double big = log_sinh((n - 1) * v);
    const double log_den = std::log(n) + big + std::log1p((n - 1) * std::exp(log_sinh(v) - big));
    const double log_nu = 0.5 * (std::log(4.0) + log_sinh(v) - log_den);
    return pair_state(
        n, u, [&](int r) { return std::exp(log_nu + log_cosh(v * (0.5 * n - r))); }, 1.0);
}

StateVector sinh_bound_state(int n, double u, double v) {
    check_sites(n);
    require(std::isfinite(u) && std::isfinite(v) && v >= 1e-6, "sinh-type state needs finite u and v >= 1e-6");
    if (v * n <= 700) {
        const double nu = std::sqrt(4 * std::sinh(v) / (n * sinh_excess(n, v)));
        return pair_state(
            n, u, [&](int r) { return std::sinh(v * (0.5 * n - r)); }, nu);
    }
    const double big = log_sinh((n - 1) * v);
    const double log_den = std::log(n) + big + std::log1p(-(n - 1) * std::exp(log_sinh(v) - big));
    const double log_nu = 0.5 * (std::log(4.0) + log_sinh(v) - log_den);
    return pair_state(
        n, u,
        [&](int r) {
            const double x = v * (0.5 * n - r);
            if (x == 0) return 0.0;
            return std::copysign(std::exp(log_nu + log_sinh(std::abs(x))), x);
        },
        1.0);
}

StateVector singular_state(int n) {
    check_sites(n);
    if (n % 2 != 0 || n <= 2) fail(ErrorCode::parameter, "the singular state exists only for even N > 2");
    auto basis = enumerate_sector(n, 2);
    std::vector<Complex> amps(basis->size());
    std::array<int, 2> m{};
    const double a = 1 / std::sqrt(n);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        sites_of(basis->config(i), m);
        if (m[1] - m[0] == 1) amps[i] = m[0] % 2 == 1 ? a : -a;
        else if (m[0] == 1 && m[1] == n) amps[i] = n % 2 == 1 ? a : -a;
    }
    return StateVector(std::move(basis), std::move(amps));
}

StateVector goldstone_state(int n, int count) {
    check_sites(n);
    require(count >= 0 && count <= n, "Goldstone count must lie in 0..N");
    auto basis = enumerate_sector(n, count);
    const double a = 1 / std::sqrt(static_cast<double>(basis->size()));
    std::vector<Complex> amps(basis->size(), a);
    return StateVector(std::move(basis), std::move(amps));
}

StateVector n_magnon_state(const BetheRoots& roots) {
    const int n = roots.n_sites;
    const std::size_t nm = roots.size();
    check_sites(n);
    require(nm >= 1 && nm <= static_cast<std::size_t>(max_bethe_magnons), "n_magnon_state supports 1..5 magnons");
    require(roots.lambdas.size() == nm && roots.phis.size() == nm * (nm - 1) / 2, "inconsistent root tables");
    for (const auto& k : roots.ks)
        require(std::isfinite(k.real()) && std::isfinite(k.imag()), "pseudomomenta must be finite");

    const Complex i(0, 1);
    // plane[a][m] = e^{i k_a m}
    std::vector<std::vector<Complex>> plane(nm, std::vector<Complex>(static_cast<std::size_t>(n) + 1));
    for (std::size_t a = 0; a < nm; ++a)
        for (int m = 1; m <= n; ++m) plane[a][static_cast<std::size_t>(m)] = std::exp(i * roots.ks[a] * double(m));

    std::vector<std::size_t> perm(nm);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    std::vector<Complex> weights;
    do {
        Complex s{};
        for (std::size_t a = 0; a < nm; ++a)
            for (std::size_t b = a + 1; b < nm; ++b) s += roots.phi(perm[a], perm[b]);
        perms.push_back(perm);
        weights.push_back(std::exp(0.5 * i * s));
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto basis = enumerate_sector(n, static_cast<int>(nm));
    std::vector<Complex> amps(basis->size());
    double magnitude = 0;
    std::array<int, max_bethe_magnons> m{};
    for (std::size_t c = 0; c < basis->size(); ++c) {
        sites_of(basis->config(c), m);
        Complex total{};
        double mag = 0;
        for (std::size_t p = 0; p < perms.size(); ++p) {
            Complex term = weights[p];
            for (std::size_t a = 0; a < nm; ++a) term *= plane[perms[p][a]][static_cast<std::size_t>(m[a])];
            total += term;
            mag += std::abs(term);
        }
        amps[c] = total;
        magnitude += mag * mag;
    }
    double norm_sq = 0;
    for (const auto& a : amps) norm_sq += std::norm(a);
    if (!(norm_sq > 1e-20 * magnitude)) fail(ErrorCode::degenerate_state, "Bethe amplitudes vanish identically");
    return StateVector::from_amplitudes(std::move(basis), std::move(amps));
}

namespace {

bool is_zero_momentum(Complex k) { return k == Complex(0.0, 0.0); }

}  // namespace

StateVector bethe_state(const BetheRoots& roots) {
    const int n = roots.n_sites;
    std::vector<std::size_t> rest;
    for (std::size_t a = 0; a < roots.size(); ++a)
        if (!is_zero_momentum(roots.ks[a])) rest.push_back(a);
    const int goldstones = static_cast<int>(roots.size() - rest.size());

    std::optional<StateVector> core;
    if (rest.empty()) return goldstone_state(n, goldstones);
    if (rest.size() == 1) {
        core = one_magnon_state(n, ((roots.lambdas[rest[0]] % n) + n) % n);
    } else if (rest.size() == 2) {
        const Complex k1 = roots.ks[rest[0]];
        const Complex k2 = roots.ks[rest[1]];
        const int total = roots.lambdas[rest[0]] + roots.lambdas[rest[1]];
        if (std::isinf(k1.imag()) || roots.root_class == RootClass::singular) {
            core = singular_state(n);
        } else if (std::abs(k1.imag()) < 1e-12 && std::abs(k2.imag()) < 1e-12) {
            const Complex ph = roots.phi(rest[0], rest[1]);
            core = scattering_state(n, (k1 + k2).real(), (k2 - k1).real(), ph.real());
        } else if (total % 2 == 0) {
            core = cosh_bound_state(n, pi * total / n, std::abs(k1.imag()));
        } else {
            core = sinh_bound_state(n, pi * total / n, std::abs(k1.imag()));
        }
    } else {
        BetheRoots sub;
        sub.n_sites = n;
        sub.root_class = roots.root_class;
        for (auto a : rest) {
            sub.lambdas.push_back(roots.lambdas[a]);
            sub.ks.push_back(roots.ks[a]);
        }
        sub.phis.assign(rest.size() * (rest.size() - 1) / 2, 0.0);
        for (std::size_t a = 0; a < rest.size(); ++a)
            for (std::size_t b = a + 1; b < rest.size(); ++b) sub.set_phi(a, b, roots.phi(rest[a], rest[b]));
        core = n_magnon_state(sub);
    }
    StateVector s = std::move(*core);
    for (int g = 0; g < goldstones; ++g) s = apply_total_raising(s);
    return s;
}

}  // namespace magnon

#include "entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "hamiltonian.hpp"

namespace magnon {

TwoSpinRDM two_spin_rdm(const StateVector& psi, int p, int q) {
    const auto& basis = psi.basis();
    const int n = basis.sites();
    require(p >= 1 && q <= n && p < q, "sites must satisfy 1 <= p < q <= N");
    const Config bp = Config{1} << (p - 1);
    const Config bq = Config{1} << (q - 1);
    TwoSpinRDM r;
    r.p = p;
    r.q = q;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Config c = basis.config(i);
        const double w = std::norm(psi[i]);
        const bool up_p = c & bp;
        const bool up_q = c & bq;
        if (up_p && up_q) {
            r.alpha += w;
        } else if (up_p) {
            r.beta += w;
            r.gamma += psi[i] * std::conj(psi[basis.index(c ^ bp ^ bq)]);
        } else if (up_q) {
            r.delta += w;
        } else {
            r.epsilon += w;
        }
    }
    return r;
}

double concurrence(const TwoSpinRDM& rdm) {
    const double c = 2 * (std::abs(rdm.gamma) - std::sqrt(std::max(0.0, rdm.alpha * rdm.epsilon)));
    return std::clamp(c, 0.0, 1.0);
}

double ConcurrenceProfile::sum() const {
    double s = 0;
    for (double v : values) s += v;
    return s;
}

int ConcurrenceProfile::nonzero_count() const {
    return static_cast<int>(std::count_if(values.begin(), values.end(), [](double v) { return v > 0; }));
}

namespace {

double snapped(double c) { return c < concurrence_zero_tol ? 0.0 : c; }

}  // namespace

ConcurrenceProfile pair_concurrences(const StateVector& psi) {
    const int n = psi.sites();
    require(n >= 2, "profile needs at least two sites");
    ConcurrenceProfile out;
    out.n_sites = n;
    for (int r = 1; r <= n / 2; ++r) out.values.push_back(snapped(concurrence(two_spin_rdm(psi, 1, 1 + r))));
    return out;
}

ConcurrenceProfile concurrence_profile(const StateVector& psi) {
    const int n = psi.sites();
    const auto t = translation_check(psi);
    if (!(t.residual < 1e-10))
        fail(ErrorCode::not_translation_invariant,
             "state is not a translation eigenstate (residual " + std::to_string(t.residual) + ")");
    ConcurrenceProfile out = pair_concurrences(psi);
    if (n >= 3)
        for (int r = 1; r <= n / 2; ++r) {
            const int q = 2 + r > n ? 2 + r - n : 2 + r;
            const double shifted = concurrence(two_spin_rdm(psi, std::min(2, q), std::max(2, q)));
            if (std::abs(snapped(shifted) - out.at(r)) > 1e-10)
                fail(ErrorCode::not_translation_invariant,
                     "pair concurrence depends on position at separation " + std::to_string(r));
        }
    return out;
}

TwoSpinRDM quenched_rdm_closed_form(int n, int lambda2, int p, int q) {
    require(n >= 4 && n <= max_sites, "closed form needs N >= 4");
    require(lambda2 >= 1 && lambda2 <= n - 1, "closed form holds only for lambda2 in 1..N-1");
    require(p >= 1 && q <= n && p < q, "sites must satisfy 1 <= p < q <= N");
    const double angle = std::numbers::pi * lambda2 * (p - q) / n;
    const double c = std::cos(angle);
    const double d = n * (n - 2.0);
    TwoSpinRDM r;
    r.p = p;
    r.q = q;
    r.alpha = 4 * c * c / d;
    r.beta = r.delta = 2 * (n - 2 - 2 * c * c) / d;
    r.gamma = std::polar(2 * (n - 4.0) * c / d, angle);
    r.epsilon = ((n - 2.0) * (n - 4.0) + 4 * c * c) / d;
    return r;
}

double goldstone_concurrence(int n, int n_sites) {
    require(n_sites >= 2 && n >= 0 && n <= n_sites, "need 0 <= n <= N and N >= 2");
    const double big_n = n_sites;
    const double val = n * (big_n - n) - std::sqrt(n * (n - 1.0) * (big_n - n) * (big_n - n - 1));
    return std::max(0.0, 2 * val / (big_n * (big_n - 1)));
}

double singular_concurrence(int n_sites, int r) {
    require(n_sites > 2 && n_sites % 2 == 0, "singular state needs even N > 2");
    require(r >= 1 && r <= n_sites / 2, "separation must lie in 1..N/2");
    if (r != 2) return 0.0;
    return n_sites == 4 ? 1.0 : 2.0 / n_sites;
}

double binary_entropy(double p) {
    double h = 0;
    if (p > 0) h -= p * std::log2(p);
    if (p < 1) h -= (1 - p) * std::log2(1 - p);
    return h;
}

double single_spin_eof(int n_sites) {
    require(n_sites > 2, "needs N > 2");
    return binary_entropy(2.0 / n_sites);
}

double eof_from_concurrence(double c) {
    require(c >= 0 && c <= 1, "concurrence must lie in [0, 1]");
    return binary_entropy(0.5 * (1 + std::sqrt(1 - c * c)));
}

}  // namespace magnon

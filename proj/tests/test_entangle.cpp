#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "bethe.hpp"
#include "entangle.hpp"
#include "errors.hpp"
#include "hamiltonian.hpp"

using namespace magnon;

namespace {

// Brute-force 4x4 reduced density matrix from the full 2^N vector; rows and
// columns ordered (up up, up down, down up, down down) for spins p, q.
Eigen::Matrix4cd brute_rdm(const StateVector& psi, int p, int q) {
    const int n = psi.sites();
    std::vector<Complex> full(std::size_t(1) << n);
    for (std::size_t i = 0; i < psi.size(); ++i) full[psi.basis().config(i)] = psi[i];
    const std::uint64_t bp = 1ULL << (p - 1), bq = 1ULL << (q - 1);
    auto slot = [&](std::uint64_t c) { return ((c & bp) ? 0 : 2) + ((c & bq) ? 0 : 1); };
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (std::uint64_t rest = 0; rest < full.size(); ++rest) {
        if (rest & (bp | bq)) continue;
        const std::uint64_t cs[4] = {rest | bp | bq, rest | bp, rest | bq, rest};
        for (auto a : cs)
            for (auto b : cs) rho(slot(a), slot(b)) += full[a] * std::conj(full[b]);
    }
    return rho;
}

// Wootters: C = max(0, l1 - l2 - l3 - l4), l the square roots of the
// eigenvalues of rho (sy x sy) rho* (sy x sy) in decreasing order.
double wootters(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix2cd sy;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    Eigen::Matrix4cd yy;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) yy(2 * a + c, 2 * b + d) = sy(a, b) * sy(c, d);
    const Eigen::Matrix4cd r = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
    std::vector<double> l;
    for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
    std::sort(l.rbegin(), l.rend());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

StateVector random_state(int n, int up, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> d;
    auto b = enumerate_sector(n, up);
    std::vector<Complex> a(b->size());
    for (auto& x : a) x = Complex(d(gen), d(gen));
    return StateVector::from_amplitudes(b, a);
}

void check_against_brute_force(const StateVector& psi) {
    for (int p = 1; p <= psi.sites(); ++p)
        for (int q = p + 1; q <= psi.sites(); ++q) {
            const auto rdm = two_spin_rdm(psi, p, q);
            const auto rho = brute_rdm(psi, p, q);
            CHECK(std::abs(rho(0, 0) - rdm.alpha) < 1e-13);
            CHECK(std::abs(rho(1, 1) - rdm.beta) < 1e-13);
            CHECK(std::abs(rho(1, 2) - rdm.gamma) < 1e-13);
            CHECK(std::abs(rho(2, 2) - rdm.delta) < 1e-13);
            CHECK(std::abs(rho(3, 3) - rdm.epsilon) < 1e-13);
            // fixed magnetization leaves only the block-form entries
            CHECK(std::abs(rho(0, 1)) + std::abs(rho(0, 2)) + std::abs(rho(0, 3)) + std::abs(rho(1, 3)) +
                      std::abs(rho(2, 3)) <
                  1e-14);
            // square roots of near-zero eigenvalues limit the oracle to about 1e-7
            CHECK(std::abs(concurrence(rdm) - wootters(rho)) < 1e-6);
        }
}

}  // namespace

TEST_CASE("reduced density matrix and concurrence match brute force") {
    for (int n = 2; n <= 8; ++n)
        for (int up = 0; up <= n; ++up) check_against_brute_force(random_state(n, up, 17u * n + up));
    check_against_brute_force(solve_eigenstate(6, {1, 3}).state);
    check_against_brute_force(solve_eigenstate(8, {1, 3, 5, 7}).state);
    check_against_brute_force(cosh_bound_state(7, 0.4, 0.3));
    check_against_brute_force(singular_state(8));
}

TEST_CASE("one magnon is equientangled at 2/N") {
    for (int n = 3; n <= 12; ++n)
        for (int l = 0; l < n; ++l) {
            const auto p = concurrence_profile(one_magnon_state(n, l));
            for (double c : p.values) CHECK(c == doctest::Approx(2.0 / n).epsilon(1e-12));
        }
}

TEST_CASE("Goldstone closed form") {
    for (int n = 2; n <= 12; ++n)
        for (int g = 0; g <= n; ++g) {
            const auto psi = goldstone_state(n, g);
            for (int q = 2; q <= n; ++q)
                CHECK(concurrence(two_spin_rdm(psi, 1, q)) ==
                      doctest::Approx(goldstone_concurrence(g, n)).epsilon(1e-12).scale(1.0));
        }
    CHECK(goldstone_concurrence(2, 6) == doctest::Approx(0.2067347).epsilon(1e-6));
    CHECK(goldstone_concurrence(0, 6) == 0.0);
    CHECK(goldstone_concurrence(1, 10) == doctest::Approx(0.2));
}

TEST_CASE("singular closed form") {
    for (int n = 4; n <= 14; n += 2) {
        const auto p = concurrence_profile(singular_state(n));
        for (int r = 1; r <= n / 2; ++r) CHECK(p.at(r) == doctest::Approx(singular_concurrence(n, r)).scale(1.0));
    }
    CHECK(singular_concurrence(4, 2) == doctest::Approx(1.0));
    CHECK(singular_concurrence(6, 2) == doctest::Approx(1.0 / 3));
    CHECK(singular_concurrence(6, 1) == 0.0);
}

TEST_CASE("one Goldstone plus one magnon: closed-form RDM and zero concurrence") {
    for (int n = 4; n <= 10; ++n)
        for (int l = 1; l < n; ++l) {
            const auto psi = apply_total_raising(one_magnon_state(n, l));
            for (int p = 1; p <= n; ++p)
                for (int q = p + 1; q <= n; ++q) {
                    const auto num = two_spin_rdm(psi, p, q);
                    const auto cf = quenched_rdm_closed_form(n, l, p, q);
                    CHECK(std::abs(num.alpha - cf.alpha) < 1e-12);
                    CHECK(std::abs(num.beta - cf.beta) < 1e-12);
                    CHECK(std::abs(num.delta - cf.delta) < 1e-12);
                    CHECK(std::abs(num.epsilon - cf.epsilon) < 1e-12);
                    CHECK(std::abs(num.gamma - cf.gamma) < 1e-12);
                    CHECK(concurrence(num) < 1e-10);
                }
        }
}

TEST_CASE("profile requires translation invariance") {
    std::vector<Complex> a(6);
    a[0] = 1;
    StateVector local(enumerate_sector(6, 1), a);
    try {
        concurrence_profile(local);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_translation_invariant);
    }
    CHECK(pair_concurrences(local).values.size() == 3);
}

TEST_CASE("profile helpers") {
    const auto p = concurrence_profile(solve_eigenstate(6, {1, 5}).state);
    CHECK(p.nonzero_count() == 1);
    CHECK(p.at(2) == doctest::Approx(0.0987177).epsilon(1e-6));
    CHECK(p.sum() == doctest::Approx(p.at(2)));
}

TEST_CASE("entanglement of formation") {
    CHECK(eof_from_concurrence(0.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    // Bell-like pair: EoF of C = 2/N one-magnon bonds lies below the single-spin entropy
    for (int n = 3; n <= 20; ++n) CHECK(eof_from_concurrence(2.0 / n) < single_spin_eof(n));
    CHECK_THROWS_AS(eof_from_concurrence(1.5), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bethe.hpp"
#include "errors.hpp"
#include "hamiltonian.hpp"

using namespace magnon;

namespace {

constexpr double pi = std::numbers::pi;

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::parameter;
}

// Magnon energies add on top of the ferromagnetic reference, J = 1.
double magnon_energy(int n, const BetheRoots& r) {
    Complex e = 0.25 * n;
    for (auto k : r.ks) e += std::cos(k) - 1.0;
    return e.real();
}

}  // namespace

TEST_CASE("two-magnon scattering roots solve the Bethe equations and match exact diagonalization") {
    for (int n = 4; n <= 10; ++n) {
        const auto spec = diagonalize(build_hamiltonian(n, 2, 1.0));
        const auto roots = all_scattering_roots(n);
        CHECK(!roots.empty());
        for (const auto& r : roots) {
            CAPTURE(n);
            CAPTURE(r.lambdas[0]);
            CAPTURE(r.lambdas[1]);
            CHECK(bae_residual(r) < 1e-10);
            CHECK(r.ks[0].real() <= r.ks[1].real());
            CHECK(r.phis[0].real() >= 0.0);
            CHECK(r.phis[0].real() <= pi);
            const auto psi = bethe_state(r);
            const auto chk = verify_eigenstate(build_hamiltonian(n, 2, 1.0), psi);
            CHECK(chk.residual < 1e-10);
            CHECK(chk.rayleigh == doctest::Approx(magnon_energy(n, r)).epsilon(1e-10));
            CHECK(spec.eigenspace_projection(psi, chk.rayleigh) > 1 - 1e-8);
        }
    }
}

TEST_CASE("scattering normalization equals the direct sum over pair separations") {
    for (int n : {4, 7, 12, 31})
        for (double k : {0.0, 1e-7, 1e-3, 0.4, 2.2, pi, 5.9})
            for (double phi : {0.0, 0.3, 1.9, pi}) {
                double direct = 0;
                for (int r = 1; r < n; ++r) direct += (n - r) * 4 * std::pow(std::cos(0.5 * (k * r + phi)), 2);
                CHECK(scattering_inverse_norm_sq(n, k, phi) == doctest::Approx(direct).epsilon(1e-9).scale(n * n));
            }
    for (double k : {0.0, 1e-8, 0.7})
        CHECK(scattering_state(9, 0.4, k, 0.2).norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(code_of([] { scattering_state(6, 0.0, 0.0, pi); }) == ErrorCode::degenerate_state);
}

TEST_CASE("permutation-sum state reproduces the scattering closed form") {
    for (const auto& r : all_scattering_roots(8)) {
        const auto a = n_magnon_state(r);
        const auto b = bethe_state(r);
        CHECK(a.equal_up_to_phase(b, 1e-10));
    }
}

TEST_CASE("bound-state roots for N = 10") {
    const auto cosh = all_bound_roots(10, BoundKind::cosh);
    const auto sinh = all_bound_roots(10, BoundKind::sinh);
    auto has = [](const std::vector<BoundParams>& rs, double v) {
        for (const auto& r : rs)
            if (std::abs(r.v - v) < 5e-3) return true;
        return false;
    };
    CHECK(has(cosh, 0.258));
    CHECK(has(cosh, 1.174));
    CHECK(has(sinh, 0.521));
    const auto spec = diagonalize(build_hamiltonian(10, 2, 1.0));
    for (const auto* rs : {&cosh, &sinh})
        for (const auto& p : *rs) {
            CHECK(bound_bae_residual(p) < 1e-10);
            CHECK(p.v > std::pow(10.0, -1.5));
            CHECK(p.v < std::log(10.0));
            const auto r = bound_roots(p);
            CHECK(bae_residual(r) < 1e-9);
            const auto psi = bethe_state(r);
            const auto chk = verify_eigenstate(build_hamiltonian(10, 2, 1.0), psi);
            CHECK(chk.residual < 1e-10);
            CHECK(spec.eigenspace_projection(psi, chk.rayleigh) > 1 - 1e-8);
        }
}

TEST_CASE("bound-state quantum-number parity is enforced") {
    CHECK(code_of([] { solve_cosh_bae(10, 3); }) == ErrorCode::parameter);
    CHECK(code_of([] { solve_sinh_bae(10, 2); }) == ErrorCode::parameter);
    CHECK(solve_cosh_bae(6, 2).v == doctest::Approx(0.7328576760).epsilon(1e-8));
}

TEST_CASE("bound-state closed forms are normalized across the v range") {
    for (int n : {4, 9, 16})
        for (double v : {1e-6, 1e-3, 0.05, 0.7, 3.0, 50.0, 400.0}) {
            CHECK(cosh_bound_state(n, 0.3, v).norm() == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(sinh_bound_state(n, 0.3, v).norm() == doctest::Approx(1.0).epsilon(1e-10));
        }
    CHECK(code_of([] { sinh_bound_state(8, 0.0, 1e-8); }) == ErrorCode::parameter);
    CHECK(code_of([] { cosh_bound_state(8, 0.0, 0.0); }) == ErrorCode::parameter);
}

TEST_CASE("singular state") {
    for (int n = 4; n <= 16; n += 2) {
        const auto r = singular_roots(n);
        CHECK(r.root_class == RootClass::singular);
        CHECK(r.lambdas[0] + r.lambdas[1] == 3 * n / 2);
        CHECK(bae_residual(r) < 1e-12);
        const auto psi = singular_state(n);
        CHECK(verify_eigenstate(build_hamiltonian(n, 2, 1.0), psi).residual < 1e-12);
        CHECK(bethe_state(r).equal_up_to_phase(psi, 1e-12));
    }
    CHECK(code_of([] { singular_state(7); }) == ErrorCode::parameter);
    const auto s = solve_eigenstate(6, {4, 5});
    CHECK(s.roots.root_class == RootClass::singular);
}

TEST_CASE("Goldstone pairs") {
    const auto s = solve_eigenstate(6, {0, 3});
    CHECK(s.roots.root_class == RootClass::goldstone_mixed);
    CHECK(std::abs(s.roots.ks[0]) == 0.0);
    CHECK(s.roots.ks[1].real() == doctest::Approx(pi));
    CHECK(std::abs(s.roots.phis[0]) == 0.0);
    CHECK(s.eigen_residual < 1e-12);
    CHECK(s.state.equal_up_to_phase(apply_total_raising(one_magnon_state(6, 3)), 1e-12));
}

TEST_CASE("invalid quantum numbers") {
    CHECK(code_of([] { solve_eigenstate(6, {1, 6}); }) == ErrorCode::parameter);
    CHECK(code_of([] { solve_eigenstate(6, {3, 1}); }) == ErrorCode::parameter);
    CHECK(code_of([] { solve_eigenstate(6, {}); }) == ErrorCode::parameter);
    CHECK(code_of([] { solve_eigenstate(1, {0}); }) == ErrorCode::parameter);
    CHECK(code_of([] { solve_eigenstate(12, {1, 2, 3, 4, 5, 6}); }) == ErrorCode::parameter);
}

TEST_CASE("phase factor satisfies the pole-free two-body condition") {
    for (auto [ka, kb] : {std::pair{Complex(0.4, 0), Complex(2.1, 0)}, std::pair{Complex(1, 0.7), Complex(1, -0.7)}}) {
        const Complex i(0, 1);
        const Complex e = phase_factor(ka, kb);
        const Complex lhs = e * (1.0 + std::exp(i * (ka + kb)) - 2.0 * std::exp(i * kb)) +
                            (1.0 + std::exp(i * (ka + kb)) - 2.0 * std::exp(i * ka));
        CHECK(std::abs(lhs) < 1e-12);
        CHECK(std::abs(std::exp(i * bethe_phase(ka, kb)) - e) < 1e-10);
    }
}

TEST_CASE("three-magnon states") {
    const auto ags = solve_eigenstate(6, {1, 3, 5});
    CHECK(ags.roots.root_class == RootClass::scattering);
    CHECK(ags.rayleigh == doctest::Approx(diagonalize(build_hamiltonian(6, 3, 1.0)).eigenvalue(0)).epsilon(1e-9));
    CHECK(ags.rayleigh == doctest::Approx(magnon_energy(6, ags.roots)).epsilon(1e-9));
    const auto wc = solve_eigenstate(6, {1, 1, 1});
    CHECK(wc.roots.root_class == RootClass::wavecomplex);
    CHECK(wc.eigen_residual < 1e-8);
    CHECK(std::abs(wc.roots.ks[1].real() - pi) < 1e-8);
    CHECK(std::abs(wc.roots.ks[0].imag()) == doctest::Approx(1.08707).epsilon(1e-4));
    const auto g = solve_eigenstate(8, {0, 2, 5});
    CHECK(g.roots.root_class == RootClass::goldstone_mixed);
    CHECK(g.eigen_residual < 1e-10);
}

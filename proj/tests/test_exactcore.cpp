#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <bit>
#include <cmath>

#include "basis.hpp"
#include "errors.hpp"
#include "hamiltonian.hpp"

using namespace magnon;

namespace {

// Full 2^N Hamiltonian from Kronecker products. Factor order puts site N
// leftmost so that basis index bit (m-1) is site m.
Eigen::MatrixXd kron_site(int n, int site, const Eigen::Matrix2d& op) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
    for (int s = n; s >= 1; --s) {
        const Eigen::Matrix2d f = s == site ? op : Eigen::Matrix2d::Identity();
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

Eigen::MatrixXd full_hamiltonian(int n, double j) {
    Eigen::Matrix2d sz, sp, sm;
    sz << -0.5, 0, 0, 0.5;  // index 0 down, 1 up
    sp << 0, 0, 1, 0;
    sm = sp.transpose();
    const auto dim = Eigen::Index(1) << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 1; i <= n; ++i) {
        const int k = i % n + 1;
        h += j * (kron_site(n, i, sz) * kron_site(n, k, sz) +
                  0.5 * (kron_site(n, i, sp) * kron_site(n, k, sm) + kron_site(n, i, sm) * kron_site(n, k, sp)));
    }
    return h;
}

}  // namespace

TEST_CASE("sector basis is the colex-ordered set of fixed-popcount masks") {
    for (int n = 2; n <= 12; ++n)
        for (int up = 0; up <= n; ++up) {
            auto b = enumerate_sector(n, up);
            CHECK(b->size() == static_cast<std::size_t>(binomial(n, up)));
            for (std::size_t i = 0; i < b->size(); ++i) {
                CHECK(std::popcount(b->config(i)) == up);
                CHECK(b->index(b->config(i)) == i);
                if (i) CHECK(b->config(i - 1) < b->config(i));
            }
        }
    CHECK(enumerate_sector(10, 4) == enumerate_sector(10, 4));
    CHECK(enumerate_sector(10, 4).get() == enumerate_sector(10, 4).get());
}

TEST_CASE("translation moves site m to m+1 and N to 1") {
    auto b = enumerate_sector(5, 2);
    CHECK(b->translate(0b00011) == 0b00110);
    CHECK(b->translate(0b10001) == 0b00011);
}

TEST_CASE("basis rejects bad sectors") {
    CHECK_THROWS_AS(enumerate_sector(0, 0), Error);
    CHECK_THROWS_AS(enumerate_sector(63, 1), Error);
    CHECK_THROWS_AS(enumerate_sector(6, 7), Error);
    CHECK_THROWS_AS(enumerate_sector(6, -1), Error);
}

TEST_CASE("sector Hamiltonian equals the Kronecker-product Hamiltonian restricted to the sector") {
    for (int n = 2; n <= 8; ++n)
        for (double j : {1.0, -0.7}) {
            const auto full = full_hamiltonian(n, j);
            const auto dim = Eigen::Index(1) << n;
            for (int up = 0; up <= n; ++up) {
                const auto h = build_hamiltonian(n, up, j);
                const auto dense = h.dense();
                const auto& b = h.basis();
                double worst = 0;
                for (std::size_t r = 0; r < b.size(); ++r)
                    for (std::size_t c = 0; c < b.size(); ++c)
                        worst = std::max(worst, std::abs(dense(Eigen::Index(r), Eigen::Index(c)) -
                                                         full(Eigen::Index(b.config(r)), Eigen::Index(b.config(c)))));
                CHECK(worst < 1e-14);
            }
            // no element of H leaves a sector
            for (Eigen::Index r = 0; r < dim; ++r)
                for (Eigen::Index c = 0; c < dim; ++c)
                    if (std::popcount(std::uint64_t(r)) != std::popcount(std::uint64_t(c))) CHECK(full(r, c) == 0.0);
        }
}

TEST_CASE("H commutes with cyclic translation") {
    for (int n = 2; n <= 12; ++n)
        for (int up = 0; up <= n; ++up) {
            const auto h = build_hamiltonian(n, up, 1.0);
            const auto& b = h.basis();
            const auto d = Eigen::Index(b.size());
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d, d);
            for (std::size_t i = 0; i < b.size(); ++i) t(Eigen::Index(b.index(b.translate(b.config(i)))), Eigen::Index(i)) = 1;
            const Eigen::MatrixXd dense = h.dense();
            CHECK((dense * t - t * dense).cwiseAbs().maxCoeff() < 1e-14);
        }
}

TEST_CASE("apply matches the dense matrix") {
    const auto h = build_hamiltonian(10, 4, 1.3);
    std::vector<Complex> x(h.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = Complex(std::sin(0.3 * i), std::cos(1.7 * i));
    const auto y = h.apply(x);
    const Eigen::MatrixXd d = h.dense();
    for (std::size_t r = 0; r < x.size(); ++r) {
        Complex s{};
        for (std::size_t c = 0; c < x.size(); ++c) s += d(Eigen::Index(r), Eigen::Index(c)) * x[c];
        CHECK(std::abs(s - y[r]) < 1e-12);
    }
}

TEST_CASE("spectrum: ferromagnet, N=4 singlet and known ground energies") {
    for (int n = 2; n <= 10; ++n) {
        const auto s = diagonalize(build_hamiltonian(n, 0, 1.0));
        CHECK(s.eigenvalue(0) == doctest::Approx(n == 2 ? 0.5 : 0.25 * n).epsilon(1e-14));
    }
    CHECK(diagonalize(build_hamiltonian(4, 2, 1.0)).eigenvalue(0) == doctest::Approx(-2.0).epsilon(1e-12));
    // six-site ring ground state, -(2 + sqrt 13)/2
    CHECK(diagonalize(build_hamiltonian(6, 3, 1.0)).eigenvalue(0) ==
          doctest::Approx(-(2 + std::sqrt(13.0)) / 2).epsilon(1e-12));
    const auto s = diagonalize(build_hamiltonian(8, 3, 1.0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto v = s.eigenvector(i);
        CHECK(verify_eigenstate(build_hamiltonian(8, 3, 1.0), v).residual < 1e-10);
        CHECK(s.eigenspace_projection(v, s.eigenvalue(i)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("dense diagonalization refuses oversized sectors") {
    try {
        diagonalize(build_hamiltonian(18, 9, 1.0));
        FAIL("expected a resource error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::resource);
    }
}

TEST_CASE("raising and lowering") {
    // raising the all-down state gives the one-magnon k=0 state
    auto b0 = enumerate_sector(6, 0);
    StateVector vac(b0, {Complex(1)});
    const auto one = apply_total_raising(vac);
    CHECK(one.magnons() == 1);
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(std::abs(one[i] - 1 / std::sqrt(6.0)) < 1e-14);
    CHECK(total_lowering_norm(one) == doctest::Approx(std::sqrt(6.0)));
    // a k != 0 magnon is annihilated by the lowering operator
    std::vector<Complex> a(6);
    for (int m = 0; m < 6; ++m) a[std::size_t(m)] = std::polar(1.0 / std::sqrt(6.0), 2 * M_PI * (m + 1) / 6);
    StateVector k1(enumerate_sector(6, 1), a);
    CHECK(total_lowering_norm(k1) < 1e-14);
    // the fully polarized state cannot be raised
    StateVector full(enumerate_sector(4, 4), {Complex(1)});
    CHECK_THROWS_AS(apply_total_raising(full), Error);
    // raising preserves energy
    const auto raised = apply_total_raising(k1);
    const auto h1 = build_hamiltonian(6, 1, 1.0), h2 = build_hamiltonian(6, 2, 1.0);
    CHECK(verify_eigenstate(h2, raised).rayleigh == doctest::Approx(verify_eigenstate(h1, k1).rayleigh));
    CHECK(verify_eigenstate(h2, raised).residual < 1e-13);
}

TEST_CASE("translation check") {
    std::vector<Complex> a(6);
    for (int m = 0; m < 6; ++m) a[std::size_t(m)] = std::polar(1.0 / std::sqrt(6.0), 2 * M_PI * 2 * (m + 1) / 6);
    StateVector k2(enumerate_sector(6, 1), a);
    const auto t = translation_check(k2);
    CHECK(t.residual < 1e-14);
    CHECK(std::abs(t.eigenvalue - std::polar(1.0, -2 * M_PI * 2 / 6)) < 1e-12);
    std::vector<Complex> loc(6);
    loc[0] = 1;
    CHECK(translation_check(StateVector(enumerate_sector(6, 1), loc)).residual > 0.5);
}

TEST_CASE("state vector helpers") {
    std::vector<Complex> a{Complex(3), Complex(0, 4)};
    auto s = StateVector::from_amplitudes(enumerate_sector(2, 1), a);
    CHECK(s.norm() == doctest::Approx(1.0));
    std::vector<Complex> rotated{s[0] * std::polar(1.0, 0.7), s[1] * std::polar(1.0, 0.7)};
    CHECK(s.equal_up_to_phase(StateVector(enumerate_sector(2, 1), rotated), 1e-12));
    CHECK_THROWS_AS(StateVector::from_amplitudes(enumerate_sector(2, 1), {Complex(0), Complex(0)}), Error);
}

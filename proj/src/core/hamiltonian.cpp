#include "hamiltonian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace magnon {

SectorHamiltonian::SectorHamiltonian(BasisPtr basis, double coupling)
    : basis_(std::move(basis)), coupling_(coupling) {
    const auto& b = *basis_;
    const int n = b.sites();
    diagonal_.assign(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Config c = b.config(i);
        for (int s = 0; s < n; ++s) {
            const int t = (s + 1) % n;
            const bool up_s = (c >> s) & 1U;
            const bool up_t = (c >> t) & 1U;
            diagonal_[i] += (up_s == up_t ? 0.25 : -0.25) * coupling;
            if (up_s != up_t) {
                const Config flipped = c ^ (Config{1} << s) ^ (Config{1} << t);
                const std::size_t j = b.index(flipped);
                if (i < j) links_.push_back({i, j});
            }
        }
    }
}

SectorHamiltonian build_hamiltonian(int n_sites, int n_up, double coupling) {
    require(std::isfinite(coupling), "coupling must be finite");
    return SectorHamiltonian(enumerate_sector(n_sites, n_up), coupling);
}

std::vector<Complex> SectorHamiltonian::apply(std::span<const Complex> x) const {
    require(x.size() == dimension(), "vector length does not match the Hamiltonian");
    std::vector<Complex> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = diagonal_[i] * x[i];
    const double t = off_diagonal();
    for (const auto& l : links_) {
        y[l.row] += t * x[l.col];
        y[l.col] += t * x[l.row];
    }
    return y;
}

Eigen::MatrixXd SectorHamiltonian::dense() const {
    const auto d = static_cast<Eigen::Index>(dimension());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) m(i, i) = diagonal_[static_cast<std::size_t>(i)];
    const double t = off_diagonal();
    for (const auto& l : links_) {
        const auto r = static_cast<Eigen::Index>(l.row);
        const auto c = static_cast<Eigen::Index>(l.col);
        m(r, c) += t;
        m(c, r) += t;
    }
    return m;
}

Spectrum::Spectrum(BasisPtr basis, Eigen::VectorXd values, Eigen::MatrixXd vectors)
    : basis_(std::move(basis)), values_(std::move(values)), vectors_(std::move(vectors)) {}

StateVector Spectrum::eigenvector(std::size_t i) const {
    require(i < size(), "eigenvector index out of range");
    const auto col = vectors_.col(static_cast<Eigen::Index>(i));
    std::vector<Complex> amps(size());
    double sign = 0.0;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const double a = col(static_cast<Eigen::Index>(j));
        if (sign == 0.0 && std::abs(a) > 1e-12) sign = a > 0 ? 1.0 : -1.0;
        amps[j] = a;
    }
    if (sign < 0)
        for (auto& a : amps) a = -a;
    return StateVector(basis_, std::move(amps));
}

double Spectrum::eigenspace_projection(const StateVector& psi, double energy, double degeneracy_tol) const {
    require(psi.basis() == *basis_, "state does not live on the spectrum's sector");
    double sq = 0.0;
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        if (std::abs(values_(k) - energy) > degeneracy_tol) continue;
        Complex ov{};
        for (std::size_t j = 0; j < psi.size(); ++j) ov += vectors_(static_cast<Eigen::Index>(j), k) * psi[j];
        sq += std::norm(ov);
    }
    return std::sqrt(sq);
}

Spectrum diagonalize(const SectorHamiltonian& h) {
    if (h.dimension() > max_dense_dimension)
        fail(ErrorCode::resource, "sector dimension " + std::to_string(h.dimension()) +
                                      " exceeds the dense diagonalization limit");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.dense());
    if (solver.info() != Eigen::Success) fail(ErrorCode::resource, "dense eigensolver did not converge");
    return Spectrum(h.basis_ptr(), solver.eigenvalues(), solver.eigenvectors());
}

EigenCheck verify_eigenstate(const SectorHamiltonian& h, const StateVector& psi) {
    require(psi.basis() == h.basis(), "state and Hamiltonian live on different sectors");
    const auto hx = h.apply(psi.amplitudes());
    Complex e{};
    for (std::size_t i = 0; i < hx.size(); ++i) e += std::conj(psi[i]) * hx[i];
    double sq = 0.0;
    for (std::size_t i = 0; i < hx.size(); ++i) sq += std::norm(hx[i] - e.real() * psi[i]);
    return {e.real(), std::sqrt(sq)};
}

StateVector apply_total_raising(const StateVector& psi) {
    const auto& from = psi.basis();
    require(from.up() < from.sites(), "cannot raise the fully polarized state");
    auto to = enumerate_sector(from.sites(), from.up() + 1);
    std::vector<Complex> out(to->size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        const Config c = from.config(i);
        for (int s = 0; s < from.sites(); ++s)
            if (!((c >> s) & 1U)) out[to->index(c | (Config{1} << s))] += psi[i];
    }
    double sq = 0.0;
    for (const auto& a : out) sq += std::norm(a);
    if (sq < 1e-20) fail(ErrorCode::degenerate_state, "total raising annihilates this state");
    return StateVector::from_amplitudes(std::move(to), std::move(out));
}

double total_lowering_norm(const StateVector& psi) {
    const auto& from = psi.basis();
    if (from.up() == 0) return 0.0;
    auto to = enumerate_sector(from.sites(), from.up() - 1);
    std::vector<Complex> out(to->size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        Config c = from.config(i);
        for (Config rest = c; rest; rest &= rest - 1) out[to->index(c & ~(rest & (~rest + 1)))] += psi[i];
    }
    double sq = 0.0;
    for (const auto& a : out) sq += std::norm(a);
    return std::sqrt(sq);
}

TranslationCheck translation_check(const StateVector& psi) {
    const auto shifted = psi.translated();
    Complex t{};
    for (std::size_t i = 0; i < shifted.size(); ++i) t += std::conj(psi[i]) * shifted[i];
    double sq = 0.0;
    for (std::size_t i = 0; i < shifted.size(); ++i) sq += std::norm(shifted[i] - t * psi[i]);
    return {t, std::sqrt(sq)};
}

}  // namespace magnon

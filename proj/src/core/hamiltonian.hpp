#pragma once

#include <Eigen/Dense>
#include <vector>

#include "basis.hpp"

namespace magnon {

inline constexpr std::size_t max_dense_dimension = 20000;

/// H = J sum_i S_i . S_{i+1} on an N-ring restricted to one S^z sector.
/// The sum runs literally over i = 1..N with S_{N+1} = S_1, so N = 2
/// counts its single bond twice.
///
/// The matrix is real symmetric in the standard basis. It is stored as a
/// diagonal plus the off-diagonal exchange links (value J/2 each).
class SectorHamiltonian {
public:
    struct Link {
        std::size_t row;
        std::size_t col;
    };

    SectorHamiltonian(BasisPtr basis, double coupling);

    const SectorBasis& basis() const noexcept { return *basis_; }
    const BasisPtr& basis_ptr() const noexcept { return basis_; }
    double coupling() const noexcept { return coupling_; }
    std::size_t dimension() const noexcept { return basis_->size(); }

    std::span<const double> diagonal() const noexcept { return diagonal_; }
    std::span<const Link> links() const noexcept { return links_; }  // each unordered pair stored once per bond
    double off_diagonal() const noexcept { return 0.5 * coupling_; }

    std::vector<Complex> apply(std::span<const Complex> x) const;
    Eigen::MatrixXd dense() const;

private:
    BasisPtr basis_;
    double coupling_;
    std::vector<double> diagonal_;
    std::vector<Link> links_;
};

SectorHamiltonian build_hamiltonian(int n_sites, int n_up, double coupling);

/// Full spectrum of one sector, eigenvalues ascending.
class Spectrum {
public:
    Spectrum(BasisPtr basis, Eigen::VectorXd values, Eigen::MatrixXd vectors);

    std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
    double eigenvalue(std::size_t i) const { return values_(static_cast<Eigen::Index>(i)); }
    std::span<const double> eigenvalues() const noexcept { return {values_.data(), size()}; }

    /// Eigenvector i, first nonzero amplitude real-positive.
    StateVector eigenvector(std::size_t i) const;

    /// Norm of the projection of psi onto the eigenspace with eigenvalue
    /// within degeneracy_tol of energy.
    double eigenspace_projection(const StateVector& psi, double energy, double degeneracy_tol = 1e-8) const;

    const SectorBasis& basis() const noexcept { return *basis_; }

private:
    BasisPtr basis_;
    Eigen::VectorXd values_;
    Eigen::MatrixXd vectors_;
};

Spectrum diagonalize(const SectorHamiltonian& h);

struct EigenCheck {
    double rayleigh;
    double residual;
    bool accepted(double tol = 1e-8) const noexcept { return residual < tol; }
};

/// rayleigh = <psi|H|psi>, residual = ||H psi - rayleigh psi||.
EigenCheck verify_eigenstate(const SectorHamiltonian& h, const StateVector& psi);

/// Normalized image under sum_i S_i^+. Throws degenerate_state when the
/// image vanishes.
StateVector apply_total_raising(const StateVector& psi);

/// Norm of sum_i S_i^- psi, without normalization. Zero exactly when psi
/// contains no Goldstone (k = 0) excitation on top of the all-down state.
double total_lowering_norm(const StateVector& psi);

/// ||T psi - t psi|| with t = <psi|T|psi>, T the one-site translation.
struct TranslationCheck {
    Complex eigenvalue;
    double residual;
};
TranslationCheck translation_check(const StateVector& psi);

}  // namespace magnon

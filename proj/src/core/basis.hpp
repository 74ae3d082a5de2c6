#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace magnon {

using Complex = std::complex<double>;
using Config = std::uint64_t;  // bit (m-1) set <=> spin at site m is up

inline constexpr int max_sites = 62;
inline constexpr std::size_t max_sector_dimension = 5'000'000;

double binomial(int n, int k);

/// Fixed-magnetization sector of an N-site ring: every configuration with
/// exactly n_up set bits, sorted by integer value. Sorted bitmasks are the
/// colex order of subsets, so a configuration's index is its combinatorial
/// rank and lookups need no table.
class SectorBasis {
public:
    SectorBasis(int n_sites, int n_up);

    int sites() const noexcept { return n_sites_; }
    int up() const noexcept { return n_up_; }
    std::size_t size() const noexcept { return configs_.size(); }
    std::span<const Config> configs() const noexcept { return configs_; }
    Config config(std::size_t i) const { return configs_[i]; }

    /// Index of a configuration that belongs to this sector.
    std::size_t index(Config c) const;

    /// Configuration shifted one site along the ring (site m -> m+1, N -> 1).
    Config translate(Config c) const noexcept;

    bool operator==(const SectorBasis& o) const noexcept {
        return n_sites_ == o.n_sites_ && n_up_ == o.n_up_;
    }

private:
    int n_sites_;
    int n_up_;
    std::vector<Config> configs_;
    std::vector<std::vector<std::uint64_t>> rank_table_;  // rank_table_[j][pos] = C(pos, j+1)
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

/// Canonical basis for (N, n_up). Instances are cached and shared.
BasisPtr enumerate_sector(int n_sites, int n_up);

/// Unit-normalized amplitudes over a SectorBasis.
class StateVector {
public:
    /// Takes the amplitudes as given; closed-form constructors supply their
    /// own normalization.
    StateVector(BasisPtr basis, std::vector<Complex> amps);

    /// Normalizes numerically. Throws degenerate_state for a null vector.
    static StateVector from_amplitudes(BasisPtr basis, std::vector<Complex> amps);

    const SectorBasis& basis() const noexcept { return *basis_; }
    const BasisPtr& basis_ptr() const noexcept { return basis_; }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[i]; }
    std::size_t size() const noexcept { return amps_.size(); }
    int sites() const noexcept { return basis_->sites(); }
    int magnons() const noexcept { return basis_->up(); }

    double norm() const;
    Complex inner(const StateVector& other) const;  // <this|other>

    /// |<this|other>| = 1 within tol, i.e. equal up to a global phase.
    bool equal_up_to_phase(const StateVector& other, double tol) const;

    /// Translation by one site, not renormalized.
    std::vector<Complex> translated() const;

private:
    BasisPtr basis_;
    std::vector<Complex> amps_;
};

}  // namespace magnon

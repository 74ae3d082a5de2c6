#pragma once

#include <vector>

#include "basis.hpp"

namespace magnon {

inline constexpr double concurrence_zero_tol = 1e-10;

/// Two-spin reduced density matrix of a fixed-magnetization state in the
/// basis |up up>, |up down>, |down up>, |down down> of spins (p, q):
///
///   [ alpha   0      0      0     ]
///   [ 0       beta   gamma  0     ]
///   [ 0       gamma* delta  0     ]
///   [ 0       0      0      epsilon ]
///
/// Up means inverted relative to the all-down reference state.
struct TwoSpinRDM {
    double alpha = 0;
    double beta = 0;
    Complex gamma{};
    double delta = 0;
    double epsilon = 0;
    int p = 0;
    int q = 0;
};

/// Partial trace over every site except p < q (1-based).
TwoSpinRDM two_spin_rdm(const StateVector& psi, int p, int q);

/// 2 max(0, |gamma| - sqrt(alpha epsilon)), clamped to [0, 1].
double concurrence(const TwoSpinRDM& rdm);

struct ConcurrenceProfile {
    int n_sites = 0;
    std::vector<double> values;  // values[r-1] = C_r, r = 1 .. N/2

    double at(int r) const { return values.at(static_cast<std::size_t>(r - 1)); }
    double sum() const;
    int nonzero_count() const;
};

/// C_r between sites 1 and 1+r for a translation-invariant state. The
/// invariance is checked first, then pair (2, 2+r) is compared with
/// (1, 1+r). Throws not_translation_invariant on failure. Values below
/// concurrence_zero_tol are stored as 0.
ConcurrenceProfile concurrence_profile(const StateVector& psi);

/// Same pairs as concurrence_profile without any invariance check, for
/// off-shell states where only these pairs are meaningful.
ConcurrenceProfile pair_concurrences(const StateVector& psi);

/// Closed-form RDM of the state with one Goldstone magnon and one magnon of
/// quantum number lambda2, with c = cos(pi lambda2 (p - q) / N).
TwoSpinRDM quenched_rdm_closed_form(int n_sites, int lambda2, int p, int q);

/// Concurrence between any two spins of the n-Goldstone state on N sites.
double goldstone_concurrence(int n, int n_sites);

/// Concurrence at separation r in the singular state of an even ring.
double singular_concurrence(int n_sites, int r);

/// Entanglement of formation of one spin with the rest of the chain in the
/// one-Goldstone plus one-magnon state: the binary entropy of 2/N.
double single_spin_eof(int n_sites);

/// Binary entropy in bits.
double binary_entropy(double p);

/// Entanglement of formation of a two-qubit state with concurrence C,
/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double c);

}  // namespace magnon

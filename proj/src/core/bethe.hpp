#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basis.hpp"

namespace magnon {

enum class RootClass {
    scattering,
    cosh_bound,
    sinh_bound,
    singular,
    goldstone_mixed,  // at least one k = 0 magnon (including pure Goldstone states)
    wavecomplex,      // three or more mutually bound magnons
};

std::string to_string(RootClass c);
std::optional<RootClass> root_class_from_string(const std::string& name);

/// Pseudomomenta, Bethe phases and quantum numbers of one eigenstate.
/// phis holds phi_ab for a < b in row-major order; phi_ba = -phi_ab.
struct BetheRoots {
    int n_sites = 0;
    std::vector<int> lambdas;
    std::vector<Complex> ks;
    std::vector<Complex> phis;
    RootClass root_class = RootClass::scattering;

    std::size_t size() const noexcept { return ks.size(); }
    Complex phi(std::size_t a, std::size_t b) const;
    void set_phi(std::size_t a, std::size_t b, Complex value);
};

enum class BoundKind { cosh, sinh };

/// Two-magnon bound pair k = u +- iv. lambda is the total quantum number
/// lambda_1 + lambda_2 and u = pi lambda / N.
struct BoundParams {
    int n_sites = 0;
    int lambda = 0;
    double u = 0;
    double v = 0;
    BoundKind kind = BoundKind::cosh;
};

/// e^{i phi_ab} from the two-body condition, written without poles:
/// e^{i phi}(1 + e^{i(ka+kb)} - 2e^{ikb}) + (1 + e^{i(ka+kb)} - 2e^{ika}) = 0.
Complex phase_factor(Complex ka, Complex kb);

/// phi_ab on the principal branch; zero when either momentum vanishes.
Complex bethe_phase(Complex ka, Complex kb);

/// Largest violation of the Bethe equations. The linear equations are
/// compared mod 2 pi; the phase equations use the pole-free form above.
double bae_residual(const BetheRoots& roots);

// ---- two magnons -------------------------------------------------------

/// Real solution with k1 <= k2 and phi in [0, pi]. Throws no_root when the
/// pair has no real solution.
BetheRoots solve_two_magnon_scattering(int n_sites, int lambda1, int lambda2);

/// Every (lambda1, lambda2) with 1 <= lambda1 < lambda2 <= N-1 that has a
/// real solution, in lexicographic order.
std::vector<BetheRoots> all_scattering_roots(int n_sites);

/// coth(Nv/2) = sinh v / (cosh v - cos(pi lambda / N)); lambda even.
BoundParams solve_cosh_bae(int n_sites, int lambda);
/// tanh(Nv/2) = sinh v / (cosh v - cos(pi lambda / N)); lambda odd.
BoundParams solve_sinh_bae(int n_sites, int lambda);

/// All roots of one kind for lambda = 1 .. 2N-1, ascending lambda.
std::vector<BoundParams> all_bound_roots(int n_sites, BoundKind kind);

/// Residual of the scalar bound-state equation at params.
double bound_bae_residual(const BoundParams& params);

/// Roots for the bound pair, phi from the two-body condition.
BetheRoots bound_roots(const BoundParams& params);

/// The v -> infinity state of even N, lambda = 3N/2.
BetheRoots singular_roots(int n_sites);

// ---- state constructors ------------------------------------------------

StateVector one_magnon_state(int n_sites, int lambda1);

/// 2 nu e^{iK(m1+m2)/2} cos((k(m2-m1) + phi)/2), valid off-shell.
StateVector scattering_state(int n_sites, double total_k, double relative_k, double phi);

/// 1 / nu^2 for the scattering form; exact series near k = 0 mod 2 pi.
double scattering_inverse_norm_sq(int n_sites, double relative_k, double phi);

StateVector cosh_bound_state(int n_sites, double u, double v);
StateVector sinh_bound_state(int n_sites, double u, double v);
StateVector singular_state(int n_sites);
StateVector goldstone_state(int n_sites, int n);

/// Sum over permutations of exp(i sum_a k_P(a) m_a + (i/2) sum_{a<b} phi_P(a)P(b)),
/// normalized numerically.
StateVector n_magnon_state(const BetheRoots& roots);

/// State for solved roots: closed forms for the two-magnon families and
/// the singular state, the permutation sum otherwise.
StateVector bethe_state(const BetheRoots& roots);

// ---- general solver ----------------------------------------------------

inline constexpr int max_bethe_magnons = 5;

struct SolveOptions {
    double bae_tol = 1e-9;
    double eigen_tol = 1e-6;  // ED residual for three or more magnons
    double eigen_tol_two = 1e-8;
};

/// Solve for lambdas (ascending, each in 0..N-1). Zero quantum numbers are
/// Goldstone magnons: the rest is solved first and the state raised.
/// Solutions are certified against the Hamiltonian; a converged root
/// whose state is not an eigenstate throws misclassified_root.
BetheRoots solve_n_magnon_bae(int n_sites, const std::vector<int>& lambdas, const SolveOptions& opt = {});

struct CertifiedState {
    BetheRoots roots;
    StateVector state;
    double rayleigh;
    double eigen_residual;
};

/// solve_n_magnon_bae plus the certified eigenstate.
CertifiedState solve_eigenstate(int n_sites, const std::vector<int>& lambdas, const SolveOptions& opt = {});

}  // namespace magnon

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bethe.hpp"
#include "entangle.hpp"

namespace magnon {

/// ED subspace projection is used for certification up to this length;
/// longer rings are certified by the eigenstate residual alone.
inline constexpr int projection_certify_max_sites = 12;

struct PopulationRecord {
    RootClass root_class = RootClass::scattering;
    BetheRoots roots;
    double v = 0;  // binding parameter for bound classes, 0 otherwise
    ConcurrenceProfile profile;
    double energy = 0;
    double eigen_residual = 0;
    double bae_residual = 0;
    std::optional<double> projection;  // present when certified by ED projection
};

struct SweepResult {
    int n_sites = 0;
    std::vector<PopulationRecord> records;  // canonical order: class, then quantum numbers
    std::vector<std::string> errors;
};

/// Every two-magnon eigenstate of the ring, optionally restricted to one
/// class. Unfiltered sweeps must produce binomial(N, 2) records.
SweepResult sweep_two_magnon(int n_sites, std::optional<RootClass> filter = std::nullopt);

struct SeparationStats {
    int n_sites = 0;
    std::size_t population = 0;
    std::vector<double> max;                    // per separation r = 1 .. N/2
    std::vector<std::optional<double>> median;  // over states with C_r > 0
    std::vector<double> percent_nonzero;
    std::vector<std::size_t> nu_histogram;  // nu_histogram[nu] = states with nu nonzero C_r
};

SeparationStats separation_stats(const std::vector<PopulationRecord>& records);

struct QuenchRow {
    std::string state;       // label of the state before Goldstone addition
    std::string transition;  // e.g. "1G+2 -> 2G+2"
    double sum_before = 0;
    double sum_after = 0;
    double max_after = 0;
    bool zero_expected = false;  // Goldstone count >= non-Goldstone count after the addition
    bool violation = false;
};

struct QuenchReport {
    int n_sites = 0;
    int magnons = 0;
    std::vector<QuenchRow> rows;
    std::vector<std::string> errors;
    std::size_t violations() const;
};

/// Adds a Goldstone magnon to every state that lands in the sector with
/// n_magnons inverted spins and records the change of total concurrence.
QuenchReport quench_survey(int n_sites, int n_magnons);

struct AgsReport {
    int n_sites = 0;
    ConcurrenceProfile profile;
    double energy = 0;
    double ground_energy = 0;  // lowest eigenvalue of the N/2 sector
    std::string provenance;    // "bethe" or "exact_diagonalization"
    std::string note;
    bool only_nearest_neighbour = false;
};

/// Antiferromagnetic ground state, lambda = (1, 3, ..., N-1).
AgsReport ags_survey(int n_sites);

struct LengthScanRow {
    int n_sites = 0;
    RootClass root_class = RootClass::scattering;
    double energy = 0;
    double eigen_residual = 0;
    ConcurrenceProfile profile;

    /// C_{-i} = C_{N/2 + 1 - i}; C_{-1} is the longest range.
    double from_longest(int i) const;
};

struct LengthScan {
    std::vector<int> lambdas;
    std::vector<LengthScanRow> rows;
    std::vector<std::string> errors;
};

LengthScan length_scan(const std::vector<int>& lambdas, int n_min, int n_max);

}  // namespace magnon

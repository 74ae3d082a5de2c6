#include "basis.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "errors.hpp"

namespace magnon {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

SectorBasis::SectorBasis(int n_sites, int n_up) : n_sites_(n_sites), n_up_(n_up) {
    require(n_sites >= 2 && n_sites <= max_sites,
            "ring length must be in [2, " + std::to_string(max_sites) + "], got " + std::to_string(n_sites));
    require(n_up >= 0 && n_up <= n_sites,
            "number of up spins must be in [0, N], got " + std::to_string(n_up));
    const double dim = binomial(n_sites, n_up);
    if (dim > static_cast<double>(max_sector_dimension))
        fail(ErrorCode::resource, "sector dimension " + std::to_string(static_cast<long long>(dim)) +
                                      " exceeds the enumeration limit");

    configs_.reserve(static_cast<std::size_t>(dim));
    if (n_up == 0) {
        configs_.push_back(0);
    } else {
        const Config limit = Config{1} << n_sites;
        Config c = (Config{1} << n_up) - 1;
        while (c < limit) {
            configs_.push_back(c);
            // Gosper's hack: next integer with the same popcount
            const Config lowest = c & (~c + 1);
            const Config ripple = c + lowest;
            c = (((ripple ^ c) >> 2) / lowest) | ripple;
        }
    }

    rank_table_.assign(static_cast<std::size_t>(n_up), std::vector<std::uint64_t>(static_cast<std::size_t>(n_sites)));
    for (int j = 0; j < n_up; ++j)
        for (int pos = 0; pos < n_sites; ++pos)
            rank_table_[j][pos] = static_cast<std::uint64_t>(binomial(pos, j + 1));
}

std::size_t SectorBasis::index(Config c) const {
    std::uint64_t rank = 0;
    int j = 0;
    while (c) {
        const int pos = std::countr_zero(c);
        rank += rank_table_[j][pos];
        c &= c - 1;
        ++j;
    }
    return static_cast<std::size_t>(rank);
}

Config SectorBasis::translate(Config c) const noexcept {
    const Config mask = (Config{1} << n_sites_) - 1;
    return ((c << 1) | (c >> (n_sites_ - 1))) & mask;
}

BasisPtr enumerate_sector(int n_sites, int n_up) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::weak_ptr<const SectorBasis>> cache;

    std::lock_guard lock(mutex);
    auto& slot = cache[{n_sites, n_up}];
    if (auto hit = slot.lock()) return hit;
    auto made = std::make_shared<const SectorBasis>(n_sites, n_up);
    slot = made;
    return made;
}

StateVector::StateVector(BasisPtr basis, std::vector<Complex> amps)
    : basis_(std::move(basis)), amps_(std::move(amps)) {
    require(basis_ != nullptr, "state vector needs a basis");
    require(amps_.size() == basis_->size(), "amplitude count does not match the basis size");
}

StateVector StateVector::from_amplitudes(BasisPtr basis, std::vector<Complex> amps) {
    double sq = 0.0;
    for (const auto& a : amps) sq += std::norm(a);
    if (!(sq > 1e-200) || !std::isfinite(sq)) fail(ErrorCode::degenerate_state, "state vector is numerically zero");
    const double scale = 1.0 / std::sqrt(sq);
    for (auto& a : amps) a *= scale;
    return StateVector(std::move(basis), std::move(amps));
}

double StateVector::norm() const {
    double sq = 0.0;
    for (const auto& a : amps_) sq += std::norm(a);
    return std::sqrt(sq);
}

Complex StateVector::inner(const StateVector& other) const {
    require(basis() == other.basis(), "inner product between different sectors");
    Complex s{};
    for (std::size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

bool StateVector::equal_up_to_phase(const StateVector& other, double tol) const {
    if (!(basis() == other.basis())) return false;
    const Complex ov = inner(other);
    if (std::abs(ov) < 0.5) return false;
    const Complex phase = ov / std::abs(ov);
    double worst = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        worst = std::max(worst, std::abs(amps_[i] * phase - other.amps_[i]));
    return worst <= tol;
}

std::vector<Complex> StateVector::translated() const {
    std::vector<Complex> out(amps_.size());
    const auto& b = *basis_;
    for (std::size_t i = 0; i < amps_.size(); ++i) out[b.index(b.translate(b.config(i)))] = amps_[i];
    return out;
}

}  // namespace magnon

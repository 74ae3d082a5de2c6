#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace magnon {

struct RootTolerances {
    double bracket_width = 1e-6;  // bisection stops here
    double newton_step = 1e-12;   // Newton stops once |dx| falls below this
    int max_newton = 60;
};

/// Sign changes of f over consecutive grid points. A change where |f|
/// grows on both sides is a pole, not a root, and is skipped.
template <class F>
std::vector<std::pair<double, double>> scan_brackets(F&& f, const std::vector<double>& grid) {
    std::vector<std::pair<double, double>> out;
    if (grid.size() < 2) return out;
    double x0 = grid[0];
    double f0 = f(x0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double x1 = grid[i];
        const double f1 = f(x1);
        if (std::isfinite(f0) && std::isfinite(f1) && (f0 < 0) != (f1 < 0) && f0 != 0) {
            const double fm = f(0.5 * (x0 + x1));
            const bool pole = std::abs(fm) > std::abs(f0) && std::abs(fm) > std::abs(f1);
            if (!pole) out.emplace_back(x0, x1);
        }
        x0 = x1;
        f0 = f1;
    }
    return out;
}

/// Bisection on [lo, hi] down to the bracket width, then Newton from the
/// midpoint. Newton steps that leave the bracket fall back to bisection.
template <class F, class DF>
std::optional<double> refine_root(F&& f, DF&& df, double lo, double hi, const RootTolerances& tol = {}) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) return std::nullopt;
    while (hi - lo > tol.bracket_width) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < tol.max_newton; ++it) {
        const double fx = f(x);
        if (fx == 0) return x;
        if ((fx < 0) == (flo < 0)) {
            lo = x;
        } else {
            hi = x;
        }
        const double d = df(x);
        double next = (d != 0 && std::isfinite(d)) ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - x);
        x = next;
        if (step < tol.newton_step) break;
    }
    return x;
}

inline std::vector<double> linear_grid(double a, double b, int points) {
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = a + (b - a) * i / (points - 1);
    return g;
}

inline std::vector<double> log_grid(double a, double b, int points) {
    std::vector<double> g = linear_grid(std::log(a), std::log(b), points);
    for (auto& x : g) x = std::exp(x);
    return g;
}

}  // namespace magnon

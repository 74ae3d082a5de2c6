#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bethe.hpp"

namespace magnon {

/// Tabular command output. Cells are null, real, integer or text.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, Cell>> meta;
    std::vector<Table> tables;
    std::vector<std::string> errors;  // per-item failures; empty when everything certified
};

enum class StateKind { bethe, scattering, cosh_bound, sinh_bound, singular, goldstone };

struct StateSpec {
    int n_sites = 0;
    StateKind kind = StateKind::bethe;
    std::vector<int> lambdas;  // bethe
    double p0 = 0, p1 = 0, p2 = 0;  // (K, k, phi) or (u, v)
    int count = 0;                  // goldstone
    int raise = 0;                  // Goldstone magnons added afterwards
};

struct FigureSpec {
    std::string kind;  // fig1 .. fig6
    int n_sites = 0;   // 0 selects the figure's default
    int points = 401;
    std::optional<double> lo, hi;  // first axis range
    std::vector<int> lambdas;      // fig6
    int n_min = 0, n_max = 0;      // fig2, fig6
};

struct SurveySpec {
    std::string kind;  // sweep, quench, ags, length
    int n_sites = 0;
    std::optional<RootClass> filter;
    bool records = false;
    int magnons = 3;
    std::vector<int> lambdas;
    int n_min = 0, n_max = 0;
};

Report solve_report(int n_sites, const std::vector<int>& lambdas);
Report classify_report(int n_sites, std::optional<RootClass> filter);
Report state_report(const StateSpec& spec);
Report profile_report(const StateSpec& spec);
Report figure_report(const FigureSpec& spec);
Report table1_report();
Report survey_report(const SurveySpec& spec);

}  // namespace magnon

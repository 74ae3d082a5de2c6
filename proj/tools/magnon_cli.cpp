#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magnon.h"
#include "output.hpp"

namespace {

enum Exit { exit_ok = 0, exit_failure = 1, exit_partial = 2 };

struct Common {
    std::string format = "csv";
    std::string out;
};

struct StateOptions {
    int n = 0;
    std::vector<int> lambdas;
    std::vector<double> scattering, cosh, sinh;
    bool singular = false;
    std::optional<int> goldstone;
    int raise = 0;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", c.out, "Write to this file instead of stdout");
}

void add_state_options(CLI::App* cmd, StateOptions& s) {
    cmd->add_option("--n", s.n, "Number of sites")->required();
    auto* l = cmd->add_option("--lambdas", s.lambdas, "Bethe quantum numbers, e.g. 1,3")->delimiter(',');
    auto* sc = cmd->add_option("--scattering", s.scattering, "Off-shell scattering state K,k,phi")
                   ->delimiter(',')->expected(3);
    auto* ch = cmd->add_option("--cosh", s.cosh, "Cosh-type bound state u,v")->delimiter(',')->expected(2);
    auto* sh = cmd->add_option("--sinh", s.sinh, "Sinh-type bound state u,v")->delimiter(',')->expected(2);
    auto* sg = cmd->add_flag("--singular", s.singular, "Singular bound state");
    auto* gs = cmd->add_option("--goldstone", s.goldstone, "Goldstone state with this many up spins");
    cmd->add_option("--raise", s.raise, "Goldstone magnons added by the raising operator")->check(CLI::NonNegativeNumber);
    for (auto* a : {l, sc, ch, sh, sg, gs})
        for (auto* b : {l, sc, ch, sh, sg, gs})
            if (a != b) a->excludes(b);
}

mg_state_spec to_spec(const StateOptions& s) {
    mg_state_spec spec{};
    spec.n_sites = s.n;
    spec.raise = s.raise;
    if (!s.scattering.empty()) {
        spec.kind = MG_STATE_SCATTERING;
        spec.p0 = s.scattering[0];
        spec.p1 = s.scattering[1];
        spec.p2 = s.scattering[2];
    } else if (!s.cosh.empty() || !s.sinh.empty()) {
        const auto& p = s.cosh.empty() ? s.sinh : s.cosh;
        spec.kind = s.cosh.empty() ? MG_STATE_SINH_BOUND : MG_STATE_COSH_BOUND;
        spec.p0 = p[0];
        spec.p1 = p[1];
    } else if (s.singular) {
        spec.kind = MG_STATE_SINGULAR;
    } else if (s.goldstone) {
        spec.kind = MG_STATE_GOLDSTONE;
        spec.count = *s.goldstone;
    } else {
        spec.kind = MG_STATE_BETHE;
        spec.lambdas = s.lambdas.data();
        spec.lambda_count = static_cast<int>(s.lambdas.size());
    }
    return spec;
}

bool has_state(const StateOptions& s) {
    return !s.lambdas.empty() || !s.scattering.empty() || !s.cosh.empty() || !s.sinh.empty() || s.singular ||
           s.goldstone.has_value();
}

int emit(const Common& c, const std::function<mg_status(mg_report**)>& build) {
    mg_report* report = nullptr;
    const mg_status st = build(&report);
    if (st != MG_OK) {
        std::fprintf(stderr, "error: %s: %s\n", mg_status_string(st), mg_last_error());
        return exit_failure;
    }
    const std::string text = c.format == "json" ? magnon_cli::to_json(report) : magnon_cli::to_csv(report);
    const size_t errors = mg_report_error_count(report);
    for (size_t i = 0; i < errors; ++i) std::fprintf(stderr, "error: %s\n", mg_report_error(report, i));
    mg_report_free(report);
    if (c.out.empty()) {
        std::cout << text << std::flush;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        f << text;
        if (!f) {
            std::fprintf(stderr, "error: cannot write %s\n", c.out.c_str());
            return exit_failure;
        }
    }
    return errors ? exit_partial : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bethe-ansatz eigenstates and pairwise entanglement on the Heisenberg ring"};
    app.require_subcommand(1);
    Common common;

    auto* solve = app.add_subcommand("solve", "Solve the Bethe equations for quantum numbers or list a sector");
    int solve_n = 0;
    std::vector<int> solve_lambdas;
    std::string solve_class;
    bool solve_all = false;
    solve->add_option("--n", solve_n, "Number of sites")->required();
    solve->add_option("--lambdas", solve_lambdas, "Bethe quantum numbers, e.g. 1,3")->delimiter(',');
    solve->add_option("--class", solve_class, "Restrict the two-magnon listing to one root class")
        ->check(CLI::IsMember({"all", "scattering", "cosh", "sinh", "cosh_bound", "sinh_bound", "singular",
                               "goldstone", "goldstone_mixed"}));
    solve->add_flag("--all", solve_all, "List every two-magnon eigenstate");
    add_common(solve, common);

    auto* state = app.add_subcommand("state", "Print the amplitudes of a state");
    StateOptions state_opts;
    add_state_options(state, state_opts);
    add_common(state, common);

    auto* profile = app.add_subcommand("profile", "Concurrence C1 .. C_{N/2} of a state");
    StateOptions profile_opts;
    add_state_options(profile, profile_opts);
    add_common(profile, common);

    auto* figure = app.add_subcommand("figure", "Concurrence grids for fig1 .. fig6");
    std::string fig_kind;
    int fig_n = 0, fig_points = 401, fig_nmin = 0, fig_nmax = 0;
    std::vector<double> fig_range;
    std::vector<int> fig_lambdas;
    figure->add_option("kind", fig_kind, "fig1 .. fig6")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}));
    figure->add_option("--n", fig_n, "Number of sites");
    figure->add_option("--points", fig_points, "Grid points per axis")->check(CLI::Range(2, 100000));
    figure->add_option("--range", fig_range, "First-axis range lo,hi")->delimiter(',')->expected(2);
    figure->add_option("--lambdas", fig_lambdas, "Quantum numbers for fig6")->delimiter(',');
    figure->add_option("--n-min", fig_nmin, "Smallest N for fig2 and fig6");
    figure->add_option("--n-max", fig_nmax, "Largest N for fig2 and fig6");
    add_common(figure, common);

    auto* table1 = app.add_subcommand("table1", "Concurrences of the N=6 two-magnon eigenstates with and without a Goldstone magnon");
    add_common(table1, common);

    auto* survey = app.add_subcommand("survey", "Population statistics and scans");
    std::string sv_kind, sv_class = "all";
    int sv_n = 0, sv_magnons = 3, sv_nmin = 0, sv_nmax = 0;
    bool sv_records = false;
    std::vector<int> sv_lambdas;
    survey->add_option("kind", sv_kind, "sweep, quench, ags or length")
        ->required()
        ->check(CLI::IsMember({"sweep", "quench", "ags", "length"}));
    survey->add_option("--n", sv_n, "Number of sites");
    survey->add_option("--class", sv_class, "Root class filter for sweep")
        ->check(CLI::IsMember({"all", "scattering", "cosh", "sinh", "cosh_bound", "sinh_bound", "singular",
                               "goldstone", "goldstone_mixed"}));
    survey->add_flag("--records", sv_records, "Include one row per eigenstate in a sweep");
    survey->add_option("--magnons", sv_magnons, "Magnon number for quench (3 or 4)");
    survey->add_option("--lambdas", sv_lambdas, "Quantum numbers for a length scan")->delimiter(',');
    survey->add_option("--n-min", sv_nmin, "Smallest N for a length scan");
    survey->add_option("--n-max", sv_nmax, "Largest N for a length scan");
    add_common(survey, common);

    CLI11_PARSE(app, argc, argv);

    if (*solve) {
        if (solve_all || !solve_class.empty()) {
            const char* cls = solve_class.empty() ? nullptr : solve_class.c_str();
            return emit(common, [&](mg_report** r) { return mg_report_classify(solve_n, cls, r); });
        }
        if (solve_lambdas.empty()) {
            std::fprintf(stderr, "error: solve needs --lambdas, --class or --all\n");
            return exit_failure;
        }
        return emit(common, [&](mg_report** r) {
            return mg_report_solve(solve_n, solve_lambdas.data(), static_cast<int>(solve_lambdas.size()), r);
        });
    }
    for (auto [cmd, opts] : {std::pair{state, &state_opts}, std::pair{profile, &profile_opts}}) {
        if (!*cmd) continue;
        if (!has_state(*opts)) {
            std::fprintf(stderr, "error: %s needs a state selector\n", cmd->get_name().c_str());
            return exit_failure;
        }
        const mg_state_spec spec = to_spec(*opts);
        const bool is_state = cmd == state;
        return emit(common, [&](mg_report** r) {
            return is_state ? mg_report_state(&spec, r) : mg_report_profile(&spec, r);
        });
    }
    if (*figure) {
        mg_figure_spec spec{};
        spec.kind = fig_kind.c_str();
        spec.n_sites = fig_n;
        spec.points = fig_points;
        if (!fig_range.empty()) {
            spec.has_range = 1;
            spec.lo = fig_range[0];
            spec.hi = fig_range[1];
        }
        spec.lambdas = fig_lambdas.data();
        spec.lambda_count = static_cast<int>(fig_lambdas.size());
        spec.n_min = fig_nmin;
        spec.n_max = fig_nmax;
        return emit(common, [&](mg_report** r) { return mg_report_figure(&spec, r); });
    }
    if (*table1) return emit(common, [](mg_report** r) { return mg_report_table1(r); });
    mg_survey_spec spec{};
    spec.kind = sv_kind.c_str();
    spec.n_sites = sv_n;
    spec.class_filter = sv_class.c_str();
    spec.records = sv_records ? 1 : 0;
    spec.magnons = sv_magnons;
    spec.lambdas = sv_lambdas.data();
    spec.lambda_count = static_cast<int>(sv_lambdas.size());
    spec.n_min = sv_nmin;
    spec.n_max = sv_nmax;
    return emit(common, [&](mg_report** r) { return mg_report_survey(&spec, r); });
}

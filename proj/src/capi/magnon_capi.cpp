#include "magnon.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "bethe.hpp"
#include "entangle.hpp"
#include "errors.hpp"
#include "hamiltonian.hpp"
#include "reports.hpp"

struct mg_state {
    magnon::StateVector value;
};

struct mg_roots {
    magnon::BetheRoots value;
    std::string class_name;
};

struct mg_report {
    magnon::Report value;
};

namespace {

thread_local std::string last_error;

mg_status to_status(magnon::ErrorCode c) {
    using magnon::ErrorCode;
    switch (c) {
        case ErrorCode::parameter: return MG_ERR_PARAMETER;
        case ErrorCode::resource: return MG_ERR_RESOURCE;
        case ErrorCode::degenerate_state: return MG_ERR_DEGENERATE_STATE;
        case ErrorCode::no_root: return MG_ERR_NO_ROOT;
        case ErrorCode::misclassified_root: return MG_ERR_MISCLASSIFIED_ROOT;
        case ErrorCode::not_translation_invariant: return MG_ERR_NOT_TRANSLATION_INVARIANT;
    }
    return MG_ERR_INTERNAL;
}

mg_status set_error(mg_status s, const char* what) {
    last_error = what;
    return s;
}

template <class F>
mg_status guard(F&& body) {
    try {
        last_error.clear();
        body();
        return MG_OK;
    } catch (const magnon::Error& e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(MG_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return set_error(MG_ERR_INTERNAL, e.what());
    }
}

void need(const void* p, const char* name) {
    if (!p) magnon::fail(magnon::ErrorCode::parameter, std::string(name) + " must not be null");
}

std::vector<int> int_list(const int* xs, int count) {
    magnon::require(count >= 0 && (count == 0 || xs), "invalid quantum-number list");
    return std::vector<int>(xs, xs + count);
}

template <class Make>
mg_status make_state(mg_state** out, Make&& make) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        *out = new mg_state{make()};
    });
}

mg_status write_profile(const magnon::ConcurrenceProfile& p, double* values, int capacity, int* count) {
    const int n = static_cast<int>(p.values.size());
    if (count) *count = n;
    if (values)
        for (int r = 0; r < std::min(n, capacity); ++r) values[r] = p.values[static_cast<std::size_t>(r)];
    return MG_OK;
}

mg_report* wrap(magnon::Report r) { return new mg_report{std::move(r)}; }

magnon::StateSpec to_spec(const mg_state_spec* s) {
    need(s, "spec");
    magnon::StateSpec out;
    out.n_sites = s->n_sites;
    switch (s->kind) {
        case MG_STATE_BETHE: out.kind = magnon::StateKind::bethe; break;
        case MG_STATE_SCATTERING: out.kind = magnon::StateKind::scattering; break;
        case MG_STATE_COSH_BOUND: out.kind = magnon::StateKind::cosh_bound; break;
        case MG_STATE_SINH_BOUND: out.kind = magnon::StateKind::sinh_bound; break;
        case MG_STATE_SINGULAR: out.kind = magnon::StateKind::singular; break;
        case MG_STATE_GOLDSTONE: out.kind = magnon::StateKind::goldstone; break;
        default: magnon::fail(magnon::ErrorCode::parameter, "unknown state kind");
    }
    out.lambdas = int_list(s->lambdas, s->lambda_count);
    out.p0 = s->p0;
    out.p1 = s->p1;
    out.p2 = s->p2;
    out.count = s->count;
    out.raise = s->raise;
    return out;
}

std::optional<magnon::RootClass> class_filter(const char* name) {
    if (!name || std::strcmp(name, "all") == 0) return std::nullopt;
    auto c = magnon::root_class_from_string(name);
    if (!c) magnon::fail(magnon::ErrorCode::parameter, std::string("unknown root class '") + name + "'");
    return c;
}

mg_cell to_cell(const magnon::Cell& c) {
    mg_cell out{MG_CELL_NULL, 0.0, 0, nullptr};
    if (const auto* d = std::get_if<double>(&c)) {
        out.type = MG_CELL_REAL;
        out.real = *d;
    } else if (const auto* i = std::get_if<long long>(&c)) {
        out.type = MG_CELL_INTEGER;
        out.integer = *i;
    } else if (const auto* s = std::get_if<std::string>(&c)) {
        out.type = MG_CELL_TEXT;
        out.text = s->c_str();
    }
    return out;
}

const magnon::Table* table_at(const mg_report* r, size_t t) {
    return r && t < r->value.tables.size() ? &r->value.tables[t] : nullptr;
}

}  // namespace

extern "C" {

const char* mg_version(void) { return "1.0.0"; }

const char* mg_status_string(mg_status status) {
    switch (status) {
        case MG_OK: return "ok";
        case MG_ERR_PARAMETER: return "parameter error";
        case MG_ERR_RESOURCE: return "resource limit exceeded";
        case MG_ERR_DEGENERATE_STATE: return "degenerate state";
        case MG_ERR_NO_ROOT: return "no root";
        case MG_ERR_MISCLASSIFIED_ROOT: return "misclassified root";
        case MG_ERR_NOT_TRANSLATION_INVARIANT: return "state not translation invariant";
        case MG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* mg_last_error(void) { return last_error.c_str(); }

mg_status mg_state_one_magnon(int n_sites, int lambda, mg_state** out) {
    return make_state(out, [&] { return magnon::one_magnon_state(n_sites, lambda); });
}

mg_status mg_state_scattering(int n_sites, double total_k, double relative_k, double phi, mg_state** out) {
    return make_state(out, [&] { return magnon::scattering_state(n_sites, total_k, relative_k, phi); });
}

mg_status mg_state_cosh_bound(int n_sites, double u, double v, mg_state** out) {
    return make_state(out, [&] { return magnon::cosh_bound_state(n_sites, u, v); });
}

mg_status mg_state_sinh_bound(int n_sites, double u, double v, mg_state** out) {
    return make_state(out, [&] { return magnon::sinh_bound_state(n_sites, u, v); });
}

mg_status mg_state_singular(int n_sites, mg_state** out) {
    return make_state(out, [&] { return magnon::singular_state(n_sites); });
}

mg_status mg_state_goldstone(int n_sites, int n_up, mg_state** out) {
    return make_state(out, [&] { return magnon::goldstone_state(n_sites, n_up); });
}

mg_status mg_state_bethe(int n_sites, const int* lambdas, int count, mg_state** out) {
    return make_state(out, [&] { return magnon::solve_eigenstate(n_sites, int_list(lambdas, count)).state; });
}

mg_status mg_state_raise(const mg_state* state, mg_state** out) {
    return make_state(out, [&] {
        need(state, "state");
        return magnon::apply_total_raising(state->value);
    });
}

void mg_state_free(mg_state* state) { delete state; }

int mg_state_sites(const mg_state* state) { return state ? state->value.sites() : 0; }
int mg_state_magnons(const mg_state* state) { return state ? state->value.magnons() : 0; }
size_t mg_state_dimension(const mg_state* state) { return state ? state->value.size() : 0; }

mg_status mg_state_amplitude(const mg_state* state, size_t index, double* re, double* im, uint64_t* config) {
    return guard([&] {
        need(state, "state");
        magnon::require(index < state->value.size(), "amplitude index out of range");
        const auto a = state->value[index];
        if (re) *re = a.real();
        if (im) *im = a.imag();
        if (config) *config = state->value.basis().config(index);
    });
}

mg_status mg_state_verify(const mg_state* state, double coupling, double* energy, double* residual) {
    return guard([&] {
        need(state, "state");
        const auto& s = state->value;
        const auto c = magnon::verify_eigenstate(magnon::build_hamiltonian(s.sites(), s.magnons(), coupling), s);
        if (energy) *energy = c.rayleigh;
        if (residual) *residual = c.residual;
    });
}

mg_status mg_state_rdm(const mg_state* state, int p, int q, mg_rdm* out) {
    return guard([&] {
        need(state, "state");
        need(out, "out");
        const auto r = magnon::two_spin_rdm(state->value, p, q);
        *out = mg_rdm{r.alpha, r.beta, r.gamma.real(), r.gamma.imag(), r.delta, r.epsilon, r.p, r.q};
    });
}

double mg_concurrence(const mg_rdm* rdm) {
    if (!rdm) return 0.0;
    magnon::TwoSpinRDM r;
    r.alpha = rdm->alpha;
    r.beta = rdm->beta;
    r.gamma = {rdm->gamma_re, rdm->gamma_im};
    r.delta = rdm->delta;
    r.epsilon = rdm->epsilon;
    r.p = rdm->p;
    r.q = rdm->q;
    return magnon::concurrence(r);
}

mg_status mg_state_profile(const mg_state* state, double* values, int capacity, int* count) {
    return guard([&] {
        need(state, "state");
        write_profile(magnon::concurrence_profile(state->value), values, capacity, count);
    });
}

mg_status mg_state_pair_profile(const mg_state* state, double* values, int capacity, int* count) {
    return guard([&] {
        need(state, "state");
        write_profile(magnon::pair_concurrences(state->value), values, capacity, count);
    });
}

mg_status mg_goldstone_concurrence(int n_up, int n_sites, double* out) {
    return guard([&] {
        need(out, "out");
        *out = magnon::goldstone_concurrence(n_up, n_sites);
    });
}

mg_status mg_singular_concurrence(int n_sites, int r, double* out) {
    return guard([&] {
        need(out, "out");
        *out = magnon::singular_concurrence(n_sites, r);
    });
}

mg_status mg_eof_from_concurrence(double c, double* out) {
    return guard([&] {
        need(out, "out");
        *out = magnon::eof_from_concurrence(c);
    });
}

mg_status mg_solve(int n_sites, const int* lambdas, int count, mg_roots** out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        auto r = magnon::solve_eigenstate(n_sites, int_list(lambdas, count)).roots;
        auto name = magnon::to_string(r.root_class);
        *out = new mg_roots{std::move(r), std::move(name)};
    });
}

void mg_roots_free(mg_roots* roots) { delete roots; }

int mg_roots_count(const mg_roots* roots) { return roots ? static_cast<int>(roots->value.size()) : 0; }

const char* mg_roots_class(const mg_roots* roots) { return roots ? roots->class_name.c_str() : ""; }

mg_status mg_roots_k(const mg_roots* roots, int a, double* re, double* im) {
    return guard([&] {
        need(roots, "roots");
        magnon::require(a >= 0 && a < mg_roots_count(roots), "magnon index out of range");
        const auto k = roots->value.ks[static_cast<std::size_t>(a)];
        if (re) *re = k.real();
        if (im) *im = k.imag();
    });
}

mg_status mg_roots_phi(const mg_roots* roots, int a, int b, double* re, double* im) {
    return guard([&] {
        need(roots, "roots");
        const int n = mg_roots_count(roots);
        magnon::require(a >= 0 && b >= 0 && a < n && b < n && a != b, "phase indices out of range");
        const auto phi = roots->value.phi(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        if (re) *re = phi.real();
        if (im) *im = phi.imag();
    });
}

double mg_roots_bae_residual(const mg_roots* roots) { return roots ? magnon::bae_residual(roots->value) : 0.0; }

mg_status mg_bound_roots(int n_sites, mg_bound_kind kind, mg_bound_root* roots, int capacity, int* count) {
    return guard([&] {
        magnon::require(kind == MG_BOUND_COSH || kind == MG_BOUND_SINH, "unknown bound-state kind");
        const auto found = magnon::all_bound_roots(
            n_sites, kind == MG_BOUND_COSH ? magnon::BoundKind::cosh : magnon::BoundKind::sinh);
        const int n = static_cast<int>(found.size());
        if (count) *count = n;
        if (roots)
            for (int i = 0; i < std::min(n, capacity); ++i) {
                const auto& f = found[static_cast<std::size_t>(i)];
                roots[i] = mg_bound_root{f.lambda, f.u, f.v};
            }
    });
}

mg_status mg_report_solve(int n_sites, const int* lambdas, int count, mg_report** out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        *out = wrap(magnon::solve_report(n_sites, int_list(lambdas, count)));
    });
}

mg_status mg_report_classify(int n_sites, const char* filter, mg_report** out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        *out = wrap(magnon::classify_report(n_sites, class_filter(filter)));
    });
}

mg_status mg_report_state(const mg_state_spec* spec, mg_report** out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        *out = wrap(magnon::state_report(to_spec(spec)));
    });
}

mg_status mg_report_profile(const mg_state_spec* spec, mg_report** out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        *out = wrap(magnon::profile_report(to_spec(spec)));
    });
}

mg_status mg_report_figure(const mg_figure_spec* spec, mg_report** out) {
    return guard([&] {
        need(out, "out");
        need(spec, "spec");
        need(spec->kind, "figure kind");
        *out = nullptr;
        magnon::FigureSpec f;
        f.kind = spec->kind;
        f.n_sites = spec->n_sites;
        if (spec->points) f.points = spec->points;
        if (spec->has_range) {
            f.lo = spec->lo;
            f.hi = spec->hi;
        }
        f.lambdas = int_list(spec->lambdas, spec->lambda_count);
        f.n_min = spec->n_min;
        f.n_max = spec->n_max;
        *out = wrap(magnon::figure_report(f));
    });
}

mg_status mg_report_table1(mg_report** out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        *out = wrap(magnon::table1_report());
    });
}

mg_status mg_report_survey(const mg_survey_spec* spec, mg_report** out) {
    return guard([&] {
        need(out, "out");
        need(spec, "spec");
        need(spec->kind, "survey kind");
        *out = nullptr;
        magnon::SurveySpec s;
        s.kind = spec->kind;
        s.n_sites = spec->n_sites;
        s.filter = class_filter(spec->class_filter);
        s.records = spec->records != 0;
        if (spec->magnons) s.magnons = spec->magnons;
        s.lambdas = int_list(spec->lambdas, spec->lambda_count);
        s.n_min = spec->n_min;
        s.n_max = spec->n_max;
        *out = wrap(magnon::survey_report(s));
    });
}

void mg_report_free(mg_report* report) { delete report; }

const char* mg_report_command(const mg_report* r) { return r ? r->value.command.c_str() : ""; }
size_t mg_report_meta_count(const mg_report* r) { return r ? r->value.meta.size() : 0; }

const char* mg_report_meta_key(const mg_report* r, size_t i) {
    return r && i < r->value.meta.size() ? r->value.meta[i].first.c_str() : "";
}

mg_cell mg_report_meta_value(const mg_report* r, size_t i) {
    return r && i < r->value.meta.size() ? to_cell(r->value.meta[i].second) : mg_cell{MG_CELL_NULL, 0.0, 0, nullptr};
}

size_t mg_report_table_count(const mg_report* r) { return r ? r->value.tables.size() : 0; }

const char* mg_report_table_name(const mg_report* r, size_t t) {
    const auto* tab = table_at(r, t);
    return tab ? tab->name.c_str() : "";
}

size_t mg_report_column_count(const mg_report* r, size_t t) {
    const auto* tab = table_at(r, t);
    return tab ? tab->columns.size() : 0;
}

const char* mg_report_column_name(const mg_report* r, size_t t, size_t c) {
    const auto* tab = table_at(r, t);
    return tab && c < tab->columns.size() ? tab->columns[c].c_str() : "";
}

size_t mg_report_row_count(const mg_report* r, size_t t) {
    const auto* tab = table_at(r, t);
    return tab ? tab->rows.size() : 0;
}

mg_cell mg_report_cell(const mg_report* r, size_t t, size_t row, size_t c) {
    const auto* tab = table_at(r, t);
    if (!tab || row >= tab->rows.size() || c >= tab->rows[row].size()) return mg_cell{MG_CELL_NULL, 0.0, 0, nullptr};
    return to_cell(tab->rows[row][c]);
}

size_t mg_report_error_count(const mg_report* r) { return r ? r->value.errors.size() : 0; }

const char* mg_report_error(const mg_report* r, size_t i) {
    return r && i < r->value.errors.size() ? r->value.errors[i].c_str() : "";
}

}  // extern "C"

#include "tropdiff/capi.h"

#include <string>
#include <vector>

#include "tropdiff/commands.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/parser.hpp"
#include "tropdiff/tropical.hpp"

using namespace tropdiff;

struct td_poly {
    DiffPolynomial poly{1};
    std::string formatted;
    std::string trop_formatted;
};

struct td_natset {
    NatSet set;
    bool was_canonical = true;
    std::string formatted;
};

struct td_report {
    cmd::Report report;
    std::string json;
};

namespace {

thread_local std::string g_last_error;

td_status status_of(ErrorKind k) {
    switch (k) {
    case ErrorKind::Syntax: return TD_ERR_SYNTAX;
    case ErrorKind::VariableIndex: return TD_ERR_VARIABLE_INDEX;
    case ErrorKind::VariableCountMismatch: return TD_ERR_VARIABLE_COUNT;
    case ErrorKind::NegativePowerOfT: return TD_ERR_NEGATIVE_POWER_OF_T;
    case ErrorKind::EmptyPrecision: return TD_ERR_EMPTY_PRECISION;
    case ErrorKind::UncertifiedValuation: return TD_ERR_UNCERTIFIED_VALUATION;
    case ErrorKind::MissingWeight: return TD_ERR_MISSING_WEIGHT;
    case ErrorKind::InternalInvariant: return TD_ERR_INTERNAL_INVARIANT;
    case ErrorKind::InfiniteTropValue: return TD_ERR_INFINITE_TROP_VALUE;
    case ErrorKind::PostconditionFailure: return TD_ERR_POSTCONDITION;
    case ErrorKind::NotASolution: return TD_ERR_NOT_A_SOLUTION;
    case ErrorKind::UniverseMismatch: return TD_ERR_UNIVERSE_MISMATCH;
    case ErrorKind::NotLinearForm: return TD_ERR_NOT_LINEAR_FORM;
    case ErrorKind::BadDimension: return TD_ERR_BAD_DIMENSION;
    case ErrorKind::BadPair: return TD_ERR_BAD_PAIR;
    case ErrorKind::NaturalPole: return TD_ERR_NATURAL_POLE;
    case ErrorKind::UnknownCommand: return TD_ERR_UNKNOWN_COMMAND;
    }
    return TD_ERR_OTHER;
}

template <typename F>
td_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return TD_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TD_ERR_OTHER;
    }
}

std::vector<std::string> collect(const char* const* items, size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.emplace_back(items[i]);
    return out;
}

td_status wrap_report(cmd::Report&& rep, td_report** out) {
    auto* r = new td_report{std::move(rep), {}};
    r->json = r->report.json_text();
    *out = r;
    return TD_OK;
}

} // namespace

extern "C" {

const char* td_version(void) {
    return "tropdiff 1.0.0";
}

const char* td_last_error(void) {
    return g_last_error.c_str();
}

td_status td_poly_parse(const char* text, uint32_t trunc, td_poly** out) {
    return guarded([&] {
        auto* p = new td_poly;
        p->poly = parse_poly(text, trunc);
        p->formatted = p->poly.to_string();
        *out = p;
    });
}

void td_poly_free(td_poly* p) {
    delete p;
}

const char* td_poly_format(const td_poly* p) {
    return p->formatted.c_str();
}

uint32_t td_poly_n_vars(const td_poly* p) {
    return p->poly.n_vars();
}

td_status td_poly_trop_format(td_poly* p, const char** out) {
    return guarded([&] {
        p->trop_formatted = tropicalize(p->poly).to_string();
        *out = p->trop_formatted.c_str();
    });
}

td_status td_natset_parse(const char* text, td_natset** out) {
    return guarded([&] {
        ParsedNatSet parsed = parse_natset(text);
        auto* s = new td_natset;
        s->set = std::move(parsed.set);
        s->was_canonical = parsed.was_canonical;
        s->formatted = s->set.to_string();
        *out = s;
    });
}

void td_natset_free(td_natset* s) {
    delete s;
}

const char* td_natset_format(const td_natset* s) {
    return s->formatted.c_str();
}

int td_natset_was_canonical(const td_natset* s) {
    return s->was_canonical ? 1 : 0;
}

td_status td_natset_val(const td_natset* s, uint32_t j, int64_t* out) {
    return guarded([&] {
        const TropValue v = s->set.val_at(j);
        *out = v.is_infinite() ? -1 : v.finite_value();
    });
}

int td_natset_contains(const td_natset* s, uint32_t n) {
    return s->set.contains(n) ? 1 : 0;
}

void td_report_free(td_report* r) {
    delete r;
}

const char* td_report_text(const td_report* r) {
    return r->report.text.c_str();
}

const char* td_report_json(const td_report* r) {
    return r->json.c_str();
}

int td_report_status(const td_report* r) {
    return r->report.status;
}

size_t td_report_warning_count(const td_report* r) {
    return r->report.warnings.size();
}

const char* td_report_warning(const td_report* r, size_t index) {
    return index < r->report.warnings.size() ? r->report.warnings[index].c_str() : "";
}

td_status td_run_val(const char* natset, const uint32_t* js, size_t n_js, td_report** out) {
    return guarded([&] {
        wrap_report(cmd::run_val(natset, std::vector<uint32_t>(js, js + n_js)), out);
    });
}

td_status td_run_trop(const char* poly, uint32_t trunc, td_report** out) {
    return guarded([&] { wrap_report(cmd::run_trop(poly, trunc), out); });
}

td_status td_run_eval(const char* poly, uint32_t trunc, const char* const* sets, size_t n_sets, td_report** out) {
    return guarded([&] { wrap_report(cmd::run_eval(poly, trunc, collect(sets, n_sets)), out); });
}

td_status td_run_solve(const char* const* gens, size_t n_gens, uint32_t trunc, int32_t depth, uint32_t t_max,
                       uint32_t p_max, td_report** out) {
    return guarded([&] { wrap_report(cmd::run_solve(collect(gens, n_gens), trunc, depth, t_max, p_max), out); });
}

td_status td_run_initial(const char* poly, uint32_t trunc, const char* const* sets, size_t n_sets, int hu_gao,
                         td_report** out) {
    return guarded([&] { wrap_report(cmd::run_initial(poly, trunc, collect(sets, n_sets), hu_gao != 0), out); });
}

td_status td_run_lift(const char* const* parts, size_t n_parts, uint32_t trunc, const char* const* sets,
                      size_t n_sets, td_report** out) {
    return guarded([&] { wrap_report(cmd::run_lift(collect(parts, n_parts), trunc, collect(sets, n_sets)), out); });
}

td_status td_run_check_basis(const char* const* gens, size_t n_gens, const char* const* ref_gens, size_t n_ref_gens,
                             uint32_t trunc, uint32_t depth, uint32_t t_max, uint32_t p_max, td_report** out) {
    return guarded([&] {
        wrap_report(cmd::run_check_basis(collect(gens, n_gens), collect(ref_gens, n_ref_gens), trunc, depth, t_max,
                                         p_max),
                    out);
    });
}

td_status td_run_theorem_pp(const char* const* gens, size_t n_gens, const char* const* solutions, size_t n_solutions,
                            uint32_t trunc, uint32_t depth, uint32_t product_depth, uint32_t t_max, uint32_t p_max,
                            td_report** out) {
    return guarded([&] {
        wrap_report(cmd::run_theorem_pp(collect(gens, n_gens), collect(solutions, n_solutions), trunc, depth,
                                        product_depth, t_max, p_max),
                    out);
    });
}

td_status td_run_suppmin(const char* poly, uint32_t trunc, uint32_t k_max, td_report** out) {
    return guarded([&] { wrap_report(cmd::run_suppmin(poly, trunc, k_max), out); });
}

td_status td_run_matroid_check(uint32_t r, td_report** out) {
    return guarded([&] { wrap_report(cmd::run_matroid_check(r), out); });
}

td_status td_run_qab_audit(const char* const* gens, size_t n_gens, uint32_t trunc, uint32_t r, uint32_t depth,
                           int32_t a, int32_t b, td_report** out) {
    return guarded([&] { wrap_report(cmd::run_qab_audit(collect(gens, n_gens), trunc, r, depth, a, b), out); });
}

td_status td_run_denef(const char* phi2, uint32_t trunc, td_report** out) {
    return guarded([&] { wrap_report(cmd::run_denef(phi2, trunc), out); });
}

td_status td_run_paper_examples(td_report** out) {
    return guarded([&] { wrap_report(cmd::run_paper_examples(), out); });
}

} // extern "C"

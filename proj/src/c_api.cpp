#include "planaut/planaut.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "planaut/inverse.hpp"
#include "planaut/parser.hpp"
#include "planaut/report.hpp"

struct pa_poly {
    planaut::BivarPoly value;
};

struct pa_report {
    planaut::Report report;
    std::string text;
    std::string structured;
    std::string verdict;
};

namespace {

thread_local std::string last_error;

pa_status status_for(planaut::ErrorCode code) {
    using planaut::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument: return PA_ERR_INVALID_ARGUMENT;
        case ErrorCode::Parse: return PA_ERR_PARSE;
        case ErrorCode::ConstantTermPresent: return PA_ERR_CONSTANT_TERM;
        case ErrorCode::NoLinearPart: return PA_ERR_NO_LINEAR_PART;
        case ErrorCode::SingularLinearPart: return PA_ERR_SINGULAR_LINEAR_PART;
        case ErrorCode::NotScattered: return PA_ERR_NOT_SCATTERED;
        case ErrorCode::JacobianNotUnit: return PA_ERR_JACOBIAN_NOT_UNIT;
        case ErrorCode::InconsistentCoefficients: return PA_ERR_INCONSISTENT_COEFFICIENTS;
        case ErrorCode::DegreeTooSmall: return PA_ERR_DEGREE_TOO_SMALL;
        case ErrorCode::StructureInconsistent: return PA_ERR_STRUCTURE_INCONSISTENT;
        case ErrorCode::VerificationFailed: return PA_ERR_VERIFICATION_FAILED;
        case ErrorCode::InvalidSpec: return PA_ERR_INVALID_SPEC;
    }
    return PA_ERR_INTERNAL;
}

pa_status fail(pa_status status, const char* message) {
    last_error = message;
    return status;
}

/// Runs body, translating exceptions into status codes.
template <class Body>
pa_status guarded(Body&& body) {
    last_error.clear();
    try {
        body();
        return PA_OK;
    } catch (const planaut::Error& e) {
        return fail(status_for(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(PA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PA_ERR_INTERNAL, e.what());
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pa_poly* wrap(planaut::BivarPoly p) { return new pa_poly{std::move(p)}; }

pa_report* wrap(planaut::Report r) {
    auto* out = new pa_report{std::move(r), {}, {}, {}};
    out->text = out->report.text();
    out->structured = out->report.structured();
    out->verdict = std::string(planaut::verdict_name(out->report.verdict));
    return out;
}

}  // namespace

extern "C" {

const char* pa_version(void) { return "0.1.0"; }

const char* pa_status_name(pa_status status) {
    switch (status) {
        case PA_OK: return "ok";
        case PA_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case PA_ERR_PARSE: return "parse_error";
        case PA_ERR_CONSTANT_TERM: return "constant_term_present";
        case PA_ERR_NO_LINEAR_PART: return "no_linear_part";
        case PA_ERR_SINGULAR_LINEAR_PART: return "singular_linear_part";
        case PA_ERR_NOT_SCATTERED: return "not_scattered";
        case PA_ERR_JACOBIAN_NOT_UNIT: return "jacobian_not_unit";
        case PA_ERR_INCONSISTENT_COEFFICIENTS: return "inconsistent_coefficients";
        case PA_ERR_DEGREE_TOO_SMALL: return "degree_too_small";
        case PA_ERR_STRUCTURE_INCONSISTENT: return "structure_inconsistent";
        case PA_ERR_VERIFICATION_FAILED: return "verification_failed";
        case PA_ERR_INVALID_SPEC: return "invalid_spec";
        case PA_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* pa_last_error(void) { return last_error.c_str(); }

void pa_string_free(char* s) { std::free(s); }

pa_status pa_poly_parse(const char* text, pa_poly** out) {
    if (text == nullptr || out == nullptr) return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(planaut::parse_poly(text)); });
}

void pa_poly_free(pa_poly* p) { delete p; }

pa_status pa_poly_print(const pa_poly* p, char** out) {
    if (p == nullptr || out == nullptr) return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = duplicate(planaut::print_poly(p->value)); });
}

int pa_poly_equal(const pa_poly* a, const pa_poly* b) {
    if (a == nullptr || b == nullptr) return -1;
    return a->value == b->value ? 1 : 0;
}

long pa_poly_degree(const pa_poly* p) {
    if (p == nullptr || p->value.is_zero()) return -1;
    return static_cast<long>(*p->value.total_degree());
}

pa_status pa_poly_coefficient(const pa_poly* p, uint32_t i, uint32_t j, char** out) {
    if (p == nullptr || out == nullptr) return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = duplicate(p->value.coefficient(i, j).to_string()); });
}

pa_status pa_poly_jacobian(const pa_poly* f, const pa_poly* g, pa_poly** out) {
    if (f == nullptr || g == nullptr || out == nullptr) return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(planaut::jacobian(f->value, g->value)); });
}

pa_status pa_poly_compose(const pa_poly* p, const pa_poly* u, const pa_poly* v, pa_poly** out) {
    if (p == nullptr || u == nullptr || v == nullptr || out == nullptr) {
        return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] { *out = wrap(planaut::compose(p->value, u->value, v->value)); });
}

int pa_degrees_scattered(const uint32_t* degrees, size_t count, uint32_t witness[4]) {
    if ((degrees == nullptr && count > 0) || witness == nullptr) return -1;
    int result = -1;
    const pa_status s = guarded([&] {
        const auto w = planaut::find_scatter_violation(std::span<const std::uint32_t>(degrees, count));
        if (!w) {
            result = 1;
            return;
        }
        witness[0] = w->a;
        witness[1] = w->b;
        witness[2] = w->p;
        witness[3] = w->q;
        result = 0;
    });
    return s == PA_OK ? result : -1;
}

pa_status pa_invert(const pa_poly* f, const pa_poly* g, pa_poly** X, pa_poly** Y, pa_case* kind) {
    if (f == nullptr || g == nullptr || X == nullptr || Y == nullptr) {
        return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        planaut::InverseWitness w = planaut::invert_map(f->value, g->value);
        if (kind != nullptr) *kind = static_cast<pa_case>(w.tag.kind);
        pa_poly* x = wrap(std::move(w.X));
        try {
            *Y = wrap(std::move(w.Y));
        } catch (...) {
            delete x;
            throw;
        }
        *X = x;
    });
}

pa_status pa_run_check(const char* source_text, const char* source_name, pa_report** out) {
    if (source_text == nullptr || out == nullptr) return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(planaut::run_check(source_text, source_name ? source_name : "")); });
}

pa_status pa_run_invert(const char* source_text, const char* source_name, long bound, pa_report** out) {
    if (source_text == nullptr || out == nullptr) return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::optional<std::uint32_t> b;
        if (bound > 0) b = static_cast<std::uint32_t>(bound);
        *out = wrap(planaut::run_invert(source_text, source_name ? source_name : "", b));
    });
}

pa_status pa_run_generate(const pa_generate_options* options, pa_report** out) {
    if (options == nullptr || out == nullptr || (options->degrees == nullptr && options->degree_count > 0)) {
        return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        planaut::GenerateOptions o;
        o.degrees.assign(options->degrees, options->degrees + options->degree_count);
        o.case_number = options->case_number;
        o.coefficient_bound = options->coeff_bound;
        o.seed = options->seed;
        o.twist = options->twist != 0;
        *out = wrap(planaut::run_generate(o));
    });
}

pa_status pa_run_selftest(const pa_selftest_options* options, pa_report** out) {
    if (options == nullptr || out == nullptr) return fail(PA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        planaut::SelftestOptions o;
        o.count = options->count;
        o.max_degree = options->max_degree;
        o.seed = options->seed;
        o.coefficient_bound = options->coeff_bound ? options->coeff_bound : 100;
        o.workers = options->workers;
        o.inject_fault = options->inject_fault != 0;
        *out = wrap(planaut::run_selftest(o));
    });
}

void pa_report_free(pa_report* r) { delete r; }

int pa_report_exit_code(const pa_report* r) { return r ? r->report.exit_code() : -1; }

const char* pa_report_verdict(const pa_report* r) { return r ? r->verdict.c_str() : ""; }

const char* pa_report_render(const pa_report* r, pa_format format) {
    if (r == nullptr) return "";
    return format == PA_FORMAT_STRUCTURED ? r->structured.c_str() : r->text.c_str();
}

}  // extern "C"

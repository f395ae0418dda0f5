#include "planaut/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "planaut/inverse.hpp"
#include "planaut/oracle.hpp"
#include "planaut/parser.hpp"

namespace planaut {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxReportedFailures = 20;
constexpr std::uint32_t kMaxSelftestDegree = 64;
constexpr std::uint32_t kTwistEntryBound = 3;

std::string join(const std::vector<std::uint32_t>& values, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

json matrix_json(const LinearChange& m) {
    return json::array({json::array({m.m11.to_string(), m.m12.to_string()}),
                        json::array({m.m21.to_string(), m.m22.to_string()})});
}

json map_json(const PlaneMap& m) { return {{"f", print_poly(m.f)}, {"g", print_poly(m.g)}}; }

json jacobian_json(const JacobianReport& r) {
    json out{{"J", print_poly(r.J)}};
    switch (r.classification()) {
        case JacobianClass::Unit:
            out["classification"] = "unit";
            out["constant_value"] = r.constant_value->to_string();
            break;
        case JacobianClass::Nonconstant: {
            const auto& w = *r.nonconstant_witness;
            out["classification"] = "nonconstant";
            out["witness"] = {{"i", w.i}, {"j", w.j}, {"value", w.value.to_string()}};
            break;
        }
        case JacobianClass::Zero:
            out["classification"] = "zero";
            break;
    }
    return out;
}

std::string jacobian_line(const JacobianReport& r) {
    switch (r.classification()) {
        case JacobianClass::Unit: return "jacobian: constant " + r.constant_value->to_string();
        case JacobianClass::Nonconstant: {
            const auto& w = *r.nonconstant_witness;
            return "jacobian: not constant, J_{" + std::to_string(w.i) + "," + std::to_string(w.j) +
                   "} = " + w.value.to_string() + " (J = " + print_poly(r.J) + ")";
        }
        case JacobianClass::Zero: return "jacobian: identically zero";
    }
    return {};
}

json table_json(const CoefficientTable& table) {
    json out = json::array();
    for (const auto& [d, row] : table.rows()) {
        json values = json::array();
        for (const auto& v : row) values.push_back(v.to_string());
        out.push_back({{"degree", d}, {"c", std::move(values)}});
    }
    return out;
}

json minors_json(const MinorReport& r) {
    json a = json::array();
    for (const auto& m : r.a_minors) {
        a.push_back({{"degree", m.degree}, {"i", m.i}, {"j", m.j}, {"value", m.value.to_string()}});
    }
    json b = json::array();
    for (const auto& m : r.b_minors) {
        b.push_back({{"d", m.d}, {"e", m.e}, {"i", m.i}, {"j", m.j}, {"value", m.value.to_string()}});
    }
    return {{"all_vanish", r.all_vanish}, {"a_minors", std::move(a)}, {"b_minors", std::move(b)}};
}

Report make_report(std::string command, json input) {
    Report r;
    r.command = std::move(command);
    r.document = {{"command", r.command}, {"input", std::move(input)}, {"details", json::object()}};
    return r;
}

void finish(Report& r, Verdict verdict) {
    r.verdict = verdict;
    r.document["verdict"] = verdict_name(verdict);
    r.document["exit_code"] = exit_code(verdict);
    r.text_lines.push_back("verdict: " + std::string(verdict_name(verdict)) + " (exit " +
                           std::to_string(exit_code(verdict)) + ")");
}

void record_error(Report& r, const std::exception& e) {
    json err{{"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        err["kind"] = "ParseError";
        err["line"] = pe->line();
        err["column"] = pe->column();
        err["expected"] = pe->expected();
        err["found"] = pe->found();
    } else if (const auto* le = dynamic_cast<const Error*>(&e)) {
        err["kind"] = error_code_name(le->code());
        if (const auto* ve = dynamic_cast<const VerificationFailedError*>(&e)) {
            err["identity"] = ve->identity();
            err["residual"] = print_poly(ve->residual());
        }
        if (const auto* ie = dynamic_cast<const InconsistentCoefficientsError*>(&e)) {
            err["degree"] = ie->degree();
            err["j"] = ie->j();
            err["residual"] = ie->residual().to_string();
        }
    } else {
        err["kind"] = "Internal";
    }
    r.document["error"] = std::move(err);
    r.text_lines.push_back(std::string("error: ") + e.what());
}

/// Maps a library exception to the verdict it stands for.
Verdict verdict_for(const std::exception& e) {
    const auto* le = dynamic_cast<const Error*>(&e);
    if (le == nullptr) return Verdict::InternalError;
    switch (le->code()) {
        case ErrorCode::Parse: return Verdict::ParseError;
        case ErrorCode::ConstantTermPresent:
        case ErrorCode::InvalidSpec:
        case ErrorCode::InvalidArgument: return Verdict::InputError;
        case ErrorCode::NotScattered: return Verdict::NotScattered;
        case ErrorCode::JacobianNotUnit:
        case ErrorCode::NoLinearPart:
        case ErrorCode::SingularLinearPart: return Verdict::JacobianNotUnit;
        case ErrorCode::InconsistentCoefficients:
        case ErrorCode::DegreeTooSmall:
        case ErrorCode::StructureInconsistent:
        case ErrorCode::VerificationFailed: return Verdict::InternalError;
    }
    return Verdict::InternalError;
}

/// Parses the document and fills the input echo; returns nullopt (with the
/// report finished) on a parse error.
std::optional<MapDocument> load(Report& r, std::string_view source_text) {
    try {
        MapDocument doc = parse_map_document(source_text);
        r.document["input"]["f_source"] = doc.f_source;
        r.document["input"]["g_source"] = doc.g_source;
        r.document["input"]["f"] = print_poly(doc.parsed.f);
        r.document["input"]["g"] = print_poly(doc.parsed.g);
        r.text_lines.push_back("f = " + print_poly(doc.parsed.f));
        r.text_lines.push_back("g = " + print_poly(doc.parsed.g));
        return doc;
    } catch (const ParseError& e) {
        r.document["input"]["text"] = std::string(source_text);
        record_error(r, e);
        finish(r, Verdict::ParseError);
        return std::nullopt;
    }
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::NotScattered: return "not_scattered";
        case Verdict::JacobianNotUnit: return "jacobian_not_unit";
        case Verdict::ParseError: return "parse_error";
        case Verdict::InputError: return "input_error";
        case Verdict::InternalError: return "internal_error";
    }
    return "unknown";
}

int exit_code(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::NotScattered: return 2;
        case Verdict::JacobianNotUnit: return 3;
        case Verdict::ParseError:
        case Verdict::InputError: return 4;
        case Verdict::InternalError: return 5;
    }
    return 5;
}

std::string Report::structured() const { return document.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n"; }

std::string Report::text() const {
    std::string out;
    for (const auto& line : text_lines) out += line + "\n";
    return out;
}

Report run_check(std::string_view source_text, std::string_view source_name) {
    Report r = make_report("check", {{"source", std::string(source_name)}});
    const auto doc = load(r, source_text);
    if (!doc) return r;
    const auto& [f, g] = doc->parsed;
    json& details = r.document["details"];
    try {
        const DegreeDecomposition dec = decompose(f, g);
        details["degrees"] = dec.degrees();
        r.text_lines.push_back("degrees: {" + join(dec.degrees()) + "}");

        const auto violation = find_scatter_violation(dec.degrees());
        details["scattered"] = !violation;
        const JacobianReport jac = classify_jacobian(f, g);
        details["jacobian"] = jacobian_json(jac);
        if (violation) {
            details["scatter_witness"] = {violation->a, violation->b, violation->p, violation->q};
            r.text_lines.push_back("scattered: no, " + std::to_string(violation->a) + " + " +
                                   std::to_string(violation->b) + " = " + std::to_string(violation->p) +
                                   " + " + std::to_string(violation->q));
            r.text_lines.push_back(jacobian_line(jac));
            finish(r, Verdict::NotScattered);
            return r;
        }
        r.text_lines.push_back("scattered: yes");
        r.text_lines.push_back(jacobian_line(jac));
        if (!jac.is_unit()) {
            finish(r, Verdict::JacobianNotUnit);
            return r;
        }

        const NormalizedMap normalized = normalize_linear(f, g);
        details["linear_part"] = matrix_json(normalized.linear);
        details["normalized"] = map_json(normalized.map);
        const CoefficientTable table = extract_c_table(decompose(normalized.map.f, normalized.map.g));
        details["c_table"] = table_json(table);
        const MinorReport minors = verify_minors(table);
        details["minors"] = minors_json(minors);
        r.text_lines.push_back("c-table degrees: {" + join(table.degrees()) + "}");
        r.text_lines.push_back("minors: " + std::to_string(minors.a_minors.size()) + " A, " +
                               std::to_string(minors.b_minors.size()) + " B, " +
                               (minors.all_vanish ? "all vanish" : "NOT all vanish"));
        finish(r, minors.all_vanish ? Verdict::Pass : Verdict::InternalError);
    } catch (const std::exception& e) {
        record_error(r, e);
        finish(r, verdict_for(e));
    }
    return r;
}

Report run_invert(std::string_view source_text, std::string_view source_name,
                  std::optional<std::uint32_t> series_bound) {
    json input{{"source", std::string(source_name)}};
    if (series_bound) input["bound"] = *series_bound;
    Report r = make_report("invert", std::move(input));
    const auto doc = load(r, source_text);
    if (!doc) return r;
    const auto& [f, g] = doc->parsed;
    json& details = r.document["details"];
    try {
        const InversionTrace trace = invert_map_traced(f, g);
        const InverseWitness& w = trace.witness;
        details["degrees"] = trace.decomposition.degrees();
        details["jacobian"] = jacobian_json(trace.jacobian);
        details["linear_part"] = matrix_json(trace.normalized.linear);
        details["case"] = case_kind_name(w.tag.kind);
        if (w.tag.ratio) details["ratio"] = w.tag.ratio->to_string();
        details["inverse"] = {{"X", print_poly(w.X)}, {"Y", print_poly(w.Y)}, {"verified", w.verified}};
        details["normalized_inverse"] = {{"X", print_poly(trace.normalized_witness.X)},
                                         {"Y", print_poly(trace.normalized_witness.Y)}};

        const std::uint32_t bound = series_bound.value_or(default_series_bound(f, g));
        const SeriesInverseResult series = power_series_inverse(f, g, bound);
        const bool agrees = series.X.truncated(bound) == w.X.truncated(bound) &&
                            series.Y.truncated(bound) == w.Y.truncated(bound);
        details["series_oracle"] = {{"bound", bound}, {"is_polynomial", series.is_polynomial}, {"agrees", agrees}};

        r.text_lines.push_back("degrees: {" + join(trace.decomposition.degrees()) + "}");
        r.text_lines.push_back(jacobian_line(trace.jacobian));
        r.text_lines.push_back("case: " + std::string(case_kind_name(w.tag.kind)) +
                               (w.tag.ratio ? " (r = " + w.tag.ratio->to_string() + ")" : ""));
        r.text_lines.push_back("X = " + print_poly(w.X));
        r.text_lines.push_back("Y = " + print_poly(w.Y));
        r.text_lines.push_back(std::string("verified: ") + (w.verified ? "true" : "false"));
        r.text_lines.push_back("series oracle (bound " + std::to_string(bound) +
                               "): " + (agrees ? "agrees" : "DISAGREES"));
        finish(r, agrees ? Verdict::Pass : Verdict::InternalError);
    } catch (const std::exception& e) {
        if (const auto* ns = dynamic_cast<const NotScatteredError*>(&e)) {
            const auto& w = ns->witness();
            details["scatter_witness"] = {w.a, w.b, w.p, w.q};
        }
        if (const auto* jn = dynamic_cast<const JacobianNotUnitError*>(&e)) {
            details["jacobian"] = jacobian_json(jn->report());
        }
        record_error(r, e);
        finish(r, verdict_for(e));
    }
    return r;
}

Report run_generate(const GenerateOptions& options) {
    Report r = make_report("generate", {{"degrees", options.degrees},
                                        {"case", options.case_number},
                                        {"coeff_bound", options.coefficient_bound},
                                        {"seed", options.seed},
                                        {"twist", options.twist}});
    json& details = r.document["details"];
    try {
        GeneratorSpec spec;
        spec.degrees = options.degrees;
        switch (options.case_number) {
            case 1: spec.kind = CaseKind::Case1; break;
            case 2: spec.kind = CaseKind::Case2; break;
            case 3: spec.kind = CaseKind::Case3; break;
            default: throw Error(ErrorCode::InvalidSpec, "case must be 1, 2 or 3");
        }
        spec.coefficient_bound = options.coefficient_bound;
        spec.seed = options.seed;
        if (options.twist) {
            Rng rng(derive_seed(options.seed, 0x7457));
            spec.linear_twist = random_linear_change(rng, kTwistEntryBound);
        }
        const GeneratedMap gen = generate_map(spec);
        const PlaneMap map{gen.f, gen.g};
        details["map"] = map_json(map);
        details["document"] = print_map_document(map);
        details["expected_inverse"] = {{"X", print_poly(gen.expected.X)}, {"Y", print_poly(gen.expected.Y)}};
        details["case"] = case_kind_name(gen.form.kind);
        details["twist"] = gen.twist ? matrix_json(*gen.twist) : json(nullptr);

        r.text_lines.push_back("# generated: degrees " + join(gen.form.degrees) + ", " +
                               std::string(case_kind_name(gen.form.kind)) + ", seed " +
                               std::to_string(options.seed) + (gen.twist ? ", twisted" : ""));
        r.text_lines.push_back("# expected inverse:");
        r.text_lines.push_back("#   X = " + print_poly(gen.expected.X));
        r.text_lines.push_back("#   Y = " + print_poly(gen.expected.Y));
        r.text_lines.push_back("f = " + print_poly(map.f));
        r.text_lines.push_back("g = " + print_poly(map.g));
        r.verdict = Verdict::Pass;
        r.document["verdict"] = verdict_name(Verdict::Pass);
        r.document["exit_code"] = 0;
    } catch (const std::exception& e) {
        record_error(r, e);
        finish(r, verdict_for(e));
    }
    return r;
}

namespace {

struct TrialOutcome {
    std::vector<std::pair<std::string, bool>> checks;
    std::string failure;  ///< first failing property's message
    json map;
    std::uint64_t seed = 0;
};

class TrialRecorder {
public:
    explicit TrialRecorder(TrialOutcome& out) : out_(out) {}
    void check(const std::string& property, bool ok, const std::string& message = {}) {
        out_.checks.emplace_back(property, ok);
        if (!ok && out_.failure.empty()) out_.failure = property + (message.empty() ? "" : ": " + message);
    }

private:
    TrialOutcome& out_;
};

TrialOutcome run_trial(const SelftestOptions& options, const std::vector<std::vector<std::uint32_t>>& sets,
                       std::uint64_t index) {
    TrialOutcome out;
    out.seed = derive_seed(options.seed, index);
    TrialRecorder rec(out);
    Rng rng(out.seed);

    GeneratorSpec spec;
    spec.degrees = sets[rng.below(sets.size())];
    spec.kind = static_cast<CaseKind>(1 + rng.below(3));
    spec.coefficient_bound = options.coefficient_bound;
    spec.seed = rng.next();
    if (rng.coin()) spec.linear_twist = random_linear_change(rng, kTwistEntryBound);

    try {
        const GeneratedMap gen = generate_map(spec);
        out.map = map_json({gen.f, gen.g});
        const std::uint32_t top = spec.degrees.back();

        const JacobianReport jac = classify_jacobian(gen.f, gen.g);
        const Rational expected_det = gen.twist ? gen.twist->determinant() : Rational(1);
        rec.check("generator_jacobian", jac.is_unit() && *jac.constant_value == expected_det);

        const InversionTrace trace = invert_map_traced(gen.f, gen.g);
        InverseWitness w = trace.witness;
        if (options.inject_fault) w.X.add_term(1, 0, top);
        rec.check("inverse_verified", w.verified && verify_inverse(gen.f, gen.g, w),
                  "composition identities fail");
        rec.check("degree_bound", std::max(w.X.total_degree().value_or(0), w.Y.total_degree().value_or(0)) == top);
        rec.check("minors_vanish", trace.minors.all_vanish);
        rec.check("matches_generator", w.X == gen.expected.X && w.Y == gen.expected.Y);

        const SeriesInverseResult series = power_series_inverse(gen.f, gen.g, top + 2);
        rec.check("series_oracle", series.is_polynomial && series.X == w.X && series.Y == w.Y);

        const DegreeDecomposition ndec = decompose(trace.normalized.map.f, trace.normalized.map.g);
        bool reconstruct_ok = true;
        bool lemma_ok = true;
        bool bsquare_ok = true;
        bool ladder_ok = true;
        const auto degrees = trace.table.degrees();
        for (const std::uint32_t d : degrees) {
            const auto rebuilt = trace.table.reconstruct(d);
            const auto& piece = ndec.component(d);
            reconstruct_ok = reconstruct_ok && rebuilt.fpart == piece.fpart && rebuilt.gpart == piece.gpart;
            for (std::uint32_t m = 2; m <= d + 1; ++m) {
                const auto sides = check_lemma_identity(trace.table, d, m);
                lemma_ok = lemma_ok && sides.holds() && sides.lhs.is_zero();
            }
        }
        for (std::size_t p = 0; p < degrees.size(); ++p) {
            for (std::size_t q = p + 1; q < degrees.size(); ++q) {
                const auto bsq = check_bsquare_identity(trace.table, degrees[p], degrees[q]);
                bsquare_ok = bsquare_ok && bsq.holds() && bsq.lhs.is_zero();
                const auto lad = check_ladder_identity(trace.table, degrees[p], degrees[q]);
                ladder_ok = ladder_ok && lad.holds() && lad.lhs.is_zero();
            }
        }
        rec.check("table_reconstruction", reconstruct_ok);
        rec.check("lemma_identity", lemma_ok);
        rec.check("bsquare_identity", bsquare_ok);
        rec.check("ladder_identity", ladder_ok);
    } catch (const std::exception& e) {
        rec.check("pipeline", false, e.what());
    }
    return out;
}

}  // namespace

Report run_selftest(const SelftestOptions& options) {
    Report r = make_report("selftest", {{"count", options.count},
                                        {"max_degree", options.max_degree},
                                        {"seed", options.seed},
                                        {"coeff_bound", options.coefficient_bound}});
    if (options.inject_fault) r.document["input"]["inject_fault"] = true;
    json& details = r.document["details"];
    if (options.max_degree < 1 || options.max_degree > kMaxSelftestDegree || options.coefficient_bound == 0) {
        const Error e(ErrorCode::InvalidSpec, "max degree must be in [1, " + std::to_string(kMaxSelftestDegree) +
                                                  "] and the coefficient bound positive");
        record_error(r, e);
        finish(r, Verdict::InputError);
        return r;
    }

    const auto sets = scattered_degree_sets(options.max_degree, 4);
    std::vector<TrialOutcome> outcomes(options.count);
    std::atomic<std::uint64_t> next{0};
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(options.workers ? options.workers : hw,
                                                std::max<std::uint32_t>(options.count, 1));
    const auto work = [&] {
        for (std::uint64_t i = next++; i < options.count; i = next++) outcomes[i] = run_trial(options, sets, i);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    pool.clear();

    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> tally;  // pass, fail
    json failures = json::array();
    std::uint64_t passed = 0;
    for (std::uint64_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        for (const auto& [name, ok] : o.checks) {
            auto& t = tally[name];
            (ok ? t.first : t.second) += 1;
        }
        if (o.failure.empty()) {
            ++passed;
        } else if (failures.size() < kMaxReportedFailures) {
            failures.push_back({{"trial", i}, {"seed", o.seed}, {"property", o.failure}, {"map", o.map}});
        }
    }
    json props = json::object();
    for (const auto& [name, t] : tally) props[name] = {{"pass", t.first}, {"fail", t.second}};
    details["trials"] = options.count;
    details["passed"] = passed;
    details["failed"] = options.count - passed;
    details["properties"] = std::move(props);
    details["failures"] = std::move(failures);

    r.text_lines.push_back("selftest: " + std::to_string(passed) + "/" + std::to_string(options.count) +
                           " trials passed (max degree " + std::to_string(options.max_degree) + ", seed " +
                           std::to_string(options.seed) + ")");
    for (const auto& [name, t] : tally) {
        r.text_lines.push_back("  " + name + ": " + std::to_string(t.first) + " pass, " +
                               std::to_string(t.second) + " fail");
    }
    for (const auto& f : details["failures"]) {
        r.text_lines.push_back("  trial " + f["trial"].dump() + ": " + f["property"].get<std::string>());
    }
    finish(r, passed == options.count ? Verdict::Pass : Verdict::InternalError);
    return r;
}

}  // namespace planaut

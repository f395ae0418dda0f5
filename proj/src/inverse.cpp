#include "planaut/inverse.hpp"

#include <algorithm>

namespace planaut {

namespace {

Rational integer(std::uint32_t v) { return Rational(static_cast<long>(v)); }

bool all_zero(const std::vector<Rational>& row, std::size_t first, std::size_t last) {
    for (std::size_t b = first; b <= last; ++b) {
        if (!row[b].is_zero()) return false;
    }
    return true;
}

std::string at_degree(std::uint32_t d, const std::string& what) {
    return "degree " + std::to_string(d) + ": " + what;
}

}  // namespace

std::string_view case_kind_name(CaseKind kind) noexcept {
    switch (kind) {
        case CaseKind::Linear: return "linear";
        case CaseKind::Case1: return "case1";
        case CaseKind::Case2: return "case2";
        case CaseKind::Case3: return "case3";
    }
    return "unknown";
}

VerificationFailedError::VerificationFailedError(std::string identity, BivarPoly residual)
    : Error(ErrorCode::VerificationFailed, "inverse verification failed: " + identity),
      identity_(std::move(identity)),
      residual_(std::move(residual)) {}

std::optional<InverseResidual> inverse_residual(const BivarPoly& f, const BivarPoly& g,
                                                const BivarPoly& X, const BivarPoly& Y) {
    const auto check = [](const char* name, BivarPoly value,
                          const BivarPoly& expected) -> std::optional<InverseResidual> {
        value -= expected;
        if (value.is_zero()) return std::nullopt;
        return InverseResidual{name, std::move(value)};
    };
    if (auto r = check("X(f,g) = x", compose(X, f, g), BivarPoly::x())) return r;
    if (auto r = check("Y(f,g) = y", compose(Y, f, g), BivarPoly::y())) return r;
    if (auto r = check("f(X,Y) = x", compose(f, X, Y), BivarPoly::x())) return r;
    if (auto r = check("g(X,Y) = y", compose(g, X, Y), BivarPoly::y())) return r;
    return std::nullopt;
}

bool verify_inverse(const BivarPoly& f, const BivarPoly& g, const InverseWitness& w) {
    return !inverse_residual(f, g, w.X, w.Y).has_value();
}

CaseTag classify_case(const CoefficientTable& table, const DegreeDecomposition& dec) {
    const std::vector<std::uint32_t> degrees = dec.nonlinear_degrees();
    if (degrees.empty()) return {CaseKind::Linear, std::nullopt};
    for (const std::uint32_t d : degrees) {
        if (!table.contains(d)) throw StructureInconsistentError(at_degree(d, "missing from c-table"));
    }

    const auto top = [&](std::uint32_t d) -> const Rational& { return table.at(d, 0); };
    const auto next = [&](std::uint32_t d) -> const Rational& { return table.at(d, 1); };

    if (std::any_of(degrees.begin(), degrees.end(), [&](auto d) { return top(d).is_zero(); })) {
        for (const std::uint32_t d : degrees) {
            const auto& row = table.row(d);
            if (!row[0].is_zero() || !all_zero(row, 1, d)) {
                throw StructureInconsistentError(at_degree(d, "expected c_{d+1,0} = c_{d,1} = ... = c_{1,d} = 0"));
            }
            if (row[d + 1].is_zero()) throw StructureInconsistentError(at_degree(d, "expected c_{0,d+1} != 0"));
        }
        return {CaseKind::Case1, std::nullopt};
    }

    if (std::any_of(degrees.begin(), degrees.end(), [&](auto d) { return next(d).is_zero(); })) {
        for (const std::uint32_t d : degrees) {
            if (!all_zero(table.row(d), 1, d + 1)) {
                throw StructureInconsistentError(at_degree(d, "expected c_{d,1} = ... = c_{0,d+1} = 0"));
            }
        }
        return {CaseKind::Case2, std::nullopt};
    }

    std::optional<Rational> ratio;
    for (const std::uint32_t d : degrees) {
        Rational r = next(d) / (integer(d + 1) * top(d));
        if (ratio && *ratio != r) {
            throw StructureInconsistentError(at_degree(d, "ratio " + r.to_string() + " differs from " +
                                                              ratio->to_string()));
        }
        ratio = std::move(r);
    }
    return {CaseKind::Case3, ratio};
}

namespace {

/// The normal-form inverse, not yet checked.
InverseWitness closed_form_inverse(const DegreeDecomposition& dec, const CoefficientTable& table,
                                   const CaseTag& tag) {
    InverseWitness w;
    w.tag = tag;
    w.X = BivarPoly::x();
    w.Y = BivarPoly::y();
    const std::vector<std::uint32_t> degrees = dec.nonlinear_degrees();
    switch (tag.kind) {
        case CaseKind::Linear:
            break;
        case CaseKind::Case1:
            for (const std::uint32_t d : degrees) {
                w.X.add_term(-(integer(d + 1) * table.c(0, d + 1)), 0, d);
            }
            break;
        case CaseKind::Case2:
            for (const std::uint32_t d : degrees) {
                w.Y.add_term(integer(d + 1) * table.c(d + 1, 0), d, 0);
            }
            break;
        case CaseKind::Case3: {
            if (!tag.ratio) throw StructureInconsistentError("case 3 tag without a ratio");
            const BivarPoly u = BivarPoly::x() + *tag.ratio * BivarPoly::y();
            for (const std::uint32_t d : degrees) {
                const BivarPoly ud = pow(u, d);
                w.X -= table.c(d, 1) * ud;
                w.Y += (integer(d + 1) * table.c(d + 1, 0)) * ud;
            }
            break;
        }
    }
    return w;
}

}  // namespace

InverseWitness synthesize_inverse(const DegreeDecomposition& dec, const CoefficientTable& table,
                                  const CaseTag& tag) {
    InverseWitness w = closed_form_inverse(dec, table, tag);
    const PlaneMap map = dec.resum();
    if (auto r = inverse_residual(map.f, map.g, w.X, w.Y)) {
        throw VerificationFailedError(r->identity, std::move(r->residual));
    }
    w.verified = true;
    return w;
}

InversionTrace invert_map_traced(const BivarPoly& f, const BivarPoly& g) {
    InversionTrace trace;
    trace.decomposition = decompose(f, g);
    if (const auto w = find_scatter_violation(trace.decomposition.degrees())) throw NotScatteredError(*w);

    trace.jacobian = classify_jacobian(f, g);
    if (!trace.jacobian.is_unit()) throw JacobianNotUnitError(trace.jacobian);

    trace.normalized = normalize_linear(f, g);
    const DegreeDecomposition ndec = decompose(trace.normalized.map.f, trace.normalized.map.g);
    try {
        trace.table = extract_c_table(ndec);
    } catch (const InconsistentCoefficientsError& e) {
        // Unreachable for a unit Jacobian on scattered degrees.
        throw StructureInconsistentError(e.what());
    }
    trace.minors = verify_minors(trace.table);
    if (!trace.minors.all_vanish) throw StructureInconsistentError("nonzero 2x2 minor on a unit-Jacobian map");

    const CaseTag tag = classify_case(trace.table, ndec);
    // Checked once below, on the input map: since input = L(normalized),
    // the identities for the two maps are equivalent.
    trace.normalized_witness = closed_form_inverse(ndec, trace.table, tag);

    // input = L(normalized), so input^{-1} = normalized^{-1} o L^{-1}.
    const PlaneMap linv = trace.normalized.linear.inverse().as_map();
    InverseWitness& w = trace.witness;
    w.tag = tag;
    w.X = compose(trace.normalized_witness.X, linv.f, linv.g);
    w.Y = compose(trace.normalized_witness.Y, linv.f, linv.g);
    if (auto r = inverse_residual(f, g, w.X, w.Y)) {
        throw VerificationFailedError(r->identity, std::move(r->residual));
    }
    w.verified = true;
    trace.normalized_witness.verified = true;

    const auto degree = [](const BivarPoly& p) { return p.total_degree().value_or(0); };
    if (std::max(degree(w.X), degree(w.Y)) != trace.decomposition.max_degree()) {
        throw StructureInconsistentError("inverse degree differs from the largest degree of the map");
    }
    return trace;
}

InverseWitness invert_map(const BivarPoly& f, const BivarPoly& g) { return invert_map_traced(f, g).witness; }

}  // namespace planaut

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "planaut/jacobian.hpp"
#include "planaut/mapform.hpp"
#include "planaut/structure.hpp"

namespace planaut {

enum class CaseKind {
    Linear,  ///< no non-linear degrees
    Case1,   ///< f = x + P(y), g = y
    Case2,   ///< f = x, g = y + Q(x)
    Case3,   ///< both shifted along u = x + r y
};

std::string_view case_kind_name(CaseKind kind) noexcept;

struct CaseTag {
    CaseKind kind = CaseKind::Linear;
    /// r = c_{d,1} / ((d+1) c_{d+1,0}), common to all degrees; Case3 only.
    std::optional<Rational> ratio;
    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// Polynomials (X, Y) with X(f, g) = x and Y(f, g) = y.
struct InverseWitness {
    BivarPoly X;
    BivarPoly Y;
    bool verified = false;
    CaseTag tag;
};

class StructureInconsistentError : public Error {
public:
    explicit StructureInconsistentError(const std::string& detail)
        : Error(ErrorCode::StructureInconsistent, "structure inconsistent: " + detail) {}
};

/// One of the four composition identities failed.
class VerificationFailedError : public Error {
public:
    VerificationFailedError(std::string identity, BivarPoly residual);
    const std::string& identity() const noexcept { return identity_; }
    /// lhs - rhs of the failing identity; nonzero.
    const BivarPoly& residual() const noexcept { return residual_; }

private:
    std::string identity_;
    BivarPoly residual_;
};

struct InverseResidual {
    std::string identity;  ///< "X(f,g) = x", "Y(f,g) = y", "f(X,Y) = x" or "g(X,Y) = y"
    BivarPoly residual;
};

/// First failing composition identity, or nullopt when (X, Y) inverts (f, g)
/// on both sides.
std::optional<InverseResidual> inverse_residual(const BivarPoly& f, const BivarPoly& g,
                                                const BivarPoly& X, const BivarPoly& Y);
bool verify_inverse(const BivarPoly& f, const BivarPoly& g, const InverseWitness& w);

/// Sorts a minor-vanishing table into one of the normal forms. The pattern
/// must hold for every non-linear degree of dec at once; anything else
/// throws StructureInconsistentError.
CaseTag classify_case(const CoefficientTable& table, const DegreeDecomposition& dec);

/// Closed-form inverse of the normalized map described by dec and table.
/// The result is verified against dec; a failing identity throws
/// VerificationFailedError.
InverseWitness synthesize_inverse(const DegreeDecomposition& dec, const CoefficientTable& table,
                                  const CaseTag& tag);

/// Every intermediate product of invert_map, for reporting.
struct InversionTrace {
    DegreeDecomposition decomposition;
    JacobianReport jacobian;
    NormalizedMap normalized;
    CoefficientTable table;
    MinorReport minors;
    InverseWitness normalized_witness;
    InverseWitness witness;  ///< inverse of the input map
};

/// Full pipeline: decompose, check scatteredness and the Jacobian, normalize
/// the linear part, read off the c-table, check the minors, classify,
/// synthesize, undo the normalization and verify against the input.
///
/// Throws ConstantTermError, NotScatteredError, JacobianNotUnitError,
/// StructureInconsistentError or VerificationFailedError.
InversionTrace invert_map_traced(const BivarPoly& f, const BivarPoly& g);
InverseWitness invert_map(const BivarPoly& f, const BivarPoly& g);

}  // namespace planaut

#pragma once

#include <cstdint>
#include <optional>

#include "planaut/errors.hpp"
#include "planaut/poly.hpp"

namespace planaut {

/// Coefficient J_{i,j} of x^i y^j in the Jacobian.
struct JacobianTerm {
    std::uint32_t i;
    std::uint32_t j;
    Rational value;
    friend bool operator==(const JacobianTerm&, const JacobianTerm&) = default;
};

enum class JacobianClass { Unit, Nonconstant, Zero };

struct JacobianReport {
    BivarPoly J;
    /// Set iff J is a nonzero constant.
    std::optional<Rational> constant_value;
    /// Set iff J has a nonzero term of positive degree; the first such term
    /// in graded order.
    std::optional<JacobianTerm> nonconstant_witness;

    JacobianClass classification() const {
        if (constant_value) return JacobianClass::Unit;
        return nonconstant_witness ? JacobianClass::Nonconstant : JacobianClass::Zero;
    }
    bool is_unit() const { return constant_value.has_value(); }
};

class JacobianNotUnitError : public Error {
public:
    explicit JacobianNotUnitError(JacobianReport report);
    const JacobianReport& report() const noexcept { return report_; }

private:
    JacobianReport report_;
};

/// f_x g_y - f_y g_x
BivarPoly jacobian(const BivarPoly& f, const BivarPoly& g);
Rational jacobian_coefficient(const BivarPoly& f, const BivarPoly& g, std::uint32_t i, std::uint32_t j);
JacobianReport classify_jacobian(const BivarPoly& f, const BivarPoly& g);

}  // namespace planaut

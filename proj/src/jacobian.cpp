#include "planaut/jacobian.hpp"

namespace planaut {

namespace {

std::string describe(const JacobianReport& r) {
    if (r.nonconstant_witness) {
        const auto& w = *r.nonconstant_witness;
        return "Jacobian is not constant: coefficient of x^" + std::to_string(w.i) + " y^" +
               std::to_string(w.j) + " is " + w.value.to_string();
    }
    return "Jacobian is identically zero";
}

}  // namespace

JacobianNotUnitError::JacobianNotUnitError(JacobianReport report)
    : Error(ErrorCode::JacobianNotUnit, describe(report)), report_(std::move(report)) {}

BivarPoly jacobian(const BivarPoly& f, const BivarPoly& g) {
    return partial(f, Var::X) * partial(g, Var::Y) - partial(f, Var::Y) * partial(g, Var::X);
}

Rational jacobian_coefficient(const BivarPoly& f, const BivarPoly& g, std::uint32_t i, std::uint32_t j) {
    return jacobian(f, g).coefficient(i, j);
}

JacobianReport classify_jacobian(const BivarPoly& f, const BivarPoly& g) {
    JacobianReport report;
    report.J = jacobian(f, g);
    for (const auto& [m, c] : report.J.terms()) {
        if (m.degree() > 0) {
            report.nonconstant_witness = JacobianTerm{m.xexp, m.yexp, c};
            break;
        }
    }
    if (!report.nonconstant_witness && !report.J.is_zero()) report.constant_value = report.J.constant_term();
    return report;
}

}  // namespace planaut

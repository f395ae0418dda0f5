#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "planaut/errors.hpp"
#include "planaut/mapform.hpp"

namespace planaut {

/// The c-parameterization of the non-linear homogeneous pieces of a map with
/// linear part (x, y). For each degree d the row holds d + 2 values,
/// row[b] = c_{d+1-b, b}, so row[0] = c_{d+1,0} and row[d+1] = c_{0,d+1}.
///
/// The pieces are recovered as
///   f_d =  sum_{j=1}^{d+1} j c_{d-j+1,j} x^{d-j+1} y^{j-1}
///   g_d = -sum_{j=0}^{d}   (d-j+1) c_{d-j+1,j} x^{d-j} y^j
class CoefficientTable {
public:
    /// Throws InvalidArgument unless values.size() == d + 2 and d >= 1.
    void set_row(std::uint32_t d, std::vector<Rational> values);

    bool contains(std::uint32_t d) const { return rows_.contains(d); }
    std::vector<std::uint32_t> degrees() const;
    const std::vector<Rational>& row(std::uint32_t d) const;
    const std::map<std::uint32_t, std::vector<Rational>>& rows() const noexcept { return rows_; }

    /// row(d)[b]
    const Rational& at(std::uint32_t d, std::uint32_t b) const;
    /// c_{a,b} with d = a + b - 1.
    const Rational& c(std::uint32_t a, std::uint32_t b) const;

    HomogeneousPair reconstruct(std::uint32_t d) const;

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

private:
    std::map<std::uint32_t, std::vector<Rational>> rows_;
};

/// 2 x (d+1) matrix. Column k (1-based) is
///   (k c_{d-k+1,k}, (d+2-k) c_{d-k+2,k-1}),
/// which is (coefficient in f_d, minus coefficient in g_d) of x^{d-k+1} y^{k-1}.
struct StructureMatrix {
    std::uint32_t degree = 0;
    std::array<std::vector<Rational>, 2> rows;

    std::uint32_t columns() const { return degree + 1; }
    /// 1-based entry access; row is 1 or 2.
    const Rational& entry(std::uint32_t row, std::uint32_t column) const;
};

struct AMinor {
    std::uint32_t degree;
    std::uint32_t i;
    std::uint32_t j;
    Rational value;
};

struct BMinor {
    std::uint32_t d;
    std::uint32_t e;
    std::uint32_t i;
    std::uint32_t j;
    Rational value;
};

struct MinorReport {
    std::vector<AMinor> a_minors;  ///< (degree, i < j), ascending
    std::vector<BMinor> b_minors;  ///< (d < e, i, j), ascending
    bool all_vanish = true;
};

/// Both sides of a displayed identity, returned unevaluated so callers can
/// report the size of a violation.
struct IdentitySides {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

class InconsistentCoefficientsError : public Error {
public:
    InconsistentCoefficientsError(std::uint32_t degree, std::uint32_t j, Rational residual);
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t j() const noexcept { return j_; }
    const Rational& residual() const noexcept { return residual_; }

private:
    std::uint32_t degree_;
    std::uint32_t j_;
    Rational residual_;
};

/// Reads the c-table off a scattered decomposition whose degree-1 piece is
/// (x, y). For every non-linear d and 1 <= j <= d the residual
/// (d-j+1) s_{d-j+1,j-1} + j t_{d-j,j} (which equals J_{d-j,j-1}) must vanish,
/// otherwise InconsistentCoefficientsError(d, j, residual) is thrown.
CoefficientTable extract_c_table(const DegreeDecomposition& dec);

StructureMatrix build_structure_matrix(std::uint32_t d, const CoefficientTable& table);

/// Determinant of columns i and j of A (1-based).
Rational minor_A(const StructureMatrix& A, std::uint32_t i, std::uint32_t j);
/// Determinant of column i of Ap next to column j of Aq.
Rational minor_B(const StructureMatrix& Ap, const StructureMatrix& Aq, std::uint32_t i, std::uint32_t j);

MinorReport verify_minors(const CoefficientTable& table);

/// lhs: J_{2d-m,m-2} of the pure degree-d pair rebuilt from the table.
/// rhs: -sum_{i=1}^{m-1} (d-i+1)(m-i) A_{(i,m-i+1)}.   Requires 2 <= m <= d+1.
IdentitySides check_lemma_identity(const CoefficientTable& table, std::uint32_t d, std::uint32_t m);

/// lhs: B_{(d+1,e+1)}^2.
/// rhs: (A_e)_{(e,e+1)} (d+1)^2/e c_{0,d+1}^2 + (A_d)_{(d,d+1)} (e+1)^2/d c_{0,e+1}^2
///      + J_{0,d+e-2} (d+1)(e+1)/(de) c_{0,d+1} c_{0,e+1},
/// with J taken from the rebuilt pieces of degrees d and e.
/// Throws Error{DegreeTooSmall} if d or e is 1.
IdentitySides check_bsquare_identity(const CoefficientTable& table, std::uint32_t d, std::uint32_t e);

/// lhs: J_{0,d+e-2} of the rebuilt pieces of degrees d and e.
/// rhs: d B_{(d+1,e)} - e B_{(d,e+1)}.
IdentitySides check_ladder_identity(const CoefficientTable& table, std::uint32_t d, std::uint32_t e);

}  // namespace planaut

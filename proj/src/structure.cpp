#include "planaut/structure.hpp"

#include "planaut/jacobian.hpp"

namespace planaut {

namespace {

Rational integer(std::uint32_t v) { return Rational(static_cast<long>(v)); }

void require(bool condition, const std::string& message) {
    if (!condition) throw Error(ErrorCode::InvalidArgument, message);
}

}  // namespace

InconsistentCoefficientsError::InconsistentCoefficientsError(std::uint32_t degree, std::uint32_t j,
                                                             Rational residual)
    : Error(ErrorCode::InconsistentCoefficients,
            "coefficients of degree " + std::to_string(degree) + " are inconsistent at j = " +
                std::to_string(j) + " (residual " + residual.to_string() + ")"),
      degree_(degree),
      j_(j),
      residual_(std::move(residual)) {}

void CoefficientTable::set_row(std::uint32_t d, std::vector<Rational> values) {
    require(d >= 1, "c-table degree must be positive");
    require(values.size() == d + 2, "c-table row for degree d must have d + 2 entries");
    rows_[d] = std::move(values);
}

std::vector<std::uint32_t> CoefficientTable::degrees() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& [d, row] : rows_) out.push_back(d);
    return out;
}

const std::vector<Rational>& CoefficientTable::row(std::uint32_t d) const {
    const auto it = rows_.find(d);
    require(it != rows_.end(), "degree " + std::to_string(d) + " not in c-table");
    return it->second;
}

const Rational& CoefficientTable::at(std::uint32_t d, std::uint32_t b) const {
    const auto& r = row(d);
    require(b < r.size(), "c-table column out of range");
    return r[b];
}

const Rational& CoefficientTable::c(std::uint32_t a, std::uint32_t b) const {
    require(a + b >= 2, "c_{a,b} requires a + b >= 2");
    return at(a + b - 1, b);
}

HomogeneousPair CoefficientTable::reconstruct(std::uint32_t d) const {
    const auto& r = row(d);
    HomogeneousPair out;
    for (std::uint32_t j = 1; j <= d + 1; ++j) {
        out.fpart.add_term(integer(j) * r[j], d - j + 1, j - 1);
    }
    for (std::uint32_t j = 0; j <= d; ++j) {
        out.gpart.add_term(-(integer(d - j + 1) * r[j]), d - j, j);
    }
    return out;
}

const Rational& StructureMatrix::entry(std::uint32_t row, std::uint32_t column) const {
    require(row == 1 || row == 2, "structure matrix row must be 1 or 2");
    require(column >= 1 && column <= columns(), "structure matrix column out of range");
    return rows[row - 1][column - 1];
}

CoefficientTable extract_c_table(const DegreeDecomposition& dec) {
    if (!dec.contains(1) || dec.component(1).fpart != BivarPoly::x() ||
        dec.component(1).gpart != BivarPoly::y()) {
        throw Error(ErrorCode::InvalidArgument, "c-table extraction needs linear part (x, y)");
    }
    if (const auto w = find_scatter_violation(dec.degrees())) throw NotScatteredError(*w);

    CoefficientTable table;
    for (const std::uint32_t d : dec.nonlinear_degrees()) {
        const auto& [fd, gd] = dec.component(d);
        std::vector<Rational> row(d + 2);
        for (std::uint32_t j = 1; j <= d; ++j) {
            const Rational s = fd.coefficient(d - j + 1, j - 1);
            const Rational t = gd.coefficient(d - j, j);
            Rational residual = integer(d - j + 1) * s + integer(j) * t;
            if (!residual.is_zero()) throw InconsistentCoefficientsError(d, j, std::move(residual));
            row[j] = s / integer(j);
        }
        row[d + 1] = fd.coefficient(0, d) / integer(d + 1);
        row[0] = -gd.coefficient(d, 0) / integer(d + 1);
        table.set_row(d, std::move(row));
    }
    return table;
}

StructureMatrix build_structure_matrix(std::uint32_t d, const CoefficientTable& table) {
    const auto& r = table.row(d);
    StructureMatrix A;
    A.degree = d;
    A.rows[0].reserve(d + 1);
    A.rows[1].reserve(d + 1);
    for (std::uint32_t k = 1; k <= d + 1; ++k) {
        A.rows[0].push_back(integer(k) * r[k]);
        A.rows[1].push_back(integer(d + 2 - k) * r[k - 1]);
    }
    return A;
}

Rational minor_A(const StructureMatrix& A, std::uint32_t i, std::uint32_t j) {
    return A.entry(1, i) * A.entry(2, j) - A.entry(1, j) * A.entry(2, i);
}

Rational minor_B(const StructureMatrix& Ap, const StructureMatrix& Aq, std::uint32_t i, std::uint32_t j) {
    return Ap.entry(1, i) * Aq.entry(2, j) - Aq.entry(1, j) * Ap.entry(2, i);
}

MinorReport verify_minors(const CoefficientTable& table) {
    MinorReport report;
    std::vector<StructureMatrix> matrices;
    for (const std::uint32_t d : table.degrees()) matrices.push_back(build_structure_matrix(d, table));

    for (const auto& A : matrices) {
        for (std::uint32_t i = 1; i <= A.columns(); ++i) {
            for (std::uint32_t j = i + 1; j <= A.columns(); ++j) {
                Rational v = minor_A(A, i, j);
                if (!v.is_zero()) report.all_vanish = false;
                report.a_minors.push_back({A.degree, i, j, std::move(v)});
            }
        }
    }
    for (std::size_t p = 0; p < matrices.size(); ++p) {
        for (std::size_t q = p + 1; q < matrices.size(); ++q) {
            const auto& Ap = matrices[p];
            const auto& Aq = matrices[q];
            for (std::uint32_t i = 1; i <= Ap.columns(); ++i) {
                for (std::uint32_t j = 1; j <= Aq.columns(); ++j) {
                    Rational v = minor_B(Ap, Aq, i, j);
                    if (!v.is_zero()) report.all_vanish = false;
                    report.b_minors.push_back({Ap.degree, Aq.degree, i, j, std::move(v)});
                }
            }
        }
    }
    return report;
}

IdentitySides check_lemma_identity(const CoefficientTable& table, std::uint32_t d, std::uint32_t m) {
    require(m >= 2 && m <= d + 1, "lemma identity needs 2 <= m <= d + 1");
    const auto [fd, gd] = table.reconstruct(d);
    IdentitySides out;
    out.lhs = jacobian_coefficient(fd, gd, 2 * d - m, m - 2);

    const StructureMatrix A = build_structure_matrix(d, table);
    for (std::uint32_t i = 1; i <= m - 1; ++i) {
        out.rhs -= integer(d - i + 1) * integer(m - i) * minor_A(A, i, m - i + 1);
    }
    return out;
}

namespace {

/// J_{0,d+e-2} of the pair made of the rebuilt degree-d and degree-e pieces.
Rational cross_jacobian_top_y(const CoefficientTable& table, std::uint32_t d, std::uint32_t e) {
    const auto pd = table.reconstruct(d);
    const auto pe = table.reconstruct(e);
    return jacobian_coefficient(pd.fpart + pe.fpart, pd.gpart + pe.gpart, 0, d + e - 2);
}

}  // namespace

IdentitySides check_bsquare_identity(const CoefficientTable& table, std::uint32_t d, std::uint32_t e) {
    if (d < 2 || e < 2) {
        throw Error(ErrorCode::DegreeTooSmall, "B-square identity needs both degrees >= 2");
    }
    require(d != e, "B-square identity needs two distinct degrees");
    const StructureMatrix Ap = build_structure_matrix(d, table);
    const StructureMatrix Aq = build_structure_matrix(e, table);
    const Rational& c0d = table.c(0, d + 1);
    const Rational& c0e = table.c(0, e + 1);
    const Rational J = cross_jacobian_top_y(table, d, e);

    IdentitySides out;
    out.lhs = minor_B(Ap, Aq, d + 1, e + 1).pow(2);
    out.rhs = minor_A(Aq, e, e + 1) * Rational(static_cast<long>((d + 1) * (d + 1)), e) * c0d * c0d +
              minor_A(Ap, d, d + 1) * Rational(static_cast<long>((e + 1) * (e + 1)), d) * c0e * c0e +
              J * Rational(static_cast<long>((d + 1) * (e + 1)), static_cast<long>(d * e)) * c0d * c0e;
    return out;
}

IdentitySides check_ladder_identity(const CoefficientTable& table, std::uint32_t d, std::uint32_t e) {
    require(d != e, "ladder identity needs two distinct degrees");
    const StructureMatrix Ap = build_structure_matrix(d, table);
    const StructureMatrix Aq = build_structure_matrix(e, table);
    IdentitySides out;
    out.lhs = cross_jacobian_top_y(table, d, e);
    out.rhs = integer(d) * minor_B(Ap, Aq, d + 1, e) - integer(e) * minor_B(Ap, Aq, d, e + 1);
    return out;
}

}  // namespace planaut

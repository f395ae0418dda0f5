#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planaut/errors.hpp"
#include "planaut/poly.hpp"

namespace planaut {

/// A polynomial map (f, g) of the plane.
struct PlaneMap {
    BivarPoly f;
    BivarPoly g;
    friend bool operator==(const PlaneMap&, const PlaneMap&) = default;
};

struct HomogeneousPair {
    BivarPoly fpart;
    BivarPoly gpart;
};

/// Degrees d_1 < ... < d_n of a map together with its homogeneous pieces.
/// Every listed degree has at least one nonzero piece; there is no degree 0.
class DegreeDecomposition {
public:
    const std::vector<std::uint32_t>& degrees() const noexcept { return degrees_; }
    std::size_t n() const noexcept { return degrees_.size(); }
    bool contains(std::uint32_t d) const { return components_.contains(d); }
    const HomogeneousPair& component(std::uint32_t d) const;
    const std::map<std::uint32_t, HomogeneousPair>& components() const noexcept {
        return components_;
    }
    /// Degrees other than 1, ascending.
    std::vector<std::uint32_t> nonlinear_degrees() const;
    std::uint32_t max_degree() const { return degrees_.empty() ? 0 : degrees_.back(); }

    /// Sum of the pieces; equals the decomposed pair.
    PlaneMap resum() const;

private:
    friend DegreeDecomposition decompose(const BivarPoly& f, const BivarPoly& g);

    std::vector<std::uint32_t> degrees_;
    std::map<std::uint32_t, HomogeneousPair> components_;
};

/// Invertible 2x2 matrix [[m11, m12], [m21, m22]] acting on the target
/// coordinates: (f, g) -> (m11 f + m12 g, m21 f + m22 g).
struct LinearChange {
    Rational m11{1};
    Rational m12{0};
    Rational m21{0};
    Rational m22{1};

    static LinearChange identity() { return {}; }
    Rational determinant() const { return m11 * m22 - m12 * m21; }
    /// Throws SingularLinearPart on zero determinant.
    LinearChange inverse() const;
    bool is_identity() const { return *this == identity(); }
    /// Applies the matrix to a pair of polynomials.
    PlaneMap apply(const BivarPoly& first, const BivarPoly& second) const;
    PlaneMap apply(const PlaneMap& m) const { return apply(m.f, m.g); }
    /// The linear polynomials (m11 x + m12 y, m21 x + m22 y).
    PlaneMap as_map() const { return apply(BivarPoly::x(), BivarPoly::y()); }

    friend bool operator==(const LinearChange&, const LinearChange&) = default;
};

/// Degrees (a, b, p, q) with a + b = p + q but {a, b} != {p, q}.
struct ScatterWitness {
    std::uint32_t a;
    std::uint32_t b;
    std::uint32_t p;
    std::uint32_t q;
    friend bool operator==(const ScatterWitness&, const ScatterWitness&) = default;
};

class ConstantTermError : public Error {
public:
    explicit ConstantTermError(const std::string& which)
        : Error(ErrorCode::ConstantTermPresent, which + " has a nonzero constant term") {}
};

class NotScatteredError : public Error {
public:
    explicit NotScatteredError(ScatterWitness w);
    const ScatterWitness& witness() const noexcept { return witness_; }

private:
    ScatterWitness witness_;
};

/// Splits f and g into homogeneous pieces over the union of their degree
/// supports. Throws ConstantTermError if either has a degree-0 term.
DegreeDecomposition decompose(const BivarPoly& f, const BivarPoly& g);

/// nullopt when every coincidence of pairwise sums (repeats allowed) comes
/// from the same pair; otherwise the lexicographically first violation
/// (a, b, p, q) with a <= b, p <= q and (a, b) < (p, q).
/// Degrees must be distinct; order does not matter.
std::optional<ScatterWitness> find_scatter_violation(std::span<const std::uint32_t> degrees);
inline bool is_scattered(std::span<const std::uint32_t> degrees) {
    return !find_scatter_violation(degrees).has_value();
}

struct NormalizedMap {
    PlaneMap map;        ///< degree-1 part is exactly (x, y)
    LinearChange linear; ///< linear part of the input; input = linear.apply(map)
};

/// The linear part [[coeff_x f, coeff_y f], [coeff_x g, coeff_y g]].
LinearChange linear_part(const BivarPoly& f, const BivarPoly& g);

/// Rewrites (f, g) as L applied to a map whose linear part is the identity.
/// Throws Error{NoLinearPart} when neither has degree-1 terms and
/// Error{SingularLinearPart} when the linear part is singular.
NormalizedMap normalize_linear(const BivarPoly& f, const BivarPoly& g);

}  // namespace planaut

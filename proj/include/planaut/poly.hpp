#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "planaut/rational.hpp"

namespace planaut {

enum class Var { X, Y };

/// Exponent pair of x^xexp * y^yexp.
struct Monomial {
    std::uint32_t xexp = 0;
    std::uint32_t yexp = 0;

    constexpr std::uint32_t degree() const noexcept { return xexp + yexp; }
    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: lower total degree first, then higher power of x first.
/// This is also the printing order.
struct GradedOrder {
    constexpr bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.xexp > b.xexp;
    }
};

/// Sparse polynomial in Q[x, y]. Zero coefficients are never stored, so two
/// polynomials are equal exactly when their term maps are equal.
class BivarPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedOrder>;

    BivarPoly() = default;
    BivarPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    BivarPoly(long constant) : BivarPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static BivarPoly x() { return monomial(1, 1, 0); }
    static BivarPoly y() { return monomial(1, 0, 1); }
    static BivarPoly variable(Var v) { return v == Var::X ? x() : y(); }
    static BivarPoly monomial(const Rational& coefficient, std::uint32_t xexp, std::uint32_t yexp);
    /// Builds from a term map, dropping zero entries.
    static BivarPoly from_terms(TermMap terms);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of x^i y^j (zero when absent).
    Rational coefficient(std::uint32_t xexp, std::uint32_t yexp) const;
    Rational constant_term() const { return coefficient(0, 0); }

    /// Highest total degree of a term; nullopt for the zero polynomial.
    std::optional<std::uint32_t> total_degree() const;
    bool is_homogeneous_of_degree(std::uint32_t d) const;
    /// Sum of the terms of total degree exactly d.
    BivarPoly homogeneous_part(std::uint32_t d) const;
    /// Drops every term of total degree above max_degree.
    BivarPoly truncated(std::uint32_t max_degree) const;

    /// Adds coefficient * x^i y^j in place, keeping the canonical form.
    void add_term(const Rational& coefficient, std::uint32_t xexp, std::uint32_t yexp);

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);
    BivarPoly& operator*=(const BivarPoly& rhs);
    BivarPoly& operator*=(const Rational& scalar);

    friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
    friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
    friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
    friend BivarPoly operator*(BivarPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend BivarPoly operator*(const Rational& lhs, BivarPoly rhs) { return rhs *= lhs; }

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

BivarPoly add(const BivarPoly& p, const BivarPoly& q);
BivarPoly mul(const BivarPoly& p, const BivarPoly& q);
BivarPoly pow(const BivarPoly& p, unsigned exponent);

/// Formal partial derivative.
BivarPoly partial(const BivarPoly& p, Var var);

/// p(u, v): x replaced by u and y by v, fully expanded.
BivarPoly compose(const BivarPoly& p, const BivarPoly& u, const BivarPoly& v);
/// Same as compose but every term of total degree above max_degree is dropped.
BivarPoly compose_truncated(const BivarPoly& p, const BivarPoly& u, const BivarPoly& v,
                            std::uint32_t max_degree);

/// Homogeneous pieces keyed by degree; zero pieces are omitted.
std::map<std::uint32_t, BivarPoly> homogeneous_components(const BivarPoly& p);

}  // namespace planaut

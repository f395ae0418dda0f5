// Substitution p(u, v) over a dense triangular array of GMP integers.
//
// Denominators of p, u and v are cleared up front so the inner loops are
// integer multiply-accumulates; the single division happens at the end.
// The Horner scheme in x only ever multiplies the large accumulator by the
// (small) integer image of u, which keeps the cost near-linear in the size
// of the expanded result.

#include <algorithm>
#include <vector>

#include "planaut/poly.hpp"

namespace planaut {

namespace {

struct IntTerm {
    std::uint32_t xexp;
    std::uint32_t yexp;
    mpz_class coefficient;
};

/// poly = terms / denominator with integer terms.
struct IntegerImage {
    std::vector<IntTerm> terms;
    mpz_class denominator{1};
    std::uint32_t degree = 0;
};

IntegerImage integer_image(const BivarPoly& p) {
    IntegerImage img;
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(img.denominator.get_mpz_t(), img.denominator.get_mpz_t(),
                c.value().get_den_mpz_t());
    }
    img.terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        mpz_class scaled = img.denominator / c.value().get_den() * c.value().get_num();
        img.terms.push_back({m.xexp, m.yexp, std::move(scaled)});
        img.degree = std::max(img.degree, m.degree());
    }
    return img;
}

/// Coefficients of all monomials of total degree <= cap, stored by
/// (total degree, y exponent).
class DensePoly {
public:
    explicit DensePoly(std::uint32_t cap)
        : cap_(cap), coeffs_(static_cast<std::size_t>(cap + 1) * (cap + 2) / 2) {}

    static std::size_t index(std::uint32_t degree, std::uint32_t yexp) {
        return static_cast<std::size_t>(degree) * (degree + 1) / 2 + yexp;
    }

    std::uint32_t cap() const { return cap_; }
    // -1 means zero.
    long degree() const { return degree_; }

    mpz_class& at(std::uint32_t degree, std::uint32_t yexp) { return coeffs_[index(degree, yexp)]; }
    const mpz_class& at(std::uint32_t degree, std::uint32_t yexp) const {
        return coeffs_[index(degree, yexp)];
    }

    void clear() {
        for (long t = 0; t <= degree_; ++t) {
            for (std::uint32_t j = 0; j <= static_cast<std::uint32_t>(t); ++j) {
                at(static_cast<std::uint32_t>(t), j) = 0;
            }
        }
        degree_ = -1;
    }

    void set_one() {
        clear();
        at(0, 0) = 1;
        degree_ = 0;
    }

    void touch(std::uint32_t degree) { degree_ = std::max<long>(degree_, degree); }

    /// this += scalar * other
    void add_scaled(const DensePoly& other, const mpz_class& scalar) {
        if (sgn(scalar) == 0) return;
        for (long t = 0; t <= other.degree_; ++t) {
            const auto tt = static_cast<std::uint32_t>(t);
            for (std::uint32_t j = 0; j <= tt; ++j) {
                const mpz_class& c = other.at(tt, j);
                if (sgn(c) == 0) continue;
                mpz_addmul(at(tt, j).get_mpz_t(), c.get_mpz_t(), scalar.get_mpz_t());
            }
        }
        touch_if_nonempty(other.degree_);
    }

    /// out = this * factor, truncated at out's cap.
    void multiply_into(const IntegerImage& factor, DensePoly& out) const {
        out.clear();
        for (long t = 0; t <= degree_; ++t) {
            const auto tt = static_cast<std::uint32_t>(t);
            for (std::uint32_t j = 0; j <= tt; ++j) {
                const mpz_class& c = at(tt, j);
                if (sgn(c) == 0) continue;
                for (const IntTerm& term : factor.terms) {
                    const std::uint32_t nd = tt + term.xexp + term.yexp;
                    if (nd > out.cap_) continue;
                    mpz_addmul(out.at(nd, j + term.yexp).get_mpz_t(), c.get_mpz_t(),
                               term.coefficient.get_mpz_t());
                    out.touch(nd);
                }
            }
        }
    }

private:
    void touch_if_nonempty(long degree) {
        if (degree >= 0) touch(static_cast<std::uint32_t>(degree));
    }

    std::uint32_t cap_;
    std::vector<mpz_class> coeffs_;
    long degree_ = -1;
};

mpz_class power(const mpz_class& base, unsigned long exponent) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BivarPoly compose_impl(const BivarPoly& p, const BivarPoly& u, const BivarPoly& v,
                       std::optional<std::uint32_t> max_degree) {
    if (p.is_zero()) return {};

    const IntegerImage pi = integer_image(p);
    const IntegerImage ui = integer_image(u);
    const IntegerImage vi = integer_image(v);

    std::uint32_t xdeg = 0;
    std::uint32_t ydeg = 0;
    std::uint32_t bound = 0;
    for (const IntTerm& t : pi.terms) {
        xdeg = std::max(xdeg, t.xexp);
        ydeg = std::max(ydeg, t.yexp);
        bound = std::max(bound, t.xexp * ui.degree + t.yexp * vi.degree);
    }
    if (max_degree) bound = std::min(bound, *max_degree);

    // Integer coefficient rows: rows[i][j] = A_ij, p = sum A_ij x^i y^j / pi.denominator.
    std::vector<std::vector<const mpz_class*>> rows(xdeg + 1,
                                                    std::vector<const mpz_class*>(ydeg + 1));
    for (const IntTerm& t : pi.terms) rows[t.xexp][t.yexp] = &t.coefficient;

    // Q_i = sum_j A_ij * dv^(ydeg - j) * V^j
    std::vector<DensePoly> q(xdeg + 1, DensePoly(bound));
    DensePoly vpow(bound);
    DensePoly scratch(bound);
    vpow.set_one();
    for (std::uint32_t j = 0; j <= ydeg; ++j) {
        if (j > 0) {
            vpow.multiply_into(vi, scratch);
            std::swap(vpow, scratch);
        }
        const mpz_class dv_scale = power(vi.denominator, ydeg - j);
        for (std::uint32_t i = 0; i <= xdeg; ++i) {
            if (rows[i][j] != nullptr) q[i].add_scaled(vpow, *rows[i][j] * dv_scale);
        }
    }

    // acc = sum_i du^(xdeg - i) * U^i * Q_i by Horner in U.
    DensePoly acc = std::move(q[xdeg]);
    for (std::uint32_t step = 1; step <= xdeg; ++step) {
        const std::uint32_t i = xdeg - step;
        acc.multiply_into(ui, scratch);
        std::swap(acc, scratch);
        acc.add_scaled(q[i], power(ui.denominator, step));
    }

    const mpz_class denominator =
        pi.denominator * power(ui.denominator, xdeg) * power(vi.denominator, ydeg);
    BivarPoly::TermMap terms;
    for (long t = 0; t <= acc.degree(); ++t) {
        const auto tt = static_cast<std::uint32_t>(t);
        // Within a degree the graded order puts larger x exponents first.
        for (std::uint32_t j = 0; j <= tt; ++j) {
            const mpz_class& c = acc.at(tt, j);
            if (sgn(c) == 0) continue;
            terms.emplace_hint(terms.end(), Monomial{tt - j, j}, Rational(mpq_class(c, denominator)));
        }
    }
    return BivarPoly::from_terms(std::move(terms));
}

}  // namespace

BivarPoly compose(const BivarPoly& p, const BivarPoly& u, const BivarPoly& v) {
    return compose_impl(p, u, v, std::nullopt);
}

BivarPoly compose_truncated(const BivarPoly& p, const BivarPoly& u, const BivarPoly& v,
                            std::uint32_t max_degree) {
    return compose_impl(p, u, v, max_degree);
}

}  // namespace planaut

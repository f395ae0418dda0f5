#include "planaut/poly.hpp"

#include <algorithm>

namespace planaut {

BivarPoly::BivarPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, constant);
}

BivarPoly BivarPoly::monomial(const Rational& coefficient, std::uint32_t xexp, std::uint32_t yexp) {
    BivarPoly p;
    p.add_term(coefficient, xexp, yexp);
    return p;
}

BivarPoly BivarPoly::from_terms(TermMap terms) {
    std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
    BivarPoly p;
    p.terms_ = std::move(terms);
    return p;
}

Rational BivarPoly::coefficient(std::uint32_t xexp, std::uint32_t yexp) const {
    const auto it = terms_.find(Monomial{xexp, yexp});
    return it == terms_.end() ? Rational() : it->second;
}

std::optional<std::uint32_t> BivarPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

bool BivarPoly::is_homogeneous_of_degree(std::uint32_t d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& kv) { return kv.first.degree() == d; });
}

BivarPoly BivarPoly::homogeneous_part(std::uint32_t d) const {
    BivarPoly out;
    // Terms of degree d are contiguous in the graded order.
    auto it = terms_.lower_bound(Monomial{d, 0});
    for (; it != terms_.end() && it->first.degree() == d; ++it) out.terms_.insert(*it);
    return out;
}

BivarPoly BivarPoly::truncated(std::uint32_t max_degree) const {
    BivarPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.degree() > max_degree) break;
        out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

void BivarPoly::add_term(const Rational& coefficient, std::uint32_t xexp, std::uint32_t yexp) {
    if (coefficient.is_zero()) return;
    const Monomial m{xexp, yexp};
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(c, m.xexp, m.yexp);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(-c, m.xexp, m.yexp);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
    std::map<Monomial, mpq_class, GradedOrder> acc;
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            acc[Monomial{ma.xexp + mb.xexp, ma.yexp + mb.yexp}] += ca.value() * cb.value();
        }
    }
    BivarPoly out;
    for (auto& [m, c] : acc) {
        if (sgn(c) != 0) out.terms_.emplace_hint(out.terms_.end(), m, Rational(std::move(c)));
    }
    return out;
}

BivarPoly add(const BivarPoly& p, const BivarPoly& q) { return p + q; }

BivarPoly mul(const BivarPoly& p, const BivarPoly& q) { return p * q; }

BivarPoly pow(const BivarPoly& p, unsigned exponent) {
    BivarPoly result(1);
    BivarPoly base = p;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

BivarPoly partial(const BivarPoly& p, Var var) {
    BivarPoly out;
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = var == Var::X ? m.xexp : m.yexp;
        if (e == 0) continue;
        if (var == Var::X) {
            out.add_term(c * Rational(static_cast<long>(e)), m.xexp - 1, m.yexp);
        } else {
            out.add_term(c * Rational(static_cast<long>(e)), m.xexp, m.yexp - 1);
        }
    }
    return out;
}

std::map<std::uint32_t, BivarPoly> homogeneous_components(const BivarPoly& p) {
    std::map<std::uint32_t, BivarPoly> out;
    for (const auto& [m, c] : p.terms()) out[m.degree()].add_term(c, m.xexp, m.yexp);
    return out;
}

}  // namespace planaut

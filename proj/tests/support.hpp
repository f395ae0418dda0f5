#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planaut/oracle.hpp"
#include "planaut/parser.hpp"

namespace planaut::testing {

inline BivarPoly P(const std::string& text) { return parse_poly(text); }

/// Small random rational, possibly zero.
inline Rational small_rational(Rng& rng, std::int64_t bound = 9) {
    const std::int64_t num = rng.between(-bound, bound);
    const std::int64_t den = rng.between(1, bound);
    return Rational(num, den);
}

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
inline BivarPoly random_poly(Rng& rng, std::uint32_t max_degree, std::uint32_t terms = 6,
                             bool constant_allowed = true) {
    BivarPoly p;
    for (std::uint32_t k = 0; k < terms; ++k) {
        const auto d = static_cast<std::uint32_t>(rng.between(constant_allowed ? 0 : 1, max_degree));
        const auto i = static_cast<std::uint32_t>(rng.between(0, d));
        p.add_term(small_rational(rng), i, d - i);
    }
    return p;
}

/// Random homogeneous polynomial of degree d (may be zero).
inline BivarPoly random_homogeneous(Rng& rng, std::uint32_t d) {
    BivarPoly p;
    for (std::uint32_t i = 0; i <= d; ++i)
        if (rng.coin()) p.add_term(small_rational(rng), i, d - i);
    return p;
}

inline bool brute_scattered(const std::vector<std::uint32_t>& d) {
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = a; b < d.size(); ++b)
            for (std::size_t p = 0; p < d.size(); ++p)
                for (std::size_t q = p; q < d.size(); ++q)
                    if (d[a] + d[b] == d[p] + d[q] && !(a == p && b == q)) return false;
    return true;
}

/// Random table with arbitrary values over the given degrees.
inline CoefficientTable random_table(Rng& rng, const std::vector<std::uint32_t>& degrees) {
    CoefficientTable t;
    for (std::uint32_t d : degrees) {
        std::vector<Rational> row;
        for (std::uint32_t b = 0; b < d + 2; ++b) row.push_back(small_rational(rng, 30));
        t.set_row(d, std::move(row));
    }
    return t;
}

}  // namespace planaut::testing

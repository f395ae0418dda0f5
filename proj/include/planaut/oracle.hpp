#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "planaut/inverse.hpp"

namespace planaut {

struct SeriesInverseResult {
    BivarPoly X;
    BivarPoly Y;
    std::uint32_t exact_up_to = 0;
    /// No terms appeared in degrees max(deg f, deg g) + 1 .. exact_up_to.
    bool is_polynomial = true;
};

/// Formal inverse of (f, g) solved one homogeneous degree at a time:
/// X(f, g) - x and Y(f, g) - y have no terms of degree <= bound.
/// Needs an invertible linear part and no constant terms.
SeriesInverseResult power_series_inverse(const BivarPoly& f, const BivarPoly& g, std::uint32_t bound);

/// max(deg f, deg g) + 2
std::uint32_t default_series_bound(const BivarPoly& f, const BivarPoly& g);

/// Deterministic random source. The engine sequence is fixed by the
/// standard; the bounded draws below are implemented here so results do not
/// depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    bool coin() { return below(2) == 1; }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Nonzero numerator in [-bound, bound] over a denominator in [1, bound].
Rational random_rational(Rng& rng, std::uint32_t bound);
/// Integer entries in [-bound, bound] with nonzero determinant.
LinearChange random_linear_change(Rng& rng, std::uint32_t bound);

/// Parameters of a normal-form map. `coefficient[d]` is the one free value
/// per non-linear degree: c_{0,d+1} for Case1, c_{d+1,0} for Case2 and
/// Case3. Case3 additionally uses the common ratio r, which fixes
/// c_{d,1} = r (d+1) c_{d+1,0}.
struct NormalForm {
    CaseKind kind = CaseKind::Linear;
    std::vector<std::uint32_t> degrees;  ///< includes 1
    std::map<std::uint32_t, Rational> coefficient;
    std::optional<Rational> ratio;
};

struct GeneratedMap {
    BivarPoly f;
    BivarPoly g;
    /// Inverse built from the same data; not composed-checked.
    InverseWitness expected;
    NormalForm form;
    std::optional<LinearChange> twist;
};

/// Builds the normal-form map and its inverse, then substitutes the twist T
/// into the variables: (f, g) -> (f o T, g o T). The Jacobian becomes det T.
GeneratedMap realize_normal_form(const NormalForm& form, const std::optional<LinearChange>& twist);

struct GeneratorSpec {
    std::vector<std::uint32_t> degrees;  ///< scattered, contains 1
    CaseKind kind = CaseKind::Case1;     ///< Case1, Case2 or Case3
    std::uint32_t coefficient_bound = 100;
    std::optional<LinearChange> linear_twist;
    std::uint64_t seed = 0;
};

/// Throws Error{InvalidSpec} for an unscattered degree set, a set without 1,
/// a zero bound, a singular twist or a non-normal-form case.
GeneratedMap generate_map(const GeneratorSpec& spec);

/// Every scattered subset of {1..max_degree} that contains 1 and has at most
/// max_size elements, in lexicographic order.
std::vector<std::vector<std::uint32_t>> scattered_degree_sets(std::uint32_t max_degree,
                                                              std::uint32_t max_size);

}  // namespace planaut

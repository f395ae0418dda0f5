#include "planaut/oracle.hpp"

#include <algorithm>
#include <limits>

namespace planaut {

namespace {

Rational integer(std::uint32_t v) { return Rational(static_cast<long>(v)); }

std::uint32_t degree_or_zero(const BivarPoly& p) { return p.total_degree().value_or(0); }

[[noreturn]] void invalid_spec(const std::string& message) { throw Error(ErrorCode::InvalidSpec, message); }

}  // namespace

SeriesInverseResult power_series_inverse(const BivarPoly& f, const BivarPoly& g, std::uint32_t bound) {
    if (!f.constant_term().is_zero()) throw ConstantTermError("f");
    if (!g.constant_term().is_zero()) throw ConstantTermError("g");
    const PlaneMap linv = linear_part(f, g).inverse().as_map();
    const std::uint32_t top = std::max(degree_or_zero(f), degree_or_zero(g));

    SeriesInverseResult out;
    out.exact_up_to = bound;
    out.X = linv.f;
    out.Y = linv.g;
    for (std::uint32_t k = 2; k <= bound; ++k) {
        // With G_<k fixed, degree k of G o F is G_k(L x) + [G_<k o F]_k.
        const BivarPoly rx = compose_truncated(out.X, f, g, k).homogeneous_part(k);
        const BivarPoly ry = compose_truncated(out.Y, f, g, k).homogeneous_part(k);
        const BivarPoly gx = -compose(rx, linv.f, linv.g);
        const BivarPoly gy = -compose(ry, linv.f, linv.g);
        if (k > top && !(gx.is_zero() && gy.is_zero())) out.is_polynomial = false;
        out.X += gx;
        out.Y += gy;
    }
    return out;
}

std::uint32_t default_series_bound(const BivarPoly& f, const BivarPoly& g) {
    return std::max(degree_or_zero(f), degree_or_zero(g)) + 2;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "Rng::below(0)");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % n + 1) % n;
    std::uint64_t v = engine_();
    while (v > limit) v = engine_();
    return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over a mixed input
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational random_rational(Rng& rng, std::uint32_t bound) {
    const auto b = static_cast<std::int64_t>(std::max<std::uint32_t>(bound, 1));
    std::int64_t num = 0;
    while (num == 0) num = rng.between(-b, b);
    const std::int64_t den = rng.between(1, b);
    return Rational(static_cast<long>(num), static_cast<long>(den));
}

LinearChange random_linear_change(Rng& rng, std::uint32_t bound) {
    const auto b = static_cast<std::int64_t>(std::max<std::uint32_t>(bound, 1));
    for (;;) {
        LinearChange m{Rational(static_cast<long>(rng.between(-b, b))),
                       Rational(static_cast<long>(rng.between(-b, b))),
                       Rational(static_cast<long>(rng.between(-b, b))),
                       Rational(static_cast<long>(rng.between(-b, b)))};
        if (!m.determinant().is_zero()) return m;
    }
}

GeneratedMap realize_normal_form(const NormalForm& form, const std::optional<LinearChange>& twist) {
    GeneratedMap out;
    out.form = form;
    out.twist = twist;

    BivarPoly f = BivarPoly::x();
    BivarPoly g = BivarPoly::y();
    BivarPoly X = BivarPoly::x();
    BivarPoly Y = BivarPoly::y();
    const auto free_value = [&](std::uint32_t d) -> const Rational& {
        const auto it = form.coefficient.find(d);
        if (it == form.coefficient.end() || it->second.is_zero()) {
            invalid_spec("missing nonzero coefficient for degree " + std::to_string(d));
        }
        return it->second;
    };

    std::optional<BivarPoly> u;
    if (form.kind == CaseKind::Case3) {
        if (!form.ratio || form.ratio->is_zero()) invalid_spec("case 3 needs a nonzero ratio");
        u = BivarPoly::x() + *form.ratio * BivarPoly::y();
    }
    for (const std::uint32_t d : form.degrees) {
        if (d == 1) continue;
        switch (form.kind) {
            case CaseKind::Linear:
                invalid_spec("linear normal form cannot have degree " + std::to_string(d));
                break;
            case CaseKind::Case1: {
                // f_d = (d+1) c_{0,d+1} y^d
                const Rational a = integer(d + 1) * free_value(d);
                f.add_term(a, 0, d);
                X.add_term(-a, 0, d);
                break;
            }
            case CaseKind::Case2: {
                // g_d = -(d+1) c_{d+1,0} x^d
                const Rational a = integer(d + 1) * free_value(d);
                g.add_term(-a, d, 0);
                Y.add_term(a, d, 0);
                break;
            }
            case CaseKind::Case3: {
                const Rational top = integer(d + 1) * free_value(d);  // (d+1) c_{d+1,0}
                const Rational next = *form.ratio * top;              // c_{d,1}
                const BivarPoly ud = pow(*u, d);
                f += next * ud;
                g -= top * ud;
                X -= next * ud;
                Y += top * ud;
                break;
            }
        }
    }

    out.expected.tag = {form.kind, form.kind == CaseKind::Case3 ? form.ratio : std::nullopt};
    if (twist) {
        // (F o T)^{-1} = T^{-1} o F^{-1}
        const PlaneMap t = twist->as_map();
        out.f = compose(f, t.f, t.g);
        out.g = compose(g, t.f, t.g);
        const PlaneMap inv = twist->inverse().apply(X, Y);
        out.expected.X = inv.f;
        out.expected.Y = inv.g;
    } else {
        out.f = std::move(f);
        out.g = std::move(g);
        out.expected.X = std::move(X);
        out.expected.Y = std::move(Y);
    }
    return out;
}

GeneratedMap generate_map(const GeneratorSpec& spec) {
    std::vector<std::uint32_t> degrees = spec.degrees;
    std::sort(degrees.begin(), degrees.end());
    if (degrees.empty() || degrees.front() != 1) invalid_spec("degree set must contain 1");
    if (std::adjacent_find(degrees.begin(), degrees.end()) != degrees.end()) {
        invalid_spec("degrees must be distinct");
    }
    if (const auto w = find_scatter_violation(degrees)) {
        invalid_spec("degree set is not scattered: " + std::to_string(w->a) + " + " + std::to_string(w->b) +
                     " = " + std::to_string(w->p) + " + " + std::to_string(w->q));
    }
    if (spec.coefficient_bound == 0) invalid_spec("coefficient bound must be positive");
    if (spec.linear_twist && spec.linear_twist->determinant().is_zero()) invalid_spec("twist is singular");

    Rng rng(spec.seed);
    NormalForm form;
    form.degrees = degrees;
    if (degrees.size() == 1) {
        form.kind = CaseKind::Linear;
    } else {
        if (spec.kind == CaseKind::Linear) invalid_spec("case must be 1, 2 or 3");
        form.kind = spec.kind;
        if (form.kind == CaseKind::Case3) form.ratio = random_rational(rng, spec.coefficient_bound);
        for (const std::uint32_t d : degrees) {
            if (d != 1) form.coefficient[d] = random_rational(rng, spec.coefficient_bound);
        }
    }
    return realize_normal_form(form, spec.linear_twist);
}

std::vector<std::vector<std::uint32_t>> scattered_degree_sets(std::uint32_t max_degree,
                                                              std::uint32_t max_size) {
    std::vector<std::vector<std::uint32_t>> out;
    if (max_degree < 1 || max_size < 1) return out;
    std::vector<std::uint32_t> current{1};
    // Depth-first over increasing elements; a scattered set stays scattered
    // when elements are removed, so unscattered prefixes are pruned.
    const auto extend = [&](auto&& self, std::uint32_t next) -> void {
        out.push_back(current);
        if (current.size() == max_size) return;
        for (std::uint32_t d = next; d <= max_degree; ++d) {
            current.push_back(d);
            if (is_scattered(current)) self(self, d + 1);
            current.pop_back();
        }
    };
    extend(extend, 2);
    return out;
}

}  // namespace planaut

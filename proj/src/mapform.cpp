#include "planaut/mapform.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace planaut {

namespace {

std::string describe(const ScatterWitness& w) {
    std::ostringstream os;
    os << "degrees are not scattered: " << w.a << " + " << w.b << " = " << w.p << " + " << w.q;
    return os.str();
}

}  // namespace

NotScatteredError::NotScatteredError(ScatterWitness w)
    : Error(ErrorCode::NotScattered, describe(w)), witness_(w) {}

const HomogeneousPair& DegreeDecomposition::component(std::uint32_t d) const {
    const auto it = components_.find(d);
    if (it == components_.end()) {
        throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(d) + " not in decomposition");
    }
    return it->second;
}

std::vector<std::uint32_t> DegreeDecomposition::nonlinear_degrees() const {
    std::vector<std::uint32_t> out;
    std::copy_if(degrees_.begin(), degrees_.end(), std::back_inserter(out),
                 [](std::uint32_t d) { return d != 1; });
    return out;
}

PlaneMap DegreeDecomposition::resum() const {
    PlaneMap out;
    for (const auto& [d, piece] : components_) {
        out.f += piece.fpart;
        out.g += piece.gpart;
    }
    return out;
}

DegreeDecomposition decompose(const BivarPoly& f, const BivarPoly& g) {
    if (!f.constant_term().is_zero()) throw ConstantTermError("f");
    if (!g.constant_term().is_zero()) throw ConstantTermError("g");

    DegreeDecomposition dec;
    for (auto& [d, piece] : homogeneous_components(f)) dec.components_[d].fpart = std::move(piece);
    for (auto& [d, piece] : homogeneous_components(g)) dec.components_[d].gpart = std::move(piece);
    for (const auto& [d, piece] : dec.components_) dec.degrees_.push_back(d);
    return dec;
}

std::optional<ScatterWitness> find_scatter_violation(std::span<const std::uint32_t> degrees) {
    std::vector<std::uint32_t> sorted(degrees.begin(), degrees.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::InvalidArgument, "degrees must be distinct");
    }

    // First two pairs (in lexicographic order) reaching each sum.
    struct Hits {
        std::pair<std::uint32_t, std::uint32_t> first;
        std::optional<std::pair<std::uint32_t, std::uint32_t>> second;
    };
    std::unordered_map<std::uint64_t, Hits> by_sum;
    by_sum.reserve(sorted.size() * (sorted.size() + 1) / 2);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i; j < sorted.size(); ++j) {
            const std::uint64_t s = std::uint64_t{sorted[i]} + sorted[j];
            auto [it, inserted] = by_sum.try_emplace(s, Hits{{sorted[i], sorted[j]}, std::nullopt});
            if (!inserted && !it->second.second) it->second.second = std::pair{sorted[i], sorted[j]};
        }
    }

    std::optional<ScatterWitness> best;
    for (const auto& [sum, hits] : by_sum) {
        if (!hits.second) continue;
        const ScatterWitness w{hits.first.first, hits.first.second, hits.second->first,
                               hits.second->second};
        const auto key = [](const ScatterWitness& x) { return std::tie(x.a, x.b, x.p, x.q); };
        if (!best || key(w) < key(*best)) best = w;
    }
    return best;
}

LinearChange LinearChange::inverse() const {
    const Rational det = determinant();
    if (det.is_zero()) throw Error(ErrorCode::SingularLinearPart, "linear part is singular");
    return {m22 / det, -m12 / det, -m21 / det, m11 / det};
}

PlaneMap LinearChange::apply(const BivarPoly& first, const BivarPoly& second) const {
    return {m11 * first + m12 * second, m21 * first + m22 * second};
}

LinearChange linear_part(const BivarPoly& f, const BivarPoly& g) {
    return {f.coefficient(1, 0), f.coefficient(0, 1), g.coefficient(1, 0), g.coefficient(0, 1)};
}

NormalizedMap normalize_linear(const BivarPoly& f, const BivarPoly& g) {
    if (f.homogeneous_part(1).is_zero() && g.homogeneous_part(1).is_zero()) {
        throw Error(ErrorCode::NoLinearPart, "map has no linear part (1 is not a degree)");
    }
    const LinearChange linear = linear_part(f, g);
    if (linear.determinant().is_zero()) {
        throw Error(ErrorCode::SingularLinearPart,
                    "linear part is singular, so the Jacobian vanishes at the origin");
    }
    return {linear.inverse().apply(f, g), linear};
}

}  // namespace planaut

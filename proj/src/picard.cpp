#include "refdyn/picard.hpp"

#include <optional>
#include <set>

#include "refdyn/factor.hpp"

namespace refdyn {

PicardBasis::PicardBasis(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error("empty Picard basis");
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
        throw Error("Picard basis labels must be distinct");
    }
}

PicardAction::PicardAction(PicardBasis basis, RatMatrix matrix) : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() != basis_.size()) {
        throw Error("Picard action matrix does not match its basis");
    }
    if (!matrix_.is_integral()) throw Error("Picard action must be integral");
}

PicardAction single_reflection_action() {
    return {PicardBasis({"H~", "E~(p)", "F~(p)"}), RatMatrix{{2, 1, 0}, {-3, -2, 0}, {-1, -1, 1}}};
}

PicardAction two_point_action() {
    return {PicardBasis({"H", "P", "Q", "R"}),
            RatMatrix{{4, 2, 0, 1}, {0, 0, 1, 0}, {-6, -3, 0, -2}, {-3, -2, 0, 0}}};
}

PicardAction compose(const PicardAction& a, const PicardAction& b) {
    if (!(a.basis() == b.basis())) throw Error("cannot compose Picard actions on different bases");
    return {a.basis(), a.matrix() * b.matrix()};
}

AlgebraicReal real_spectral_radius(const RatMatrix& m) {
    const UniPoly cp = char_poly(m);
    std::optional<AlgebraicReal> best;
    for (const auto& [f, mult] : factor_over_rationals(cp)) {
        const auto roots = isolate_real_roots(f);
        if (static_cast<int>(roots.size()) != f.degree()) {
            throw Error("characteristic polynomial has non-real roots");
        }
        for (const auto& r : roots) {
            const AlgebraicReal a = r.abs();
            if (!best || compare(a, *best) > 0) best = a;
        }
    }
    return *best;
}

std::vector<AlgebraicReal> degree_tuple_generic(int n) {
    if (n < 1) throw Error("need at least one point");
    const Rational v = n <= 2 ? Rational(1) : pow(Rational(2), static_cast<unsigned>(n));
    const AlgebraicReal a = AlgebraicReal::from_rational(v);
    return {a, a, a};
}

}  // namespace refdyn

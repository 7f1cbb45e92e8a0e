#pragma once

#include <array>
#include <set>
#include <vector>

#include "json.hpp"

#include "refdyn/multipoly.hpp"
#include "refdyn/random.hpp"

namespace refdyn {

/// Cubic X_1 X_0^2 + X_0 q + c in coordinates X_0..X_5 adapted to the point
/// p = (1:0:...:0), with q a quadric and c a cubic in X_1..X_5.
class AdaptedCubic {
public:
    AdaptedCubic(MultiPoly q, MultiPoly c);
    static AdaptedCubic random(Rng& rng, long bound = 5);

    [[nodiscard]] const MultiPoly& q() const { return q_; }
    [[nodiscard]] const MultiPoly& c() const { return c_; }
    /// The defining cubic form F.
    [[nodiscard]] MultiPoly form() const;

private:
    MultiPoly q_;
    MultiPoly c_;
};

nlohmann::json to_json(const AdaptedCubic& ac);
AdaptedCubic adapted_cubic_from_json(const nlohmann::json& j);

/// Rational map of projective space given by homogeneous components of one
/// degree.
class ProjectiveMap {
public:
    explicit ProjectiveMap(std::vector<MultiPoly> components);

    [[nodiscard]] const std::vector<MultiPoly>& components() const { return comps_; }
    [[nodiscard]] int nvars() const { return comps_.front().nvars(); }
    [[nodiscard]] int degree() const;

    /// Divides by the monomial gcd of all components and scales so that the
    /// first term of the first nonzero component has coefficient 1.
    [[nodiscard]] ProjectiveMap content_removed() const;
    /// this o inner.
    [[nodiscard]] ProjectiveMap compose(const ProjectiveMap& inner) const;
    [[nodiscard]] std::vector<Rational> evaluate(std::span<const Rational> point) const;
    /// Same map up to a common polynomial factor: f_i g_j = f_j g_i for all i, j.
    [[nodiscard]] bool projectively_equal(const ProjectiveMap& other) const;

    friend bool operator==(const ProjectiveMap&, const ProjectiveMap&) = default;

private:
    std::vector<MultiPoly> comps_;
};

/// (X_0 X_1 + q, -X_1^2, -X_1 X_2, ..., -X_1 X_5).
ProjectiveMap single_reflection_formula(const AdaptedCubic& ac);
/// F(sigma(X)) == -X_1^3 F(X) exactly.
bool verify_preserves_cubic(const AdaptedCubic& ac, const ProjectiveMap& sigma);
bool verify_preserves_cubic(const AdaptedCubic& ac);
/// sigma(sigma(X)) == -X_1^3 (X_0, ..., X_5) componentwise.
bool verify_involution(const ProjectiveMap& sigma);
bool verify_involution(const AdaptedCubic& ac);

using MonomialSupport = std::set<Exponent>;

/// M_0, M_1, M_2: the quadratic monomials generating I_0, I_1, I_2.
std::array<MonomialSupport, 3> monomial_supports();
bool in_support(const MultiPoly& f, const MonomialSupport& support);

/// Chart with p_0 = e_5, p_1 = e_4, p_2 = e_3 and T_{p_i} = {x_i = 0}; the
/// free quadrics Q_l must lie in the span of M_l.
class TriangleChart {
public:
    TriangleChart(MultiPoly q0, MultiPoly q1, MultiPoly q2);
    /// Every monomial of M_l with a nonzero random coefficient.
    static TriangleChart random(Rng& rng, long bound = 9);
    [[nodiscard]] const MultiPoly& quadric(int l) const { return qs_.at(static_cast<std::size_t>(l)); }

private:
    std::array<MultiPoly, 3> qs_;
};

nlohmann::json to_json(const TriangleChart& chart);
TriangleChart triangle_chart_from_json(const nlohmann::json& j);

/// sigma_{p_0} = (x_0^2 : x_0x_1 : x_0x_2 : x_0x_3 : x_0x_4 : Q_0) and the
/// analogous sigma_{p_1}, sigma_{p_2}.
std::array<ProjectiveMap, 3> triangle_formulas(const TriangleChart& chart);

struct PlaneCheck {
    /// On {x_3 = x_4 = x_5 = 0} the first three components of sigma_{p_l}
    /// are x_l (x_0, x_1, x_2).
    bool first_three_are_products = false;
    /// The plane {x_0 = x_1 = x_2 = 0} spanned by p_0, p_1, p_2 is mapped
    /// into itself (components 0, 1, 2 vanish there).
    bool triangle_plane_invariant = false;
};
PlaneCheck check_triangle_planes(const std::array<ProjectiveMap, 3>& maps);

}  // namespace refdyn

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "refdyn/matrix.hpp"
#include "refdyn/multipoly.hpp"
#include "refdyn/random.hpp"

namespace refdyn {

class CubicHypersurface {
public:
    CubicHypersurface() = default;
    explicit CubicHypersurface(MultiPoly form);
    [[nodiscard]] const MultiPoly& form() const { return form_; }
    [[nodiscard]] int nvars() const { return form_.nvars(); }
    [[nodiscard]] int ambient_dimension() const { return form_.nvars() - 1; }
    [[nodiscard]] Rational evaluate(std::span<const Rational> x) const { return form_.evaluate(x); }
    [[nodiscard]] std::vector<Rational> gradient(std::span<const Rational> x) const;

private:
    MultiPoly form_;
    std::vector<MultiPoly> partials_;
};

/// Projective point with rational coordinates, scaled so that the first
/// nonzero coordinate is 1.
class RationalPoint {
public:
    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> coords);
    [[nodiscard]] const std::vector<Rational>& coords() const { return c_; }
    [[nodiscard]] int size() const { return static_cast<int>(c_.size()); }
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

private:
    std::vector<Rational> c_;
};

nlohmann::json to_json(const RationalPoint& p);
RationalPoint rational_point_from_json(const nlohmann::json& j);
/// Parses "(1, -2/3, 0, 5)".
RationalPoint parse_rational_point(const std::string& text);

/// Third point of the line through p and y on X. With
/// F(s y + t p) = s t (alpha s + beta t) the result is beta y - alpha p.
RationalPoint third_intersection(const CubicHypersurface& x, const RationalPoint& p, const RationalPoint& y);

/// Surface K = l c + x3 Q in P^3 whose plane section x3 = 0 is the line
/// L = {l = 0} plus the conic C = {c = 0}.
struct Configuration {
    std::uint64_t seed = 0;
    MultiPoly line_form;
    MultiPoly conic_form;
    MultiPoly quadric;
    CubicHypersurface surface;
    /// Spanning points of L; line parameters (s : t) mean s u + t v.
    RationalPoint u, v;
    RationalPoint p, q, r, a, b;

    [[nodiscard]] bool on_line(const RationalPoint& x) const;
    [[nodiscard]] bool on_conic(const RationalPoint& x) const;
    /// Parameters (s, t) of x on L; throws when x is not on L.
    [[nodiscard]] std::pair<Rational, Rational> line_params(const RationalPoint& x) const;
    [[nodiscard]] RationalPoint line_point(const Rational& s, const Rational& t) const;
    /// Throws on any violated invariant.
    void validate() const;
};

/// Assembles and validates a configuration from its forms and points.
Configuration make_configuration(std::uint64_t seed, MultiPoly line_form, MultiPoly conic_form, MultiPoly quadric,
                                 RationalPoint u, RationalPoint v, RationalPoint p, RationalPoint q,
                                 RationalPoint r, RationalPoint a, RationalPoint b);

/// Random configuration with small rational data; a, b and r are rational
/// by construction (c is drawn from the quadrics through them).
Configuration build_configuration(std::uint64_t seed);
nlohmann::json to_json(const Configuration& cfg);
Configuration configuration_from_json(const nlohmann::json& j);

/// The involution of L induced by tangent planes: T_x K cuts K in L and a
/// conic C_x, and the result is the second point of C_x on L.
RationalPoint reflect_on_line(const Configuration& cfg, const RationalPoint& x);

/// sigma_c(x) on K for a center c in {'p', 'q', 'r'}; uses reflect_on_line
/// when both the center and x lie on L.
RationalPoint apply_reflection(const Configuration& cfg, char center, const RationalPoint& x);
/// Composition written as in sigma_p sigma_q sigma_r: the last letter acts first.
RationalPoint apply_word(const Configuration& cfg, const std::string& word, const RationalPoint& x);
/// x followed by the image after each letter, letters applied from the
/// right end of `word` and repeated cyclically for `steps` letters.
std::vector<RationalPoint> billiard_orbit(const Configuration& cfg, const RationalPoint& start,
                                          const std::string& word, int steps);

class MobiusMap {
public:
    explicit MobiusMap(RatMatrix m);
    [[nodiscard]] const RatMatrix& matrix() const { return m_; }
    [[nodiscard]] std::pair<Rational, Rational> apply(const std::pair<Rational, Rational>& st) const;
    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

private:
    RatMatrix m_;
};

/// Same point of P^1.
bool same_param(const std::pair<Rational, Rational>& x, const std::pair<Rational, Rational>& y);

struct ReturnMapReport {
    std::string word;
    MobiusMap map{RatMatrix::identity(2)};
    std::vector<std::pair<Rational, Rational>> probes;
    std::vector<std::pair<Rational, Rational>> images;
    /// Probes whose orbit met an indeterminacy event and were skipped.
    int skipped = 0;
    bool fixes_a = false;
    bool fixes_b = false;
};

/// Evaluates the word on probe points of L, fits a Mobius map on three of
/// them and certifies it on the rest; throws when the fit fails.
ReturnMapReport return_map(const Configuration& cfg, const std::string& word = "pqrpqr");

struct AttractorReport {
    /// mu_a / mu_b, where mu_a and mu_b are the eigenvalues at a and b.
    Rational ratio;
    /// 'a', 'b', or 0 when |mu_a| = |mu_b|.
    char attractor = 0;
    [[nodiscard]] bool has_attractor() const { return attractor != 0; }
};

AttractorReport attractor_analysis(const MobiusMap& m, const std::pair<Rational, Rational>& a,
                                   const std::pair<Rational, Rational>& b);

struct BadPoint {
    std::string label;
    RationalPoint point;
    std::pair<Rational, Rational> params;
};

struct BadPointSet {
    /// p'_0, p'_1, p'_2: second points of D'_i on C u L.
    std::vector<RationalPoint> primed;
    std::vector<BadPoint> points;
    std::vector<std::string> collisions;
};

BadPointSet bad_points(const Configuration& cfg);

struct StartReport {
    int start = 0;
    std::optional<int> k0;
    int steps = 0;
    std::string status;
};

struct CheckReport {
    std::string status;
    AttractorReport attractor;
    Rational safe_radius;
    std::vector<StartReport> starts;
    BadPointSet bad;
    [[nodiscard]] bool passed() const { return status == "success"; }
};

/// For each start index i in {0, 1, 2} follows x_k = sigma_k(x_{k+1}) from
/// x_i = p_i, checking x_k against p_{k-1} and p'_{k-1}, until some
/// x_{k0} with k0 = 0 mod 3 lies on L inside the safe radius around the
/// attractor (chart: attractor at 0, repeller at infinity).
CheckReport check_configuration(const Configuration& cfg, int horizon);
nlohmann::json to_json(const CheckReport& rep, int precision);

struct SearchResult {
    std::optional<std::uint64_t> seed;
    std::uint64_t tried = 0;
    std::optional<CheckReport> report;
};

/// Lowest seed in [first, last] whose configuration passes. Runs on a pool
/// of worker threads capped by REFDYN_THREADS; the answer does not depend
/// on the number of workers.
SearchResult search_configuration(std::uint64_t first, std::uint64_t last, int horizon);
/// Worker count: hardware concurrency, capped by REFDYN_THREADS when set.
unsigned worker_count();

}  // namespace refdyn

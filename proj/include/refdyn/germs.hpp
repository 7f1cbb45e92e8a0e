#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "refdyn/random.hpp"
#include "refdyn/reflection_maps.hpp"
#include "refdyn/series.hpp"
#include "refdyn/transitions.hpp"

namespace refdyn {

/// Valuations d_0..d_5 of a curve trait in the triangle chart, with the
/// phase selecting the next reflection sigma_{p_phase}.
struct ValuationVector {
    std::array<Integer, 6> d{};
    int phase = 0;
    friend bool operator==(const ValuationVector&, const ValuationVector&) = default;
    [[nodiscard]] std::vector<Integer> as_vector() const { return {d.begin(), d.end()}; }
    static ValuationVector transverse() { return {{1, 0, 0, 0, 0, 0}, 0}; }
};

/// Each of d_0, d_1, d_2 is >= each of d_3, d_4, d_5.
bool dominance_holds(const ValuationVector& v);

using IndexPair = std::pair<int, int>;

/// Pair of M_phase whose valuation sum the chart is expected to attain.
IndexPair predicted_pair(int phase);

struct StepResult {
    ValuationVector next;
    /// Every monomial x_mu x_nu of M_phase attaining the minimal sum.
    std::vector<IndexPair> minimizers;
    IndexPair predicted;
    /// predicted is among the minimizers.
    bool pair_match = false;
    /// next equals matrix(phase) * d.
    bool matrix_match = false;
};

/// Min-plus valuation update under sigma_{p_phase} followed by
/// normalization; compares with `sys` (the triangle system by default).
/// Throws when the dominance invariant fails on the input.
StepResult valuation_step(const ValuationVector& d, const TransitionSystem& sys);
StepResult valuation_step(const ValuationVector& d);

struct PairReportRow {
    int step = 0;
    ValuationVector before;
    ValuationVector after;
    std::vector<IndexPair> minimizers;
    IndexPair predicted;
    bool match = false;
};

struct PairReport {
    std::vector<PairReportRow> rows;
    /// 1-based step of the first row whose pair or matrix check failed.
    std::optional<int> first_mismatch;
    [[nodiscard]] bool all_match() const { return !first_mismatch; }
};

/// valuation_step from (1,0,0,0,0,0); stops after the first mismatch.
PairReport verify_minimal_pairs(int steps, const TransitionSystem& sys);
PairReport verify_minimal_pairs(int steps);
nlohmann::json to_json(const PairReport& rep);

/// Curve germ (f_0 : ... : f_5) given by truncated power series.
class CurveTrait {
public:
    explicit CurveTrait(std::array<TruncatedSeries, 6> series);
    /// f_0 = t * unit, f_i = unit for i >= 1, units with random coefficients.
    static CurveTrait random_transverse(Rng& rng, int order = kDefaultSeriesOrder, long bound = 9);

    [[nodiscard]] const std::array<TruncatedSeries, 6>& series() const { return series_; }
    [[nodiscard]] const ValuationVector& valuations() const { return vals_; }
    [[nodiscard]] int order() const { return series_.front().order(); }

private:
    std::array<TruncatedSeries, 6> series_;
    ValuationVector vals_;
};

enum class SeriesArithmetic { modp, exact };

struct EvolveOptions {
    SeriesArithmetic arithmetic = SeriesArithmetic::modp;
    /// Relative coefficients at index >= guard are redrawn after each step;
    /// 0 disables redrawing.
    int guard = 32;
    std::uint64_t seed = 1;
};

struct EvolveStep {
    int step = 0;
    ValuationVector observed;
    ValuationVector predicted;
    /// Smallest number of known relative coefficients over the six series.
    int precision = 0;
};

/// Substitutes the trait into sigma_{p_0}, sigma_{p_1}, sigma_{p_2}
/// cyclically, divides by the minimal power of t and records valuations.
/// Each series is stored as t^shift times a unit with `order` known
/// coefficients, so large valuations cost nothing. Throws when the known
/// coefficients run out, or when an observed valuation differs from the
/// min-plus prediction.
std::vector<EvolveStep> series_evolve(const CurveTrait& trait, int steps, const TriangleChart& chart,
                                      const EvolveOptions& options = {});

}  // namespace refdyn

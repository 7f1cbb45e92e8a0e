#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "refdyn/algebraic.hpp"
#include "refdyn/matrix.hpp"
#include "refdyn/number_field.hpp"

namespace refdyn {

/// Periodic sequence of square integer matrices; phase k uses
/// matrices[k mod period].
class TransitionSystem {
public:
    explicit TransitionSystem(std::vector<RatMatrix> matrices);
    [[nodiscard]] int period() const { return static_cast<int>(matrices_.size()); }
    [[nodiscard]] int dimension() const { return matrices_.front().rows(); }
    [[nodiscard]] const RatMatrix& matrix(int phase) const;
    [[nodiscard]] const std::vector<RatMatrix>& matrices() const { return matrices_; }
    /// M_{period-1} ... M_1 M_0.
    [[nodiscard]] RatMatrix cycle_product() const;

private:
    std::vector<RatMatrix> matrices_;
};

struct StateVector {
    std::vector<Integer> v;
    int phase = 0;
    friend bool operator==(const StateVector&, const StateVector&) = default;
};

nlohmann::json to_json(const TransitionSystem& sys);
TransitionSystem transition_system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const StateVector& s);
StateVector state_vector_from_json(const nlohmann::json& j);

// ---- conic and line ----

enum class Reflection { p, q, r };
Reflection parse_reflection(char c);
char reflection_name(Reflection r);

/// One reflection acting on (lambda, gamma, delta): p and q send it to
/// (delta, gamma, 2 delta - lambda), r to (gamma, lambda + delta, 2 delta).
/// Applying p, q, r in turn is conic_line_matrix().
StateVector conic_line_step(const StateVector& s, Reflection refl);
/// The summary table, whose rows are all written in terms of the state at
/// the start of a p, q, r cycle: p -> (delta, gamma, 2 delta - lambda),
/// q -> (2 delta - lambda, gamma, 3 delta - 2 lambda),
/// r -> (gamma, 5 delta - 3 lambda, 6 delta - 4 lambda).
StateVector conic_line_table_row(const StateVector& s, Reflection refl);
/// Matrix of a single conic_line_step.
RatMatrix conic_line_step_matrix(Reflection refl);
/// Transition matrix of a word read left to right as the order of
/// application, e.g. "pqr" gives conic_line_matrix().
RatMatrix conic_line_word_matrix(const std::string& word);
/// [[0,1,0],[-3,0,5],[-4,0,6]].
RatMatrix conic_line_matrix();
TransitionSystem conic_line_system();

// ---- triangle ----

/// Period-3 system with the matrices P_0, P_1, P_2.
TransitionSystem triangle_system();
/// P = P_2 P_1 P_0.
RatMatrix triangle_product();

/// v_0, ..., v_steps with v_{k+1} = matrix(phase of v_k) * v_k.
std::vector<StateVector> iterate(const TransitionSystem& sys, const StateVector& v0, int steps);

// ---- spectral certification ----

struct HypothesisFlags {
    bool simple = false;
    bool positive = false;
    bool dominant = false;
    bool v0_sees_eigenspace = false;
    bool eigenvector_sees_first = false;
    [[nodiscard]] bool all() const {
        return simple && positive && dominant && v0_sees_eigenspace && eigenvector_sees_first;
    }
};

struct SpectralData {
    AlgebraicReal mu1;
    UniPoly factor;
    UniPoly char_poly;
    int multiplicity = 0;
    HypothesisFlags flags;
    /// Right and left mu1-eigenvectors over Q[x]/(factor).
    std::vector<NumberFieldElement> right;
    std::vector<NumberFieldElement> left;
    /// w . v0 as a field element.
    NumberFieldElement pairing;
    /// Human-readable notes on how each flag was decided.
    std::vector<std::string> notes;
};

/// Computes every hypothesis flag without throwing on failed flags.
/// Throws when there is no positive real eigenvalue, or when strict
/// dominance over a complex root can be neither proved nor refuted.
SpectralData analyze_spectrum(const RatMatrix& m, const std::vector<Integer>& v0);
/// analyze_spectrum, then throws if any hypothesis flag is false.
SpectralData dominant_growth(const RatMatrix& m, const std::vector<Integer>& v0);

struct GrowthEstimate {
    /// d_{m+1} / d_m, exact.
    std::vector<Rational> ratios;
    /// d_m^(1/m) for m >= 1, floating point.
    std::vector<double> roots;
};
GrowthEstimate growth_estimate(const std::vector<Integer>& seq);

// ---- degree tuples ----

/// lambda_0, ..., lambda_n with lambda_0 = lambda_n = 1 and every entry >= 1.
class DegreeTuple {
public:
    explicit DegreeTuple(std::vector<AlgebraicReal> values);
    static DegreeTuple from_rationals(const std::vector<Rational>& values);
    [[nodiscard]] const std::vector<AlgebraicReal>& values() const { return values_; }
    [[nodiscard]] int dimension() const { return static_cast<int>(values_.size()) - 1; }
    friend bool operator==(const DegreeTuple& a, const DegreeTuple& b);

private:
    std::vector<AlgebraicReal> values_;
};

/// Tuple of the total space of a fibration over a base with tuple `base`:
/// lambda_k = max(base_k, base_{k-1}).
DegreeTuple fibration_degrees(const DegreeTuple& base);
/// Tuple of the inverse map: the reversal.
DegreeTuple inverse_tuple(const DegreeTuple& t);

struct LogConcavityReport {
    bool holds = true;
    /// One line per interior index with the enclosures or exact reason used.
    std::vector<std::string> certificate;
};
/// Decides lambda_j^2 >= lambda_{j-1} lambda_{j+1} for all interior j.
LogConcavityReport check_log_concavity(const DegreeTuple& t);

}  // namespace refdyn

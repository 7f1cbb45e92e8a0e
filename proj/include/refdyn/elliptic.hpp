#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "refdyn/rational.hpp"

namespace refdyn {

/// Element of the free abelian group on p_1..p_N, modelling points of a
/// very general plane section. Indices are 1-based.
class FormalPoint {
public:
    explicit FormalPoint(std::vector<long long> coeffs);
    /// The symbol p_i.
    static FormalPoint basis(int n, int i);

    [[nodiscard]] int n() const { return static_cast<int>(c_.size()); }
    [[nodiscard]] long long coeff(int i) const;
    [[nodiscard]] const std::vector<long long>& coeffs() const { return c_; }
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const FormalPoint&, const FormalPoint&) = default;

private:
    std::vector<long long> c_;
};

using ReflectionWord = std::vector<int>;

/// sigma_{p_i}(x) = -p_i - x.
FormalPoint reflect(int i, const FormalPoint& x);
/// start followed by the image after each letter, letters applied in order.
std::vector<FormalPoint> orbit(const FormalPoint& start, const ReflectionWord& word);

/// sigma_2..sigma_N, then sigma_1..sigma_N, then sigma_1 (order of
/// application). Throws for even or small N.
ReflectionWord first_return_word(int n);

struct FirstReturnReport {
    ReflectionWord word;
    std::vector<FormalPoint> points;
    bool returns = false;
    /// No point strictly between start and end equals some p_k.
    bool avoids_basis = false;
};
FirstReturnReport check_first_return(int n);

struct AvoidanceHit {
    int start = 0;
    /// Number of reflections applied before the hit.
    int step = 0;
    int reflection = 0;
};

struct AvoidanceReport {
    int n = 0;
    int horizon = 0;
    std::vector<AvoidanceHit> hits;
    /// For each start index i, the p_i-coefficient just after each
    /// application of sigma_i.
    std::vector<std::vector<long long>> own_coeffs;
    /// Even N only: the base value 0, the step c -> c - 1 per period, and a
    /// horizon of at least three periods were all observed, so no hit occurs
    /// at any later time.
    bool drift_certified = false;
    std::vector<std::string> certificate;
    [[nodiscard]] bool passed() const { return hits.empty(); }
};

/// For each start p_i, applies sigma_{i+1}, sigma_{i+2}, ... cyclically for
/// `horizon` steps; before applying sigma_k checks that the point is not p_k.
AvoidanceReport avoidance_check(int n, int horizon);
nlohmann::json to_json(const AvoidanceReport& rep);
nlohmann::json to_json(const FirstReturnReport& rep);

}  // namespace refdyn

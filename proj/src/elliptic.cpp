#include "refdyn/elliptic.hpp"

#include <sstream>

namespace refdyn {

FormalPoint::FormalPoint(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error("formal point needs at least one symbol");
}

FormalPoint FormalPoint::basis(int n, int i) {
    if (i < 1 || i > n) throw Error("basis index out of range");
    std::vector<long long> c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(i - 1)] = 1;
    return FormalPoint(std::move(c));
}

long long FormalPoint::coeff(int i) const {
    if (i < 1 || i > n()) throw Error("symbol index out of range");
    return c_[static_cast<std::size_t>(i - 1)];
}

std::string FormalPoint::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= n(); ++i) {
        const long long c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const long long a = c < 0 ? -c : c;
        if (a != 1) os << a;
        os << "p" << i;
        first = false;
    }
    return first ? "0" : os.str();
}

FormalPoint reflect(int i, const FormalPoint& x) {
    if (i < 1 || i > x.n()) throw Error("reflection index " + std::to_string(i) + " out of range");
    std::vector<long long> c = x.coeffs();
    for (auto& v : c) v = -v;
    c[static_cast<std::size_t>(i - 1)] -= 1;
    return FormalPoint(std::move(c));
}

std::vector<FormalPoint> orbit(const FormalPoint& start, const ReflectionWord& word) {
    std::vector<FormalPoint> out{start};
    for (int i : word) out.push_back(reflect(i, out.back()));
    return out;
}

ReflectionWord first_return_word(int n) {
    if (n < 3) throw Error("first return word needs N >= 3");
    if (n % 2 == 0) throw Error("for even N the orbit of p_1 never returns");
    ReflectionWord w;
    for (int k = 2; k <= n; ++k) w.push_back(k);
    for (int k = 1; k <= n; ++k) w.push_back(k);
    w.push_back(1);
    return w;
}

FirstReturnReport check_first_return(int n) {
    FirstReturnReport rep;
    rep.word = first_return_word(n);
    rep.points = orbit(FormalPoint::basis(n, 1), rep.word);
    rep.returns = rep.points.back() == FormalPoint::basis(n, 1);
    rep.avoids_basis = true;
    for (std::size_t s = 1; s + 1 < rep.points.size(); ++s) {
        for (int k = 1; k <= n; ++k) {
            if (rep.points[s] == FormalPoint::basis(n, k)) rep.avoids_basis = false;
        }
    }
    return rep;
}

AvoidanceReport avoidance_check(int n, int horizon) {
    if (n < 3) throw Error("avoidance check needs N >= 3");
    if (horizon < 1) throw Error("horizon must be at least 1");
    AvoidanceReport rep;
    rep.n = n;
    rep.horizon = horizon;
    bool pattern = n % 2 == 0;
    for (int i = 1; i <= n; ++i) {
        FormalPoint x = FormalPoint::basis(n, i);
        std::vector<long long> own;
        for (int step = 0; step < horizon; ++step) {
            const int k = (i + step) % n + 1;
            if (x == FormalPoint::basis(n, k)) rep.hits.push_back({i, step, k});
            x = reflect(k, x);
            if (k == i) own.push_back(x.coeff(i));
        }
        for (std::size_t m = 0; m < own.size(); ++m) {
            if (own[m] != -static_cast<long long>(m)) pattern = false;
        }
        rep.own_coeffs.push_back(std::move(own));
    }
    if (n % 2 == 0) {
        const bool long_enough = horizon >= 3 * n;
        rep.drift_certified = pattern && long_enough && rep.hits.empty();
        rep.certificate.push_back("base: the p_i-coefficient after the first sigma_i is 0 for every start i: " +
                                  std::string(pattern ? "observed" : "NOT observed"));
        rep.certificate.push_back(
            "step: N - 1 = " + std::to_string(n - 1) +
            " sign flips then sigma_i send c to -1 - (-c) = c - 1 per period: " +
            std::string(pattern ? "consistent with every observed period" : "violated"));
        rep.certificate.push_back(
            "tail: from period 4 on |p_i-coefficient| >= 2, so no basis point can occur; explicit check covers " +
            std::to_string(horizon) + " steps (needs >= " + std::to_string(3 * n) + ")");
    } else {
        rep.certificate.push_back("odd N: no drift certificate; avoidance holds within the horizon only");
    }
    return rep;
}

nlohmann::json to_json(const AvoidanceReport& rep) {
    auto hits = nlohmann::json::array();
    for (const auto& h : rep.hits) hits.push_back({{"start", h.start}, {"step", h.step}, {"reflection", h.reflection}});
    nlohmann::json cert{{"coeffs_after_sigma1", rep.own_coeffs.empty() ? nlohmann::json::array() : nlohmann::json(rep.own_coeffs.front())},
                        {"drift_certified", rep.drift_certified},
                        {"notes", rep.certificate}};
    return {{"N", rep.n}, {"horizon", rep.horizon}, {"hits", hits}, {"certificate", cert}, {"passed", rep.passed()}};
}

nlohmann::json to_json(const FirstReturnReport& rep) {
    auto pts = nlohmann::json::array();
    for (const auto& p : rep.points) pts.push_back(p.to_string());
    return {{"word", rep.word}, {"orbit", pts}, {"returns", rep.returns}, {"avoids_basis", rep.avoids_basis}};
}

}  // namespace refdyn

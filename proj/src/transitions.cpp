#include "refdyn/transitions.hpp"

#include <cmath>
#include <optional>

#include "refdyn/factor.hpp"

namespace refdyn {

TransitionSystem::TransitionSystem(std::vector<RatMatrix> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw Error("transition system needs at least one matrix");
    const int n = matrices_.front().rows();
    for (const auto& m : matrices_) {
        if (!m.is_square() || m.rows() != n) throw Error("transition matrices must be square of one dimension");
        if (!m.is_integral()) throw Error("transition matrices must be integral");
    }
}

const RatMatrix& TransitionSystem::matrix(int phase) const {
    const int k = ((phase % period()) + period()) % period();
    return matrices_[static_cast<std::size_t>(k)];
}

RatMatrix TransitionSystem::cycle_product() const {
    RatMatrix acc = RatMatrix::identity(dimension());
    for (const auto& m : matrices_) acc = m * acc;
    return acc;
}

namespace {

nlohmann::json integer_json(const Integer& z) {
    if (fits_int64(z)) return to_int64(z);
    return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw Error("expected an integer");
}

}  // namespace

nlohmann::json to_json(const TransitionSystem& sys) {
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& m : sys.matrices()) mats.push_back(m.to_int_rows());
    return {{"period", sys.period()}, {"matrices", mats}};
}

TransitionSystem transition_system_from_json(const nlohmann::json& j) {
    std::vector<RatMatrix> mats;
    for (const auto& jm : j.at("matrices")) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& jr : jm) {
            std::vector<Rational> row;
            for (const auto& e : jr) row.emplace_back(integer_from_json(e));
            rows.push_back(std::move(row));
        }
        mats.push_back(RatMatrix::from_rows(rows));
    }
    TransitionSystem sys(std::move(mats));
    if (j.contains("period") && j.at("period").get<int>() != sys.period()) {
        throw Error("period does not match the number of matrices");
    }
    return sys;
}

nlohmann::json to_json(const StateVector& s) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& z : s.v) v.push_back(integer_json(z));
    return {{"phase", s.phase}, {"v", v}};
}

StateVector state_vector_from_json(const nlohmann::json& j) {
    StateVector s;
    s.phase = j.value("phase", 0);
    for (const auto& e : j.at("v")) s.v.push_back(integer_from_json(e));
    return s;
}

Reflection parse_reflection(char c) {
    switch (c) {
        case 'p': return Reflection::p;
        case 'q': return Reflection::q;
        case 'r': return Reflection::r;
        default: throw Error(std::string("unknown reflection '") + c + "'");
    }
}

char reflection_name(Reflection r) {
    switch (r) {
        case Reflection::p: return 'p';
        case Reflection::q: return 'q';
        case Reflection::r: return 'r';
    }
    return '?';
}

namespace {

void check_conic_line_state(const StateVector& s) {
    if (s.v.size() != 3) throw Error("conic and line states are (lambda, gamma, delta)");
    if (s.v[0] < 0 || s.v[1] < 0) throw Error("negative point count in state");
    if (s.v[0] > s.v[2]) throw Error("inconsistent state: lambda exceeds delta");
}

}  // namespace

RatMatrix conic_line_step_matrix(Reflection refl) {
    if (refl == Reflection::r) return RatMatrix{{0, 1, 0}, {1, 0, 1}, {0, 0, 2}};
    return RatMatrix{{0, 0, 1}, {0, 1, 0}, {-1, 0, 2}};
}

StateVector conic_line_step(const StateVector& s, Reflection refl) {
    check_conic_line_state(s);
    return {conic_line_step_matrix(refl).apply(s.v), s.phase + 1};
}

StateVector conic_line_table_row(const StateVector& s, Reflection refl) {
    check_conic_line_state(s);
    const Integer& l = s.v[0];
    const Integer& g = s.v[1];
    const Integer& d = s.v[2];
    switch (refl) {
        case Reflection::p: return {{d, g, Integer(2 * d - l)}, s.phase};
        case Reflection::q: return {{Integer(2 * d - l), g, Integer(3 * d - 2 * l)}, s.phase};
        case Reflection::r: return {{g, Integer(5 * d - 3 * l), Integer(6 * d - 4 * l)}, s.phase};
    }
    throw Error("unknown reflection");
}

RatMatrix conic_line_word_matrix(const std::string& word) {
    RatMatrix acc = RatMatrix::identity(3);
    for (char c : word) acc = conic_line_step_matrix(parse_reflection(c)) * acc;
    return acc;
}

RatMatrix conic_line_matrix() { return RatMatrix{{0, 1, 0}, {-3, 0, 5}, {-4, 0, 6}}; }

TransitionSystem conic_line_system() { return TransitionSystem({conic_line_matrix()}); }

TransitionSystem triangle_system() {
    return TransitionSystem({
        RatMatrix{{2, 0, 0, -1, -1, 0},
                  {1, 1, 0, -1, -1, 0},
                  {1, 0, 1, -1, -1, 0},
                  {1, 0, 0, 0, -1, 0},
                  {1, 0, 0, -1, 0, 0},
                  {0, 0, 0, 0, 0, 0}},
        RatMatrix{{1, 1, 0, -1, 0, -1},
                  {0, 2, 0, -1, 0, -1},
                  {0, 1, 1, -1, 0, -1},
                  {0, 1, 0, 0, 0, -1},
                  {0, 0, 0, 0, 0, 0},
                  {0, 1, 0, -1, 0, 0}},
        RatMatrix{{1, 0, 1, 0, -1, -1},
                  {0, 1, 1, 0, -1, -1},
                  {0, 0, 2, 0, -1, -1},
                  {0, 0, 0, 0, 0, 0},
                  {0, 0, 1, 0, 0, -1},
                  {0, 0, 1, 0, -1, 0}},
    });
}

RatMatrix triangle_product() { return triangle_system().cycle_product(); }

std::vector<StateVector> iterate(const TransitionSystem& sys, const StateVector& v0, int steps) {
    if (steps < 0) throw Error("negative step count");
    if (static_cast<int>(v0.v.size()) != sys.dimension()) throw Error("state dimension does not match system");
    std::vector<StateVector> out{v0};
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k < steps; ++k) {
        const StateVector& cur = out.back();
        out.push_back({sys.matrix(cur.phase).apply(cur.v), (cur.phase + 1) % sys.period()});
    }
    return out;
}

// ---- spectral certification ----

namespace {

// Polynomial whose roots are the squares of the roots of g.
UniPoly graeffe(const UniPoly& g) {
    const UniPoly h = g * g.reflect();
    std::vector<Rational> c;
    for (int i = 0; 2 * i <= h.degree(); ++i) c.push_back(h.coeff(2 * i));
    return UniPoly(std::move(c)).primitive();
}

// Sign of |a_n| T^n - sum_{i<n} |a_i| T^i. A positive sign implies that
// every complex root of g has modulus < T.
int cauchy_sign(const UniPoly& g, const Rational& t) {
    const int n = g.degree();
    Rational acc = abs(g.leading()) * pow(t, static_cast<unsigned>(n));
    Rational tp(1);
    for (int i = 0; i < n; ++i) {
        acc -= abs(g.coeff(i)) * tp;
        tp *= t;
    }
    return acc.sign();
}

constexpr int kGraeffeRounds = 8;

// Decides whether every root of g (which does not vanish at mu) has modulus
// strictly below mu. Returns nullopt when neither proof nor refutation is found.
std::optional<bool> moduli_below(const UniPoly& g, const AlgebraicReal& mu, std::string& note) {
    UniPoly gk = g.primitive();
    for (int k = 0; k <= kGraeffeRounds; ++k) {
        const AlgebraicReal tight = mu.refined(pow(Rational(Integer(1), Integer(2)), static_cast<unsigned>(64 + 8 * k)));
        const Rational& lo = tight.lo();
        if (lo.sign() > 0) {
            const Rational t = pow(lo, 1U << k);
            if (cauchy_sign(gk, t) > 0) {
                note = "roots of " + g.to_string() + " bounded below mu1 after " + std::to_string(k) +
                       " Graeffe squarings";
                return true;
            }
        }
        if (k < kGraeffeRounds) gk = graeffe(gk);
    }
    // Product of moduli is |a_0/a_n|; if it reaches mu1^n some root is too large.
    const AlgebraicReal tight = mu.refined(pow(Rational(Integer(1), Integer(2)), 64));
    const Rational prod = abs(g.coeff(0) / g.leading());
    if (!(prod < pow(tight.hi(), static_cast<unsigned>(g.degree())))) {
        note = "product of root moduli of " + g.to_string() + " is at least mu1^deg";
        return false;
    }
    return std::nullopt;
}

std::vector<NumberFieldElement> eigenvector(const RatMatrix& m, const UniPoly& modulus, std::string& note) {
    const int n = m.rows();
    const NumberFieldElement zero = NumberFieldElement::from_rational(modulus, Rational(0));
    const NumberFieldElement one = NumberFieldElement::from_rational(modulus, Rational(1));
    const NumberFieldElement alpha = NumberFieldElement::generator(modulus);
    std::vector<std::vector<NumberFieldElement>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<NumberFieldElement> row;
        for (int j = 0; j < n; ++j) {
            NumberFieldElement e = NumberFieldElement::from_rational(modulus, m(i, j));
            if (i == j) e = e - alpha;
            row.push_back(e);
        }
        rows.push_back(std::move(row));
    }
    auto ker = kernel_basis(rows, n, zero, one);
    if (ker.empty()) throw Error("no eigenvector found for a root of the characteristic polynomial");
    if (ker.size() > 1) note = "eigenspace has dimension " + std::to_string(ker.size());
    return ker.front();
}

}  // namespace

SpectralData analyze_spectrum(const RatMatrix& m, const std::vector<Integer>& v0) {
    if (!m.is_square() || !m.is_integral()) throw Error("spectral analysis needs a square integral matrix");
    if (static_cast<int>(v0.size()) != m.rows()) throw Error("initial vector does not match matrix");
    const UniPoly cp = char_poly(m);
    const auto factors = factor_over_rationals(cp);

    // mu1: the largest positive real root over all factors.
    std::optional<AlgebraicReal> mu;
    std::size_t own = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (const auto& r : isolate_real_roots(factors[i].first)) {
            if (r.sign() > 0 && (!mu || compare(r, *mu) > 0)) {
                mu = r;
                own = i;
            }
        }
    }
    if (!mu) throw Error("characteristic polynomial has no positive real root");

    SpectralData out{*mu, factors[own].first, cp, factors[own].second, {}, {}, {}, {}, {}};
    out.flags.positive = out.mu1.sign() > 0;
    out.flags.simple = out.multiplicity == 1;
    out.notes.push_back("mu1 is a root of " + out.factor.to_string() + " with multiplicity " +
                        std::to_string(out.multiplicity) + " in the characteristic polynomial");

    bool dominant = out.flags.simple;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const UniPoly& f = factors[i].first;
        const auto real = isolate_real_roots(f);
        for (const auto& r : real) {
            if (i == own && compare(r, out.mu1) == 0) continue;
            if (compare(r.abs(), out.mu1) >= 0) {
                dominant = false;
                out.notes.push_back("real root " + r.enclosure(6) + " of " + f.to_string() + " is not below mu1");
            }
        }
        if (static_cast<int>(real.size()) == f.degree()) continue;
        if (i == own) throw Error("dominance not certifiable: the factor of mu1 has non-real roots");
        std::string note;
        const auto below = moduli_below(f, out.mu1, note);
        if (!below) throw Error("dominance not certifiable for the complex roots of " + f.to_string());
        out.notes.push_back(note);
        if (!*below) dominant = false;
    }
    out.flags.dominant = dominant;

    std::string note;
    out.right = eigenvector(m, out.factor, note);
    if (!note.empty()) out.notes.push_back("right " + note);
    note.clear();
    out.left = eigenvector(m.transpose(), out.factor, note);
    if (!note.empty()) out.notes.push_back("left " + note);

    NumberFieldElement dot = NumberFieldElement::from_rational(out.factor, Rational(0));
    for (std::size_t k = 0; k < v0.size(); ++k) {
        dot = dot + out.left[k] * NumberFieldElement::from_rational(out.factor, Rational(v0[k]));
    }
    out.pairing = dot;
    out.flags.v0_sees_eigenspace = !dot.is_zero();
    out.flags.eigenvector_sees_first = !out.right.front().is_zero();
    return out;
}

SpectralData dominant_growth(const RatMatrix& m, const std::vector<Integer>& v0) {
    SpectralData d = analyze_spectrum(m, v0);
    std::string failed;
    auto need = [&](bool ok, const char* name) {
        if (!ok) failed += std::string(failed.empty() ? "" : ", ") + name;
    };
    need(d.flags.simple, "simple");
    need(d.flags.positive, "positive");
    need(d.flags.dominant, "strictly dominant");
    need(d.flags.v0_sees_eigenspace, "v0 meets the mu1-eigenspace");
    need(d.flags.eigenvector_sees_first, "eigenvector has nonzero first coordinate");
    if (!failed.empty()) throw Error("eigenvalue hypotheses fail: " + failed);
    return d;
}

GrowthEstimate growth_estimate(const std::vector<Integer>& seq) {
    if (seq.empty()) throw Error("growth estimate of an empty sequence");
    GrowthEstimate g;
    for (std::size_t m = 0; m < seq.size(); ++m) {
        if (seq[m] < 1) throw Error("growth estimate needs entries >= 1");
        if (m + 1 < seq.size()) g.ratios.push_back(Rational(seq[m + 1], seq[m]));
        if (m >= 1) {
            long exp2 = 0;
            const double mant = mpz_get_d_2exp(&exp2, seq[m].get_mpz_t());
            const double log_d = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
            g.roots.push_back(std::exp(log_d / static_cast<double>(m)));
        }
    }
    return g;
}

// ---- degree tuples ----

DegreeTuple::DegreeTuple(std::vector<AlgebraicReal> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw Error("degree tuple needs lambda_0 and lambda_n");
    const AlgebraicReal one = AlgebraicReal::from_rational(Rational(1));
    if (compare(values_.front(), one) != 0 || compare(values_.back(), one) != 0) {
        throw Error("degree tuple must start and end with 1");
    }
    for (const auto& v : values_) {
        if (compare(v, one) < 0) throw Error("dynamical degrees are at least 1");
    }
}

DegreeTuple DegreeTuple::from_rationals(const std::vector<Rational>& values) {
    std::vector<AlgebraicReal> a;
    for (const auto& v : values) a.push_back(AlgebraicReal::from_rational(v));
    return DegreeTuple(std::move(a));
}

bool operator==(const DegreeTuple& a, const DegreeTuple& b) {
    if (a.values_.size() != b.values_.size()) return false;
    for (std::size_t i = 0; i < a.values_.size(); ++i) {
        if (compare(a.values_[i], b.values_[i]) != 0) return false;
    }
    return true;
}

DegreeTuple fibration_degrees(const DegreeTuple& base) {
    const auto& b = base.values();
    std::vector<AlgebraicReal> out{b.front()};
    for (std::size_t k = 1; k < b.size(); ++k) {
        out.push_back(compare(b[k], b[k - 1]) >= 0 ? b[k] : b[k - 1]);
    }
    out.push_back(b.back());
    return DegreeTuple(std::move(out));
}

DegreeTuple inverse_tuple(const DegreeTuple& t) {
    std::vector<AlgebraicReal> v(t.values().rbegin(), t.values().rend());
    return DegreeTuple(std::move(v));
}

namespace {

struct Interval {
    Rational lo, hi;
};

Interval mul(const Interval& a, const Interval& b) {
    const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Interval r{c[0], c[0]};
    for (const auto& x : c) {
        if (x < r.lo) r.lo = x;
        if (r.hi < x) r.hi = x;
    }
    return r;
}

std::string show(const Interval& i) {
    return "[" + decimal_floor(i.lo, 12) + ", " + decimal_ceil(i.hi, 12) + "]";
}

constexpr int kMaxRefineBits = 1024;

}  // namespace

LogConcavityReport check_log_concavity(const DegreeTuple& t) {
    LogConcavityReport rep;
    const auto& v = t.values();
    for (std::size_t j = 1; j + 1 < v.size(); ++j) {
        const AlgebraicReal& a = v[j - 1];
        const AlgebraicReal& b = v[j];
        const AlgebraicReal& c = v[j + 1];
        const std::string head = "j=" + std::to_string(j) + ": ";
        if (a.is_rational() && b.is_rational() && c.is_rational()) {
            const Rational lhs = b.rational_value() * b.rational_value();
            const Rational rhs = a.rational_value() * c.rational_value();
            const bool ok = !(lhs < rhs);
            rep.certificate.push_back(head + "exact " + lhs.to_string() + (ok ? " >= " : " < ") + rhs.to_string());
            rep.holds = rep.holds && ok;
            continue;
        }
        if (compare(a, b) == 0 && compare(b, c) == 0) {
            rep.certificate.push_back(head + "equality, all three values are the same algebraic number");
            continue;
        }
        if ((a.is_rational() && a.rational_value() != 0) || (c.is_rational() && c.rational_value() != 0)) {
            const auto [r, other] = a.is_rational() ? std::pair{a.rational_value(), &c} : std::pair{c.rational_value(), &a};
            const auto ord = compare(square(b), scaled(*other, r));
            const bool ok = ord != std::strong_ordering::less;
            rep.certificate.push_back(head + "exact comparison of the square with the product: " +
                                      (ord == std::strong_ordering::equal ? "equal" : ok ? "greater" : "smaller"));
            rep.holds = rep.holds && ok;
            continue;
        }
        bool decided = false;
        for (int bits = 32; bits <= kMaxRefineBits && !decided; bits *= 2) {
            const Rational eps = pow(Rational(Integer(1), Integer(2)), static_cast<unsigned>(bits));
            const AlgebraicReal ra = a.refined(eps), rb = b.refined(eps), rc = c.refined(eps);
            const Interval ib{rb.lo(), rb.hi()};
            const Interval lhs = mul(ib, ib);
            const Interval rhs = mul({ra.lo(), ra.hi()}, {rc.lo(), rc.hi()});
            if (rhs.hi < lhs.lo) {
                rep.certificate.push_back(head + "square " + show(lhs) + " > product " + show(rhs));
                decided = true;
            } else if (lhs.hi < rhs.lo) {
                rep.certificate.push_back(head + "square " + show(lhs) + " < product " + show(rhs));
                rep.holds = false;
                decided = true;
            }
        }
        if (!decided) throw Error("log-concavity undecidable at maximum refinement for index " + std::to_string(j));
    }
    return rep;
}

}  // namespace refdyn

#include "refdyn/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace refdyn {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_descending(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    std::reverse(v.begin(), v.end());
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

std::vector<Integer> UniPoly::integer_coeffs() const {
    Integer l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> z;
    z.reserve(c_.size());
    Integer g = 0;
    for (const auto& c : c_) {
        Integer v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        z.push_back(v);
    }
    if (g == 0) return z;
    if (!z.empty() && z.back() < 0) g = -g;
    for (auto& v : z) v /= g;
    return z;
}

UniPoly UniPoly::primitive() const {
    std::vector<Rational> v;
    for (const auto& z : integer_coeffs()) v.emplace_back(z);
    return UniPoly(std::move(v));
}

bool UniPoly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_integer(); });
}

UniPoly UniPoly::reflect() const {
    auto v = c_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::compose(const UniPoly& q) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= q;
        acc += UniPoly::constant(*it);
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag.to_string();
        } else {
            if (!unit) os << mag.to_string() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    const Rational lead_inv = Rational(1) / b.leading();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
        quo[static_cast<std::size_t>(k - db)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

bool divides(const UniPoly& b, const UniPoly& a) { return divmod(a, b).second.is_zero(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        // Keep intermediate coefficients small.
        x = std::move(y);
        y = r.is_zero() ? r : r.primitive();
    }
    return x.monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_div(a * b, gcd(a, b)).monic();
}

UniPoly pow(const UniPoly& p, unsigned exponent) {
    UniPoly result = UniPoly::constant(Rational(1));
    for (unsigned k = 0; k < exponent; ++k) result *= p;
    return result;
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.degree() <= 0) return p.primitive();
    return exact_div(p, gcd(p, p.derivative())).primitive();
}

std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    const UniPoly f = p.monic();
    UniPoly a = gcd(f, f.derivative());
    UniPoly b = exact_div(f, a);
    UniPoly c = exact_div(f.derivative(), a);
    UniPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        const UniPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.primitive(), i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    return out;
}

Rational root_bound(const UniPoly& p) {
    if (p.degree() <= 0) return Rational(1);
    const Rational lead = abs(p.leading());
    Rational m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(p.coeff(k)) / lead);
    return Rational(1) + m;
}

}  // namespace refdyn

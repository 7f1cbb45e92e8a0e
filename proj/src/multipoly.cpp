#include "refdyn/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace refdyn {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw Error("variable index out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(Rational(1), std::move(e));
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponent exp) {
    MultiPoly p(static_cast<int>(exp.size()));
    p.add_term(exp, c);
    return p;
}

Rational MultiPoly::coeff(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& exp, const Rational& c) {
    if (static_cast<int>(exp.size()) != nvars_) throw Error("exponent length does not match variable count");
    if (std::any_of(exp.begin(), exp.end(), [](int e) { return e < 0; })) throw Error("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

bool MultiPoly::is_homogeneous() const { return is_zero() || is_homogeneous(degree()); }

bool MultiPoly::avoids(std::span<const int> indices) const {
    for (const auto& [e, c] : terms_) {
        for (int i : indices) {
            if (i >= 0 && i < nvars_ && e[static_cast<std::size_t>(i)] != 0) return false;
        }
    }
    return true;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw Error("evaluation point has wrong dimension");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) m *= pow(point[i], static_cast<unsigned>(e[i]));
        }
        acc += m;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> values) const {
    if (static_cast<int>(values.size()) != nvars_) throw Error("substitution needs one value per variable");
    if (values.empty()) return *this;
    const int target = values.front().nvars();
    for (const auto& v : values) {
        if (v.nvars() != target) throw Error("substituted polynomials disagree on variable count");
    }
    // Cache powers of each substituted value.
    std::vector<std::vector<MultiPoly>> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) powers[i].push_back(constant(target, Rational(1)));
    auto power = [&](std::size_t i, int k) -> const MultiPoly& {
        while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * values[i]);
        return powers[i][static_cast<std::size_t>(k)];
    };
    MultiPoly result(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly m = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) m = m * power(i, e[i]);
        }
        result += m;
    }
    return result;
}

MultiPoly MultiPoly::specialize(int index, const Rational& value) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        const int k = f[static_cast<std::size_t>(index)];
        f[static_cast<std::size_t>(index)] = 0;
        out.add_term(f, c * pow(value, static_cast<unsigned>(k)));
    }
    return out;
}

MultiPoly MultiPoly::derivative(int index) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(index)];
        if (k == 0) continue;
        Exponent f = e;
        f[static_cast<std::size_t>(index)] = k - 1;
        out.add_term(f, c * Rational(k));
    }
    return out;
}

Exponent MultiPoly::monomial_content() const {
    if (terms_.empty()) return Exponent(static_cast<std::size_t>(nvars_), 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

MultiPoly MultiPoly::divide_monomial(const Exponent& exp) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) {
            f[i] -= exp[i];
            if (f[i] < 0) throw Error("monomial does not divide polynomial");
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent tuples first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool constant_term = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);
        bool need_star = false;
        if (mag != Rational(1) || constant_term) {
            os << mag.to_string();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
    MultiPoly r = MultiPoly::constant(p.nvars(), Rational(1));
    for (unsigned k = 0; k < exponent; ++k) r = r * p;
    return r;
}

TruncatedSeries substitute_series(const MultiPoly& f, std::span<const TruncatedSeries> args) {
    if (static_cast<int>(args.size()) != f.nvars()) throw Error("series substitution: arity mismatch");
    if (args.empty()) throw Error("series substitution needs at least one argument");
    const int order = args.front().order();
    for (const auto& a : args) {
        if (a.order() != order) throw Error("series substitution: truncation orders differ");
    }
    std::vector<std::vector<TruncatedSeries>> powers(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        powers[i].push_back(TruncatedSeries::constant(Rational(1), order));
    }
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (const auto& [e, c] : f.terms()) {
        TruncatedSeries m = TruncatedSeries::constant(c, order);
        for (std::size_t i = 0; i < e.size(); ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * args[i]);
            if (e[i] != 0) m = m * powers[i][static_cast<std::size_t>(e[i])];
        }
        acc = acc + m;
    }
    return acc;
}

nlohmann::json to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", e}, {"coef", c.to_fraction_string()}});
    }
    return {{"vars", p.nvars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
    try {
        MultiPoly p(j.at("vars").get<int>());
        for (const auto& t : j.at("terms")) {
            const auto& coef = t.at("coef");
            const Rational c = coef.is_string() ? Rational::parse(coef.get<std::string>())
                                                : Rational(coef.get<long>());
            p.add_term(t.at("exp").get<Exponent>(), c);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed polynomial JSON: ") + e.what());
    }
}

}  // namespace refdyn

#include "refdyn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "refdyn/billiards.hpp"
#include "refdyn/elliptic.hpp"
#include "refdyn/germs.hpp"
#include "refdyn/matrix.hpp"
#include "refdyn/picard.hpp"
#include "refdyn/reflection_maps.hpp"
#include "refdyn/transitions.hpp"

namespace refdyn {

namespace {

using nlohmann::json;

Rational ten_to_minus(int digits) { return Rational(1) / pow(Rational(10), static_cast<unsigned>(digits)); }

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

json integers_json(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

StateVector state(std::vector<Integer> v) { return {std::move(v), 0}; }

std::string decimal_display(const AlgebraicReal& a, int precision) {
    if (a.is_rational()) return a.rational_value().to_string();
    return decimal_floor(a.refined(ten_to_minus(precision)).lo(), precision) + "...";
}

std::string tuple_display(const std::vector<std::string>& entries) {
    std::string s = "(";
    for (std::size_t k = 0; k < entries.size(); ++k) s += (k ? ", " : "") + entries[k];
    return s + ")";
}

void certify_tuple(RunReport& rep, const std::string& label, const DegreeTuple& t) {
    const LogConcavityReport lc = check_log_concavity(t);
    rep.certify(label + " is log-concave", lc.holds);
    rep.certify(label + " equals its inverse tuple", inverse_tuple(t) == t);
}

void certify_flags(RunReport& rep, const SpectralData& sd) {
    rep.certify("dominant root is simple", sd.flags.simple);
    rep.certify("dominant root is positive", sd.flags.positive);
    rep.certify("dominant root strictly exceeds the other roots in absolute value", sd.flags.dominant);
    rep.certify("start vector pairs nontrivially with the left eigenvector", sd.flags.v0_sees_eigenspace);
    rep.certify("right eigenvector has a nonzero first entry", sd.flags.eigenvector_sees_first);
}

json spectral_json(const SpectralData& sd, int precision) {
    return {{"mu1", value_json(sd.mu1, precision)},
            {"factor", sd.factor.to_string()},
            {"char_poly", sd.char_poly.to_string()},
            {"notes", sd.notes}};
}

/// Degree tuple (1, mu, lambda_2, mu, 1) with lambda_2 open: log-concavity
/// only gives mu <= lambda_2 <= mu^2, and both ends are checked.
void open_middle_tuple(RunReport& rep, const AlgebraicReal& mu, int precision) {
    const AlgebraicReal one = AlgebraicReal::from_rational(Rational(1));
    const AlgebraicReal mu2 = square(mu);
    rep.outputs["lambda_1"] = value_json(mu, precision);
    rep.outputs["lambda_3"] = value_json(mu, precision);
    rep.outputs["lambda_2"] = {{"status", "open"},
                               {"lower", value_json(mu, precision)},
                               {"upper", value_json(mu2, precision)}};
    const std::string m = decimal_display(mu, precision);
    rep.outputs["tuple"] = tuple_display({"1", m, "?", m, "1"});
    certify_tuple(rep, "tuple with lambda_2 = lambda_1", DegreeTuple({one, mu, mu, mu, one}));
    certify_tuple(rep, "tuple with lambda_2 = lambda_1^2", DegreeTuple({one, mu, mu2, mu, one}));
}

std::string ratio_cell(const Integer& num, const Integer& den, int precision) {
    if (den == 0) return "";
    return decimal_floor(Rational(num, den), precision);
}

int or_default(int value, int fallback) { return value < 0 ? fallback : value; }

RunReport reproduce_general(const CliOptions& opt) {
    if (opt.n < 1) throw Error("reproduce general needs --n N with N >= 1");
    const int horizon = or_default(opt.horizon, 200);
    RunReport rep;
    rep.inputs = {{"n", opt.n}, {"horizon", horizon}};
    const auto lam = degree_tuple_generic(opt.n);
    const AlgebraicReal one = AlgebraicReal::from_rational(Rational(1));
    const DegreeTuple t({one, lam[0], lam[1], lam[2], one});
    std::vector<std::string> shown;
    json values = json::array();
    for (const auto& v : t.values()) {
        shown.push_back(decimal_display(v, opt.precision));
        values.push_back(value_json(v, opt.precision));
    }
    rep.outputs["tuple"] = tuple_display(shown);
    rep.outputs["values"] = values;

    const UniPoly x_minus_1 = UniPoly::from_descending({1, -1});
    if (opt.n <= 2) {
        const PicardAction act = opt.n == 1 ? single_reflection_action() : two_point_action();
        const RatMatrix& m = act.matrix();
        const UniPoly cp = char_poly(m);
        rep.outputs["picard"] = {{"basis", act.basis().labels()},
                                 {"matrix", matrix_json(m)},
                                 {"char_poly", cp.to_string()}};
        if (opt.n == 1) {
            rep.certify("reflection action squares to the identity", m * m == RatMatrix::identity(m.rows()));
            rep.certify("char poly is (x-1)^2(x+1)", cp == pow(x_minus_1, 2) * UniPoly::from_descending({1, 1}));
        } else {
            rep.certify("char poly is (x-1)^4", cp == pow(x_minus_1, 4));
        }
        rep.certify("spectral radius equals lambda_1", real_spectral_radius(m) == lam[0]);
    } else {
        const AvoidanceReport av = avoidance_check(opt.n, horizon);
        rep.outputs["elliptic"] = to_json(av);
        rep.certify("no orbit meets a center within the horizon", av.passed());
        if (opt.n % 2 == 0) {
            rep.certify("drift certificate extends avoidance beyond the horizon", av.drift_certified);
        } else {
            const FirstReturnReport fr = check_first_return(opt.n);
            rep.outputs["first_return"] = to_json(fr);
            rep.certify("p_1 returns after 2N reflections without meeting a center", fr.returns && fr.avoids_basis);
        }
    }
    certify_tuple(rep, "tuple", t);
    return rep;
}

RunReport reproduce_conic_line(const CliOptions& opt) {
    RunReport rep;
    const RatMatrix m = conic_line_matrix();
    const std::vector<Integer> v0{0, 0, 1};
    rep.inputs = {{"matrix", matrix_json(m)}, {"start", integers_json(v0)}};
    const SpectralData sd = analyze_spectrum(m, v0);
    rep.outputs["spectrum"] = spectral_json(sd, opt.precision);
    certify_flags(rep, sd);
    rep.certify("char poly is (x-1)(x^2-5x-2)",
                sd.char_poly == UniPoly::from_descending({1, -1}) * UniPoly::from_descending({1, -5, -2}));

    const int steps = 12;
    const auto orbit = iterate(conic_line_system(), state(v0), steps);
    std::vector<Integer> delta;
    for (const auto& s : orbit) delta.push_back(s.v[2]);
    rep.outputs["delta_sequence"] = integers_json(delta);
    const std::vector<Integer> expected{1, 6, 36, 196, 1056};
    rep.certify("delta sequence begins 1, 6, 36, 196, 1056",
                std::equal(expected.begin(), expected.end(), delta.begin()));
    const GrowthEstimate ge = growth_estimate(delta);
    json ratios = json::array();
    for (const auto& r : ge.ratios) ratios.push_back(decimal_floor(r, opt.precision));
    rep.outputs["delta_ratios"] = ratios;
    const AlgebraicReal fine = sd.mu1.refined(ten_to_minus(12));
    const Rational last = ge.ratios.back();
    const Rational tol = ten_to_minus(6);
    rep.certify("ratio at step 12 is within 1e-6 of the dominant root",
                last - fine.hi() < tol && fine.lo() - last < tol);
    open_middle_tuple(rep, sd.mu1, opt.precision);
    return rep;
}

RatMatrix displayed_triangle_product() {
    return RatMatrix{{3, 1, 1, -3, -2, 0}, {2, 2, 1, -3, -2, 0}, {2, 1, 2, -3, -2, 0},
                     {0, 0, 0, 0, 0, 0},   {1, 0, 1, -1, -1, 0}, {1, 1, 1, -2, -1, 0}};
}

UniPoly stated_triangle_polynomial() {
    return pow(UniPoly::x(), 2) * pow(UniPoly::from_descending({1, -1}), 2) * UniPoly::from_descending({1, -4, -1});
}

RunReport reproduce_triangle(const CliOptions& opt) {
    RunReport rep;
    const int steps = 60, draws = 10, series_steps = 30;
    rep.inputs = {{"seed", opt.seed}, {"chain_steps", steps}, {"series_draws", draws}, {"series_steps", series_steps}};
    const TransitionSystem sys = triangle_system();
    const RatMatrix p = triangle_product();
    rep.outputs["P"] = matrix_json(p);
    rep.certify("P2 P1 P0 equals the displayed P", p == displayed_triangle_product());

    const UniPoly minimal = minimal_poly(p);
    const UniPoly stated = stated_triangle_polynomial();
    rep.outputs["minimal_polynomial"] = minimal.to_string();
    rep.outputs["char_poly"] = char_poly(p).to_string();
    rep.outputs["stated_polynomial"] = stated.to_string();
    rep.outputs["stated_polynomial_is_minimal"] = minimal == stated;
    rep.certify("stated polynomial annihilates P", evaluate(stated, p) == RatMatrix(6, 6));

    const std::vector<Integer> e0{1, 0, 0, 0, 0, 0};
    const SpectralData sd = analyze_spectrum(p, e0);
    rep.outputs["spectrum"] = spectral_json(sd, opt.precision);
    certify_flags(rep, sd);

    const PairReport pairs = verify_minimal_pairs(steps, sys);
    rep.outputs["minimal_pairs"] = {{"steps", steps},
                                    {"all_match", pairs.all_match()},
                                    {"first_mismatch", pairs.first_mismatch ? json(*pairs.first_mismatch) : json()}};
    rep.certify("minimal pairs match the residue predictions for 60 steps", pairs.all_match());

    const auto orbit = iterate(sys, state(e0), steps);
    ValuationVector d = ValuationVector::transverse();
    bool chain_ok = true;
    for (int k = 0; k < steps; ++k) {
        const StepResult st = valuation_step(d, sys);
        chain_ok = chain_ok && st.matrix_match && st.next.as_vector() == orbit[static_cast<std::size_t>(k + 1)].v;
        d = st.next;
    }
    rep.outputs["valuation_chain_end"] = integers_json(d.as_vector());
    rep.certify("valuation chain equals the A_i products for 60 steps", chain_ok);

    Rng rng(opt.seed);
    json series = json::array();
    bool series_ok = true;
    for (int draw = 0; draw < draws; ++draw) {
        const TriangleChart chart = TriangleChart::random(rng);
        const CurveTrait trait = CurveTrait::random_transverse(rng);
        EvolveOptions eo;
        eo.seed = opt.seed + static_cast<std::uint64_t>(draw) + 1;
        try {
            const auto ev = series_evolve(trait, series_steps, chart, eo);
            series.push_back({{"draw", draw}, {"agrees", true}, {"final_precision", ev.back().precision}});
        } catch (const Error& e) {
            series_ok = false;
            series.push_back({{"draw", draw}, {"agrees", false}, {"error", e.what()}});
        }
    }
    rep.outputs["series_cross_check"] = series;
    rep.certify("series valuations agree with the min-plus chain for 10 draws x 30 steps", series_ok);

    open_middle_tuple(rep, sd.mu1, opt.precision);
    return rep;
}

Configuration load_configuration(const CliOptions& opt) {
    if (opt.config_file.empty()) return build_configuration(opt.seed);
    std::ifstream in(opt.config_file);
    if (!in) throw Error("cannot open configuration file " + opt.config_file);
    return configuration_from_json(json::parse(in));
}

void add_check(RunReport& rep, const Configuration& cfg, const CheckReport& check, int precision) {
    rep.outputs["check"] = to_json(check, precision);
    const ReturnMapReport rm = return_map(cfg);
    rep.outputs["return_map"] = {{"word", rm.word},
                                 {"matrix", matrix_json(rm.map.matrix())},
                                 {"fixes_a", rm.fixes_a},
                                 {"fixes_b", rm.fixes_b},
                                 {"skipped_probes", rm.skipped}};
    rep.certify("return map fixes a and b", rm.fixes_a && rm.fixes_b);
    rep.certify("configuration passes the orbit check", check.passed());
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(' ', used) != std::string::npos) throw Error("");
        } catch (const std::exception&) {
            throw Error("expected a comma separated list of integers, got '" + text + "'");
        }
    }
    return out;
}

Table growth_table(const std::vector<StateVector>& orbit, int period, int precision) {
    Table t;
    t.columns = {"step", "phase"};
    const std::size_t dim = orbit.front().v.size();
    for (std::size_t i = 0; i < dim; ++i) t.columns.push_back("v" + std::to_string(i));
    t.columns.push_back("ratio");
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        std::vector<std::string> row{std::to_string(k), std::to_string(orbit[k].phase)};
        for (const auto& x : orbit[k].v) row.push_back(to_string(x));
        const std::size_t per = static_cast<std::size_t>(period);
        row.push_back(k >= per ? ratio_cell(orbit[k].v.back(), orbit[k - per].v.back(), precision) : "");
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    const auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw Error("seed range must look like a..b, got '" + text + "'");
        return static_cast<std::uint64_t>(std::stoull(s));
    };
    if (dots == std::string::npos) throw Error("seed range must look like a..b, got '" + text + "'");
    const auto a = number(text.substr(0, dots));
    const auto b = number(text.substr(dots + 2));
    if (b < a) throw Error("empty seed range " + text);
    return {a, b};
}

bool RunReport::passed() const {
    return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.second; });
}

json RunReport::to_json() const {
    json certs = json::array();
    for (const auto& [name, holds] : certificates) certs.push_back({{"name", name}, {"holds", holds}});
    json j{{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"certificates", certs},
           {"passed", passed()}};
    if (table) j["table"] = {{"columns", table->columns}, {"rows", table->rows}};
    return j;
}

std::string RunReport::to_csv() const {
    if (!table) throw Error("'" + command + "' has no sequence output; use --format json");
    std::string s;
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) s += (k ? "," : "") + cells[k];
        s += "\n";
    };
    line(table->columns);
    for (const auto& r : table->rows) line(r);
    return s;
}

json value_json(const AlgebraicReal& a, int precision) {
    if (a.is_rational()) {
        const Rational v = a.rational_value();
        return {{"polynomial", a.poly().to_string()}, {"exact", v.to_string()}, {"enclosure", {v.to_string(), v.to_string()}},
                {"width", "0"}};
    }
    // Refining below 10^-(precision+1) keeps the outward-rounded bounds within 10^-precision.
    const AlgebraicReal r = a.refined(ten_to_minus(precision + 1));
    const std::string lo = decimal_floor(r.lo(), precision + 1);
    const std::string hi = decimal_ceil(r.hi(), precision + 1);
    return {{"polynomial", r.poly().to_string()},
            {"enclosure", {lo, hi}},
            {"width", decimal_ceil(r.width(), precision + 3)}};
}

RunReport cmd_reproduce(const std::string& target, const CliOptions& opt) {
    RunReport rep;
    if (target == "general") rep = reproduce_general(opt);
    else if (target == "conic-line") rep = reproduce_conic_line(opt);
    else if (target == "triangle") rep = reproduce_triangle(opt);
    else throw Error("unknown reproduce target '" + target + "'");
    rep.command = "reproduce " + target;
    rep.inputs["precision"] = opt.precision;
    return rep;
}

RunReport cmd_billiard(const std::string& sub, const CliOptions& opt) {
    RunReport rep;
    rep.command = "billiard " + sub;
    if (sub == "build") {
        const Configuration cfg = load_configuration(opt);
        rep.inputs = {{"seed", opt.seed}};
        rep.outputs["configuration"] = to_json(cfg);
        bool valid = true;
        try {
            cfg.validate();
        } catch (const Error&) {
            valid = false;
        }
        rep.certify("configuration invariants hold", valid);
    } else if (sub == "orbit") {
        const Configuration cfg = load_configuration(opt);
        const std::string word = opt.word.empty() ? "pqrpqr" : opt.word;
        const int steps = or_default(opt.steps, static_cast<int>(word.size()));
        const RationalPoint start = opt.start.empty() ? cfg.line_point(Rational(1), Rational(1)) : parse_rational_point(opt.start);
        rep.inputs = {{"seed", opt.seed}, {"word", word}, {"steps", steps}, {"start", to_json(start)}};
        const auto pts = billiard_orbit(cfg, start, word, steps);
        Table t;
        t.columns = {"step", "phase"};
        for (int i = 0; i < start.size(); ++i) t.columns.push_back("x" + std::to_string(i));
        bool on_surface = true;
        const std::size_t len = word.size();
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const std::string letter = k == 0 ? "" : std::string(1, word[len - 1 - (k - 1) % len]);
            std::vector<std::string> row{std::to_string(k), letter};
            for (const auto& c : pts[k].coords()) row.push_back(c.to_string());
            t.rows.push_back(std::move(row));
            on_surface = on_surface && cfg.surface.evaluate(pts[k].coords()) == 0;
        }
        rep.table = std::move(t);
        rep.certify("every orbit point lies on the surface", on_surface);
    } else if (sub == "check") {
        const int horizon = or_default(opt.horizon, 300);
        rep.inputs = {{"horizon", horizon}};
        if (opt.seed_range) {
            const auto [first, last] = *opt.seed_range;
            rep.inputs["seed_range"] = {first, last};
            const SearchResult res = search_configuration(first, last, horizon);
            rep.outputs["seeds_tried"] = res.tried;
            if (res.seed) {
                rep.outputs["seed"] = *res.seed;
                const Configuration cfg = build_configuration(*res.seed);
                rep.outputs["configuration"] = to_json(cfg);
                add_check(rep, cfg, *res.report, opt.precision);
            } else {
                rep.outputs["seed"] = nullptr;
                rep.certify("a seed in the range passes", false);
            }
        } else {
            const Configuration cfg = load_configuration(opt);
            rep.inputs["seed"] = cfg.seed;
            add_check(rep, cfg, check_configuration(cfg, horizon), opt.precision);
        }
    } else {
        throw Error("unknown billiard subcommand '" + sub + "'");
    }
    return rep;
}

RunReport cmd_germ(const std::string& sub, const CliOptions& opt) {
    RunReport rep;
    rep.command = "germ " + sub;
    if (sub == "evolve") {
        const int steps = or_default(opt.steps, 30);
        rep.inputs = {{"seed", opt.seed}, {"steps", steps}};
        Rng rng(opt.seed);
        const TriangleChart chart = TriangleChart::random(rng);
        const CurveTrait trait = CurveTrait::random_transverse(rng);
        EvolveOptions eo;
        eo.seed = opt.seed + 1;
        std::vector<ValuationVector> observed{trait.valuations()};
        bool agrees = true;
        try {
            for (const auto& st : series_evolve(trait, steps, chart, eo)) observed.push_back(st.observed);
        } catch (const Error& e) {
            agrees = false;
            rep.outputs["error"] = e.what();
        }
        rep.certify("series valuations match the min-plus prediction", agrees);
        const auto orbit = iterate(triangle_system(), state(trait.valuations().as_vector()), steps);
        bool equal = agrees;
        std::vector<StateVector> rows;
        for (std::size_t k = 0; k < observed.size(); ++k) {
            equal = equal && observed[k].as_vector() == orbit[k].v && observed[k].phase == orbit[k].phase;
            rows.push_back({observed[k].as_vector(), observed[k].phase});
        }
        rep.certify("observed valuations equal the P-iteration", equal);
        rep.outputs["final_valuations"] = integers_json(observed.back().as_vector());
        Table t = growth_table(rows, 3, opt.precision);
        for (int i = 0; i < 6; ++i) t.columns[static_cast<std::size_t>(i + 2)] = "d" + std::to_string(i);
        rep.table = std::move(t);
    } else if (sub == "pairs") {
        const int steps = or_default(opt.steps, 60);
        rep.inputs = {{"steps", steps}};
        const PairReport pr = verify_minimal_pairs(steps);
        rep.outputs["pairs"] = to_json(pr);
        rep.certify("minimal pairs match the residue predictions", pr.all_match());
        Table t;
        t.columns = {"step", "phase", "d0", "d1", "d2", "d3", "d4", "d5", "minimizers", "predicted", "match"};
        const auto pair_name = [](const IndexPair& p) {
            return "x" + std::to_string(p.first) + "*x" + std::to_string(p.second);
        };
        for (const auto& r : pr.rows) {
            std::vector<std::string> row{std::to_string(r.step), std::to_string(r.before.phase)};
            for (const auto& x : r.before.d) row.push_back(to_string(x));
            std::string mins;
            for (const auto& m : r.minimizers) mins += (mins.empty() ? "" : " ") + pair_name(m);
            row.push_back(mins);
            row.push_back(pair_name(r.predicted));
            row.push_back(r.match ? "true" : "false");
            t.rows.push_back(std::move(row));
        }
        rep.table = std::move(t);
    } else {
        throw Error("unknown germ subcommand '" + sub + "'");
    }
    return rep;
}

RunReport cmd_elliptic(const std::string& sub, const CliOptions& opt) {
    RunReport rep;
    rep.command = "elliptic " + sub;
    if (opt.n < 3) throw Error("elliptic commands need --n N with N >= 3");
    if (sub == "check") {
        const int horizon = or_default(opt.horizon, 500);
        rep.inputs = {{"n", opt.n}, {"horizon", horizon}};
        const AvoidanceReport av = avoidance_check(opt.n, horizon);
        rep.outputs["avoidance"] = to_json(av);
        rep.certify("no orbit meets a center within the horizon", av.passed());
        if (opt.n % 2 == 0) {
            rep.certify("drift certificate extends avoidance beyond the horizon", av.drift_certified);
        } else {
            const FirstReturnReport fr = check_first_return(opt.n);
            rep.outputs["first_return"] = to_json(fr);
            rep.certify("p_1 returns after 2N reflections without meeting a center", fr.returns && fr.avoids_basis);
        }
    } else if (sub == "orbit") {
        const int start = opt.start.empty() ? 1 : parse_int_list(opt.start).at(0);
        if (start < 1 || start > opt.n) throw Error("--start must be a point index in 1..N");
        ReflectionWord word;
        if (!opt.word.empty()) {
            word = parse_int_list(opt.word);
        } else if (opt.n % 2 == 1 && start == 1 && opt.steps < 0) {
            word = first_return_word(opt.n);
        } else {
            const int steps = or_default(opt.steps, 2 * opt.n);
            for (int s = 0; s < steps; ++s) word.push_back((start + s) % opt.n + 1);
        }
        rep.inputs = {{"n", opt.n}, {"start", start}, {"word", word}};
        const auto pts = orbit(FormalPoint::basis(opt.n, start), word);
        Table t;
        t.columns = {"step", "phase"};
        for (int i = 1; i <= opt.n; ++i) t.columns.push_back("p" + std::to_string(i));
        json shown = json::array();
        for (std::size_t k = 0; k < pts.size(); ++k) {
            std::vector<std::string> row{std::to_string(k), k == 0 ? "" : std::to_string(word[k - 1])};
            for (int i = 1; i <= opt.n; ++i) row.push_back(std::to_string(pts[k].coeff(i)));
            t.rows.push_back(std::move(row));
            shown.push_back(pts[k].to_string());
        }
        rep.outputs["orbit"] = shown;
        rep.table = std::move(t);
    } else {
        throw Error("unknown elliptic subcommand '" + sub + "'");
    }
    return rep;
}

RunReport cmd_transition(const std::string& sub, const CliOptions& opt) {
    if (sub != "growth") throw Error("unknown transition subcommand '" + sub + "'");
    RunReport rep;
    rep.command = "transition growth";
    const int steps = or_default(opt.steps, 20);
    std::optional<TransitionSystem> sys;
    std::vector<Integer> start;
    if (!opt.matrix_file.empty()) {
        if (!opt.system.empty()) throw Error("give either --system or --matrix-file");
        std::ifstream in(opt.matrix_file);
        if (!in) throw Error("cannot open matrix file " + opt.matrix_file);
        const json j = json::parse(in);
        sys = transition_system_from_json(j);
        if (j.contains("start")) {
            for (const auto& e : j.at("start")) start.push_back(e.is_string() ? Integer(e.get<std::string>()) : Integer(e.get<long>()));
        }
        rep.inputs["matrix_file"] = opt.matrix_file;
    } else if (opt.system == "conic-line") {
        sys = conic_line_system();
        start = {0, 0, 1};
    } else if (opt.system == "triangle") {
        sys = triangle_system();
        start = {1, 0, 0, 0, 0, 0};
    } else {
        throw Error("transition growth needs --system {conic-line,triangle} or --matrix-file FILE");
    }
    if (!opt.start.empty()) {
        start.clear();
        for (int x : parse_int_list(opt.start)) start.emplace_back(x);
    }
    if (start.empty()) throw Error("no start vector: pass --start or a \"start\" entry in the matrix file");
    if (static_cast<int>(start.size()) != sys->dimension()) throw Error("start vector has the wrong dimension");
    if (!opt.system.empty()) rep.inputs["system"] = opt.system;
    rep.inputs["steps"] = steps;
    rep.inputs["start"] = integers_json(start);

    const auto orbit = iterate(*sys, state(start), steps);
    rep.table = growth_table(orbit, sys->period(), opt.precision);
    const SpectralData sd = analyze_spectrum(sys->cycle_product(), start);
    rep.outputs["spectrum"] = spectral_json(sd, opt.precision);
    rep.outputs["final"] = integers_json(orbit.back().v);
    certify_flags(rep, sd);
    return rep;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact dynamical degrees of compositions of point reflections on cubic hypersurfaces", "refdyn"};
    app.require_subcommand(1);
    CliOptions opt;
    std::string seed_range;
    std::string out_file;
    std::function<RunReport()> action;

    enum Flag : unsigned { seed = 1, range = 2, n = 4, steps = 8, horizon = 16, start = 32, word = 64, system = 128,
                           matrix = 256, config = 512 };
    const auto leaf = [&](CLI::App* group, const std::string& name, const std::string& desc, unsigned flags,
                          std::function<RunReport()> run) {
        CLI::App* sub = group->add_subcommand(name, desc);
        if (flags & seed) sub->add_option("--seed", opt.seed, "random seed");
        if (flags & range) sub->add_option("--seed-range", seed_range, "seed search range a..b");
        if (flags & n) sub->add_option("--n", opt.n, "number of points")->required();
        if (flags & steps) sub->add_option("--steps", opt.steps, "number of steps")->check(CLI::NonNegativeNumber);
        if (flags & horizon) sub->add_option("--horizon", opt.horizon, "orbit horizon")->check(CLI::PositiveNumber);
        if (flags & start) sub->add_option("--start", opt.start, "start point or vector");
        if (flags & word) sub->add_option("--word", opt.word, "reflection word");
        if (flags & system) sub->add_option("--system", opt.system, "built-in system")
                                 ->check(CLI::IsMember({"conic-line", "triangle"}));
        if (flags & matrix) sub->add_option("--matrix-file", opt.matrix_file, "transition system JSON");
        if (flags & config) sub->add_option("--config", opt.config_file, "configuration JSON from billiard build");
        sub->add_option("--precision", opt.precision, "decimal places of printed enclosures")
            ->check(CLI::Range(1, 200));
        sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_file, "write the report to FILE");
        sub->callback([&action, run] { action = run; });
    };

    CLI::App* reproduce = app.add_subcommand("reproduce", "reproduce a degree tuple")->require_subcommand(1);
    leaf(reproduce, "general", "N general points", n | horizon, [&] { return cmd_reproduce("general", opt); });
    leaf(reproduce, "conic-line", "points on a conic and a line", 0, [&] { return cmd_reproduce("conic-line", opt); });
    leaf(reproduce, "triangle", "three points in a triangle", seed, [&] { return cmd_reproduce("triangle", opt); });

    CLI::App* billiard = app.add_subcommand("billiard", "cubic surface billiards")->require_subcommand(1);
    leaf(billiard, "build", "random configuration", seed | config, [&] { return cmd_billiard("build", opt); });
    leaf(billiard, "orbit", "orbit of a point", seed | config | start | word | steps,
         [&] { return cmd_billiard("orbit", opt); });
    leaf(billiard, "check", "genericity check or seed search", seed | range | config | horizon,
         [&] { return cmd_billiard("check", opt); });

    CLI::App* germ = app.add_subcommand("germ", "curve germs in the triangle chart")->require_subcommand(1);
    leaf(germ, "evolve", "series valuations", seed | steps, [&] { return cmd_germ("evolve", opt); });
    leaf(germ, "pairs", "minimal monomial pairs", steps, [&] { return cmd_germ("pairs", opt); });

    CLI::App* elliptic = app.add_subcommand("elliptic", "points on an elliptic curve")->require_subcommand(1);
    leaf(elliptic, "check", "orbit avoidance", n | horizon, [&] { return cmd_elliptic("check", opt); });
    leaf(elliptic, "orbit", "formal orbit", n | start | word | steps, [&] { return cmd_elliptic("orbit", opt); });

    CLI::App* transition = app.add_subcommand("transition", "transition matrix systems")->require_subcommand(1);
    leaf(transition, "growth", "iterate and estimate growth", system | matrix | steps | start,
         [&] { return cmd_transition("growth", opt); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!seed_range.empty()) opt.seed_range = parse_seed_range(seed_range);
        const RunReport rep = action();
        const std::string text = opt.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
        if (out_file.empty()) {
            out << text;
        } else {
            std::ofstream f(out_file);
            if (!f) throw Error("cannot write " + out_file);
            f << text;
        }
        return rep.passed() ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace refdyn

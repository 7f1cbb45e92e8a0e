#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "refdyn/billiards.hpp"
#include "refdyn/cli.hpp"
#include "refdyn/elliptic.hpp"
#include "refdyn/germs.hpp"
#include "refdyn/matrix.hpp"
#include "refdyn/picard.hpp"
#include "refdyn/transitions.hpp"

namespace py = pybind11;
using namespace refdyn;

namespace {

py::object py_int(const Integer& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_python(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

RatMatrix matrix_from(const std::vector<std::vector<py::int_>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        std::vector<Rational> out;
        for (const auto& x : row) out.emplace_back(Integer(py::str(x).cast<std::string>()));
        r.push_back(std::move(out));
    }
    return RatMatrix::from_rows(r);
}

std::vector<Integer> vector_from(const std::vector<py::int_>& v) {
    std::vector<Integer> out;
    for (const auto& x : v) out.emplace_back(py::str(x).cast<std::string>());
    return out;
}

TransitionSystem system_named(const std::string& name) {
    if (name == "conic-line") return conic_line_system();
    if (name == "triangle") return triangle_system();
    throw Error("unknown system '" + name + "'");
}

py::list coefficients(const UniPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(py::str(c.to_string()));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact dynamical degrees of compositions of point reflections";
    py::register_exception<Error>(m, "RefdynError", PyExc_ValueError);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line; returns (exit status, stdout, stderr).");

    m.def("reproduce", [](const std::string& target, int n, std::uint64_t seed, int horizon, int precision) {
        CliOptions opt;
        opt.n = n;
        opt.seed = seed;
        opt.horizon = horizon;
        opt.precision = precision;
        return to_python(cmd_reproduce(target, opt).to_json());
    }, py::arg("target"), py::arg("n") = 0, py::arg("seed") = 0, py::arg("horizon") = -1, py::arg("precision") = 9);

    m.def("char_poly", [](const std::vector<std::vector<py::int_>>& rows) { return coefficients(char_poly(matrix_from(rows))); },
          py::arg("matrix"), "Coefficients of det(xI - M), lowest degree first, as rational strings.");
    m.def("minimal_poly", [](const std::vector<std::vector<py::int_>>& rows) {
        return coefficients(minimal_poly(matrix_from(rows)));
    }, py::arg("matrix"));

    m.def("dominant_growth", [](const std::vector<std::vector<py::int_>>& rows, const std::vector<py::int_>& v0,
                                int precision) {
        const SpectralData sd = analyze_spectrum(matrix_from(rows), vector_from(v0));
        py::dict d;
        d["value"] = to_python(value_json(sd.mu1, precision));
        d["approx"] = sd.mu1.to_double();
        d["factor"] = coefficients(sd.factor);
        d["char_poly"] = coefficients(sd.char_poly);
        d["hypotheses_hold"] = sd.flags.all();
        return d;
    }, py::arg("matrix"), py::arg("v0"), py::arg("precision") = 9);

    m.def("iterate", [](const std::string& system, const std::vector<py::int_>& start, int steps) {
        py::list out;
        for (const auto& s : iterate(system_named(system), {vector_from(start), 0}, steps)) {
            py::list v;
            for (const auto& x : s.v) v.append(py_int(x));
            out.append(v);
        }
        return out;
    }, py::arg("system"), py::arg("start"), py::arg("steps"));

    m.def("degree_tuple_generic", [](int n) {
        py::list out;
        for (const auto& a : degree_tuple_generic(n)) out.append(py::str(a.rational_value().to_string()));
        return out;
    }, py::arg("n"));

    m.def("avoidance_check", [](int n, int horizon) { return to_python(to_json(avoidance_check(n, horizon))); },
          py::arg("n"), py::arg("horizon") = 500);
    m.def("verify_minimal_pairs", [](int steps) { return to_python(to_json(verify_minimal_pairs(steps))); },
          py::arg("steps") = 60);

    m.def("billiard_configuration", [](std::uint64_t seed) { return to_python(to_json(build_configuration(seed))); },
          py::arg("seed"));
    m.def("check_configuration", [](std::uint64_t seed, int horizon, int precision) {
        return to_python(to_json(check_configuration(build_configuration(seed), horizon), precision));
    }, py::arg("seed"), py::arg("horizon") = 300, py::arg("precision") = 9);
    m.def("search_configuration", [](std::uint64_t first, std::uint64_t last, int horizon) -> py::object {
        SearchResult res;
        {
            py::gil_scoped_release release;
            res = search_configuration(first, last, horizon);
        }
        if (!res.seed) return py::none();
        return py::make_tuple(*res.seed, res.tried);
    }, py::arg("first"), py::arg("last"), py::arg("horizon") = 300,
       "(seed, seeds tried) of the lowest passing seed, or None.");
}

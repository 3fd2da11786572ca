// Python bindings. Exact values cross the boundary as "num/den" strings and
// are turned into fractions.Fraction on the Python side.

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "legproj/bound_checker.hpp"
#include "legproj/cli.hpp"
#include "legproj/integrated_legendre.hpp"
#include "legproj/qfamily.hpp"
#include "legproj/report_io.hpp"
#include "legproj/sample_function.hpp"

namespace py = pybind11;
using namespace legproj;

namespace {

std::vector<std::string> coefficients(const LegendreSeries& s)
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (const auto& c : s.coeffs())
        out.push_back(c.str());
    return out;
}

py::dict check_bound(const std::string& function, const std::string& kind_name, long p, long s, long nu, long k, int quad_order)
{
    const auto kind = parse_bound_kind(kind_name);
    if (!kind)
        throw py::value_error("unknown bound kind: " + kind_name);
    BoundReport r;
    {
        py::gil_scoped_release release;
        const auto f = builtin_function<Real>(function);
        BoundChecker checker(f, sweep_rule_order(f, p, quad_order));
        r = checker.check(BoundPoint{*kind, p, s, nu, k});
    }
    py::dict d;
    d["kind"] = std::string(to_string(r.kind));
    d["function"] = r.function;
    d["p"] = r.p;
    d["s"] = r.s;
    d["nu"] = r.nu;
    d["k"] = r.k;
    d["lhs"] = to_double(r.lhs);
    d["rhs"] = to_double(r.rhs);
    d["ratio"] = to_double(r.ratio);
    d["pass"] = r.pass;
    return d;
}

py::tuple run(const std::vector<std::string>& args)
{
    std::vector<const char*> argv{"legproj"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    {
        py::gil_scoped_release release;
        code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_legproj, m)
{
    m.doc() = "Exact Legendre-basis projections, integrated Legendre polynomials and trace bounds";

    py::register_exception<QuadratureNotSaturated>(m, "QuadratureNotSaturated", PyExc_RuntimeError);

    m.def("psi", [](long i, long n) {
        if (i < n || n < 0)
            throw py::value_error("psi requires i >= n >= 0");
        return coefficients(psi(PsiIndex(i, n)));
    }, py::arg("i"), py::arg("n"));
    m.def("primitive", [](long i, long n) { return coefficients(primitive(i, n)); }, py::arg("i"), py::arg("n"));
    m.def("psi_norm_sq_closed", [](long p, long n) { return psi_norm_sq_closed(p, n).str(); }, py::arg("p"), py::arg("n"));
    m.def("psi_inner_closed", [](long p, long k, long n) { return psi_inner_closed(p, k, n).str(); }, py::arg("p"), py::arg("k"), py::arg("n"));
    m.def("q_poly", [](long p, long nu) { return coefficients(q_poly(p, nu).series); }, py::arg("p"), py::arg("nu"));
    m.def("q_norm_sq", [](long p, long nu) { return q_norm_sq(q_poly(p, nu)).str(); }, py::arg("p"), py::arg("nu"));
    m.def("q1_norm_sq_closed", [](long p) { return q1_norm_sq_closed(p).str(); }, py::arg("p"));
    m.def("wz_sum", [](long p, long nu) { return wz_sum(p, nu).str(); }, py::arg("p"), py::arg("nu"));
    m.def("wz_sum_closed", [](long p, long nu) { return wz_sum_closed(p, nu).str(); }, py::arg("p"), py::arg("nu"));
    m.def("growth_scan", [](long nu, long p_lo, long p_hi) {
        std::vector<std::tuple<long, std::string, std::string>> rows;
        for (const auto& r : growth_scan(nu, p_lo, p_hi))
            rows.emplace_back(r.p, r.norm_sq.str(), r.ratio.str());
        return rows;
    }, py::arg("nu"), py::arg("p_lo"), py::arg("p_hi"));
    m.def("builtin_function_names", &builtin_function_names);
    m.def("check_bound", &check_bound, py::arg("function"), py::arg("kind"), py::arg("p"), py::arg("s"), py::arg("nu") = 0, py::arg("k") = 0,
          py::arg("quad_order") = 0);
    m.def("run_cli", &run, py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quintic/app/commands.hpp"
#include "quintic/complex_branch.hpp"
#include "quintic/errors.hpp"
#include "quintic/oracle.hpp"
#include "quintic/radical_solver.hpp"
#include "quintic/reductions.hpp"
#include "quintic/trig_solver.hpp"

namespace py = pybind11;
using namespace quintic;

namespace {

py::dict solution_dict(const RadicalSolution& sol) {
    py::dict d;
    d["root"] = sol.root.value;
    d["residual"] = sol.root.residual;
    d["iterations"] = sol.root.iterations;
    d["certified_bound"] = sol.root.certified_abs_bound;
    d["iterates"] = sol.trace.iterates;
    return d;
}

py::list roots_list(const RootSet& set) {
    py::list out;
    for (const auto& rec : set.roots) {
        py::dict d;
        d["value"] = rec.value;
        d["k"] = rec.k;
        d["sigma"] = rec.sigma;
        d["r"] = rec.r;
        d["residual"] = rec.residual;
        d["via"] = rec.via == RootSource::Bisection ? "bisection" : "vieta";
        out.append(d);
    }
    return out;
}

SolveOptions options(double tol, int max_iter) { return {tol, max_iter}; }

}  // namespace

PYBIND11_MODULE(_quintic, m) {
    m.doc() = "Radical and trigonometric solvers for the quintic";

    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SolverError& e) {
            const py::object cls = py::module_::import("quintic._quintic").attr("SolverError");
            py::set_error(cls, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        } catch (const app::UsageError& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.def("branch_root", [](Complex z, int n) { return branch_nth_root(z, n); }, py::arg("z"),
          py::arg("n"), "n-th root with argument in [-pi/n, pi/n).");
    m.def("principal_arg", [](Complex z) { return principal_arg(z); }, py::arg("z"));

    m.def("starting_point", &starting_point, py::arg("xi"));
    m.def("g_map", [](double xi, double theta, Complex y) { return g_map(make_form3(xi, theta), y); },
          py::arg("xi"), py::arg("theta"), py::arg("y"));
    m.def("form3_parameters", [](Complex a) {
        const Form3Problem p = form2_to_form3(form1_to_form2({a}));
        return py::make_tuple(p.xi, p.theta, p.conjugated);
    }, py::arg("a"), "(xi, theta, conjugated) of x^5 + x + a = 0.");

    m.def("solve_form1", [](Complex a, double tol, int max_iter) {
        return solution_dict(solve_form1({a}, options(tol, max_iter)));
    }, py::arg("a"), py::arg("tol") = 1e-12, py::arg("max_iter") = 25);
    m.def("solve_form2", [](Complex lambda, double tol, int max_iter) {
        return solution_dict(solve_form2({lambda}, options(tol, max_iter)));
    }, py::arg("lam"), py::arg("tol") = 1e-12, py::arg("max_iter") = 25);
    m.def("solve_form3", [](double xi, double theta, double tol, int max_iter) {
        return solution_dict(solve_form3(make_form3(xi, theta), options(tol, max_iter)));
    }, py::arg("xi"), py::arg("theta"), py::arg("tol") = 1e-12, py::arg("max_iter") = 25);
    m.def("bring_radical", [](Complex a) { return bring_radical(a).value; }, py::arg("a"));

    m.def("all_roots_form1", [](Complex a) { return roots_list(all_roots_form1({a})); }, py::arg("a"));
    m.def("all_roots_form2", [](Complex lambda) { return roots_list(all_roots_form2({lambda})); },
          py::arg("lam"));
    m.def("all_roots_form3", [](double xi, double theta) {
        return roots_list(all_roots_form3(make_form3(xi, theta)));
    }, py::arg("xi"), py::arg("theta"));

    m.def("oracle_roots_form1", [](Complex a) {
        return oracle::oracle_roots(oracle::form1_polynomial(a));
    }, py::arg("a"));
    m.def("oracle_roots_bring_jerrard", [](Complex d1, Complex d0) {
        return oracle::oracle_roots(oracle::bring_jerrard_polynomial(d1, d0));
    }, py::arg("d1"), py::arg("d0"));

    m.def("solve_json", [](const std::string& request, bool timing) {
        const app::SolveRequest req = app::request_from_json(app::Json::parse(request));
        py::gil_scoped_release release;
        return app::to_json(app::cmd_solve(req, {timing})).dump();
    }, py::arg("request"), py::arg("timing") = true,
       "Solve a JSON request and return the JSON report.");
}

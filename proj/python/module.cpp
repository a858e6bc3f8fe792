#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gburgers/errors.hpp"
#include "gburgers/fd_oracle.hpp"
#include "gburgers/metrics.hpp"
#include "gburgers/stepper.hpp"

namespace py = pybind11;
using namespace gburgers;

namespace {

std::vector<std::vector<double>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        rows[r].assign(m.data.begin() + r * m.cols, m.data.begin() + (r + 1) * m.cols);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_gburgers, m) {
    m.doc() = "Haar wavelet collocation solver for generalized Burgers-type equations";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "SolverError", PyExc_RuntimeError);

    py::class_<WaveletIndex>(m, "WaveletIndex")
        .def_readonly("i", &WaveletIndex::i)
        .def_readonly("j", &WaveletIndex::j)
        .def_readonly("m", &WaveletIndex::m)
        .def_readonly("k", &WaveletIndex::k)
        .def_readonly("eta1", &WaveletIndex::eta1)
        .def_readonly("eta2", &WaveletIndex::eta2)
        .def_readonly("eta3", &WaveletIndex::eta3);

    py::class_<HaarBasis>(m, "HaarBasis")
        .def_readonly("J", &HaarBasis::J)
        .def_readonly("M", &HaarBasis::M)
        .def_readonly("n", &HaarBasis::n)
        .def_readonly("x", &HaarBasis::x)
        .def_readonly("p2_one", &HaarBasis::p2_one)
        .def("H", [](const HaarBasis& b) { return matrix_rows(b.H); })
        .def("P1", [](const HaarBasis& b) { return matrix_rows(b.P1); })
        .def("P2", [](const HaarBasis& b) { return matrix_rows(b.P2); });

    py::enum_<ReconstructMode>(m, "ReconstructMode")
        .value("VALUE", ReconstructMode::Value)
        .value("FIRST_INTEGRAL", ReconstructMode::FirstIntegral)
        .value("SECOND_INTEGRAL", ReconstructMode::SecondIntegral);

    m.def("index_from_ordinal", &index_from_ordinal, py::arg("i"));
    m.def("haar_eval", &haar_eval, py::arg("i"), py::arg("x"));
    m.def("p_eval", &p_eval, py::arg("sigma"), py::arg("i"), py::arg("x"));
    m.def("build_basis", &build_basis, py::arg("J"));
    m.def("expand", &expand, py::arg("samples"), py::arg("basis"));
    m.def("reconstruct", &reconstruct, py::arg("coeffs"), py::arg("basis"), py::arg("mode"),
          py::arg("x"));

    py::class_<ProblemSpec>(m, "ProblemSpec")
        .def_readonly("id", &ProblemSpec::id)
        .def_readonly("mu", &ProblemSpec::mu)
        .def_readonly("delta", &ProblemSpec::delta)
        .def_readonly("nu", &ProblemSpec::nu)
        .def_readonly("a", &ProblemSpec::a)
        .def_readonly("b", &ProblemSpec::b)
        .def_readonly("t0", &ProblemSpec::t0)
        .def_property_readonly("has_exact", &ProblemSpec::has_exact)
        .def("initial", [](const ProblemSpec& s, double x) { return s.f(x); }, py::arg("x"))
        .def("exact",
             [](const ProblemSpec& s, double x, double t) { return evaluate_exact(s, x, t); },
             py::arg("x"), py::arg("t"))
        .def("boundary_left", [](const ProblemSpec& s, double t) { return s.f1(t); },
             py::arg("t"))
        .def("boundary_right", [](const ProblemSpec& s, double t) { return s.f2(t); },
             py::arg("t"));

    m.def(
        "make_test_problem",
        [](int id, double nu, std::optional<double> c0, std::optional<double> sigma) {
            return make_test_problem(id, nu, ProblemParams{c0, sigma});
        },
        py::arg("id"), py::arg("nu"), py::arg("c0") = std::nullopt,
        py::arg("sigma") = std::nullopt);

    m.def(
        "make_problem",
        [](int mu, int delta, double nu, double a, double b, double t0,
           std::function<double(double)> f, std::function<double(double)> f1,
           std::function<double(double)> f2, std::function<double(double)> fx,
           std::function<double(double)> fxx, std::function<double(double, double)> exact) {
            ProblemSpec spec;
            spec.mu = mu;
            spec.delta = delta;
            spec.nu = nu;
            spec.a = a;
            spec.b = b;
            spec.t0 = t0;
            spec.f = std::move(f);
            spec.f1 = std::move(f1);
            spec.f2 = std::move(f2);
            spec.fx = std::move(fx);
            spec.fxx = std::move(fxx);
            spec.exact = std::move(exact);
            return spec;
        },
        "Assemble a custom problem from python callables", py::arg("mu"), py::arg("delta"),
        py::arg("nu"), py::arg("a"), py::arg("b"), py::arg("t0"), py::arg("f"), py::arg("f1"),
        py::arg("f2"), py::arg("fx") = nullptr, py::arg("fxx") = nullptr,
        py::arg("exact") = nullptr);

    m.def("corner_mismatch", &corner_mismatch, py::arg("spec"));

    py::class_<SolutionState>(m, "SolutionState")
        .def_readonly("t", &SolutionState::t)
        .def_readonly("w", &SolutionState::w)
        .def_readonly("wx", &SolutionState::wx)
        .def_readonly("wxx", &SolutionState::wxx)
        .def_readonly("coeffs", &SolutionState::coeffs);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("final_state", &RunResult::final_state)
        .def_readonly("snapshots", &RunResult::snapshots);

    m.def(
        "run",
        [](const ProblemSpec& spec, int J, double dt, double T,
           const std::vector<double>& snapshots) {
            return run(spec, SolverConfig{J, dt, T}, snapshots);
        },
        py::arg("spec"), py::arg("J"), py::arg("dt"), py::arg("T"),
        py::arg("snapshots") = std::vector<double>{});

    m.def(
        "fd_solve",
        [](const ProblemSpec& spec, int n, double dt, double T) {
            return fd_solve(spec, make_fd_grid(spec, n, dt), T);
        },
        py::arg("spec"), py::arg("n"), py::arg("dt"), py::arg("T"));

    py::class_<FdReference>(m, "FdReference")
        .def_readonly("values", &FdReference::values)
        .def_readonly("refinements", &FdReference::refinements)
        .def_readonly("last_delta", &FdReference::last_delta);

    m.def("fd_reference_at", &fd_reference_at, py::arg("spec"), py::arg("x_star"), py::arg("T"),
          py::arg("accuracy_target"));

    py::class_<ErrorReport>(m, "ErrorReport")
        .def_readonly("l_inf", &ErrorReport::l_inf)
        .def_readonly("l_2", &ErrorReport::l_2)
        .def_readonly("n_points", &ErrorReport::n_points)
        .def_readonly("t", &ErrorReport::t);

    m.def("error_norms", &error_norms, py::arg("numeric"), py::arg("reference"), py::arg("dx"),
          py::arg("t") = 0.0);

    py::class_<ConvergenceRow>(m, "ConvergenceRow")
        .def_readonly("J", &ConvergenceRow::J)
        .def_readonly("l_inf", &ConvergenceRow::l_inf)
        .def_readonly("l_2", &ConvergenceRow::l_2)
        .def_readonly("ratio_to_previous", &ConvergenceRow::ratio_to_previous)
        .def_readonly("observed_order", &ConvergenceRow::observed_order);

    m.def("convergence_study", &convergence_study, py::arg("spec"), py::arg("dt"), py::arg("T"),
          py::arg("J_list"), py::arg("oracle_accuracy") = 1e-6);

    m.def("theoretical_bound", &theoretical_bound, py::arg("J"), py::arg("K"));
}

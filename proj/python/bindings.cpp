#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maass_shift/experiments.hpp"

namespace py = pybind11;
using namespace maass_shift;

namespace {

// Heavy commands run without the GIL.
template <class F>
Report released(F&& f) {
  py::gil_scoped_release nogil;
  return f();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shifted convolution values of level one cusp forms";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<IllConditionedError>(m, "IllConditionedError", PyExc_ArithmeticError);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("bits", &RunConfig::bits)
      .def_readwrite("q_length", &RunConfig::q_length)
      .def_readwrite("c_max", &RunConfig::c_max)
      .def_readwrite("abs_tolerance", &RunConfig::abs_tolerance)
      .def_readwrite("direct_N", &RunConfig::direct_N)
      .def_readwrite("projection_m_max", &RunConfig::projection_m_max)
      .def_readwrite("h_list", &RunConfig::h_list)
      .def_readwrite("cache_dir", &RunConfig::cache_dir)
      .def("validate", &RunConfig::validate);

  py::class_<ResultCell>(m, "ResultCell")
      .def_readonly("name", &ResultCell::name)
      .def_readonly("route", &ResultCell::route)
      .def_readonly("value", &ResultCell::value)
      .def_readonly("imag", &ResultCell::imag)
      .def_readonly("error", &ResultCell::error);

  py::class_<ResultRow>(m, "ResultRow")
      .def_readonly("index", &ResultRow::index)
      .def_readonly("cells", &ResultRow::cells)
      .def_readonly("wall_seconds", &ResultRow::wall_seconds);

  py::class_<Report>(m, "Report")
      .def_readonly("title", &Report::title)
      .def_readonly("rows", &Report::rows)
      .def_readonly("summary", &Report::summary)
      .def_readonly("passed", &Report::pass)
      .def("to_json", [](const Report& r, bool timings) { return render(r, OutputFormat::json, timings); },
           py::arg("timings") = false)
      .def("to_csv", [](const Report& r, bool timings) { return render(r, OutputFormat::csv, timings); },
           py::arg("timings") = false);

  py::class_<Session>(m, "Session")
      .def(py::init<RunConfig>(), py::arg("config") = RunConfig{})
      .def_property_readonly("config", &Session::config)
      .def("tau", [](Session& s, long n) { return released([&] { return cmd_tau(s, n); }); }, py::arg("max_n"))
      .def("periods", [](Session& s) { return released([&] { return cmd_periods(s); }); })
      .def("poincare", [](Session& s, std::vector<long> n) { return released([&] { return cmd_poincare(s, n); }); },
           py::arg("n_list"))
      .def("dhat",
           [](Session& s, std::vector<long> h, std::string route) {
             return released([&] { return cmd_dhat(s, h, route); });
           },
           py::arg("h_list"), py::arg("route") = "mock")
      .def("table1", [](Session& s) { return released([&] { return cmd_table1(s); }); })
      .def("growth", [](Session& s) { return released([&] { return cmd_growth(s); }); })
      .def("periodcheck", [](Session& s) { return released([&] { return cmd_periodcheck(s); }); })
      .def("persist", &Session::persist);

  py::class_<LinearFit>(m, "LinearFit")
      .def_readonly("slope", &LinearFit::slope)
      .def_readonly("intercept", &LinearFit::intercept)
      .def_readonly("slope_stderr", &LinearFit::slope_stderr)
      .def_readonly("ci_low", &LinearFit::ci_low)
      .def_readonly("ci_high", &LinearFit::ci_high)
      .def_readonly("points", &LinearFit::points);

  m.def("loglog_fit", &loglog_fit, py::arg("x"), py::arg("y"));
  m.def("agrees_to_digits", &agrees_to_digits, py::arg("a"), py::arg("b"), py::arg("digits"));
  m.def("projection_integral", &projection_integral, py::arg("k"), py::arg("m"), py::arg("h"), py::arg("s") = 0.0);
}

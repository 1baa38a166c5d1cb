#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ialex/cli.hpp"
#include "ialex/error.hpp"
#include "ialex/laurent.hpp"

namespace py = pybind11;
using namespace ialex;

namespace {

std::vector<std::pair<std::string, unsigned>> factor_text(const std::string& poly, std::size_t degree_cap) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& pp : factor(parse_laurent(poly), degree_cap)) out.emplace_back(to_string(pp.prime), pp.multiplicity);
  return out;
}

// Case JSON in, report JSON out; the Python layer decodes both.
std::string run_case(const std::string& case_json, std::size_t degree_cap, bool assume_zero_kernel) {
  cli::json parsed;
  try {
    parsed = cli::json::parse(case_json);
  } catch (const cli::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  cli::RunOptions opt;
  opt.degree_cap = degree_cap;
  opt.assume_zero_kernel = assume_zero_kernel;
  return cli::render_json(cli::run(parsed, opt));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intersection Alexander polynomials over Q[t, t^-1]";

  // The module attribute keeps the class alive.
  static PyObject* error_cls = py::exception<Error>(m, "IalexError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::handle(error_cls)(std::string(error_code_name(e.code())) + ": " + e.what());
      err.attr("code") = std::string(error_code_name(e.code()));
      err.attr("path") = e.path();
      PyErr_SetObject(error_cls, err.ptr());
    }
  });

  m.attr("DEFAULT_DEGREE_CAP") = kDefaultDegreeCap;
  m.def("factor", &factor_text, py::arg("poly"), py::arg("degree_cap") = kDefaultDegreeCap,
        "Irreducible factors with multiplicities, as (polynomial, power) pairs.");
  m.def("normalize", [](const std::string& poly) { return to_string(normalize(parse_laurent(poly))); },
        py::arg("poly"), "Canonical representative of the similarity class.");
  m.def("similar", [](const std::string& a, const std::string& b) { return similar(parse_laurent(a), parse_laurent(b)); },
        py::arg("a"), py::arg("b"));
  m.def("gcd", [](const std::string& a, const std::string& b) { return to_string(gcd(parse_laurent(a), parse_laurent(b))); },
        py::arg("a"), py::arg("b"));
  m.def("run_case", &run_case, py::arg("case_json"), py::arg("degree_cap") = kDefaultDegreeCap,
        py::arg("assume_zero_kernel") = false);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "newton_certify/certificate.hpp"
#include "newton_certify/cli.hpp"
#include "newton_certify/json_io.hpp"
#include "newton_certify/kouchnirenko.hpp"
#include "newton_certify/minimal.hpp"
#include "newton_certify/morse.hpp"
#include "newton_certify/polynomial.hpp"
#include "newton_certify/polytope.hpp"
#include "newton_certify/stencil.hpp"

namespace py = pybind11;
namespace nc = newton_certify;
using nc::json_io::Json;

namespace {

nc::LatticePolytope make_polytope(int n, std::vector<nc::LatticePoint> points, bool orthant) {
  return nc::LatticePolytope(n, std::move(points), orthant);
}

nc::LatticePolytope load(const std::string& polytope_json) {
  return nc::json_io::parse_polytope(Json::parse(polytope_json));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Newton polytope certificates (JSON-string interface)";

  py::register_exception<nc::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<nc::Error>(m, "Error", PyExc_ValueError);

  m.def("render", [](const std::string& text, int n) { return nc::render(nc::parse_polynomial(text, n)); },
        py::arg("poly"), py::arg("n"));

  m.def("polytope", [](int n, std::vector<nc::LatticePoint> points, bool orthant) {
    return nc::json_io::polytope(make_polytope(n, std::move(points), orthant)).dump();
  }, py::arg("n"), py::arg("points"), py::arg("orthant") = false);

  m.def("newton", [](const std::string& text, int n, bool polyhedron) {
    nc::SparsePolynomial f = nc::parse_polynomial(text, n);
    return nc::json_io::polytope(polyhedron ? nc::newton_polyhedron(f) : nc::newton_polytope(f)).dump();
  }, py::arg("poly"), py::arg("n"), py::arg("polyhedron") = false);

  m.def("contains_o", [](const std::string& polytope_json) {
    nc::LatticePolytope p = load(polytope_json);
    nc::Membership mem = nc::contains_point(p, nc::barycenter(p.n()));
    if (mem.contained())
      return Json{{"contains", true}, {"witness", nc::json_io::convex_combination(*mem.witness)}}.dump();
    return Json{{"contains", false}, {"separation", nc::json_io::halfspace(*mem.separation)}}.dump();
  }, py::arg("polytope"));

  m.def("stencil", [](const std::string& polytope_json) {
    return nc::json_io::stencil(nc::stencil_of(load(polytope_json))).dump();
  }, py::arg("polytope"));

  m.def("certify", [](const std::string& polytope_json) {
    return nc::json_io::certificate(nc::certify(load(polytope_json))).dump();
  }, py::arg("polytope"));

  m.def("certify_via_minimal", [](const std::string& polytope_json) {
    return nc::json_io::certificate(nc::certify_via_minimal(load(polytope_json))).dump();
  }, py::arg("polytope"));

  m.def("verify_certificate", [](const std::string& polytope_json, const std::string& cert_json) {
    return nc::verify_certificate(load(polytope_json), nc::json_io::parse_certificate(Json::parse(cert_json)));
  }, py::arg("polytope"), py::arg("certificate"));

  m.def("minimal_subpolytope", [](const std::string& polytope_json) {
    return nc::json_io::polytope(nc::minimal_subpolytope(load(polytope_json))).dump();
  }, py::arg("polytope"));

  m.def("classify_support", [](const std::string& polytope_json) {
    return nc::json_io::verdict(nc::classify_support(load(polytope_json))).dump();
  }, py::arg("polytope"));

  m.def("is_morse", [](const std::string& text, int n) { return nc::is_morse(nc::parse_polynomial(text, n)); },
        py::arg("poly"), py::arg("n"));

  m.def("milnor", [](const std::string& text, int n) {
    return nc::json_io::milnor(nc::milnor_number(nc::parse_polynomial(text, n))).dump();
  }, py::arg("poly"), py::arg("n"));

  m.def("face", [](const std::string& text, int n, const std::vector<std::string>& w) {
    std::vector<nc::Rational> weights;
    for (const auto& s : w) weights.emplace_back(s);
    return nc::render(nc::face_restriction(nc::parse_polynomial(text, n), weights));
  }, py::arg("poly"), py::arg("n"), py::arg("w"));

  m.def("sample_generic_form", [](const std::string& polytope_json, std::uint64_t seed) {
    nc::QuadraticForm b = nc::sample_generic_form(load(polytope_json), seed);
    std::vector<std::vector<std::string>> rows(b.n(), std::vector<std::string>(b.n()));
    for (int i = 0; i < b.n(); ++i)
      for (int j = 0; j < b.n(); ++j) rows[i][j] = nc::to_string(b(i, j));
    return rows;
  }, py::arg("polytope"), py::arg("seed"));

  m.def("run_cli", [](const std::vector<std::string>& args, unsigned long long seed) {
    std::ostringstream out;
    int code = nc::cli::run(args, out, seed);
    return py::make_tuple(code, out.str());
  }, py::arg("args"), py::arg("default_seed") = 0);
}

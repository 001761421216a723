#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "renormlab/app.hpp"
#include "renormlab/certificate.hpp"
#include "renormlab/errors.hpp"
#include "renormlab/json_io.hpp"

namespace py = pybind11;
using namespace renormlab;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

Rational from_python(const py::handle& h) {
  // Fraction, int or "p/q" string.
  return parse_rational(py::str(h).cast<std::string>());
}

LatticeVector dense_vector(const std::vector<py::object>& values) {
  std::vector<Rational> v;
  for (const auto& x : values) v.push_back(from_python(x));
  return LatticeVector::from_dense(IndexSet::numbered(v.size()), v);
}

io::json loads(const std::string& s) { return io::parse_json(s); }

}  // namespace

PYBIND11_MODULE(_renormlab, m) {
  m.doc() = "Exact norms, rho functions and their verification suites";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("day_norm_sq", [](const std::vector<py::object>& x) { return to_fraction(day_norm_sq(dense_vector(x))); },
        "Squared Day norm of a dense vector.");

  m.def(
      "adequate_norm",
      [](const std::vector<std::vector<std::size_t>>& members, const std::vector<py::object>& x) {
        const LatticeVector v = dense_vector(x);
        std::vector<Subset> subsets;
        for (const auto& mem : members) subsets.push_back(Subset::from_elements(v.dimension(), mem));
        const SetFamily f = downward_close(SetFamily(v.gamma_ptr(), subsets));
        return to_fraction(adequate_norm(f, v));
      },
      "sup over the downward closure of `members` of the l1 norm on the member.");

  m.def(
      "evaluate",
      [](const std::string& norm_json, const std::string& vector_json) {
        const NormOracle n = io::norm_from_json(loads(norm_json));
        const LatticeVector x = io::vector_from_json(loads(vector_json));
        if (!n.flags().is_exact) return py::object(py::float_(n.evaluate_float(x)));
        return to_fraction(n.evaluate(x));
      },
      "Norm value of a JSON vector; squared for Day and Troyanski, float for lp.");

  m.def(
      "generate",
      [](const std::string& kind, std::uint64_t seed, std::size_t nodes, std::size_t n, unsigned long max_phi,
         std::size_t trees, std::size_t members, const std::vector<py::object>& q) {
        app::GenParams p;
        p.seed = seed;
        p.nodes = nodes;
        p.n = n;
        p.max_phi = max_phi;
        p.trees = trees;
        p.members = members;
        for (const auto& v : q) p.q.push_back(from_python(v));
        return io::dump(app::generate(kind, p));
      },
      py::arg("kind"), py::arg("seed") = 1, py::arg("nodes") = 8, py::arg("n") = 6, py::arg("max_phi") = 4,
      py::arg("trees") = 3, py::arg("members") = 4, py::arg("q") = std::vector<py::object>{},
      "Instance JSON text.");

  m.def(
      "verify",
      [](const std::string& instance_json, const std::vector<std::string>& suites, std::uint64_t seed,
         const py::object& epsilon, std::size_t samples) {
        app::VerifyOptions opt;
        opt.seed = seed;
        opt.epsilon = from_python(epsilon);
        opt.samples = samples;
        const app::Instance inst = app::load_instance(loads(instance_json));
        const app::VerifyResult r = app::verify(inst, suites, opt);
        std::vector<std::pair<std::string, std::string>> artifacts;
        for (const auto& a : r.artifacts) artifacts.emplace_back(a.name, io::dump(a.content));
        return py::make_tuple(r.pass, io::dump(r.report), artifacts);
      },
      py::arg("instance"), py::arg("suites") = std::vector<std::string>{"all"}, py::arg("seed") = 1,
      py::arg("epsilon") = py::str("1/4"), py::arg("samples") = 200,
      "(pass, report JSON text, [(artifact name, JSON text)]).");

  m.def(
      "validate_certificate",
      [](const std::string& cert_json) {
        const CertificateCheck c = validate_certificate(io::certificate_from_json(loads(cert_json)));
        return py::make_tuple(c.valid, c.errors);
      },
      "(valid, errors) for a fragmentation certificate.");
}

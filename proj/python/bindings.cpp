#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sdmaps/cli.hpp"
#include "sdmaps/complex_verify.hpp"
#include "sdmaps/errors.hpp"
#include "sdmaps/finite_classifier.hpp"
#include "sdmaps/quad_verify.hpp"
#include "sdmaps/symbolic.hpp"

namespace py = pybind11;
using namespace sdmaps;

// Everything crosses the boundary as JSON text; the Python side decodes it.
namespace {

std::string dump(const Json& j) { return j.dump(); }

SignCase parse_sign(const std::string& s) {
  if (s == "plus") return SignCase::plus;
  if (s == "minus") return SignCase::minus;
  throw PreconditionError("branch must be plus or minus, got " + s);
}

LatticeOrder parse_order(const std::string& s) {
  if (s == "row-major" || s == "row_major") return LatticeOrder::row_major;
  if (s == "column-major" || s == "column_major") return LatticeOrder::column_major;
  throw PreconditionError("order must be row-major or column-major, got " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SD map verification core";

  auto base = py::register_exception<Error>(m, "SdError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<NotPrime>(m, "NotPrime", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", base.ptr());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));

  m.def("classify", [](std::uint32_t p, std::uint32_t max_prime) {
    ClassifyOptions options;
    options.max_prime = max_prime;
    ClassificationResult r;
    {
      py::gil_scoped_release release;
      r = classify(p, options);
    }
    return dump(to_json(r));
  }, py::arg("p"), py::arg("max_prime") = kDefaultMaxPrime);

  m.def("is_sd_power_map", [](std::uint32_t p, std::uint32_t k) { return is_sd_power_map(p, k).pass; },
        py::arg("p"), py::arg("k"));

  m.def("symbolic_sequence", [](int n) {
    std::vector<std::string> out;
    for (const auto& e : symbolic_sequence(n).entries) out.push_back(e.to_string());
    return out;
  }, py::arg("n"));

  m.def("published_symbolic_values", [] {
    std::vector<std::string> out;
    for (const auto& e : published_symbolic_values()) out.push_back(e.to_string());
    return out;
  });

  m.def("u_constraint_survivors", [] {
    std::vector<std::string> out;
    for (const auto& r : u_constraint().surviving) out.push_back(r.to_string());
    return out;
  });

  m.def("integer_induction", [](long n) { return dump(to_json(integer_induction_check(n))); }, py::arg("n"));

  m.def("verify_automorphism_sd", [](const std::string& d, const std::string& map, std::size_t samples,
                                     std::uint64_t seed) {
    return dump(to_json(verify_automorphism_sd(Rational::parse(d), parse_quad_map(map), samples, seed)));
  }, py::arg("d"), py::arg("map"), py::arg("samples") = 500, py::arg("seed") = 1);

  m.def("sign_contradiction", [](const std::string& d, const std::string& branch) {
    return dump(to_json(sign_contradiction(Rational::parse(d), parse_sign(branch))));
  }, py::arg("d"), py::arg("branch"));

  m.def("lattice_fix", [](const std::string& d, const std::string& map, long m_bound, long n_bound,
                          const std::string& order) {
    return dump(to_json(lattice_fix(Rational::parse(d), parse_quad_map(map), m_bound, n_bound, parse_order(order))));
  }, py::arg("d"), py::arg("map"), py::arg("m_bound"), py::arg("n_bound"), py::arg("order") = "row-major");

  m.def("verify_complex", [](double tol, std::size_t samples, std::uint64_t seed) {
    const ComplexSuite s = verify_complex(tol, samples, seed);
    Json j = to_json(s);
    j["passed"] = s.passed();
    return dump(j);
  }, py::arg("tol") = 1e-9, py::arg("samples") = 1000, py::arg("seed") = 1);
}

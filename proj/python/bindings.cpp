#include "equigeo/errors.hpp"
#include "equigeo/report.hpp"
#include "equigeo/suite.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace equigeo;

namespace {

SpaceDescriptor descriptor(const std::string& name, int n, int n1, int n2) {
  const SpaceFamily f = space_family_from_name(name);
  if (f == SpaceFamily::thm2_su_su) return {f, 0, n1, n2};
  return {f, n, 0, 0};
}

py::dict criterion_dict(const CriterionReport& r) {
  py::dict d;
  d["residual"] = r.residual;
  d["verdict"] = r.verdict;
  d["witnesses"] = r.witnesses;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equigeodesic vectors on compact homogeneous spaces";

  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  m.def("space_names", &space_names);

  py::class_<CatalogEntry>(m, "Space")
      .def_property_readonly("name", [](const CatalogEntry& e) { return space_name(e.descriptor.family); })
      .def_property_readonly("label", [](const CatalogEntry& e) { return e.space.label(); })
      .def_property_readonly("expected", [](const CatalogEntry& e) { return to_string(e.expected); })
      .def_property_readonly("dims",
                             [](const CatalogEntry& e) {
                               const auto& s = e.space;
                               py::dict d;
                               d["g"] = s.algebra().dim();
                               d["h"] = s.h().dim();
                               d["m"] = s.dim_m();
                               d["m0"] = s.m0().dim();
                               d["mprime"] = s.mprime().dim();
                               return d;
                             })
      .def_property_readonly("m0_basis", [](const CatalogEntry& e) { return e.space.m0().basis(); },
                             "columns span m0, in m-coordinates")
      .def_property_readonly("commutant", [](const CatalogEntry& e) { return e.space.commutant(); })
      .def("__repr__", [](const CatalogEntry& e) { return "<Space " + e.space.label() + ">"; });

  m.def(
      "build_space",
      [](const std::string& name, int n, int n1, int n2) { return build_space(descriptor(name, n, n1, n2)); },
      py::arg("name"), py::arg("n") = 1, py::arg("n1") = 1, py::arg("n2") = 1);

  m.def(
      "randers_equigeodesic_test",
      [](const CatalogEntry& e, const Vector& x, double tol) {
        return criterion_dict(randers_equigeodesic_test(e.space, x, tol));
      },
      py::arg("space"), py::arg("x"), py::arg("tol") = kCriterionTol);

  m.def(
      "riemannian_equigeodesic_test",
      [](const CatalogEntry& e, const Vector& x, double tol) {
        return criterion_dict(riemannian_equigeodesic_test(e.space, x, tol));
      },
      py::arg("space"), py::arg("x"), py::arg("tol") = kCriterionTol);

  m.def(
      "sampled_metric_oracle",
      [](const CatalogEntry& e, const Vector& x, std::size_t samples, std::uint64_t seed, double tol) {
        const OracleReport r = sampled_metric_oracle(e.space, x, samples, seed, tol);
        py::dict d;
        d["max_residual"] = r.max_residual;
        d["samples"] = r.samples;
        d["worst_sample"] = r.worst_sample;
        d["worst_metric"] = r.worst_metric;
        d["worst_u"] = r.worst_u;
        d["verdict"] = r.verdict;
        return d;
      },
      py::arg("space"), py::arg("x"), py::arg("samples") = 100, py::arg("seed") = 0, py::arg("tol") = kCriterionTol);

  m.def(
      "classify",
      [](const CatalogEntry& e, double tol, std::uint64_t seed) {
        const EquigeodesicSet s = classify_equigeodesic_set(e.space, {tol, seed});
        return py::make_tuple(to_string(s.kind), s.subspace.basis());
      },
      py::arg("space"), py::arg("tol") = kCriterionTol, py::arg("seed") = 0,
      "(kind, basis) with basis columns in m-coordinates");

  m.def(
      "analyze_json",
      [](const std::string& name, int n, int n1, int n2, double tol, std::uint64_t seed) {
        return report_to_json(analyze_space(descriptor(name, n, n1, n2), {tol, seed}));
      },
      py::arg("name"), py::arg("n") = 1, py::arg("n1") = 1, py::arg("n2") = 1, py::arg("tol") = kCriterionTol,
      py::arg("seed") = 0);

  m.def(
      "verify",
      [](std::uint64_t seed, std::size_t samples) {
        SuiteOptions o;
        o.seed = seed;
        o.samples = samples;
        py::list out;
        for (const auto& r : run_verification_suite(o)) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 0, py::arg("samples") = 100);
}

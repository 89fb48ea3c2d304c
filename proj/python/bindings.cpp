// Thin bindings. Rationals cross the boundary as "p/q" strings; the Python package converts them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qvcount/cli.hpp"
#include "qvcount/config.hpp"
#include "qvcount/errors.hpp"
#include "qvcount/fock.hpp"
#include "qvcount/hw_module.hpp"
#include "qvcount/integral.hpp"
#include "qvcount/partitions.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/walls.hpp"
#include "qvcount/weights.hpp"

namespace py = pybind11;
using namespace qvc;

namespace {

RationalVector to_rv(const std::vector<std::string>& xs) {
  RationalVector out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

std::vector<std::string> from_rv(const RationalVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

py::dict hyperplane_dict(const Hyperplane& h) {
  py::dict d;
  d["normal"] = h.normal;
  d["offset"] = to_string(h.offset);
  d["space"] = to_string(h.space);
  d["provenance"] = h.provenance;
  return d;
}

py::list hyperplane_list(const std::vector<Hyperplane>& hs) {
  py::list out;
  for (const auto& h : hs) out.append(hyperplane_dict(h));
  return out;
}

}  // namespace

PYBIND11_MODULE(_qvcount, m) {
  m.doc() = "Counting finite-dimensional representations of quantized quiver varieties";

  auto base = py::register_exception<Error>(m, "QvcountError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  py::class_<Quiver>(m, "Quiver")
      .def(py::init<std::size_t, std::vector<Arrow>, std::string>(), py::arg("vertices"), py::arg("arrows"),
           py::arg("name") = "")
      .def_static("load", [](const std::string& s) { return load_quiver(s); }, py::arg("name_or_path"))
      .def_static("parse", [](const std::string& s) { return parse_quiver_text(s); }, py::arg("text"))
      .def_property_readonly("size", &Quiver::size)
      .def_property_readonly("name", &Quiver::name)
      .def_property_readonly("arrows", &Quiver::arrows)
      .def("cartan", &Quiver::cartan)
      .def("reversed", &Quiver::reversed)
      .def("tits_form", [](const Quiver& q, const IntVector& x, const IntVector& y) { return tits_form(q, x, y); })
      .def("p", [](const Quiver& q, const IntVector& v) { return p_value(q, v); })
      .def("classify",
           [](const Quiver& q) {
             auto c = classify_quiver(q);
             py::dict d;
             d["type"] = to_string(c.type);
             d["delta"] = c.delta ? py::cast(*c.delta) : py::none();
             return d;
           })
      .def("roots",
           [](const Quiver& q, const IntVector& bound) {
             py::list out;
             for (const auto& r : roots_bounded(q, bound)) out.append(py::make_tuple(r.vec, r.is_real()));
             return out;
           })
      .def("__repr__", [](const Quiver& q) { return "<Quiver " + (q.name().empty() ? std::to_string(q.size()) : q.name()) + ">"; });

  m.def("freudenthal_mult", &freudenthal_mult, py::arg("quiver"), py::arg("w"), py::arg("v"));
  m.def("weight_space_dim",
        [](const Quiver& q, const IntVector& w, const IntVector& v) { return weight_space_dim(build_hw_module(q, w), v); },
        py::arg("quiver"), py::arg("w"), py::arg("v"));
  m.def("is_extremal", &is_extremal, py::arg("quiver"), py::arg("v"), py::arg("w"));
  m.def("reflect_dim", &reflect_dim, py::arg("quiver"), py::arg("k"), py::arg("v"), py::arg("w"));
  m.def("rho", [](const Quiver& q, const IntVector& v, const IntVector& w) { return from_rv(rho_vector(q, v, w)); },
        py::arg("quiver"), py::arg("v"), py::arg("w"));
  m.def("reflect_param",
        [](const Quiver& q, std::size_t k, const std::vector<std::string>& lam, const IntVector& v, const IntVector& w) {
          return from_rv(reflect_param(q, k, to_rv(lam), v, w));
        },
        py::arg("quiver"), py::arg("k"), py::arg("lam"), py::arg("v"), py::arg("w"));
  m.def("integral_roots",
        [](const Quiver& q, const std::vector<std::string>& lam, const IntVector& bound) {
          auto d = integral_roots(q, to_rv(lam), bound);
          return py::make_tuple(d.positive_roots, d.simple_system);
        },
        py::arg("quiver"), py::arg("lam"), py::arg("bound"));
  m.def("predicted_count",
        [](const Quiver& q, const IntVector& v, const IntVector& w, const std::vector<std::string>& lam) {
          auto c = predicted_count(q, v, w, to_rv(lam), Limits::from_env());
          py::dict d;
          d["count"] = c.count ? py::cast(*c.count) : py::none();
          d["status"] = to_string(c.status);
          d["branch"] = c.branch;
          d["reason"] = c.reason;
          d["slack"] = c.slack ? py::cast(*c.slack) : py::none();
          return d;
        },
        py::arg("quiver"), py::arg("v"), py::arg("w"), py::arg("lam"));
  m.def("grassmannian_singular_count",
        [](std::int64_t v, std::int64_t w, const std::string& lam) {
          auto r = grassmannian_singular_count(v, w, parse_rational(lam));
          return py::make_tuple(r.exponent, r.count);
        },
        py::arg("v"), py::arg("w"), py::arg("lam"));
  m.def("cb_flat",
        [](const Quiver& q, const IntVector& v, const IntVector& w) {
          auto r = cb_flat(q, v, w, Limits::from_env().max_flat_total);
          py::dict d;
          d["flat"] = r.flat;
          d["margin"] = r.margin;
          d["witness"] = r.witness ? py::object(py::make_tuple(r.witness->v0, r.witness->roots)) : py::object(py::none());
          return d;
        },
        py::arg("quiver"), py::arg("v"), py::arg("w"));
  m.def("classical_walls", [](const Quiver& q, const IntVector& v, const IntVector& w) {
    return hyperplane_list(classical_walls(q, v, w));
  });
  m.def("singular_hyperplanes", [](const Quiver& q, const IntVector& v, const IntVector& w) {
    return hyperplane_list(singular_hyperplanes(q, v, w).planes);
  });
  m.def("perverse_profile", [](std::int64_t n, std::int64_t mm) {
    auto p = perverse_profile(n, mm);
    py::dict d;
    d["n"] = p.n;
    d["m"] = p.m;
    d["q"] = p.q;
    d["d"] = p.d;
    d["filtration_index"] = p.filtration;
    return d;
  });
  m.def("mullineux", &mullineux, py::arg("partition"), py::arg("e"));
  m.def("wallcross_map", &wallcross_map, py::arg("partition"), py::arg("m"));
  m.def("heis_filtration_dims",
        [](int mm, int r, int n) { return heis_filtration_dims(mm, r, n, Limits::from_env().max_module_dim).dims; },
        py::arg("m"), py::arg("r"), py::arg("n"));
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}

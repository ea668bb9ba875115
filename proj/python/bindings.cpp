#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "cubering/errors.hpp"
#include "cubering/pipeline.hpp"
#include "cubering/shapes.hpp"

namespace py = pybind11;
using namespace cubering;

namespace {

py::tuple point(const Point3& p) { return py::make_tuple(p.x, p.y, p.z); }

py::tuple betti(const BettiNumbers& b) { return py::make_tuple(b[0], b[1], b[2]); }

py::dict report_dict(const AnalysisReport& r) {
  py::dict d;
  d["dims"] = py::make_tuple(r.dims[0], r.dims[1], r.dims[2]);
  d["voxels"] = r.voxels;
  d["betti"] = betti(r.betti);
  d["cells"] = py::dict(py::arg("Q") = r.q_cells(), py::arg("dQ") = r.dq_cells(), py::arg("K") = r.k_cells());

  py::list gens;
  for (const auto& g : r.generators) {
    gens.append(py::dict(py::arg("id") = g.id.value, py::arg("dim") = g.dim, py::arg("cell") = to_string(g.cube),
                         py::arg("cycle_size") = g.cycle_size));
  }
  d["generators"] = gens;

  py::list pairs;
  for (auto [i, j] : r.cup.rows) pairs.append(py::make_tuple(r.cup.h1[i].value, r.cup.h1[j].value));
  py::list h2;
  for (CellId b : r.cup.h2) h2.append(b.value);
  d["cup"] = py::dict(py::arg("pairs") = pairs, py::arg("h2") = h2, py::arg("entries") = r.cup.entries,
                      py::arg("rank") = r.cup.rank);

  py::list seeds;
  for (const auto& c : r.cavities) seeds.append(point(c.seed));
  d["cavities"] = py::dict(py::arg("seeds") = seeds, py::arg("entries") = r.cavity_entries,
                           py::arg("rank") = r.cavity_rank);

  py::list cycles;
  for (const auto& c : r.cycles) {
    py::list vox;
    for (const auto& p : c.voxels) vox.append(point(p));
    cycles.append(py::dict(py::arg("generator") = c.generator.value, py::arg("dim") = c.dim,
                           py::arg("voxels") = vox, py::arg("fallback") = c.fallback_used));
  }
  d["cycles"] = cycles;

  py::list verdicts;
  for (const auto& v : r.verdicts) {
    verdicts.append(py::dict(py::arg("stage") = v.stage, py::arg("check") = v.check, py::arg("passed") = v.passed,
                             py::arg("detail") = v.detail));
  }
  d["verdicts"] = verdicts;
  d["verified"] = r.verified();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homology and cup products of 3D binary pictures";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<Picture3D>(m, "Picture")
      .def(py::init<int, int, int>(), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_property_readonly("shape", [](const Picture3D& p) { return py::make_tuple(p.size_x(), p.size_y(), p.size_z()); })
      .def("get", [](const Picture3D& p, int x, int y, int z) { return p.get({x, y, z}); })
      .def("set", [](Picture3D& p, int x, int y, int z, bool v) { p.set({x, y, z}, v); }, py::arg("x"), py::arg("y"),
           py::arg("z"), py::arg("value") = true)
      .def("foreground_count", &Picture3D::foreground_count)
      .def("foreground", [](const Picture3D& p) {
        py::list out;
        for (const auto& v : p.foreground()) out.append(point(v));
        return out;
      })
      .def("__eq__", [](const Picture3D& a, const Picture3D& b) { return a == b; })
      .def("__repr__", [](const Picture3D& p) {
        return "Picture(" + std::to_string(p.size_x()) + ", " + std::to_string(p.size_y()) + ", " +
               std::to_string(p.size_z()) + ")";
      });

  m.def("parse_picture", [](const std::string& text) { return parse_picture(text); }, py::arg("text"));
  m.def("serialize_picture", &serialize_picture, py::arg("picture"));
  m.def("foreground_components", &foreground_components, py::arg("picture"));
  m.def("complement", [](const Picture3D& p, int padding) { return complement_picture(p, padding); },
        py::arg("picture"), py::arg("padding") = 1);

  m.def(
      "analyze",
      [](const Picture3D& p, bool complement, int padding, bool oracle, bool verify, bool cycles) {
        PipelineOptions opt;
        opt.complement = complement;
        opt.padding = padding;
        opt.oracle = oracle;
        opt.verify = verify;
        opt.cycles = cycles;
        AnalysisReport r;
        {
          py::gil_scoped_release release;
          r = analyze(p, opt);
        }
        return report_dict(r);
      },
      py::arg("picture"), py::arg("complement") = false, py::arg("padding") = 1, py::arg("oracle") = false,
      py::arg("verify") = false, py::arg("cycles") = false);

  m.def("betti_oracle", [](const Picture3D& p) {
    return betti(betti_oracle(complex_from_voxels(p.foreground()).chains()));
  });

  py::module_ shapes = m.def_submodule("shapes", "Test pictures");
  shapes.def("box", &shapes::box);
  shapes.def("box_minus_center", &shapes::box_minus_center, py::arg("n") = 3);
  shapes.def("solid_torus", &shapes::solid_torus);
  shapes.def("linked_rings", &shapes::linked_rings);
  shapes.def("unlinked_rings", &shapes::unlinked_rings);
  shapes.def("ring_chain", &shapes::ring_chain, py::arg("n"));
  shapes.def(
      "random_picture",
      [](std::uint64_t seed, int n, double fill) {
        std::mt19937_64 rng(seed);
        return shapes::random_picture(rng, n, fill);
      },
      py::arg("seed"), py::arg("n"), py::arg("fill") = 0.5);
}

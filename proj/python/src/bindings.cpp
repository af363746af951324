#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "gmt/area_invariant.hpp"
#include "gmt/errors.hpp"
#include "gmt/flat_norm.hpp"
#include "gmt/mesh_quality.hpp"
#include "gmt/polygon.hpp"
#include "gmt/reconstruction.hpp"

namespace py = pybind11;
using namespace gmt;

namespace {

using XY = std::pair<double, double>;

std::vector<Point2> points(const std::vector<XY>& xy) {
  std::vector<Point2> out;
  out.reserve(xy.size());
  for (const auto& [x, y] : xy) out.push_back({x, y});
  return out;
}

std::vector<XY> pairs(const std::vector<Point2>& pts) {
  std::vector<XY> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p.x, p.y);
  return out;
}

using ComplexPtr = std::shared_ptr<OrientedComplex2>;

ComplexPtr make_complex(const std::vector<XY>& vertices, const std::vector<std::array<std::size_t, 3>>& triangles,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Edge> e;
  for (const auto& [a, b] : edges) e.push_back({a, b});
  return std::make_shared<OrientedComplex2>(points(vertices), std::move(e), triangles);
}

FlatNormProblem problem(const ComplexPtr& complex, const Chain& chain, double lambda) {
  return FlatNormProblem::make(complex, chain, lambda);
}

}  // namespace

PYBIND11_MODULE(_gmt, m) {
  m.doc() = "Flat norm, mesh regularity and area-invariant reconstruction";

  auto base = py::register_exception<Error>(m, "GmtError", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<DegeneracyError>(m, "DegeneracyError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<OverflowError>(m, "CoefficientOverflowError", base.ptr());
  py::register_exception<SolverIntegrityError>(m, "SolverIntegrityError", base.ptr());
  py::register_exception<NoSolutionError>(m, "NoSolutionError", base.ptr());
  py::register_exception<InfeasibleStartError>(m, "InfeasibleStartError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  // chains and complexes

  py::class_<Chain>(m, "Chain")
      .def(py::init<int>(), py::arg("dimension") = 1)
      .def(py::init<int, std::map<std::size_t, Coefficient>>(), py::arg("dimension"), py::arg("terms"))
      .def_property_readonly("dimension", &Chain::dimension)
      .def_property_readonly("terms", &Chain::terms)
      .def("coefficient", &Chain::coefficient)
      .def("add", &Chain::add)
      .def("__len__", &Chain::size)
      .def("__eq__", [](const Chain& a, const Chain& b) { return a == b; })
      .def("__add__", [](const Chain& a, const Chain& b) { return a + b; })
      .def("__sub__", [](const Chain& a, const Chain& b) { return a - b; })
      .def("__rmul__", [](const Chain& c, Coefficient k) { return k * c; })
      .def("__repr__", [](const Chain& c) {
        return "Chain(" + std::to_string(c.dimension()) + ", " + py::repr(py::cast(c.terms())).cast<std::string>() + ")";
      });

  py::class_<OrientedComplex2, ComplexPtr>(m, "Complex")
      .def(py::init(&make_complex), py::arg("vertices"), py::arg("triangles"),
           py::arg("edges") = std::vector<std::pair<std::size_t, std::size_t>>{})
      .def_property_readonly("vertices", [](const OrientedComplex2& k) { return pairs(k.vertices()); })
      .def_property_readonly("edges",
                             [](const OrientedComplex2& k) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& e : k.edges()) out.emplace_back(e.tail, e.head);
                               return out;
                             })
      .def_property_readonly("triangles", &OrientedComplex2::triangles)
      .def("find_edge", &OrientedComplex2::find_edge)
      .def("path_chain", [](const OrientedComplex2& k, const std::vector<std::size_t>& path) { return k.path_chain(path); });

  m.def("boundary", [](const Chain& c, const OrientedComplex2& k) { return boundary(c, k); });
  m.def("mass", [](const Chain& c, const OrientedComplex2& k) { return mass(c, measure_complex(k)); });

  m.def("strip_complex", [](int n, double side) {
    auto s = strip_complex(n, side);
    py::dict out;
    out["complex"] = std::make_shared<OrientedComplex2>(std::move(s.complex));
    out["top_chain"] = s.top_chain;
    out["bottom_chain"] = s.bottom_chain;
    out["a"] = XY{s.a.x, s.a.y};
    out["b"] = XY{s.b.x, s.b.y};
    return out;
  }, py::arg("n"), py::arg("side") = 2.0);

  // flat norm

  py::class_<FlatNormDecomposition>(m, "Decomposition")
      .def_readonly("x_chain", &FlatNormDecomposition::x_chain)
      .def_readonly("s_chain", &FlatNormDecomposition::s_chain)
      .def_readonly("value", &FlatNormDecomposition::value)
      .def_readonly("is_integral", &FlatNormDecomposition::is_integral)
      .def_readonly("lp_iterations", &FlatNormDecomposition::lp_iterations);

  m.def("flat_norm", [](const ComplexPtr& k, const Chain& c, double lambda) {
    return solve_flat_norm(problem(k, c, lambda));
  }, py::arg("complex"), py::arg("chain"), py::arg("lam") = 1.0);

  m.def("lambda_sweep", [](const ComplexPtr& k, const Chain& c, const std::vector<double>& lambdas) {
    std::vector<std::pair<double, FlatNormDecomposition>> out;
    for (auto& e : lambda_sweep(problem(k, c, 1.0), lambdas)) out.emplace_back(e.lambda, std::move(e.decomposition));
    return out;
  }, py::arg("complex"), py::arg("chain"), py::arg("lambdas"));

  m.def("lambda_breakpoints", [](const ComplexPtr& k, const Chain& c, double lo, double hi) {
    return lambda_breakpoints(problem(k, c, 1.0), lo, hi);
  }, py::arg("complex"), py::arg("chain"), py::arg("lo"), py::arg("hi"));

  // mesh quality

  py::class_<RegularityReport>(m, "RegularityReport")
      .def_readonly("theta_min", &RegularityReport::theta_min)
      .def_readonly("vartheta", &RegularityReport::vartheta)
      .def_readonly("per_triangle_vartheta", &RegularityReport::per_triangle_vartheta)
      .def_readonly("c_theta_bound", &RegularityReport::c_theta_bound)
      .def_readonly("max_diameter", &RegularityReport::max_diameter);

  m.def("regularity_constant", [](const OrientedComplex2& k) { return regularity_constant(k); });
  m.def("c_theta", &c_theta, py::arg("theta"));
  m.def("beta_constant", &beta_constant);

  m.def("sdt_bounds", [](int p, int d, double vartheta, double delta_diam, double mass_t, double mass_bt,
                         const std::string& variant, int mm, int nn, double eps) {
    BoundParameters b;
    b.p = p;
    b.d = d;
    b.vartheta = vartheta;
    b.delta_diam = delta_diam;
    b.mass_t = mass_t;
    b.mass_bt = mass_bt;
    if (variant == "classic") b.variant = BoundVariant::classic;
    else if (variant == "tight") b.variant = BoundVariant::single_tight;
    else if (variant == "multi") b.variant = BoundVariant::multi;
    else throw DomainError("variant must be classic, tight or multi");
    b.m = mm;
    b.n = nn;
    b.eps = eps;
    const auto r = sdt_bounds(b);
    py::dict out;
    out["factor"] = r.factor;
    out["mass_p"] = r.mass_p;
    out["mass_boundary_p"] = r.mass_boundary_p;
    out["mass_q"] = r.mass_q;
    out["mass_r"] = r.mass_r;
    out["flat_distance"] = r.flat_distance;
    return out;
  }, py::arg("p"), py::arg("d"), py::arg("vartheta"), py::arg("delta_diam"), py::arg("mass_t"), py::arg("mass_bt"),
        py::arg("variant") = "classic", py::arg("m") = 1, py::arg("n") = 0, py::arg("eps") = 0.0);

  m.def("grid_rotation", [](const std::vector<XY>& directions) {
    const auto pts = points(directions);
    const auto g = grid_rotation(pts);
    return std::make_tuple(g.phi, g.guaranteed_min_angle, g.direction_count);
  });

  // area invariant

  m.def("is_simple", [](const std::vector<XY>& v) { return is_simple(points(v)); });
  m.def("disk_polygon_area", [](const std::vector<XY>& v, XY c, double r) {
    return disk_polygon_area(SimplePolygon::oriented(points(v)), {c.first, c.second}, r);
  }, py::arg("polygon"), py::arg("center"), py::arg("r"));
  m.def("signature", [](const std::vector<XY>& v, double r) { return signature(SimplePolygon(points(v)), r).values; },
        py::arg("polygon"), py::arg("r"));
  m.def("monte_carlo_area", [](const std::vector<XY>& v, XY c, double r, std::size_t samples, std::uint64_t seed) {
    const auto e = monte_carlo_area(SimplePolygon::oriented(points(v)), {c.first, c.second}, r, samples, seed);
    return std::make_pair(e.estimate, e.std_error);
  }, py::arg("polygon"), py::arg("center"), py::arg("r"), py::arg("samples"), py::arg("seed") = 0);
  m.def("circle_intersection_area", &circle_intersection_area, py::arg("d"), py::arg("r"), py::arg("R"));

  // reconstruction

  py::class_<FourierPolygon>(m, "FourierPolygon")
      .def(py::init<int, int>(), py::arg("m"), py::arg("n_vertices"))
      .def(py::init<int, int, std::vector<double>>(), py::arg("m"), py::arg("n_vertices"), py::arg("coefficients"))
      .def_property_readonly("harmonics", &FourierPolygon::harmonics)
      .def_property_readonly("vertex_count", &FourierPolygon::vertex_count)
      .def_property_readonly("coefficients",
                             [](const FourierPolygon& fp) {
                               const auto c = fp.coefficients();
                               return std::vector<double>(c.begin(), c.end());
                             })
      .def("__getitem__", [](const FourierPolygon& fp, std::pair<int, int> ij) { return fp(ij.first, ij.second); })
      .def("__setitem__", [](FourierPolygon& fp, std::pair<int, int> ij, double v) { fp(ij.first, ij.second) = v; })
      .def("padded", &FourierPolygon::padded)
      .def("vertices", [](const FourierPolygon& fp) { return pairs(synthesize(fp)); });

  auto target = [](const std::vector<double>& values, double r) { return Signature{r, values}; };

  m.def("objective", [target](const FourierPolygon& fp, const std::vector<double>& values, double r) {
    return objective(fp, target(values, r));
  }, py::arg("polygon"), py::arg("target"), py::arg("r"));

  m.def("best_fit_circle", [target](const std::vector<double>& values, double r) {
    return best_fit_circle(target(values, r), static_cast<int>(values.size())).polygon;
  }, py::arg("target"), py::arg("r"));

  auto state_dict = [](const SearchState& s) {
    py::dict out;
    out["polygon"] = s.incumbent;
    out["objective"] = s.objective;
    out["evaluations"] = s.evaluations;
    out["iterations"] = s.iterations;
    out["history"] = s.history;
    return out;
  };

  m.def("mads_solve", [target, state_dict](const std::vector<double>& values, double r, const FourierPolygon& initial,
                                           std::size_t budget) {
    MadsOptions opts;
    opts.budget = budget;
    return state_dict(mads_solve(target(values, r), initial, opts));
  }, py::arg("target"), py::arg("r"), py::arg("initial"), py::arg("budget") = 5000);

  m.def("reconstruct", [target, state_dict](const std::vector<double>& values, double r, const std::vector<int>& schedule,
                                            std::size_t budget) {
    MadsOptions opts;
    opts.budget = budget;
    py::list out;
    for (const auto& s :
         multiresolution_reconstruct(target(values, r), static_cast<int>(values.size()), schedule, opts))
      out.append(state_dict(s));
    return out;
  }, py::arg("target"), py::arg("r"), py::arg("schedule"), py::arg("budget") = 3000);
}

#include "gmt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "gmt/area_invariant.hpp"
#include "gmt/errors.hpp"
#include "gmt/flat_norm.hpp"
#include "gmt/io.hpp"
#include "gmt/mesh_quality.hpp"
#include "gmt/reconstruction.hpp"
#include "gmt/svg.hpp"

namespace gmt::cli {
namespace {

using io::fixed;

bool use_color() { return std::getenv("GMT_NO_COLOR") == nullptr && ::isatty(STDERR_FILENO) != 0; }

void report_error(std::ostream& err, const std::string& what) {
  if (use_color() && &err == &std::cerr) err << "\x1b[31merror:\x1b[0m " << what << '\n';
  else err << "error: " << what << '\n';
}

template <class Reader>
auto read_input(const std::string& path, Reader reader) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return reader(in, path);
}

void write_output(const std::string& path, const std::string& text) {
  io::atomic_write(path, [&](std::ostream& os) { os << text; });
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};

svg::Scene flat_norm_scene(const OrientedComplex2& complex, const Chain& input, const FlatNormDecomposition& dec) {
  svg::Scene scene;
  const auto& v = complex.vertices();
  for (const auto& [t, c] : dec.s_chain.terms()) {
    const auto& tri = complex.triangles()[t];
    scene.fills.push_back({{v[tri[0]], v[tri[1]], v[tri[2]]}, c > 0 ? "#4a90d9" : "#ff7f0e", "fill"});
  }
  for (const auto& e : complex.edges()) scene.segments.push_back({v[e.tail], v[e.head], "#cccccc", 0.75, "mesh"});
  auto add_chain = [&](const Chain& chain, const char* color, double width, const char* cls) {
    if (chain.dimension() != 1) return;
    for (const auto& [e, c] : chain.terms()) {
      (void)c;
      const auto& edge = complex.edges()[e];
      scene.segments.push_back({v[edge.tail], v[edge.head], color, width, cls});
    }
  };
  add_chain(input, "#000000", 3.0, "chain-input");
  add_chain(dec.x_chain, "#d62728", 1.5, "chain-x");
  return scene;
}

void print_decomposition_summary(std::ostream& out, const FlatNormDecomposition& dec) {
  out << "value " << fixed(dec.value) << '\n';
  out << "integral " << (dec.is_integral ? "true" : "false") << '\n';
}

int run_flatnorm(const RunConfig& c, std::ostream& out) {
  auto complex = std::make_shared<const OrientedComplex2>(read_input(c.mesh_path, io::read_mesh));
  Chain input = read_input(c.chain_path, io::read_chain);
  const FlatNormProblem problem = FlatNormProblem::make(complex, input, c.lambda);
  if (!c.sweep.empty()) {
    const auto sweep = lambda_sweep(problem, c.sweep);
    for (const auto& e : sweep) {
      out << "lambda " << fixed(e.lambda) << " value " << fixed(e.decomposition.value) << " integral "
          << (e.decomposition.is_integral ? "true" : "false") << '\n';
    }
    if (!c.out_path.empty()) {
      std::ostringstream text;
      io::write_sweep(text, sweep);
      write_output(c.out_path, text.str());
    }
    if (!c.svg_path.empty()) write_output(c.svg_path, svg::emit_svg(flat_norm_scene(*complex, input, sweep.back().decomposition)));
    return kExitOk;
  }
  const auto dec = solve_flat_norm(problem);
  print_decomposition_summary(out, dec);
  if (!c.out_path.empty()) {
    std::ostringstream text;
    io::write_decomposition(text, dec);
    write_output(c.out_path, text.str());
  }
  if (!c.svg_path.empty()) write_output(c.svg_path, svg::emit_svg(flat_norm_scene(*complex, input, dec)));
  return kExitOk;
}

int run_strip_demo(const RunConfig& c, std::ostream& out) {
  const auto strip = strip_complex(c.strip_n, c.strip_side);
  auto complex = std::make_shared<const OrientedComplex2>(strip.complex);
  const auto dec = solve_flat_norm(FlatNormProblem::make(complex, strip.top_chain, c.lambda));
  const double ab = distance(strip.a, strip.b);
  out << "value " << fixed(dec.value) << '\n';
  out << "ratio " << fixed(dec.value / ab) << '\n';
  out << "integral " << (dec.is_integral ? "true" : "false") << '\n';
  if (!c.out_path.empty()) {
    std::ostringstream text;
    io::write_decomposition(text, dec);
    write_output(c.out_path, text.str());
  }
  if (!c.svg_path.empty()) {
    auto scene = flat_norm_scene(*complex, strip.top_chain, dec);
    scene.segments.push_back({strip.a, strip.b, "#d62728", 1.5, "segment-ab"});
    write_output(c.svg_path, svg::emit_svg(scene));
  }
  return kExitOk;
}

nlohmann::ordered_json quality_json(const RegularityReport& r, std::size_t triangles) {
  nlohmann::ordered_json j;
  j["triangles"] = triangles;
  j["theta_min"] = r.theta_min;
  j["theta_min_degrees"] = r.theta_min * 180.0 / std::numbers::pi;
  j["vartheta"] = r.vartheta;
  j["c_theta_bound"] = r.c_theta_bound;
  j["max_diameter"] = r.max_diameter;
  j["per_triangle_vartheta"] = r.per_triangle_vartheta;
  return j;
}

int run_quality(const RunConfig& c, std::ostream& out) {
  const auto complex = read_input(c.mesh_path, io::read_mesh);
  const auto r = regularity_constant(complex);
  if (c.json) {
    out << quality_json(r, complex.triangle_count()).dump(2) << '\n';
  } else {
    out << "triangles          " << complex.triangle_count() << '\n';
    out << "theta_min          " << fixed(r.theta_min) << '\n';
    out << "theta_min_degrees  " << fixed(r.theta_min * 180.0 / std::numbers::pi) << '\n';
    out << "vartheta           " << fixed(r.vartheta) << '\n';
    out << "c_theta_bound      " << fixed(r.c_theta_bound) << '\n';
    out << "max_diameter       " << fixed(r.max_diameter) << '\n';
  }
  if (!c.out_path.empty()) write_output(c.out_path, quality_json(r, complex.triangle_count()).dump(2) + "\n");
  return kExitOk;
}

int run_bounds(const RunConfig& c, std::ostream& out) {
  BoundParameters q;
  q.p = c.p;
  q.d = c.d;
  q.vartheta = c.vartheta;
  q.delta_diam = c.diam;
  q.mass_t = c.mass_t;
  q.mass_bt = c.mass_bt;
  q.m = c.m;
  q.n = c.n;
  q.eps = c.eps;
  if (c.variant == "classic") q.variant = BoundVariant::classic;
  else if (c.variant == "tight") q.variant = BoundVariant::single_tight;
  else q.variant = BoundVariant::multi;
  const auto b = sdt_bounds(q);
  nlohmann::ordered_json j;
  j["variant"] = c.variant;
  j["factor"] = b.factor;
  j["mass_p"] = b.mass_p;
  j["mass_boundary_p"] = b.mass_boundary_p;
  j["mass_q"] = b.mass_q;
  j["mass_r"] = b.mass_r;
  j["flat_distance"] = b.flat_distance;
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "factor           " << fixed(b.factor) << '\n';
    out << "mass_p           " << fixed(b.mass_p) << '\n';
    out << "mass_boundary_p  " << fixed(b.mass_boundary_p) << '\n';
    out << "mass_q           " << fixed(b.mass_q) << '\n';
    out << "mass_r           " << fixed(b.mass_r) << '\n';
    out << "flat_distance    " << fixed(b.flat_distance) << '\n';
  }
  if (!c.out_path.empty()) write_output(c.out_path, j.dump(2) + "\n");
  return kExitOk;
}

int run_signature(const RunConfig& c, std::ostream& out) {
  const SimplePolygon polygon(read_input(c.polygon_path, io::read_polygon_csv));
  const Signature sig = signature(polygon, c.radius);
  std::ostringstream text;
  io::write_signature_csv(text, sig);
  if (c.out_path.empty()) out << text.str();
  else write_output(c.out_path, text.str());
  if (!c.svg_path.empty()) {
    svg::Scene scene;
    scene.disks.push_back({polygon.vertices().front(), c.radius, "#2ca02c"});
    scene.curves.push_back({polygon.vertices(), true, "#000000", 1.5, "curve"});
    scene.traces.push_back({sig.values, "#000000", std::size_t{0}});
    write_output(c.svg_path, svg::emit_svg(scene));
  }
  return kExitOk;
}

int run_reconstruct(const RunConfig& c, std::ostream& out) {
  const Signature target = read_input(c.signature_path, io::read_signature_csv);
  const int n = static_cast<int>(target.values.size());
  MadsOptions options;
  options.budget = c.budget;
  const auto stages = multiresolution_reconstruct(target, n, c.m_schedule, options);
  for (const auto& s : stages) {
    out << "stage m=" << s.incumbent.harmonics() << " objective " << fixed(s.objective) << " evaluations "
        << s.evaluations << '\n';
  }
  const auto& final_state = stages.back();
  if (!c.out_path.empty()) {
    std::ostringstream text;
    io::write_coefficients_csv(text, final_state.incumbent);
    write_output(c.out_path, text.str());
  }
  if (!c.svg_path.empty()) {
    svg::Scene scene;
    if (!c.reference_path.empty()) {
      scene.curves.push_back({read_input(c.reference_path, io::read_polygon_csv), true, "#000000", 2.0, "reference"});
    }
    for (std::size_t i = 0; i < stages.size(); ++i) {
      scene.curves.push_back({synthesize(stages[i].incumbent), true, kPalette[i % 7], 1.0, "reconstruction"});
    }
    scene.traces.push_back({target.values, "#000000", std::nullopt});
    scene.traces.push_back({detail::signature_values(synthesize(final_state.incumbent), target.radius),
                            kPalette[(stages.size() - 1) % 7], std::nullopt});
    write_output(c.svg_path, svg::emit_svg(scene));
  }
  return kExitOk;
}

}  // namespace

std::vector<int> parse_schedule(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw DomainError("bad harmonic schedule '" + text + "'");
    }
    if (used != s.size()) throw DomainError("bad harmonic schedule '" + text + "'");
    return v;
  };
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    const int lo = to_int(text.substr(0, colon));
    const int hi = to_int(text.substr(colon + 1));
    if (hi < lo) throw DomainError("harmonic range must be ascending");
    for (int m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  if (out.empty()) throw DomainError("harmonic schedule is empty");
  return out;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.subcommand) {
      case Subcommand::flatnorm: return run_flatnorm(c, out);
      case Subcommand::strip_demo: return run_strip_demo(c, out);
      case Subcommand::quality: return run_quality(c, out);
      case Subcommand::bounds: return run_bounds(c, out);
      case Subcommand::signature: return run_signature(c, out);
      case Subcommand::reconstruct: return run_reconstruct(c, out);
      case Subcommand::none: break;
    }
    err << "no subcommand given\n";
    return kExitUsage;
  } catch (const Error& e) {
    report_error(err, e.what());
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    report_error(err, e.what());
    return kExitDomain;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Flat norm, mesh regularity and area-invariant toolkit", "gmt"};
  app.require_subcommand(1);

  auto* flat = app.add_subcommand("flatnorm", "Simplicial flat norm decomposition of a chain");
  flat->add_option("--mesh", c.mesh_path, "Mesh text file")->required();
  flat->add_option("--chain", c.chain_path, "Chain text file")->required();
  flat->add_option("--lambda", c.lambda, "Scale on the filling mass")->check(CLI::NonNegativeNumber);
  flat->add_option("--sweep", c.sweep, "Comma-separated ascending scales")->delimiter(',');
  flat->add_option("--out", c.out_path, "Decomposition output file");
  flat->add_option("--svg", c.svg_path, "SVG figure output");

  auto* strip = app.add_subcommand("strip-demo", "Flat norm of the top chain on a strip of equilateral triangles");
  strip->add_option("--n", c.strip_n, "Number of diamonds")->check(CLI::PositiveNumber);
  strip->add_option("--side", c.strip_side, "Triangle side length")->check(CLI::PositiveNumber);
  strip->add_option("--lambda", c.lambda, "Scale on the filling mass")->check(CLI::NonNegativeNumber);
  strip->add_option("--out", c.out_path, "Decomposition output file");
  strip->add_option("--svg", c.svg_path, "SVG figure output");

  auto* quality = app.add_subcommand("quality", "Regularity report for a mesh");
  quality->add_option("--mesh", c.mesh_path, "Mesh text file")->required();
  quality->add_flag("--json", c.json, "Print JSON instead of text");
  quality->add_option("--out", c.out_path, "JSON report output file");

  auto* bounds = app.add_subcommand("bounds", "Deformation mass bounds");
  bounds->add_option("--p", c.p, "Complex dimension")->required();
  bounds->add_option("--d", c.d, "Current dimension")->required();
  bounds->add_option("--vartheta", c.vartheta, "Regularity constant")->required();
  bounds->add_option("--diam", c.diam, "Largest simplex diameter")->required();
  bounds->add_option("--mass-t", c.mass_t, "Mass of T")->required();
  bounds->add_option("--mass-bt", c.mass_bt, "Mass of the boundary of T")->required();
  bounds->add_option("--variant", c.variant, "classic|tight|multi")
      ->check(CLI::IsMember({"classic", "tight", "multi"}));
  bounds->add_option("--m", c.m, "Number of d-currents (multi)");
  bounds->add_option("--n", c.n, "Number of (d+1)-currents (multi)");
  bounds->add_option("--eps", c.eps, "Slack epsilon (tight, multi)");
  bounds->add_flag("--json", c.json, "Print JSON instead of text");
  bounds->add_option("--out", c.out_path, "JSON report output file");

  auto* sig = app.add_subcommand("signature", "Area-invariant signature of a polygon");
  sig->add_option("--polygon", c.polygon_path, "Polygon CSV (x,y per line, counterclockwise)")->required();
  sig->add_option("--radius", c.radius, "Disk radius")->required()->check(CLI::PositiveNumber);
  sig->add_option("--out", c.out_path, "Signature CSV output");
  sig->add_option("--svg", c.svg_path, "SVG figure output");

  std::string schedule = "8:20";
  auto* rec = app.add_subcommand("reconstruct", "Reconstruct a polygon from its signature");
  rec->add_option("--signature", c.signature_path, "Signature CSV")->required();
  rec->add_option("--m-schedule", schedule, "Harmonic counts, 'a:b' or 'a,b,c'");
  rec->add_option("--budget", c.budget, "Objective evaluations per stage")->check(CLI::PositiveNumber);
  rec->add_option("--out", c.out_path, "Coefficient CSV output");
  rec->add_option("--svg", c.svg_path, "SVG figure output");
  rec->add_option("--reference", c.reference_path, "Polygon CSV drawn for comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  if (flat->parsed()) c.subcommand = Subcommand::flatnorm;
  else if (strip->parsed()) c.subcommand = Subcommand::strip_demo;
  else if (quality->parsed()) c.subcommand = Subcommand::quality;
  else if (bounds->parsed()) c.subcommand = Subcommand::bounds;
  else if (sig->parsed()) c.subcommand = Subcommand::signature;
  else if (rec->parsed()) c.subcommand = Subcommand::reconstruct;

  if (c.subcommand == Subcommand::reconstruct) {
    try {
      c.m_schedule = parse_schedule(schedule);
    } catch (const Error& e) {
      err << e.what() << "\n\n" << rec->help();
      return kExitUsage;
    }
  }
  return execute(c, out, err);
}

}  // namespace gmt::cli

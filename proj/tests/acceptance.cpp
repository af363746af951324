// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmt/area_invariant.hpp"
#include "gmt/cli.hpp"
#include "gmt/flat_norm.hpp"
#include "gmt/io.hpp"
#include "gmt/mesh_quality.hpp"
#include "gmt/polygon.hpp"
#include "gmt/reconstruction.hpp"
#include "support/generators.hpp"

using namespace gmt;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::shared_ptr<const OrientedComplex2> shared(OrientedComplex2 k) {
  return std::make_shared<const OrientedComplex2>(std::move(k));
}

std::string num(double v) { return io::fixed(v, 9); }

Outcome strip_convergence() {
  Outcome o;
  for (int n : {1, 2, 4, 8}) {
    const auto strip = strip_complex(n);
    const auto dec = solve_flat_norm(FlatNormProblem::make(shared(strip.complex), strip.top_chain, 1.0));
    const double ratio = dec.value / distance(strip.a, strip.b);
    o.require(std::abs(ratio - 2.0 / std::numbers::sqrt3) <= 1e-9, "n=" + std::to_string(n) + " ratio " + num(ratio));
    o.require(dec.is_integral, "n=" + std::to_string(n) + " not integral");
  }
  if (o.ok) o.detail = "ratio 2/sqrt3 for n = 1, 2, 4, 8";
  return o;
}

Outcome integrality() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t solves = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = shared(testing::random_triangulation(rng, 50));
    const Chain t = testing::random_chain(rng, k->edge_count(), 1, 2);
    for (double lambda : {0.5, 1.0, 2.0}) {
      const auto dec = solve_flat_norm(FlatNormProblem::make(k, t, lambda));
      ++solves;
      o.require(dec.is_integral, "trial " + std::to_string(trial) + " not integral");
      o.require(dec.x_chain + boundary(dec.s_chain, *k) == t, "trial " + std::to_string(trial) + " T != X + dS");
    }
  }
  if (o.ok) o.detail = std::to_string(solves) + " solves integral and exact";
  return o;
}

Outcome brute_force() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t cases = 0;
  double worst = 0.0;
  for (const auto& complex : testing::small_complexes()) {
    const auto k = shared(complex);
    std::vector<Chain> chains;
    for (int i = 0; i < 12; ++i) chains.push_back(testing::random_chain(rng, k->edge_count(), 1, 2));
    // Boundaries of single triangles and of the whole complex.
    Chain all(2);
    for (std::size_t t = 0; t < k->triangle_count(); ++t) {
      Chain one(2);
      one.add(t, 1);
      chains.push_back(boundary(one, *k));
      all.add(t, 1);
    }
    chains.push_back(boundary(all, *k));
    for (const auto& t : chains) {
      for (double lambda : {0.3, 1.0, 2.5}) {
        const double lp = solve_flat_norm(FlatNormProblem::make(k, t, lambda)).value;
        const double bf = testing::brute_force_flat_norm(*k, t, lambda, 3);
        worst = std::max(worst, std::abs(lp - bf));
        ++cases;
      }
    }
  }
  o.require(worst <= 1e-9, "max |LP - enumeration| " + std::to_string(worst));
  if (o.ok) o.detail = std::to_string(cases) + " cases, max difference " + std::to_string(worst);
  return o;
}

Outcome lambda_threshold() {
  Outcome o;
  const auto k = shared(OrientedComplex2({{0, 0}, {1, 0}, {0.5, std::numbers::sqrt3 / 2}}, {}, {{0, 1, 2}}));
  const Chain loop = k->path_chain(std::vector<std::size_t>{0, 1, 2, 0});
  auto problem = FlatNormProblem::make(k, loop, 1.0);
  const double v1 = solve_flat_norm(problem).value;
  problem.lambda = 20.0;
  const double v20 = solve_flat_norm(problem).value;
  o.require(std::abs(v1 - std::sqrt(3.0) / 4) <= 1e-12, "value(1) " + num(v1));
  o.require(std::abs(v20 - 3.0) <= 1e-12, "value(20) " + num(v20));
  const auto bps = lambda_breakpoints(problem, 0.0, 20.0);
  o.require(bps.size() == 1, "expected one breakpoint, got " + std::to_string(bps.size()));
  if (o.ok) {
    o.require(std::abs(bps[0] - 4 * std::sqrt(3.0)) <= 1e-6, "crossover " + num(bps[0]));
    // The sweep brackets the switch: fill just below, keep just above.
    const std::vector<double> around{bps[0] - 1e-6, bps[0] + 1e-6};
    const auto sweep = lambda_sweep(problem, around);
    o.require(!sweep[0].decomposition.s_chain.empty() && sweep[1].decomposition.s_chain.empty(),
              "sweep does not switch at the crossover");
  }
  if (o.ok) o.detail = "crossover at " + num(bps[0]);
  return o;
}

Outcome circle_ngon() {
  Outcome o;
  double previous = 1e300;
  std::string detail;
  for (int n : {8, 16, 32}) {
    const auto c = testing::circle_ngon_complex(n, 4);
    const auto k = shared(c.complex);
    const Chain diff = c.circle - c.ngon;
    const auto dec = solve_flat_norm(FlatNormProblem::make(k, diff, 1.0));
    const double bound = (pi - 0.5 * n * std::sin(2 * pi / n)) * 1.02;
    const double m = mass(diff, measure_complex(*k));
    o.require(dec.value <= bound, "n=" + std::to_string(n) + " F " + num(dec.value) + " > " + num(bound));
    o.require(dec.value < previous, "n=" + std::to_string(n) + " not decreasing");
    o.require(m > 6.0, "n=" + std::to_string(n) + " mass " + num(m));
    previous = dec.value;
    detail += "n=" + std::to_string(n) + " F=" + io::fixed(dec.value, 5) + " M=" + io::fixed(m, 3) + " ";
  }
  if (o.ok) o.detail = detail;
  return o;
}

Outcome regularity() {
  Outcome o;
  const double s3 = std::numbers::sqrt3;
  const double c60 = c_theta(pi / 3);
  o.require(std::abs(c60 - (144 / pi + 4 * s3)) <= 1e-9, "c_theta(60) " + num(c60));
  const auto eq = regularity_constant(OrientedComplex2({{0, 0}, {1, 0}, {0.5, s3 / 2}}, {}, {{0, 1, 2}}));
  o.require(std::abs(eq.vartheta - c60) <= 1e-9, "equilateral vartheta " + num(eq.vartheta));
  const double beta = 4 * (2 + s3) * (24 + 12 * s3 + pi) / pi;
  o.require(std::abs(c_theta(pi / 6) - beta) <= 1e-9, "c_theta(30) " + num(c_theta(pi / 6)));
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int count = 0;
  while (count < 500) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    if (std::abs(signed_area2(a, b, c)) < 1e-6) continue;
    const auto r = regularity_constant(OrientedComplex2({a, b, c}, {}, {{0, 1, 2}}));
    if (r.theta_min < 5 * pi / 180) continue;
    ++count;
    o.require(r.vartheta <= c_theta(r.theta_min) * (1 + 1e-6), "random triangle above C_theta");
  }
  if (o.ok) o.detail = "c_theta(60) = " + num(c60) + ", beta = " + num(beta) + ", 500 triangles";
  return o;
}

Outcome grid() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(3, 40);
  double worst_margin = 1e300;
  for (int trial = 0; trial < 100; ++trial) {
    // Simple polygons are planar straight-line graphs with one edge per vertex.
    const auto poly = testing::random_star_polygon(rng, size(rng), 0.3, 1.5);
    std::vector<Point2> dirs;
    for (std::size_t i = 0; i < poly.size(); ++i) dirs.push_back(poly[(i + 1) % poly.size()] - poly[i]);
    const auto g = grid_rotation(dirs);
    for (const Point2& d : dirs) {
      for (double phi : {g.phi, g.phi + pi / 2}) {
        const double c = std::abs(d.x * std::cos(phi) + d.y * std::sin(phi)) / std::hypot(d.x, d.y);
        const double angle = std::acos(std::min(1.0, c));
        worst_margin = std::min(worst_margin, angle - g.guaranteed_min_angle);
        o.require(angle >= g.guaranteed_min_angle - 1e-9, "trial " + std::to_string(trial) + " angle too small");
      }
    }
  }
  if (o.ok) o.detail = "100 polygons, smallest margin " + std::to_string(worst_margin);
  return o;
}

Outcome area_oracle() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.2, 1.2), rad(0.2, 1.2);
  double worst_z = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto poly = SimplePolygon(testing::random_star_polygon(rng, 6 + trial % 25, 0.4, 1.4));
    const Point2 c = trial % 2 == 0 ? poly.vertices()[trial % poly.size()] : Point2{u(rng), u(rng)};
    const double r = rad(rng);
    const double exact = disk_polygon_area(poly, c, r);
    const auto mc = monte_carlo_area(poly, c, r, 1'000'000, 1000 + trial);
    const double z = mc.std_error > 0 ? std::abs(exact - mc.estimate) / mc.std_error : 0.0;
    worst_z = std::max(worst_z, z);
    o.require(std::abs(exact - mc.estimate) <= 4 * mc.std_error + 1e-12, "case " + std::to_string(trial));
  }
  const auto square = SimplePolygon({{0, 0}, {1000, 0}, {1000, 1000}, {0, 1000}});
  const double r = 0.1;
  const double corner = disk_polygon_area(square, {0, 0}, r);
  const double edge = disk_polygon_area(square, {500, 0}, r);
  o.require(std::abs(corner - pi * r * r / 4) <= 1e-9, "corner " + num(corner));
  o.require(std::abs(edge - pi * r * r / 2) <= 1e-9, "edge " + num(edge));
  if (o.ok) o.detail = "50 cases, worst |z| " + std::to_string(worst_z);
  return o;
}

Outcome reconstruction() {
  Outcome o;
  const auto flower = testing::polar_polygon(64, [](double t) { return 1.0 + 0.3 * std::cos(3 * t); });
  const auto target = signature(SimplePolygon(flower), 0.3);
  const double initial = objective(best_fit_circle(target, 64).polygon, target);
  MadsOptions opts;
  opts.budget = 3000;
  const std::vector<int> schedule{4, 6, 8};
  const auto stages = multiresolution_reconstruct(target, 64, schedule, opts);
  std::string detail = "initial " + io::fixed(initial, 6);
  for (std::size_t s = 0; s < stages.size(); ++s) {
    if (s > 0) o.require(stages[s].objective < stages[s - 1].objective, "stage " + std::to_string(s) + " did not improve");
    for (std::size_t i = 1; i < stages[s].history.size(); ++i)
      o.require(stages[s].history[i] <= stages[s].history[i - 1], "history increased");
    o.require(is_simple(synthesize(stages[s].incumbent)), "incumbent not simple");
    detail += " m=" + std::to_string(schedule[s]) + ":" + io::fixed(stages[s].objective, 6);
  }
  const double ratio = stages.back().objective / initial;
  o.require(ratio <= 0.1, "final/initial " + num(ratio));
  o.detail = detail + " ratio " + io::fixed(ratio, 4);
  return o;
}

Outcome round_trip_and_determinism() {
  Outcome o;
  std::mt19937_64 rng(10);
  // In-memory round trips.
  const auto k = testing::random_triangulation(rng, 30);
  {
    std::stringstream s;
    io::write_mesh(s, k);
    const auto back = io::read_mesh(s);
    o.require(back.vertices() == k.vertices() && back.edges() == k.edges() && back.triangles() == k.triangles(),
              "mesh");
  }
  const Chain chain = testing::random_chain(rng, k.edge_count(), 1, 9);
  {
    std::stringstream s;
    io::write_chain(s, chain);
    o.require(io::read_chain(s) == chain, "chain");
  }
  const auto poly = testing::random_star_polygon(rng, 50, 0.5, 1.5);
  {
    std::stringstream s;
    io::write_polygon_csv(s, poly);
    o.require(io::read_polygon_csv(s) == poly, "polygon");
  }
  const auto sig = signature(SimplePolygon(poly), 0.37);
  {
    std::stringstream s;
    io::write_signature_csv(s, sig);
    o.require(io::read_signature_csv(s) == sig, "signature");
  }
  FourierPolygon fp(6, 50);
  std::normal_distribution<double> g;
  for (double& v : fp.coefficients()) v = g(rng);
  {
    std::stringstream s;
    io::write_coefficients_csv(s, fp);
    o.require(io::read_coefficients_csv(s) == fp, "coefficients");
  }
  const auto dec = solve_flat_norm(FlatNormProblem::make(shared(k), chain, 0.8));
  {
    std::stringstream s;
    io::write_decomposition(s, dec);
    const auto back = io::read_decomposition(s);
    o.require(back.x_chain == dec.x_chain && back.s_chain == dec.s_chain && back.value == dec.value, "decomposition");
  }

  // Repeated CLI runs.
  const fs::path dir = fs::temp_directory_path() / "gmt_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto write = [&](const std::string& name, auto writer, const auto& value) {
    io::atomic_write(dir / name, [&](std::ostream& os) { writer(os, value); });
    return (dir / name).string();
  };
  const auto mesh_path = write("mesh.txt", io::write_mesh, k);
  const auto chain_path = write("chain.txt", io::write_chain, chain);
  const auto poly_path = write("poly.csv", io::write_polygon_csv, poly);
  auto invoke = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "gmt");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::to_string(code) + out.str() + err.str();
  };
  std::vector<std::string> runs;
  for (int rep = 0; rep < 2; ++rep) {
    const std::string tag = std::to_string(rep);
    std::string all;
    all += invoke({"flatnorm", "--mesh", mesh_path, "--chain", chain_path, "--sweep", "0.5,1,2", "--out",
                   (dir / ("sweep" + tag)).string(), "--svg", (dir / ("flat" + tag + ".svg")).string()});
    all += invoke({"strip-demo", "--n", "4", "--svg", (dir / ("strip" + tag + ".svg")).string()});
    all += invoke({"quality", "--mesh", mesh_path, "--json"});
    all += invoke({"bounds", "--p", "2", "--d", "1", "--vartheta", "52.764", "--diam", "0.1", "--mass-t", "1",
                   "--mass-bt", "2", "--variant", "tight", "--eps", "0.5"});
    const auto sig_path = (dir / ("sig" + tag + ".csv")).string();
    all += invoke({"signature", "--polygon", poly_path, "--radius", "0.37", "--out", sig_path, "--svg",
                   (dir / ("sig" + tag + ".svg")).string()});
    all += invoke({"reconstruct", "--signature", sig_path, "--m-schedule", "2,3", "--budget", "400", "--out",
                   (dir / ("coeffs" + tag + ".csv")).string(), "--svg", (dir / ("rec" + tag + ".svg")).string(),
                   "--reference", poly_path});
    for (const char* f : {"sweep", "flat.svg", "strip.svg", "sig.csv", "sig.svg", "coeffs.csv", "rec.svg"}) {
      std::string name(f);
      const auto dot = name.find('.');
      name = dot == std::string::npos ? name + tag : name.substr(0, dot) + tag + name.substr(dot);
      all += io::read_file(dir / name);
    }
    runs.push_back(all);
  }
  o.require(runs[0] == runs[1], "CLI outputs differ between runs");
  fs::remove_all(dir);
  if (o.ok) o.detail = "6 formats round trip, 6 subcommands byte-identical";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "strip convergence constant", 1.0, strip_convergence},
      {2, "simplicial integrality", 60.0, integrality},
      {3, "brute-force oracle equivalence", 10.0, brute_force},
      {4, "lambda threshold", 5.0, lambda_threshold},
      {5, "circle and n-gon flat distance", 30.0, circle_ngon},
      {6, "regularity constants", 5.0, regularity},
      {7, "grid rotation", 5.0, grid},
      {8, "area-invariant oracle", 60.0, area_oracle},
      {9, "reconstruction regression", 300.0, reconstruction},
      {10, "round trip and determinism", 60.0, round_trip_and_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.time_limit) {
      o.ok = false;
      o.detail += " (over the " + io::fixed(c.time_limit, 0) + " s limit)";
    }
    failures += o.ok ? 0 : 1;
    std::printf("criterion %2d %-32s %s  %7.2fs  %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

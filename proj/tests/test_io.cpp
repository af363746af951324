#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "gmt/errors.hpp"
#include "gmt/io.hpp"
#include "support/generators.hpp"

using namespace gmt;
namespace fs = std::filesystem;

namespace {

template <class T, class Write, class Read>
T round_trip(const T& value, Write write, Read read) {
  std::stringstream s;
  write(s, value);
  return read(s, "<test>");
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("gmt_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(io::fixed(1.0) == "1.000000000");
  CHECK(io::fixed(-0.5, 3) == "-0.500");
  CHECK(io::fixed(2.0 / 3.0) == "0.666666667");
  CHECK(io::exact(0.1) == "0.1");
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) * std::pow(10.0, i % 13 - 6);
    CHECK(std::stod(io::exact(v)) == v);
  }
}

TEST_CASE("mesh round trip") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 20; ++trial) {
    const auto k = testing::random_triangulation(rng);
    const auto back = round_trip(k, io::write_mesh, io::read_mesh);
    CHECK(back.vertices() == k.vertices());
    CHECK(back.edges() == k.edges());
    CHECK(back.triangles() == k.triangles());
  }
}

TEST_CASE("chain round trip") {
  std::mt19937_64 rng(83);
  for (int dim = 0; dim <= 2; ++dim) {
    const Chain c = testing::random_chain(rng, 40, dim, 1000);
    CHECK(round_trip(c, io::write_chain, io::read_chain) == c);
  }
  CHECK(round_trip(Chain(1), io::write_chain, io::read_chain) == Chain(1));
}

TEST_CASE("decomposition and sweep round trip") {
  FlatNormDecomposition d;
  d.x_chain.add(3, -2);
  d.s_chain.add(1, 5);
  d.value = 1.0 / 3.0;
  d.is_integral = true;
  const auto back = round_trip(d, io::write_decomposition, io::read_decomposition);
  CHECK(back.x_chain == d.x_chain);
  CHECK(back.s_chain == d.s_chain);
  CHECK(back.value == d.value);
  CHECK(back.is_integral);

  std::vector<SweepEntry> sweep{{0.5, d}, {2.0, FlatNormDecomposition{}}};
  const auto sb = round_trip(sweep, io::write_sweep, io::read_sweep);
  REQUIRE(sb.size() == 2);
  CHECK(sb[0].lambda == 0.5);
  CHECK(sb[0].decomposition.s_chain == d.s_chain);
  CHECK(sb[1].lambda == 2.0);
  CHECK(sb[1].decomposition.x_chain.empty());
}

TEST_CASE("polygon, signature and coefficient round trips") {
  std::mt19937_64 rng(84);
  const auto poly = testing::random_star_polygon(rng, 37, 0.3, 2.0);
  CHECK(round_trip(poly, io::write_polygon_csv, io::read_polygon_csv) == poly);

  Signature sig{0.3, {}};
  std::uniform_real_distribution<double> u(0.0, 0.28);
  for (int i = 0; i < 37; ++i) sig.values.push_back(u(rng));
  CHECK(round_trip(sig, io::write_signature_csv, io::read_signature_csv) == sig);

  FourierPolygon fp(5, 64);
  std::normal_distribution<double> g;
  for (double& v : fp.coefficients()) v = g(rng);
  CHECK(round_trip(fp, io::write_coefficients_csv, io::read_coefficients_csv) == fp);
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream mesh("# comment\nv 0 0\nv 1 0\nv 0 1\nt 0 1 x\n");
  try {
    io::read_mesh(mesh, "m.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("m.txt") != std::string::npos);
  }
  std::istringstream chain("dim 1\n0 1\n1 one\n");
  CHECK_THROWS_AS(io::read_chain(chain), ParseError);
  std::istringstream poly("0,0\n1,0\n1\n");
  try {
    io::read_polygon_csv(poly);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream sig("# r=0.5 N=3\n0,0.1\n1,0.1\n");
  CHECK_THROWS_AS(io::read_signature_csv(sig), ParseError);  // count mismatch
  std::istringstream coeffs("2,16\n5,0,1.0\n");
  CHECK_THROWS_AS(io::read_coefficients_csv(coeffs), ParseError);
}

TEST_CASE("atomic write") {
  const auto dir = scratch_dir("atomic");
  const auto target = dir / "out.txt";
  io::atomic_write(target, [](std::ostream& o) { o << "first\n"; });
  CHECK(io::read_file(target) == "first\n");

  // A failing writer leaves the old content and no temporary files behind.
  CHECK_THROWS(io::atomic_write(target, [](std::ostream& o) {
    o << "partial";
    throw std::runtime_error("disk full");
  }));
  CHECK(io::read_file(target) == "first\n");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);

  const auto fresh = dir / "never.txt";
  CHECK_THROWS(io::atomic_write(fresh, [](std::ostream&) { throw std::runtime_error("boom"); }));
  CHECK_FALSE(fs::exists(fresh));

  CHECK_THROWS_AS(io::atomic_write(dir / "missing" / "x.txt", [](std::ostream& o) { o << 1; }), Error);
  CHECK_THROWS_AS(io::read_file(dir / "nope.txt"), Error);
  fs::remove_all(dir);
}

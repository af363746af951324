#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gmt::cli {

enum class Subcommand { none, flatnorm, signature, reconstruct, bounds, quality, strip_demo };

/// Parsed command line for one `gmt` invocation.
struct RunConfig {
  Subcommand subcommand = Subcommand::none;

  // inputs
  std::string mesh_path;
  std::string chain_path;
  std::string polygon_path;
  std::string signature_path;
  std::string reference_path;

  // outputs
  std::string out_path;
  std::string svg_path;
  bool json = false;

  // flat norm
  double lambda = 1.0;
  std::vector<double> sweep;
  int strip_n = 2;
  double strip_side = 2.0;

  // area invariant and reconstruction
  double radius = 0.0;
  std::vector<int> m_schedule;
  std::size_t budget = 20000;

  // deformation bounds
  int p = 2;
  int d = 1;
  double vartheta = 0.0;
  double diam = 0.0;
  double mass_t = 0.0;
  double mass_bt = 0.0;
  std::string variant = "classic";
  int m = 1;
  int n = 0;
  double eps = 0.0;
};

// Exit codes: 0 success, 1 domain or input errors, 2 usage errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Parses `argv` (argv[0] is the program name) and runs the subcommand. Reports go to
// `out`, diagnostics and usage text to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Runs an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

// "8:20" (inclusive range) or "4,6,8".
std::vector<int> parse_schedule(const std::string& text);

}  // namespace gmt::cli

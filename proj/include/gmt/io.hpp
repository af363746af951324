#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gmt/area_invariant.hpp"
#include "gmt/complex.hpp"
#include "gmt/flat_norm.hpp"
#include "gmt/reconstruction.hpp"

namespace gmt::io {

// Fixed-point text with the given number of decimals, independent of the C locale.
std::string fixed(double value, int decimals = 9);

// Shortest text that parses back to the same double.
std::string exact(double value);

// Mesh text: `v x y`, `e tail head`, `t i j k` lines (0-based), `#` comments.
OrientedComplex2 read_mesh(std::istream& in, const std::string& source = "<mesh>");
void write_mesh(std::ostream& out, const OrientedComplex2& complex);

// Chain text: `dim d` followed by `simplex_index coefficient` lines.
Chain read_chain(std::istream& in, const std::string& source = "<chain>");
void write_chain(std::ostream& out, const Chain& chain);

// `value V`, `integral true|false`, then `X:` and `S:` chain blocks.
void write_decomposition(std::ostream& out, const FlatNormDecomposition& decomposition);
FlatNormDecomposition read_decomposition(std::istream& in, const std::string& source = "<decomposition>");

// Sweep output: one decomposition block per scale, each preceded by `lambda L`.
void write_sweep(std::ostream& out, const std::vector<SweepEntry>& sweep);
std::vector<SweepEntry> read_sweep(std::istream& in, const std::string& source = "<sweep>");

// Polygon CSV: `x,y` per line.
std::vector<Point2> read_polygon_csv(std::istream& in, const std::string& source = "<polygon>");
void write_polygon_csv(std::ostream& out, const std::vector<Point2>& vertices);

// Signature CSV: `# r=<value> N=<count>` then `index,g` per line.
Signature read_signature_csv(std::istream& in, const std::string& source = "<signature>");
void write_signature_csv(std::ostream& out, const Signature& signature);

// Coefficient CSV: first line `m,N`, then `i,j,a_ij` rows with i in 1..4, j in 0..m-1.
FourierPolygon read_coefficients_csv(std::istream& in, const std::string& source = "<coefficients>");
void write_coefficients_csv(std::ostream& out, const FourierPolygon& fp);

// Runs `writer` against a temporary file next to `path` and renames it into place.
// If the writer throws or the stream fails, the temporary file is removed and `path`
// is left untouched.
void atomic_write(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

std::string read_file(const std::filesystem::path& path);

}  // namespace gmt::io

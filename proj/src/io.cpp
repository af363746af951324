#include "gmt/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "gmt/errors.hpp"

namespace gmt::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_csv(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

// All non-blank lines of a stream with their 1-based line numbers, and a cursor over
// them. Comment lines (`#`) are kept so headers can be inspected; `next` skips them.
class Cursor {
 public:
  Cursor(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string buffer;
    std::size_t n = 0;
    while (std::getline(in, buffer)) {
      ++n;
      const auto t = trim(buffer);
      if (!t.empty()) lines_.push_back({n, std::string(t)});
    }
  }

  const Line* peek() {
    while (pos_ < lines_.size() && lines_[pos_].text.front() == '#') ++pos_;
    return pos_ < lines_.size() ? &lines_[pos_] : nullptr;
  }

  const Line* next() {
    const Line* l = peek();
    if (l) {
      current_ = l->number;
      ++pos_;
    }
    return l;
  }

  const std::vector<Line>& all() const { return lines_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, current_, what); }
  [[noreturn]] void fail_at(std::size_t line, const std::string& what) const { throw ParseError(source_, line, what); }

  double number(std::string_view s) const {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) fail("expected a finite number, got '" + std::string(s) + "'");
    return v;
  }

  template <class Int>
  Int integer(std::string_view s) const {
    Int v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) fail("expected an integer, got '" + std::string(s) + "'");
    return v;
  }

  const std::string& source() const { return source_; }
  std::size_t current() const { return current_; }

 private:
  std::string source_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t current_ = 0;
};

bool is_chain_entry(std::string_view text) {
  const auto f = split_ws(text);
  return f.size() == 2 && f[0] != "dim" && f[0] != "value" && f[0] != "lambda" && f[0] != "integral";
}

// Reads `dim d` and the entries that follow, stopping at the first line that is not a
// chain entry.
Chain read_chain_block(Cursor& cur) {
  const Line* head = cur.next();
  if (!head) cur.fail("expected 'dim d'");
  const auto h = split_ws(head->text);
  if (h.size() != 2 || h[0] != "dim") cur.fail("expected 'dim d'");
  const int dim = cur.integer<int>(h[1]);
  if (dim < 0 || dim > 2) cur.fail("chain dimension must be 0, 1 or 2");
  Chain chain(dim);
  while (const Line* l = cur.peek()) {
    if (!is_chain_entry(l->text)) break;
    cur.next();
    const auto f = split_ws(l->text);
    const auto index = cur.integer<std::size_t>(f[0]);
    const auto c = cur.integer<Coefficient>(f[1]);
    if (chain.coefficient(index) != 0) cur.fail("simplex index listed twice");
    if (c == 0) cur.fail("chain coefficients must be nonzero");
    chain.add(index, c);
  }
  return chain;
}

void expect(Cursor& cur, std::string_view text) {
  const Line* l = cur.next();
  if (!l || l->text != text) cur.fail("expected '" + std::string(text) + "'");
}

FlatNormDecomposition read_decomposition_block(Cursor& cur) {
  FlatNormDecomposition d;
  const Line* l = cur.next();
  if (!l) cur.fail("expected 'value V'");
  auto f = split_ws(l->text);
  if (f.size() != 2 || f[0] != "value") cur.fail("expected 'value V'");
  d.value = cur.number(f[1]);
  d.lp_objective = d.value;
  l = cur.next();
  if (!l) cur.fail("expected 'integral true|false'");
  f = split_ws(l->text);
  if (f.size() != 2 || f[0] != "integral" || (f[1] != "true" && f[1] != "false"))
    cur.fail("expected 'integral true|false'");
  d.is_integral = f[1] == "true";
  expect(cur, "X:");
  d.x_chain = read_chain_block(cur);
  expect(cur, "S:");
  d.s_chain = read_chain_block(cur);
  return d;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace

std::string fixed(double value, int decimals) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) return exact(value);
  std::string out(buf, ptr);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string exact(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

OrientedComplex2 read_mesh(std::istream& in, const std::string& source) {
  Cursor cur(in, source);
  std::vector<Point2> vertices;
  std::vector<Edge> edges;
  std::vector<std::array<std::size_t, 3>> triangles;
  while (const Line* l = cur.next()) {
    const auto f = split_ws(l->text);
    if (f[0] == "v") {
      if (f.size() != 3) cur.fail("expected 'v x y'");
      vertices.push_back({cur.number(f[1]), cur.number(f[2])});
    } else if (f[0] == "e") {
      if (f.size() != 3) cur.fail("expected 'e tail head'");
      edges.push_back({cur.integer<std::size_t>(f[1]), cur.integer<std::size_t>(f[2])});
    } else if (f[0] == "t") {
      if (f.size() != 4) cur.fail("expected 't i j k'");
      triangles.push_back({cur.integer<std::size_t>(f[1]), cur.integer<std::size_t>(f[2]),
                           cur.integer<std::size_t>(f[3])});
    } else {
      cur.fail("unknown record '" + std::string(f[0]) + "'");
    }
  }
  try {
    return OrientedComplex2(std::move(vertices), std::move(edges), std::move(triangles));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, cur.current(), e.what());
  }
}

void write_mesh(std::ostream& out, const OrientedComplex2& complex) {
  out << "# vertices " << complex.vertex_count() << " edges " << complex.edge_count() << " triangles "
      << complex.triangle_count() << '\n';
  for (const auto& v : complex.vertices()) out << "v " << exact(v.x) << ' ' << exact(v.y) << '\n';
  for (const auto& e : complex.edges()) out << "e " << e.tail << ' ' << e.head << '\n';
  for (const auto& t : complex.triangles()) out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

Chain read_chain(std::istream& in, const std::string& source) {
  Cursor cur(in, source);
  if (!cur.peek()) cur.fail("empty chain file");
  Chain chain = read_chain_block(cur);
  if (const Line* l = cur.next()) cur.fail_at(l->number, "unexpected line '" + l->text + "'");
  return chain;
}

void write_chain(std::ostream& out, const Chain& chain) {
  out << "dim " << chain.dimension() << '\n';
  for (const auto& [index, c] : chain.terms()) out << index << ' ' << c << '\n';
}

void write_decomposition(std::ostream& out, const FlatNormDecomposition& d) {
  out << "value " << exact(d.value) << '\n';
  out << "integral " << (d.is_integral ? "true" : "false") << '\n';
  out << "X:\n";
  write_chain(out, d.x_chain);
  out << "S:\n";
  write_chain(out, d.s_chain);
}

FlatNormDecomposition read_decomposition(std::istream& in, const std::string& source) {
  Cursor cur(in, source);
  FlatNormDecomposition d = read_decomposition_block(cur);
  if (const Line* l = cur.next()) cur.fail_at(l->number, "unexpected line '" + l->text + "'");
  return d;
}

void write_sweep(std::ostream& out, const std::vector<SweepEntry>& sweep) {
  for (const auto& e : sweep) {
    out << "lambda " << exact(e.lambda) << '\n';
    write_decomposition(out, e.decomposition);
  }
}

std::vector<SweepEntry> read_sweep(std::istream& in, const std::string& source) {
  Cursor cur(in, source);
  std::vector<SweepEntry> out;
  while (const Line* l = cur.next()) {
    const auto f = split_ws(l->text);
    if (f.size() != 2 || f[0] != "lambda") cur.fail("expected 'lambda L'");
    const double lambda = cur.number(f[1]);
    out.push_back({lambda, read_decomposition_block(cur)});
  }
  return out;
}

std::vector<Point2> read_polygon_csv(std::istream& in, const std::string& source) {
  Cursor cur(in, source);
  std::vector<Point2> out;
  while (const Line* l = cur.next()) {
    const auto f = split_csv(l->text);
    if (f.size() != 2) cur.fail("expected 'x,y'");
    out.push_back({cur.number(f[0]), cur.number(f[1])});
  }
  return out;
}

void write_polygon_csv(std::ostream& out, const std::vector<Point2>& vertices) {
  for (const auto& v : vertices) out << exact(v.x) << ',' << exact(v.y) << '\n';
}

Signature read_signature_csv(std::istream& in, const std::string& source) {
  Cursor cur(in, source);
  Signature sig;
  std::size_t declared = 0;
  bool have_header = false;
  for (const Line& l : cur.all()) {
    if (l.text.front() != '#') break;
    const auto f = split_ws(std::string_view(l.text).substr(1));
    double r = 0.0;
    std::size_t n = 0;
    bool got_r = false, got_n = false;
    for (auto tok : f) {
      if (tok.starts_with("r=")) {
        r = cur.number(tok.substr(2));
        got_r = true;
      } else if (tok.starts_with("N=")) {
        n = cur.integer<std::size_t>(tok.substr(2));
        got_n = true;
      }
    }
    if (got_r && got_n) {
      sig.radius = r;
      declared = n;
      have_header = true;
      break;
    }
  }
  if (!have_header) cur.fail_at(1, "missing '# r=<value> N=<count>' header");
  if (!(sig.radius > 0.0)) cur.fail_at(1, "radius must be positive");
  while (const Line* l = cur.next()) {
    const auto f = split_csv(l->text);
    if (f.size() != 2) cur.fail("expected 'index,g'");
    const auto index = cur.integer<std::size_t>(f[0]);
    if (index != sig.values.size()) cur.fail("signature indices must run 0, 1, 2, ...");
    sig.values.push_back(cur.number(f[1]));
  }
  if (sig.values.size() != declared)
    cur.fail("header declares N=" + std::to_string(declared) + " but " + std::to_string(sig.values.size()) +
             " values follow");
  return sig;
}

void write_signature_csv(std::ostream& out, const Signature& sig) {
  out << "# r=" << exact(sig.radius) << " N=" << sig.values.size() << '\n';
  for (std::size_t k = 0; k < sig.values.size(); ++k) out << k << ',' << exact(sig.values[k]) << '\n';
}

FourierPolygon read_coefficients_csv(std::istream& in, const std::string& source) {
  Cursor cur(in, source);
  const Line* head = cur.next();
  if (!head) cur.fail("empty coefficient file");
  const auto h = split_csv(head->text);
  if (h.size() != 2) cur.fail("expected 'm,N'");
  const int m = cur.integer<int>(h[0]);
  const int n = cur.integer<int>(h[1]);
  if (m < 1 || n < 3) cur.fail("need m >= 1 and N >= 3");
  FourierPolygon fp(m, n);
  std::vector<bool> seen(4 * static_cast<std::size_t>(m), false);
  while (const Line* l = cur.next()) {
    const auto f = split_csv(l->text);
    if (f.size() != 3) cur.fail("expected 'i,j,a_ij'");
    const int i = cur.integer<int>(f[0]);
    const int j = cur.integer<int>(f[1]);
    if (i < 1 || i > 4 || j < 0 || j >= m) cur.fail("coefficient index out of range");
    const std::size_t slot = static_cast<std::size_t>((i - 1) * m + j);
    if (seen[slot]) cur.fail("coefficient listed twice");
    seen[slot] = true;
    fp(i - 1, j) = cur.number(f[2]);
  }
  return fp;
}

void write_coefficients_csv(std::ostream& out, const FourierPolygon& fp) {
  out << fp.harmonics() << ',' << fp.vertex_count() << '\n';
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < fp.harmonics(); ++j) out << (i + 1) << ',' << j << ',' << exact(fp(i, j)) << '\n';
  }
}

void atomic_write(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::path tmp;
  for (int attempt = 0;; ++attempt) {
    tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(attempt));
    if (!fs::exists(tmp)) break;
  }
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
      writer(out);
      out.flush();
      if (!out) throw Error("write to '" + tmp.string() + "' failed");
    }
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gmt::io

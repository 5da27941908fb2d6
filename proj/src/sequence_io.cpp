#include "morrey/sequence_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace morrey {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, int line_no) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw FormatError("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
  }
  return v;
}

double parse_real(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw FormatError("line " + std::to_string(line_no) + ": bad real '" + tok + "'");
  }
}

}  // namespace

FiniteSequence read_sequence(std::istream& in, std::uint64_t cell_limit) {
  std::string line;
  int line_no = 0;
  int dim = 0;
  std::vector<std::pair<Point, double>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    if (dim == 0) {
      if (toks.size() != 2 || toks[0] != "dim") {
        throw FormatError("line " + std::to_string(line_no) + ": expected 'dim <d>' header");
      }
      const auto d = parse_int(toks[1], line_no);
      if (d < 1 || d > kMaxDim) {
        throw FormatError("line " + std::to_string(line_no) + ": unsupported dimension " + toks[1]);
      }
      dim = static_cast<int>(d);
      continue;
    }
    if (toks.size() != static_cast<std::size_t>(dim) + 1) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                        " coordinates and a value");
    }
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = parse_int(toks[static_cast<std::size_t>(i)], line_no);
    const double v = parse_real(toks.back(), line_no);
    if (!std::isfinite(v)) {
      throw FormatError("line " + std::to_string(line_no) + ": value must be finite");
    }
    entries.emplace_back(p, v);
  }
  if (dim == 0) throw FormatError("missing 'dim <d>' header");
  try {
    return FiniteSequence::from_entries(dim, entries, cell_limit);
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

FiniteSequence read_sequence_file(const std::string& path, std::uint64_t cell_limit) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_sequence(in, cell_limit);
}

void write_sequence(std::ostream& out, const FiniteSequence& x, bool include_zeros) {
  out << "dim " << x.dim() << '\n';
  const BoundingBox box = include_zeros ? x.box() : support_hull(x);
  const auto old_precision = out.precision(17);
  for_each_point(box, [&](const Point& p) {
    const double v = x.at(p);
    if (v == 0.0 && !include_zeros) return;
    for (int i = 0; i < p.dim(); ++i) out << p[i] << ' ';
    out << v << '\n';
  });
  out.precision(old_precision);
}

void write_sequence_file(const std::string& path, const FiniteSequence& x, bool include_zeros) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  write_sequence(out, x, include_zeros);
}

}  // namespace morrey

#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "polyrep/engine.hpp"

namespace polyrep {

namespace {

std::string float_repr(const Rational& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v.get_d());
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r' && ch != ' ' && ch != '\t') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

void write_grid_csv(std::ostream& out, const GridData& grid, bool sum_footer) {
  const int s = grid.dim();
  for (int i = 0; i < s; ++i) out << 'i' << i << ',';
  out << "value,float,trusted\n";
  const auto& trusted = grid.trusted_box();
  grid.for_each([&](const MultiIndex& idx, const Rational& v) {
    for (int i = 0; i < s; ++i) out << idx[i] << ',';
    out << rational_to_string(v) << ',' << float_repr(v) << ','
        << ((trusted && trusted->contains(idx)) ? 1 : 0) << '\n';
  });
  if (sum_footer) out << "# sum = " << rational_to_string(grid.total_sum()) << '\n';
}

GridData read_grid_csv(std::istream& in) {
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty grid document");
  ++line_no;
  const auto header = split_csv_line(line);
  int dim = 0;
  while (dim < static_cast<int>(header.size()) && header[dim] == "i" + std::to_string(dim)) ++dim;
  if (dim == 0)
    throw ParseError("grid header must start with index columns i0, i1, ...");
  if (dim >= static_cast<int>(header.size()) || header[dim] != "value")
    throw ParseError("grid header must contain a 'value' column after the index columns");

  std::map<std::vector<int>, Rational> cells;
  std::vector<int> lo, hi;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) < dim + 1)
      throw ParseError("line " + std::to_string(line_no) + ": expected at least " +
                       std::to_string(dim + 1) + " fields");
    std::vector<int> idx(dim);
    for (int i = 0; i < dim; ++i) {
      try {
        idx[i] = std::stoi(fields[i]);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad index '" + fields[i] + "'");
      }
    }
    Rational v;
    try {
      v = parse_rational(fields[dim]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (cells.count(idx))
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate index");
    cells.emplace(idx, v);
    if (lo.empty()) {
      lo = idx;
      hi = idx;
    } else {
      for (int i = 0; i < dim; ++i) {
        lo[i] = std::min(lo[i], idx[i]);
        hi[i] = std::max(hi[i], idx[i]);
      }
    }
  }
  if (cells.empty()) throw ParseError("grid document has no data rows");
  GridData grid{Box(MultiIndex(lo), MultiIndex(hi))};
  for (const auto& [idx, v] : cells) grid.set_value(MultiIndex(idx), v);
  return grid;
}

void write_grid_pgm(std::ostream& out, const GridData& grid) {
  if (grid.dim() != 2) throw ValidationError("raster export requires a 2-dimensional grid");
  const Box& box = grid.box();
  const long rows = box.hi[0] - box.lo[0] + 1;
  const long cols = box.hi[1] - box.lo[1] + 1;

  Rational lo, hi;
  bool first = true;
  grid.for_each([&](const MultiIndex&, const Rational& v) {
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  });

  out << "P5\n# rows follow axis 0, columns axis 1; values scaled from ["
      << rational_to_string(lo) << ", " << rational_to_string(hi) << "]\n"
      << cols << ' ' << rows << "\n255\n";
  const double lo_d = lo.get_d();
  const double span = hi.get_d() - lo_d;
  std::string bytes;
  bytes.reserve(rows * cols);
  grid.for_each([&](const MultiIndex&, const Rational& v) {
    int gray = span <= 0.0 ? 128 : static_cast<int>((v.get_d() - lo_d) / span * 255.0 + 0.5);
    gray = std::max(0, std::min(255, gray));
    bytes.push_back(static_cast<char>(gray));
  });
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace polyrep

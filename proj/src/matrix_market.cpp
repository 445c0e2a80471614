#include "graphdeblur/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "graphdeblur/errors.hpp"

namespace graphdeblur::mtx {

void write(std::ostream& os, const SparseMatrix& m) {
  const bool sym = m.is_symmetric();
  std::size_t count = 0;
  const auto ptr = m.row_ptr();
  const auto idx = m.col_idx();
  const auto val = m.values();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::int64_t p = ptr[r]; p < ptr[r + 1]; ++p)
      if (!sym || static_cast<std::size_t>(idx[p]) <= r) ++count;

  os << "%%MatrixMarket matrix coordinate real " << (sym ? "symmetric" : "general") << "\n";
  os << m.rows() << " " << m.cols() << " " << count << "\n";
  char buf[96];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::int64_t p = ptr[r]; p < ptr[r + 1]; ++p) {
      const auto c = static_cast<std::size_t>(idx[p]);
      if (sym && c > r) continue;
      std::snprintf(buf, sizeof buf, "%zu %zu %.17g\n", r + 1, c + 1, val[p]);
      os << buf;
    }
  }
}

void write_file(const std::string& path, const SparseMatrix& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  write(os, m);
  if (!os) throw IoError("failed writing " + path);
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

SparseMatrix read(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("matrix market: empty input");
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate")
    throw IoError("matrix market: expected '%%MatrixMarket matrix coordinate' header");
  field = lower(field);
  symmetry = lower(symmetry);
  const bool pattern = field == "pattern";
  if (!pattern && field != "real" && field != "integer" && field != "double")
    throw IoError("matrix market: unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw IoError("matrix market: unsupported symmetry '" + symmetry + "'");
  const bool sym = symmetry == "symmetric";

  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '%' && line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::size_t rows = 0, cols = 0, count = 0;
  {
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> count)) throw IoError("matrix market: malformed size line");
  }
  std::vector<Triplet> entries;
  entries.reserve(sym ? 2 * count : count);
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(is, line)) throw IoError("matrix market: fewer entries than declared");
    if (line.empty() || line[0] == '%') {
      --k;
      continue;
    }
    std::istringstream entry(line);
    std::size_t r = 0, c = 0;
    double v = 1.0;
    if (!(entry >> r >> c) || (!pattern && !(entry >> v)))
      throw IoError("matrix market: malformed entry line: " + line);
    if (r < 1 || c < 1 || r > rows || c > cols) throw IoError("matrix market: entry index out of range");
    entries.push_back({r - 1, c - 1, v});
    if (sym && r != c) entries.push_back({c - 1, r - 1, v});
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(entries),
                                     sym ? Symmetry::symmetric : Symmetry::general);
}

SparseMatrix read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  try {
    return read(is);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace graphdeblur::mtx

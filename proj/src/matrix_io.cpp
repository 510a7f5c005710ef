#include "covdepth/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace covdepth {

namespace {

// Next non-comment, non-blank line; false at EOF.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

GeneratorMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("missing header line \"q k n\"");
  int q, k, n;
  {
    std::istringstream hs(line);
    if (!(hs >> q >> k >> n)) throw ParseError("malformed header: " + line);
    std::string extra;
    if (hs >> extra) throw ParseError("trailing tokens in header: " + line);
  }
  if (k < 1 || n < 1) throw ParseError("header dimensions must be positive");
  FieldPtr field;
  try {
    field = Field::make(q);
  } catch (const NotPrimePower& e) {
    throw ParseError(e.what());
  }
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < k; ++i) {
    if (!next_line(in, line))
      throw ParseError("expected " + std::to_string(k) + " matrix rows, got " +
                       std::to_string(i));
    std::istringstream rs(line);
    std::vector<int> row;
    int e;
    while (rs >> e) row.push_back(e);
    if (static_cast<int>(row.size()) != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(n));
    for (int x : row)
      if (x < 0 || x >= q)
        throw ParseError("entry " + std::to_string(x) + " out of [0, " +
                         std::to_string(q - 1) + "]");
    rows.push_back(std::move(row));
  }
  try {
    return make_matrix(field, rows);
  } catch (const InvalidParams& e) {
    throw ParseError(e.what());
  }
}

GeneratorMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_matrix(in);
}

}  // namespace covdepth

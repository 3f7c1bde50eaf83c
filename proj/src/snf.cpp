#include "trisect/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace trisect {

namespace {

void check_entry(std::int64_t v) {
  // Pivot arithmetic stays far below this once inputs do.
  if (v > (std::int64_t{1} << 60) || v < -(std::int64_t{1} << 60))
    throw std::overflow_error("smith_normal_form: entry out of range");
}

void row_sub(Mat& m, int dst, int src, std::int64_t q, int from_col) {
  for (int j = from_col; j < static_cast<int>(m[dst].size()); ++j) {
    m[dst][j] -= q * m[src][j];
    check_entry(m[dst][j]);
  }
}

void col_sub(Mat& m, int dst, int src, std::int64_t q, int from_row) {
  for (int i = from_row; i < static_cast<int>(m.size()); ++i) {
    m[i][dst] -= q * m[i][src];
    check_entry(m[i][dst]);
  }
}

}  // namespace

SmithResult smith_normal_form(Mat m) {
  SmithResult out;
  const int nr = static_cast<int>(m.size());
  const int nc = nr ? static_cast<int>(m[0].size()) : 0;
  for (auto& row : m) {
    if (static_cast<int>(row.size()) != nc)
      throw std::invalid_argument("smith_normal_form: ragged matrix");
    for (auto v : row) check_entry(v);
  }

  int t = 0;
  while (t < nr && t < nc) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    int pi = -1, pj = -1;
    for (int i = t; i < nr; ++i)
      for (int j = t; j < nc; ++j)
        if (m[i][j] != 0 &&
            (pi < 0 || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = t; i < nr; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < nr; ++i) {
        if (m[i][t] == 0) continue;
        std::int64_t q = m[i][t] / m[t][t];
        row_sub(m, i, t, q, t);
        if (m[i][t] != 0) {  // remainder is a smaller pivot
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < nc; ++j) {
        if (m[t][j] == 0) continue;
        std::int64_t q = m[t][j] / m[t][t];
        col_sub(m, j, t, q, t);
        if (m[t][j] != 0) {
          for (int i = t; i < nr; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every later entry.
      for (int i = t + 1; i < nr && clean; ++i)
        for (int j = t + 1; j < nc && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            row_sub(m, t, i, -1, t);  // add row i into the pivot row
            clean = false;
          }
    }
    if (m[t][t] < 0)
      for (int j = t; j < nc; ++j) m[t][j] = -m[t][j];
    out.divisors.push_back(m[t][t]);
    ++t;
  }
  return out;
}

AbelianGroup cokernel(const Mat& m, int rows) {
  if (!m.empty() && static_cast<int>(m.size()) != rows)
    throw std::invalid_argument("cokernel: row count mismatch");
  SmithResult s = smith_normal_form(m);
  AbelianGroup g;
  g.betti = rows - s.rank();
  for (auto d : s.divisors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

std::string AbelianGroup::str() const {
  std::vector<std::string> parts;
  if (betti == 1)
    parts.push_back("Z");
  else if (betti > 1)
    parts.push_back("Z^" + std::to_string(betti));
  for (auto d : torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

}  // namespace trisect

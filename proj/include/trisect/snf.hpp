#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace trisect {

using Mat = std::vector<std::vector<std::int64_t>>;

// Diagonal of the Smith normal form: d1 | d2 | ... | dr, all positive,
// padded implicitly by zeros up to min(rows, cols).
struct SmithResult {
  std::vector<std::int64_t> divisors;
  int rank() const { return static_cast<int>(divisors.size()); }
};

SmithResult smith_normal_form(Mat m);

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  int betti = 0;
  std::vector<std::int64_t> torsion;  // each > 1, each dividing the next
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  std::string str() const;  // "0", "Z", "Z^2 + Z/2", ...
};

// Z^rows modulo the span of the columns of m.
AbelianGroup cokernel(const Mat& m, int rows);

}  // namespace trisect

#pragma once

// Test-only reference computations, written independently of the library.

#include <cstdint>
#include <numeric>
#include <vector>

namespace lincong::testing {

/// Every x in [0, m) with a*x = b (mod m), by direct scan.
inline std::vector<std::int64_t> unary_solutions_by_scan(std::int64_t a, std::int64_t b, std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < m; ++x) {
    if ((((a * x - b) % m) + m) % m == 0) out.push_back(x);
  }
  return out;
}

/// Counts tuples in [0, m)^n with sum a_i x_i = b (mod m).
inline std::int64_t count_by_scan(const std::vector<std::int64_t>& a, std::int64_t b, std::int64_t m) {
  std::vector<std::int64_t> x(a.size(), 0);
  std::int64_t count = 0;
  while (true) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    if ((((s - b) % m) + m) % m == 0) ++count;
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (++x[i] < m) break;
      x[i] = 0;
    }
    if (i == x.size()) return count;
  }
}

}  // namespace lincong::testing

#pragma once

// Exhaustive ground truth. Deliberately shares nothing with the solver
// beyond LinearCongruence: its own residue arithmetic, its own tuple scan.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lincong/congruence.hpp"

namespace lincong::oracle {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

struct OracleReport {
  BigInt solution_count;
  std::optional<std::set<Solution>> solutions;
  bool agrees_with_summary = false;
  bool agrees_with_basis = false;
};

/// m^n, or nullopt once it passes cap.
inline std::optional<std::uint64_t> search_space(const LinearCongruence& c, std::uint64_t cap) {
  std::uint64_t total = 1;
  const auto m = static_cast<std::uint64_t>(c.modulus());
  for (std::size_t i = 0; i < c.arity(); ++i) {
    if (total > cap / m) return std::nullopt;
    total *= m;
  }
  if (total > cap) return std::nullopt;
  return total;
}

inline std::set<Solution> brute_force(const LinearCongruence& c, std::uint64_t cap = kDefaultCap) {
  if (!search_space(c, cap)) {
    throw SizingError("search space " + std::to_string(c.modulus()) + "^" + std::to_string(c.arity()) +
                      " exceeds cap " + std::to_string(cap));
  }
  const __int128 m = c.modulus();
  const std::size_t n = c.arity();
  std::set<Solution> found;
  std::vector<Int> x(n, 0);
  while (true) {
    __int128 sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum = (sum + static_cast<__int128>(c.coeffs()[i]) * x[i]) % m;
    if (sum == c.rhs()) found.insert(Solution{x});

    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++x[i] < c.modulus()) break;
      x[i] = 0;
      if (i == 0) return found;
    }
  }
}

/// Compares the exhaustive scan against summarize and against the
/// basis-driven enumeration.
inline OracleReport verify(const LinearCongruence& c, std::uint64_t cap = kDefaultCap) {
  OracleReport report;
  std::set<Solution> truth = brute_force(c, cap);
  report.solution_count = truth.size();

  const SolveSummary summary = summarize(c);
  const BigInt expected = summary.solvable ? summary.p1 : BigInt(0);
  report.agrees_with_summary = report.solution_count == expected && summary.solvable == !truth.empty();

  std::optional<SolutionBasis> basis = build_basis(c);
  if (!basis) {
    report.agrees_with_basis = truth.empty();
  } else {
    std::vector<Solution> listed = collect(enumerate_all(*basis, c)).solutions;
    std::set<Solution> as_set(listed.begin(), listed.end());
    report.agrees_with_basis = as_set.size() == listed.size() && as_set == truth;
  }
  report.solutions = std::move(truth);
  return report;
}

}  // namespace lincong::oracle

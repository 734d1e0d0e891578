#pragma once

// Seeded random instances for property checks and `verify --seed`.

#include <cstddef>
#include <random>
#include <vector>

#include "lincong/congruence.hpp"

namespace lincong {

struct InstanceRanges {
  std::size_t min_arity = 1;
  std::size_t max_arity = 3;
  Int min_modulus = 1;
  Int max_modulus = 20;
  Int max_abs_coeff = 20;
};

struct RawInstance {
  std::vector<Int> coeffs;
  Int rhs = 0;
  Int modulus = 1;
};

template <class Rng>
RawInstance random_instance(Rng& rng, const InstanceRanges& ranges = {}) {
  std::uniform_int_distribution<std::size_t> arity(ranges.min_arity, ranges.max_arity);
  std::uniform_int_distribution<Int> modulus(ranges.min_modulus, ranges.max_modulus);
  std::uniform_int_distribution<Int> value(-ranges.max_abs_coeff, ranges.max_abs_coeff);
  RawInstance out;
  out.coeffs.resize(arity(rng));
  for (Int& a : out.coeffs) a = value(rng);
  out.rhs = value(rng);
  out.modulus = modulus(rng);
  return out;
}

/// Rejection-samples until the instance is solvable.
template <class Rng>
LinearCongruence random_solvable_instance(Rng& rng, const InstanceRanges& ranges = {}) {
  while (true) {
    RawInstance raw = random_instance(rng, ranges);
    LinearCongruence c = normalize(raw.coeffs, raw.rhs, raw.modulus);
    if (summarize(c).solvable) return c;
  }
}

inline std::vector<LinearCongruence> seeded_solvable_instances(std::uint64_t seed, std::size_t count,
                                                               const InstanceRanges& ranges = {}) {
  std::mt19937_64 rng(seed);
  std::vector<LinearCongruence> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(random_solvable_instance(rng, ranges));
  return out;
}

}  // namespace lincong

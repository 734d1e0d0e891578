#pragma once

#include <set>
#include <vector>

#include "lincong/congruence.hpp"

namespace lincong::testing {

/// 2x - 6y = 2 (mod 12) and its two published solution lists.
inline LinearCongruence application() { return normalize(std::vector<Int>{2, -6}, 2, 12); }

inline const std::vector<Solution>& application_first_list() {
  static const std::vector<Solution> list{{{1, 0}}, {{1, 2}}, {{1, 4}}, {{1, 6}},  {{1, 8}},  {{1, 10}},
                                          {{7, 0}}, {{7, 2}}, {{7, 4}}, {{7, 6}}, {{7, 8}}, {{7, 10}}};
  return list;
}

inline const std::vector<Solution>& application_second_list() {
  static const std::vector<Solution> list{{{4, 1}},  {{4, 3}},  {{4, 5}},  {{4, 7}},  {{4, 9}},  {{4, 11}},
                                          {{10, 1}}, {{10, 3}}, {{10, 5}}, {{10, 7}}, {{10, 9}}, {{10, 11}}};
  return list;
}

inline std::set<Solution> application_all() {
  std::set<Solution> all(application_first_list().begin(), application_first_list().end());
  all.insert(application_second_list().begin(), application_second_list().end());
  return all;
}

}  // namespace lincong::testing

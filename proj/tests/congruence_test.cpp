#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "lincong/congruence.hpp"
#include "lincong/sampling.hpp"
#include "support/brute.hpp"
#include "support/paper_application.hpp"

namespace lincong {
namespace {

using testing::application;

std::set<Solution> as_set(const std::vector<Solution>& xs) { return {xs.begin(), xs.end()}; }

TEST(Normalize, Examples) {
  auto c = application();
  EXPECT_EQ(c.coeffs(), (std::vector<Int>{2, 6}));
  EXPECT_EQ(c.rhs(), 2);
  EXPECT_EQ(c.modulus(), 12);

  c = normalize(std::vector<Int>{5}, 0, -7);
  EXPECT_EQ(c.coeffs(), (std::vector<Int>{5}));
  EXPECT_EQ(c.rhs(), 0);
  EXPECT_EQ(c.modulus(), 7);

  c = normalize(std::vector<Int>{0, 0}, 3, 3);
  EXPECT_EQ(c.coeffs(), (std::vector<Int>{0, 0}));
  EXPECT_EQ(c.rhs(), 0);
  EXPECT_EQ(c.arity(), 2u);
}

TEST(Normalize, Rejects) {
  EXPECT_THROW(normalize(std::vector<Int>{1}, 0, 0), ValidationError);
  EXPECT_THROW(normalize(std::vector<Int>{}, 0, 5), ValidationError);
  EXPECT_THROW(normalize(std::vector<Int>{1}, 0, std::numeric_limits<Int>::min()), ValidationError);
}

TEST(Normalize, PreservesSolutionCount) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    RawInstance raw = random_instance(rng);
    auto c = normalize(raw.coeffs, raw.rhs, raw.modulus);
    Int m = raw.modulus < 0 ? -raw.modulus : raw.modulus;
    EXPECT_EQ(testing::count_by_scan(raw.coeffs, raw.rhs, m), testing::count_by_scan(c.coeffs(), c.rhs(), c.modulus()));
  }
}

TEST(Summarize, Examples) {
  auto s = summarize(application());
  EXPECT_EQ(s.d, 2);
  EXPECT_TRUE(s.solvable);
  EXPECT_EQ(s.p1, 24);
  EXPECT_EQ(s.p2, 12);
  EXPECT_EQ(s.s, 2);

  s = summarize(normalize(std::vector<Int>{1}, 3, 5));
  EXPECT_EQ(s, (SolveSummary{1, true, 1, 1, 1}));

  ASSERT_EQ(testing::count_by_scan({4, 6}, 2, 8), 16);
  s = summarize(normalize(std::vector<Int>{4, 6}, 2, 8));
  EXPECT_EQ(s, (SolveSummary{2, true, 16, 8, 2}));
}

TEST(Summarize, UnsolvableStillReportsCounts) {
  auto s = summarize(normalize(std::vector<Int>{2}, 1, 4));
  EXPECT_FALSE(s.solvable);
  EXPECT_EQ(s.d, 2);
  EXPECT_EQ(s.p1, 2);
  EXPECT_EQ(s.p2, 2);
  EXPECT_EQ(s.s, 1);
}

TEST(Summarize, MatchesScanCounts) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    RawInstance raw = random_instance(rng);
    auto c = normalize(raw.coeffs, raw.rhs, raw.modulus);
    auto s = summarize(c);
    Int count = testing::count_by_scan(c.coeffs(), c.rhs(), c.modulus());
    EXPECT_EQ(s.solvable, count > 0);
    if (s.solvable) {
      EXPECT_EQ(s.p1, count);
    }
    EXPECT_EQ(s.p1 % s.p2, 0);
  }
}

TEST(ModuleGenerators, Examples) {
  EXPECT_EQ(module_generators(application()).strides, (std::vector<Int>{6, 2}));
  EXPECT_EQ(module_generators(normalize(std::vector<Int>{0}, 0, 5)).strides, (std::vector<Int>{1}));
  // gcd(3, 12) = 3 and gcd(4, 12) = 4.
  EXPECT_EQ(module_generators(normalize(std::vector<Int>{3, 4}, 0, 12)).strides, (std::vector<Int>{4, 3}));
}

TEST(ModuleGenerators, StrideInvariants) {
  for (Int m = 1; m <= 40; ++m) {
    for (Int a = 0; a < m; ++a) {
      Int g = module_generators(normalize(std::vector<Int>{a}, 0, m)).strides[0];
      EXPECT_EQ(m % g, 0);
      EXPECT_EQ(g == m, std::gcd(a, m) == 1);
      EXPECT_EQ(g == 1, a % m == 0);
    }
  }
}

TEST(AreDependent, Examples) {
  auto a = module_generators(application());
  EXPECT_TRUE(are_dependent({{7, 4}}, {{1, 0}}, a));
  EXPECT_FALSE(are_dependent({{4, 1}}, {{0, 1}}, a));
  EXPECT_TRUE(are_dependent({{4, 1}}, {{4, 1}}, a));
  EXPECT_THROW(are_dependent({{1}}, {{1, 0}}, a), ValidationError);
}

TEST(FindParticular, Examples) {
  auto c = normalize(std::vector<Int>{2, 6}, 2, 12);
  auto x = find_particular(c);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(c, *x));
  EXPECT_EQ(*x, (Solution{{1, 0}}));

  auto zero = find_particular(normalize(std::vector<Int>{0}, 0, 4));
  ASSERT_TRUE(zero);
  EXPECT_EQ(*zero, (Solution{{0}}));

  EXPECT_FALSE(find_particular(normalize(std::vector<Int>{2}, 1, 4)));
}

TEST(FindParticular, ValidAndDeterministic) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    RawInstance raw = random_instance(rng);
    auto c = normalize(raw.coeffs, raw.rhs, raw.modulus);
    auto x = find_particular(c);
    EXPECT_EQ(x.has_value(), summarize(c).solvable);
    if (!x) continue;
    EXPECT_TRUE(satisfies(c, *x));
    EXPECT_EQ(*x, *find_particular(c));
    for (Int r : x->residues) {
      EXPECT_GE(r, 0);
      EXPECT_LT(r, c.modulus());
    }
  }
}

TEST(FindParticular, LargeValues) {
  auto c = normalize(std::vector<Int>{(Int{1} << 60) + 3, -(Int{1} << 59) + 7, 999999999989LL}, 123456789, (Int{1} << 61) - 1);
  auto x = find_particular(c);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(c, *x));
}

TEST(Expand, PaperLists) {
  auto c = application();
  EXPECT_EQ(collect(expand({{1, 0}}, c)).solutions, testing::application_first_list());
  EXPECT_EQ(collect(expand({{4, 1}}, c)).solutions, testing::application_second_list());
  EXPECT_EQ(collect(expand({{3}}, normalize(std::vector<Int>{1}, 3, 5))).solutions, (std::vector<Solution>{{{3}}}));
}

TEST(Expand, RejectsNonSolutionSeed) {
  auto c = application();
  EXPECT_THROW(expand({{0, 1}}, c), ValidationError);
  EXPECT_THROW(expand({{1}}, c), ValidationError);
  EXPECT_THROW(expand({{13, 0}}, c), ValidationError);
}

TEST(Expand, ProducesP2DistinctSolutions) {
  for (const auto& c : seeded_solvable_instances(24, 200)) {
    auto x0 = find_particular(c);
    ASSERT_TRUE(x0);
    auto xs = collect(expand(*x0, c)).solutions;
    ASSERT_FALSE(xs.empty());
    EXPECT_EQ(xs.front(), *x0);
    EXPECT_EQ(BigInt(xs.size()), summarize(c).p2);
    EXPECT_EQ(as_set(xs).size(), xs.size());
    for (const auto& x : xs) EXPECT_TRUE(satisfies(c, x));
  }
}

TEST(Expand, ZeroCoefficientSweepsWholeRange) {
  auto c = normalize(std::vector<Int>{0, 1}, 2, 5);
  auto xs = collect(expand({{0, 2}}, c)).solutions;
  ASSERT_EQ(xs.size(), 5u);
  for (Int i = 0; i < 5; ++i) EXPECT_EQ(xs[i], (Solution{{i, 2}}));
}

TEST(EnumerateRaw, Examples) {
  EXPECT_EQ(collect(enumerate_raw(normalize(std::vector<Int>{1}, 3, 5))).solutions, (std::vector<Solution>{{{3}}}));
  auto app = collect(enumerate_raw(application())).solutions;
  EXPECT_EQ(app.size(), 24u);
  EXPECT_EQ(as_set(app), testing::application_all());
  EXPECT_TRUE(std::is_sorted(app.begin(), app.end()));
  EXPECT_EQ(collect(enumerate_raw(normalize(std::vector<Int>{4, 6}, 2, 8))).solutions.size(), 16u);
}

TEST(EnumerateRaw, LimitTruncates) {
  auto cut = collect(enumerate_raw(application()), 5);
  EXPECT_EQ(cut.solutions.size(), 5u);
  EXPECT_TRUE(cut.truncated);
  auto exact = collect(enumerate_raw(application()), 24);
  EXPECT_FALSE(exact.truncated);
}

TEST(BuildBasis, PaperApplication) {
  auto b = build_basis(application());
  ASSERT_TRUE(b);
  EXPECT_EQ(b->basis, (std::vector<Solution>{{{1, 0}}, {{4, 1}}}));
  EXPECT_EQ(b->param_bounds, (std::vector<Int>{2, 6}));
  EXPECT_EQ(b->strides, (std::vector<Int>{6, 2}));
}

TEST(BuildBasis, SmallCases) {
  auto single = build_basis(normalize(std::vector<Int>{1}, 3, 5));
  ASSERT_TRUE(single);
  EXPECT_EQ(single->basis, (std::vector<Solution>{{{3}}}));

  auto c = normalize(std::vector<Int>{4, 6}, 2, 8);
  auto b = build_basis(c);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->basis.size(), 2u);
  auto all = collect(enumerate_all(*b, c)).solutions;
  EXPECT_EQ(all.size(), 16u);
  EXPECT_EQ(as_set(all), as_set(collect(enumerate_raw(c)).solutions));

  EXPECT_FALSE(build_basis(normalize(std::vector<Int>{2}, 1, 4)));
}

TEST(BuildBasis, LimitGivesPrefix) {
  auto partial = build_basis(application(), 1);
  ASSERT_TRUE(partial);
  EXPECT_EQ(partial->basis, (std::vector<Solution>{{{1, 0}}}));
}

TEST(BuildBasis, PairwiseIndependentAndCovering) {
  for (const auto& c : seeded_solvable_instances(25, 200)) {
    auto b = build_basis(c);
    ASSERT_TRUE(b);
    const auto s = summarize(c);
    EXPECT_EQ(BigInt(b->basis.size()), s.s);
    auto a = module_generators(c);
    for (std::size_t i = 0; i < b->basis.size(); ++i) {
      EXPECT_TRUE(satisfies(c, b->basis[i]));
      for (std::size_t j = i + 1; j < b->basis.size(); ++j) EXPECT_FALSE(are_dependent(b->basis[i], b->basis[j], a));
    }
    auto all = collect(enumerate_all(*b, c)).solutions;
    EXPECT_EQ(BigInt(all.size()), s.p1);
    EXPECT_EQ(as_set(all), as_set(collect(enumerate_raw(c)).solutions));
  }
}

TEST(BuildBasis, CandidateOrderDoesNotChangeSize) {
  std::mt19937_64 rng(26);
  for (const auto& c : seeded_solvable_instances(26, 100)) {
    auto candidates = collect(enumerate_raw(c)).solutions;
    auto forward = build_basis_from(c, candidates);
    std::reverse(candidates.begin(), candidates.end());
    auto backward = build_basis_from(c, candidates);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    auto shuffled = build_basis_from(c, candidates);
    EXPECT_EQ(forward->basis.size(), backward->basis.size());
    EXPECT_EQ(forward->basis.size(), shuffled->basis.size());
  }
}

TEST(BuildBasis, IncompleteCandidatesFault) {
  auto c = application();
  std::vector<Solution> partial = testing::application_first_list();
  EXPECT_THROW(build_basis_from(c, partial), InternalFault);
}

TEST(BuildBasis, Deterministic) {
  for (const auto& c : seeded_solvable_instances(27, 50)) EXPECT_EQ(build_basis(c)->basis, build_basis(c)->basis);
}

TEST(Dependence, EquivalenceRelation) {
  std::mt19937_64 rng(28);
  for (const auto& c : seeded_solvable_instances(28, 100)) {
    auto xs = collect(enumerate_raw(c)).solutions;
    auto a = module_generators(c);
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    for (int k = 0; k < 30; ++k) {
      const auto& x = xs[pick(rng)];
      const auto& y = xs[pick(rng)];
      const auto& z = xs[pick(rng)];
      EXPECT_TRUE(are_dependent(x, x, a));
      EXPECT_EQ(are_dependent(x, y, a), are_dependent(y, x, a));
      if (are_dependent(x, y, a) && are_dependent(y, z, a)) {
        EXPECT_TRUE(are_dependent(x, z, a));
      }
      // Independence from one member of a class means independence from all.
      if (are_dependent(y, z, a) && !are_dependent(x, y, a)) {
        EXPECT_FALSE(are_dependent(x, z, a));
      }
    }
  }
}

TEST(Dependence, IndependenceIsNotTransitive) {
  auto c = application();
  auto a = module_generators(c);
  auto xs = collect(enumerate_raw(c)).solutions;
  bool found = false;
  for (const auto& x1 : xs) {
    for (const auto& x2 : xs) {
      for (const auto& x3 : xs) {
        if (x1 != x3 && !are_dependent(x1, x2, a) && !are_dependent(x2, x3, a) && are_dependent(x1, x3, a)) found = true;
      }
    }
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(are_dependent({{1, 0}}, {{4, 1}}, a));
  EXPECT_FALSE(are_dependent({{4, 1}}, {{7, 4}}, a));
  EXPECT_TRUE(are_dependent({{1, 0}}, {{7, 4}}, a));
}

TEST(EnumerateAll, SingleElementBasisMatchesExpand) {
  auto c = normalize(std::vector<Int>{0, 1}, 2, 5);  // P1 = P2 = 5
  auto b = build_basis(c);
  ASSERT_TRUE(b);
  ASSERT_EQ(b->basis.size(), 1u);
  EXPECT_EQ(collect(enumerate_all(*b, c)).solutions, collect(expand(b->basis[0], c)).solutions);
}

TEST(EnumerateAll, HugeInstanceStaysLazy) {
  auto c = normalize(std::vector<Int>{1, 1, 1, 1, 1}, 0, 1'000'000'007);
  auto s = summarize(c);
  EXPECT_EQ(s.p1, boost::multiprecision::pow(BigInt(1'000'000'007), 4));
  auto first = collect(enumerate_raw(c), 3);
  EXPECT_EQ(first.solutions.size(), 3u);
  EXPECT_TRUE(first.truncated);
  auto basis = build_basis(c, 2);
  ASSERT_TRUE(basis);
  auto some = collect(enumerate_all(*basis, c), 2);
  EXPECT_EQ(some.solutions.size(), 2u);
  for (const auto& x : some.solutions) EXPECT_TRUE(satisfies(c, x));
}

}  // namespace
}  // namespace lincong

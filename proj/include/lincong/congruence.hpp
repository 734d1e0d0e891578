#pragma once

/**
 * Linear congruences a_1 x_1 + ... + a_n x_n = b (mod m).
 *
 * Everything here works on normalized instances: m >= 1 and every
 * coefficient and the right-hand side reduced into [0, m). Solutions are
 * residue vectors with entries in [0, m).
 *
 * The module A is generated by the axis vectors whose only nonzero entry is
 * the stride g_i = m / (a_i, m). Two solutions are dependent when their
 * difference lies in A, i.e. when every coordinate difference is divisible
 * by its stride. Dependence is an equivalence relation, and each class of
 * solutions is exactly one expansion
 *
 *     x_i = x0_i + g_i * t_i,   0 <= t_i < (a_i, m)
 *
 * of any of its members. A basis is one representative per class.
 *
 * Streams (expand, enumerate_raw, enumerate_all) are lazy: they hold copies
 * of what they need and produce one solution per next() call.
 */

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lincong/errors.hpp"
#include "lincong/integer_arithmetic.hpp"

namespace lincong {

class LinearCongruence {
 public:
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  Int rhs() const noexcept { return rhs_; }
  Int modulus() const noexcept { return modulus_; }
  std::size_t arity() const noexcept { return coeffs_.size(); }

  bool operator==(const LinearCongruence&) const = default;

 private:
  friend LinearCongruence normalize(std::span<const Int>, Int, Int);

  LinearCongruence(std::vector<Int> coeffs, Int rhs, Int modulus)
      : coeffs_(std::move(coeffs)), rhs_(rhs), modulus_(modulus) {}

  std::vector<Int> coeffs_;
  Int rhs_;
  Int modulus_;
};

struct Solution {
  std::vector<Int> residues;

  std::size_t arity() const noexcept { return residues.size(); }
  auto operator<=>(const Solution&) const = default;
};

struct LatticeModule {
  std::vector<Int> strides;
  Int modulus = 1;

  bool operator==(const LatticeModule&) const = default;
};

struct SolutionBasis {
  std::vector<Solution> basis;
  std::vector<Int> param_bounds;  // d_i = (a_i, m)
  std::vector<Int> strides;       // g_i = m / d_i
};

struct SolveSummary {
  Int d = 1;  // (a_1, ..., a_n, m)
  bool solvable = false;
  BigInt p1;  // d * m^(n-1), the number of distinct solutions
  BigInt p2;  // product of (a_i, m), the size of one expansion
  BigInt s;   // p1 / p2, the basis size

  bool operator==(const SolveSummary&) const = default;
};

inline LinearCongruence normalize(std::span<const Int> raw_coeffs, Int raw_b, Int raw_m) {
  if (raw_m == 0) throw ValidationError("modulus must be nonzero");
  if (raw_coeffs.empty()) throw ValidationError("congruence needs at least one coefficient");
  auto in_range = [](Int v) { return v >= -kMaxInputMagnitude && v <= kMaxInputMagnitude; };
  if (!in_range(raw_m) || !in_range(raw_b)) throw ValidationError("value out of supported range (|v| <= 2^62)");

  const Int m = raw_m < 0 ? -raw_m : raw_m;
  std::vector<Int> coeffs;
  coeffs.reserve(raw_coeffs.size());
  for (Int a : raw_coeffs) {
    if (!in_range(a)) throw ValidationError("coefficient out of supported range (|v| <= 2^62)");
    coeffs.push_back(mod_reduce(a, m));
  }
  return LinearCongruence(std::move(coeffs), mod_reduce(raw_b, m), m);
}

inline LinearCongruence normalize(const std::vector<Int>& raw_coeffs, Int raw_b, Int raw_m) {
  return normalize(std::span<const Int>(raw_coeffs), raw_b, raw_m);
}

/// Reduces a raw integer vector to a Solution of c's arity.
inline Solution make_solution(const LinearCongruence& c, std::span<const Int> raw) {
  if (raw.size() != c.arity()) {
    throw ValidationError("vector has " + std::to_string(raw.size()) + " entries, congruence has " +
                          std::to_string(c.arity()) + " unknowns");
  }
  Solution x;
  x.residues.reserve(raw.size());
  for (Int v : raw) x.residues.push_back(mod_reduce(v, c.modulus()));
  return x;
}

inline bool satisfies(const LinearCongruence& c, const Solution& x) {
  if (x.arity() != c.arity()) return false;
  Int sum = 0;
  for (std::size_t i = 0; i < c.arity(); ++i) {
    sum = add_mod(sum, mul_mod(c.coeffs()[i], x.residues[i], c.modulus()), c.modulus());
  }
  return sum == c.rhs();
}

inline SolveSummary summarize(const LinearCongruence& c) {
  const Int m = c.modulus();
  Int d = m;
  BigInt p2 = 1;
  for (Int a : c.coeffs()) {
    d = gcd(d, a);
    p2 *= gcd(a, m);
  }
  SolveSummary out;
  out.d = d;
  out.solvable = c.rhs() % d == 0;
  out.p1 = BigInt(d) * boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(c.arity() - 1));
  out.p2 = std::move(p2);
  out.s = lemma1_quotient(c.coeffs(), m);
  if (out.s * out.p2 != out.p1) throw InternalFault("summarize: p1 != s * p2");
  return out;
}

inline LatticeModule module_generators(const LinearCongruence& c) {
  LatticeModule a;
  a.modulus = c.modulus();
  a.strides.reserve(c.arity());
  for (Int coeff : c.coeffs()) a.strides.push_back(c.modulus() / gcd(coeff, c.modulus()));
  return a;
}

inline bool are_dependent(const Solution& x, const Solution& y, const LatticeModule& a) {
  if (x.arity() != a.strides.size() || y.arity() != a.strides.size()) {
    throw ValidationError("are_dependent: arity mismatch");
  }
  for (std::size_t i = 0; i < a.strides.size(); ++i) {
    if ((x.residues[i] - y.residues[i]) % a.strides[i] != 0) return false;
  }
  return true;
}

/// Deterministic particular solution: with g0 = sum u_i a_i, solve
/// g0 * y = b (mod m) and take x_i = u_i * y.
inline std::optional<Solution> find_particular(const LinearCongruence& c) {
  const Int m = c.modulus();
  std::vector<BigInt> wide(c.coeffs().begin(), c.coeffs().end());
  const BezoutCertificate<BigInt> cert = multi_gcd_bezout(wide);

  // gcd(g0, m) = d, so this fails exactly when the congruence is unsolvable.
  auto y = solve_unary(static_cast<Int>(cert.g % m), c.rhs(), m);
  if (!y) return std::nullopt;

  Solution x;
  x.residues.reserve(c.arity());
  const BigInt wide_m(m);
  for (const BigInt& u : cert.coefficients) {
    BigInt r = u % wide_m;
    if (r < 0) r += wide_m;
    x.residues.push_back(mul_mod(static_cast<Int>(r), y->x0, m));
  }
  if (!satisfies(c, x)) throw InternalFault("find_particular: constructed vector is not a solution");
  return x;
}

/// The expansion of one solution over 0 <= t_i < d_i, parameters in
/// lexicographic order (t_n varies fastest).
class ExpansionStream {
 public:
  ExpansionStream(Solution seed, std::vector<Int> strides, std::vector<Int> bounds, Int modulus)
      : seed_(std::move(seed)),
        strides_(std::move(strides)),
        bounds_(std::move(bounds)),
        modulus_(modulus),
        params_(seed_.arity(), 0) {}

  std::optional<Solution> next() {
    if (done_) return std::nullopt;
    Solution out;
    out.residues.resize(seed_.arity());
    for (std::size_t i = 0; i < seed_.arity(); ++i) {
      out.residues[i] = (seed_.residues[i] + strides_[i] * params_[i]) % modulus_;
    }
    advance();
    return out;
  }

 private:
  void advance() {
    for (std::size_t i = params_.size(); i-- > 0;) {
      if (++params_[i] < bounds_[i]) return;
      params_[i] = 0;
    }
    done_ = true;
  }

  Solution seed_;
  std::vector<Int> strides_;
  std::vector<Int> bounds_;
  Int modulus_;
  std::vector<Int> params_;
  bool done_ = false;
};

inline ExpansionStream expand(const Solution& x0, const LinearCongruence& c) {
  if (x0.arity() != c.arity()) throw ValidationError("expand: seed arity does not match congruence");
  for (Int v : x0.residues) {
    if (v < 0 || v >= c.modulus()) throw ValidationError("expand: seed residues must lie in [0, m)");
  }
  if (!satisfies(c, x0)) throw ValidationError("expand: seed is not a solution of the congruence");

  LatticeModule a = module_generators(c);
  std::vector<Int> bounds;
  bounds.reserve(c.arity());
  for (Int g : a.strides) bounds.push_back(c.modulus() / g);
  return ExpansionStream(x0, std::move(a.strides), std::move(bounds), c.modulus());
}

/// Every distinct solution once: prefixes (x_1..x_{n-1}) run over [0, m)^(n-1)
/// lexicographically and x_n is solved for, ascending.
class RawStream {
 public:
  explicit RawStream(const LinearCongruence& c)
      : coeffs_(c.coeffs()), rhs_(c.rhs()), modulus_(c.modulus()), prefix_(c.arity() - 1, 0) {}

  std::optional<Solution> next() {
    while (!done_) {
      if (!pending_) {
        Int partial = 0;
        for (std::size_t i = 0; i < prefix_.size(); ++i) {
          partial = add_mod(partial, mul_mod(coeffs_[i], prefix_[i], modulus_), modulus_);
        }
        pending_ = solve_unary(coeffs_.back(), rhs_ - partial, modulus_);
        k_ = 0;
      }
      if (pending_ && k_ < pending_->count) {
        Solution out;
        out.residues = prefix_;
        out.residues.push_back(pending_->x0 + pending_->step * k_);
        ++k_;
        return out;
      }
      pending_.reset();
      advance_prefix();
    }
    return std::nullopt;
  }

 private:
  void advance_prefix() {
    for (std::size_t i = prefix_.size(); i-- > 0;) {
      if (++prefix_[i] < modulus_) return;
      prefix_[i] = 0;
    }
    done_ = true;
  }

  std::vector<Int> coeffs_;
  Int rhs_;
  Int modulus_;
  std::vector<Int> prefix_;
  std::optional<UnaryCongruenceSolution> pending_;
  Int k_ = 0;
  bool done_ = false;
};

inline RawStream enumerate_raw(const LinearCongruence& c) { return RawStream(c); }

namespace detail {

/// Greedy first-seen representatives. The coset key (x_i mod g_i) is equal
/// for two solutions exactly when they are dependent, so keeping a candidate
/// whose key is new is the same as keeping one independent of every kept
/// solution.
template <class NextFn>
SolutionBasis greedy_basis(const LinearCongruence& c, NextFn&& next, std::optional<std::size_t> limit) {
  const SolveSummary summary = summarize(c);
  if (!summary.solvable) throw ValidationError("build_basis: congruence has no solutions");

  LatticeModule a = module_generators(c);
  SolutionBasis out;
  for (Int g : a.strides) out.param_bounds.push_back(c.modulus() / g);
  out.strides = a.strides;

  BigInt wanted = summary.s;
  if (limit && BigInt(*limit) < wanted) wanted = *limit;

  std::set<std::vector<Int>> seen;
  while (BigInt(out.basis.size()) < wanted) {
    std::optional<Solution> candidate = next();
    if (!candidate) throw InternalFault("build_basis: candidate stream exhausted before the basis was complete");
    std::vector<Int> key(candidate->residues.size());
    for (std::size_t i = 0; i < key.size(); ++i) key[i] = candidate->residues[i] % a.strides[i];
    if (seen.insert(std::move(key)).second) out.basis.push_back(std::move(*candidate));
  }
  return out;
}

}  // namespace detail

/// Basis over the enumerate_raw order. With a limit, stops after that many
/// representatives (the result is then a partial basis).
inline std::optional<SolutionBasis> build_basis(const LinearCongruence& c,
                                                std::optional<std::size_t> limit = std::nullopt) {
  if (!summarize(c).solvable) return std::nullopt;
  RawStream raw(c);
  return detail::greedy_basis(c, [&raw] { return raw.next(); }, limit);
}

/// Basis over an explicit candidate ordering. The candidates must contain
/// every distinct solution.
inline std::optional<SolutionBasis> build_basis_from(const LinearCongruence& c, std::span<const Solution> candidates) {
  if (!summarize(c).solvable) return std::nullopt;
  for (const Solution& x : candidates) {
    if (!satisfies(c, x)) throw ValidationError("build_basis_from: candidate is not a solution");
  }
  std::size_t pos = 0;
  auto next = [&]() -> std::optional<Solution> {
    if (pos == candidates.size()) return std::nullopt;
    return candidates[pos++];
  };
  return detail::greedy_basis(c, next, std::nullopt);
}

/// Concatenated expansions of every basis element.
class BasisExpansionStream {
 public:
  BasisExpansionStream(std::vector<ExpansionStream> parts) : parts_(std::move(parts)) {}

  std::optional<Solution> next() {
    while (current_ < parts_.size()) {
      if (auto x = parts_[current_].next()) return x;
      ++current_;
    }
    return std::nullopt;
  }

 private:
  std::vector<ExpansionStream> parts_;
  std::size_t current_ = 0;
};

inline BasisExpansionStream enumerate_all(const SolutionBasis& basis, const LinearCongruence& c) {
  std::vector<ExpansionStream> parts;
  parts.reserve(basis.basis.size());
  for (const Solution& x : basis.basis) parts.push_back(expand(x, c));
  return BasisExpansionStream(std::move(parts));
}

struct Collected {
  std::vector<Solution> solutions;
  bool truncated = false;
};

/// Drains a stream, stopping after `limit` items if given. `truncated` is set
/// only when the stream still had items left.
template <class Stream>
Collected collect(Stream&& stream, std::optional<std::size_t> limit = std::nullopt) {
  Collected out;
  while (!limit || out.solutions.size() < *limit) {
    auto x = stream.next();
    if (!x) return out;
    out.solutions.push_back(std::move(*x));
  }
  out.truncated = stream.next().has_value();
  return out;
}

}  // namespace lincong

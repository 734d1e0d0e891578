#pragma once

/**
 * Exact integer primitives used throughout the solver.
 *
 * The gcd family is generic over any signed integer-like type so the same
 * code serves machine integers (inputs, residues) and BigInt (counts, folded
 * Bezout coefficients). gcd is always nonnegative and gcd(0, 0) = 0.
 *
 * Inputs to the residue helpers are bounded machine integers: every value
 * handed in by callers must satisfy |v| <= kMaxInputMagnitude. Products are
 * formed in 128 bits, so residues never overflow.
 */

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lincong/errors.hpp"

namespace lincong {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr Int kMaxInputMagnitude = Int{1} << 62;

template <class T>
concept IntegerLike = std::regular<T> && requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a % b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a < b } -> std::convertible_to<bool>;
  T(0);
};

template <IntegerLike T>
struct BezoutCertificate {
  T g{0};
  /// Sum of coefficients[i] * values[i] equals g.
  std::vector<T> coefficients;

  bool operator==(const BezoutCertificate&) const = default;
};

struct UnaryCongruenceSolution {
  Int x0 = 0;     // least nonnegative solution
  Int step = 1;   // m / gcd(a, m)
  Int count = 1;  // gcd(a, m)

  bool operator==(const UnaryCongruenceSolution&) const = default;
};

template <IntegerLike T>
constexpr T magnitude(const T& v) {
  return v < T(0) ? T(-v) : v;
}

template <IntegerLike T>
constexpr T gcd(T a, T b) {
  a = magnitude(a);
  b = magnitude(b);
  while (b != T(0)) {
    T r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Iterative extended Euclid on |a|, |b|; signs are folded back into the
/// coefficients afterwards.
template <IntegerLike T>
BezoutCertificate<T> extended_gcd(const T& a, const T& b) {
  if (a == T(0) && b == T(0)) return {T(0), {T(0), T(0)}};

  T old_r = magnitude(a), r = magnitude(b);
  T old_s(1), s(0);
  T old_t(0), t(1);
  while (r != T(0)) {
    T q = old_r / r;
    T next_r = old_r - q * r;
    old_r = std::move(r);
    r = std::move(next_r);
    T next_s = old_s - q * s;
    old_s = std::move(s);
    s = std::move(next_s);
    T next_t = old_t - q * t;
    old_t = std::move(t);
    t = std::move(next_t);
  }
  if (a < T(0)) old_s = -old_s;
  if (b < T(0)) old_t = -old_t;
  return {old_r, {old_s, old_t}};
}

/// Left fold of extended_gcd. With machine integers the folded coefficients
/// can overflow for long inputs; callers needing a certificate for arbitrary
/// inputs should instantiate with BigInt.
template <IntegerLike T>
BezoutCertificate<T> multi_gcd_bezout(std::span<const T> values) {
  if (values.empty()) throw ValidationError("multi_gcd_bezout: empty value list");

  BezoutCertificate<T> cert;
  cert.coefficients.reserve(values.size());
  const T& first = values.front();
  cert.g = magnitude(first);
  cert.coefficients.push_back(first == T(0) ? T(0) : (first < T(0) ? T(-1) : T(1)));

  for (std::size_t i = 1; i < values.size(); ++i) {
    BezoutCertificate<T> step = extended_gcd(cert.g, values[i]);
    for (T& u : cert.coefficients) u *= step.coefficients[0];
    cert.coefficients.push_back(step.coefficients[1]);
    cert.g = step.g;
  }
  return cert;
}

template <IntegerLike T>
BezoutCertificate<T> multi_gcd_bezout(const std::vector<T>& values) {
  return multi_gcd_bezout(std::span<const T>(values));
}

/// Least nonnegative representative of v modulo m (m >= 1).
constexpr Int mod_reduce(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

constexpr Int mul_mod(Int a, Int b, Int m) {
  __int128 p = static_cast<__int128>(a) * b % m;
  if (p < 0) p += m;
  return static_cast<Int>(p);
}

constexpr Int add_mod(Int a, Int b, Int m) {
  __int128 s = (static_cast<__int128>(a) + b) % m;
  if (s < 0) s += m;
  return static_cast<Int>(s);
}

/// Solves a*x = b (mod m). Returns nullopt when gcd(a, m) does not divide b.
inline std::optional<UnaryCongruenceSolution> solve_unary(Int a, Int b, Int m) {
  if (m < 1) throw ValidationError("solve_unary: modulus must be positive");
  a = mod_reduce(a, m);
  b = mod_reduce(b, m);
  const Int g = gcd(a, m);  // gcd(0, m) = m
  if (b % g != 0) return std::nullopt;

  const Int reduced_m = m / g;
  Int x0 = 0;
  if (reduced_m > 1) {
    // a/g is a unit mod m/g; its Bezout coefficient is the inverse.
    auto cert = extended_gcd(a / g, reduced_m);
    Int inverse = mod_reduce(cert.coefficients[0], reduced_m);
    x0 = mul_mod(b / g, inverse, reduced_m);
  }
  return UnaryCongruenceSolution{x0, reduced_m, g};
}

/// (a_1, ..., a_n, m) * |m|^(n-1) / ((a_1, m) * ... * (a_n, m)), computed
/// exactly. The division is always exact; a remainder is reported as an
/// InternalFault.
inline BigInt lemma1_quotient(std::span<const Int> coeffs, Int m) {
  if (m == 0) throw ValidationError("lemma1_quotient: modulus must be nonzero");
  if (coeffs.empty()) throw ValidationError("lemma1_quotient: empty coefficient list");

  const BigInt modulus = magnitude(BigInt(m));
  BigInt d = modulus;
  BigInt denominator = 1;
  for (Int a : coeffs) {
    d = gcd(d, BigInt(a));
    denominator *= gcd(BigInt(a), modulus);
  }
  const BigInt numerator = d * boost::multiprecision::pow(modulus, static_cast<unsigned>(coeffs.size() - 1));
  if (numerator % denominator != 0) {
    throw InternalFault("lemma1_quotient: inexact division " + numerator.str() + " / " + denominator.str());
  }
  return numerator / denominator;
}

inline BigInt lemma1_quotient(const std::vector<Int>& coeffs, Int m) {
  return lemma1_quotient(std::span<const Int>(coeffs), m);
}

}  // namespace lincong

#pragma once

/**
 * Text syntax for a single congruence:
 *
 *   congruence := expr ("=" | "≡") integer "(" "mod" integer ")"
 *   expr       := ["+" | "-"] term { ("+" | "-") term }
 *   term       := [digits ["*"]] identifier
 *   integer    := ["+" | "-"] digits
 *
 * Whitespace is insignificant. An omitted coefficient means 1. Variables are
 * numbered by first appearance and may not repeat. The modulus may be
 * negative but not zero.
 */

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lincong/congruence.hpp"
#include "lincong/errors.hpp"
#include "lincong/integer_arithmetic.hpp"

namespace lincong {

struct ParsedCongruence {
  std::vector<std::string> variables;
  std::vector<Int> raw_coeffs;
  Int rhs = 0;
  Int modulus = 1;

  bool operator==(const ParsedCongruence&) const = default;
};

namespace detail {

inline constexpr std::string_view kCongruentSign = "\xE2\x89\xA1";  // U+2261

class CongruenceParser {
 public:
  explicit CongruenceParser(std::string_view text) : text_(text) {}

  ParsedCongruence run() {
    ParsedCongruence out;
    parse_terms(out);
    skip_ws();
    if (!consume("=") && !consume(kCongruentSign)) fail("expected '=' or '≡' after the left-hand side");

    skip_ws();
    std::size_t rhs_pos = pos_;
    auto rhs = signed_integer();
    if (!rhs) fail_at(rhs_pos, "expected an integer right-hand side");
    out.rhs = *rhs;

    skip_ws();
    if (at_end()) throw ParseError(ParseError::Kind::missing_modulus, pos_, "missing '(mod m)' at " + where());
    if (!consume("(")) fail("expected '(mod m)'");
    skip_ws();
    if (!consume("mod")) fail("expected 'mod'");
    skip_ws();
    std::size_t mod_pos = pos_;
    auto modulus = signed_integer();
    if (!modulus) {
      throw ParseError(ParseError::Kind::missing_modulus, mod_pos, "missing modulus value at " + where(mod_pos));
    }
    if (*modulus == 0) throw ParseError(ParseError::Kind::zero_modulus, mod_pos, "modulus must be nonzero");
    out.modulus = *modulus;
    skip_ws();
    if (!consume(")")) fail("expected ')'");
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return out;
  }

 private:
  void parse_terms(ParsedCongruence& out) {
    bool first = true;
    while (true) {
      skip_ws();
      Int sign = 1;
      if (consume("-")) {
        sign = -1;
      } else if (!consume("+") && !first) {
        break;
      }
      skip_ws();

      std::size_t coeff_pos = pos_;
      std::optional<Int> coeff = digits();
      skip_ws();
      if (coeff && consume("*")) skip_ws();

      std::size_t name_pos = pos_;
      std::string name = identifier();
      if (name.empty()) {
        if (coeff) fail_at(coeff_pos, "constant terms are not allowed on the left-hand side");
        fail("expected a term");
      }
      for (const std::string& seen : out.variables) {
        if (seen == name) {
          throw ParseError(ParseError::Kind::duplicate_variable, name_pos,
                           "variable '" + name + "' appears more than once (at " + where(name_pos) + ")");
        }
      }
      out.variables.push_back(std::move(name));
      out.raw_coeffs.push_back(sign * coeff.value_or(1));
      first = false;
    }
  }

  std::optional<Int> signed_integer() {
    Int sign = 1;
    if (consume("-")) {
      sign = -1;
    } else {
      consume("+");
    }
    skip_ws();
    auto value = digits();
    if (!value) return std::nullopt;
    return sign * *value;
  }

  std::optional<Int> digits() {
    std::size_t start = pos_;
    Int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxInputMagnitude) fail_at(start, "integer out of range (|v| <= 2^62)");
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return value;
  }

  std::string identifier() {
    std::size_t start = pos_;
    auto is_head = [](unsigned char ch) { return std::isalpha(ch) || ch == '_'; };
    auto is_tail = [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; };
    if (at_end() || !is_head(static_cast<unsigned char>(text_[pos_]))) return {};
    while (!at_end() && is_tail(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string where(std::size_t p) const { return "position " + std::to_string(p); }
  std::string where() const { return where(pos_); }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& message) const {
    throw ParseError(ParseError::Kind::syntax, p, message + " at " + where(p));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ParsedCongruence parse(std::string_view text) { return detail::CongruenceParser(text).run(); }

/// Canonical rendering, e.g. "2*x - 6*y ≡ 2 (mod 12)".
inline std::string format(const ParsedCongruence& p) {
  std::string out;
  for (std::size_t i = 0; i < p.variables.size(); ++i) {
    Int a = p.raw_coeffs[i];
    if (i == 0) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    out += std::to_string(a < 0 ? -a : a);
    out += "*";
    out += p.variables[i];
  }
  out += " ";
  out += detail::kCongruentSign;
  out += " " + std::to_string(p.rhs) + " (mod " + std::to_string(p.modulus) + ")";
  return out;
}

inline LinearCongruence to_congruence(const ParsedCongruence& p) { return normalize(p.raw_coeffs, p.rhs, p.modulus); }

}  // namespace lincong

#pragma once

// Command-line front end. run() takes argv-style arguments and explicit
// streams so the whole tool can be driven in-process.
//
// Exit codes: 0 success, 2 usage/parse/sizing error, 3 unsolvable,
// 4 verification mismatch, 1 internal fault.

#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lincong/congruence.hpp"
#include "lincong/errors.hpp"
#include "lincong/oracle.hpp"
#include "lincong/parser.hpp"
#include "lincong/sampling.hpp"

namespace lincong::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kUnsolvable = 3, kMismatch = 4 };

namespace detail {

using nlohmann::json;

struct Problem {
  ParsedCongruence parsed;
  LinearCongruence congruence;
};

struct CommonOptions {
  std::vector<std::string> positionals;
  std::string coeffs;
  std::optional<Int> rhs;
  std::optional<Int> mod;
  std::string format = "text";
};

inline std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ValidationError(what + ": '" + item + "' is not an integer");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw ValidationError(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError(what + ": empty list");
  return out;
}

inline bool coefficient_mode(const CommonOptions& o) { return !o.coeffs.empty() || o.rhs || o.mod; }

/// Builds the instance from --coeffs/--rhs/--mod, or from the first
/// positional (an expression, or "-" for stdin). Returns the remaining
/// positionals.
inline Problem load_problem(const CommonOptions& o, std::istream& in, std::vector<std::string>& rest) {
  rest = o.positionals;
  if (coefficient_mode(o)) {
    if (o.coeffs.empty() || !o.rhs || !o.mod) throw ValidationError("--coeffs, --rhs and --mod must be given together");
    ParsedCongruence p;
    p.raw_coeffs = parse_int_list(o.coeffs, "--coeffs");
    for (std::size_t i = 0; i < p.raw_coeffs.size(); ++i) p.variables.push_back("x" + std::to_string(i + 1));
    p.rhs = *o.rhs;
    p.modulus = *o.mod;
    return {p, to_congruence(p)};
  }
  if (rest.empty()) throw ValidationError("missing congruence expression");
  std::string text = rest.front();
  rest.erase(rest.begin());
  if (text == "-") text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  try {
    ParsedCongruence p = parse(text);
    return {p, to_congruence(p)};
  } catch (const ParseError& e) {
    std::string caret(e.position(), ' ');
    throw ValidationError(std::string("parse error: ") + e.what() + "\n  " + text + "\n  " + caret + "^");
  }
}

inline std::string render_tuple(const Solution& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(x.residues[i]);
  }
  return out + ")";
}

inline std::string render_row(const Solution& x) {
  std::string out;
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(x.residues[i]);
  }
  return out;
}

inline json summary_json(const SolveSummary& s) {
  return json{{"d", std::to_string(s.d)},
              {"solvable", s.solvable},
              {"p1", s.p1.str()},
              {"p2", s.p2.str()},
              {"s", s.s.str()}};
}

inline json vectors_json(const std::vector<Solution>& xs) {
  json arr = json::array();
  for (const Solution& x : xs) arr.push_back(x.residues);
  return arr;
}

inline void print_summary_text(const Problem& p, const SolveSummary& s, std::ostream& out) {
  out << "congruence: " << format(p.parsed) << "\n"
      << "d = " << s.d << "\n"
      << "solvable = " << (s.solvable ? "true" : "false") << "\n"
      << "P1 = " << s.p1 << "\n"
      << "P2 = " << s.p2 << "\n"
      << "S = " << s.s << "\n";
}

inline void print_module_text(const Problem& p, std::ostream& out) {
  const LatticeModule a = module_generators(p.congruence);
  out << "module A:";
  for (std::size_t i = 0; i < a.strides.size(); ++i) {
    Solution v{std::vector<Int>(a.strides.size(), 0)};
    v.residues[i] = a.strides[i];
    out << (i ? ", " : " ") << "V" << (i + 1) << " = " << render_tuple(v);
  }
  out << "\n";
}

inline int cmd_solve(const Problem& p, std::optional<std::size_t> limit, const std::string& fmt, std::ostream& out) {
  const SolveSummary s = summarize(p.congruence);
  std::vector<Solution> basis;
  bool truncated = false;
  if (s.solvable) {
    basis = build_basis(p.congruence, limit)->basis;
    truncated = BigInt(basis.size()) < s.s;
  }
  if (fmt == "json") {
    json j = summary_json(s);
    j["basis"] = vectors_json(basis);
    j["truncated"] = truncated;
    out << j.dump() << "\n";
  } else {
    print_summary_text(p, s, out);
    if (s.solvable) {
      print_module_text(p, out);
      out << "basis" << (truncated ? " (truncated)" : "") << ":\n";
      for (const Solution& x : basis) out << "  " << render_tuple(x) << "\n";
    }
  }
  return s.solvable ? kOk : kUnsolvable;
}

inline int cmd_enumerate(const Problem& p, std::optional<std::size_t> limit, const std::string& fmt,
                         std::ostream& out, std::ostream& err) {
  const SolveSummary s = summarize(p.congruence);
  if (!s.solvable) {
    if (fmt == "json") {
      json j = summary_json(s);
      j["solutions"] = json::array();
      j["truncated"] = false;
      out << j.dump() << "\n";
    }
    err << "no solutions: d = " << s.d << " does not divide b = " << p.congruence.rhs() << "\n";
    return kUnsolvable;
  }
  const SolutionBasis basis = *build_basis(p.congruence);
  auto stream = enumerate_all(basis, p.congruence);

  if (fmt == "json") {
    Collected all = collect(stream, limit);
    json j = summary_json(s);
    j["basis"] = vectors_json(basis.basis);
    j["solutions"] = vectors_json(all.solutions);
    j["truncated"] = all.truncated;
    out << j.dump() << "\n";
    return kOk;
  }
  std::size_t written = 0;
  while (!limit || written < *limit) {
    auto x = stream.next();
    if (!x) return kOk;
    out << render_row(*x) << "\n";
    ++written;
  }
  if (stream.next()) err << "truncated after " << written << " solutions\n";
  return kOk;
}

inline int cmd_check(const Problem& p, const std::vector<std::string>& rest, const std::string& fmt,
                     std::ostream& out, std::ostream& err) {
  if (rest.size() != 2) throw ValidationError("check expects two solution vectors, e.g. 7,4 1,0");
  const LinearCongruence& c = p.congruence;
  const Solution x = make_solution(c, parse_int_list(rest[0], "first vector"));
  const Solution y = make_solution(c, parse_int_list(rest[1], "second vector"));

  std::vector<std::string> warnings;
  if (!satisfies(c, x)) warnings.push_back(render_tuple(x) + " is not a solution of the congruence");
  if (!satisfies(c, y)) warnings.push_back(render_tuple(y) + " is not a solution of the congruence");
  for (const std::string& w : warnings) err << "warning: " << w << "\n";

  const LatticeModule a = module_generators(c);
  const bool dependent = are_dependent(x, y, a);

  if (fmt == "json") {
    json coords = json::array();
    for (std::size_t i = 0; i < c.arity(); ++i) {
      Int diff = x.residues[i] - y.residues[i];
      coords.push_back({{"variable", p.parsed.variables[i]},
                        {"difference", diff},
                        {"stride", a.strides[i]},
                        {"divisible", diff % a.strides[i] == 0}});
    }
    out << json{{"verdict", dependent ? "dependent" : "independent"}, {"coordinates", coords}, {"warnings", warnings}}.dump()
        << "\n";
    return kOk;
  }
  out << (dependent ? "dependent" : "independent") << "\n";
  for (std::size_t i = 0; i < c.arity(); ++i) {
    Int diff = x.residues[i] - y.residues[i];
    out << "  " << p.parsed.variables[i] << ": " << x.residues[i] << " - " << y.residues[i] << " = " << diff
        << ", stride " << a.strides[i] << (diff % a.strides[i] == 0 ? ", divisible" : ", not divisible") << "\n";
  }
  return kOk;
}

inline int verify_one(const Problem& p, std::uint64_t cap, const std::string& fmt, std::ostream& out) {
  const oracle::OracleReport r = oracle::verify(p.congruence, cap);
  const SolveSummary s = summarize(p.congruence);
  if (fmt == "json") {
    out << json{{"solution_count", r.solution_count.str()},
                {"solvable", s.solvable},
                {"p1", s.p1.str()},
                {"agrees_with_summary", r.agrees_with_summary},
                {"agrees_with_basis", r.agrees_with_basis}}
               .dump()
        << "\n";
  } else {
    out << "congruence: " << format(p.parsed) << "\n"
        << "solution_count = " << r.solution_count << "\n"
        << "P1 = " << s.p1 << (s.solvable ? "" : " (unsolvable, expected count 0)") << "\n"
        << "agrees_with_summary = " << (r.agrees_with_summary ? "true" : "false") << "\n"
        << "agrees_with_basis = " << (r.agrees_with_basis ? "true" : "false") << "\n";
  }
  return r.agrees_with_summary && r.agrees_with_basis ? kOk : kMismatch;
}

inline int verify_batch(std::uint64_t seed, std::size_t count, std::uint64_t cap, const std::string& fmt,
                        std::ostream& out) {
  std::mt19937_64 rng(seed);
  json mismatches = json::array();
  std::vector<std::string> mismatch_lines;
  for (std::size_t i = 0; i < count; ++i) {
    RawInstance raw = random_instance(rng);
    ParsedCongruence parsed;
    parsed.raw_coeffs = raw.coeffs;
    for (std::size_t k = 0; k < raw.coeffs.size(); ++k) parsed.variables.push_back("x" + std::to_string(k + 1));
    parsed.rhs = raw.rhs;
    parsed.modulus = raw.modulus;
    const oracle::OracleReport r = oracle::verify(to_congruence(parsed), cap);
    if (!r.agrees_with_summary || !r.agrees_with_basis) {
      mismatch_lines.push_back(format(parsed));
      mismatches.push_back({{"congruence", format(parsed)},
                            {"agrees_with_summary", r.agrees_with_summary},
                            {"agrees_with_basis", r.agrees_with_basis}});
    }
  }
  if (fmt == "json") {
    out << json{{"seed", seed}, {"instances", count}, {"mismatches", mismatches}}.dump() << "\n";
  } else {
    out << "checked " << count << " instances (seed " << seed << "), " << mismatch_lines.size() << " mismatches\n";
    for (const std::string& line : mismatch_lines) out << "  mismatch: " << line << "\n";
  }
  return mismatch_lines.empty() ? kOk : kMismatch;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve linear congruences a1*x1 + ... + an*xn = b (mod m)", "lincong"};
  app.require_subcommand(1);

  detail::CommonOptions common;
  std::optional<std::size_t> limit;
  std::uint64_t cap = oracle::kDefaultCap;
  std::optional<std::uint64_t> seed;
  std::size_t count = 200;

  auto add_common = [&](CLI::App* sub, const std::string& positional_help) {
    sub->add_option("args", common.positionals, positional_help);
    sub->add_option("--coeffs", common.coeffs, "comma-separated coefficients, instead of an expression");
    sub->add_option("--rhs", common.rhs, "right-hand side b (with --coeffs)");
    sub->add_option("--mod", common.mod, "modulus m (with --coeffs)");
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* solve = app.add_subcommand("solve", "summary counts and a basis of independent solutions");
  add_common(solve, "congruence expression, or - for stdin");
  solve->add_option("--limit", limit, "print at most N basis elements");

  auto* enumerate = app.add_subcommand("enumerate", "every distinct solution, generated from a basis");
  add_common(enumerate, "congruence expression, or - for stdin");
  enumerate->add_option("--limit", limit, "stop after N solutions");

  auto* check = app.add_subcommand("check", "dependence test for two residue vectors");
  add_common(check, "congruence expression (or - for stdin), then two vectors such as 7,4 1,0");

  auto* verify = app.add_subcommand("verify", "compare the solver against exhaustive search");
  add_common(verify, "congruence expression, or - for stdin; omit with --seed for a random batch");
  verify->add_option("--cap", cap, "refuse instances with m^n above this");
  verify->add_option("--seed", seed, "verify a seeded batch of random instances");
  verify->add_option("--count", count, "batch size for --seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed() && seed && common.positionals.empty() && !detail::coefficient_mode(common)) {
      return detail::verify_batch(*seed, count, cap, common.format, out);
    }
    std::vector<std::string> rest;
    const detail::Problem problem = detail::load_problem(common, in, rest);
    if (!rest.empty() && !check->parsed()) throw ValidationError("unexpected argument '" + rest.front() + "'");

    if (solve->parsed()) return detail::cmd_solve(problem, limit, common.format, out);
    if (enumerate->parsed()) return detail::cmd_enumerate(problem, limit, common.format, out, err);
    if (check->parsed()) return detail::cmd_check(problem, rest, common.format, out, err);
    return detail::verify_one(problem, cap, common.format, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizingError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalFault& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace lincong::cli

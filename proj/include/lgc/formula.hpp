#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/poly.hpp"

namespace lgc {

/// Propositional formula over x1..xm.
struct Formula {
  enum class Kind { Var, Const, Not, And, Or, Xor, Implies };

  Kind kind = Kind::Const;
  int var = 0;         // Var only
  bool value = false;  // Const only
  std::vector<Formula> args;

  static Formula variable(int index) { return {Kind::Var, index, false, {}}; }
  static Formula constant(bool v) { return {Kind::Const, 0, v, {}}; }
  static Formula unary(Kind k, Formula a) { return {k, 0, false, {std::move(a)}}; }
  static Formula binary(Kind k, Formula a, Formula b) {
    return {k, 0, false, {std::move(a), std::move(b)}};
  }

  int max_var() const;
};

/// Boolean semantics, used as the truth-table reference.
bool evaluate(const Formula& f, std::uint64_t point);

/// Truth-value polynomial: NOT a -> a+1, a AND b -> ab, a OR b -> a+b+ab,
/// a XOR b -> a+b, a IMPLIES b -> a(1+b)+1.
Poly formula_to_poly(const Formula& f);

/// Parses a single formula (no polarity, no raw mode).
Formula parse_formula(std::string_view text);

/// Parses a statement file. Each non-blank, non-'#' line is either
///   <formula> [is TRUE | is FALSE]   (polarity defaults to TRUE)
/// or a raw polynomial equation
///   <poly> = <poly>
/// "phi is TRUE" yields formula_to_poly(phi) + 1, "phi is FALSE" yields
/// formula_to_poly(phi), and "a = b" yields a + b. One polynomial per line.
/// m is `vars` when given, otherwise the largest variable index seen.
PolySet parse_statements(std::string_view text, std::optional<int> vars = std::nullopt);

}  // namespace lgc

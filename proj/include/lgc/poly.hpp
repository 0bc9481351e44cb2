#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lgc {

/// A product of distinct variables; bit i-1 set means x_i is a factor.
/// The empty mask is the constant monomial 1. Exponents are never stored:
/// x_i^2 = x_i holds structurally, which is how the field polynomials enter.
using Monomial = std::uint32_t;

inline constexpr int kMaxVars = 32;

int degree(Monomial m) noexcept;

/// Graded reverse lexicographic order with x1 < x2 < ... < xm.
/// Among equal degrees the monomial lacking the lowest differing variable wins.
bool degrevlex_less(Monomial a, Monomial b) noexcept;

/// Multilinear polynomial over GF(2), i.e. an element of
/// GF(2)[x1..xm] / (x_i^2 + x_i). Terms are kept unique and sorted in
/// descending degrevlex order, so `leading()` is the first term.
class Poly {
 public:
  Poly() = default;

  /// XOR-collapses repeated monomials (characteristic 2).
  static Poly from_monomials(std::vector<Monomial> monomials);
  static Poly zero() { return {}; }
  static Poly one() { return from_monomials({0}); }
  static Poly var(int index);

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0] == 0; }
  Monomial leading() const { return terms_.front(); }
  bool contains(Monomial m) const;

  /// Highest variable index used, 0 for constants.
  int max_var() const noexcept;

  /// Value at an assignment whose bit i-1 is x_i.
  bool eval(std::uint64_t point) const noexcept;

  /// Product with a single monomial, reduced to multilinear form.
  Poly times(Monomial m) const;

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly& a, const Poly& b) { return a.terms_ <=> b.terms_; }

 private:
  std::vector<Monomial> terms_;
};

/// A set of polynomial equations p = 0 over variables x1..xm.
struct PolySet {
  int m = 0;
  std::vector<Poly> polys;

  bool empty() const noexcept { return polys.empty(); }
  friend bool operator==(const PolySet&, const PolySet&) = default;
};

/// Drops zero polynomials, sorts, and removes duplicates.
PolySet normalize_set(PolySet set);

/// Throws VariableOutOfRange if any polynomial uses a variable above `set.m`.
void validate(const PolySet& set);

/// Canonical text: degree-descending terms, variables ascending inside a
/// term, "*" for products, "1" for the constant, "0" for the zero polynomial.
std::string poly_to_text(const Poly& p);

/// One "poly = 0" line per member, in order.
std::string polyset_to_text(const PolySet& set);

}  // namespace lgc

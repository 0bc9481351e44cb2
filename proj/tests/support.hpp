#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lgc/algset.hpp"
#include "lgc/formula.hpp"
#include "lgc/partition.hpp"
#include "lgc/poly.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline lgc::Poly random_poly(Rng& g, int m, int max_terms) {
  std::vector<lgc::Monomial> terms;
  const int count = static_cast<int>(g() % static_cast<std::uint64_t>(max_terms + 1));
  const std::uint64_t mask = m >= 32 ? 0xFFFFFFFFull : ((std::uint64_t{1} << m) - 1);
  for (int i = 0; i < count; ++i) terms.push_back(static_cast<lgc::Monomial>(g() & mask));
  return lgc::Poly::from_monomials(std::move(terms));
}

inline lgc::PolySet random_set(Rng& g, int m, int max_polys, int max_terms) {
  lgc::PolySet s{m, {}};
  const int count = static_cast<int>(g() % static_cast<std::uint64_t>(max_polys + 1));
  for (int i = 0; i < count; ++i) s.polys.push_back(random_poly(g, m, max_terms));
  return s;
}

inline lgc::AlgSet random_algset(Rng& g, int m, double density) {
  std::bernoulli_distribution coin(density);
  lgc::AlgSet a(m);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
    if (coin(g)) a.insert(static_cast<lgc::Point>(i));
  }
  return a;
}

/// One "poly = 0" line; the zero polynomial when the line normalizes away.
inline lgc::Poly poly(const std::string& text, int m = 0) {
  const lgc::PolySet s = lgc::parse_statements(text + " = 0", m > 0 ? std::optional<int>(m) : std::nullopt);
  return s.polys.empty() ? lgc::Poly::zero() : s.polys.front();
}

inline lgc::PolySet set(int m, std::vector<lgc::Poly> polys) { return lgc::PolySet{m, std::move(polys)}; }

/// Ternary source with P(0) = p_a, P(1) = p_b, Free otherwise.
inline lgc::TernaryVector random_ternary(Rng& g, std::size_t n, double p_a, double p_b) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  lgc::TernaryVector x(n);
  for (auto& v : x) {
    const double r = u(g);
    v = r < p_a ? lgc::Ternary::Zero : r < p_a + p_b ? lgc::Ternary::One : lgc::Ternary::Free;
  }
  return x;
}

}  // namespace testing

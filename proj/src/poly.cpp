#include "lgc/poly.hpp"

#include <algorithm>
#include <bit>

#include "lgc/error.hpp"

namespace lgc {

int degree(Monomial m) noexcept { return std::popcount(m); }

bool degrevlex_less(Monomial a, Monomial b) noexcept {
  if (a == b) return false;
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  const Monomial lowest_diff = (a ^ b) & (~(a ^ b) + 1);
  // The larger monomial is the one without the smallest differing variable.
  return (a & lowest_diff) != 0;
}

namespace {

bool degrevlex_greater(Monomial a, Monomial b) noexcept { return degrevlex_less(b, a); }

// Sort then cancel equal neighbours pairwise.
std::vector<Monomial> collapse(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end(), degrevlex_greater);
  std::vector<Monomial> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

}  // namespace

Poly Poly::from_monomials(std::vector<Monomial> monomials) {
  Poly p;
  p.terms_ = collapse(std::move(monomials));
  return p;
}

Poly Poly::var(int index) {
  if (index < 1 || index > kMaxVars) {
    throw Error(ErrorCode::VariableOutOfRange, "x" + std::to_string(index));
  }
  return from_monomials({Monomial{1} << (index - 1)});
}

bool Poly::contains(Monomial m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, degrevlex_greater);
}

int Poly::max_var() const noexcept {
  Monomial all = 0;
  for (Monomial t : terms_) all |= t;
  return all == 0 ? 0 : 32 - std::countl_zero(all);
}

bool Poly::eval(std::uint64_t point) const noexcept {
  bool value = false;
  for (Monomial t : terms_) {
    if ((t & ~point) == 0) value = !value;
  }
  return value;
}

Poly Poly::times(Monomial m) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (Monomial t : terms_) out.push_back(t | m);
  return from_monomials(std::move(out));
}

Poly& Poly::operator+=(const Poly& other) {
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out), degrevlex_greater);
  terms_ = std::move(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (Monomial s : a.terms_) {
    for (Monomial t : b.terms_) out.push_back(s | t);
  }
  return Poly::from_monomials(std::move(out));
}

PolySet normalize_set(PolySet set) {
  auto& v = set.polys;
  v.erase(std::remove_if(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); }), v.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return set;
}

void validate(const PolySet& set) {
  if (set.m < 0 || set.m > kMaxVars) {
    throw Error(ErrorCode::VariableOutOfRange, "variable count " + std::to_string(set.m));
  }
  for (const Poly& p : set.polys) {
    if (p.max_var() > set.m) {
      throw Error(ErrorCode::VariableOutOfRange,
                  "x" + std::to_string(p.max_var()) + " exceeds m=" + std::to_string(set.m));
    }
  }
}

namespace {

// Rendering order: higher degree first, then variable lists compared
// lexicographically (x1*x2 before x1*x3 before x2*x3).
bool print_before(Monomial a, Monomial b) {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da > db;
  const Monomial lowest_diff = (a ^ b) & (~(a ^ b) + 1);
  return (a & lowest_diff) != 0;
}

}  // namespace

std::string poly_to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<Monomial> terms = p.terms();
  std::sort(terms.begin(), terms.end(), print_before);
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += " + ";
    const Monomial t = terms[i];
    if (t == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int v = 0; v < kMaxVars; ++v) {
      if ((t >> v) & 1u) {
        if (!first) out += "*";
        out += "x" + std::to_string(v + 1);
        first = false;
      }
    }
  }
  return out;
}

std::string polyset_to_text(const PolySet& set) {
  std::string out;
  for (const Poly& p : set.polys) out += poly_to_text(p) + " = 0\n";
  return out;
}

}  // namespace lgc

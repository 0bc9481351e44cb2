#include "lgc/algset.hpp"

#include <algorithm>
#include <bit>

#include "lgc/error.hpp"

namespace lgc {

namespace {

void check_universe(int m) {
  if (m < 0 || m > kMaxExhaustiveVars) {
    throw Error(ErrorCode::UniverseTooLarge,
                "m=" + std::to_string(m) + " exceeds " + std::to_string(kMaxExhaustiveVars));
  }
}

std::size_t word_count(int m) { return m >= 6 ? (std::size_t{1} << (m - 6)) : 1; }

std::uint64_t tail_mask(int m) {
  return m >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << m)) - 1);
}

// In-place GF(2) Moebius transform over the bit-packed table. The transform
// is an involution: coefficients <-> values.
void moebius(std::vector<std::uint64_t>& w, int m) {
  static constexpr std::uint64_t kLow[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
      0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
  for (int i = 0; i < std::min(m, 6); ++i) {
    const unsigned shift = 1u << i;
    for (auto& x : w) x ^= (x & kLow[i]) << shift;
  }
  for (int i = 6; i < m; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j & stride) w[j] ^= w[j ^ stride];
    }
  }
}

}  // namespace

AlgSet::AlgSet(int m) : m_(m) {
  check_universe(m);
  words_.assign(word_count(m), 0);
}

AlgSet AlgSet::full(int m) {
  AlgSet a(m);
  std::fill(a.words_.begin(), a.words_.end(), ~std::uint64_t{0});
  a.trim();
  return a;
}

AlgSet AlgSet::from_points(int m, std::span<const Point> points) {
  AlgSet a(m);
  for (Point p : points) {
    if (p >= a.universe()) {
      throw Error(ErrorCode::DomainError, "point " + std::to_string(p) + " outside {0,1}^" +
                                              std::to_string(m));
    }
    a.insert(p);
  }
  return a;
}

void AlgSet::trim() noexcept { words_.back() &= tail_mask(m_); }

std::size_t AlgSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Point> AlgSet::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t j = 0; j < words_.size(); ++j) {
    std::uint64_t w = words_[j];
    while (w) {
      out.push_back(static_cast<Point>(j * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool AlgSet::subset_of(const AlgSet& other) const {
  if (other.m_ != m_) throw Error(ErrorCode::DomainError, "universe mismatch");
  for (std::size_t j = 0; j < words_.size(); ++j) {
    if (words_[j] & ~other.words_[j]) return false;
  }
  return true;
}

AlgSet AlgSet::complement() const {
  AlgSet a = *this;
  for (auto& w : a.words_) w = ~w;
  a.trim();
  return a;
}

AlgSet& AlgSet::operator&=(const AlgSet& other) {
  if (other.m_ != m_) throw Error(ErrorCode::DomainError, "universe mismatch");
  for (std::size_t j = 0; j < words_.size(); ++j) words_[j] &= other.words_[j];
  return *this;
}

AlgSet& AlgSet::operator|=(const AlgSet& other) {
  if (other.m_ != m_) throw Error(ErrorCode::DomainError, "universe mismatch");
  for (std::size_t j = 0; j < words_.size(); ++j) words_[j] |= other.words_[j];
  return *this;
}

std::vector<std::uint64_t> truth_table(const Poly& p, int m) {
  check_universe(m);
  if (p.max_var() > m) {
    throw Error(ErrorCode::VariableOutOfRange,
                "x" + std::to_string(p.max_var()) + " exceeds m=" + std::to_string(m));
  }
  std::vector<std::uint64_t> w(word_count(m), 0);
  for (Monomial t : p.terms()) w[t >> 6] ^= std::uint64_t{1} << (t & 63);
  moebius(w, m);
  w.back() &= tail_mask(m);
  return w;
}

AlgSet zeros(const PolySet& s) {
  validate(s);
  AlgSet out = AlgSet::full(s.m);
  auto words = out.words();
  for (const Poly& p : s.polys) {
    const auto table = truth_table(p, s.m);
    for (std::size_t j = 0; j < words.size(); ++j) words[j] &= ~table[j];
  }
  return out;
}

bool entails(const PolySet& s, const PolySet& t) {
  const int m = std::max(s.m, t.m);
  PolySet a = s;
  PolySet b = t;
  a.m = b.m = m;
  return zeros(a).subset_of(zeros(b));
}

PolySet sigma(const AlgSet& a) {
  const int m = a.m();
  std::vector<std::uint64_t> w(a.words().begin(), a.words().end());
  for (auto& x : w) x = ~x;
  w.back() &= tail_mask(m);
  moebius(w, m);
  std::vector<Monomial> terms;
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::uint64_t x = w[j];
    while (x) {
      terms.push_back(static_cast<Monomial>(j * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return PolySet{m, {Poly::from_monomials(std::move(terms))}};
}

}  // namespace lgc

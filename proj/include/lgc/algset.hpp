#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lgc/poly.hpp"

namespace lgc {

/// Largest m for which zero sets are enumerated exhaustively (16M points).
inline constexpr int kMaxExhaustiveVars = 24;

/// Index of an assignment in {0,1}^m; x1 is the least-significant bit.
using Point = std::uint32_t;

/// Subset of {0,1}^m stored as a 2^m-bit membership vector.
class AlgSet {
 public:
  AlgSet() : AlgSet(0) {}
  explicit AlgSet(int m);
  static AlgSet full(int m);
  static AlgSet from_points(int m, std::span<const Point> points);

  int m() const noexcept { return m_; }
  std::uint64_t universe() const noexcept { return std::uint64_t{1} << m_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(Point p) const noexcept { return (words_[p >> 6] >> (p & 63)) & 1u; }
  void insert(Point p) noexcept { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  void erase(Point p) noexcept { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }

  /// Members in ascending index order.
  std::vector<Point> points() const;

  bool subset_of(const AlgSet& other) const;
  AlgSet complement() const;
  AlgSet& operator&=(const AlgSet& other);
  AlgSet& operator|=(const AlgSet& other);

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  friend bool operator==(const AlgSet&, const AlgSet&) = default;

 private:
  void trim() noexcept;

  int m_;
  std::vector<std::uint64_t> words_;
};

/// Values of p at every point of {0,1}^m, bit-packed like AlgSet.
std::vector<std::uint64_t> truth_table(const Poly& p, int m);

/// Common zeros of `s` over {0,1}^s.m. Throws UniverseTooLarge above
/// kMaxExhaustiveVars.
AlgSet zeros(const PolySet& s);

/// s |= t, i.e. zeros(s) is a subset of zeros(t). Both sets are read over
/// max(s.m, t.m) variables.
bool entails(const PolySet& s, const PolySet& t);

/// The single polynomial vanishing exactly on `a` (plus implicit field
/// polynomials). This is the unique multilinear polynomial with value 0 on
/// `a` and 1 elsewhere, obtained by a Moebius transform of that table.
PolySet sigma(const AlgSet& a);

}  // namespace lgc

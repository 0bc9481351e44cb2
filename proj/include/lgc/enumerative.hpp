#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lgc/bitstream.hpp"

namespace lgc {

/// Arbitrary-precision non-negative integer (thin wrapper over GMP).
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT: implicit by design of integer literals in tests
  static BigUint from_string(const std::string& decimal);

  std::string to_string() const { return v_.get_str(); }
  /// Number of significant bits; 0 for zero.
  std::size_t bit_length() const;
  bool bit(std::size_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }
  bool is_zero() const { return sgn(v_) == 0; }

  BigUint& operator+=(const BigUint& o) { v_ += o.v_; return *this; }
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(const BigUint& a, const BigUint& b);
  friend BigUint operator*(const BigUint& a, const BigUint& b) { return BigUint(mpz_class(a.v_ * b.v_)); }

  friend bool operator==(const BigUint& a, const BigUint& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& raw() const noexcept { return v_; }
  mpz_class& raw() noexcept { return v_; }

 private:
  explicit BigUint(mpz_class v) : v_(std::move(v)) {}
  mpz_class v_;
};

/// Exact binomial coefficient. Throws DomainError unless 0 <= k <= n.
BigUint binom(std::uint64_t n, std::uint64_t k);

/// Colexicographic rank of a k-subset of [0, n): sum over the sorted
/// elements c_1 < ... < c_k of binom(c_i, i).
BigUint subset_rank(std::uint64_t n, std::span<const std::uint32_t> subset);

/// Inverse of subset_rank. Throws RankOutOfRange if rank >= binom(n, k).
std::vector<std::uint32_t> subset_unrank(std::uint64_t n, std::uint64_t k, const BigUint& rank);

/// ceil(log2 count): the fixed width that indexes `count` items; 0 when count <= 1.
std::size_t fixed_width(const BigUint& count);

/// Big-endian, exactly `width` bits. Throws WidthOverflow if value >= 2^width.
void fixed_width_write(Bitstream& out, const BigUint& value, std::size_t width);
BigUint fixed_width_read(BitReader& in, std::size_t width);

}  // namespace lgc

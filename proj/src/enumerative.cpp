#include "lgc/enumerative.hpp"

#include <algorithm>

#include "lgc/error.hpp"

namespace lgc {

BigUint::BigUint(std::uint64_t v) {
  mpz_import(v_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

BigUint BigUint::from_string(const std::string& decimal) {
  mpz_class v;
  if (v.set_str(decimal, 10) != 0 || sgn(v) < 0) {
    throw Error(ErrorCode::DomainError, "not a non-negative integer: " + decimal);
  }
  return BigUint(std::move(v));
}

std::size_t BigUint::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

BigUint operator-(const BigUint& a, const BigUint& b) {
  if (a < b) throw Error(ErrorCode::DomainError, "unsigned subtraction underflow");
  return BigUint(mpz_class(a.v_ - b.v_));
}

namespace {

mpz_class binom_raw(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

BigUint binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw Error(ErrorCode::DomainError,
                "binom(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  BigUint out;
  out.raw() = binom_raw(n, k);
  return out;
}

BigUint subset_rank(std::uint64_t n, std::span<const std::uint32_t> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n || (i > 0 && subset[i] <= subset[i - 1])) {
      throw Error(ErrorCode::DomainError, "subset must be strictly increasing within [0, n)");
    }
  }
  BigUint rank;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= i + 1) rank.raw() += binom_raw(subset[i], i + 1);
  }
  return rank;
}

std::vector<std::uint32_t> subset_unrank(std::uint64_t n, std::uint64_t k, const BigUint& rank) {
  if (k > n || !(rank < binom(n, k))) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank " + rank.to_string() + " for " + std::to_string(k) + "-subsets of " +
                    std::to_string(n));
  }
  std::vector<std::uint32_t> out(k);
  mpz_class rest = rank.raw();
  std::uint64_t upper = n;  // elements chosen so far are >= upper
  for (std::uint64_t i = k; i >= 1; --i) {
    // Largest c < upper with binom(c, i) <= rest; walk downward using
    // binom(c-1, i) = binom(c, i) * (c - i) / c.
    std::uint64_t c = upper - 1;
    mpz_class b = binom_raw(c, i);
    while (b > rest) {
      mpz_mul_ui(b.get_mpz_t(), b.get_mpz_t(), c - i);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), c);
      --c;
    }
    rest -= b;
    out[i - 1] = static_cast<std::uint32_t>(c);
    upper = c;
  }
  return out;
}

std::size_t fixed_width(const BigUint& count) {
  if (count <= BigUint(1)) return 0;
  return (count - BigUint(1)).bit_length();
}

void fixed_width_write(Bitstream& out, const BigUint& value, std::size_t width) {
  if (value.bit_length() > width) {
    throw Error(ErrorCode::WidthOverflow,
                value.to_string() + " does not fit in " + std::to_string(width) + " bits");
  }
  for (std::size_t i = width; i-- > 0;) out.push_back(value.bit(i));
}

BigUint fixed_width_read(BitReader& in, std::size_t width) {
  if (width > in.remaining()) {
    throw Error(ErrorCode::TruncatedStream, "need " + std::to_string(width) + " rank bits, have " +
                                                std::to_string(in.remaining()));
  }
  BigUint v;
  for (std::size_t i = width; i-- > 0;) {
    if (in.read_bit()) mpz_setbit(v.raw().get_mpz_t(), i);
  }
  return v;
}

}  // namespace lgc

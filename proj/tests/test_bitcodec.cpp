#include <doctest.h>

#include <algorithm>
#include <bit>

#include "lgc/bitstream.hpp"
#include "lgc/enumerative.hpp"
#include "lgc/error.hpp"
#include "support.hpp"

using lgc::BigUint;
using lgc::Bitstream;
using lgc::BitReader;

namespace {

int floor_log2(std::uint64_t n) {
  int l = -1;
  while (n) {
    n >>= 1;
    ++l;
  }
  return l;
}

std::string binary(std::uint64_t v) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('0' + (v & 1)));
    v >>= 1;
  } while (v);
  return s;
}

// Textbook construction: N = bit length of n; write bit-length(N)-1 zeros,
// N in binary, then n without its leading one.
std::string elias_oracle(std::uint64_t n) {
  const std::string bn = binary(n);
  const std::string bN = binary(bn.size());
  return std::string(bN.size() - 1, '0') + bN + bn.substr(1);
}

lgc::ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const lgc::Error& e) {
    return e.code();
  }
  return lgc::ErrorCode::ContractViolation;
}

}  // namespace

TEST_CASE("bit packing is MSB-first with zero padding") {
  Bitstream b = Bitstream::from_string("101");
  REQUIRE(b.bytes().size() == 1);
  CHECK(b.bytes()[0] == 0xA0);
  b.write_bits(0x1FF, 9);
  CHECK(b.size() == 12);
  CHECK(b.to_string() == "101111111111");
  CHECK(b.bytes()[1] == 0xF0);
  const std::uint8_t raw[] = {0x80, 0x01};
  CHECK(Bitstream::from_bytes(raw, 16).to_string() == "1000000000000001");
  BitReader r(b);
  CHECK(r.read_bits(3) == 5);
  CHECK(r.read_bits(9) == 0x1FF);
  CHECK(code_of([&] { r.read_bit(); }) == lgc::ErrorCode::TruncatedStream);
}

TEST_CASE("reader alignment") {
  Bitstream b = Bitstream::from_string("1011");
  b.append(Bitstream::from_string("0000"));
  b.write_bits(0xC3, 8);
  BitReader r(b.bytes(), b.bytes().size() * 8);
  CHECK(r.read_bits(4) == 0xB);
  r.align_to_byte();
  CHECK(r.position() == 8);
  CHECK(r.read_bits(8) == 0xC3);
  CHECK(r.remaining() == 0);
}

TEST_CASE("elias delta examples") {
  CHECK(lgc::elias_delta_encode(1).to_string() == "1");
  CHECK(lgc::elias_delta_encode(2).to_string() == "0100");
  CHECK(lgc::elias_delta_encode(17).size() == 9);
  CHECK(lgc::elias_delta_decode(Bitstream::from_string("1")) == std::pair<std::uint64_t, std::size_t>{1, 1});
  CHECK(lgc::elias_delta_decode(Bitstream::from_string("0100")) == std::pair<std::uint64_t, std::size_t>{2, 4});
  CHECK(lgc::elias_delta_decode(Bitstream::from_string("0101")) == std::pair<std::uint64_t, std::size_t>{3, 4});
  CHECK(lgc::elias_delta_decode(Bitstream::from_string("1011")).second == 1);
  CHECK(code_of([] { lgc::elias_delta_encode(0); }) == lgc::ErrorCode::DomainError);
  CHECK(code_of([] { lgc::elias_delta_decode(Bitstream::from_string("01")); }) ==
        lgc::ErrorCode::TruncatedStream);
  CHECK(code_of([] { lgc::elias_delta_decode(Bitstream::from_string("0000000000000000")); }) ==
        lgc::ErrorCode::MalformedCodeword);
}

TEST_CASE("elias delta agrees with the textbook construction") {
  for (std::uint64_t n = 1; n <= 5000; ++n) REQUIRE(lgc::elias_delta_encode(n).to_string() == elias_oracle(n));
  for (std::uint64_t n : {std::uint64_t{1} << 32, (std::uint64_t{1} << 63) + 12345, ~std::uint64_t{0}}) {
    CHECK(lgc::elias_delta_encode(n).to_string() == elias_oracle(n));
    CHECK(lgc::elias_delta_decode(lgc::elias_delta_encode(n)).first == n);
  }
}

TEST_CASE("elias length formula holds for 1..2^20") {
  for (std::uint64_t n = 1; n <= (std::uint64_t{1} << 20); ++n) {
    const int l = floor_log2(n);
    const int expect = l + 2 * floor_log2(1 + static_cast<std::uint64_t>(l)) + 1;
    REQUIRE(lgc::elias_delta_length(n) == expect);
  }
  for (std::uint64_t n = 1; n <= (std::uint64_t{1} << 20); n += 97) {
    const Bitstream b = lgc::elias_delta_encode(n);
    REQUIRE(static_cast<int>(b.size()) == lgc::elias_delta_length(n));
    REQUIRE(lgc::elias_delta_decode(b) == std::pair<std::uint64_t, std::size_t>{n, b.size()});
  }
}

TEST_CASE("concatenated codewords decode left to right") {
  testing::Rng g(4);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint64_t> values;
    Bitstream b;
    for (int i = 0; i < 5; ++i) {
      values.push_back(1 + (g() >> (g() % 64)));
      lgc::elias_delta_write(b, values.back());
    }
    BitReader r(b);
    for (std::uint64_t v : values) REQUIRE(lgc::elias_delta_read(r) == v);
    CHECK(r.remaining() == 0);
  }
}

TEST_CASE("binomials") {
  CHECK(lgc::binom(4, 2) == BigUint(6));
  CHECK(lgc::binom(9, 0) == BigUint(1));
  CHECK(lgc::binom(65536, 2) == BigUint(2147450880));
  CHECK(lgc::binom(0, 0) == BigUint(1));
  CHECK(code_of([] { lgc::binom(3, 4); }) == lgc::ErrorCode::DomainError);
  // Pascal's triangle as the oracle.
  std::vector<std::vector<std::uint64_t>> pascal(61);
  for (std::size_t n = 0; n <= 60; ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (std::size_t k = 0; k <= n; ++k) REQUIRE(lgc::binom(n, k) == BigUint(pascal[n][k]));
  }
  CHECK(lgc::binom(4096, 2048).bit_length() == 4090);
  CHECK(lgc::binom(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("colex rank examples") {
  const std::uint32_t s01[] = {0, 1};
  CHECK(lgc::subset_rank(4, s01) == BigUint(0));
  CHECK(lgc::subset_unrank(4, 2, 5) == std::vector<std::uint32_t>{2, 3});
  CHECK(lgc::subset_rank(7, {}) == BigUint(0));
  CHECK(lgc::subset_unrank(7, 0, 0).empty());
  CHECK(code_of([] { lgc::subset_unrank(4, 2, 6); }) == lgc::ErrorCode::RankOutOfRange);
}

TEST_CASE("rank and unrank are inverse bijections, n <= 16") {
  // In colex order the k-subsets of [0,n) sort like their bitmasks read as
  // integers, so the oracle rank is the position among equal-popcount masks.
  for (unsigned n = 0; n <= 16; ++n) {
    std::vector<std::uint64_t> seen(n + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const unsigned k = static_cast<unsigned>(std::popcount(mask));
      std::vector<std::uint32_t> subset;
      for (unsigned i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) subset.push_back(i);
      }
      const BigUint rank = lgc::subset_rank(n, subset);
      REQUIRE(rank == BigUint(seen[k]++));
      REQUIRE(lgc::subset_unrank(n, k, rank) == subset);
    }
    for (unsigned k = 0; k <= n; ++k) REQUIRE(lgc::binom(n, k) == BigUint(seen[k]));
  }
}

TEST_CASE("rank and unrank round-trip at n = 4096") {
  testing::Rng g(6);
  for (int t = 0; t < 20; ++t) {
    const auto a = testing::random_algset(g, 12, 0.05 + 0.045 * t);
    const auto pts = a.points();
    const std::vector<std::uint32_t> subset(pts.begin(), pts.end());
    const BigUint rank = lgc::subset_rank(4096, subset);
    CHECK(rank < lgc::binom(4096, subset.size()));
    CHECK(lgc::subset_unrank(4096, subset.size(), rank) == subset);
  }
}

TEST_CASE("fixed-width rank fields") {
  CHECK(lgc::fixed_width(6) == 3);
  CHECK(lgc::fixed_width(1) == 0);
  CHECK(lgc::fixed_width(4) == 2);
  CHECK(lgc::fixed_width(5) == 3);
  Bitstream b;
  lgc::fixed_width_write(b, 5, lgc::fixed_width(6));
  CHECK(b.to_string() == "101");
  Bitstream empty;
  lgc::fixed_width_write(empty, 0, lgc::fixed_width(1));
  CHECK(empty.size() == 0);
  Bitstream two;
  lgc::fixed_width_write(two, 2, lgc::fixed_width(4));
  CHECK(two.to_string() == "10");
  CHECK(code_of([] {
          Bitstream o;
          lgc::fixed_width_write(o, 8, 3);
        }) == lgc::ErrorCode::WidthOverflow);
  BitReader r(b);
  CHECK(lgc::fixed_width_read(r, 3) == BigUint(5));
  CHECK(code_of([&] { lgc::fixed_width_read(r, 1); }) == lgc::ErrorCode::TruncatedStream);

  const BigUint big = lgc::binom(4096, 1000) - BigUint(1);
  Bitstream w;
  lgc::fixed_width_write(w, big, lgc::fixed_width(lgc::binom(4096, 1000)));
  BitReader rw(w);
  CHECK(lgc::fixed_width_read(rw, w.size()) == big);
}

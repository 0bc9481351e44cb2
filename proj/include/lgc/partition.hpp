#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/bitstream.hpp"

namespace lgc {

/// One source symbol: 0 (must be inside M), 1 (must be outside M), or
/// Free (the "don't care" symbol, written ⊗ or '*').
enum class Ternary : std::uint8_t { Zero = 0, One = 1, Free = 2 };

using TernaryVector = std::vector<Ternary>;

/// Decoder output: entry 0 means "inside M".
using PartitionVector = std::vector<std::uint8_t>;

/// Accepts '0', '1', and '*', 'x' or the UTF-8 glyph ⊗ for Free.
TernaryVector ternary_from_string(std::string_view text);
std::string to_string(const TernaryVector& x);

/// Positions carrying a hard constraint (non-Free entries), ascending.
std::vector<std::size_t> constrained_positions(const TernaryVector& x);

/// Binary entropy in bits, H(0) = H(1) = 0.
double binary_entropy(double p);

/// (a+b) H(a/(a+b)) in bits, with the boundary Lambda(0,b) = Lambda(a,0) = 0.
double lambda_fn(double a, double b);

/// 1 iff (x, y) is (0,1) or (1,0); Free never costs anything.
int rho(Ternary x, std::uint8_t y) noexcept;
std::size_t total_distortion(const TernaryVector& x, const PartitionVector& y);

// --- naive codec: send A or B outright -------------------------------------

enum class Side { A, B };

/// elias(|set|+1) followed by the colex rank of the chosen side's set.
void naive_encode(Bitstream& out, const TernaryVector& x, Side side);
/// Side A: 0 on the decoded set, 1 elsewhere. Side B: 1 on the set, 0 elsewhere.
PartitionVector naive_decode(BitReader& in, std::size_t n, Side side);

// --- shared randomness ------------------------------------------------------

/// Both ends derive the same matrices from (seed, row, column block).
/// `zero_probability` is P(C_ij = 0) = p_a / (p_a + p_b) for the random codec.
struct SharedRandomness {
  std::uint64_t seed = 0;
  double zero_probability = 0.5;
};

/// p_a / (p_a + p_b), or 1/2 when both are zero.
double partition_bias(double p_a, double p_b);

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Row `row` (1-based) of the random codec's matrix C at column `col`.
std::uint8_t random_matrix_bit(const SharedRandomness& shared, std::uint64_t row,
                               std::size_t col) noexcept;
/// Columns [64*block, 64*block+63] of row `row` (1-based) of the fair matrix G.
std::uint64_t linear_matrix_word(std::uint64_t seed, std::uint64_t row,
                                 std::size_t block) noexcept;

// --- random-coding codec ----------------------------------------------------

inline constexpr std::uint64_t kMaxRandomRows = std::uint64_t{1} << 26;

/// Index of the first row of C agreeing with x on every constrained
/// position. Throws SearchExhausted past kMaxRandomRows.
std::uint64_t random_search(const TernaryVector& x, const SharedRandomness& shared);
void random_encode(Bitstream& out, const TernaryVector& x, const SharedRandomness& shared);
PartitionVector random_decode(BitReader& in, std::size_t n, const SharedRandomness& shared);

// --- linear codec -----------------------------------------------------------

struct LinearSolution {
  std::uint64_t rows = 1;              // J
  std::vector<std::uint8_t> message;   // M, one entry per row of G_J
};

/// Smallest J for which [M G_J] restricted to the constrained positions
/// equals x there, with one solution M. Incremental elimination: each new
/// row of G is reduced once against the current echelon basis.
LinearSolution linear_solve(const TernaryVector& x, std::uint64_t seed);
/// M G_J over all n columns.
PartitionVector linear_expand(const LinearSolution& solution, std::size_t n, std::uint64_t seed);

/// elias(J) followed by the J message bits.
void linear_encode(Bitstream& out, const TernaryVector& x, std::uint64_t seed);
PartitionVector linear_decode(BitReader& in, std::size_t n, std::uint64_t seed);

// --- codec selection used by the protocols ----------------------------------

enum class PartitionCodec : std::uint8_t { Random = 1, Linear = 2 };

void partition_encode(Bitstream& out, const TernaryVector& x, PartitionCodec codec,
                      const SharedRandomness& shared);
PartitionVector partition_decode(BitReader& in, std::size_t n, PartitionCodec codec,
                                 const SharedRandomness& shared);

// --- constant-column-weight codes -------------------------------------------

struct BinaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;  // row-major

  std::uint8_t at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
  static BinaryMatrix from_rows(const std::vector<std::string>& rows);
};

/// t x n matrix whose columns are the first n weight-w patterns of length t
/// in colex order. Throws DuplicateColumns when binom(t, w) < n.
BinaryMatrix cw_matrix(std::size_t t, std::size_t n, std::size_t w);

/// True iff every ordered pair of distinct columns shows both row patterns
/// 01 and 10. Throws DomainError if the columns do not share one weight.
bool cw_check(const BinaryMatrix& c);

/// A row with 0 in column a and 1 in column b: the partition that puts the
/// singleton {a} inside M and {b} outside.
std::optional<std::size_t> cw_separating_row(const BinaryMatrix& c, std::size_t a, std::size_t b);

// --- bounds -----------------------------------------------------------------

struct RateBounds {
  double lower = 0;
  double upper = 0;
};

/// (Lambda, Lambda + 2 log2(n Lambda)/n + 3/n). The log term is clamped at
/// n Lambda >= 1 so the bound stays finite at Lambda = 0.
RateBounds shannon_partition_bounds(double n, double p_a, double p_b);

/// Average-rate guarantee of the linear codec:
/// (p_a+p_b) + [log2(n(p_a+p_b)+2) + 2 log2 log2(n(p_a+p_b)+2) + 5] / n.
double linear_code_bound(double n, double p_a, double p_b);

}  // namespace lgc

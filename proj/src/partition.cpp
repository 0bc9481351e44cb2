#include "lgc/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lgc/enumerative.hpp"
#include "lgc/error.hpp"

namespace lgc {

TernaryVector ternary_from_string(std::string_view text) {
  static constexpr std::string_view kOtimes = "\xE2\x8A\x97";  // ⊗
  TernaryVector out;
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kOtimes.size()) == kOtimes) {
      out.push_back(Ternary::Free);
      i += kOtimes.size();
      continue;
    }
    switch (text[i]) {
      case '0': out.push_back(Ternary::Zero); break;
      case '1': out.push_back(Ternary::One); break;
      case '*': case 'x': case 'X': out.push_back(Ternary::Free); break;
      default: throw Error(ErrorCode::DomainError, "bad ternary symbol in '" + std::string(text) + "'");
    }
    ++i;
  }
  return out;
}

std::string to_string(const TernaryVector& x) {
  std::string out;
  for (Ternary t : x) out += t == Ternary::Zero ? '0' : (t == Ternary::One ? '1' : '*');
  return out;
}

std::vector<std::size_t> constrained_positions(const TernaryVector& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != Ternary::Free) out.push_back(i);
  }
  return out;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::DomainError, "H(p) needs p in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double lambda_fn(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) throw Error(ErrorCode::DomainError, "Lambda needs a, b >= 0");
  if (a == 0.0 || b == 0.0) return 0.0;
  return (a + b) * binary_entropy(a / (a + b));
}

int rho(Ternary x, std::uint8_t y) noexcept {
  if (x == Ternary::Free) return 0;
  return static_cast<int>(static_cast<std::uint8_t>(x) != y);
}

std::size_t total_distortion(const TernaryVector& x, const PartitionVector& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DomainError, "length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += static_cast<std::size_t>(rho(x[i], y[i]));
  return d;
}

// --- naive ------------------------------------------------------------------

void naive_encode(Bitstream& out, const TernaryVector& x, Side side) {
  const Ternary wanted = side == Side::A ? Ternary::Zero : Ternary::One;
  std::vector<std::uint32_t> set;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == wanted) set.push_back(static_cast<std::uint32_t>(i));
  }
  elias_delta_write(out, set.size() + 1);
  fixed_width_write(out, subset_rank(x.size(), set), fixed_width(binom(x.size(), set.size())));
}

PartitionVector naive_decode(BitReader& in, std::size_t n, Side side) {
  const std::uint64_t k = elias_delta_read(in) - 1;
  if (k > n) throw Error(ErrorCode::MalformedCodeword, "set size exceeds n");
  const BigUint rank = fixed_width_read(in, fixed_width(binom(n, k)));
  const auto set = subset_unrank(n, k, rank);
  const std::uint8_t member = side == Side::A ? 0 : 1;
  PartitionVector y(n, static_cast<std::uint8_t>(1 - member));
  for (auto i : set) y[i] = member;
  return y;
}

// --- shared randomness --------------------------------------------------------

namespace {

constexpr std::uint64_t kRandomDomain = 0x52414E444F4D2D43ull;  // distinct streams for C and G
constexpr std::uint64_t kLinearDomain = 0x4C494E4541522D47ull;

std::uint64_t keyed_word(std::uint64_t seed, std::uint64_t row, std::uint64_t block) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ row) ^ block);
}

void check_law(double p_a, double p_b) {
  if (!(p_a >= 0.0) || !(p_b >= 0.0) || !(p_a + p_b <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::DomainError, "need p_a, p_b >= 0 and p_a + p_b <= 1");
  }
}

}  // namespace

double partition_bias(double p_a, double p_b) {
  if (!(p_a >= 0.0) || !(p_b >= 0.0)) throw Error(ErrorCode::DomainError, "negative probability");
  return p_a + p_b > 0.0 ? p_a / (p_a + p_b) : 0.5;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint8_t random_matrix_bit(const SharedRandomness& shared, std::uint64_t row,
                               std::size_t col) noexcept {
  // Top 53 bits as a uniform draw in [0,1).
  const std::uint64_t u = keyed_word(shared.seed ^ kRandomDomain, row, col) >> 11;
  const double draw = static_cast<double>(u) * 0x1.0p-53;
  return draw < shared.zero_probability ? 0 : 1;
}

std::uint64_t linear_matrix_word(std::uint64_t seed, std::uint64_t row, std::size_t block) noexcept {
  return keyed_word(seed ^ kLinearDomain, row, block);
}

// --- random coding --------------------------------------------------------------

std::uint64_t random_search(const TernaryVector& x, const SharedRandomness& shared) {
  const auto psi = constrained_positions(x);
  for (std::uint64_t row = 1; row <= kMaxRandomRows; ++row) {
    bool match = true;
    for (std::size_t i : psi) {
      if (random_matrix_bit(shared, row, i) != static_cast<std::uint8_t>(x[i])) {
        match = false;
        break;
      }
    }
    if (match) return row;
  }
  throw Error(ErrorCode::SearchExhausted,
              "no matching row within " + std::to_string(kMaxRandomRows) + " rows (|Psi|=" +
                  std::to_string(psi.size()) + ")");
}

void random_encode(Bitstream& out, const TernaryVector& x, const SharedRandomness& shared) {
  elias_delta_write(out, random_search(x, shared));
}

PartitionVector random_decode(BitReader& in, std::size_t n, const SharedRandomness& shared) {
  const std::uint64_t row = elias_delta_read(in);
  if (row > kMaxRandomRows) throw Error(ErrorCode::MalformedCodeword, "row index beyond J_MAX");
  PartitionVector y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = random_matrix_bit(shared, row, i);
  return y;
}

// --- linear codes -----------------------------------------------------------------

namespace {

// Bit-packed rows with a combination vector recording which rows of G were
// summed. Combination width grows in 64-row steps.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_((width + 63) / 64) {}

  std::size_t words() const { return width_; }
  std::size_t rank() const { return pivots_.size(); }

  void ensure_rows(std::uint64_t rows) {
    const std::size_t need = static_cast<std::size_t>((rows + 63) / 64);
    if (need <= comb_width_) return;
    const std::size_t grown = std::max(need, comb_width_ * 2);
    std::vector<std::uint64_t> combs(pivots_.size() * grown, 0);
    for (std::size_t b = 0; b < pivots_.size(); ++b) {
      std::copy_n(&combs_[b * comb_width_], comb_width_, &combs[b * grown]);
    }
    combs_ = std::move(combs);
    comb_width_ = grown;
  }

  std::size_t comb_words() const { return comb_width_; }

  // Reduces (v, c) in place; returns the pivot if v stays nonzero.
  std::optional<std::size_t> reduce(std::vector<std::uint64_t>& v, std::vector<std::uint64_t>& c) const {
    for (std::size_t b = 0; b < pivots_.size(); ++b) {
      const std::size_t p = pivots_[b];
      if ((v[p >> 6] >> (p & 63)) & 1u) {
        const std::uint64_t* row = &rows_[b * width_];
        for (std::size_t j = 0; j < width_; ++j) v[j] ^= row[j];
        const std::uint64_t* comb = &combs_[b * comb_width_];
        for (std::size_t j = 0; j < comb_width_; ++j) c[j] ^= comb[j];
      }
    }
    for (std::size_t j = 0; j < width_; ++j) {
      if (v[j]) return j * 64 + static_cast<std::size_t>(std::countr_zero(v[j]));
    }
    return std::nullopt;
  }

  void add(const std::vector<std::uint64_t>& v, const std::vector<std::uint64_t>& c, std::size_t pivot) {
    pivots_.push_back(pivot);
    rows_.insert(rows_.end(), v.begin(), v.end());
    combs_.insert(combs_.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(comb_width_));
  }

 private:
  std::size_t width_;
  std::size_t comb_width_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> combs_;
};

bool all_zero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

}  // namespace

LinearSolution linear_solve(const TernaryVector& x, std::uint64_t seed) {
  const auto psi = constrained_positions(x);
  const std::size_t k = psi.size();
  EchelonBasis basis(k);
  const std::size_t kw = basis.words();

  std::vector<std::uint64_t> target(kw, 0);
  for (std::size_t t = 0; t < k; ++t) {
    if (x[psi[t]] == Ternary::One) target[t >> 6] |= std::uint64_t{1} << (t & 63);
  }
  LinearSolution sol;
  if (all_zero(target)) {
    sol.rows = 1;
    sol.message.assign(1, 0);
    return sol;
  }

  std::vector<std::size_t> blocks;
  for (std::size_t i : psi) {
    if (blocks.empty() || blocks.back() != i / 64) blocks.push_back(i / 64);
  }
  std::vector<std::uint64_t> target_comb;
  std::vector<std::uint64_t> words(x.size() / 64 + 1);
  std::vector<std::uint64_t> v(kw);
  std::vector<std::uint64_t> c;

  for (std::uint64_t row = 1;; ++row) {
    basis.ensure_rows(row);
    const std::size_t cw = basis.comb_words();
    target_comb.resize(cw, 0);
    c.assign(cw, 0);
    c[(row - 1) >> 6] |= std::uint64_t{1} << ((row - 1) & 63);

    for (std::size_t b : blocks) words[b] = linear_matrix_word(seed, row, b);
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t i = psi[t];
      if ((words[i >> 6] >> (i & 63)) & 1u) v[t >> 6] |= std::uint64_t{1} << (t & 63);
    }

    const auto pivot = basis.reduce(v, c);
    if (!pivot) continue;
    basis.add(v, c, *pivot);
    // The target stays reduced against every earlier pivot; only the new
    // pivot can still be set.
    if ((target[*pivot >> 6] >> (*pivot & 63)) & 1u) {
      for (std::size_t j = 0; j < kw; ++j) target[j] ^= v[j];
      for (std::size_t j = 0; j < cw; ++j) target_comb[j] ^= c[j];
      if (all_zero(target)) {
        sol.rows = row;
        sol.message.resize(row);
        for (std::uint64_t j = 0; j < row; ++j) {
          sol.message[j] = static_cast<std::uint8_t>((target_comb[j >> 6] >> (j & 63)) & 1u);
        }
        return sol;
      }
    }
  }
}

PartitionVector linear_expand(const LinearSolution& solution, std::size_t n, std::uint64_t seed) {
  const std::size_t blocks = (n + 63) / 64;
  std::vector<std::uint64_t> acc(blocks, 0);
  for (std::uint64_t j = 0; j < solution.rows; ++j) {
    if (!solution.message[j]) continue;
    for (std::size_t b = 0; b < blocks; ++b) acc[b] ^= linear_matrix_word(seed, j + 1, b);
  }
  PartitionVector y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint8_t>((acc[i >> 6] >> (i & 63)) & 1u);
  return y;
}

void linear_encode(Bitstream& out, const TernaryVector& x, std::uint64_t seed) {
  const LinearSolution sol = linear_solve(x, seed);
  elias_delta_write(out, sol.rows);
  for (auto bit : sol.message) out.push_back(bit != 0);
}

PartitionVector linear_decode(BitReader& in, std::size_t n, std::uint64_t seed) {
  LinearSolution sol;
  sol.rows = elias_delta_read(in);
  if (sol.rows > in.remaining()) {
    throw Error(ErrorCode::TruncatedStream, "message of " + std::to_string(sol.rows) +
                                                " bits exceeds the remaining stream");
  }
  sol.message.resize(sol.rows);
  for (auto& bit : sol.message) bit = in.read_bit() ? 1 : 0;
  return linear_expand(sol, n, seed);
}

void partition_encode(Bitstream& out, const TernaryVector& x, PartitionCodec codec,
                      const SharedRandomness& shared) {
  switch (codec) {
    case PartitionCodec::Random: random_encode(out, x, shared); return;
    case PartitionCodec::Linear: linear_encode(out, x, shared.seed); return;
  }
  throw Error(ErrorCode::DomainError, "unknown partition codec");
}

PartitionVector partition_decode(BitReader& in, std::size_t n, PartitionCodec codec,
                                 const SharedRandomness& shared) {
  switch (codec) {
    case PartitionCodec::Random: return random_decode(in, n, shared);
    case PartitionCodec::Linear: return linear_decode(in, n, shared.seed);
  }
  throw Error(ErrorCode::DomainError, "unknown partition codec");
}

// --- constant column weight ---------------------------------------------------------

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
  BinaryMatrix c;
  c.rows = rows.size();
  c.cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != c.cols) throw Error(ErrorCode::DomainError, "ragged matrix");
    for (char ch : r) {
      if (ch != '0' && ch != '1') throw Error(ErrorCode::DomainError, "matrix entries must be 0/1");
      c.cells.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }
  return c;
}

BinaryMatrix cw_matrix(std::size_t t, std::size_t n, std::size_t w) {
  if (w > t || binom(t, w) < BigUint(n)) {
    throw Error(ErrorCode::DuplicateColumns, "only binom(" + std::to_string(t) + "," +
                                                 std::to_string(w) + ") distinct columns exist");
  }
  BinaryMatrix c;
  c.rows = t;
  c.cols = n;
  c.cells.assign(t * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (auto r : subset_unrank(t, w, BigUint(j))) c.cells[r * n + j] = 1;
  }
  return c;
}

bool cw_check(const BinaryMatrix& c) {
  std::optional<std::size_t> weight;
  for (std::size_t j = 0; j < c.cols; ++j) {
    std::size_t w = 0;
    for (std::size_t r = 0; r < c.rows; ++r) w += c.at(r, j);
    if (weight && *weight != w) {
      throw Error(ErrorCode::DomainError, "columns have unequal weights");
    }
    weight = w;
  }
  for (std::size_t a = 0; a < c.cols; ++a) {
    for (std::size_t b = 0; b < c.cols; ++b) {
      if (a != b && !cw_separating_row(c, a, b)) return false;
    }
  }
  return true;
}

std::optional<std::size_t> cw_separating_row(const BinaryMatrix& c, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < c.rows; ++r) {
    if (c.at(r, a) == 0 && c.at(r, b) == 1) return r;
  }
  return std::nullopt;
}

// --- bounds ---------------------------------------------------------------------------

RateBounds shannon_partition_bounds(double n, double p_a, double p_b) {
  check_law(p_a, p_b);
  if (!(n > 0.0)) throw Error(ErrorCode::DomainError, "n must be positive");
  const double nd = n;
  const double lam = lambda_fn(p_a, p_b);
  return {lam, lam + 2.0 * std::log2(std::max(nd * lam, 1.0)) / nd + 3.0 / nd};
}

double linear_code_bound(double n, double p_a, double p_b) {
  check_law(p_a, p_b);
  if (!(n > 0.0)) throw Error(ErrorCode::DomainError, "n must be positive");
  const double nd = n;
  const double l = std::log2(nd * (p_a + p_b) + 2.0);
  return (p_a + p_b) + (l + 2.0 * std::log2(l) + 5.0) / nd;
}

}  // namespace lgc

#include "lgc/bitstream.hpp"

#include <bit>

#include "lgc/error.hpp"

namespace lgc {

Bitstream Bitstream::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  if (bit_count > bytes.size() * 8) {
    throw Error(ErrorCode::TruncatedStream, "bit count exceeds buffer");
  }
  Bitstream s;
  s.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_count + 7) / 8));
  s.bits_ = bit_count;
  if (bit_count % 8 != 0) s.bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (bit_count % 8));
  return s;
}

Bitstream Bitstream::from_string(std::string_view bits) {
  Bitstream s;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorCode::DomainError, "bit string contains '" + std::string(1, c) + "'");
    s.push_back(c == '1');
  }
  return s;
}

void Bitstream::push_back(bool bit) {
  if ((bits_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ & 7));
  ++bits_;
}

void Bitstream::write_bits(std::uint64_t value, int width) {
  for (int i = width - 1; i >= 0; --i) push_back((value >> i) & 1u);
}

void Bitstream::append(const Bitstream& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

std::string Bitstream::to_string() const {
  std::string out;
  out.reserve(bits_);
  for (std::size_t i = 0; i < bits_; ++i) out += (*this)[i] ? '1' : '0';
  return out;
}

bool BitReader::read_bit() {
  if (pos_ >= bits_) throw Error(ErrorCode::TruncatedStream, "read past end of stream");
  const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
  ++pos_;
  return bit;
}

std::uint64_t BitReader::read_bits(int width) {
  if (static_cast<std::size_t>(width) > remaining()) {
    throw Error(ErrorCode::TruncatedStream, "need " + std::to_string(width) + " bits, have " +
                                                std::to_string(remaining()));
  }
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
  return v;
}

void BitReader::align_to_byte() noexcept {
  pos_ = std::min(bits_, (pos_ + 7) & ~std::size_t{7});
}

namespace {

int floor_log2(std::uint64_t n) { return 63 - std::countl_zero(n); }

}  // namespace

int elias_delta_length(std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "Elias delta is defined for n >= 1");
  const int lg = floor_log2(n);
  return lg + 2 * floor_log2(static_cast<std::uint64_t>(1 + lg)) + 1;
}

void elias_delta_write(Bitstream& out, std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "Elias delta is defined for n >= 1");
  const int len = floor_log2(n) + 1;  // bits in n
  const int len_len = floor_log2(static_cast<std::uint64_t>(len));
  out.write_bits(0, len_len);
  out.write_bits(static_cast<std::uint64_t>(len), len_len + 1);
  out.write_bits(n, len - 1);  // n without its leading 1
}

std::uint64_t elias_delta_read(BitReader& in) {
  int zeros = 0;
  while (!in.read_bit()) {
    if (++zeros > 6) throw Error(ErrorCode::MalformedCodeword, "length prefix exceeds 64-bit range");
  }
  const std::uint64_t len = (std::uint64_t{1} << zeros) | in.read_bits(zeros);
  if (len > 64) throw Error(ErrorCode::MalformedCodeword, "value length " + std::to_string(len));
  const int rest = static_cast<int>(len) - 1;
  const std::uint64_t low = in.read_bits(rest);
  return (std::uint64_t{1} << rest) | low;
}

Bitstream elias_delta_encode(std::uint64_t n) {
  Bitstream out;
  elias_delta_write(out, n);
  return out;
}

std::pair<std::uint64_t, std::size_t> elias_delta_decode(const Bitstream& bits) {
  BitReader in(bits);
  const std::uint64_t n = elias_delta_read(in);
  return {n, in.position()};
}

}  // namespace lgc

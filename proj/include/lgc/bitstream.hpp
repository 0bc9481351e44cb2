#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgc {

/// Growable bit sequence. Bytes are packed MSB-first; the final byte is
/// zero-padded.
class Bitstream {
 public:
  Bitstream() = default;
  static Bitstream from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);
  /// "0101" -> four bits. Throws DomainError on other characters.
  static Bitstream from_string(std::string_view bits);

  void push_back(bool bit);
  /// Low `width` bits of `value`, most significant first. width <= 64.
  void write_bits(std::uint64_t value, int width);
  void append(const Bitstream& other);

  bool operator[](std::size_t i) const noexcept { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u; }
  std::size_t size() const noexcept { return bits_; }
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::string to_string() const;

  friend bool operator==(const Bitstream&, const Bitstream&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

/// Sequential reader over a bit range. Never reads past `bit_count`.
class BitReader {
 public:
  explicit BitReader(const Bitstream& stream) : BitReader(stream.bytes(), stream.size()) {}
  BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count)
      : bytes_(bytes), bits_(bit_count) {}

  bool read_bit();
  std::uint64_t read_bits(int width);
  void align_to_byte() noexcept;

  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_ - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t bits_;
  std::size_t pos_ = 0;
};

/// floor(log2 n) + 2 floor(log2(1 + floor(log2 n))) + 1, for n >= 1.
int elias_delta_length(std::uint64_t n);

void elias_delta_write(Bitstream& out, std::uint64_t n);
std::uint64_t elias_delta_read(BitReader& in);

Bitstream elias_delta_encode(std::uint64_t n);
/// Returns (value, bits consumed).
std::pair<std::uint64_t, std::size_t> elias_delta_decode(const Bitstream& bits);

}  // namespace lgc

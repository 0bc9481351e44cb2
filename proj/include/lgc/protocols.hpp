#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lgc/algset.hpp"
#include "lgc/bitstream.hpp"
#include "lgc/partition.hpp"
#include "lgc/poly.hpp"

namespace lgc {

enum class Scenario : std::uint8_t { T1 = 1, T2 = 2, T3 = 3, T4 = 4, T5 = 5 };

/// Wire codec byte. T1-T3 always use Enumerative.
enum class CodecId : std::uint8_t { Enumerative = 0, Random = 1, Linear = 2 };

inline constexpr std::size_t kHeaderBytes = 24;

/// 16-bit fixed point, value / 65536, saturating at 65535.
std::uint16_t quantize(double p);
double dequantize(std::uint16_t q) noexcept;

/// Byte layout: "LGC1", tag, codec, m (u16 BE), seed (u64 BE), four u16 BE
/// law parameters.
struct Header {
  Scenario scenario = Scenario::T1;
  CodecId codec = CodecId::Enumerative;
  int m = 0;
  std::uint64_t seed = 0;
  std::array<std::uint16_t, 4> law{};

  friend bool operator==(const Header&, const Header&) = default;
};

void write_header(Bitstream& out, const Header& h);
/// Throws MalformedHeader on short input, bad magic, unknown tag or a codec
/// byte that does not fit the tag; UniverseTooLarge if m is out of range.
Header read_header(BitReader& in);

struct Transmission {
  Header header;
  Bitstream payload;

  /// Header followed by the payload, zero-padded to a whole byte.
  std::vector<std::uint8_t> bytes() const;
};

/// Options for the partition-coded scenarios. For T4, `law` holds
/// (p_s, p_q); for T5, (p_{s|r}, p_{q|r}, p_{s|~r}, p_{q|~r}). Only the
/// random codec reads them, and only after quantization, so the decoder sees
/// the same values.
struct PartitionOptions {
  PartitionCodec codec = PartitionCodec::Linear;
  std::uint64_t seed = 0;
  std::array<double, 4> law{};
};

/// Entry i: 0 on zeros(s), 1 outside zeros(q), Free otherwise. Read over
/// max(s.m, q.m) variables. Throws NotEntailed unless s |= q.
TernaryVector psi(const PolySet& s, const PolySet& q);

Transmission t1_encode(const PolySet& s);
PolySet t1_decode(const Transmission& tx);

Transmission t2_encode(const PolySet& s, const PolySet& r);
PolySet t2_decode(const Transmission& tx, const PolySet& r);

/// Same payload as t2_encode; the tag tells the decoder to return delta.
Transmission t3_encode(const PolySet& s, const PolySet& r);
PolySet t3_decode(const Transmission& tx, const PolySet& r);

Transmission t4_encode(const PolySet& s, const PolySet& q, const PartitionOptions& options);
PolySet t4_decode(const Transmission& tx);

Transmission t5_encode(const PolySet& s, const PolySet& q, const PolySet& r,
                       const PartitionOptions& options);
PolySet t5_decode(const Transmission& tx, const PolySet& r);

struct Decoded {
  Header header;
  PolySet result;
  std::size_t payload_bits = 0;
};

/// Reads one header and payload, then skips the padding, so it can be called
/// repeatedly on concatenated transmissions. T2, T3 and T5 need the
/// background r; PreconditionViolated without it.
Decoded decode_next(BitReader& in, const std::optional<PolySet>& background);

/// Decodes every transmission in a byte buffer.
std::vector<Decoded> decode_all(std::span<const std::uint8_t> bytes,
                                const std::optional<PolySet>& background);

}  // namespace lgc

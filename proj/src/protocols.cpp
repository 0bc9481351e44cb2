#include "lgc/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lgc/enumerative.hpp"
#include "lgc/error.hpp"
#include "lgc/groebner.hpp"

namespace lgc {

namespace {

constexpr char kMagic[4] = {'L', 'G', 'C', '1'};
constexpr std::uint64_t kSecondHalfSalt = 0x54355345434F4E44ull;

AlgSet zeros_over(const PolySet& p, int m) {
  if (p.m > m) {
    throw Error(ErrorCode::VariableOutOfRange,
                "statement set uses m=" + std::to_string(p.m) + " but the transmission has m=" +
                    std::to_string(m));
  }
  return zeros(PolySet{m, p.polys});
}

int joint_m(std::initializer_list<const PolySet*> sets) {
  int m = 0;
  for (const PolySet* s : sets) m = std::max(m, s->m);
  if (m > kMaxExhaustiveVars) {
    throw Error(ErrorCode::UniverseTooLarge, "m=" + std::to_string(m) + " exceeds " +
                                                 std::to_string(kMaxExhaustiveVars));
  }
  return m;
}

// |subset|+1, then the rank of the subset's positions inside `universe`.
void write_subset(Bitstream& out, const std::vector<Point>& universe, const AlgSet& subset) {
  std::vector<std::uint32_t> positions;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (subset.contains(universe[i])) positions.push_back(static_cast<std::uint32_t>(i));
  }
  elias_delta_write(out, positions.size() + 1);
  const BigUint count = binom(universe.size(), positions.size());
  fixed_width_write(out, subset_rank(universe.size(), positions), fixed_width(count));
}

AlgSet read_subset(BitReader& in, const std::vector<Point>& universe, int m) {
  const std::uint64_t k = elias_delta_read(in) - 1;
  if (k > universe.size()) {
    throw Error(ErrorCode::RankOutOfRange, "subset size " + std::to_string(k) +
                                               " exceeds universe " + std::to_string(universe.size()));
  }
  const BigUint rank = fixed_width_read(in, fixed_width(binom(universe.size(), k)));
  AlgSet out(m);
  for (std::uint32_t i : subset_unrank(universe.size(), k, rank)) out.insert(universe[i]);
  return out;
}

std::vector<Point> all_points(int m) { return AlgSet::full(m).points(); }

SharedRandomness shared_for(const Header& h, int half) {
  const double p_s = dequantize(h.law[2 * half]);
  const double p_q = dequantize(h.law[2 * half + 1]);
  SharedRandomness shared;
  shared.seed = half == 0 ? h.seed : splitmix64(h.seed ^ kSecondHalfSalt);
  shared.zero_probability = partition_bias(p_s, std::max(0.0, 1.0 - p_q));
  return shared;
}

PartitionCodec partition_codec(CodecId id) {
  return id == CodecId::Random ? PartitionCodec::Random : PartitionCodec::Linear;
}

Header partition_header(Scenario tag, int m, const PartitionOptions& options) {
  Header h;
  h.scenario = tag;
  h.codec = options.codec == PartitionCodec::Random ? CodecId::Random : CodecId::Linear;
  h.m = m;
  h.seed = options.seed;
  for (std::size_t i = 0; i < 4; ++i) h.law[i] = quantize(options.law[i]);
  return h;
}

TernaryVector take(const TernaryVector& x, const std::vector<Point>& idx) {
  TernaryVector out;
  out.reserve(idx.size());
  for (Point p : idx) out.push_back(x[p]);
  return out;
}

const PolySet& need_background(const std::optional<PolySet>& r, Scenario tag) {
  if (!r) {
    throw Error(ErrorCode::PreconditionViolated,
                "scenario T" + std::to_string(static_cast<int>(tag)) + " needs the background r");
  }
  return *r;
}

PolySet decode_payload(const Header& h, BitReader& in, const std::optional<PolySet>& background) {
  switch (h.scenario) {
    case Scenario::T1:
      return sigma(read_subset(in, all_points(h.m), h.m));
    case Scenario::T2:
    case Scenario::T3: {
      const PolySet& r = need_background(background, h.scenario);
      const AlgSet zr = zeros_over(r, h.m);
      PolySet decoded = sigma(read_subset(in, zr.points(), h.m));
      if (h.scenario == Scenario::T2) return decoded;
      return delta(decoded, PolySet{h.m, r.polys});
    }
    case Scenario::T4: {
      const std::size_t n = std::size_t{1} << h.m;
      const PartitionVector y = partition_decode(in, n, partition_codec(h.codec), shared_for(h, 0));
      AlgSet z(h.m);
      for (std::size_t i = 0; i < n; ++i) {
        if (y[i] == 0) z.insert(static_cast<Point>(i));
      }
      return sigma(z);
    }
    case Scenario::T5: {
      const PolySet& r = need_background(background, h.scenario);
      const AlgSet zr = zeros_over(r, h.m);
      AlgSet z(h.m);
      const std::vector<Point> halves[2] = {zr.points(), zr.complement().points()};
      for (int half = 0; half < 2; ++half) {
        const auto& idx = halves[half];
        if (idx.empty()) continue;
        const PartitionVector y =
            partition_decode(in, idx.size(), partition_codec(h.codec), shared_for(h, half));
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (y[i] == 0) z.insert(idx[i]);
        }
      }
      return sigma(z);
    }
  }
  throw Error(ErrorCode::MalformedHeader, "unknown scenario");
}

PolySet decode_checked(const Transmission& tx, Scenario expected,
                       const std::optional<PolySet>& background) {
  if (tx.header.scenario != expected) {
    throw Error(ErrorCode::MalformedHeader,
                "expected scenario T" + std::to_string(static_cast<int>(expected)) + ", got T" +
                    std::to_string(static_cast<int>(tx.header.scenario)));
  }
  BitReader in(tx.payload);
  return decode_payload(tx.header, in, background);
}

}  // namespace

std::uint16_t quantize(double p) {
  if (!(p >= 0.0) || p > 1.0) {
    throw Error(ErrorCode::DomainError, "law parameter outside [0,1]: " + std::to_string(p));
  }
  return static_cast<std::uint16_t>(std::min(65535.0, std::round(p * 65536.0)));
}

double dequantize(std::uint16_t q) noexcept { return q / 65536.0; }

void write_header(Bitstream& out, const Header& h) {
  for (char c : kMagic) out.write_bits(static_cast<std::uint8_t>(c), 8);
  out.write_bits(static_cast<std::uint8_t>(h.scenario), 8);
  out.write_bits(static_cast<std::uint8_t>(h.codec), 8);
  out.write_bits(static_cast<std::uint64_t>(h.m), 16);
  out.write_bits(h.seed, 64);
  for (std::uint16_t v : h.law) out.write_bits(v, 16);
}

Header read_header(BitReader& in) {
  if (in.remaining() < kHeaderBytes * 8) {
    throw Error(ErrorCode::MalformedHeader, "transmission shorter than its 24-byte header");
  }
  for (char c : kMagic) {
    if (in.read_bits(8) != static_cast<std::uint8_t>(c)) {
      throw Error(ErrorCode::MalformedHeader, "bad magic");
    }
  }
  Header h;
  const auto tag = in.read_bits(8);
  const auto codec = in.read_bits(8);
  if (tag < 1 || tag > 5) throw Error(ErrorCode::MalformedHeader, "unknown scenario tag " + std::to_string(tag));
  h.scenario = static_cast<Scenario>(tag);
  const bool partition = h.scenario == Scenario::T4 || h.scenario == Scenario::T5;
  if ((partition && codec != 1 && codec != 2) || (!partition && codec != 0)) {
    throw Error(ErrorCode::MalformedHeader, "codec id " + std::to_string(codec) +
                                                " does not fit scenario T" + std::to_string(tag));
  }
  h.codec = static_cast<CodecId>(codec);
  h.m = static_cast<int>(in.read_bits(16));
  if (h.m > kMaxExhaustiveVars) {
    throw Error(ErrorCode::UniverseTooLarge, "header m=" + std::to_string(h.m));
  }
  h.seed = in.read_bits(64);
  for (auto& v : h.law) v = static_cast<std::uint16_t>(in.read_bits(16));
  return h;
}

std::vector<std::uint8_t> Transmission::bytes() const {
  Bitstream all;
  write_header(all, header);
  all.append(payload);
  const auto b = all.bytes();
  return {b.begin(), b.end()};
}

TernaryVector psi(const PolySet& s, const PolySet& q) {
  const int m = joint_m({&s, &q});
  const AlgSet zs = zeros_over(s, m);
  const AlgSet zq = zeros_over(q, m);
  if (!zs.subset_of(zq)) throw Error(ErrorCode::NotEntailed, "s does not entail q");
  TernaryVector x(std::size_t{1} << m, Ternary::Free);
  for (Point p : zs.points()) x[p] = Ternary::Zero;
  for (Point p : zq.complement().points()) x[p] = Ternary::One;
  return x;
}

Transmission t1_encode(const PolySet& s) {
  const int m = joint_m({&s});
  Transmission tx;
  tx.header.scenario = Scenario::T1;
  tx.header.m = m;
  write_subset(tx.payload, all_points(m), zeros_over(s, m));
  return tx;
}

PolySet t1_decode(const Transmission& tx) { return decode_checked(tx, Scenario::T1, std::nullopt); }

Transmission t2_encode(const PolySet& s, const PolySet& r) {
  const int m = joint_m({&s, &r});
  const AlgSet zs = zeros_over(s, m);
  const AlgSet zr = zeros_over(r, m);
  if (!zs.subset_of(zr)) throw Error(ErrorCode::NotEntailed, "s does not entail the background r");
  Transmission tx;
  tx.header.scenario = Scenario::T2;
  tx.header.m = m;
  write_subset(tx.payload, zr.points(), zs);
  return tx;
}

PolySet t2_decode(const Transmission& tx, const PolySet& r) {
  return decode_checked(tx, Scenario::T2, r);
}

Transmission t3_encode(const PolySet& s, const PolySet& r) {
  Transmission tx = t2_encode(s, r);
  tx.header.scenario = Scenario::T3;
  return tx;
}

PolySet t3_decode(const Transmission& tx, const PolySet& r) {
  return decode_checked(tx, Scenario::T3, r);
}

Transmission t4_encode(const PolySet& s, const PolySet& q, const PartitionOptions& options) {
  const TernaryVector x = psi(s, q);
  Transmission tx;
  tx.header = partition_header(Scenario::T4, joint_m({&s, &q}), options);
  tx.header.law[2] = tx.header.law[3] = 0;
  partition_encode(tx.payload, x, options.codec, shared_for(tx.header, 0));
  return tx;
}

PolySet t4_decode(const Transmission& tx) { return decode_checked(tx, Scenario::T4, std::nullopt); }

Transmission t5_encode(const PolySet& s, const PolySet& q, const PolySet& r,
                       const PartitionOptions& options) {
  const int m = joint_m({&s, &q, &r});
  const PolySet s_m{m, s.polys};
  const TernaryVector x = psi(s_m, q);
  const AlgSet zr = zeros_over(r, m);
  Transmission tx;
  tx.header = partition_header(Scenario::T5, m, options);
  const std::vector<Point> halves[2] = {zr.points(), zr.complement().points()};
  for (int half = 0; half < 2; ++half) {
    if (halves[half].empty()) continue;
    partition_encode(tx.payload, take(x, halves[half]), options.codec, shared_for(tx.header, half));
  }
  return tx;
}

PolySet t5_decode(const Transmission& tx, const PolySet& r) {
  return decode_checked(tx, Scenario::T5, r);
}

Decoded decode_next(BitReader& in, const std::optional<PolySet>& background) {
  Decoded d;
  d.header = read_header(in);
  const std::size_t start = in.position();
  d.result = decode_payload(d.header, in, background);
  d.payload_bits = in.position() - start;
  in.align_to_byte();
  return d;
}

std::vector<Decoded> decode_all(std::span<const std::uint8_t> bytes,
                                const std::optional<PolySet>& background) {
  BitReader in(bytes, bytes.size() * 8);
  std::vector<Decoded> out;
  while (in.remaining() > 0) out.push_back(decode_next(in, background));
  return out;
}

}  // namespace lgc

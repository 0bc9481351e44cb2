#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgc/algset.hpp"
#include "lgc/partition.hpp"
#include "lgc/protocols.hpp"

namespace lgc {

/// Per-point i.i.d. membership laws.
///  Single(p_s):       point in Z(s) with probability p_s.
///  Nested(p_s, p_q):  in both Z(s) and Z(q) w.p. p_s, only in Z(q) w.p.
///                     p_q - p_s.
///  Conditional(p_r, p_{s|r}, p_{q|r}, p_{s|~r}, p_{q|~r}): in Z(r) w.p.
///                     p_r, then nested on each side with its own pair.
class Law {
 public:
  enum class Kind { Single, Nested, Conditional };

  static Law single(double p_s);
  static Law nested(double p_s, double p_q);
  static Law conditional(double p_r, double p_s_r, double p_q_r, double p_s_nr = 0.0,
                         double p_q_nr = 0.0);

  Kind kind() const noexcept { return kind_; }
  /// Parameters in constructor order; unused slots are zero.
  const std::array<double, 5>& params() const noexcept { return p_; }
  std::string describe() const;

 private:
  Law(Kind kind, std::array<double, 5> p);
  Kind kind_;
  std::array<double, 5> p_;
};

/// One draw. Single fills only s (q = s, r = everything); Nested fills s and q
/// (r = everything).
struct Instance {
  AlgSet zs, zq, zr;
  PolySet s, q, r;
};

Instance sample(const Law& law, int m, std::uint64_t seed);

/// Shannon limit and explicit finite-n upper bound, in bits per point.
struct BoundsRow {
  Scenario scenario = Scenario::T1;
  std::size_t n = 0;
  double lower = 0;
  double upper = 0;
};

/// T1: Single. T2/T3: Conditional without misinformation, read as
/// p_r * H(p_{s|r}). T4: Nested. T5: Conditional. Throws DomainError when
/// the law does not fit the scenario.
BoundsRow bounds_table(Scenario scenario, const Law& law, int m,
                       PartitionCodec codec = PartitionCodec::Linear);

struct RateReport {
  Scenario scenario = Scenario::T1;
  Law law = Law::single(0);
  int m = 0;
  std::size_t trials = 0;
  std::string codec;
  double mean = 0;    // payload bits per point
  double stddev = 0;  // sample standard deviation across trials
  double lower = 0;
  double upper = 0;
  std::vector<std::string> violations;

  double standard_error() const;
  /// Line-oriented key=value text.
  std::string to_text() const;
};

/// Encodes and decodes `trials` sampled instances, checking each decoded
/// result against the scenario's contract with the exhaustive oracle.
/// Throws ContractViolation on the first failure.
RateReport run_trials(Scenario scenario, const Law& law, int m, std::size_t trials,
                      PartitionCodec codec, std::uint64_t seed);

/// Inclusive arithmetic grid "start:step:stop".
std::vector<double> parse_grid(const std::string& spec);

/// CSV rows p_a,p_b,H_pa,H_pb,linear_rate,lambda for every grid pair with
/// p_a + p_b <= 1. linear_rate is the linear codec's average-rate bound at
/// block length n.
std::string sweep_lambda_vs_naive(const std::vector<double>& grid, double n = 4096);

std::string scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(const std::string& name);

}  // namespace lgc

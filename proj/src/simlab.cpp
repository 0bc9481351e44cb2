#include "lgc/simlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "lgc/error.hpp"

namespace lgc {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::DomainError, std::string(name) + " must lie in [0,1], got " + std::to_string(p));
  }
}

void check_nesting(double inner, double outer, const char* what) {
  if (inner > outer) throw Error(ErrorCode::DomainError, std::string(what) + " violates nesting");
}

// Uniform in [0,1) from the top 53 bits.
double uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1p-53; }

// Overhead of elias(|Z|+1) plus the rank, per point, at expected |Z| = k.
double enumerative_overhead(double k, double n) {
  const double l = std::log2(std::max(k, 1.0));
  return (l + 2.0 * std::log2(std::max(l, 1.0)) + 4.0) / n;
}

double partition_upper(PartitionCodec codec, double n, double a, double b) {
  return codec == PartitionCodec::Linear ? linear_code_bound(n, a, b)
                                         : shannon_partition_bounds(n, a, b).upper;
}

// Kahan-compensated running sums, fed in trial order.
struct Accumulator {
  double sum = 0, sum_c = 0, sq = 0, sq_c = 0;
  static void add(double& s, double& c, double v) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  void push(double v) {
    add(sum, sum_c, v);
    add(sq, sq_c, v * v);
  }
};

void require(bool ok, std::size_t trial, const std::string& what) {
  if (!ok) {
    throw Error(ErrorCode::ContractViolation, "trial " + std::to_string(trial) + ": " + what);
  }
}

PolySet with_m(const PolySet& p, int m) { return PolySet{m, p.polys}; }

}  // namespace

Law::Law(Kind kind, std::array<double, 5> p) : kind_(kind), p_(p) {
  const char* names[5] = {"p0", "p1", "p2", "p3", "p4"};
  for (std::size_t i = 0; i < 5; ++i) check_probability(p_[i], names[i]);
}

Law Law::single(double p_s) { return Law(Kind::Single, {p_s, 0, 0, 0, 0}); }

Law Law::nested(double p_s, double p_q) {
  Law l(Kind::Nested, {p_s, p_q, 0, 0, 0});
  check_nesting(p_s, p_q, "p_s <= p_q");
  return l;
}

Law Law::conditional(double p_r, double p_s_r, double p_q_r, double p_s_nr, double p_q_nr) {
  Law l(Kind::Conditional, {p_r, p_s_r, p_q_r, p_s_nr, p_q_nr});
  check_nesting(p_s_r, p_q_r, "p_{s|r} <= p_{q|r}");
  check_nesting(p_s_nr, p_q_nr, "p_{s|~r} <= p_{q|~r}");
  return l;
}

std::string Law::describe() const {
  const auto& p = p_;
  switch (kind_) {
    case Kind::Single: return "single(p_s=" + fixed6(p[0]) + ")";
    case Kind::Nested: return "nested(p_s=" + fixed6(p[0]) + ",p_q=" + fixed6(p[1]) + ")";
    case Kind::Conditional:
      return "conditional(p_r=" + fixed6(p[0]) + ",p_s|r=" + fixed6(p[1]) + ",p_q|r=" + fixed6(p[2]) +
             ",p_s|~r=" + fixed6(p[3]) + ",p_q|~r=" + fixed6(p[4]) + ")";
  }
  return {};
}

Instance sample(const Law& law, int m, std::uint64_t seed) {
  if (m < 0 || m > kMaxExhaustiveVars) {
    throw Error(ErrorCode::UniverseTooLarge, "m=" + std::to_string(m));
  }
  std::mt19937_64 gen(seed);
  const auto& p = law.params();
  Instance out{AlgSet(m), AlgSet(m), AlgSet::full(m), {}, {}, {}};
  const std::uint64_t n = std::uint64_t{1} << m;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto pt = static_cast<Point>(i);
    double p_s = p[0];
    double p_q = p[0];
    if (law.kind() == Law::Kind::Nested) p_q = p[1];
    if (law.kind() == Law::Kind::Conditional) {
      const bool in_r = uniform(gen) < p[0];
      if (!in_r) out.zr.erase(pt);
      p_s = in_r ? p[1] : p[3];
      p_q = in_r ? p[2] : p[4];
    }
    const double u = uniform(gen);
    if (u < p_s) out.zs.insert(pt);
    if (u < p_q) out.zq.insert(pt);
  }
  if (law.kind() == Law::Kind::Single) out.zq = out.zs;
  out.s = sigma(out.zs);
  out.q = sigma(out.zq);
  out.r = sigma(out.zr);
  return out;
}

BoundsRow bounds_table(Scenario scenario, const Law& law, int m, PartitionCodec codec) {
  if (m < 0 || m > 62) throw Error(ErrorCode::DomainError, "m out of range");
  BoundsRow row;
  row.scenario = scenario;
  row.n = std::size_t{1} << m;
  const double n = static_cast<double>(row.n);
  const auto& p = law.params();
  auto expect = [&](Law::Kind kind) {
    if (law.kind() != kind) {
      throw Error(ErrorCode::DomainError, "law " + law.describe() + " does not fit scenario " +
                                              scenario_name(scenario));
    }
  };
  switch (scenario) {
    case Scenario::T1:
      expect(Law::Kind::Single);
      row.lower = binary_entropy(p[0]);
      row.upper = row.lower + enumerative_overhead(p[0] * n, n);
      break;
    case Scenario::T2:
    case Scenario::T3:
      expect(Law::Kind::Conditional);
      if (p[3] != 0.0) {
        throw Error(ErrorCode::DomainError, "T2/T3 require p_{s|~r} = 0 (s must entail r)");
      }
      row.lower = p[0] * binary_entropy(p[1]);
      row.upper = row.lower + enumerative_overhead(p[0] * p[1] * n, n);
      break;
    case Scenario::T4:
      expect(Law::Kind::Nested);
      row.lower = lambda_fn(p[0], 1.0 - p[1]);
      row.upper = partition_upper(codec, n, p[0], 1.0 - p[1]);
      break;
    case Scenario::T5: {
      expect(Law::Kind::Conditional);
      const double w[2] = {p[0], 1.0 - p[0]};
      for (int h = 0; h < 2; ++h) {
        if (w[h] <= 0.0) continue;
        const double a = p[1 + 2 * h];
        const double b = 1.0 - p[2 + 2 * h];
        row.lower += w[h] * lambda_fn(a, b);
        row.upper += w[h] * partition_upper(codec, w[h] * n, a, b);
      }
      break;
    }
  }
  return row;
}

double RateReport::standard_error() const {
  return trials > 0 ? stddev / std::sqrt(static_cast<double>(trials)) : 0.0;
}

std::string RateReport::to_text() const {
  std::ostringstream os;
  os << "scenario=" << scenario_name(scenario) << '\n'
     << "law=" << law.describe() << '\n'
     << "m=" << m << '\n'
     << "n=" << (std::uint64_t{1} << m) << '\n'
     << "trials=" << trials << '\n'
     << "codec=" << codec << '\n'
     << "mean_rate=" << fixed6(mean) << '\n'
     << "stddev=" << fixed6(stddev) << '\n'
     << "stderr=" << fixed6(standard_error()) << '\n'
     << "lower_bound=" << fixed6(lower) << '\n'
     << "upper_bound=" << fixed6(upper) << '\n'
     << "gap_to_limit=" << fixed6(mean - lower) << '\n'
     << "violations=";
  if (violations.empty()) os << "none";
  for (std::size_t i = 0; i < violations.size(); ++i) os << (i ? "," : "") << violations[i];
  os << '\n';
  return os.str();
}

RateReport run_trials(Scenario scenario, const Law& law, int m, std::size_t trials,
                      PartitionCodec codec, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::DomainError, "trials must be >= 1");
  const BoundsRow bounds = bounds_table(scenario, law, m, codec);
  const bool partition = scenario == Scenario::T4 || scenario == Scenario::T5;
  RateReport rep;
  rep.scenario = scenario;
  rep.law = law;
  rep.m = m;
  rep.trials = trials;
  rep.codec = !partition ? "enumerative" : codec == PartitionCodec::Linear ? "linear" : "random";
  rep.lower = bounds.lower;
  rep.upper = bounds.upper;

  const auto& p = law.params();
  const double n = static_cast<double>(bounds.n);
  Accumulator acc;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = splitmix64(splitmix64(seed) ^ t);
    const Instance in = sample(law, m, trial_seed);
    Transmission tx;
    switch (scenario) {
      case Scenario::T1: {
        tx = t1_encode(in.s);
        require(zeros(with_m(t1_decode(tx), m)) == in.zs, t, "T1 zeros mismatch");
        break;
      }
      case Scenario::T2: {
        tx = t2_encode(in.s, in.r);
        require(zeros(with_m(t2_decode(tx, in.r), m)) == in.zs, t, "T2 zeros mismatch");
        break;
      }
      case Scenario::T3: {
        tx = t3_encode(in.s, in.r);
        const PolySet d = t3_decode(tx, in.r);
        PolySet joined = with_m(in.r, m);
        joined.polys.insert(joined.polys.end(), d.polys.begin(), d.polys.end());
        require(zeros(joined) == in.zs, t, "T3 zeros(delta + r) mismatch");
        for (const Poly& e : d.polys) {
          require(!entails(in.r, PolySet{m, {e}}), t, "T3 delta member entailed by r");
        }
        break;
      }
      case Scenario::T4:
      case Scenario::T5: {
        PartitionOptions opt;
        opt.codec = codec;
        opt.seed = trial_seed;
        PolySet shat;
        if (scenario == Scenario::T4) {
          opt.law = {p[0], p[1], 0, 0};
          tx = t4_encode(in.s, in.q, opt);
          shat = t4_decode(tx);
        } else {
          opt.law = {p[1], p[2], p[3], p[4]};
          tx = t5_encode(in.s, in.q, in.r, opt);
          shat = t5_decode(tx, in.r);
        }
        const AlgSet z = zeros(with_m(shat, m));
        require(in.zs.subset_of(z) && z.subset_of(in.zq), t, "sandwich Z(s) <= Z(shat) <= Z(q) broken");
        break;
      }
    }
    acc.push(static_cast<double>(tx.payload.size()) / n);
  }
  const double tn = static_cast<double>(trials);
  rep.mean = acc.sum / tn;
  rep.stddev = trials > 1 ? std::sqrt(std::max(0.0, (acc.sq - tn * rep.mean * rep.mean) / (tn - 1.0))) : 0.0;
  const double se = rep.standard_error();
  if (rep.mean < rep.lower - 3.0 * se) rep.violations.push_back("below_lower_bound");
  if (rep.mean > rep.upper + 3.0 * se) rep.violations.push_back("above_upper_bound");
  return rep;
}

std::vector<double> parse_grid(const std::string& spec) {
  double a = 0, step = 0, b = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> a >> c1 >> step >> c2 >> b) || c1 != ':' || c2 != ':' || !(is >> std::ws).eof()) {
    throw Error(ErrorCode::DomainError, "grid must look like start:step:stop, got '" + spec + "'");
  }
  if (!(step > 0.0) || a > b) throw Error(ErrorCode::DomainError, "grid needs step > 0 and start <= stop");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double v = std::round((a + static_cast<double>(i) * step) * 1e9) / 1e9;
    if (v > b + 1e-9) break;
    check_probability(v, "grid value");
    out.push_back(v);
  }
  return out;
}

std::string sweep_lambda_vs_naive(const std::vector<double>& grid, double n) {
  std::ostringstream os;
  os << "p_a,p_b,H_pa,H_pb,linear_rate,lambda\n";
  for (double a : grid) {
    for (double b : grid) {
      if (a + b > 1.0 + 1e-12) continue;
      os << fixed6(a) << ',' << fixed6(b) << ',' << fixed6(binary_entropy(a)) << ','
         << fixed6(binary_entropy(b)) << ',' << fixed6(linear_code_bound(n, a, b)) << ','
         << fixed6(lambda_fn(a, b)) << '\n';
    }
  }
  return os.str();
}

std::string scenario_name(Scenario s) { return "t" + std::to_string(static_cast<int>(s)); }

std::optional<Scenario> scenario_from_name(const std::string& name) {
  if (name.size() == 2 && (name[0] == 't' || name[0] == 'T') && name[1] >= '1' && name[1] <= '5') {
    return static_cast<Scenario>(name[1] - '0');
  }
  return std::nullopt;
}

}  // namespace lgc

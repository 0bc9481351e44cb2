#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lgc/algset.hpp"
#include "lgc/error.hpp"
#include "lgc/formula.hpp"
#include "lgc/groebner.hpp"
#include "lgc/partition.hpp"
#include "lgc/protocols.hpp"
#include "lgc/simlab.hpp"

namespace lgc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

PolySet read_statements(const std::string& path, std::optional<int> vars) {
  return parse_statements(read_file(path), vars);
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes, bool append) {
  std::ofstream out(path, std::ios::binary | (append ? std::ios::app : std::ios::trunc));
  if (!out) throw IoError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct LawFlags {
  double ps = 0, pq = 0, pr = 0, psr = 0, pqr = 0, psnr = 0, pqnr = 0;
  CLI::Option* o_ps = nullptr;
  CLI::Option* o_pq = nullptr;
  CLI::Option* o_pr = nullptr;
  CLI::Option* o_psr = nullptr;
  CLI::Option* o_pqr = nullptr;
  CLI::Option* o_psnr = nullptr;
  CLI::Option* o_pqnr = nullptr;

  void add(CLI::App* app) {
    o_ps = app->add_option("--ps", ps, "p_s");
    o_pq = app->add_option("--pq", pq, "p_q");
    o_pr = app->add_option("--pr", pr, "p_r");
    o_psr = app->add_option("--psr", psr, "p_{s|r}");
    o_pqr = app->add_option("--pqr", pqr, "p_{q|r}");
    o_psnr = app->add_option("--psnr", psnr, "p_{s|~r}");
    o_pqnr = app->add_option("--pqnr", pqnr, "p_{q|~r}");
  }

  static void need(const CLI::Option* o, const std::string& why) {
    if (o->count() == 0) throw UsageError(o->get_name() + " is required " + why);
  }

  Law law_for(Scenario s) const {
    const std::string why = "for scenario " + scenario_name(s);
    switch (s) {
      case Scenario::T1:
        need(o_ps, why);
        return Law::single(ps);
      case Scenario::T2:
      case Scenario::T3:
        need(o_pr, why);
        need(o_psr, why);
        return Law::conditional(pr, psr, o_pqr->count() ? std::max(psr, pqr) : psr, 0, 0);
      case Scenario::T4:
        need(o_ps, why);
        need(o_pq, why);
        return Law::nested(ps, pq);
      case Scenario::T5:
        need(o_pr, why);
        need(o_psr, why);
        need(o_pqr, why);
        return Law::conditional(pr, psr, pqr, psnr, pqnr);
    }
    throw UsageError("unknown scenario");
  }
};

Scenario parse_scenario(const std::string& name) {
  auto s = scenario_from_name(name);
  if (!s) throw UsageError("unknown scenario '" + name + "' (expected t1..t5)");
  return *s;
}

PartitionCodec parse_codec(const std::string& name) {
  if (name == "linear") return PartitionCodec::Linear;
  if (name == "random") return PartitionCodec::Random;
  throw UsageError("unknown codec '" + name + "' (expected linear or random)");
}

void add_codec_option(CLI::App* app, std::string& codec) {
  app->add_option("--codec", codec, "partition codec for t4/t5: linear or random")
      ->check(CLI::IsMember({"linear", "random"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compression of logical statements over GF(2)", "lgc"};
  app.require_subcommand(1);

  // encode
  std::string scenario, in_path, bg_path, query_path, out_path, codec = "linear";
  int vars = 0;
  std::uint64_t seed = 0;
  bool append = false;
  LawFlags law;
  auto* enc = app.add_subcommand("encode", "encode a statement file into a transmission");
  enc->add_option("--scenario", scenario, "t1..t5")->required();
  enc->add_option("--in", in_path, "knowledge s")->required();
  enc->add_option("--background", bg_path, "shared background r (t2, t3, t5)");
  enc->add_option("--query", query_path, "query q with s |= q (t4, t5)");
  auto* enc_vars = enc->add_option("--vars", vars, "number of variables m");
  add_codec_option(enc, codec);
  enc->add_option("--seed", seed, "shared-randomness seed");
  enc->add_option("--out", out_path, "transmission file")->required();
  enc->add_flag("--append", append, "append to the output file");
  law.add(enc);

  // decode
  std::string dec_in, dec_bg, dec_out;
  auto* dec = app.add_subcommand("decode", "decode every transmission in a file");
  dec->add_option("--in", dec_in, "transmission file")->required();
  dec->add_option("--background", dec_bg, "background r (t2, t3, t5)");
  dec->add_option("--out", dec_out, "statement file (stdout if omitted)");

  // prove
  std::string knowledge, query, engine = "brute";
  int prove_vars = 0;
  auto* prove = app.add_subcommand("prove", "exit 0 iff knowledge |= query");
  prove->add_option("--knowledge", knowledge)->required();
  prove->add_option("--query", query)->required();
  prove->add_option("--engine", engine)->check(CLI::IsMember({"brute", "groebner", "both"}));
  auto* prove_vars_opt = prove->add_option("--vars", prove_vars);

  // simulate
  std::string sim_scenario, sim_codec = "linear";
  int sim_m = 12;
  std::size_t trials = 200;
  std::uint64_t sim_seed = 1;
  LawFlags sim_law;
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo rate measurement");
  sim->add_option("--scenario", sim_scenario)->required();
  auto* sim_m_opt = sim->add_option("--m", sim_m, "variables (default 12, 8 for t3)");
  sim->add_option("--trials", trials);
  sim->add_option("--seed", sim_seed);
  add_codec_option(sim, sim_codec);
  sim_law.add(sim);

  // bounds
  std::string b_scenario, b_codec = "linear";
  int b_m = 12;
  LawFlags b_law;
  auto* bounds = app.add_subcommand("bounds", "analytic limit and finite-n bound");
  bounds->add_option("--scenario", b_scenario)->required();
  bounds->add_option("--m", b_m);
  add_codec_option(bounds, b_codec);
  b_law.add(bounds);

  // sweep
  std::string grid, sweep_out;
  double sweep_n = 4096;
  auto* sweep = app.add_subcommand("sweep", "Lambda versus naive rates over a grid");
  sweep->add_option("--grid", grid, "start:step:stop")->required();
  sweep->add_option("--n", sweep_n, "block length for the linear-code rate");
  sweep->add_option("--out", sweep_out, "CSV file (stdout if omitted)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*enc) {
      const Scenario sc = parse_scenario(scenario);
      const std::optional<int> m = enc_vars->count() ? std::optional<int>(vars) : std::nullopt;
      const PolySet s = read_statements(in_path, m);
      const bool needs_bg = sc == Scenario::T2 || sc == Scenario::T3 || sc == Scenario::T5;
      const bool needs_q = sc == Scenario::T4 || sc == Scenario::T5;
      if (needs_bg && bg_path.empty()) throw UsageError("--background is required for " + scenario);
      if (needs_q && query_path.empty()) throw UsageError("--query is required for " + scenario);
      Transmission tx;
      if (!needs_q) {
        if (sc == Scenario::T1) {
          tx = t1_encode(s);
        } else {
          const PolySet r = read_statements(bg_path, m);
          tx = sc == Scenario::T2 ? t2_encode(s, r) : t3_encode(s, r);
        }
      } else {
        PartitionOptions opt;
        opt.codec = parse_codec(codec);
        opt.seed = seed;
        const PolySet q = read_statements(query_path, m);
        if (sc == Scenario::T4) {
          if (opt.codec == PartitionCodec::Random) {
            LawFlags::need(law.o_ps, "for the random codec");
            LawFlags::need(law.o_pq, "for the random codec");
          }
          opt.law = {law.ps, law.pq, 0, 0};
          tx = t4_encode(s, q, opt);
        } else {
          if (opt.codec == PartitionCodec::Random) {
            for (auto* o : {law.o_psr, law.o_pqr, law.o_psnr, law.o_pqnr}) {
              LawFlags::need(o, "for the random codec");
            }
          }
          opt.law = {law.psr, law.pqr, law.psnr, law.pqnr};
          tx = t5_encode(s, q, read_statements(bg_path, m), opt);
        }
      }
      write_bytes(out_path, tx.bytes(), append);
      out << "scenario=" << scenario_name(sc) << "\nm=" << tx.header.m
          << "\nbits=" << tx.payload.size() << '\n';
      return kExitOk;
    }

    if (*dec) {
      const std::string raw = read_file(dec_in);
      const std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
      std::optional<PolySet> background;
      if (!dec_bg.empty()) background = read_statements(dec_bg, std::nullopt);
      std::ostringstream text;
      std::size_t i = 0;
      for (const Decoded& d : decode_all(bytes, background)) {
        text << "# transmission " << ++i << ": scenario=" << scenario_name(d.header.scenario)
             << " m=" << d.header.m << " payload_bits=" << d.payload_bits << '\n'
             << polyset_to_text(d.result);
      }
      if (dec_out.empty()) {
        out << text.str();
      } else {
        const std::string s = text.str();
        write_bytes(dec_out, std::vector<std::uint8_t>(s.begin(), s.end()), false);
      }
      return kExitOk;
    }

    if (*prove) {
      PolySet k = read_statements(knowledge, std::nullopt);
      PolySet q = read_statements(query, std::nullopt);
      const int m = std::max({k.m, q.m, prove_vars_opt->count() ? prove_vars : 0});
      k.m = q.m = m;
      std::optional<bool> brute, gb;
      if (engine != "groebner") brute = entails(k, q);
      if (engine != "brute") gb = entails_groebner(k, q);
      if (brute && gb && *brute != *gb) {
        throw Error(ErrorCode::ContractViolation, "entailment engines disagree");
      }
      const bool holds = brute ? *brute : *gb;
      out << "entails=" << (holds ? "true" : "false") << '\n';
      return holds ? kExitOk : kExitFailure;
    }

    if (*sim) {
      const Scenario sc = parse_scenario(sim_scenario);
      const int m = sim_m_opt->count() ? sim_m : (sc == Scenario::T3 ? 8 : 12);
      const RateReport rep = run_trials(sc, sim_law.law_for(sc), m, trials, parse_codec(sim_codec), sim_seed);
      out << rep.to_text();
      return kExitOk;
    }

    if (*bounds) {
      const Scenario sc = parse_scenario(b_scenario);
      const Law l = b_law.law_for(sc);
      const BoundsRow row = bounds_table(sc, l, b_m, parse_codec(b_codec));
      const auto& p = l.params();
      out << "scenario=" << scenario_name(sc) << "\nlaw=" << l.describe() << "\nn=" << row.n
          << "\nlimit=" << fixed6(row.lower) << "\nupper_bound=" << fixed6(row.upper) << '\n';
      if (sc == Scenario::T4) out << "lambda=" << fixed6(lambda_fn(p[0], 1.0 - p[1])) << '\n';
      if (sc == Scenario::T5) {
        out << "lambda_r=" << fixed6(lambda_fn(p[1], 1.0 - p[2])) << '\n'
            << "lambda_not_r=" << fixed6(lambda_fn(p[3], 1.0 - p[4])) << '\n';
      }
      return kExitOk;
    }

    if (*sweep) {
      const std::string csv = sweep_lambda_vs_naive(parse_grid(grid), sweep_n);
      if (sweep_out.empty()) {
        out << csv;
      } else {
        write_bytes(sweep_out, std::vector<std::uint8_t>(csv.begin(), csv.end()), false);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lgc::cli

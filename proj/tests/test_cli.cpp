#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lgc/algset.hpp"
#include "lgc/formula.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run lgc_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lgc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lgc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string at(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kExample = "x1*x2*x3 = 0\n(1+x1)(1+x2)(1+x3) = 0\n";

}  // namespace

TEST_CASE("encode, decode, prove pipeline on the worked example") {
  TempDir dir;
  const std::string s = dir.file("s.logic", kExample);
  const std::string tx = dir.at("tx.bin");
  const Run enc = lgc_run({"encode", "--scenario", "t1", "--in", s, "--vars", "3", "--out", tx});
  REQUIRE(enc.code == 0);
  CHECK(enc.out.find("bits=10\n") != std::string::npos);
  CHECK(fs::file_size(tx) == 24 + 2);

  const std::string shat = dir.at("shat.logic");
  REQUIRE(lgc_run({"decode", "--in", tx, "--out", shat}).code == 0);
  const lgc::PolySet decoded = lgc::parse_statements(slurp(shat), 3);
  CHECK(lgc::zeros(decoded) == lgc::zeros(lgc::parse_statements(kExample)));
  CHECK(lgc_run({"prove", "--knowledge", shat, "--query", s, "--engine", "both"}).code == 0);
  CHECK(lgc_run({"prove", "--knowledge", s, "--query", shat, "--engine", "both"}).code == 0);

  // Appending a second transmission yields two decoded blocks.
  REQUIRE(lgc_run({"encode", "--scenario", "t1", "--in", s, "--out", tx, "--append"}).code == 0);
  const Run two = lgc_run({"decode", "--in", tx});
  CHECK(two.code == 0);
  CHECK(two.out.find("# transmission 2") != std::string::npos);
}

TEST_CASE("encode errors") {
  TempDir dir;
  const std::string s = dir.file("s.logic", kExample);
  const std::string r = dir.file("r.logic", "x1 = 0\n");
  CHECK(lgc_run({"encode", "--scenario", "t4", "--in", s, "--out", dir.at("a.bin")}).code == 2);
  CHECK(lgc_run({"encode", "--scenario", "t2", "--in", s, "--background", r, "--out", dir.at("b.bin")}).code == 1);
  CHECK(lgc_run({"encode", "--scenario", "t9", "--in", s, "--out", dir.at("c.bin")}).code == 2);
  CHECK(lgc_run({"encode", "--scenario", "t4", "--in", s, "--query", s, "--codec", "random", "--out",
                 dir.at("d.bin")})
            .code == 2);
  const std::string bad = dir.file("bad.logic", "x1 AND AND\n");
  const Run syn = lgc_run({"encode", "--scenario", "t1", "--in", bad, "--out", dir.at("e.bin")});
  CHECK(syn.code == 1);
  CHECK(syn.err.rfind("error: SyntaxError", 0) == 0);
  CHECK(lgc_run({"encode", "--scenario", "t1", "--in", dir.at("missing.logic"), "--out", dir.at("f.bin")}).code == 1);
}

TEST_CASE("decode of T3 and partition scenarios") {
  TempDir dir;
  const std::string s = dir.file("s.logic", kExample);
  const std::string tx = dir.at("t3.bin");
  REQUIRE(lgc_run({"encode", "--scenario", "t3", "--in", s, "--background", s, "--out", tx}).code == 0);
  const Run d = lgc_run({"decode", "--in", tx, "--background", s});
  CHECK(d.code == 0);
  // Delta is empty: only the comment header remains.
  CHECK(d.out.find("= 0") == std::string::npos);
  CHECK(lgc_run({"decode", "--in", tx}).code == 1);

  const std::string q = dir.file("q.logic", "x1*x2*x3 = 0\n");
  const std::string t4 = dir.at("t4.bin");
  REQUIRE(lgc_run({"encode", "--scenario", "t4", "--in", s, "--query", q, "--codec", "random", "--ps", "0.75",
                   "--pq", "0.875", "--seed", "5", "--out", t4})
              .code == 0);
  const std::string shat = dir.at("t4.logic");
  REQUIRE(lgc_run({"decode", "--in", t4, "--out", shat}).code == 0);
  CHECK(lgc_run({"prove", "--knowledge", s, "--query", shat}).code == 0);
  CHECK(lgc_run({"prove", "--knowledge", shat, "--query", q}).code == 0);

  const std::string t5 = dir.at("t5.bin");
  const std::string r = dir.file("r.logic", "x3 = 0\n");
  REQUIRE(lgc_run({"encode", "--scenario", "t5", "--in", s, "--query", q, "--background", r, "--out", t5}).code == 0);
  CHECK(lgc_run({"decode", "--in", t5, "--background", r}).code == 0);
}

TEST_CASE("corrupted transmissions") {
  TempDir dir;
  const std::string s = dir.file("s.logic", kExample);
  const std::string tx = dir.at("tx.bin");
  REQUIRE(lgc_run({"encode", "--scenario", "t1", "--in", s, "--out", tx}).code == 0);
  std::string bytes = slurp(tx);
  bytes[0] = 'X';
  const std::string bad = dir.file("bad.bin", bytes);
  const Run r = lgc_run({"decode", "--in", bad});
  CHECK(r.code == 1);
  CHECK(r.err == "error: MalformedHeader: bad magic\n");
}

TEST_CASE("prove") {
  TempDir dir;
  const std::string k = dir.file("k.logic", "x1 = 0\n");
  const std::string q = dir.file("q.logic", "x1*x2 = 0\n");
  const std::string empty = dir.file("e.logic", "# nothing known\n");
  CHECK(lgc_run({"prove", "--knowledge", k, "--query", q}).code == 0);
  CHECK(lgc_run({"prove", "--knowledge", empty, "--query", k}).code == 1);
  CHECK(lgc_run({"prove", "--knowledge", q, "--query", k, "--engine", "groebner"}).code == 1);
  CHECK(lgc_run({"prove", "--knowledge", k, "--query", q, "--engine", "magic"}).code == 2);

  // Engines agree on random instances written as statement files.
  testing::Rng g(51);
  for (int t = 0; t < 100; ++t) {
    const int m = 1 + t % 6;
    const lgc::PolySet a = testing::random_set(g, m, 3, 6);
    const lgc::PolySet b = testing::random_set(g, m, 2, 6);
    const std::string fa = dir.file("a.logic", lgc::polyset_to_text(a));
    const std::string fb = dir.file("b.logic", lgc::polyset_to_text(b));
    const Run r = lgc_run({"prove", "--knowledge", fa, "--query", fb, "--engine", "both", "--vars",
                           std::to_string(m)});
    CHECK(r.code == (lgc::entails(a, b) ? 0 : 1));
  }
}

TEST_CASE("simulate, bounds, sweep") {
  const Run sim = lgc_run({"simulate", "--scenario", "t1", "--ps", "0.2", "--m", "12", "--trials", "200"});
  CHECK(sim.code == 0);
  CHECK(sim.out.find("violations=none\n") != std::string::npos);
  CHECK(lgc_run({"simulate", "--scenario", "t1"}).code == 2);
  CHECK(lgc_run({"simulate", "--scenario", "t4", "--ps", "0.5", "--pq", "0.2"}).code == 1);

  const Run b = lgc_run({"bounds", "--scenario", "t4", "--ps", "0.25", "--pq", "0.75"});
  CHECK(b.code == 0);
  CHECK(b.out.find("lambda=0.500000\n") != std::string::npos);

  const Run s = lgc_run({"sweep", "--grid", "0.02:0.02:0.4"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("p_a,p_b,H_pa,H_pb,linear_rate,lambda\n", 0) == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 1 + 400);
  CHECK(lgc_run({"sweep", "--grid", "nope"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(lgc_run({}).code == 2);
  CHECK(lgc_run({"frobnicate"}).code == 2);
  CHECK(lgc_run({"encode"}).code == 2);
  CHECK(lgc_run({"--help"}).code == 0);
}

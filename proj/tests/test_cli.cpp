#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ordercone/band.hpp"
#include "ordercone/genlab.hpp"
#include "ordercone/json_io.hpp"

using namespace ordercone;

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args, bool raw_command = false) {
  const std::string cmd =
      (raw_command ? args : std::string(ORDERCONE_CLI_PATH) + " " + args) + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/ordercone_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("gen: identical flags give identical bytes and hash") {
  const std::string p1 = temp_path("gen1.json");
  const std::string p2 = temp_path("gen2.json");
  const auto r1 = run("gen --kind direct-sum --n1 2 --n2 1 --seed 7 --out " + p1);
  const auto r2 = run("gen --kind direct-sum --n1 2 --n2 1 --seed 7 --out " + p2);
  CHECK(r1.exit_code == 0);
  CHECK(r1.stdout_text == r2.stdout_text);  // the canonical hash
  CHECK(slurp(p1) == slurp(p2));

  const Json j = Json::parse(slurp(p1));
  CHECK(j["kind"] == "direct_sum");
  CHECK(j.contains("projection"));
}

TEST_CASE("gen: l1 cone file has the four rays") {
  const std::string p = temp_path("l1.json");
  const auto r = run("gen --kind l1 --m 2 --out " + p);
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(slurp(p));
  CHECK(j["cone"]["generators"].size() == 4);
}

TEST_CASE("gen: bad parameters exit 2") {
  CHECK(run("gen --kind l1 --m 1 --out /tmp/nope.json").exit_code == 2);
  CHECK(run("gen --kind banana --out /tmp/nope.json").exit_code == 2);
  CHECK(run("gen --kind l1 --m 2").exit_code == 2);  // --out required
}

TEST_CASE("check: exit codes follow the verdict") {
  const std::string l1 = temp_path("check_l1.json");
  REQUIRE(run("gen --kind l1 --m 2 --out " + l1).exit_code == 0);

  CHECK(run("check --instance " + l1 + " --query disjoint 1,0,1 -1,0,1").exit_code == 0);
  CHECK(run("check --instance " + l1 + " --query disjoint 1,0,1 0,1,1").exit_code == 1);
  CHECK(run("check --instance " + l1 + " --query leq 0,0,0 1/2,1/2,1").exit_code == 0);
  CHECK(run("check --instance " + l1 + " --query inf-zero 1,0,1 -1,0,1").exit_code == 0);

  // malformed vectors, wrong dimension, unknown query, missing file: 2
  CHECK(run("check --instance " + l1 + " --query disjoint 1,0 0,1").exit_code == 2);
  CHECK(run("check --instance " + l1 + " --query disjoint 1,0,x 0,1,1").exit_code == 2);
  CHECK(run("check --instance " + l1 + " --query nonsense 1,0,1 0,1,1").exit_code == 2);
  CHECK(run("check --instance /tmp/no_such_file.json --query leq 0,0,0 0,0,0").exit_code == 2);
  // inf-zero on a non-positive input is an input error
  CHECK(run("check --instance " + l1 + " --query inf-zero 1,0,0 0,1,1").exit_code == 2);
}

TEST_CASE("check: order-projection on a direct-sum file") {
  const std::string ds = temp_path("check_ds.json");
  REQUIRE(run("gen --kind direct-sum --n1 2 --n2 2 --seed 3 --out " + ds).exit_code == 0);
  const auto r = run("check --instance " + ds + " --query order-projection --json");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.stdout_text);
  CHECK(j["result"] == true);
  CHECK(j["verdict"]["order_projection"] == true);
}

TEST_CASE("verify-paper: clean run exits 0 and writes the report") {
  const std::string rep_path = temp_path("report.json");
  const auto r = run("verify-paper --dims 2..3 --trials 8 --seed 5 --probes 4 --out " +
                     rep_path + " --json");
  CHECK(r.exit_code == 0);
  const Json rep = Json::parse(r.stdout_text);
  CHECK(rep["failures"].empty());
  std::size_t checked = 0;
  for (const auto& [name, c] : rep["propositions"].items()) {
    CHECK(c["fail"] == 0);
    checked += c["pass"].get<std::size_t>();
  }
  CHECK(checked > 0);
  CHECK(Json::parse(slurp(rep_path))["propositions"] == rep["propositions"]);
}

TEST_CASE("verify-paper: results are independent of the worker count") {
  const std::string base = "verify-paper --dims 2..4 --trials 12 --seed 11 --probes 4 --json";
  const auto serial = run("env ORDERCONE_THREADS=1 " + std::string(ORDERCONE_CLI_PATH) +
                              " " + base,
                          true);
  const auto parallel = run("env ORDERCONE_THREADS=8 " + std::string(ORDERCONE_CLI_PATH) +
                                " " + base,
                            true);
  CHECK(serial.exit_code == 0);
  const Json a = Json::parse(serial.stdout_text);
  const Json b = Json::parse(parallel.stdout_text);
  CHECK(a["propositions"] == b["propositions"]);
  CHECK(a["instances_by_kind"] == b["instances_by_kind"]);
  CHECK(a["failures"] == b["failures"]);
}

TEST_CASE("verify-paper: the default-length campaign covers all kinds and dims") {
  // 20 trials over dims 2..6 complete one full (kind, dim) cycle
  const auto r = run("verify-paper --dims 2..6 --trials 20 --seed 2 --probes 4 --json");
  CHECK(r.exit_code == 0);
  const Json rep = Json::parse(r.stdout_text);
  for (const char* kind : {"simplicial", "direct_sum", "l1", "random_rays"})
    CHECK(rep["instances_by_kind"].value(kind, 0) > 0);
  for (const char* d : {"2", "3", "4", "5", "6"})
    CHECK(rep["instances_by_dim"].value(d, 0) > 0);
}

TEST_CASE("verify-paper: sabotage forces failures and dumps replay exactly") {
  const std::string rep_path = temp_path("sabotage.json");
  const auto r = run("verify-paper --dims 2..3 --trials 6 --seed 9 --probes 4 "
                     "--sabotage flip-disjoint --out " + rep_path);
  CHECK(r.exit_code == 1);
  const Json rep = Json::parse(slurp(rep_path));
  REQUIRE_FALSE(rep["failures"].empty());

  std::size_t replayed = 0;
  for (const auto& dump : rep["failures"]) {
    if (replayed >= 4) break;  // a handful is enough; each one is a process spawn
    const std::string inst_path = temp_path("replay_" + std::to_string(replayed) + ".json");
    std::ofstream(inst_path) << dump["instance"].dump();
    std::string args = "check --instance " + inst_path + " --query " +
                       dump["query"].get<std::string>() + " --json";
    for (const auto& v : dump["instance"].value("vectors", Json::array())) {
      std::string arg;
      for (const auto& e : v) arg += (arg.empty() ? "" : ",") + e.get<std::string>();
      args += " " + arg;
    }
    const auto rr = run(args);
    const Json out = Json::parse(rr.stdout_text);
    CHECK(out["verdict"] == dump["check_verdict"]);
    ++replayed;
  }
  CHECK(replayed > 0);
}

TEST_CASE("recheck: band certificates round trip through the CLI") {
  const InstanceSpec inst = gen_direct_sum(2, 1, 77);
  const BandCertificate cert = certify_projection_band(inst.cone, *inst.projection, 4, 2);
  const std::string cert_path = temp_path("cert.json");
  std::ofstream(cert_path) << canonical_dump(to_json(cert));
  CHECK(run("recheck --cert " + cert_path).exit_code == 0);

  // tamper: exit 1
  Json j = Json::parse(slurp(cert_path));
  j["projection"][0][0] = "41";
  const std::string bad_path = temp_path("cert_bad.json");
  std::ofstream(bad_path) << j.dump();
  CHECK(run("recheck --cert " + bad_path).exit_code == 1);

  // garbage: exit 2
  const std::string garbage = temp_path("garbage.json");
  std::ofstream(garbage) << "{\"what\": 1}";
  CHECK(run("recheck --cert " + garbage).exit_code == 2);

  // the standalone checker binary agrees on all three
  auto run_standalone = [](const std::string& args) {
    const std::string cmd = std::string(ORDERCONE_RECHECK_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    return WEXITSTATUS(pclose(pipe));
  };
  CHECK(run_standalone(cert_path) == 0);
  CHECK(run_standalone(bad_path) == 1);
  CHECK(run_standalone(garbage) == 2);
}

TEST_CASE("unknown flags and missing subcommands exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("--frobnicate").exit_code == 2);
  CHECK(run("verify-paper --trials 0").exit_code == 2);
  CHECK(run("verify-paper --dims 9..2 --trials 1").exit_code == 2);
  CHECK(run("verify-paper --sabotage unknown-mode --trials 1").exit_code == 2);
}

#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "coopcolor/construction.hpp"
#include "coopcolor/io.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("coop_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

CmdResult run_cli(const fs::path& dir, const std::string& args) {
  std::string cmd = "cd " + dir.string() + " && " + std::string(COOP_CLI_PATH) + " " + args +
                    " > cli_stdout.txt 2> cli_stderr.txt";
  int rc = std::system(cmd.c_str());
  CmdResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(dir / "cli_stdout.txt");
  r.err = slurp(dir / "cli_stderr.txt");
  return r;
}

int count_lines(const fs::path& p) {
  std::ifstream in(p);
  int n = 0;
  std::string line;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST_CASE("gen-construction emits the canonical instance bytes") {
  fs::path dir = fresh_dir("genc");
  CmdResult r = run_cli(dir, "gen-construction --t 2");
  REQUIRE(r.exit_code == 0);
  std::string emitted = slurp(dir / "construction_t2.json");
  coopcolor::Instance expect(coopcolor::extract_star_family(coopcolor::build_construction(2)));
  CHECK(emitted == coopcolor::serialize_instance(expect));

  // Determinism: the second run reproduces the file byte for byte.
  CmdResult r2 = run_cli(dir, "gen-construction --t 2 --out again.json");
  REQUIRE(r2.exit_code == 0);
  CHECK(slurp(dir / "again.json") == emitted);
}

TEST_CASE("solve reports Unsat without creating a witness") {
  fs::path dir = fresh_dir("solve_unsat");
  REQUIRE(run_cli(dir, "gen-construction --t 2").exit_code == 0);
  CmdResult r = run_cli(dir, "solve --instance construction_t2.json --solver exact --json");
  REQUIRE(r.exit_code == 0);
  ordered_json rec = ordered_json::parse(r.out);
  CHECK(rec["status"] == "Unsat");
  CHECK_FALSE(fs::exists(dir / "construction_t2.witness.json"));
}

TEST_CASE("solve, verify, and tampered-witness rejection") {
  fs::path dir = fresh_dir("verify");
  REQUIRE(run_cli(dir, "gen-random --n 30 --k 4 --d 5 --seed 7").exit_code == 0);
  std::string inst = "random_n30_k4_d5_s7.json";
  CmdResult solved = run_cli(dir, "solve --instance " + inst + " --solver lll --seed 3");
  REQUIRE(solved.exit_code == 0);
  REQUIRE(fs::exists(dir / "random_n30_k4_d5_s7.witness.json"));

  CmdResult ok = run_cli(dir, "verify --instance " + inst +
                                  " --coloring random_n30_k4_d5_s7.witness.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("valid") == 0);

  // Put every vertex in member 1: some member-1 edge must go monochromatic.
  ordered_json witness =
      ordered_json::parse(slurp(dir / "random_n30_k4_d5_s7.witness.json"));
  for (auto& [key, value] : witness.items()) value = 1;
  std::ofstream(dir / "bad.json") << witness.dump();
  CmdResult bad = run_cli(dir, "verify --instance " + inst + " --coloring bad.json");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("ci mode demands a seed for randomized commands") {
  fs::path dir = fresh_dir("ci");
  CHECK(run_cli(dir, "--ci gen-random --n 5 --k 2 --d 2").exit_code == 1);
  CHECK(run_cli(dir, "--ci gen-random --n 5 --k 2 --d 2 --seed 1").exit_code == 0);
  REQUIRE(run_cli(dir, "gen-construction --t 1").exit_code == 0);
  CHECK(run_cli(dir, "--ci solve --instance construction_t1.json --solver lll").exit_code == 1);
  // A config-supplied seed satisfies CI mode.
  std::ofstream(dir / "cfg.json") << "{\"seed\": 5}";
  CHECK(run_cli(dir, "--ci --config cfg.json solve --instance construction_t1.json "
                     "--solver lll")
            .exit_code == 0);
  // Deterministic commands stay usable in CI mode.
  CHECK(run_cli(dir, "--ci solve --instance construction_t1.json --solver exact").exit_code ==
        0);
}

TEST_CASE("certificates are byte-reproducible") {
  fs::path dir = fresh_dir("cert");
  REQUIRE(run_cli(dir, "gen-construction --t 2").exit_code == 0);
  REQUIRE(run_cli(dir, "certify-unsat --instance construction_t2.json --out c1.json")
              .exit_code == 0);
  REQUIRE(run_cli(dir, "certify-unsat --instance construction_t2.json --out c2.json")
              .exit_code == 0);
  std::string c1 = slurp(dir / "c1.json");
  CHECK(c1 == slurp(dir / "c2.json"));
  ordered_json cert = ordered_json::parse(c1);
  CHECK(cert["status"] == "Unsat");
  CHECK(cert["nodes"].is_number());
  CHECK(cert.find("wall_ms") == cert.end());
}

TEST_CASE("usage errors exit 1, contract errors exit 2") {
  fs::path dir = fresh_dir("errors");
  CHECK(run_cli(dir, "no-such-command").exit_code == 1);
  CHECK(run_cli(dir, "solve --solver exact").exit_code == 1);             // missing --instance
  CHECK(run_cli(dir, "solve --instance x.json --solver bogus").exit_code == 1);
  CHECK(run_cli(dir, "solve --instance absent.json --solver exact").exit_code == 2);
  CHECK(run_cli(dir, "gen-construction --t 9").exit_code == 2);           // above default cap
  std::ofstream(dir / "garbage.json") << "not json";
  CHECK(run_cli(dir, "solve --instance garbage.json --solver exact").exit_code == 2);
}

TEST_CASE("decompose star reports one split per member") {
  fs::path dir = fresh_dir("decomp");
  REQUIRE(run_cli(dir, "gen-construction --t 2").exit_code == 0);
  CmdResult r = run_cli(dir, "decompose --instance construction_t2.json --method star --json");
  REQUIRE(r.exit_code == 0);
  ordered_json rec = ordered_json::parse(r.out);
  REQUIRE(rec["splits"].size() == 2);
  CHECK(rec["splits"][0]["neighbor_bound"] == 1);

  CmdResult q = run_cli(dir, "decompose --instance construction_t2.json --method quotient "
                             "--member 1 --json");
  REQUIRE(q.exit_code == 0);
  ordered_json qrec = ordered_json::parse(q.out);
  CHECK(qrec["max_part_size"] == 1);
}

TEST_CASE("export-dot renders with and without a coloring") {
  fs::path dir = fresh_dir("dot");
  REQUIRE(run_cli(dir, "gen-random --n 8 --k 3 --d 3 --seed 2").exit_code == 0);
  std::string inst = "random_n8_k3_d3_s2.json";
  REQUIRE(run_cli(dir, "solve --instance " + inst + " --solver exact").exit_code == 0);
  CmdResult plain = run_cli(dir, "export-dot --instance " + inst + " --out plain.dot");
  REQUIRE(plain.exit_code == 0);
  CHECK(slurp(dir / "plain.dot").find("graph") != std::string::npos);
  CmdResult filled = run_cli(dir, "export-dot --instance " + inst +
                                      " --coloring random_n8_k3_d3_s2.witness.json "
                                      "--out filled.dot");
  REQUIRE(filled.exit_code == 0);
  CHECK(slurp(dir / "filled.dot").find("fillcolor") != std::string::npos);
}

TEST_CASE("bench writes a table per cell and rejects empty seed lists") {
  fs::path dir = fresh_dir("bench");
  CmdResult r = run_cli(dir, "bench --suite lll-2ed --seeds 1 --out-csv t.csv --out-json t.json");
  REQUIRE(r.exit_code == 0);
  CHECK(count_lines(dir / "t.csv") == 4);  // header + d in {4, 8, 16}
  ordered_json table = ordered_json::parse(slurp(dir / "t.json"));
  REQUIRE(table.size() == 3);
  CHECK(table[0]["k"] == 22);  // ceil(2e*4)
  CHECK(table[1]["k"] == 44);
  CHECK(table[2]["k"] == 87);  // ceil(2e*16)

  CHECK(run_cli(dir, "bench --suite lll-2ed --seeds ,").exit_code == 1);
  CHECK(run_cli(dir, "bench --suite nope --seeds 1").exit_code == 1);
}

TEST_CASE("every completed run appends one record to the log") {
  fs::path dir = fresh_dir("log");
  REQUIRE(run_cli(dir, "gen-construction --t 1").exit_code == 0);
  REQUIRE(run_cli(dir, "solve --instance construction_t1.json --solver exact").exit_code == 0);
  REQUIRE(run_cli(dir, "gen-construction --t 9").exit_code == 2);  // contract error, logged
  CHECK(count_lines(dir / "runs.jsonl") == 3);
  // Every line parses and carries the core fields.
  std::ifstream in(dir / "runs.jsonl");
  std::string line;
  while (std::getline(in, line)) {
    ordered_json rec = ordered_json::parse(line);
    CHECK(rec.contains("command"));
    CHECK(rec.contains("outcome"));
    CHECK(rec.contains("wall_ms"));
  }
  // --log redirects the stream.
  REQUIRE(run_cli(dir, "--log other.jsonl gen-construction --t 1 --out i2.json").exit_code == 0);
  CHECK(count_lines(dir / "other.jsonl") == 1);
  CHECK(count_lines(dir / "runs.jsonl") == 3);
}

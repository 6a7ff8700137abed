#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MONOSUM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.stdout_text.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / "monosum_cli_test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("sums intervals match the documented example") {
  RunResult r = run_cli("sums --elements 3,5,7 --cap 20 --intervals");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text ==
        "lo,hi\n0,0\n3,3\n5,5\n7,8\n10,10\n12,12\n15,15\n");
}

TEST_CASE("optimize table emits the pinned header and the r=2 constant") {
  fs::path out = temp_dir() / "table.csv";
  RunResult r = run_cli("optimize table --rmax 5 --out " + out.string());
  CHECK(r.exit_code == 0);
  std::string csv = slurp(out);
  CHECK(csv.rfind("r,b0,c_upper,delta_min,identity_gap\n", 0) == 0);
  CHECK(csv.find("2,3.73205080756888,0.933012701892219,") != std::string::npos);
}

TEST_CASE("domain errors exit 1, usage errors exit 2") {
  CHECK(run_cli("dynamics certify --epsilon -1").exit_code == 1);
  CHECK(run_cli("dynamics certify --no-such-flag 1").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("reruns are byte-identical and manifests replay") {
  fs::path dir = temp_dir();
  fs::path out1 = dir / "r1.json";
  fs::path out2 = dir / "r2.json";
  fs::path manifest = dir / "run.manifest.json";

  std::string flags = "verify lemma21 --N 40 --r 2 --trials 25 --seed 9";
  RunResult a = run_cli(flags + " --out " + out1.string() + " --manifest " + manifest.string());
  CHECK(a.exit_code == 0);
  RunResult b = run_cli(flags + " --out " + out2.string());
  CHECK(b.exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));

  // Replay rewrites out1 from the manifest alone.
  fs::remove(out1);
  RunResult c = run_cli("replay --manifest " + manifest.string());
  CHECK(c.exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("coloring classify both types") {
  RunResult log = run_cli("coloring classify --type loglog --n 55 --b 4 --r 2");
  CHECK(log.exit_code == 0);
  CHECK(log.stdout_text.find("color=1") != std::string::npos);
  RunResult blk =
      run_cli("coloring classify --type block --n 10 --breakpoints 1,2,5,17,65");
  CHECK(blk.exit_code == 0);
  CHECK(blk.stdout_text.find("color=1") != std::string::npos);
  // Out of represented range: domain error.
  CHECK(run_cli("coloring classify --type block --n 65 --breakpoints 1,2,5,17,65").exit_code ==
        1);
}

TEST_CASE("density subcommands") {
  RunResult exact = run_cli("density delta --r 2 --b 4 --exact");
  CHECK(exact.exit_code == 0);
  CHECK(exact.stdout_text == "14/15\n");
  RunResult cover = run_cli("density cover --r 2 --b 4");
  CHECK(cover.stdout_text.substr(0, 8) == "0.933333");
  RunResult abar = run_cli("density abar --breakpoints 1,2,5,17,65");
  CHECK(abar.exit_code == 0);
  CHECK(abar.stdout_text.find("3,15/16,15/16,") != std::string::npos);
}

TEST_CASE("dynamics certify writes snapshots") {
  fs::path dir = temp_dir() / "snaps";
  RunResult r = run_cli("dynamics certify --epsilon 0.25 --grid 64 --kmax 50 --snapshots " +
                        dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("certified") != std::string::npos);
  std::string csv = slurp(dir / "polygons.csv");
  CHECK(csv.rfind("k,vertex_index,a,b\n", 0) == 0);
  CHECK(fs::exists(dir / "overlay.svg"));
}

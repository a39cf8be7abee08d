#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

#ifndef QMOD_CLI_PATH
#define QMOD_CLI_PATH "qmod"
#endif

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + QMOD_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string sample(const std::string& name) { return std::string(QMOD_SAMPLES_DIR) + "/" + name; }

// Writes text to a fresh file under the temp directory; removed on destruction.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path = (std::filesystem::temp_directory_path() /
            ("qmod_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".qm"))
               .string();
    std::ofstream(path) << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("algebra-info " + sample("kronecker.qm")).status == 0);
  CHECK(run("limit " + sample("kronecker.qm")).status == 2);         // missing endo block
  CHECK(run("stability " + sample("kronecker.qm")).status == 1);     // needs a finite field
  CHECK(run("stability --field F3 " + sample("kronecker.qm")).status == 0);
  CHECK(run("algebra-info /nonexistent/file.qm").status != 0);
  CHECK(run("no-such-command " + sample("kronecker.qm")).status != 0);
  const Run bad = run("algebra-info -", "printf 'quiver { vertices: 1; arrows: a: 1 -> 9; }' |");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("1:") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  for (const std::string& args : {"moduli-report " + sample("loop_arrow.qm"), "maxdeg-test " + sample("loop_arrow.qm"),
                                 "skeleta " + sample("tree.qm"), "orbit --json " + sample("loops_two_arrows.qm")}) {
    const Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json reports") {
  const Run r = run("--json --seed 7 moduli-report " + sample("loop_arrow.qm"));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["tool"] == "qmod");
  CHECK(j["command"] == "moduli-report");
  CHECK(j["seed"] == 7);
  CHECK(j["result"]["verdict"] == "NoCoarse");
}

TEST_CASE("default seed from the environment") {
  const Run r = run("--json orbit " + sample("kronecker.qm"), "QMOD_SEED=42");
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["seed"] == 42);
}

TEST_CASE("render round-trips through the tool") {
  const Run once = run("--render algebra-info " + sample("hypergraph.qm"));
  REQUIRE(once.status == 0);
  const TempFile tmp(once.out);
  const Run twice = run("--render algebra-info " + tmp.path);
  CHECK(once.out == twice.out);
}

TEST_CASE("candidates file") {
  const TempFile tmp("point { b*a.z1; }\npoint { b.z1; }\n");
  const Run r = run("--json --candidates " + tmp.path + " maxdeg-test " + sample("loop_arrow.qm"));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["survivors"].size() == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int code;
};

/// Runs the CLI through the shell. Arguments are single-quoted; stderr is
/// folded into out when merge is set and discarded otherwise.
Run run(const std::vector<std::string>& args, bool merge = false, const std::string& env = "") {
  std::string cmd = env + " '" WEYLHOM_CLI "'";
  for (const auto& a : args)
    cmd += " '" + a + "'";
  cmd += merge ? " 2>&1" : " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
    out.append(buf.data(), n);
  const int status = pclose(p);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

} // namespace

TEST_CASE("homrank tables") {
  auto r = run({"homrank", "A", "2", "--s", "1,1", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "lambda\tc\n1,1\t1\n");
  r = run({"homrank", "B", "3", "--s", "0,1,0", "--k", "1"});
  CHECK(r.out == "lambda\tc\n0,0,0\t1\n0,1,0\t1\n");
  r = run({"homrank", "A", "2", "--s", "1,1", "--root-coords"});
  CHECK(r.out == "lambda\tc\troot_coords\n1,1\t1\t1,1\n");
}

TEST_CASE("fundchar") {
  auto r = run({"fundchar", "D", "6", "4", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "lambda\tc\n0,0,0,0,0,0\t3\n0,0,0,1,0,0\t1\n0,1,0,0,0,0\t2\n");
  r = run({"fundchar", "B", "3", "2", "--k", "0"});
  CHECK(r.out.find("note: convention-dependent") != std::string::npos);
  CHECK(run({"fundchar", "B", "3", "2", "--k", "1"}).out.find("note:") == std::string::npos);
}

TEST_CASE("detcnk, coexpand, invdim, symcheck") {
  CHECK(run({"detcnk", "3", "5"}).out == "det = 1, predicted = 1, match\n");
  CHECK(run({"coexpand", "t1*u1", "--k", "1", "--l", "1"}).out == "t1*u1 (x) t1 + t1 (x) t1*u1\n");
  CHECK(run({"invdim", "A:2; 1@0, 2@1", "--mu", "1,1"}).out == "dim = 1\n");
  CHECK(run({"invdim", "A:1; 1@0, 1@0", "--mu", "0"}).out == "dim = 1\n");
  const auto s = run({"symcheck", "--r", "2,1", "--samples", "5"});
  CHECK(s.code == 0);
  CHECK(s.out == "samples = 5, invariant = 5, closed = 5, pass\n");
}

TEST_CASE("json envelope") {
  const auto r = run({"--json", "detcnk", "2", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "detcnk");
  CHECK(j["params"]["N"] == 2);
  CHECK(j["result"]["det"] == "-1");
  CHECK(j["result"]["match"] == true);

  // global flags may follow the subcommand
  const auto h = nlohmann::json::parse(run({"homrank", "B", "3", "--s", "0,1,0", "--k", "1", "--json"}).out);
  CHECK(h["command"] == "homrank");
  CHECK(h["result"].size() == 2);

  const auto w = nlohmann::json::parse(run({"weylglob", "cyclic-span", "A:1; 1@0", "--json"}).out);
  for (const char* key : {"check", "params", "window", "verdict", "witness"})
    CHECK(w["result"].contains(key));
  CHECK(w["result"]["witness"]["dim"] == 8);
}

TEST_CASE("weylglob checks") {
  for (const char* check : {"highest-relations", "cyclic-span", "freeness", "invariants", "u-degree"}) {
    CAPTURE(check);
    const auto r = run({"weylglob", check, "A:1; 1@0", "--K", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find(": pass") != std::string::npos);
  }
  CHECK(run({"weylglob", "stabilization", "A:1; 1@2, 1@3", "--laurent", "--K", "2"}).code == 0);
  CHECK(run({"weylglob", "u-degree", "A:1; 1@0", "--jet", "2", "--K", "2", "--window-u", "6"}).code == 0);
}

TEST_CASE("exit codes") {
  auto r = run({"homrank", "A", "2", "--s", "-1,0"}, true);
  CHECK(r.code == 2);
  CHECK(r.out == "error: s must be nonnegative\n");

  r = run({"weylglob", "u-degree", "A:1; 1@0", "--window-u", "1", "--K", "1"});
  CHECK(r.code == 3);
  CHECK(r.out.find("inconclusive") != std::string::npos);

  CHECK(run({"weylglob", "u-degree", "A:1; 1@0", "--jet", "2", "--K", "1", "--window-u", "6"}).code == 2);
  CHECK(run({"weylglob", "invariants", "A:1; 1@1"}).code == 2);
  CHECK(run({"invdim", "X:1; 1@0", "--mu", "1"}).code == 2);
  CHECK(run({"coexpand", "u1^-1", "--l", "1"}).code == 2);
  CHECK(run({"homrank", "A", "3", "--s", "1,0,0"}, false, "WEYLHOM_MAX_RANK=2").code == 2);
  CHECK(run({"homrank", "A", "3", "--s", "1,0,0"}, false, "WEYLHOM_MAX_RANK=3").code == 0);
}

TEST_CASE("check-suite") {
  const auto r = run({"check-suite"});
  CHECK(r.code == 0);
  std::size_t lines = 0, pos = 0;
  while ((pos = r.out.find("[PASS]", pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 10);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

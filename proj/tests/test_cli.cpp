#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LEFSCHETZ_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(LEFSCHETZ_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("hilbert prints dense coefficients first") {
  Run r = run("hilbert " + data("x3y3.def"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1 2 3 2 1\n", 0) == 0);
  r = run("hilbert " + data("weighted-e1e2.def"));
  CHECK(r.out.rfind("1 1 1 1\n", 0) == 0);
}

TEST_CASE("check exit codes") {
  CHECK(run("check --strong " + data("x3y3.def")).code == 0);
  CHECK(run("check --weak " + data("xy-squares.def")).code == 0);
  CHECK(run("check --weak " + data("weighted-e1e2.def")).code == 1);
  CHECK(run("check --strong " + data("weighted-e1e2.def")).code == 1);
  CHECK(run("check " + data("x3y3.def")).code == 4);
  CHECK(run("check --weak --strong " + data("x3y3.def")).code == 4);
  CHECK(run("check --weak " + data("missing.def")).code != 0);
  CHECK(run("").code == 4);
}

TEST_CASE("JSON output is versioned and reproducible") {
  for (const std::string& args : std::vector<std::string>
       {"check --strong " + data("powersum-n2-a2.def"), "hilbert " + data("weighted-e1e2.def"),
        "jordan --form g " + data("xy-squares.def"), "gr --form z " + data("xy-squares.def"),
        "csm --form z " + data("xy-squares.def"), "powersum --n 2 --a 3", "xy --r 3 --s 4",
        "tensor " + data("xy-squares.def") + " " + data("weighted-e1e2.def"), "verify --filter 3.10"}) {
    Run a = run(args + " --json"), b = run(args + " --json");
    CHECK_MESSAGE(a.out == b.out, args);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == args.substr(0, args.find(' ')));
  }
}

TEST_CASE("subcommand payloads") {
  auto j = nlohmann::json::parse(run("jordan --form g --json " + data("xy-squares.def")).out);
  CHECK(j["profile"] == nlohmann::json::array({3, 1}));
  j = nlohmann::json::parse(run("jordan --form 'x - y' --json " + data("xy-squares.def")).out);
  CHECK(j["profile"] == nlohmann::json::array({3, 1}));
  j = nlohmann::json::parse(run("check --strong --json " + data("x3y3.def")).out);
  CHECK(j["status"] == "certified_yes");
  CHECK(j["profile"] == nlohmann::json::array({5, 3, 1}));
  Run r = run("check --weak --json " + data("weighted-e1e2.def"));
  j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "certified_no");
  CHECK(r.code == 1);
  r = run("verify --filter 9.1 --json");
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["consistent"] == true);
  CHECK(j["results"].size() == 36);
}

TEST_CASE("library errors map to exit code 3") {
  CHECK(run("jordan --form 'x^2' " + data("xy-squares.def")).code == 3);
  CHECK(run("jordan --form nosuch " + data("xy-squares.def")).code == 3);
  CHECK(run("verify --filter 2.1").code == 3);
  CHECK(run("powersum --n 9 --a 2").code == 3);
}

TEST_CASE("seeded searches are reproducible") {
  std::string args = "check --strong --json --seed 7 --trials 3 " + data("powersum-n2-a2.def");
  CHECK(run(args).out == run(args).out);
}

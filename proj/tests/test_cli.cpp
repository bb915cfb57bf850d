#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "asc/recurrence.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace asc;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ASC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli coeff") {
  const std::string g31 = to_text(g(3, 1)) + "\n";
  for (const char* method : {"recurrence", "young", "setpair"}) {
    const Run r = run(std::string("coeff --n 3 --i 1 --method ") + method);
    CHECK(r.code == 0);
    CHECK(r.out == g31);
  }
  CHECK(run("coeff --n 3 --i 5").out == "0\n");
  CHECK(run("coeff --n 1 --i 0 --spec prime").out == "a + b\n");
  CHECK(run("coeff --n 1 --i 0 --specialize b=0").out == "a\n");
  const Run j = run("coeff --n 2 --i 1 --format json");
  const auto rec = nlohmann::json::parse(j.out);
  CHECK(param_poly_from_json(rec["poly"]) == g(2, 1));
  CHECK(run("coeff --n 3 --i 1 --method setpair --xy").out.find("X0*X1") != std::string::npos);
  CHECK(run("coeff --n 3").code == 2);
  CHECK(run("coeff --n 3 --i 1 --method other").code == 2);
  CHECK(run("coeff --n 3 --i 1 --method young --spec prime").code == 2);
  CHECK(run("coeff --n 3 --i 1 --specialize z=1").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("cli psi, zn, moments") {
  CHECK(run("psi --n 1 --A 0,2,3 --B 2,4,5,7").out == "{0,2,3,4} {2,5,7}\n");
  const auto p = nlohmann::json::parse(run("psi --n 1 --A 0,2,3 --B 2,4,5,7 --format json").out);
  CHECK(p["S1"] == nlohmann::json::array({0, 2, 3, 4}));
  CHECK(run("psi --n 1 --A 3 --B 0").code == 2);
  CHECK(run("zn --N 1").out == "a + b\n");
  CHECK(run("zn --N 1 --xi").out == "a*xi + b\n");
  const Run m = run("moments --spec prime --N 2");
  CHECK(m.code == 0);
  CHECK(m.out.rfind("mu_0 = 1\nmu_1 = -a - b\n", 0) == 0);
}

TEST_CASE("cli minors") {
  const Run r = run("minors --n 4 --size 2 --specialize e2=0 --format json");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.size() == 5);
    CHECK(j.contains("rows"));
    CHECK(j.contains("term_count"));
    CHECK(j["nonneg"] == true);
    ++count;
  }
  CHECK(count == 16 + 36);
  CHECK(run("minors --n 4 --size 2 --specialize q").code == 2);
}

TEST_CASE("cli verify") {
  const Run one = run("verify --suite all --max 3 --jobs 1");
  const Run many = run("verify --suite all --max 3 --jobs 4");
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
  CHECK(one.out.find("FAIL") == std::string::npos);
  const Run json = run("--format json verify --suite pasep --max 3 --points 5");
  CHECK(json.code == 0);
  std::istringstream lines(json.out);
  std::string line;
  while (std::getline(lines, line)) CHECK(nlohmann::json::parse(line)["suite"] == "pasep");
  CHECK(run("verify --suite nothing").code == 2);
  CHECK(run("verify --max 0").code == 2);
}

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run("weight dot --type G2 0.1.2.1.0 '-1*L0'");
  CHECK(r.code == 0);
  CHECK(r.out == "4*w2@-1\n");
  r = run("weight minv --type F4 -3");
  CHECK(r.code == 0);
  CHECK(r.out.find("v ") == 0);
  CHECK(r.out.find("kappa+ ") != std::string::npos);
  r = run("table verify --id sous-reguliers --nmax 3 --failures-only");
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);
}

TEST_CASE("every subcommand is reachable") {
  const std::vector<std::string> cmds = {
      "rootdata show --type E8",
      "weyl mult --type G2 0.1 2.1.0",
      "weyl len --type G2 0.1.2.1.0",
      "weyl descents --type G2 0.1.2.1.0",
      "weyl rigid --type A2 --max-len 4",
      "weight dominant --type G2 '-1*L0'",
      "weight sing --type G2 '-1*L0'",
      "kl poly --type A3 e 2.1.3.2",
      "kl mu --type A3 2 2.1.3.2",
      "kl mu-graph --type A1 --max-len 3",
      "kl fc --type G2 0.1.2.1.0",
      "orbit dual 3,3,1@so7",
      "orbit closure 3,1,1,1,1@so7 3,3,1@so7",
      "orbit dynkin 7@so7",
      "orbit sigma --type B5 --k -3",
      "fuse --group S3 2dim 2dim",
      "fuse-row --table sous-reguliers --row G2 --k -1 2dim 2dim",
      "table emit --id rang2 --format tex",
      "table levels",
  };
  for (const auto& c : cmds) {
    CAPTURE(c);
    const auto r = run(c);
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
    CHECK(run(c).out == r.out);  // deterministic
  }
}

TEST_CASE("outputs") {
  CHECK(run("weyl len --type G2 0.1.2.1.0").out == "5\n");
  CHECK(run("kl poly --type A3 e 2.1.3.2").out == "1+q\n");
  CHECK(run("orbit dual 3,3,1@so7").out == "2,2,2@sp6\n");
  CHECK(run("fuse --group S3 2dim 2dim").out == "1 + sign + 2dim\n");
  CHECK(run("fuse-row --table sous-reguliers --row G2 --k -1 2dim 2dim").out == "L_-1 + L_-1(4L2) + L_-1(3L1)\n");
}

TEST_CASE("json output parses") {
  auto j = nlohmann::json::parse(run("weyl descents --type G2 0.1.2.1.0 --format json").out);
  CHECK(j["left"] == nlohmann::json::array({0}));
  j = nlohmann::json::parse(run("weight dot --type G2 0.1.2.1.0 '-1*L0' --format json").out);
  CHECK(j["weight"] == "4*w2@-1");
  j = nlohmann::json::parse(run("weyl mult --type G2 0.1 2.1.0 --format json").out);
  CHECK(j["length"] == 5);
  CHECK(j["word"].size() == 5);
  j = nlohmann::json::parse(run("table verify --id rang2 --nmax 2 --format json").out);
  REQUIRE(j.is_array());
  for (const auto& r : j) {
    CHECK(r.contains("row"));
    CHECK(r.contains("check"));
    CHECK(r["status"] == "pass");
    CHECK(r.contains("computed"));
    CHECK(r.contains("expected"));
  }
  j = nlohmann::json::parse(run("table emit --id rang2 --format json").out);
  CHECK(j["table"] == "rang2");
}

TEST_CASE("exit codes") {
  CHECK(run("kl fc --type G2 1.2.1.2.1.2").code == 1);
  CHECK(run("weight dominant --type G2 '1*L1@-5'").code == 1);
  CHECK(run("orbit closure 3,3,1@so7 3,1,1,1,1@so7").code == 1);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("weyl len --type X9 0").code == 2);
  CHECK(run("weyl len --type G2 0.7").code == 2);
  CHECK(run("weight dot --type G2 0.1").code == 2);
  CHECK(run("fuse --group S3 2dim 5dim").code == 2);
  CHECK(run("table verify --id nope").code == 2);
}

TEST_CASE("length bound override") {
  CHECK(run("kl poly --type A1 e 0.1.0.1.0.1").code == 0);
  CHECK(run("kl poly --type A1 e 0.1.0.1.0.1", "WEYL_CELLS_MAXLEN=3").code == 2);
}

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(MATROIDLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string payload_of(const std::string& report) {
  const auto j = nlohmann::json::parse(report);
  return j.at("payload").dump();
}

}  // namespace

TEST_CASE("commands succeed on the shipped inputs") {
  CHECK(run("regular --matrix " MATROIDLAB_DATA_DIR "/i3.txt").exit_code == 0);
  CHECK(run("regular --matrix " MATROIDLAB_DATA_DIR "/fano.txt").exit_code == 0);
  CHECK(run("homology --ir-rank 1").exit_code == 0);
  CHECK(run("homology --ir-rank 2").exit_code == 0);
  CHECK(run("homology --complex " MATROIDLAB_DATA_DIR "/tetra_boundary.txt").exit_code == 0);
  CHECK(run("character --ir-rank 3").exit_code == 0);
  CHECK(run("counterexample").exit_code == 0);
  CHECK(run("tree --depth 4").exit_code == 0);
  CHECK(run("geodesic --e1 " MATROIDLAB_DATA_DIR "/e1.txt --e2 " MATROIDLAB_DATA_DIR
            "/e2.txt")
            .exit_code == 0);
}

TEST_CASE("malformed input fails with a parse error exit") {
  CHECK(run("regular --matrix " MATROIDLAB_DATA_DIR "/does_not_exist.txt").exit_code == 2);
}

TEST_CASE("payloads are byte-identical across runs") {
  for (const std::string cmd :
       {std::string("homology --ir-rank 2"), std::string("character --ir-rank 3"),
        std::string("tree --depth 5 --seed 0"), std::string("counterexample"),
        std::string("regular --matrix " MATROIDLAB_DATA_DIR "/rank5.txt")}) {
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(payload_of(a.out) == payload_of(b.out));
  }
}

TEST_CASE("reported values on the named inputs") {
  const RunResult fano = run("regular --matrix " MATROIDLAB_DATA_DIR "/fano.txt");
  const auto j = nlohmann::json::parse(fano.out);
  CHECK(j.at("payload").at("regular") == false);
  CHECK(j.at("payload").at("witness_minor").at("type") == "F7");

  const RunResult rank5 = run("regular --matrix " MATROIDLAB_DATA_DIR "/rank5.txt");
  CHECK(nlohmann::json::parse(rank5.out).at("payload").at("regular") == false);

  const RunResult h3 = run("homology --ir-rank 3");
  const auto hj = nlohmann::json::parse(h3.out);
  CHECK(hj.at("payload").at("homology").at("betti") ==
        nlohmann::json::array({1, 0, 0, 8}));
  CHECK(hj.at("payload").at("homology").at("euler") == -7);

  const RunResult cx = run("counterexample");
  const auto cj = nlohmann::json::parse(cx.out);
  CHECK(cj.at("payload").at("exists") == false);
  CHECK(cj.at("payload").at("blockers").size() == 2);
}

#include <doctest.h>

#include <repkit/commands.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

using repkit::run_command;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("exit code contract") {
  CHECK(run({"basis", "--preset", "A3"}).code == 0);
  CHECK(run({"indec", "--preset", "A3"}).code == 0);
  CHECK(run({"certify", "--preset", "kronecker", "--max-dim", "8"}).code == 2);
  CHECK(run({"basis"}).code == 1);                       // no algebra given
  CHECK(run({"basis", "--preset", "nope"}).code == 1);   // unknown preset
  CHECK(run({"frobnicate", "--preset", "A3"}).code == 1);
  CHECK(run({"basis", "--preset", "A3", "--algebra", "x.json"}).code == 1);
  CHECK(run({"depth", "--preset", "A2", "--morphism", "bogus"}).code == 1);
}

TEST_CASE("indec reports the classical counts") {
  Run r = run({"indec", "--preset", "A3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("modules: 6") != std::string::npos);
  CHECK(r.out.find("status: FINITE") != std::string::npos);
}

TEST_CASE("undetermined runs say so and never claim finiteness") {
  Run r = run({"certify", "--preset", "kronecker", "--max-dim", "8"});
  CHECK(r.code == 2);
  CHECK(r.out.find("UNDETERMINED") != std::string::npos);
  CHECK(r.out.find("FINITE") == std::string::npos);
}

TEST_CASE("radical pair query") {
  Run r = run({"radical", "--preset", "A2", "--pair", "2", "0", "--power", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim rad^1") != std::string::npos);
}

TEST_CASE("depth queries") {
  Run r1 = run({"depth", "--preset", "A2", "--morphism", "pi:1"});
  CHECK(r1.code == 0);
  CHECK(r1.out.find("depth: 1") != std::string::npos);
  Run r2 = run({"depth", "--preset", "N3", "--morphism", "pi:1"});
  CHECK(r2.out.find("depth: 2") != std::string::npos);
  Run r3 = run({"depth", "--preset", "A3", "--morphism", "beta:3"});
  CHECK(r3.out.find("depth: 2") != std::string::npos);
}

TEST_CASE("partition summaries") {
  Run r = run({"partitions", "--preset", "N3", "--kind", "post"});
  CHECK(r.code == 0);
  CHECK(r.out.find("p: 2") != std::string::npos);
  Run q = run({"partitions", "--preset", "N3", "--kind", "pre"});
  CHECK(q.out.find("q: 2") != std::string::npos);
}

TEST_CASE("fdelta summary on A3") {
  Run r = run({"fdelta", "--preset", "A3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("p_delta: 2") != std::string::npos);
  CHECK(r.out.find("q_delta: 2") != std::string::npos);
}

TEST_CASE("verify suites all pass on A3") {
  Run r = run({"verify", "--preset", "A3", "--suite", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("chain command emits witnesses") {
  Run r = run({"chain", "--preset", "N3", "--module", "0", "--kind", "mono"});
  CHECK(r.code == 0);
  Run e = run({"chain", "--preset", "N3", "--module", "0", "--kind", "epi"});
  CHECK(e.code == 0);
}

TEST_CASE("json output is well-formed and mirrors the text payload") {
  Run r = run({"indec", "--preset", "A2", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "FINITE");
  CHECK(j["command"] == "indec");
}

TEST_CASE("reports are byte-stable across runs") {
  for (const char* fmt : {"text", "json"}) {
    Run a = run({"verify", "--preset", "A2", "--suite", "all", "--format", fmt});
    Run b = run({"verify", "--preset", "A2", "--suite", "all", "--format", fmt});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("algebra files load from disk") {
  const char* path = "cli_test_algebra.json";
  {
    std::ofstream f(path);
    f << R"({"name":"two","vertices":["u","v"],
             "arrows":[{"name":"a","from":"u","to":"v"}]})";
  }
  Run r = run({"indec", "--algebra", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("modules: 3") != std::string::npos);
  std::remove(path);
  CHECK(run({"indec", "--algebra", "does_not_exist.json"}).code == 1);
}

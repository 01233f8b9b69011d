#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "strands/cli.hpp"

using namespace strands;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basis lists the wrap ladder with gradings") {
  auto r = run({"basis", "--algebra", "A", "--n", "1", "--k", "1", "--s", "",
                "--x", "0", "--y", "0", "--cap", "4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "J{0}  m=0 w=(0) a=0\n"
        "[2/0]_1 @ {0}  m=0 w=(1) a=1\n"
        "[4/0]_1 @ {0}  m=0 w=(2) a=2\n");

  auto shorter = run({"basis", "--algebra", "A", "--n", "1", "--k", "1", "--s",
                      "", "--x", "0", "--y", "0", "--cap", "2"});
  CHECK(shorter.out ==
        "J{0}  m=0 w=(0) a=0\n"
        "[2/0]_1 @ {0}  m=0 w=(1) a=1\n");

  // Byte-deterministic under repetition.
  auto again = run({"basis", "--algebra", "A", "--n", "1", "--k", "1", "--s",
                    "", "--x", "0", "--y", "0", "--cap", "4"});
  CHECK(again.out == r.out);
}

TEST_CASE("basis emits well-formed json with doubled gradings") {
  auto r = run({"basis", "--algebra", "A", "--n", "1", "--k", "1", "--s", "",
                "--x", "0", "--y", "0", "--cap", "4", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ctx"]["n"] == 1);
  REQUIRE(j["generators"].size() == 3);
  CHECK(j["generators"][1]["text"] == "[2/0]_1 @ {0}");
  CHECK(j["generators"][1]["maslov"] == 0);
  CHECK(j["generators"][1]["w2"] == nlohmann::json::array({2}));
  CHECK(j["generators"][1]["alexander2"] == 2);
}

TEST_CASE("mul composes elements written with their own idempotents") {
  auto r = run({"mul", "--n", "1", "--k", "1", "--s", "", "[1/0]_1 @ {0}",
                "[0/1]_1 @ {1}"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2/0]_1 @ {0}\n");

  auto z = run({"mul", "--n", "1", "--k", "1", "--s", "", "J{0}", "J{1}"});
  CHECK(z.code == 0);
  CHECK(z.out == "0\n");
}

TEST_CASE("diff resolves a double wrap") {
  auto r = run({"diff", "--n", "1", "--k", "2", "--s", "", "--x", "0,1",
                "[2/0]_1"});
  CHECK(r.code == 0);
  CHECK(r.out == "[1/1]_1 @ {0,1}\n");
}

TEST_CASE("grade prints all four gradings of a homogeneous element") {
  auto r = run({"grade", "--n", "1", "--k", "2", "--s", "", "--x", "0,1",
                "[1/9]_1"});
  CHECK(r.code == 0);
  CHECK(r.out == "m=-1 w=(5) a=5 w_un=(5,5)\n");
}

TEST_CASE("grade rejects zero and mixed elements") {
  auto zero = run({"grade", "--n", "1", "--k", "1", "--s", "", "0"});
  CHECK(zero.code == 1);
  CHECK(zero.err.find("cannot grade the zero element") != std::string::npos);

  auto mixed = run({"grade", "--n", "1", "--k", "1", "--s", "",
                    "J{0} + [2/0]_1 @ {0}"});
  CHECK(mixed.code == 1);
  CHECK(mixed.err.find("not homogeneous") != std::string::npos);
}

TEST_CASE("homology tabulates piece dimensions under the cap") {
  auto r = run({"homology", "--algebra", "A", "--n", "2", "--k", "1", "--s",
                "", "--cap", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "x={0} y={0} w=(0,0): 0:1\n"
        "x={0} y={0} w=(1,0): 0:1\n"
        "x={0} y={1} w=(1/2,0): 0:1\n"
        "x={1} y={0} w=(1/2,0): 0:1\n"
        "x={1} y={1} w=(0,0): 0:1\n"
        "x={1} y={1} w=(1,0): 0:1\n"
        "x={1} y={1} w=(0,1): 0:1\n"
        "x={1} y={2} w=(0,1/2): 0:1\n"
        "x={2} y={1} w=(0,1/2): 0:1\n"
        "x={2} y={2} w=(0,0): 0:1\n"
        "x={2} y={2} w=(0,1): 0:1\n");

  auto j = run({"homology", "--algebra", "A", "--n", "2", "--k", "1", "--s",
                "", "--cap", "2", "--json"});
  REQUIRE(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.contains("x={0} y={0} w=(0,0)"));
  CHECK(parsed["x={0} y={0} w=(0,0)"]["0"] == 1);
}

TEST_CASE("phi maps quiver text into the strands algebra") {
  auto r = run({"phi", "--n", "1", "--k", "1", "--s", "", "U1 @ {0} -> {0}"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2/0]_1 @ {0}\n");
}

TEST_CASE("render draws the band picture") {
  auto r = run({"render", "--n", "1", "--k", "1", "--s", "", "--x", "0",
                "[1/0]_1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "z2- |\n"
        "z1+ |\n"
        "z1- | /\n"
        "z0+ |\n");

  auto multi = run({"render", "--n", "1", "--k", "1", "--s", "",
                    "J{0} + [2/0]_1 @ {0}"});
  CHECK(multi.code == 1);
}

TEST_CASE("verify runs the named suites and reports pass lines") {
  auto r = run({"verify", "--suite", "dsquared", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS dsquared: 134 checks") == 0);

  auto multi = run({"verify", "--suite", "dsquared,gradings", "--n", "1"});
  CHECK(multi.code == 0);
  CHECK(multi.out.find("PASS dsquared:") != std::string::npos);
  CHECK(multi.out.find("PASS gradings:") != std::string::npos);

  auto all = run({"verify", "--suite", "all", "--n", "1"});
  CHECK(all.code == 0);

  auto unknown = run({"verify", "--suite", "nonsense", "--n", "1"});
  CHECK(unknown.code == 1);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"basis", "--algebra", "A"}).code == 2);
  CHECK(run({"basis", "--algebra", "Q", "--n", "1", "--k", "1", "--s", "",
             "--x", "0", "--y", "0", "--cap", "2"})
            .code == 2);
}

TEST_CASE("grammar and validity failures exit with code one") {
  auto g = run({"grade", "--n", "1", "--k", "1", "--s", "", "--x", "0", "[1/"});
  CHECK(g.code == 1);
  CHECK(g.err.find("(at position 3)") != std::string::npos);

  auto v = run({"grade", "--n", "1", "--k", "1", "--s", "", "[1/0]_1 @ {1}"});
  CHECK(v.code == 1);
  CHECK(v.err.find("(condition 3)") != std::string::npos);
}

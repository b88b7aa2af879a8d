#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cob2/cli.hpp"

using cob2::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const char* name) {
  return std::string(COB2_SOURCE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parse subcommand") {
  CliRun r = cli({"parse", "mul . (theta * theta)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(mul . (theta * theta))\narity: 0 -> 1\n");

  CliRun j = cli({"parse", "--json", "mul . (theta * theta)"});
  CHECK(j.code == 0);
  CHECK(j.out ==
        "{\"term\":\"(mul . (theta * theta))\",\"arity\":{\"inputs\":0,\"outputs\":1}}\n");

  CHECK(cli({"parse", "mul . (unit * id"}).code == 2);
  CHECK(cli({"parse", "mul . counit"}).code == 2);
}

TEST_CASE("normalize subcommand") {
  CliRun r = cli({"normalize", "--json", "mul . (theta * theta)"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"arity\":{\"inputs\":0,\"outputs\":1},\"surface\":"
        "\"open{in=[],out=[1],nonor,k=2}\"}\n");

  CliRun h = cli({"normalize", "counit . mul . comul . unit"});
  CHECK(h.code == 0);
  CHECK(h.out == "arity: 0 -> 0\nclosed{or,g=1}\n");
}

TEST_CASE("eq subcommand decides and reports") {
  CliRun equal = cli({"eq", "mul . (theta * theta)", "mul . (phi * id) . comul . unit"});
  CHECK(equal.code == 0);
  CHECK(equal.out == "equal\n");

  CliRun unequal = cli({"eq", "phi", "id"});
  CHECK(unequal.code == 1);
  CHECK(unequal.out == "not equal\n");

  CliRun scoped = cli({"eq", "--flavor", "orientable", "theta", "theta"});
  CHECK(scoped.code == 2);

  CliRun mismatched = cli({"eq", "mul", "id"});
  CHECK(mismatched.code == 2);

  CliRun json = cli({"eq", "--json", "mul . swap", "mul"});
  CHECK(json.out == "{\"equal\":true}\n");
}

TEST_CASE("member subcommand reports parity and exits by verdict") {
  CliRun crosscap = cli({"member", "--flavor", "orientable", "theta"});
  CHECK(crosscap.code == 1);
  CHECK(crosscap.out.find("-1") != std::string::npos);

  CliRun j = cli({"member", "--json", "--flavor", "orientable", "theta"});
  CHECK(j.out ==
        "{\"components\":[{\"chi\":0,\"b\":1,\"X\":-1,\"crosscaps\":1,\"even\":false}],"
        "\"oriented\":false,\"orientable_cat\":false,\"unoriented\":true}\n");

  CliRun klein =
      cli({"member", "--flavor", "orientable", "mul . (phi * id) . comul . unit"});
  CHECK(klein.code == 0);

  CliRun unoriented = cli({"member", "theta"});
  CHECK(unoriented.code == 0);  // default flavor accepts everything
}

TEST_CASE("synth subcommand round trips and reports obstructions") {
  CliRun r = cli({"synth", "--flavor", "orientable", "mul . (theta * theta)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("theta") == std::string::npos);

  CliRun eq = cli({"eq", r.out.substr(0, r.out.size() - 1), "mul . (theta * theta)"});
  CHECK(eq.code == 0);

  CliRun blocked = cli({"synth", "--flavor", "orientable", "theta"});
  CHECK(blocked.code == 1);

  CliRun scoped = cli({"synth", "--flavor", "oriented", "phi"});
  CHECK(scoped.code == 1);
}

TEST_CASE("eval subcommand with the shipped algebra") {
  CliRun torus = cli({"eval", "--algebra", data_file("cp1.json"), "counit . mul . comul . unit"});
  CHECK(torus.code == 0);
  CHECK(torus.out == "2\n");

  CliRun j = cli({"eval", "--json", "--algebra", data_file("cp1.json"), "id"});
  CHECK(j.out ==
        "{\"rows\":2,\"cols\":2,\"entries\":[[\"1\",\"0\"],[\"0\",\"1\"]]}\n");

  // cp1 ships theta = 0, which fails the extended relations, so evaluating
  // a crosscap must be refused.
  CliRun refused = cli({"eval", "--algebra", data_file("cp1.json"), "theta"});
  CHECK(refused.code == 2);

  CliRun missing = cli({"eval", "--algebra", "/nonexistent.json", "id"});
  CHECK(missing.code == 2);
}

TEST_CASE("check-algebra subcommand") {
  CliRun good = cli({"check-algebra", "--algebra", data_file("qq_swap.json")});
  CHECK(good.code == 0);
  CHECK(good.out.find("ok") != std::string::npos);

  std::string path = "sign_flip_check.json";
  {
    std::ofstream f(path);
    f << "{\"dim\":2,\"basis\":[\"1\",\"x\"],\"unit\":[\"1\",\"0\"],\"counit\":[\"0\",\"1\"],"
         "\"mul\":[[[\"1\",\"0\"],[\"0\",\"1\"]],[[\"0\",\"1\"],[\"0\",\"0\"]]],"
         "\"involution\":[[\"1\",\"0\"],[\"0\",\"-1\"]]}";
  }
  CliRun flipped = cli({"check-algebra", "--algebra", path});
  CHECK(flipped.code == 1);
  CHECK(flipped.out.find("phi-counital: FAIL") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("find-theta subcommand matches the solver") {
  CliRun none = cli({"find-theta", "--algebra", data_file("cp1.json")});
  CHECK(none.code == 1);
  CHECK(none.out == "none over Q\n");

  CliRun zero = cli({"find-theta", "--algebra", data_file("qq_swap.json")});
  CHECK(zero.code == 0);
  CHECK(zero.out == "theta = [0, 0]\n");

  CliRun j = cli({"find-theta", "--json", "--algebra", data_file("cp1.json")});
  CHECK(j.out.find("\"status\":\"none-over-Q\"") != std::string::npos);
}

TEST_CASE("selftest subcommand is deterministic") {
  CliRun a = cli({"selftest", "--seed", "3", "--cases", "10"});
  CliRun b = cli({"selftest", "--seed", "3", "--cases", "10"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"eq", "just-one-term"}).code == 2);
  CHECK(cli({"member", "--flavor", "sideways", "id"}).code == 2);
}

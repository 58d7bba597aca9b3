#include <doctest.h>

#include <sstream>

#include "selfsim/dsl.hpp"
#include "selfsim/session.hpp"

using namespace selfsim;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::string& text, cli::Options opts = {}) {
  std::ostringstream out, err;
  const int code = cli::run_text(text, opts, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse errors carry line and column") {
  try {
    dsl::parse("gen a = (e, a) (1 2)\nlet b = a^{2 -}\n");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Syntax);
    CHECK(std::string(e.what()).rfind("line 2, column", 0) == 0);
  }
}

TEST_CASE("print then parse is the identity") {
  const char* text = R"(# fixtures
context m=4 K=10 D=10 L=10
gen a = (e, e, e, a^{2}) (1 2 3 4)
gen s = (1 3)(2 4)
let k = a^{2-x}
let w = [a*k^-1]^3@2 * s
portrait k L=4
reduce "6" r="2-x"
act a 1 2 3
restrict a*a "1 3"
verify example2
)";
  auto s = dsl::parse(text);
  REQUIRE(s.statements.size() == 10);
  CHECK(dsl::parse(dsl::print(s)) == s);
  CHECK(dsl::print(dsl::parse_word("a^{1 + x}@2")) == dsl::print(dsl::parse_word(dsl::print(dsl::parse_word("a^{1+x}@2")))));
}

TEST_CASE("the documented commands") {
  auto r = run("gen a = (e, a) (1 2)\nportrait a L=3\nreduce \"6\" r=\"2-x\"\n");
  CHECK(r.code == cli::kOk);
  CHECK(r.out ==
        "{\"cmd\":\"portrait\",\"expr\":\"a\",\"portrait\":{\"L\":3,\"m\":2,\"nodes\":[[2,1],[1,2],[2,1],[1,2],[1,2],[1,2],[2,1]]}}\n"
        "{\"cmd\":\"reduce\",\"digits\":[0,1,1,0,0,0,0,0,0],\"m\":2,\"r\":\"2 - x\",\"text\":\"x + x^2\"}\n");
}

TEST_CASE("output is deterministic") {
  const char* text = "context m=3\ngen a = (e, e, a^{x}) (1 2 3)\nclosure\npresent\nlevel a 3\nzeta a\n";
  CHECK(run(text).out == run(text).out);
}

TEST_CASE("exit codes") {
  CHECK(run("gen a = (e, a) (1 2)\nassert identity a\n").code == cli::kCheckFailed);
  CHECK(run("gen a = (e, a) (1 2)\nassert identity a^{2-x}\n").code == cli::kOk);
  CHECK(run("gen a = (e, a (1 2)\n").code == cli::kParseError);
  CHECK(run("portrait b\n").code == cli::kParseError);
  CHECK(run("gen a = (e, a, e) (1 2)\n").code == cli::kParseError);
  CHECK(run("context m=2 K=4 L=8\n").code == cli::kContextError);
  CHECK(run("gen a = (e, a) (1 2)\ncontext m=3\n").code == cli::kContextError);
  CHECK(run("gen a = (e, a) (1 2)\nact a 1 1 1 1 1 1 1 1 1\n").code == cli::kMathError);
}

TEST_CASE("flags override the script context") {
  cli::Options o;
  o.L = 4;
  o.K = 4;
  o.D = 4;
  auto r = run("context L=8\ngen a = (e, a) (1 2)\norder a 16\n", o);
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("\"identity_to_depth\":4") != std::string::npos);
}

TEST_CASE("act names residuals") {
  auto r = run("gen a = (e, a) (1 2)\nact a 2 2 2\n");
  CHECK(r.out.find("\"image\":[1,1,1]") != std::string::npos);
  CHECK(r.out.find("\"residual\":\"a\"") != std::string::npos);
}

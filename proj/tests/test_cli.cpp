#include <doctest.h>

#include <sstream>

#include "cantor/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cantor");
  std::ostringstream out, err;
  const int code = cantor::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kAlt = "alt: (1+sqrt(13))/2, (5+sqrt(13))/6";
const std::string kPhi2 = "alt: (3+sqrt(5))/2, 3+sqrt(5)";

}  // namespace

TEST_CASE("xbeta") {
  CHECK(run({"xbeta", "--base", kAlt, "--exact"}).out == "(5+7*sqrt(13))/18\n");
  CHECK(run({"xbeta", "--base", kAlt, "--exact", "--shift", "1"}).out == "(2+1*sqrt(13))/3\n");
  CHECK(run({"xbeta", "--base", "evp: pre=[4/3] per=[2]", "--exact"}).out == "3/2\n");
  const Result tm = run({"xbeta", "--base", "tm: alpha=(1+sqrt(13))/2 beta=(5+sqrt(13))/6", "--tm-formula", "--tol", "1/100000"});
  CHECK(tm.code == cantor::cli::kOk);
  CHECK(tm.out.find("1.7329") != std::string::npos);
}

TEST_CASE("expand") {
  CHECK(run({"expand", "--base", kAlt, "--greedy", "--x", "(-5+2*sqrt(13))/3", "--len", "6"}).out ==
        "1 1 0 0 0 0\n");
  CHECK(run({"expand", "--base", kAlt, "--lazy", "--x", "(35-5*sqrt(13))/18", "--word"}).out == "1 0 (2 1)^w\n");
  CHECK(run({"expand", "--base", kAlt, "--greedy", "--x", "(2+sqrt(13))/9", "--word"}).out == "(1 0)^w\n");
  CHECK(run({"expand", "--base", kAlt, "--greedy", "--x", "1", "--len", "3"}).code == cantor::cli::kDomainError);
  CHECK(run({"expand", "--base", kAlt, "--lazy", "--x", "(25-5*sqrt(13))/18", "--len", "3"}).code ==
        cantor::cli::kDomainError);
}

TEST_CASE("quasi, flip, value, admissible") {
  CHECK(run({"quasi", "--base", kAlt, "--greedy"}).out == "2 0 (0 1)^w\n");
  CHECK(run({"quasi", "--base", kAlt, "--lazy"}).out == "0 1 (2 0)^w\n");
  CHECK(run({"quasi", "--base", kAlt, "--lazy", "--shift", "1"}).out == "(0 2)^w\n");
  CHECK(run({"quasi", "--base", kAlt, "--greedy", "--cap", "2"}).code == cantor::cli::kUndecided);
  CHECK(run({"flip", "--base", kAlt, "--word", "1 1"}).out == "1 0 (2 1)^w\n");
  CHECK(run({"value", "--base", kAlt, "--word", "0 0 3 3 3"}).out == "(8-2*sqrt(13))\n");
  CHECK(run({"admissible", "--base", kAlt, "--word", "(2 1)^w"}).out == "in-lazy\n");
  CHECK(run({"admissible", "--base", kAlt, "--word", "0 1 2 (0 2)^w"}).out == "in-closure\n");
  const Result bad = run({"admissible", "--base", kAlt, "--word", "0 0 (2 1)^w"});
  CHECK(bad.out.rfind("not-admissible", 0) == 0);
}

TEST_CASE("xprime, automaton, sofic") {
  CHECK(run({"xprime", "--base", kAlt, "--n", "1"}).out == "1\n2\n");
  CHECK(run({"xprime", "--base", kAlt, "--residue", "0", "--bound", "5"}).out == "0 1 2 1\n");
  const Result table = run({"automaton", "--base", kPhi2, "--lazy", "--table"});
  CHECK(table.code == cantor::cli::kOk);
  CHECK(table.out.find("0 0 0 1 -> 1 1 0") != std::string::npos);
  const Result dot = run({"automaton", "--base", kPhi2, "--greedy"});
  CHECK(dot.out.rfind("digraph greedy", 0) == 0);
  CHECK(run({"automaton", "--base", kPhi2, "--greedy"}).out == dot.out);
  const Result capped = run({"sofic", "--base", kAlt, "--cap", "1"});
  CHECK(capped.code == cantor::cli::kUndecided);
  CHECK(capped.out.find("not-decided-within-cap") != std::string::npos);
  const Result sofic = run({"sofic", "--base", kAlt, "--validate", "5"});
  CHECK(sofic.code == cantor::cli::kOk);
  CHECK(sofic.out.rfind("sofic", 0) == 0);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({"xbeta", "--base", "alt: (1+sqrt(13)", "--exact"}).code == cantor::cli::kParseError);
  CHECK(run({"xbeta", "--base", "alt: 1/2", "--exact"}).code == cantor::cli::kDomainError);
  CHECK(run({"flip", "--base", kAlt, "--word", "0 2"}).code == cantor::cli::kDomainError);
  CHECK(run({"nosuch"}).code == cantor::cli::kParseError);
  CHECK(run({"value", "--base", kAlt, "--word", "1 (2"}).code == cantor::cli::kParseError);
}

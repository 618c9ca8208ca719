#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "polygcd/cli.hpp"

using namespace polygcd;
using namespace polygcd::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_args(std::vector<const char*> args, const std::string& input = "") {
  args.insert(args.begin(), "polygcd");
  std::ostringstream out, err;
  std::istringstream in(input);
  auto parsed = parse_command_line(static_cast<int>(args.size()), args.data(), out, err);
  if (const int* status = std::get_if<int>(&parsed)) return {*status, out.str(), err.str()};
  const int status = run(std::get<CliConfig>(parsed), out, err, in);
  return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze prints the atlas table") {
  const Result r = run_args({"analyze", "--f", "x^2+3", "--g", "(x+1)^2+3"});
  CHECK(r.status == kOk);
  CHECK(contains(r.out, "resultant: 13 = 13 (square-free)"));
  CHECK(contains(r.out, "  13: 6"));
  CHECK(contains(r.out, "12            0 1 2 3 4 5 7 8 ..."));
  CHECK(contains(r.out, "13       1             6"));
}

TEST_CASE("analyze --json is canonical and round-trips byte-identically") {
  const Result r = run_args({"analyze", "--f", "x+1", "--g", "x-1", "--json"});
  REQUIRE(r.status == kOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["resultant"] == "-2");
  CHECK(doc["roots"] == nlohmann::json{{"2", "1"}});
  CHECK(doc["squarefree"] == true);
  CHECK(doc["entries"].size() == 2);
  CHECK(doc.dump(2) + "\n" == r.out);
  const Result again = run_args({"analyze", "--f", "x+1", "--g", "x-1", "--json"});
  CHECK(again.out == r.out);
}

TEST_CASE("analyze other branches") {
  const Result zero = run_args({"analyze", "--f", "x^2+x+1", "--g", "x^2+x+1"});
  CHECK(zero.status == kOk);
  CHECK(contains(zero.out, "resultant 0; common factor over \u2124[x]: x^2+x+1; range is infinite"));

  const Result ns = run_args({"analyze", "--f", "x^2-1", "--g", "x^2+1"});
  CHECK(ns.status == kOk);
  CHECK(contains(ns.out, "(not square-free)"));
  CHECK(contains(ns.out, "range: {1, 2}"));
  CHECK(contains(ns.out, "minimal period: 2"));
  CHECK(contains(ns.out, "criterion inapplicable (2^2 divides r)"));

  const Result ns_json = run_args({"analyze", "--f", "x^2-1", "--g", "x^2+1", "--json"});
  const auto doc = nlohmann::json::parse(ns_json.out);
  CHECK(doc["outcome"] == "not_squarefree");
  const Result zero_json = run_args({"analyze", "--f", "x^2+x+1", "--g", "x^2+x+1", "--json"});
  CHECK(nlohmann::json::parse(zero_json.out)["outcome"] == "zero_resultant");
}

TEST_CASE("resultant subcommand") {
  const Result r = run_args({"resultant", "--f", "x^17+9", "--g", "(x+1)^17+9", "--verify"});
  CHECK(r.status == kOk);
  CHECK(r.out == "8936582237915716659950962253358945635793453256935559\n");
  const Result j = run_args({"resultant", "--f", "x+1", "--g", "x-1", "--json"});
  CHECK(nlohmann::json::parse(j.out)["resultant"] == "-2");
}

TEST_CASE("brute-force, witness and period subcommands") {
  const Result b = run_args({"brute-force", "--f", "x^2-1", "--g", "x^2+1", "--json"});
  CHECK(b.status == kOk);
  const auto doc = nlohmann::json::parse(b.out);
  CHECK(doc["modulus"] == "4");
  CHECK(doc["range"] == nlohmann::json{"1", "2"});

  const Result w = run_args({"witness", "--f", "x^2+3", "--g", "(x+1)^2+3"});
  CHECK(w.status == kOk);
  CHECK(contains(w.out, "witness n = "));
  const Result wb = run_args({"witness", "--f", "x^2-1", "--g", "x^2+1"});
  CHECK(contains(wb.out, "criterion inapplicable"));

  const Result p = run_args({"period", "--f", "x^2-1", "--g", "x^2+1"});
  CHECK(p.out == "minimal period: 2 (|r| = 4)\n");
}

TEST_CASE("snf subcommand reads standard input") {
  const Result r = run_args({"snf", "--transforms"}, "2 0\n0 3\n");
  CHECK(r.status == kOk);
  CHECK(contains(r.out, "invariant factors: 1 6\n"));
  CHECK(contains(r.out, "U:\n"));
  CHECK(contains(r.out, "V:\n"));
  const Result j = run_args({"snf", "-", "--json", "--transforms"}, "2 4 4\n-6 6 12\n10 -4 -16\n");
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["invariant_factors"] == nlohmann::json{"2", "6", "12"});
  CHECK(doc.contains("u"));
  CHECK(doc.contains("v"));
  const Result missing = run_args({"snf", "/nonexistent/matrix.txt"});
  CHECK(missing.status == kInputError);
}

TEST_CASE("exit statuses") {
  const Result not_monic = run_args({"analyze", "--f", "2*x^2+3", "--g", "x+1"});
  CHECK(not_monic.status == kInputError);
  CHECK(contains(not_monic.err, "--f"));

  const Result parse = run_args({"resultant", "--f", "x^", "--g", "x"});
  CHECK(parse.status == kInputError);
  CHECK(contains(parse.err, "position 2"));

  const Result constant = run_args({"resultant", "--f", "5", "--g", "x"});
  CHECK(constant.status == kInputError);

  const Result cap = run_args({"brute-force", "--f", "x^2+3", "--g", "(x+1)^2+3", "--cap-brute", "5"});
  CHECK(cap.status == kCapExceeded);

  const Result divisors =
      run_args({"analyze", "--f", "x", "--g", "x+30", "--cap-divisors", "4"});
  CHECK(divisors.status == kCapExceeded);

  const Result zero_witness = run_args({"witness", "--f", "x", "--g", "x"});
  CHECK(zero_witness.status == kInputError);

  const Result no_sub = run_args({});
  CHECK(no_sub.status == kInputError);
  const Result missing_g = run_args({"analyze", "--f", "x"});
  CHECK(missing_g.status == kInputError);
  const Result help = run_args({"--help"});
  CHECK(help.status == kOk);
}

TEST_CASE("run maps a malformed matrix to status 1") {
  CliConfig config;
  config.subcommand = Subcommand::snf;
  std::ostringstream out, err;
  std::istringstream in("1 x\n");
  CHECK(run(config, out, err, in) == kInputError);
}

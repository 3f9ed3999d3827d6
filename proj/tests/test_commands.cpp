#include <doctest.h>

#include <algorithm>

#include "commands.hpp"
#include "cuts.hpp"

using namespace bincons;

namespace {

const char* kFirst =
    "vars 4\n"
    "x1 + x2 + x4 >= 1\n"
    "x1 - x2 + x3 >= 0\n"
    "x1 - x4 >= 0\n";

const char* kPair =
    "vars 2\n"
    "3 x1 + 2 x2 >= 1\n"
    "-x1 + 2 x2 >= 0\n";

const char* kDemo =
    "vars 2\n"
    "2 x1 + 4 x2 >= 1\n"
    "2 x1 - 4 x2 >= -3\n"
    "max 3 x2 - 1 x1\n";

ParsedModel model(const char* text) { return parse_model(text); }

std::vector<Rat> ratVector(const Json& a) {
  std::vector<Rat> out;
  for (const auto& s : a) out.push_back(parseRat(s.get<std::string>()).value());
  return out;
}

bool containsString(const Json& a, const std::string& s) {
  return std::any_of(a.begin(), a.end(), [&](const Json& v) {
    return v.is_string() && v.get<std::string>() == s;
  });
}

}  // namespace

TEST_CASE("clause text parsing") {
  Clause c = parse_clause_text("x1 x3", 4);
  CHECK(c.pos == std::set<int>{1, 3});
  CHECK(c.neg.empty());

  c = parse_clause_text("x1 -x2 ~x4", 4);
  CHECK(c.pos == std::set<int>{1});
  CHECK(c.neg == std::set<int>{2, 4});

  CHECK_THROWS_AS(parse_clause_text("", 4), UsageError);
  CHECK_THROWS_AS(parse_clause_text("x0", 4), PreconditionError);
  CHECK_THROWS_AS(parse_clause_text("y1", 4), UsageError);
  CHECK_THROWS_AS(parse_clause_text("x5", 4), PreconditionError);
  CHECK_THROWS_AS(parse_clause_text("x1 -x1", 4), PreconditionError);
}

TEST_CASE("assignment text parsing") {
  PartialAssignment a = parse_assignment_text("x1=0,x3=1", 4);
  CHECK(a.bind == std::map<int, int>{{1, 0}, {3, 1}});

  a = parse_assignment_text(" x2=1 ", 4);
  CHECK(a.bind == std::map<int, int>{{2, 1}});

  CHECK_THROWS_AS(parse_assignment_text("", 4), UsageError);
  CHECK_THROWS_AS(parse_assignment_text("x1", 4), UsageError);
  CHECK_THROWS_AS(parse_assignment_text("x1=2", 4), UsageError);
  CHECK_THROWS_AS(parse_assignment_text("x1=0,x1=1", 4), UsageError);
  CHECK_THROWS_AS(parse_assignment_text("x9=0", 4), PreconditionError);
}

TEST_CASE("check command") {
  CommandResult r = cmdCheck(model(kFirst), "consistent");
  CHECK(r.verdict == 1);
  CHECK(r.report.data["command"] == "check");
  CHECK(r.report.data["property"] == "consistent");
  CHECK(r.report.data["verdict"] == false);
  CHECK(r.report.data["witness"]["x1"] == 0);
  CHECK(r.report.data["witness"]["x2"] == 0);
  CHECK(r.report.data["model"]["rows"][0] == "x1 + x2 + x4 >= 1");

  CHECK(cmdCheck(model(kFirst), "lp").verdict == 0);
  CHECK(cmdCheck(model(kFirst), "domain").verdict == 0);

  CommandResult seq = cmdCheck(model(kDemo), "seq-lp-k:2");
  CHECK(seq.verdict == 1);
  CHECK(seq.report.data["witness"] == Json{{"x1", 0}});
  CHECK(cmdCheck(model(kPair), "seq-k:2").verdict == 0);
  CHECK(cmdCheck(model(kPair), "k:2").verdict == 1);

  CHECK_THROWS_AS(cmdCheck(model(kPair), "bogus"), UsageError);
  CHECK_THROWS_AS(cmdCheck(model(kPair), "k:"), UsageError);
  CHECK_THROWS_AS(cmdCheck(model(kPair), "k:0"), PreconditionError);
  CHECK_THROWS_AS(cmdCheck(model(kPair), "k:9"), PreconditionError);
}

TEST_CASE("enumeration cap respects the options") {
  std::string wide = "vars 23\nx1 >= 0\n";
  CHECK_THROWS_AS(cmdCheck(parse_model(wide), "consistent"), CapError);
  std::string narrow = "vars 5\nx1 >= 0\n";
  CommandOptions tight;
  tight.enumCap = 4;
  CHECK_THROWS_AS(cmdCheck(parse_model(narrow), "consistent", tight), CapError);
  tight.enumCap = 5;
  CHECK_NOTHROW(cmdCheck(parse_model(narrow), "consistent", tight));
}

TEST_CASE("closure command") {
  CommandResult full = cmdClosure(model(kPair), "full");
  CHECK(full.verdict == 0);
  CHECK(full.report.data["mode"] == "full");
  CHECK(containsString(full.report.data["core"], "x1 v x2"));
  CHECK(containsString(full.report.data["core"], "x2 v ~x1"));
  CHECK(containsString(full.report.data["closure"], "x2"));
  CHECK(full.report.data["empty_clause"] == false);
  CHECK(containsString(full.report.data["closure_rows"], "x2 >= 1"));
  CHECK(!full.report.data.contains("proof"));

  CommandResult in = cmdClosure(model(kPair), "input");
  CHECK(in.report.data.contains("proof"));
  const Json& proof = in.report.data["proof"];
  REQUIRE(proof.is_array());
  REQUIRE(!proof.empty());
  CHECK(proof[0].contains("clause"));
  bool derived = std::any_of(proof.begin(), proof.end(), [](const Json& s) {
    return s.contains("from") && s.contains("pivot");
  });
  CHECK(derived);

  CHECK_THROWS_AS(cmdClosure(model(kPair), "partial"), UsageError);
}

TEST_CASE("cut test command round-trips its certificate") {
  CommandResult r = cmdCutTest(model(kFirst), "x1 x3");
  CHECK(r.verdict == 0);
  CHECK(r.report.data["outcome"] == "certified");
  CHECK(r.report.data["clause"] == "x1 v x3");

  const Json& cert = r.report.data["certificate"];
  CutCertificate rebuilt;
  rebuilt.row = ratVector(cert["row_multipliers"]);
  rebuilt.lower = ratVector(cert["lower_bound_multipliers"]);
  rebuilt.upper = ratVector(cert["upper_bound_multipliers"]);
  rebuilt.combinedRhs = parseRat(cert["combined_rhs"].get<std::string>()).value();
  rebuilt.target = clause_to_inequality(parse_clause_text("x1 x3", 4));
  CHECK(cert["cut"] == ineqStr(rebuilt.target));
  CHECK(verifyCutCertificate(model(kFirst).system, rebuilt));

  CommandResult weak = cmdCutTest(model(kDemo), "x1");
  CHECK(weak.verdict == 1);
  CHECK(weak.report.data["outcome"] == "too-weak");
  CHECK(weak.report.data["best_rhs"] == "0");
  CHECK(!weak.report.data.contains("certificate"));
}

TEST_CASE("cut derivation command") {
  CommandResult r = cmdCutDerive(model(kFirst), "x1=0,x3=0");
  CHECK(r.verdict == 0);
  CHECK(r.report.data["separable"] == true);
  CHECK(r.report.data["cut"] == "x1 v x3");
  CHECK(r.report.data["cut_row"] == "x1 + x3 >= 1");
  CHECK(r.report.data["clause_sum_minimum"] == "1/3");
  CHECK(r.report.data["dropped"].empty());
  const Json& cert = r.report.data["certificate"];
  CutCertificate rebuilt;
  rebuilt.row = ratVector(cert["row_multipliers"]);
  rebuilt.lower = ratVector(cert["lower_bound_multipliers"]);
  rebuilt.upper = ratVector(cert["upper_bound_multipliers"]);
  rebuilt.combinedRhs = parseRat(cert["combined_rhs"].get<std::string>()).value();
  rebuilt.target = clause_to_inequality(parse_clause_text("x1 x3", 4));
  CHECK(verifyCutCertificate(model(kFirst).system, rebuilt));

  CommandResult sep = cmdCutDerive(model(kFirst), "x1=0,x3=1");
  CHECK(sep.verdict == 1);
  CHECK(sep.report.data["separable"] == false);
  REQUIRE(sep.report.data.contains("relaxation_point"));
  std::vector<Rat> p = ratVector(sep.report.data["relaxation_point"]);
  REQUIRE(p.size() == 4);
  CHECK(p[0] == 0);
  CHECK(p[2] == 1);
  for (const LinIneq& row : model(kFirst).system.rows)
    CHECK(satisfies(row, p));
}

TEST_CASE("lift command") {
  CommandResult r = cmdLnp(model(kDemo), 2, "prefix");
  CHECK(r.verdict == 0);
  CHECK(r.report.data["k"] == 2);
  CHECK(r.report.data["mode"] == "prefix");
  const Json& added = r.report.data["added_rows"];
  REQUIRE(added.size() == 2);
  CHECK(containsString(added, "x1 >= 1/2"));
  CHECK(containsString(added, "-x1 >= -1"));
  CHECK(r.report.data["result"]["vars"] == 2);
  CHECK(r.report.data["result"]["rows"].size() == 4);

  CHECK_NOTHROW(cmdLnp(model(kDemo), 1, "product"));
  CHECK_THROWS_AS(cmdLnp(model(kDemo), 2, "outer"), UsageError);
  CHECK_THROWS_AS(cmdLnp(model(kDemo), 0, "prefix"), PreconditionError);
  CHECK_THROWS_AS(cmdLnp(model(kDemo), 3, "prefix"), PreconditionError);
}

TEST_CASE("search command") {
  CommandResult r = cmdSearch(model(kDemo), "lp", "", "zero");
  CHECK(r.verdict == 0);
  const Json& t = r.report.data["trace"];
  CHECK(t["nodes"] == 4);
  CHECK(t["backtracks"] == 1);
  CHECK(t["solution"] == Json::array({1, 0}));
  CHECK(!t.contains("value"));
  REQUIRE(t["log"].is_array());
  CHECK(t["log"][0]["depth"] == 0);
  CHECK(t["log"][0]["assignment"] == "{}");
  CHECK(t["log"][0]["event"] == "open");

  CommandResult ones = cmdSearch(model(kDemo), "rows", "2,1", "one");
  CHECK(ones.report.data["order"] == "2,1");
  CHECK(ones.verdict == 0);

  CHECK_THROWS_AS(cmdSearch(model(kDemo), "", "", "zero"), UsageError);
  CHECK_THROWS_AS(cmdSearch(model(kDemo), "lp", "", "fifty"), UsageError);
  CHECK_THROWS_AS(cmdSearch(model(kDemo), "lp", "1,1", "zero"),
                  PreconditionError);
  CHECK_THROWS_AS(cmdSearch(model(kDemo), "lp", "1,x", "zero"), UsageError);
}

TEST_CASE("bnb command") {
  CommandResult r = cmdBnb(model(kDemo), "x1,x2", "rows");
  CHECK(r.verdict == 0);
  CHECK(r.report.data["root_cuts"] == "x1,x2");
  const Json& t = r.report.data["trace"];
  CHECK(t["nodes"] == 5);
  CHECK(t["solution"] == Json::array({1, 1}));
  CHECK(t["value"] == "2");

  CHECK_THROWS_AS(cmdBnb(model(kPair), "", "rows"), UsageError);
  CHECK_THROWS_AS(cmdBnb(model(kDemo), "x3", "rows"), PreconditionError);
  CHECK_THROWS_AS(cmdBnb(model(kDemo), "x1;x2", "rows"), UsageError);
}

TEST_CASE("verify command") {
  CommandOptions opt;
  opt.seedCount = 4;
  opt.seed = 9;
  CommandResult r = cmdVerify("projection", opt);
  CHECK(r.verdict == 0);
  CHECK(r.report.data["command"] == "verify");
  CHECK(r.report.data["base_seed"] == 9);
  CHECK(r.report.data["suite"] == "projection");
  CHECK(r.report.data["instances"] == 4);
  CHECK(r.report.data["violations"] == 0);
  CHECK(r.report.data["ok"] == true);

  CHECK_THROWS_AS(cmdVerify("everything", opt), UsageError);
}

TEST_CASE("report rendering") {
  CommandResult r = cmdCheck(model(kFirst), "consistent");
  std::string js = r.report.renderJson();
  CHECK(js.back() == '\n');
  Json parsed = Json::parse(js);
  CHECK(parsed["witness"]["x1"] == 0);

  std::string text = r.report.renderText();
  CHECK(text.find("command: check") != std::string::npos);
  CHECK(text.find("verdict: false") != std::string::npos);
  CHECK(text.find("witness:") != std::string::npos);
  CHECK(text.find("x1: 0") != std::string::npos);
  CHECK(text.find("rows:") != std::string::npos);

  std::string bnbText = cmdBnb(model(kDemo), "x1,x2", "rows")
                            .report.renderText();
  CHECK(bnbText.find("nodes: 5") != std::string::npos);
  CHECK(bnbText.find("value: 2") != std::string::npos);
  CHECK(bnbText.find("solution: [1, 1]") != std::string::npos);
  CHECK(bnbText.find("depth: 0") != std::string::npos);
  CHECK(bnbText.find("event: open") != std::string::npos);
}

#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cuts.hpp"
#include "liftproject.hpp"
#include "lp.hpp"
#include "search.hpp"

namespace bincons {
namespace {

std::vector<std::string> splitOn(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int varIndexFrom(const std::string& tok, const std::string& what) {
  std::string body = !tok.empty() && tok[0] == 'x' ? tok.substr(1) : tok;
  if (body.empty() || body.size() > 7 ||
      !std::all_of(body.begin(), body.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError("bad " + what + " token: '" + tok + "'");
  return std::stoi(body);
}

int parseCount(const std::string& text, const std::string& what) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c); }) ||
      text.size() > 7)
    throw UsageError("bad " + what + ": '" + text + "'");
  return std::stoi(text);
}

std::pair<Property, int> parseProperty(const std::string& s) {
  if (s == "consistent") return {Property::Consistent, 0};
  if (s == "domain") return {Property::DomainConsistent, 0};
  if (s == "lp") return {Property::LPConsistent, 0};
  auto withK = [&](const std::string& prefix,
                   Property p) -> std::optional<std::pair<Property, int>> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    return std::pair{p, parseCount(s.substr(prefix.size()), "k value")};
  };
  for (auto& [prefix, p] :
       {std::pair<std::string, Property>{"strong-k:", Property::StrongKConsistent},
        {"seq-k:", Property::SequentialKConsistent},
        {"seq-lp-k:", Property::SequentialLPKConsistent},
        {"k:", Property::KConsistent}})
    if (auto got = withK(prefix, p)) return *got;
  throw UsageError("unknown property: '" + s + "'");
}

Json echoModel(const ParsedModel& m) {
  Json o = jsonSystem(m.system);
  if (m.hasObjective)
    o["objective"] = std::string(m.sense == LpSense::Maximize ? "max " : "min ") +
                     linStr(m.objective);
  return o;
}

Json jsonClauses(const ClauseSet& cs) {
  Json a = Json::array();
  for (const Clause& c : cs.clauses) a.push_back(clauseStr(c));
  return a;
}

PruneCheck parsePrune(const std::string& s) {
  if (s == "rows") return PruneCheck::ConstraintCheck;
  if (s == "lp") return PruneCheck::LpCheck;
  throw UsageError("unknown prune check: '" + s + "' (expected rows or lp)");
}

const char* outcomeName(CgOutcome o) {
  switch (o) {
    case CgOutcome::Certified: return "certified";
    case CgOutcome::TooWeak: return "too-weak";
    case CgOutcome::NoSurrogate: return "no-surrogate";
  }
  return "?";
}

}  // namespace

Clause parse_clause_text(const std::string& text, int n) {
  Clause c;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool negated = tok[0] == '-' || tok[0] == '~';
    std::string body = negated ? tok.substr(1) : tok;
    int j = varIndexFrom(body, "literal");
    (negated ? c.neg : c.pos).insert(j);
  }
  if (c.empty()) throw UsageError("empty clause text");
  validateClause(c, n);
  return c;
}

PartialAssignment parse_assignment_text(const std::string& text, int n) {
  PartialAssignment a;
  for (const std::string& raw : splitOn(text, ',')) {
    std::string part = trimmed(raw);
    if (part.empty()) continue;
    std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw UsageError("expected xJ=V in assignment, got '" + part + "'");
    int j = varIndexFrom(trimmed(part.substr(0, eq)), "assignment");
    std::string val = trimmed(part.substr(eq + 1));
    if (val != "0" && val != "1")
      throw UsageError("assignment value must be 0 or 1, got '" + val + "'");
    if (a.bind.count(j))
      throw UsageError("variable assigned twice: x" + std::to_string(j));
    a.bind[j] = val == "1";
  }
  if (a.bind.empty()) throw UsageError("empty assignment text");
  validateAssignment(a, n);
  return a;
}

CommandResult cmdCheck(const ParsedModel& m, const std::string& property,
                       const CommandOptions& opt) {
  auto [prop, k] = parseProperty(property);
  OracleLimits lim{opt.enumCap};
  ConsistencyReport r = check(m.system, prop, k, lim);

  CommandResult out;
  out.report.data["command"] = "check";
  out.report.data["property"] = property;
  out.report.data["model"] = echoModel(m);
  out.report.data["verdict"] = r.verdict;
  if (r.witness) out.report.data["witness"] = jsonAssignment(*r.witness);
  out.verdict = r.verdict ? 0 : 1;
  return out;
}

CommandResult cmdClosure(const ParsedModel& m, const std::string& mode,
                         const CommandOptions&) {
  if (mode != "full" && mode != "input")
    throw UsageError("unknown closure mode: '" + mode +
                     "' (expected full or input)");
  ClauseSet core = clausal_core(m.system);

  CommandResult out;
  out.report.data["command"] = "closure";
  out.report.data["mode"] = mode;
  out.report.data["model"] = echoModel(m);
  out.report.data["core"] = jsonClauses(core);

  ClauseSet closure;
  if (mode == "full") {
    closure = full_closure(core);
  } else {
    InputClosureResult r = input_closure(core);
    closure = r.closure;
    out.report.data["proof"] = jsonProof(r.proof);
  }
  out.report.data["closure"] = jsonClauses(closure);
  out.report.data["empty_clause"] = hasEmptyClause(closure);
  out.report.data["closure_rows"] =
      jsonRows(clausesToSystem(closure, m.system.n).rows);
  return out;
}

CommandResult cmdCutTest(const ParsedModel& m, const std::string& clauseText,
                         const CommandOptions&) {
  Clause c = parse_clause_text(clauseText, m.system.n);
  CgTestResult r = is_cg_cut(m.system, c);

  CommandResult out;
  out.report.data["command"] = "cut-test";
  out.report.data["model"] = echoModel(m);
  out.report.data["clause"] = clauseStr(c);
  out.report.data["outcome"] = outcomeName(r.outcome);
  if (r.certificate)
    out.report.data["certificate"] = jsonCertificate(*r.certificate);
  if (r.bestRhs) out.report.data["best_rhs"] = ratStr(*r.bestRhs);
  out.verdict = r.outcome == CgOutcome::Certified ? 0 : 1;
  return out;
}

CommandResult cmdCutDerive(const ParsedModel& m, const std::string& assignText,
                           const CommandOptions& opt) {
  PartialAssignment a = parse_assignment_text(assignText, m.system.n);
  OracleLimits lim{opt.enumCap};

  CommandResult out;
  out.report.data["command"] = "cut-derive";
  out.report.data["model"] = echoModel(m);
  out.report.data["assignment"] = jsonAssignment(a);

  if (consistent_with(m.system, a, Relaxation::LP, lim)) {
    out.report.data["separable"] = false;
    LpOutcome lp = lp_feasible(lpFromSystem(m.system, a));
    if (lp.witness) out.report.data["relaxation_point"] = jsonPoint(*lp.witness);
    out.verdict = 1;
    return out;
  }

  DerivedCut dc = derive_cg_cut(m.system, a);
  out.report.data["separable"] = true;
  out.report.data["cut"] = clauseStr(dc.cut);
  out.report.data["cut_row"] = ineqStr(clause_to_inequality(dc.cut));
  out.report.data["surrogate"] = ineqStr(dc.trace.surrogate);
  out.report.data["clause_sum_minimum"] = ratStr(dc.trace.clauseSum);
  Json dropped = Json::array();
  for (int j : dc.trace.dropped) dropped.push_back("x" + std::to_string(j));
  out.report.data["dropped"] = dropped;
  out.report.data["certificate"] = jsonCertificate(dc.certificate);
  return out;
}

CommandResult cmdLnp(const ParsedModel& m, int k, const std::string& mode,
                     const CommandOptions&) {
  ProjectionMode pm;
  if (mode == "prefix")
    pm = ProjectionMode::Prefix;
  else if (mode == "product")
    pm = ProjectionMode::ProductOnly;
  else
    throw UsageError("unknown projection mode: '" + mode +
                     "' (expected prefix or product)");
  FmOptions fop;
  fop.lpPrune = true;
  BinarySystem t = sequentialize(m.system, k, pm, fop);

  CommandResult out;
  out.report.data["command"] = "lnp";
  out.report.data["k"] = k;
  out.report.data["mode"] = mode;
  out.report.data["model"] = echoModel(m);
  std::vector<LinIneq> added(t.rows.begin() + m.system.rows.size(),
                             t.rows.end());
  out.report.data["added_rows"] = jsonRows(added);
  out.report.data["result"] = jsonSystem(t);
  return out;
}

CommandResult cmdSearch(const ParsedModel& m, const std::string& prune,
                        const std::string& order,
                        const std::string& valueOrder,
                        const CommandOptions&) {
  Strategy strat;
  strat.prune = parsePrune(prune);
  if (!order.empty())
    for (const std::string& part : splitOn(order, ','))
      strat.order.push_back(varIndexFrom(trimmed(part), "order"));
  if (valueOrder == "zero")
    strat.valueOrder = ValueOrder::ZeroFirst;
  else if (valueOrder == "one")
    strat.valueOrder = ValueOrder::OneFirst;
  else if (valueOrder == "lp")
    strat.valueOrder = ValueOrder::LpGuided;
  else
    throw UsageError("unknown value order: '" + valueOrder +
                     "' (expected zero, one or lp)");

  SearchTrace t = feasibility_search(m.system, strat);

  CommandResult out;
  out.report.data["command"] = "search";
  out.report.data["prune"] = prune;
  if (!order.empty()) out.report.data["order"] = order;
  out.report.data["value_order"] = valueOrder;
  out.report.data["model"] = echoModel(m);
  out.report.data["trace"] = jsonTrace(t);
  out.verdict = t.solution ? 0 : 1;
  return out;
}

CommandResult cmdBnb(const ParsedModel& m, const std::string& rootCuts,
                     const std::string& prune, const CommandOptions&) {
  if (!m.hasObjective)
    throw UsageError("bnb needs a model with an objective line");
  Strategy strat;
  strat.prune = parsePrune(prune);
  std::vector<int> cutVars;
  if (!rootCuts.empty())
    for (const std::string& part : splitOn(rootCuts, ','))
      cutVars.push_back(varIndexFrom(trimmed(part), "root-cuts"));

  SearchTrace t =
      branch_and_bound(m.system, m.objective, cutVars, strat, m.sense);

  CommandResult out;
  out.report.data["command"] = "bnb";
  out.report.data["prune"] = prune;
  if (!rootCuts.empty()) out.report.data["root_cuts"] = rootCuts;
  out.report.data["model"] = echoModel(m);
  out.report.data["trace"] = jsonTrace(t);
  out.verdict = t.solution ? 0 : 1;
  return out;
}

CommandResult cmdVerify(const std::string& suite, const CommandOptions& opt) {
  SuiteReport rep = runSuite(suite, opt.seedCount, opt.seed);

  CommandResult out;
  out.report.data["command"] = "verify";
  out.report.data["base_seed"] = opt.seed;
  out.report.data.update(jsonSuite(rep));
  out.verdict = rep.ok() ? 0 : 1;
  return out;
}

}  // namespace bincons

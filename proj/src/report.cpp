#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace bincons {
namespace {

bool scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string scalarText(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

bool flatArray(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), scalar);
}

std::string inlineArray(const Json& v) {
  std::string s = "[";
  for (const auto& e : v) {
    if (s.size() > 1) s += ", ";
    s += scalarText(e);
  }
  return s + "]";
}

void renderInto(std::ostream& os, const Json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      const Json& val = it.value();
      if (scalar(val))
        os << pad << it.key() << ": " << scalarText(val) << "\n";
      else if (flatArray(val))
        os << pad << it.key() << ": " << inlineArray(val) << "\n";
      else {
        os << pad << it.key() << ":\n";
        renderInto(os, val, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (scalar(e))
        os << pad << "- " << scalarText(e) << "\n";
      else {
        os << pad << "-\n";
        renderInto(os, e, indent + 2);
      }
    }
  } else {
    os << pad << scalarText(v) << "\n";
  }
}

Json ratArray(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(ratStr(r));
  return a;
}

}  // namespace

std::string ReportDocument::renderJson() const { return data.dump(2) + "\n"; }

std::string ReportDocument::renderText() const {
  std::ostringstream os;
  renderInto(os, data, 0);
  return os.str();
}

Json jsonRows(const std::vector<LinIneq>& rows) {
  Json a = Json::array();
  for (const LinIneq& r : rows) a.push_back(ineqStr(r));
  return a;
}

Json jsonSystem(const BinarySystem& S) {
  Json o;
  o["vars"] = S.n;
  o["rows"] = jsonRows(S.rows);
  return o;
}

Json jsonClause(const Clause& c) { return clauseStr(c); }

Json jsonAssignment(const PartialAssignment& a) {
  Json o = Json::object();
  for (const auto& [j, v] : a.bind) o["x" + std::to_string(j)] = v;
  return o;
}

Json jsonPoint(const std::vector<Rat>& p) { return ratArray(p); }

Json jsonPoint(const std::vector<int>& p) {
  Json a = Json::array();
  for (int v : p) a.push_back(v);
  return a;
}

Json jsonCertificate(const CutCertificate& c) {
  Json o;
  o["row_multipliers"] = ratArray(c.row);
  o["lower_bound_multipliers"] = ratArray(c.lower);
  o["upper_bound_multipliers"] = ratArray(c.upper);
  o["combined_rhs"] = ratStr(c.combinedRhs);
  o["cut"] = ineqStr(c.target);
  return o;
}

Json jsonFarkas(const FarkasCertificate& f) {
  Json o;
  o["row_multipliers"] = ratArray(f.row);
  o["lower_bound_multipliers"] = ratArray(f.lower);
  o["upper_bound_multipliers"] = ratArray(f.upper);
  o["implied_rhs"] = ratStr(f.impliedRhs);
  return o;
}

Json jsonTrace(const SearchTrace& t) {
  Json o;
  o["nodes"] = t.nodes;
  o["backtracks"] = t.backtracks;
  if (t.solution) o["solution"] = jsonPoint(*t.solution);
  if (t.value) o["value"] = ratStr(*t.value);
  Json log = Json::array();
  for (const NodeLog& e : t.log) {
    Json entry;
    entry["depth"] = e.depth;
    entry["assignment"] = paStr(e.assignment);
    entry["event"] = e.event;
    log.push_back(entry);
  }
  o["log"] = log;
  return o;
}

Json jsonProof(const ProofDag& d) {
  Json a = Json::array();
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const ProofStep& s = d.steps[i];
    Json o;
    o["index"] = i;
    o["clause"] = clauseStr(s.clause);
    if (s.parent1 >= 0) {
      o["from"] = Json::array({s.parent1, s.parent2});
      o["pivot"] = "x" + std::to_string(s.pivot);
    } else {
      o["axiom"] = true;
    }
    a.push_back(o);
  }
  return a;
}

Json jsonSuite(const SuiteReport& r) {
  Json o;
  o["suite"] = r.name;
  o["instances"] = r.instances;
  o["checks"] = r.checks;
  o["violations"] = r.violations;
  o["ok"] = r.ok();
  if (!r.notes.empty()) o["notes"] = r.notes;
  return o;
}

}  // namespace bincons

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cuts.hpp"
#include "search.hpp"
#include "suites.hpp"

namespace bincons {

using Json = nlohmann::ordered_json;

// Every command produces one of these. renderJson is the exact data;
// renderText is a line-oriented view of the same tree for terminals.
struct ReportDocument {
  Json data;

  std::string renderJson() const;
  std::string renderText() const;
};

// Rationals are rendered as "p/q" strings and rows in the model-file
// syntax, so every report fragment can be pasted back into the tool.
Json jsonRows(const std::vector<LinIneq>& rows);
Json jsonSystem(const BinarySystem& S);
Json jsonClause(const Clause& c);
Json jsonAssignment(const PartialAssignment& a);
Json jsonPoint(const std::vector<Rat>& p);
Json jsonPoint(const std::vector<int>& p);
Json jsonCertificate(const CutCertificate& c);
Json jsonFarkas(const FarkasCertificate& f);
Json jsonTrace(const SearchTrace& t);
Json jsonProof(const ProofDag& d);
Json jsonSuite(const SuiteReport& r);

}  // namespace bincons

#pragma once

#include <cstdint>
#include <string>

#include "modelfile.hpp"
#include "report.hpp"

namespace bincons {

struct CommandOptions {
  int enumCap = 22;        // enumeration-based oracles refuse larger n
  std::uint64_t seed = 1;  // base seed for randomized suites
  int seedCount = 50;      // instances per randomized suite
};

// verdict 0 = true/success, 1 = false (report carries the witness)
struct CommandResult {
  ReportDocument report;
  int verdict = 0;
};

// "x1 x3 -x2" or "~x2"; throws UsageError / PreconditionError
Clause parse_clause_text(const std::string& text, int n);
// "x1=0,x3=1"; throws UsageError / PreconditionError
PartialAssignment parse_assignment_text(const std::string& text, int n);

// property: consistent | domain | k:<k> | strong-k:<k> | seq-k:<k> | lp |
// seq-lp-k:<k>
CommandResult cmdCheck(const ParsedModel& m, const std::string& property,
                       const CommandOptions& opt = {});
// mode: full | input
CommandResult cmdClosure(const ParsedModel& m, const std::string& mode,
                         const CommandOptions& opt = {});
CommandResult cmdCutTest(const ParsedModel& m, const std::string& clauseText,
                         const CommandOptions& opt = {});
CommandResult cmdCutDerive(const ParsedModel& m, const std::string& assignText,
                           const CommandOptions& opt = {});
// mode: prefix | product
CommandResult cmdLnp(const ParsedModel& m, int k, const std::string& mode,
                     const CommandOptions& opt = {});
// prune: rows | lp; order: "" or "2,1,3"; valueOrder: zero | one | lp
CommandResult cmdSearch(const ParsedModel& m, const std::string& prune,
                        const std::string& order,
                        const std::string& valueOrder,
                        const CommandOptions& opt = {});
// rootCuts: "" or "x1,x2"; prune as above
CommandResult cmdBnb(const ParsedModel& m, const std::string& rootCuts,
                     const std::string& prune,
                     const CommandOptions& opt = {});
// suite from suiteNames(), or "all"
CommandResult cmdVerify(const std::string& suite,
                        const CommandOptions& opt = {});

}  // namespace bincons

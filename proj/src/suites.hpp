#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuts.hpp"
#include "search.hpp"

namespace bincons {

struct SuiteReport {
  std::string name;
  long instances = 0;
  long checks = 0;
  long violations = 0;
  std::vector<std::string> notes;
  bool ok() const { return violations == 0; }
};

// Each suite replays one of the library's guarantees over seeded random
// instances, comparing two independent code paths and recording any
// counterexample instance verbatim in notes.

// Consistency agrees with an independent scan that compares the covered-row
// check against projections of the enumerated solution set, subset by
// subset, and both paths report the same first witness; domain consistency
// agrees with the per-variable projections.
SuiteReport projection_suite(int instances, std::uint64_t baseSeed = 1);

// Augmenting S with the full resolution closure of its clausal core yields a
// consistent system with the same feasible set; when S is already
// consistent, every implied clause is absorbed by its clausal core.
SuiteReport closure_suite(int instances, std::uint64_t baseSeed = 1);

// Exhaustive clause-by-clause agreement between rank-1 cut certification
// over a clausal system and input-resolution provability.
SuiteReport cut_proof_suite(int instances, std::uint64_t baseSeed = 1);

// A partial assignment is infeasible for the relaxation exactly when it
// violates a certified clausal cut; the separating cut is rebuilt and
// reverified for every infeasible assignment.
SuiteReport cut_characterization_suite(int instances,
                                       std::uint64_t baseSeed = 1);

// LP-consistency decided through implied-clause cut certification agrees
// with the enumeration oracle.
SuiteReport implied_cuts_suite(int instances, std::uint64_t baseSeed = 1);

// sequentialize(k) makes level k sequentially LP consistent in both
// projection modes and never changes the feasible set.
SuiteReport sequential_lift_suite(int instances, std::uint64_t baseSeed = 1);

// Wraps no_backtrack_theorem_suite.
SuiteReport no_backtrack_suite(int instances, std::uint64_t baseSeed = 1);

std::vector<std::string> suiteNames();

// name from suiteNames(), or "all"; throws UsageError otherwise
SuiteReport runSuite(const std::string& name, int instances,
                     std::uint64_t baseSeed = 1);

}  // namespace bincons

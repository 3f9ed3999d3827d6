#pragma once

#include "resolution.hpp"

namespace bincons {

// Nonnegative multipliers over the system rows and box rows whose
// combination has exactly the target's coefficients and a right-hand side
// in (target.rhs - 1, target.rhs], so rounding up yields the target.
struct CutCertificate {
  std::vector<Rat> row;    // per system row
  std::vector<Rat> lower;  // per variable, on x_j >= 0
  std::vector<Rat> upper;  // per variable, on -x_j >= -1
  LinIneq target;
  Rat combinedRhs;
};

enum class CgOutcome { Certified, TooWeak, NoSurrogate };

struct CgTestResult {
  CgOutcome outcome = CgOutcome::TooWeak;
  std::optional<CutCertificate> certificate;
  std::optional<Rat> bestRhs;  // multiplier optimum before capping
};

struct SeparationTrace {
  LinIneq surrogate;      // optimal direction over the assigned variables
  Rat clauseSum;          // minimum of the clause-sum form over the relaxation
  std::set<int> dropped;  // variables rounded out of the clause
  Clause cut;
};

struct DerivedCut {
  Clause cut;
  CutCertificate certificate;
  SeparationTrace trace;
};

bool verifyCutCertificate(const BinarySystem& S, const CutCertificate& c);

// Whether the clause inequality is a one-round rounding cut for the [0,1]
// relaxation of S: maximize u*b over u >= 0 with uA equal to the clause
// coefficients (box rows included in A). Requires a feasible relaxation and
// a nonempty clause. Certified results carry a verified certificate.
CgTestResult is_cg_cut(const BinarySystem& S, const Clause& c);

// For a partial 0-1 assignment that is infeasible for the relaxation of a
// feasible relaxation S, produces a clause cut violated by the assignment,
// from the optimal surrogate over the assigned variables plus rounding.
DerivedCut derive_cg_cut(const BinarySystem& S, const PartialAssignment& a);

// LP-consistency decided through cuts: S is LP-consistent iff every prime
// implied clause is certifiable. Scans up to 3^n clauses; small n only.
ConsistencyReport lp_consistency_via_cg(const BinarySystem& S,
                                        const OracleLimits& lim = {});

struct EquivalenceReport {
  int clausesChecked = 0;
  std::vector<std::string> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

// Cross-checks, over every nonempty clause on n variables, that being a
// one-round cut for the clausal description of S coincides with having an
// input resolution proof from it.
EquivalenceReport cut_proof_equivalence(const BinarySystem& S,
                                        int smallCap = 4);

}  // namespace bincons

#pragma once

#include "model.hpp"

#include <optional>
#include <vector>

namespace bincons {

enum class LpStatus { Feasible, Infeasible, Optimal, Unbounded };
enum class LpSense { Maximize, Minimize };

struct VarBounds {
  std::optional<Rat> lo = Rat(0);  // nullopt = unbounded below
  std::optional<Rat> hi = Rat(1);  // nullopt = unbounded above
};

struct LpProblem {
  int numVars = 0;
  std::vector<LinIneq> rows;      // all >= rows over x1..xnumVars
  std::vector<VarBounds> bounds;  // per variable; empty = all [0,1]
  std::map<int, Rat> objective;   // empty = feasibility only
  LpSense sense = LpSense::Maximize;
  PartialAssignment fixings;      // tightened onto bounds before solving
};

// Nonnegative multipliers combining rows and (effective, post-fixing) bounds
// into 0 >= impliedRhs with impliedRhs > 0:
//   sum_i row[i] * (rows[i])  +  sum_j lower[j] * (x_j >= lo_j)
//                             +  sum_j upper[j] * (-x_j >= -hi_j)
struct FarkasCertificate {
  std::vector<Rat> row;    // one per problem row
  std::vector<Rat> lower;  // one per variable
  std::vector<Rat> upper;  // one per variable
  Rat impliedRhs;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<std::vector<Rat>> witness;       // Feasible / Optimal
  std::optional<Rat> value;                      // Optimal
  std::optional<FarkasCertificate> certificate;  // Infeasible
};

// Two-phase primal simplex over exact rationals with Bland's rule; fully
// deterministic. lp_feasible stops after phase one; lp_optimize continues to
// an optimum or detects unboundedness. Witnesses and certificates are
// rechecked exactly before they are returned.
LpOutcome lp_feasible(const LpProblem& p);
LpOutcome lp_optimize(const LpProblem& p);

LpProblem lpFromSystem(const BinarySystem& S,
                       const PartialAssignment& fixings = {});

VarBounds effectiveBounds(const LpProblem& p, int j);  // 1-based, post-fixing
bool verifyFarkas(const LpProblem& p, const FarkasCertificate& f);
bool verifyWitness(const LpProblem& p, const std::vector<Rat>& x);

}  // namespace bincons

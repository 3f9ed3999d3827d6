#pragma once

#include "oracle.hpp"

namespace bincons {

// Clause set kept as an antichain under absorption (no member contains
// another), sorted for a canonical iteration order.
struct ClauseSet {
  std::vector<Clause> clauses;
};

struct ProofStep {
  Clause clause;
  int parent1 = -1, parent2 = -1;  // step indices; both -1 marks an axiom
  int pivot = 0;                   // variable resolved on, for derived steps
};

struct ProofDag {
  std::vector<ProofStep> steps;
};

struct InputClosureResult {
  ClauseSet closure;
  ProofDag proof;
};

ClauseSet makeClauseSet(const std::vector<Clause>& clauses);
bool absorbedBy(const ClauseSet& C, const Clause& c);
bool hasEmptyClause(const ClauseSet& C);

// All prime clauses implied by single rows of S: for a row with positive
// part M = sum_j max(a_j, 0), the clause over support subset T (positive
// literal where a_j > 0) is implied iff sum_{j in T} |a_j| > M - rhs, and
// the minimal such T are enumerated directly. A row unsatisfiable over 0-1
// points contributes the empty clause.
ClauseSet clausal_core(const BinarySystem& S);

// The resolvent and its pivot when the clauses clash in exactly one
// variable; nullopt otherwise.
std::optional<std::pair<Clause, int>> resolvent(const Clause& c1,
                                                const Clause& c2);

// Saturation under resolution of arbitrary pairs, absorption-reduced.
ClauseSet full_closure(const ClauseSet& C);

// Saturation under resolution where one parent is always an original member
// of C; the proof DAG records every derivation with parent step indices.
InputClosureResult input_closure(const ClauseSet& C);

bool has_input_proof(const ClauseSet& C, const Clause& target);

// Each derived step must re-resolve from its parents exactly.
bool verifyProofDag(const ProofDag& dag);

// Clause rows as a 0-1 system over x1..xn; the empty clause becomes the
// contradictory row 0 >= 1.
BinarySystem clausesToSystem(const ClauseSet& C, int n);

}  // namespace bincons

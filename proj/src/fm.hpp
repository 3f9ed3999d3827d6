#pragma once

#include "lp.hpp"

namespace bincons {

struct FmOptions {
  bool lpPrune = false;       // drop rows implied by the rest after each step
  std::size_t rowCap = 200000;  // hard ceiling on intermediate row count
};

struct FmRow {
  LinIneq row;
  std::map<std::size_t, Rat> multipliers;  // nonzero weights on input rows
};

struct FmResult {
  std::vector<FmRow> rows;  // canonical order, over the surviving variables
};

// Divides by the positive content of the coefficient vector so that
// coefficients are coprime integers; a row without variables normalizes to
// 0 >= 1 (contradiction) or 0 >= 0.
LinIneq canonicalRow(const LinIneq& a);

// Fourier-Motzkin elimination over >= rows with free variables (bounds must
// be passed as rows). Variables in tier1 are eliminated before tier2, each
// tier ordered by fewest occurrences first (ties to the smallest index).
// Every output row carries exact nonnegative multipliers over the input
// rows, so sum_i multipliers[i] * input[i] reproduces it up to the positive
// canonicalization factor already applied. Rows with identical coefficient
// vectors keep only the largest right-hand side. Throws CapError when the
// working set exceeds rowCap.
FmResult fmEliminate(const std::vector<LinIneq>& input,
                     const std::vector<int>& tier1,
                     const std::vector<int>& tier2, const FmOptions& opt = {});

// Facet description of the convex hull of finitely many rational points,
// obtained by eliminating the convex-combination weights; redundant rows are
// pruned. The empty point set yields the single row 0 >= 1.
std::vector<LinIneq> hull_of_points(const std::vector<std::vector<Rat>>& pts,
                                    int numVars);

// Implication over the unbounded polyhedron {x : rows}. An infeasible row
// set implies everything.
bool rowsImply(const std::vector<LinIneq>& rows, int numVars,
               const LinIneq& target);
bool sameSolutionSet(const std::vector<LinIneq>& A,
                     const std::vector<LinIneq>& B, int numVars);

}  // namespace bincons

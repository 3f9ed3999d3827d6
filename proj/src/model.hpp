#pragma once

#include "rat.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bincons {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An enumeration-based operation was asked to exceed its variable cap.
struct CapError : Error {
  using Error::Error;
};
// A stated precondition of the operation does not hold for this input.
struct PreconditionError : Error {
  using Error::Error;
};
// Malformed user-facing input (option strings, clause/assignment syntax).
struct UsageError : Error {
  using Error::Error;
};

// One linear inequality over 0-1 variables, always stored in >= form.
// coeffs maps 1-based variable indices to nonzero coefficients; zero
// coefficients are never stored.
struct LinIneq {
  std::map<int, Rat> coeffs;
  Rat rhs = 0;

  bool operator==(const LinIneq&) const = default;
};

struct BinarySystem {
  int n = 0;  // variables x1..xn
  std::vector<LinIneq> rows;
};

// Disjunction of literals; pos and neg are disjoint sets of variable indices.
// Both empty is the empty clause, which no point satisfies.
struct Clause {
  std::set<int> pos, neg;

  auto operator<=>(const Clause&) const = default;
  std::size_t size() const { return pos.size() + neg.size(); }
  bool empty() const { return pos.empty() && neg.empty(); }
};

struct PartialAssignment {
  std::map<int, int> bind;  // var -> 0 or 1

  bool operator==(const PartialAssignment&) const = default;
};

LinIneq makeRow(std::map<int, Rat> coeffs, Rat rhs);
std::vector<LinIneq> boxRows(int n);  // x_j >= 0 and -x_j >= -1 for each j

// Strict ordering on inequalities: by coefficient map, then rhs. Used
// wherever rows need a canonical sequence.
bool ineqLess(const LinIneq& a, const LinIneq& b);

Rat evaluate(const LinIneq& a, const std::vector<Rat>& p);  // p[j-1] is x_j
bool satisfies(const LinIneq& a, const std::vector<Rat>& p);
std::vector<Rat> toRatPoint(const std::vector<int>& p);
bool satisfiesAll(const BinarySystem& S, const std::vector<int>& p);

// c as the inequality sum_{pos} x_j + sum_{neg} (1-x_j) >= 1, moved to
// >= form with integer data. The empty clause has no inequality form.
LinIneq clause_to_inequality(const Clause& c);

// Whether a >= rhs forces c over the 0-1 box: the maximum of the left side
// over all points falsifying c stays below rhs.
bool inequality_implies_clause(const LinIneq& a, const Clause& c);

bool clauseAbsorbs(const Clause& small, const Clause& big);  // literals subset
bool clauseSatisfied(const Clause& c, const std::vector<int>& p);
// All literals of c are assigned and false under a.
bool clauseFalsified(const Clause& c, const PartialAssignment& a);
// The assignment setting every literal of c false.
PartialAssignment falsifier(const Clause& c);

// Throws PreconditionError unless all variables are in 1..n and all values
// are 0/1.
void validateAssignment(const PartialAssignment& a, int n);
void validateClause(const Clause& c, int n);

std::string linStr(const std::map<int, Rat>& coeffs);
std::string ineqStr(const LinIneq& a);
std::string clauseStr(const Clause& c);
std::string paStr(const PartialAssignment& a);
std::string pointStr(const std::vector<Rat>& p);
std::string pointStr(const std::vector<int>& p);

}  // namespace bincons

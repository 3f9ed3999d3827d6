#include <doctest.h>

#include <algorithm>

#include "resolution.hpp"

using namespace bincons;

namespace {

Clause cl(std::set<int> pos, std::set<int> neg = {}) {
  Clause c;
  c.pos = std::move(pos);
  c.neg = std::move(neg);
  return c;
}

BinarySystem firstInstance() {
  BinarySystem S;
  S.n = 4;
  S.rows = {makeRow({{1, ratOf(1)}, {2, ratOf(1)}, {4, ratOf(1)}}, ratOf(1)),
            makeRow({{1, ratOf(1)}, {2, ratOf(-1)}, {3, ratOf(1)}}, ratOf(0)),
            makeRow({{1, ratOf(1)}, {4, ratOf(-1)}}, ratOf(0))};
  return S;
}

std::vector<Clause> signPatterns() {
  std::vector<Clause> out;
  for (int mask = 0; mask < 8; ++mask) {
    Clause c;
    c.pos.insert(1);
    (mask & 4 ? c.neg : c.pos).insert(2);
    (mask & 2 ? c.neg : c.pos).insert(3);
    (mask & 1 ? c.neg : c.pos).insert(4);
    out.push_back(c);
  }
  return out;
}

bool containsClause(const ClauseSet& C, const Clause& c) {
  return std::find(C.clauses.begin(), C.clauses.end(), c) != C.clauses.end();
}

}  // namespace

TEST_CASE("makeClauseSet keeps an absorption antichain") {
  ClauseSet C = makeClauseSet({cl({1, 2}), cl({1}), cl({1, 2}), cl({2, 3})});
  CHECK(C.clauses.size() == 2);
  CHECK(containsClause(C, cl({1})));
  CHECK(containsClause(C, cl({2, 3})));
  CHECK(absorbedBy(C, cl({1, 4})));
  CHECK(!absorbedBy(C, cl({4})));
  CHECK(!hasEmptyClause(C));
  CHECK(hasEmptyClause(makeClauseSet({cl({1}), cl({})})));
}

TEST_CASE("clausal core of single rows") {
  BinarySystem S;
  S.n = 2;
  S.rows = {makeRow({{1, ratOf(3)}, {2, ratOf(2)}}, ratOf(1))};
  CHECK(clausal_core(S).clauses == std::vector<Clause>{cl({1, 2})});

  S.rows = {makeRow({{1, ratOf(-1)}, {2, ratOf(2)}}, ratOf(0))};
  CHECK(clausal_core(S).clauses == std::vector<Clause>{cl({2}, {1})});

  S.rows = {makeRow({{1, ratOf(1)}, {2, ratOf(1)}}, ratOf(0))};
  CHECK(clausal_core(S).clauses.empty());

  S.rows = {makeRow({{1, ratOf(-2)}, {2, ratOf(-2)}}, ratOf(-1))};
  ClauseSet units = clausal_core(S);
  CHECK(units.clauses.size() == 2);
  CHECK(containsClause(units, cl({}, {1})));
  CHECK(containsClause(units, cl({}, {2})));

  S.rows = {makeRow({}, ratOf(1))};
  CHECK(hasEmptyClause(clausal_core(S)));

  S.rows = {makeRow({{1, ratOf(2)}, {2, ratOf(1)}}, ratOf(2))};
  ClauseSet mixed = clausal_core(S);
  CHECK(mixed.clauses == std::vector<Clause>{cl({1})});
}

TEST_CASE("clausal core of the first instance") {
  ClauseSet C = clausal_core(firstInstance());
  CHECK(C.clauses.size() == 3);
  CHECK(containsClause(C, cl({1, 2, 4})));
  CHECK(containsClause(C, cl({1, 3}, {2})));
  CHECK(containsClause(C, cl({1}, {4})));
}

TEST_CASE("resolvent") {
  auto r = resolvent(cl({1, 2}), cl({3}, {2}));
  REQUIRE(r.has_value());
  CHECK(r->first == cl({1, 3}));
  CHECK(r->second == 2);

  CHECK(!resolvent(cl({1, 2}), cl({3, 4})).has_value());
  CHECK(!resolvent(cl({1, 2}), cl({}, {1, 2})).has_value());
  CHECK(!resolvent(cl({1}), cl({1})).has_value());

  auto units = resolvent(cl({1}), cl({}, {1}));
  REQUIRE(units.has_value());
  CHECK(units->first.empty());
  CHECK(units->second == 1);
}

TEST_CASE("full closure on the bundled instances") {
  ClauseSet C = clausal_core(firstInstance());
  ClauseSet closed = full_closure(C);
  CHECK(closed.clauses.size() == 3);
  CHECK(containsClause(closed, cl({1, 2})));
  CHECK(containsClause(closed, cl({1, 3})));
  CHECK(containsClause(closed, cl({1}, {4})));

  BinarySystem P;
  P.n = 2;
  P.rows = {makeRow({{1, ratOf(3)}, {2, ratOf(2)}}, ratOf(1)),
            makeRow({{1, ratOf(-1)}, {2, ratOf(2)}}, ratOf(0))};
  ClauseSet PC = clausal_core(P);
  CHECK(PC.clauses.size() == 2);
  CHECK(full_closure(PC).clauses == std::vector<Clause>{cl({2})});
}

TEST_CASE("full closure finds contradictions") {
  BinarySystem S;
  S.n = 1;
  S.rows = {makeRow({{1, ratOf(1)}}, ratOf(1)),
            makeRow({{1, ratOf(-1)}}, ratOf(0))};
  ClauseSet C = clausal_core(S);
  CHECK(C.clauses.size() == 2);
  CHECK(hasEmptyClause(full_closure(C)));
}

TEST_CASE("input closure of the eight sign patterns") {
  ClauseSet C = makeClauseSet(signPatterns());
  REQUIRE(C.clauses.size() == 8);

  InputClosureResult r = input_closure(C);
  CHECK(r.closure.clauses.size() == 12);
  for (auto [a, b] : {std::pair{2, 3}, {2, 4}, {3, 4}})
    for (int mask = 0; mask < 4; ++mask) {
      Clause c;
      c.pos.insert(1);
      (mask & 2 ? c.neg : c.pos).insert(a);
      (mask & 1 ? c.neg : c.pos).insert(b);
      CAPTURE(clauseStr(c));
      CHECK(containsClause(r.closure, c));
    }

  CHECK(verifyProofDag(r.proof));
  CHECK(!r.proof.steps.empty());

  // two-literal clauses need resolving two derived clauses, which input
  // resolution forbids, but full resolution collapses everything to x1
  CHECK(has_input_proof(C, cl({1, 2, 3})));
  CHECK(!has_input_proof(C, cl({1, 2})));
  CHECK(!has_input_proof(C, cl({1})));
  CHECK(full_closure(C).clauses == std::vector<Clause>{cl({1})});
}

TEST_CASE("input proofs on two-clause cores") {
  ClauseSet C = makeClauseSet({cl({1, 2}), cl({1}, {2})});
  CHECK(has_input_proof(C, cl({1})));
  CHECK(has_input_proof(C, cl({1, 2})));
  CHECK(!has_input_proof(C, cl({2})));

  InputClosureResult r = input_closure(C);
  CHECK(r.closure.clauses == std::vector<Clause>{cl({1})});
  CHECK(verifyProofDag(r.proof));
}

TEST_CASE("proof verification rejects tampering") {
  ClauseSet C = makeClauseSet({cl({1, 2}), cl({1}, {2})});
  InputClosureResult r = input_closure(C);
  REQUIRE(verifyProofDag(r.proof));

  ProofDag bad = r.proof;
  bool tampered = false;
  for (ProofStep& s : bad.steps)
    if (s.parent1 >= 0) {
      s.clause.pos.insert(4);
      tampered = true;
      break;
    }
  REQUIRE(tampered);
  CHECK(!verifyProofDag(bad));

  ProofDag cyclic;
  cyclic.steps.push_back({cl({1}), 0, 0, 2});
  CHECK(!verifyProofDag(cyclic));
}

TEST_CASE("clausesToSystem") {
  ClauseSet C = makeClauseSet({cl({1, 3}), cl({2}, {1})});
  BinarySystem S = clausesToSystem(C, 3);
  CHECK(S.n == 3);
  REQUIRE(S.rows.size() == 2);
  for (const Clause& c : C.clauses)
    CHECK(std::count(S.rows.begin(), S.rows.end(), clause_to_inequality(c)) ==
          1);

  BinarySystem bad = clausesToSystem(makeClauseSet({cl({})}), 2);
  REQUIRE(bad.rows.size() == 1);
  CHECK(bad.rows[0].coeffs.empty());
  CHECK(bad.rows[0].rhs == 1);
}

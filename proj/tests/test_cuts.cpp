#include <doctest.h>

#include "cuts.hpp"

using namespace bincons;

namespace {

Clause cl(std::set<int> pos, std::set<int> neg = {}) {
  Clause c;
  c.pos = std::move(pos);
  c.neg = std::move(neg);
  return c;
}

PartialAssignment pa(std::map<int, int> bind) {
  PartialAssignment a;
  a.bind = std::move(bind);
  return a;
}

BinarySystem firstInstance() {
  BinarySystem S;
  S.n = 4;
  S.rows = {makeRow({{1, ratOf(1)}, {2, ratOf(1)}, {4, ratOf(1)}}, ratOf(1)),
            makeRow({{1, ratOf(1)}, {2, ratOf(-1)}, {3, ratOf(1)}}, ratOf(0)),
            makeRow({{1, ratOf(1)}, {4, ratOf(-1)}}, ratOf(0))};
  return S;
}

std::vector<Rat> pt(std::vector<long> num, long den) {
  std::vector<Rat> p;
  for (long v : num) p.push_back(ratOf(v, den));
  return p;
}

}  // namespace

TEST_CASE("hand-built multiplier certificate verifies") {
  BinarySystem S = firstInstance();
  CutCertificate cert;
  cert.row = {ratOf(1, 4), ratOf(1, 2), ratOf(1, 4)};
  cert.lower = {ratOf(0), ratOf(1, 4), ratOf(1, 2), ratOf(0)};
  cert.upper = {ratOf(0), ratOf(0), ratOf(0), ratOf(0)};
  cert.target = clause_to_inequality(cl({1, 3}));
  cert.combinedRhs = ratOf(1, 4);
  CHECK(verifyCutCertificate(S, cert));

  CutCertificate bad = cert;
  bad.combinedRhs = ratOf(0);
  CHECK(!verifyCutCertificate(S, bad));

  bad = cert;
  bad.combinedRhs = ratOf(5, 4);
  CHECK(!verifyCutCertificate(S, bad));

  bad = cert;
  bad.row[0] = ratOf(1, 2);
  CHECK(!verifyCutCertificate(S, bad));

  bad = cert;
  bad.lower[1] = ratOf(-1, 4);
  CHECK(!verifyCutCertificate(S, bad));

  bad = cert;
  bad.row.pop_back();
  CHECK(!verifyCutCertificate(S, bad));
}

TEST_CASE("certifies the closure clauses of the first instance") {
  BinarySystem S = firstInstance();
  for (const Clause& c : {cl({1, 2}), cl({1, 3})}) {
    CAPTURE(clauseStr(c));
    CgTestResult r = is_cg_cut(S, c);
    CHECK(r.outcome == CgOutcome::Certified);
    REQUIRE(r.certificate.has_value());
    CHECK(verifyCutCertificate(S, *r.certificate));
    CHECK(r.certificate->target == clause_to_inequality(c));
  }
}

TEST_CASE("fractional points separate the two cuts") {
  BinarySystem S = firstInstance();
  LinIneq cut12 = clause_to_inequality(cl({1, 2}));
  LinIneq cut13 = clause_to_inequality(cl({1, 3}));

  std::vector<Rat> p1 = pt({1, 1, 0, 1}, 3);
  std::vector<Rat> p2 = pt({1, 0, 0, 1}, 2);
  std::vector<Rat> p3 = pt({1, 1, 0, 0}, 2);
  for (const auto& p : {p1, p2, p3})
    for (const LinIneq& r : S.rows) CHECK(satisfies(r, p));
  CHECK(!satisfies(cut12, p1));
  CHECK(!satisfies(cut12, p2));
  CHECK(!satisfies(cut13, p3));
}

TEST_CASE("weak clauses are rejected with the multiplier optimum") {
  BinarySystem S = firstInstance();
  for (const Clause& c : {cl({1}), cl({}, {3}), cl({1}, {3})}) {
    CAPTURE(clauseStr(c));
    CgTestResult r = is_cg_cut(S, c);
    CHECK(r.outcome == CgOutcome::TooWeak);
    CHECK(!r.certificate.has_value());
    REQUIRE(r.bestRhs.has_value());
    CHECK(*r.bestRhs <= clause_to_inequality(c).rhs - 1);
  }
}

TEST_CASE("cut test preconditions") {
  BinarySystem S = firstInstance();
  CHECK_THROWS_AS(is_cg_cut(S, cl({})), PreconditionError);
  CHECK_THROWS_AS(is_cg_cut(S, cl({9})), PreconditionError);

  BinarySystem bad;
  bad.n = 1;
  bad.rows = {makeRow({}, ratOf(1))};
  CHECK_THROWS_AS(is_cg_cut(bad, cl({1})), PreconditionError);
}

TEST_CASE("separating an infeasible partial assignment") {
  BinarySystem S = firstInstance();
  DerivedCut dc = derive_cg_cut(S, pa({{1, 0}, {3, 0}}));
  CHECK(dc.cut == cl({1, 3}));
  CHECK(dc.trace.dropped.empty());
  CHECK(verifyCutCertificate(S, dc.certificate));
  CHECK(clauseFalsified(dc.cut, pa({{1, 0}, {3, 0}})));
  CHECK(dc.trace.clauseSum > 0);
  CHECK(dc.trace.clauseSum <= 2);
}

TEST_CASE("derivation drops literals when the separator is strong") {
  BinarySystem S;
  S.n = 2;
  S.rows = {makeRow({{1, ratOf(1)}, {2, ratOf(1)}}, ratOf(1)),
            makeRow({{1, ratOf(1)}, {2, ratOf(-1)}}, ratOf(0))};
  DerivedCut dc = derive_cg_cut(S, pa({{1, 0}}));
  CHECK(dc.cut == cl({1}));
  CHECK(dc.certificate.row == std::vector<Rat>{ratOf(1, 2), ratOf(1, 2)});
  CHECK(dc.certificate.combinedRhs == ratOf(1, 2));
  CHECK(verifyCutCertificate(S, dc.certificate));

  // both variables assigned: the clause-sum minimum is exactly 1, so the
  // full clause survives
  DerivedCut two = derive_cg_cut(S, pa({{1, 0}, {2, 0}}));
  CHECK(two.cut == cl({1, 2}));
  CHECK(two.trace.dropped.empty());
  CHECK(two.trace.clauseSum == 1);
  CHECK(verifyCutCertificate(S, two.certificate));
}

TEST_CASE("strong separators round literals away") {
  BinarySystem S;
  S.n = 2;
  S.rows = {makeRow({{1, ratOf(1)}}, ratOf(1)),
            makeRow({{2, ratOf(1)}}, ratOf(1))};
  DerivedCut dc = derive_cg_cut(S, pa({{1, 0}, {2, 0}}));
  CHECK(dc.trace.clauseSum == 2);
  CHECK(dc.trace.dropped == std::set<int>{1});
  CHECK(dc.cut == cl({2}));
  CHECK(dc.certificate.combinedRhs == ratOf(1));
  CHECK(verifyCutCertificate(S, dc.certificate));
  CHECK(clauseFalsified(dc.cut, pa({{1, 0}, {2, 0}})));
}

TEST_CASE("derivation preconditions") {
  BinarySystem S = firstInstance();
  CHECK_THROWS_AS(derive_cg_cut(S, pa({{1, 0}, {3, 1}})), PreconditionError);
  CHECK_THROWS_AS(derive_cg_cut(S, pa({})), PreconditionError);
  CHECK_THROWS_AS(derive_cg_cut(S, pa({{9, 0}})), PreconditionError);

  BinarySystem bad;
  bad.n = 1;
  bad.rows = {makeRow({}, ratOf(1))};
  CHECK_THROWS_AS(derive_cg_cut(bad, pa({{1, 0}})), PreconditionError);
}

TEST_CASE("cut-based LP-consistency decision") {
  ConsistencyReport good = lp_consistency_via_cg(firstInstance());
  CHECK(good.verdict);

  BinarySystem demo;
  demo.n = 2;
  demo.rows = {makeRow({{1, ratOf(2)}, {2, ratOf(4)}}, ratOf(1)),
               makeRow({{1, ratOf(2)}, {2, ratOf(-4)}}, ratOf(-3))};
  ConsistencyReport r = lp_consistency_via_cg(demo);
  CHECK(!r.verdict);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->bind == std::map<int, int>{{1, 0}});

  BinarySystem empty;
  empty.n = 2;
  CHECK(lp_consistency_via_cg(empty).verdict);

  // with an infeasible relaxation no partial assignment is LP-consistent,
  // so the property holds vacuously
  BinarySystem contra;
  contra.n = 1;
  contra.rows = {makeRow({{1, ratOf(1)}}, ratOf(1)),
                 makeRow({{1, ratOf(-1)}}, ratOf(0))};
  CHECK(lp_consistency_via_cg(contra).verdict);
}

TEST_CASE("cuts versus input proofs on the bundled instances") {
  BinarySystem P;
  P.n = 2;
  P.rows = {makeRow({{1, ratOf(3)}, {2, ratOf(2)}}, ratOf(1)),
            makeRow({{1, ratOf(-1)}, {2, ratOf(2)}}, ratOf(0))};
  EquivalenceReport eq = cut_proof_equivalence(P, 4);
  CHECK(eq.ok());
  CHECK(eq.clausesChecked == 8);

  CHECK_THROWS_AS(cut_proof_equivalence(firstInstance(), 3), CapError);
}

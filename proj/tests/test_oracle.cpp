#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "support/oracles.hpp"

using namespace bincons;

namespace {

BinarySystem firstInstance() {
  BinarySystem S;
  S.n = 4;
  S.rows = {makeRow({{1, ratOf(1)}, {2, ratOf(1)}, {4, ratOf(1)}}, ratOf(1)),
            makeRow({{1, ratOf(1)}, {2, ratOf(-1)}, {3, ratOf(1)}}, ratOf(0)),
            makeRow({{1, ratOf(1)}, {4, ratOf(-1)}}, ratOf(0))};
  return S;
}

BinarySystem pairInstance() {
  BinarySystem S;
  S.n = 2;
  S.rows = {makeRow({{1, ratOf(3)}, {2, ratOf(2)}}, ratOf(1)),
            makeRow({{1, ratOf(-1)}, {2, ratOf(2)}}, ratOf(0))};
  return S;
}

PartialAssignment pa(std::map<int, int> bind) {
  PartialAssignment a;
  a.bind = std::move(bind);
  return a;
}

}  // namespace

TEST_CASE("enumerate_feasible lists exactly the solutions") {
  FeasibleSet F = enumerate_feasible(firstInstance());
  std::vector<std::vector<int>> expected = {
      {0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 0, 1, 1},
      {1, 1, 0, 0}, {1, 1, 0, 1}, {1, 1, 1, 0}, {1, 1, 1, 1}};
  CHECK(F.points == expected);
  CHECK(F.n == 4);

  FeasibleSet G = enumerate_feasible(pairInstance());
  CHECK(G.points == std::vector<std::vector<int>>{{0, 1}, {1, 1}});
}

TEST_CASE("enumerate matches a plain filter") {
  for (int t = 0; t < 60; ++t) {
    std::mt19937_64 g(77 + t);
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 5);
    BinarySystem S = random_system(n, m, 3, RhsPolicy::Any, g());
    FeasibleSet F = enumerate_feasible(S);
    std::vector<std::vector<int>> brute;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> p(n);
      for (int j = 0; j < n; ++j) p[j] = (mask >> (n - 1 - j)) & 1;
      if (satisfiesAll(S, p)) brute.push_back(p);
    }
    CAPTURE(t);
    CHECK(F.points == brute);
  }
}

TEST_CASE("project restricts and deduplicates") {
  FeasibleSet F = enumerate_feasible(firstInstance());
  CHECK(project(F, {1}) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(project(F, {2, 3}) ==
        std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(project(F, {}) == std::vector<std::vector<int>>{{}});

  FeasibleSet empty;
  empty.n = 2;
  CHECK(project(empty, {}).empty());
  CHECK(project(empty, {1}).empty());

  CHECK_THROWS_AS(project(F, {3, 1}), PreconditionError);
  CHECK_THROWS_AS(project(F, {0}), PreconditionError);
}

TEST_CASE("extendsToFeasible") {
  FeasibleSet F = enumerate_feasible(firstInstance());
  CHECK(extendsToFeasible(F, pa({})));
  CHECK(extendsToFeasible(F, pa({{1, 0}})));
  CHECK(!extendsToFeasible(F, pa({{1, 0}, {2, 0}})));
  CHECK(extendsToFeasible(F, pa({{2, 1}, {4, 0}})));
}

TEST_CASE("consistent_with under each relaxation") {
  BinarySystem S = firstInstance();
  PartialAssignment bad = pa({{1, 0}, {2, 0}});

  CHECK(consistent_with(S, bad, Relaxation::CoveredRows));
  CHECK(!consistent_with(S, bad, Relaxation::Exact));
  CHECK(!consistent_with(S, bad, Relaxation::LP));

  PartialAssignment full = pa({{1, 0}, {2, 1}, {3, 1}, {4, 0}});
  CHECK(consistent_with(S, full, Relaxation::CoveredRows));
  CHECK(consistent_with(S, full, Relaxation::Exact));
  CHECK(consistent_with(S, full, Relaxation::LP));

  PartialAssignment fullBad = pa({{1, 0}, {2, 1}, {3, 1}, {4, 1}});
  CHECK(!consistent_with(S, fullBad, Relaxation::CoveredRows));
}

TEST_CASE("LP relaxation check matches enumeration oracle") {
  for (int t = 0; t < 80; ++t) {
    std::mt19937_64 g(500 + t);
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 5);
    BinarySystem S = random_system(n, m, 4, RhsPolicy::Any, g());
    PartialAssignment a;
    for (int j = 1; j <= n; ++j)
      if (g() % 2) a.bind[j] = static_cast<int>(g() % 2);
    CAPTURE(t);
    CHECK(consistent_with(S, a, Relaxation::LP) ==
          testing::feasibleByEnumeration(S, a));
    CHECK(consistent_with(S, a, Relaxation::Exact) ==
          extendsToFeasible(enumerate_feasible(S), a));
  }
}

TEST_CASE("consistency verdicts on the bundled instances") {
  ConsistencyReport r = check(firstInstance(), Property::Consistent);
  CHECK(!r.verdict);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->bind == std::map<int, int>{{1, 0}, {2, 0}});

  CHECK(check(firstInstance(), Property::DomainConsistent).verdict);
  CHECK(check(firstInstance(), Property::LPConsistent).verdict);

  BinarySystem P = pairInstance();
  CHECK(!check(P, Property::Consistent).verdict);
  CHECK(check(P, Property::LPConsistent).verdict);

  ConsistencyReport two = check(P, Property::KConsistent, 2);
  CHECK(!two.verdict);
  REQUIRE(two.witness.has_value());
  CHECK(two.witness->bind == std::map<int, int>{{2, 0}});

  CHECK(check(P, Property::SequentialKConsistent, 1).verdict);
  CHECK(check(P, Property::SequentialKConsistent, 2).verdict);
}

TEST_CASE("inconsistent empty systems") {
  // a row with no variables is covered by every assignment, so 0 >= 1
  // disqualifies them all and consistency holds vacuously; domain
  // consistency ignores covered rows and asks for solution participation
  BinarySystem S;
  S.n = 1;
  S.rows = {makeRow({}, ratOf(1))};
  ConsistencyReport r = check(S, Property::Consistent);
  CHECK(r.verdict);
  CHECK(!r.witness.has_value());
  ConsistencyReport d = check(S, Property::DomainConsistent);
  CHECK(!d.verdict);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->bind == std::map<int, int>{{1, 0}});

  BinarySystem T;
  T.n = 1;
  T.rows = {makeRow({{1, ratOf(1)}}, ratOf(1)),
            makeRow({{1, ratOf(-1)}}, ratOf(0))};
  ConsistencyReport rt = check(T, Property::Consistent);
  CHECK(!rt.verdict);
  REQUIRE(rt.witness.has_value());
  CHECK(rt.witness->bind.empty());
}

TEST_CASE("domain consistency projects singleton domains") {
  BinarySystem S;
  S.n = 2;
  S.rows = {makeRow({{1, ratOf(1)}}, ratOf(1))};
  CHECK(!check(S, Property::DomainConsistent).verdict);
  CHECK(check(S, Property::Consistent).verdict);
}

TEST_CASE("dependency width") {
  BinarySystem P = pairInstance();
  CHECK(dependency_width(P, {1, 2}) == 1);
  CHECK(dependency_width(P, {2, 1}) == 1);

  BinarySystem chain;
  chain.n = 3;
  chain.rows = {makeRow({{1, ratOf(1)}, {2, ratOf(1)}}, ratOf(1)),
                makeRow({{2, ratOf(1)}, {3, ratOf(1)}}, ratOf(1))};
  CHECK(dependency_width(chain, {1, 2, 3}) == 1);
  CHECK(dependency_width(chain, {1, 3, 2}) == 2);

  BinarySystem loose;
  loose.n = 2;
  loose.rows = {makeRow({{1, ratOf(1)}}, ratOf(0))};
  CHECK(dependency_width(loose, {1, 2}) == 0);
  CHECK_THROWS_AS(dependency_width(loose, {1}), PreconditionError);
  CHECK_THROWS_AS(dependency_width(loose, {1, 1}), PreconditionError);
}

TEST_CASE("k-indexed properties validate k") {
  BinarySystem P = pairInstance();
  CHECK_THROWS_AS(check(P, Property::KConsistent, 0), PreconditionError);
  CHECK_THROWS_AS(check(P, Property::KConsistent, 3), PreconditionError);
  CHECK_THROWS_AS(check(P, Property::SequentialLPKConsistent, -1),
                  PreconditionError);
}

TEST_CASE("enumeration caps") {
  BinarySystem S;
  S.n = 5;
  OracleLimits lim;
  lim.enumCap = 4;
  CHECK_THROWS_AS(enumerate_feasible(S, lim), CapError);
  CHECK_THROWS_AS(check(S, Property::Consistent, 0, lim), CapError);
  CHECK_NOTHROW(enumerate_feasible(S));
}

TEST_CASE("generators are deterministic") {
  BinarySystem a = random_system(3, 4, 3, RhsPolicy::ForceFeasible, 99);
  BinarySystem b = random_system(3, 4, 3, RhsPolicy::ForceFeasible, 99);
  CHECK(a.rows == b.rows);
  CHECK(!enumerate_feasible(a).points.empty());

  BinarySystem c = random_system(3, 4, 3, RhsPolicy::ForceFeasible, 100);
  CHECK(a.rows != c.rows);

  for (int t = 0; t < 20; ++t) {
    BinarySystem S =
        random_system(1 + t % 4, 1 + t % 5, 3, RhsPolicy::ForceFeasible,
                      static_cast<std::uint64_t>(t));
    CHECK(!enumerate_feasible(S).points.empty());
    for (const auto& r : S.rows)
      for (const auto& [j, coef] : r.coeffs) {
        CHECK(j >= 1);
        CHECK(j <= S.n);
        CHECK(abs(coef) <= 3);
      }
  }

  auto cs = random_clauses(4, 6, 7);
  auto cs2 = random_clauses(4, 6, 7);
  CHECK(cs == cs2);
  for (const Clause& c : cs) {
    CHECK(!c.empty());
    CHECK_NOTHROW(validateClause(c, 4));
  }
}

TEST_CASE("property names") {
  CHECK(propertyName(Property::Consistent) == "consistent");
  CHECK(propertyName(Property::SequentialLPKConsistent) ==
        "sequentially-lp-k-consistent");
}

#include "suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace bincons {
namespace {

std::string rowsText(const BinarySystem& S) {
  std::ostringstream os;
  os << "n=" << S.n << " {";
  for (std::size_t i = 0; i < S.rows.size(); ++i) {
    if (i) os << "; ";
    os << ineqStr(S.rows[i]);
  }
  os << "}";
  return os.str();
}

struct InstanceLog {
  SuiteReport& rep;
  std::uint64_t seed;
  const BinarySystem& S;
  void fail(const std::string& what) {
    ++rep.violations;
    rep.notes.push_back("seed " + std::to_string(seed) + ", " + rowsText(S) +
                        ": " + what);
  }
};

// subsets ascending by size then lexicographically, values with the first
// index most significant, matching the oracle's canonical scan
template <class F>
void forEachAssignment(int n, F&& f) {
  for (int s = 0; s <= n; ++s) {
    std::vector<int> sub(s);
    for (int i = 0; i < s; ++i) sub[i] = i + 1;
    for (;;) {
      for (unsigned mask = 0; mask < (1u << s); ++mask) {
        PartialAssignment a;
        for (int t = 0; t < s; ++t)
          a.bind[sub[t]] = (mask >> (s - 1 - t)) & 1u ? 1 : 0;
        f(a);
      }
      int i = s - 1;
      while (i >= 0 && sub[i] == n - (s - 1 - i)) --i;
      if (i < 0) break;
      ++sub[i];
      for (int t = i + 1; t < s; ++t) sub[t] = sub[t - 1] + 1;
    }
  }
}

template <class F>
void forEachClauseHere(int n, F&& f) {
  forEachAssignment(n, [&](const PartialAssignment& a) {
    if (a.bind.empty()) return;
    Clause c;
    for (const auto& [j, v] : a.bind) (v ? c.neg : c.pos).insert(j);
    f(c);
  });
}

bool impliedByPoints(const std::vector<std::vector<int>>& pts,
                     const Clause& c) {
  return std::all_of(pts.begin(), pts.end(), [&](const std::vector<int>& p) {
    return clauseSatisfied(c, p);
  });
}

}  // namespace

SuiteReport projection_suite(int instances, std::uint64_t baseSeed) {
  SuiteReport rep;
  rep.name = "projection";
  OracleLimits lim;
  for (int t = 0; t < instances; ++t) {
    std::mt19937_64 g(baseSeed + t);
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 5);
    RhsPolicy pol = t % 3 == 2 ? RhsPolicy::Any : RhsPolicy::ForceFeasible;
    BinarySystem S = random_system(n, m, 3, pol, g());
    ++rep.instances;
    InstanceLog log{rep, baseSeed + t, S};

    FeasibleSet F = enumerate_feasible(S, lim);
    std::map<std::vector<int>, std::set<std::vector<int>>> proj;
    bool equal = true;
    std::optional<PartialAssignment> firstGap;
    forEachAssignment(S.n, [&](const PartialAssignment& a) {
      ++rep.checks;
      std::vector<int> J, v;
      for (const auto& [j, val] : a.bind) {
        J.push_back(j);
        v.push_back(val);
      }
      auto [it, fresh] = proj.try_emplace(J);
      if (fresh) {
        auto p = project(F, J);
        it->second.insert(p.begin(), p.end());
      }
      bool covered = consistent_with(S, a, Relaxation::CoveredRows, lim);
      bool inProj = it->second.count(v) != 0;
      if (inProj && !covered)
        log.fail("projection point fails the covered-row check at " +
                 paStr(a));
      if (covered && !inProj && equal) {
        equal = false;
        firstGap = a;
      }
    });

    ConsistencyReport oracle = check(S, Property::Consistent, 0, lim);
    if (oracle.verdict != equal)
      log.fail("consistency verdict disagrees with projection equality");
    else if (!equal && oracle.witness &&
             !(oracle.witness->bind == firstGap->bind))
      log.fail("witness mismatch: oracle " + paStr(*oracle.witness) +
               " vs projection " + paStr(*firstGap));

    bool domains = true;
    for (int j = 1; j <= S.n; ++j)
      domains = domains && project(F, {j}).size() == 2;
    ++rep.checks;
    if (check(S, Property::DomainConsistent, 0, lim).verdict != domains)
      log.fail("domain-consistency verdict disagrees with projections");
  }
  return rep;
}

SuiteReport closure_suite(int instances, std::uint64_t baseSeed) {
  SuiteReport rep;
  rep.name = "closure";
  OracleLimits lim;
  for (int t = 0; t < instances; ++t) {
    std::mt19937_64 g(baseSeed + t);
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 5);
    RhsPolicy pol = t % 3 == 2 ? RhsPolicy::Any : RhsPolicy::ForceFeasible;
    BinarySystem S = random_system(n, m, 3, pol, g());
    ++rep.instances;
    InstanceLog log{rep, baseSeed + t, S};

    FeasibleSet F = enumerate_feasible(S, lim);
    ClauseSet SC = clausal_core(S);
    ClauseSet closure = full_closure(SC);
    for (const auto& c : closure.clauses) {
      ++rep.checks;
      if (!c.empty() && !impliedByPoints(F.points, c))
        log.fail("closure clause not implied: " + clauseStr(c));
    }

    BinarySystem aug = S;
    BinarySystem cl = clausesToSystem(closure, S.n);
    aug.rows.insert(aug.rows.end(), cl.rows.begin(), cl.rows.end());
    ++rep.checks;
    if (enumerate_feasible(aug, lim).points != F.points) {
      log.fail("closure changed the feasible set");
      continue;
    }
    ConsistencyReport after = check(aug, Property::Consistent, 0, lim);
    ++rep.checks;
    if (!after.verdict)
      log.fail("augmented system inconsistent at " +
               (after.witness ? paStr(*after.witness) : std::string("?")));

    if (check(S, Property::Consistent, 0, lim).verdict) {
      forEachClauseHere(S.n, [&](const Clause& c) {
        ++rep.checks;
        if (impliedByPoints(F.points, c) && !absorbedBy(SC, c))
          log.fail("implied clause missing from the clausal core: " +
                   clauseStr(c));
      });
    }
  }
  return rep;
}

SuiteReport cut_proof_suite(int instances, std::uint64_t baseSeed) {
  SuiteReport rep;
  rep.name = "cut-proof";
  for (int t = 0; t < instances; ++t) {
    std::mt19937_64 g(baseSeed + t);
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 6);
    BinarySystem S = clausesToSystem(makeClauseSet(random_clauses(n, m, g())), n);
    ++rep.instances;
    InstanceLog log{rep, baseSeed + t, S};

    EquivalenceReport eq = cut_proof_equivalence(S, 4);
    rep.checks += eq.clausesChecked;
    for (const auto& d : eq.discrepancies) log.fail(d);
  }
  return rep;
}

SuiteReport cut_characterization_suite(int instances, std::uint64_t baseSeed) {
  SuiteReport rep;
  rep.name = "cut-characterization";
  OracleLimits lim;
  for (int t = 0; t < instances; ++t) {
    std::mt19937_64 g(baseSeed + t);
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 5);
    BinarySystem S = random_system(n, m, 4, RhsPolicy::ForceFeasible, g());
    ++rep.instances;
    InstanceLog log{rep, baseSeed + t, S};

    forEachAssignment(S.n, [&](const PartialAssignment& a) {
      if (a.bind.empty()) return;
      ++rep.checks;
      try {
        if (consistent_with(S, a, Relaxation::LP, lim)) {
          Clause ca;
          for (const auto& [j, v] : a.bind) (v ? ca.neg : ca.pos).insert(j);
          if (is_cg_cut(S, ca).outcome == CgOutcome::Certified)
            log.fail("relaxation-consistent assignment " + paStr(a) +
                     " violates the certified cut " + clauseStr(ca));
        } else {
          DerivedCut dc = derive_cg_cut(S, a);
          if (!verifyCutCertificate(S, dc.certificate))
            log.fail("separation certificate fails recheck at " + paStr(a));
          else if (!clauseFalsified(dc.cut, a))
            log.fail("separated cut not violated at " + paStr(a));
        }
      } catch (const Error& e) {
        log.fail(std::string("exception at ") + paStr(a) + ": " + e.what());
      }
    });
  }
  return rep;
}

SuiteReport implied_cuts_suite(int instances, std::uint64_t baseSeed) {
  SuiteReport rep;
  rep.name = "implied-cuts";
  OracleLimits lim;
  for (int t = 0; t < instances; ++t) {
    std::mt19937_64 g(baseSeed + t);
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 5);
    RhsPolicy pol = t % 3 == 2 ? RhsPolicy::Any : RhsPolicy::ForceFeasible;
    BinarySystem S = random_system(n, m, 4, pol, g());
    ++rep.instances;
    InstanceLog log{rep, baseSeed + t, S};

    ++rep.checks;
    try {
      ConsistencyReport viaCuts = lp_consistency_via_cg(S, lim);
      ConsistencyReport oracle = check(S, Property::LPConsistent, 0, lim);
      if (viaCuts.verdict != oracle.verdict) {
        log.fail(std::string("cut path says ") +
                 (viaCuts.verdict ? "yes" : "no") + ", oracle says " +
                 (oracle.verdict ? "yes" : "no"));
        continue;
      }
      if (!oracle.verdict && oracle.witness) {
        FeasibleSet F = enumerate_feasible(S, lim);
        if (!consistent_with(S, *oracle.witness, Relaxation::LP, lim) ||
            extendsToFeasible(F, *oracle.witness))
          log.fail("oracle witness fails recheck: " + paStr(*oracle.witness));
      }
    } catch (const Error& e) {
      log.fail(std::string("exception: ") + e.what());
    }
  }
  return rep;
}

SuiteReport sequential_lift_suite(int instances, std::uint64_t baseSeed) {
  SuiteReport rep;
  rep.name = "sequential-lift";
  OracleLimits lim;
  FmOptions fop;
  fop.lpPrune = true;
  for (int t = 0; t < instances; ++t) {
    std::mt19937_64 g(baseSeed + t);
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 4);
    BinarySystem S = random_system(n, m, 3, RhsPolicy::ForceFeasible, g());
    int k = 1 + static_cast<int>(g() % std::min(n, 3));
    ++rep.instances;
    InstanceLog log{rep, baseSeed + t, S};

    FeasibleSet F = enumerate_feasible(S, lim);
    for (ProjectionMode mode :
         {ProjectionMode::Prefix, ProjectionMode::ProductOnly}) {
      const char* tag =
          mode == ProjectionMode::Prefix ? "prefix" : "product-only";
      ++rep.checks;
      try {
        BinarySystem T = sequentialize(S, k, mode, fop);
        if (enumerate_feasible(T, lim).points != F.points)
          log.fail(std::string(tag) + " k=" + std::to_string(k) +
                   " changed the feasible set");
        else if (!check(T, Property::SequentialLPKConsistent, k, lim).verdict)
          log.fail(std::string(tag) + " k=" + std::to_string(k) +
                   " did not achieve the level");
      } catch (const Error& e) {
        log.fail(std::string(tag) + " exception: " + e.what());
      }
    }
  }
  return rep;
}

SuiteReport no_backtrack_suite(int instances, std::uint64_t baseSeed) {
  NoBacktrackReport nb = no_backtrack_theorem_suite(instances, baseSeed);
  SuiteReport rep;
  rep.name = "no-backtrack";
  rep.instances = nb.instances;
  rep.checks = nb.applied;
  rep.violations = nb.violations;
  rep.notes = nb.notes;
  return rep;
}

std::vector<std::string> suiteNames() {
  return {"projection",           "closure",        "cut-proof",
          "cut-characterization", "implied-cuts",   "sequential-lift",
          "no-backtrack"};
}

SuiteReport runSuite(const std::string& name, int instances,
                     std::uint64_t baseSeed) {
  if (name == "projection") return projection_suite(instances, baseSeed);
  if (name == "closure") return closure_suite(instances, baseSeed);
  if (name == "cut-proof") return cut_proof_suite(instances, baseSeed);
  if (name == "cut-characterization")
    return cut_characterization_suite(instances, baseSeed);
  if (name == "implied-cuts") return implied_cuts_suite(instances, baseSeed);
  if (name == "sequential-lift")
    return sequential_lift_suite(instances, baseSeed);
  if (name == "no-backtrack") return no_backtrack_suite(instances, baseSeed);
  if (name == "all") {
    SuiteReport all;
    all.name = "all";
    for (const auto& one : suiteNames()) {
      SuiteReport r = runSuite(one, instances, baseSeed);
      all.instances += r.instances;
      all.checks += r.checks;
      all.violations += r.violations;
      for (const auto& note : r.notes)
        all.notes.push_back(r.name + ": " + note);
    }
    return all;
  }
  throw UsageError("unknown suite: " + name);
}

}  // namespace bincons

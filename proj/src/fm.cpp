#include "fm.hpp"

#include <algorithm>

namespace bincons {
namespace {

struct Work {
  LinIneq row;
  std::map<std::size_t, Rat> mult;
};

// Positive scale landing the coefficients on coprime integers, applied to
// the multipliers as well so provenance stays exact. Trivially true rows
// (no variables, rhs <= 0) vanish; contradictions normalize to 0 >= 1.
std::optional<Work> canonWork(LinIneq row, std::map<std::size_t, Rat> mult) {
  row = makeRow(std::move(row.coeffs), std::move(row.rhs));
  Rat scale(1);
  if (row.coeffs.empty()) {
    if (row.rhs <= 0) return std::nullopt;
    scale = 1 / row.rhs;
  } else {
    Int L(1), G(0);
    for (const auto& [j, c] : row.coeffs) {
      (void)j;
      Int d = c.get_den();
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& [j, c] : row.coeffs) {
      (void)j;
      Int z = c.get_num() * (L / c.get_den());
      mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), z.get_mpz_t());
    }
    scale = Rat(L, G);
    scale.canonicalize();
  }
  if (scale != 1) {
    for (auto& [j, c] : row.coeffs) {
      (void)j;
      c *= scale;
    }
    row.rhs *= scale;
    for (auto& [i, u] : mult) {
      (void)i;
      u *= scale;
    }
  }
  return Work{std::move(row), std::move(mult)};
}

using CoeffIndex = std::map<std::map<int, Rat>, std::size_t>;

void addRow(std::vector<Work>& dst, CoeffIndex& index, Work w,
            std::size_t rowCap) {
  auto it = index.find(w.row.coeffs);
  if (it == index.end()) {
    index.emplace(w.row.coeffs, dst.size());
    dst.push_back(std::move(w));
  } else if (w.row.rhs > dst[it->second].row.rhs) {
    dst[it->second] = std::move(w);
  }
  if (dst.size() > rowCap)
    throw CapError("row cap exceeded during elimination");
}

int maxVarOf(const std::vector<Work>& rows) {
  int n = 0;
  for (const auto& w : rows)
    if (!w.row.coeffs.empty()) n = std::max(n, w.row.coeffs.rbegin()->first);
  return n;
}

void lpPruneRows(std::vector<Work>& cur) {
  int n = maxVarOf(cur);
  if (n == 0) return;
  for (std::size_t i = 0; i < cur.size();) {
    std::vector<LinIneq> others;
    others.reserve(cur.size() - 1);
    for (std::size_t k = 0; k < cur.size(); ++k)
      if (k != i) others.push_back(cur[k].row);
    if (rowsImply(others, n, cur[i].row))
      cur.erase(cur.begin() + i);
    else
      ++i;
  }
}

}  // namespace

LinIneq canonicalRow(const LinIneq& a) {
  auto w = canonWork(a, {});
  if (w) return std::move(w->row);
  return LinIneq{{}, 0};
}

FmResult fmEliminate(const std::vector<LinIneq>& input,
                     const std::vector<int>& tier1,
                     const std::vector<int>& tier2, const FmOptions& opt) {
  std::vector<Work> cur;
  {
    CoeffIndex index;
    for (std::size_t i = 0; i < input.size(); ++i)
      if (auto w = canonWork(input[i], {{i, Rat(1)}}))
        addRow(cur, index, std::move(*w), opt.rowCap);
  }

  for (const auto* tier : {&tier1, &tier2}) {
    std::set<int> remain(tier->begin(), tier->end());
    while (!remain.empty()) {
      int z = 0;
      std::size_t zCount = 0;
      for (int cand : remain) {
        std::size_t count = 0;
        for (const auto& w : cur) count += w.row.coeffs.count(cand);
        if (z == 0 || count < zCount) {
          z = cand;
          zCount = count;
        }
      }
      remain.erase(z);

      std::vector<const Work*> pos, neg;
      std::vector<Work> next;
      CoeffIndex index;
      for (const auto& w : cur) {
        auto it = w.row.coeffs.find(z);
        if (it == w.row.coeffs.end())
          addRow(next, index, w, opt.rowCap);
        else if (it->second > 0)
          pos.push_back(&w);
        else
          neg.push_back(&w);
      }
      for (const Work* p : pos)
        for (const Work* q : neg) {
          Rat lp = -q->row.coeffs.at(z);
          Rat lq = p->row.coeffs.at(z);
          LinIneq r;
          for (const auto& [j, c] : p->row.coeffs) r.coeffs[j] += lp * c;
          for (const auto& [j, c] : q->row.coeffs) r.coeffs[j] += lq * c;
          r.rhs = lp * p->row.rhs + lq * q->row.rhs;
          std::map<std::size_t, Rat> mult;
          for (const auto& [i, u] : p->mult) mult[i] += lp * u;
          for (const auto& [i, u] : q->mult) mult[i] += lq * u;
          if (auto w = canonWork(std::move(r), std::move(mult)))
            addRow(next, index, std::move(*w), opt.rowCap);
        }
      cur = std::move(next);
      if (opt.lpPrune) lpPruneRows(cur);
    }
  }

  std::sort(cur.begin(), cur.end(),
            [](const Work& a, const Work& b) { return ineqLess(a.row, b.row); });
  FmResult out;
  out.rows.reserve(cur.size());
  for (auto& w : cur)
    out.rows.push_back(FmRow{std::move(w.row), std::move(w.mult)});
  return out;
}

std::vector<LinIneq> hull_of_points(const std::vector<std::vector<Rat>>& pts,
                                    int numVars) {
  if (numVars < 1) throw PreconditionError("hull needs at least one variable");
  if (pts.empty()) return {LinIneq{{}, 1}};
  for (const auto& p : pts)
    if (p.size() != static_cast<std::size_t>(numVars))
      throw PreconditionError("hull point has wrong dimension");

  const int t = static_cast<int>(pts.size());
  auto lam = [&](int i) { return numVars + 1 + i; };  // weight variables

  std::vector<LinIneq> rows;
  for (int j = 1; j <= numVars; ++j) {
    LinIneq lo, hi;
    lo.coeffs[j] = 1;
    hi.coeffs[j] = -1;
    for (int i = 0; i < t; ++i) {
      const Rat& pj = pts[i][j - 1];
      if (pj != 0) {
        lo.coeffs[lam(i)] = -pj;
        hi.coeffs[lam(i)] = pj;
      }
    }
    rows.push_back(makeRow(std::move(lo.coeffs), 0));
    rows.push_back(makeRow(std::move(hi.coeffs), 0));
  }
  LinIneq sumLo, sumHi;
  for (int i = 0; i < t; ++i) {
    sumLo.coeffs[lam(i)] = 1;
    sumHi.coeffs[lam(i)] = -1;
  }
  sumLo.rhs = 1;
  sumHi.rhs = -1;
  rows.push_back(std::move(sumLo));
  rows.push_back(std::move(sumHi));
  for (int i = 0; i < t; ++i) rows.push_back(LinIneq{{{lam(i), 1}}, 0});

  std::vector<int> tier1;
  for (int i = 0; i < t; ++i) tier1.push_back(lam(i));
  FmOptions opt;
  opt.lpPrune = true;
  auto res = fmEliminate(rows, tier1, {}, opt);
  std::vector<LinIneq> out;
  out.reserve(res.rows.size());
  for (auto& r : res.rows) out.push_back(std::move(r.row));
  return out;
}

bool rowsImply(const std::vector<LinIneq>& rows, int numVars,
               const LinIneq& target) {
  LpProblem p;
  p.numVars = numVars;
  p.rows = rows;
  p.bounds.assign(numVars, VarBounds{std::nullopt, std::nullopt});
  p.objective = target.coeffs;
  p.sense = LpSense::Minimize;
  auto out = lp_optimize(p);
  if (out.status == LpStatus::Infeasible) return true;
  if (out.status == LpStatus::Unbounded) return false;
  return *out.value >= target.rhs;
}

bool sameSolutionSet(const std::vector<LinIneq>& A,
                     const std::vector<LinIneq>& B, int numVars) {
  for (const auto& r : B)
    if (!rowsImply(A, numVars, r)) return false;
  for (const auto& r : A)
    if (!rowsImply(B, numVars, r)) return false;
  return true;
}

}  // namespace bincons

#include "einsnil/derivations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace einsnil {

namespace {

inline int cell(int m, int k, int n) { return m * n + k; }  // 0-based

}  // namespace

DerivationSpace derivation_space(const LieAlgebra& l) {
  const int n = l.dim();
  // Unknowns D[m][k] (column action), cell index m*n + k. For each pair i < j
  // and output coordinate m:
  //   sum_k C_ij^k D_mk - sum_l D_li C_lj^m - sum_l D_lj C_il^m = 0.
  std::vector<SparseRow> rows;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      SparseVec bij = l.bracket(i, j);
      for (int m = 1; m <= n; ++m) {
        std::map<int, Scalar> row;
        auto add = [&](int mm, int kk, const Scalar& c) {
          auto [it, fresh] = row.try_emplace(cell(mm - 1, kk - 1, n), Scalar());
          it->second += c;
          (void)fresh;
        };
        for (const auto& [k, c] : bij) add(m, k, c);
        for (int t = 1; t <= n; ++t) {
          Scalar c1 = l.coeff(t, j, m);
          if (!c1.is_zero()) add(t, i, -c1);
          Scalar c2 = l.coeff(i, t, m);
          if (!c2.is_zero()) add(t, j, -c2);
        }
        SparseRow sr;
        for (auto& [c, v] : row)
          if (!v.is_zero()) sr.emplace_back(c, std::move(v));
        if (!sr.empty()) rows.push_back(std::move(sr));
      }
    }
  }
  std::vector<Row> flat = null_space(rows, n * n);
  DerivationSpace out;
  out.n = n;
  for (auto& v : flat) {
    DerivationMatrix d(n, Row(n, Scalar()));
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) d[m][k] = std::move(v[cell(m, k, n)]);
    out.basis.push_back(std::move(d));
  }
  return out;
}

bool is_derivation(const LieAlgebra& l, const DerivationMatrix& d) {
  const int n = l.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int m = 1; m <= n; ++m) {
        Scalar lhs;
        for (const auto& [k, c] : l.bracket(i, j)) lhs += c * d[m - 1][k - 1];
        Scalar rhs;
        for (int t = 1; t <= n; ++t) {
          rhs += d[t - 1][i - 1] * l.coeff(t, j, m);
          rhs += d[t - 1][j - 1] * l.coeff(i, t, m);
        }
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

PreEinstein pre_einstein(const LieAlgebra& l, const DerivationSpace& der) {
  const int n = l.dim();
  Matrix a;
  Row b;
  // Diagonal derivation constraints: phi_i + phi_j - phi_k = 0 on the support.
  for (const auto& [t, c] : l.brackets()) {
    Row row(n, Scalar());
    row[t.i - 1] += Scalar(1);
    row[t.j - 1] += Scalar(1);
    row[t.k - 1] -= Scalar(1);
    a.push_back(std::move(row));
    b.push_back(Scalar());
  }
  // Trace constraints against the full Der basis: sum_i phi_i psi_ii = Tr psi.
  for (const auto& psi : der.basis) {
    Row row(n, Scalar());
    Scalar tr;
    for (int i = 0; i < n; ++i) {
      row[i] = psi[i][i];
      tr += psi[i][i];
    }
    a.push_back(std::move(row));
    b.push_back(std::move(tr));
  }
  LinearSolution sol = solve_exact(std::move(a), b);
  if (sol.outcome == SolveOutcome::Inconsistent)
    throw NotTorusAdapted(
        "basis not torus-adapted: no diagonal pre-Einstein derivation in this basis");
  if (sol.outcome == SolveOutcome::Underdetermined) {
    std::ostringstream os;
    os << "underdetermined: diagonal pre-Einstein solution space has dimension " << sol.freedom;
    throw UnderdeterminedTorus(os.str(), sol.freedom);
  }
  PreEinstein pe;
  pe.diag.reserve(n);
  for (const auto& x : sol.x) {
    if (!x.is_rational())
      throw AlgebraError("pre-Einstein solve produced an irrational eigenvalue");
    pe.diag.push_back(x.rat());
  }
  pe.positive = std::all_of(pe.diag.begin(), pe.diag.end(), [](const Rational& q) { return q > 0; });
  if (pe.positive) {
    pe.type = eigenvalue_type(pe.diag);
    pe.simple =
        std::all_of(pe.type.multiplicities.begin(), pe.type.multiplicities.end(),
                    [](int m) { return m == 1; });
  }
  return pe;
}

PreEinstein pre_einstein(const LieAlgebra& l) { return pre_einstein(l, derivation_space(l)); }

EigenType eigenvalue_type(const std::vector<Rational>& diag) {
  for (const auto& q : diag)
    if (q <= 0) throw AlgebraError("eigenvalue_type requires positive eigenvalues");
  mpz_class den = 1;
  for (const auto& q : diag) den = lcm(den, q.get_den());
  std::vector<mpz_class> ints;
  ints.reserve(diag.size());
  for (const auto& q : diag) ints.push_back(q.get_num() * (den / q.get_den()));
  mpz_class g = 0;
  for (const auto& v : ints) g = gcd(g, v);
  std::vector<long> nat;
  nat.reserve(ints.size());
  for (const auto& v : ints) nat.push_back(mpz_class(v / g).get_si());
  std::vector<long> sorted = nat;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  EigenType t;
  t.values = sorted;
  for (long v : sorted)
    t.multiplicities.push_back(static_cast<int>(std::count(nat.begin(), nat.end(), v)));
  return t;
}

NecessaryReport necessary_condition(const LieAlgebra& l, const DerivationSpace& der,
                                    const PreEinstein& phi) {
  const int n = l.dim();
  NecessaryReport rep;
  rep.phi_positive =
      std::all_of(phi.diag.begin(), phi.diag.end(), [](const Rational& q) { return q > 0; });
  std::set<Rational> weights;
  for (const auto& psi : der.basis) {
    for (int m = 0; m < n; ++m) {
      for (int k = 0; k < n; ++k) {
        if (psi[m][k].is_zero()) continue;
        weights.insert(phi.diag[m] - phi.diag[k]);
      }
    }
  }
  rep.weights.assign(weights.begin(), weights.end());
  rep.ad_phi_nonneg =
      std::all_of(rep.weights.begin(), rep.weights.end(), [](const Rational& w) { return w >= 0; });
  return rep;
}

}  // namespace einsnil

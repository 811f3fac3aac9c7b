#include "einsnil/alpha_system.hpp"

#include <stdexcept>

namespace einsnil {

AlphaSystem AlphaSystem::from_algebra(const LieAlgebra& l, const PreEinstein& phi) {
  if (!phi.simple)
    throw AlgebraError("Theorem 1 inapplicable: pre-Einstein spectrum is not simple");
  if (l.brackets().empty()) throw AlgebraError("no roots: the algebra is abelian");
  std::vector<BracketKey> triples;
  triples.reserve(l.brackets().size());
  for (const auto& [t, c] : l.brackets()) triples.push_back(t);  // map order = lex
  return from_support(l.dim(), std::move(triples));
}

AlphaSystem AlphaSystem::from_support(int n, std::vector<BracketKey> triples) {
  if (triples.empty()) throw AlgebraError("no roots: empty support");
  AlphaSystem s;
  s.n_ = n;
  s.triples_ = std::move(triples);
  for (const auto& t : s.triples_) {
    if (t.i < 1 || t.i >= t.j || t.j > n || t.k < 1 || t.k > n)
      throw AlgebraError("bad support triple");
  }
  s.finish();
  return s;
}

namespace {

// Entry r of alpha_t as a small integer (+1 at i and j, -1 at k, additive).
int alpha_entry(const BracketKey& t, int r1) {
  int v = 0;
  if (r1 == t.i) ++v;
  if (r1 == t.j) ++v;
  if (r1 == t.k) --v;
  return v;
}

}  // namespace

void AlphaSystem::finish() {
  const int nn = count();
  u_.assign(nn, std::vector<long>(nn, 0));
  for (int a = 0; a < nn; ++a) {
    for (int b = a; b < nn; ++b) {
      long dot = 0;
      // alphas touch at most 3 distinct coordinates each
      const BracketKey& ta = triples_[a];
      int seen[3] = {ta.i, ta.j, ta.k};
      for (int s = 0; s < 3; ++s) {
        bool dup = false;
        for (int q = 0; q < s; ++q) dup = dup || seen[q] == seen[s];
        if (!dup) dot += alpha_entry(ta, seen[s]) * alpha_entry(triples_[b], seen[s]);
      }
      u_[a][b] = u_[b][a] = dot;
    }
  }
  // Projection p of the origin onto the affine span: p = Y w with
  //   2 U w - mu [1] = 0,  [1]^t w = 1   (KKT system, any solution works).
  Matrix kkt;
  Row rhs;
  for (int r = 0; r < nn; ++r) {
    Row row(nn + 1, Scalar());
    for (int c = 0; c < nn; ++c) row[c] = Scalar(2 * u_[r][c]);
    row[nn] = Scalar(-1);
    kkt.push_back(std::move(row));
    rhs.push_back(Scalar());
  }
  Row ones(nn + 1, Scalar(1));
  ones[nn] = Scalar();
  kkt.push_back(std::move(ones));
  rhs.push_back(Scalar(1));
  // The KKT system can be underdetermined (singular U); reduce and take any
  // particular solution.
  const int cols = nn + 1;
  for (size_t r = 0; r < kkt.size(); ++r) kkt[r].push_back(rhs[r]);
  std::vector<int> piv = rref(kkt, cols);
  for (size_t r = piv.size(); r < kkt.size(); ++r)
    if (!kkt[r][cols].is_zero()) throw AlgebraError("projection KKT system inconsistent");
  Row w(nn, Scalar());
  for (size_t r = 0; r < piv.size(); ++r)
    if (piv[r] < nn) w[piv[r]] = kkt[r][cols];
  p_.assign(n_, Rational(0));
  for (int j = 0; j < nn; ++j) {
    const Rational& wj = w[j].rat();
    const BracketKey& t = triples_[j];
    p_[t.i - 1] += wj;
    p_[t.j - 1] += wj;
    p_[t.k - 1] -= wj;
  }
  p_norm2_ = 0;
  for (const auto& x : p_) p_norm2_ += x * x;
}

Rational AlphaSystem::pair_with_alpha(const std::vector<Rational>& v, int j) const {
  const BracketKey& t = triples_[j];
  return v[t.i - 1] + v[t.j - 1] - v[t.k - 1];
}

std::vector<Rational> AlphaSystem::combine(const std::vector<Rational>& w) const {
  std::vector<Rational> out(n_, Rational(0));
  for (int j = 0; j < count(); ++j) {
    const BracketKey& t = triples_[j];
    out[t.i - 1] += w[j];
    out[t.j - 1] += w[j];
    out[t.k - 1] -= w[j];
  }
  return out;
}

int solution_polytope_dim(const AlphaSystem& s) {
  Matrix m;
  for (const auto& row : s.gram()) {
    Row r;
    r.reserve(row.size());
    for (long v : row) r.push_back(Scalar(v));
    m.push_back(std::move(r));
  }
  return s.count() - rank(std::move(m), s.count());
}

}  // namespace einsnil

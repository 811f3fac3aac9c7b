#pragma once

#include <vector>

#include "einsnil/derivations.hpp"
#include "einsnil/lie_algebra.hpp"

namespace einsnil {

/// The root-vector system of Theorem 1: one alpha_ij^k = f_i + f_j - f_k per
/// stored nonzero structure constant (support only), the Gram matrix
/// U = Y^t Y, and the projection p of the origin onto the affine span of F.
class AlphaSystem {
 public:
  /// Canonical construction: triples in lexicographic (i, j, k) order.
  /// Requires a simple, positive pre-Einstein spectrum and a nonempty support.
  static AlphaSystem from_algebra(const LieAlgebra& l, const PreEinstein& phi);

  /// Fixture/support construction; keeps the given triple order verbatim.
  static AlphaSystem from_support(int n, std::vector<BracketKey> triples);

  int n() const { return n_; }
  int count() const { return static_cast<int>(triples_.size()); }  // N = #F
  const std::vector<BracketKey>& triples() const { return triples_; }
  const std::vector<std::vector<long>>& gram() const { return u_; }
  const std::vector<Rational>& projection() const { return p_; }
  const Rational& projection_norm2() const { return p_norm2_; }

  /// (v, alpha_j) for a rational n-vector v.
  Rational pair_with_alpha(const std::vector<Rational>& v, int j) const;
  /// Y w for a rational N-vector w.
  std::vector<Rational> combine(const std::vector<Rational>& w) const;

 private:
  AlphaSystem() = default;
  void finish();  // builds U and p from triples_

  int n_ = 0;
  std::vector<BracketKey> triples_;
  std::vector<std::vector<long>> u_;
  std::vector<Rational> p_;
  Rational p_norm2_;
};

/// Affine dimension of { v : U v = [1]_N }, i.e. N - rank(U), exact.
int solution_polytope_dim(const AlphaSystem& s);

}  // namespace einsnil

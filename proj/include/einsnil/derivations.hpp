#pragma once

#include <vector>

#include "einsnil/lie_algebra.hpp"
#include "einsnil/linalg.hpp"

namespace einsnil {

/// n x n matrix over Scalar in column-action convention: D e_k = sum_m D[m][k] e_m.
using DerivationMatrix = Matrix;

struct DerivationSpace {
  int n = 0;
  std::vector<DerivationMatrix> basis;  // each passes the Leibniz check exactly
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Exact basis of Der(L), the null space of the Leibniz linear system.
DerivationSpace derivation_space(const LieAlgebra& l);

bool is_derivation(const LieAlgebra& l, const DerivationMatrix& d);

struct EigenType {
  std::vector<long> values;  // sorted distinct, coprime naturals
  std::vector<int> multiplicities;
  friend bool operator==(const EigenType&, const EigenType&) = default;
};

struct PreEinstein {
  std::vector<Rational> diag;  // phi = diag(phi_1, ..., phi_n), always rational
  bool positive = false;       // all entries > 0
  bool simple = false;         // positive with pairwise-distinct entries
  EigenType type;              // set when positive
};

struct NotTorusAdapted : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct UnderdeterminedTorus : AlgebraError {
  int freedom;
  UnderdeterminedTorus(const std::string& msg, int f) : AlgebraError(msg), freedom(f) {}
};

/// The diagonal pre-Einstein derivation: solves, over Q, the combined system
/// { phi_i + phi_j = phi_k on the bracket support } and
/// { Tr(phi o psi) = Tr psi for every basis element psi of Der(L) }.
/// Throws NotTorusAdapted when no diagonal solution exists and
/// UnderdeterminedTorus when the diagonal solution is not unique.
PreEinstein pre_einstein(const LieAlgebra& l, const DerivationSpace& der);
PreEinstein pre_einstein(const LieAlgebra& l);

/// Scales positive rationals to coprime naturals with multiplicities.
/// Throws AlgebraError if some entry is <= 0.
EigenType eigenvalue_type(const std::vector<Rational>& diag);

struct NecessaryReport {
  bool phi_positive = false;
  bool ad_phi_nonneg = false;
  std::vector<Rational> weights;  // sorted distinct ad_phi weights occurring in Der(L)
};

/// The necessary condition "phi > 0 and ad_phi >= 0": decomposes Der(L) into
/// phi-weight components (cell (m,k) has weight phi_m - phi_k) and checks all
/// occurring weights are nonnegative.
NecessaryReport necessary_condition(const LieAlgebra& l, const DerivationSpace& der,
                                    const PreEinstein& phi);

}  // namespace einsnil

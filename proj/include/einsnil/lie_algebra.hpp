#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "einsnil/linalg.hpp"
#include "einsnil/scalar.hpp"

namespace einsnil {

/// Index triple of a structure constant C_ij^k, always stored with i < j.
struct BracketKey {
  int i, j, k;
  friend auto operator<=>(const BracketKey&, const BracketKey&) = default;
};

std::ostream& operator<<(std::ostream& os, const BracketKey& t);

/// Sparse coordinate vector over the basis e_1..e_n.
using SparseVec = std::map<int, Scalar>;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Nilpotent-capable Lie algebra given by structure constants over Q(sqrt d):
/// [e_i, e_j] = sum_k C_ij^k e_k with only i < j keys stored, zero
/// coefficients dropped, and antisymmetry implied.
class LieAlgebra {
 public:
  LieAlgebra(int dim, long field_d = 1, std::string name = "");

  /// Registers C_ij^k (i < j required). Zero coefficients are dropped;
  /// duplicate (i,j,k) entries are an error.
  void add_bracket(int i, int j, int k, Scalar c);

  int dim() const { return dim_; }
  long field_d() const { return field_d_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::map<BracketKey, Scalar>& brackets() const { return brackets_; }

  /// Coefficient of e_k in [e_i, e_j], any index order.
  Scalar coeff(int i, int j, int k) const;
  /// [e_i, e_j] as a sparse vector, any index order.
  SparseVec bracket(int i, int j) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

 private:
  int dim_;
  long field_d_;
  std::string name_;
  std::map<BracketKey, Scalar> brackets_;
};

struct JacobiViolation {
  int i, j, k;
  SparseVec defect;  // the nonzero cyclic sum
};

/// Exact Jacobi test over all i < j < k; empty result iff L is a Lie algebra.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& l);

struct LcsReport {
  std::vector<int> dims;  // dims of n_0 >= n_1 >= ...
  bool nilpotent = false;
  bool filiform = false;
};

/// Descending central series n_0 = n, n_{i+1} = [n, n_i].
LcsReport lower_central_series(const LieAlgebra& l);

/// Exact basis of the center (null space of all adjoint maps).
std::vector<Row> center(const LieAlgebra& l);

/// 2-cocycle omega = sum omega_ij e_i* ^ e_j*, i < j, nonzero terms only.
struct Cocycle {
  int dim;  // dimension of the base algebra
  std::map<std::pair<int, int>, Scalar> terms;

  void add_term(int i, int j, Scalar c);
  Scalar value(int i, int j) const;  // antisymmetric lookup
};

/// One-dimensional central extension by omega: new central vector e_{n+1},
/// [x, y] = [x, y]_L + omega(x, y) e_{n+1}. Throws AlgebraError (naming a
/// violating triple) if omega fails the cocycle identity on L.
LieAlgebra central_extension(const LieAlgebra& l, const Cocycle& omega, std::string name = "");

struct B2CocycleReport {
  bool pass = false;
  std::vector<std::pair<BracketKey, Scalar>> violations;  // (i,j,k) with nonzero value
};

/// The alternating-sign identity c_ij (-1)^k + c_jk (-1)^i + c_ki (-1)^j = 0
/// over pairwise-distinct i, j, k >= 2 with i + j + k = n + 1, where
/// n = dim(L) + 1 is the target extension dimension. L must be odd-dimensional
/// in the chain normal form [e_1, e_i] = e_{i+1} with [e_i, e_j] graded into
/// e_{i+j}.
B2CocycleReport b2_cocycle_check(const LieAlgebra& l);

// --- text format ---------------------------------------------------------

/// Parses the line-oriented algebra format (# comments, name/dim/field/bracket).
LieAlgebra parse_algebra(std::istream& in);
LieAlgebra parse_algebra_file(const std::string& path);
void write_algebra(std::ostream& os, const LieAlgebra& l);

}  // namespace einsnil

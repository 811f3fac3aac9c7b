#pragma once

#include <optional>
#include <string>
#include <vector>

#include "einsnil/lie_algebra.hpp"

namespace einsnil {
namespace catalog {

enum class Family {
  M0,         // chain algebra, n >= 3
  M1,         // n even >= 4
  M2,         // n >= 5
  Witt,       // truncated Witt V(n), n >= 4
  M01,        // n odd >= 7
  M02,        // n even >= 8
  M03,        // n odd >= 9
  GAlpha,     // one-parameter families, n in [7, 11]
  B6,         // central extension of m2(5)
  B8,         // central extension of g_{-5/2}(7)
  B1_10,      // central extension of g_{-1}(9)
  B2_10,      // central extension of g_{-3}(9)
  B12Plus,    // central extension of g_alpha(11), alpha = (-4+sqrt10)/2
  B12Minus,   // central extension of g_alpha(11), alpha = (-4-sqrt10)/2
  Nt8,        // n_t(8), t not in {0, 1}
  TwoStepP,   // (2p+1)-dimensional two-step algebra, p >= 1
  TwoStep10,  // the 10-dimensional two-step example
  Heisenberg, // odd n >= 3
  Abelian,    // n >= 1
};

struct FamilySpec {
  Family family;
  int n = 0;        // dimension parameter where applicable
  Scalar alpha;     // GAlpha
  Rational t;       // Nt8
  int p = 0;        // TwoStepP
};

/// Builds the family member with exact structure constants; throws
/// AlgebraError for out-of-range parameters or coefficient poles.
LieAlgebra generate(const FamilySpec& spec);

std::optional<Family> family_by_name(const std::string& name);
std::vector<std::string> family_names();

/// The standard extension cocycle sum_{i=2}^{m} (-1)^i e_i* ^ e_{n+1-i}*
/// targeting an even extension dimension n = 2m.
Cocycle b2_standard_cocycle(int extension_dim);

enum class FixtureKind {
  ConvexCoefficients,  // c > 0, sum c = 1, Y c = p
  YesVector,           // v > 0, U v = [1]_N
  NoVector,            // Y^t a >= 0 and (a, p) < 0
};

struct Fixture {
  std::string name;
  FixtureKind kind;
  int dim;                          // ambient dimension n
  std::vector<BracketKey> support;  // alpha order the vector refers to
  std::vector<Rational> vec;        // the published coefficient vector
  std::optional<FamilySpec> algebra;  // generator cross-check, when available
  std::string expected_verdict;       // "YES" / "NO"
};

/// Every published certificate-style vector, with the alpha order each one
/// verifies under.
std::vector<Fixture> fixtures();

}  // namespace catalog
}  // namespace einsnil

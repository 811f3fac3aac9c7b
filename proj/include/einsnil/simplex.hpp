#pragma once

#include <vector>

#include "einsnil/scalar.hpp"

namespace einsnil {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  QVector x;       // primal solution (Optimal)
  Rational value;  // objective at x
};

/// Exact two-phase primal simplex with Bland's anticycling rule for
///   min c^T x  s.t.  A x = b,  x >= 0.
LpResult simplex_min(const QMatrix& a, const QVector& b, const QVector& c);

}  // namespace einsnil

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "einsnil/scalar.hpp"

namespace einsnil {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form; returns the pivot columns. Columns at or
/// beyond `ncols` are carried along (augmented part) but never pivoted on.
std::vector<int> rref(Matrix& m, int ncols);

int rank(Matrix m, int ncols);

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Null-space basis of the sparse homogeneous system, as dense vectors.
std::vector<Row> null_space(const std::vector<SparseRow>& rows, int ncols);

enum class SolveOutcome { Unique, Inconsistent, Underdetermined };

struct LinearSolution {
  SolveOutcome outcome;
  Row x;             // valid when outcome == Unique
  int freedom = 0;   // solution-space dimension when Underdetermined
};

/// Solves A x = b exactly (dense, any shape).
LinearSolution solve_exact(Matrix a, const Row& b);

}  // namespace einsnil

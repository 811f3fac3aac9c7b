#include "einsnil/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace einsnil {

std::vector<int> rref(Matrix& m, int ncols) {
  std::vector<int> pivots;
  const int nrows = static_cast<int>(m.size());
  int rix = 0;
  for (int col = 0; col < ncols && rix < nrows; ++col) {
    int piv = -1;
    for (int r = rix; r < nrows; ++r) {
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[rix], m[piv]);
    const Scalar inv = m[rix][col].inverse();
    for (auto& x : m[rix]) x *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == rix || m[r][col].is_zero()) continue;
      const Scalar f = m[r][col];
      for (size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[rix][c];
    }
    pivots.push_back(col);
    ++rix;
  }
  return pivots;
}

int rank(Matrix m, int ncols) { return static_cast<int>(rref(m, ncols).size()); }

namespace {

using MapRow = std::map<int, Scalar>;

// row -= f * pivot, dropping cancelled entries.
void axpy(MapRow& row, const Scalar& f, const MapRow& pivot) {
  for (const auto& [c, v] : pivot) {
    auto it = row.find(c);
    if (it == row.end()) {
      Scalar nv = -(f * v);
      if (!nv.is_zero()) row.emplace(c, std::move(nv));
    } else {
      it->second -= f * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

std::vector<Row> null_space(const std::vector<SparseRow>& rows, int ncols) {
  std::map<int, MapRow> pivot_rows;  // leading column -> normalized row
  for (const auto& r : rows) {
    MapRow row(r.begin(), r.end());
    while (!row.empty()) {
      auto it = pivot_rows.find(row.begin()->first);
      if (it == pivot_rows.end()) break;
      axpy(row, row.begin()->second, it->second);
    }
    if (row.empty()) continue;
    const Scalar inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    int lead = row.begin()->first;
    pivot_rows.emplace(lead, std::move(row));
  }
  // Full RREF: clear pivot columns upwards, processing pivots bottom-up.
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    const int pc = it->first;
    for (auto& [lead, row] : pivot_rows) {
      if (lead == pc) continue;
      auto hit = row.find(pc);
      if (hit == row.end()) continue;
      const Scalar f = hit->second;
      axpy(row, f, it->second);
    }
  }
  std::vector<int> is_pivot(ncols, 0);
  for (const auto& [c, r] : pivot_rows) is_pivot[c] = 1;
  std::vector<Row> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Row v(ncols, Scalar());
    v[f] = Scalar(1);
    for (const auto& [pc, row] : pivot_rows) {
      auto hit = row.find(f);
      if (hit != row.end()) v[pc] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_exact(Matrix a, const Row& b) {
  const int nrows = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != nrows) throw std::invalid_argument("solve_exact: shape mismatch");
  const int ncols = nrows > 0 ? static_cast<int>(a[0].size()) : 0;
  for (int r = 0; r < nrows; ++r) a[r].push_back(b[r]);
  std::vector<int> pivots = rref(a, ncols);
  for (int r = static_cast<int>(pivots.size()); r < nrows; ++r) {
    if (!a[r][ncols].is_zero()) return {SolveOutcome::Inconsistent, {}, 0};
  }
  if (static_cast<int>(pivots.size()) < ncols)
    return {SolveOutcome::Underdetermined, {}, ncols - static_cast<int>(pivots.size())};
  Row x(ncols, Scalar());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
  return {SolveOutcome::Unique, std::move(x), 0};
}

}  // namespace einsnil

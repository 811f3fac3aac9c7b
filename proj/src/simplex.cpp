#include "einsnil/simplex.hpp"

#include <stdexcept>

namespace einsnil {

namespace {

enum class StepResult { Optimal, Pivoted, Unbounded };

// Dense tableau rows B^{-1}[A | b]; basis[i] is the variable of row i.
struct Tableau {
  QMatrix rows;            // m x (ncols + 1), last column is b
  std::vector<int> basis;  // size m
  int ncols;

  int m() const { return static_cast<int>(rows.size()); }

  void pivot(int row, int col) {
    QVector& pr = rows[row];
    const Rational pv = pr[col];
    for (auto& x : pr) x /= pv;
    for (int r = 0; r < m(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * pr[c];
    }
    basis[row] = col;
  }

  // One Bland step: entering = lowest-index column with negative reduced cost,
  // leaving by minimum ratio with lowest basis index on ties.
  StepResult step(const QVector& cost) {
    std::vector<char> basic(ncols, 0);
    for (int i = 0; i < m(); ++i) basic[basis[i]] = 1;
    int enter = -1;
    for (int j = 0; j < ncols && enter < 0; ++j) {
      if (basic[j]) continue;
      Rational red = cost[j];
      for (int i = 0; i < m(); ++i)
        if (cost[basis[i]] != 0) red -= cost[basis[i]] * rows[i][j];
      if (red < 0) enter = j;
    }
    if (enter < 0) return StepResult::Optimal;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m(); ++i) {
      if (rows[i][enter] <= 0) continue;
      Rational ratio = rows[i].back() / rows[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return StepResult::Unbounded;
    pivot(leave, enter);
    return StepResult::Pivoted;
  }

  StepResult run(const QVector& cost) {
    StepResult r;
    while ((r = step(cost)) == StepResult::Pivoted) {
    }
    return r;
  }
};

}  // namespace

LpResult simplex_min(const QMatrix& a, const QVector& b, const QVector& c) {
  const int m = static_cast<int>(a.size());
  const int n = m > 0 ? static_cast<int>(a[0].size()) : 0;
  Tableau t;
  t.ncols = n + m;  // real vars + phase-1 artificials
  t.rows.reserve(m);
  for (int r = 0; r < m; ++r) {
    QVector row(n + m + 1, Rational(0));
    const bool neg = b[r] < 0;
    for (int cix = 0; cix < n; ++cix) row[cix] = neg ? -a[r][cix] : a[r][cix];
    row[n + r] = 1;
    row.back() = neg ? -b[r] : b[r];
    t.rows.push_back(std::move(row));
    t.basis.push_back(n + r);
  }
  QVector phase1(n + m, Rational(0));
  for (int r = 0; r < m; ++r) phase1[n + r] = 1;
  if (t.run(phase1) == StepResult::Unbounded)
    throw std::logic_error("phase-1 LP unbounded");  // objective is >= 0
  Rational art = 0;
  for (int i = 0; i < t.m(); ++i)
    if (t.basis[i] >= n) art += t.rows[i].back();
  if (art != 0) return {LpStatus::Infeasible, {}, Rational(0)};
  // Drive remaining artificials out of the basis where possible.
  for (int i = 0; i < t.m(); ++i) {
    if (t.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
      if (t.rows[i][j] != 0) col = j;
    if (col >= 0) t.pivot(i, col);
  }
  // Rows still basic in an artificial variable are redundant (zero rows).
  QMatrix rows2;
  std::vector<int> basis2;
  for (int i = 0; i < t.m(); ++i) {
    if (t.basis[i] >= n) continue;
    QVector row(n + 1);
    for (int j = 0; j < n; ++j) row[j] = t.rows[i][j];
    row[n] = t.rows[i].back();
    rows2.push_back(std::move(row));
    basis2.push_back(t.basis[i]);
  }
  Tableau t2{std::move(rows2), std::move(basis2), n};
  if (t2.run(c) == StepResult::Unbounded) return {LpStatus::Unbounded, {}, Rational(0)};
  QVector x(n, Rational(0));
  for (int i = 0; i < t2.m(); ++i) x[t2.basis[i]] = t2.rows[i].back();
  Rational value = 0;
  for (int j = 0; j < n; ++j) value += c[j] * x[j];
  return {LpStatus::Optimal, std::move(x), std::move(value)};
}

}  // namespace einsnil

#include "einsnil/lie_algebra.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace einsnil {

std::ostream& operator<<(std::ostream& os, const BracketKey& t) {
  return os << '(' << t.i << ',' << t.j << ',' << t.k << ')';
}

LieAlgebra::LieAlgebra(int dim, long field_d, std::string name)
    : dim_(dim), field_d_(field_d), name_(std::move(name)) {
  if (dim_ < 1) throw AlgebraError("algebra dimension must be positive");
  if (field_d_ < 1) throw AlgebraError("field tag d must be >= 1");
}

void LieAlgebra::add_bracket(int i, int j, int k, Scalar c) {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw AlgebraError("bracket index out of range");
  if (i >= j) throw AlgebraError("brackets must be stored with i < j");
  if (c.is_zero()) return;
  if (c.d() != 1 && c.d() != field_d_)
    throw AlgebraError("bracket coefficient lives in a different field");
  auto [it, fresh] = brackets_.emplace(BracketKey{i, j, k}, std::move(c));
  if (!fresh) {
    std::ostringstream os;
    os << "duplicate bracket entry " << BracketKey{i, j, k};
    throw AlgebraError(os.str());
  }
}

Scalar LieAlgebra::coeff(int i, int j, int k) const {
  if (i == j) return Scalar();
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find(BracketKey{i, j, k});
  if (it == brackets_.end()) return Scalar();
  return flip ? -it->second : it->second;
}

SparseVec LieAlgebra::bracket(int i, int j) const {
  SparseVec out;
  if (i == j) return out;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.lower_bound(BracketKey{i, j, 0});
  for (; it != brackets_.end() && it->first.i == i && it->first.j == j; ++it)
    out[it->first.k] = flip ? -it->second : it->second;
  return out;
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, ci] : x) {
    for (const auto& [j, cj] : y) {
      if (i == j) continue;
      for (const auto& [k, c] : bracket(i, j)) {
        auto [it, fresh] = out.try_emplace(k, Scalar());
        it->second += ci * cj * c;
        (void)fresh;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& l) {
  std::vector<JacobiViolation> out;
  const int n = l.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        SparseVec sum;
        const int idx[3][2] = {{i, j}, {j, k}, {k, i}};
        const int third[3] = {k, i, j};
        for (int t = 0; t < 3; ++t) {
          for (const auto& [m, c] : l.bracket(idx[t][0], idx[t][1])) {
            for (const auto& [r, c2] : l.bracket(m, third[t])) {
              auto [it, fresh] = sum.try_emplace(r, Scalar());
              it->second += c * c2;
              (void)fresh;
            }
          }
        }
        for (auto it = sum.begin(); it != sum.end();)
          it = it->second.is_zero() ? sum.erase(it) : std::next(it);
        if (!sum.empty()) out.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return out;
}

namespace {

// Basis rows spanning [L, span(current)] for LCS iteration.
std::vector<SparseRow> bracket_span(const LieAlgebra& l, const std::vector<Row>& current) {
  std::vector<SparseRow> rows;
  const int n = l.dim();
  for (const auto& v : current) {
    SparseVec sv;
    for (int c = 0; c < n; ++c)
      if (!v[c].is_zero()) sv[c + 1] = v[c];
    for (int i = 1; i <= n; ++i) {
      SparseVec ei{{i, Scalar(1)}};
      SparseVec w = l.bracket(ei, sv);
      if (w.empty()) continue;
      SparseRow row;
      for (const auto& [c, val] : w) row.emplace_back(c - 1, val);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// Row basis of the span of the given sparse rows.
std::vector<Row> span_basis(std::vector<SparseRow> rows, int ncols) {
  Matrix m;
  for (auto& r : rows) {
    Row dense(ncols, Scalar());
    for (auto& [c, v] : r) dense[c] = std::move(v);
    m.push_back(std::move(dense));
  }
  std::vector<int> piv = rref(m, ncols);
  m.resize(piv.size());
  return m;
}

}  // namespace

LcsReport lower_central_series(const LieAlgebra& l) {
  LcsReport rep;
  const int n = l.dim();
  std::vector<Row> cur;
  for (int i = 0; i < n; ++i) {
    Row e(n, Scalar());
    e[i] = Scalar(1);
    cur.push_back(std::move(e));
  }
  rep.dims.push_back(n);
  for (;;) {
    cur = span_basis(bracket_span(l, cur), n);
    const int d = static_cast<int>(cur.size());
    rep.dims.push_back(d);
    if (d == 0) {
      rep.nilpotent = true;
      break;
    }
    if (d == rep.dims[rep.dims.size() - 2]) break;  // stabilized: not nilpotent
  }
  // Filiform: series length n-1, i.e. dims are n, n-2, n-3, ..., 1, 0.
  if (rep.nilpotent && static_cast<int>(rep.dims.size()) == n) {
    rep.filiform = true;
    for (size_t s = 1; s + 1 < rep.dims.size(); ++s)
      if (rep.dims[s] != n - 1 - static_cast<int>(s)) rep.filiform = false;
  }
  return rep;
}

std::vector<Row> center(const LieAlgebra& l) {
  const int n = l.dim();
  std::vector<SparseRow> rows;
  // x central iff for all i, m: sum_j x_j C_ij^m = 0.
  for (int i = 1; i <= n; ++i) {
    for (int m = 1; m <= n; ++m) {
      SparseRow row;
      for (int j = 1; j <= n; ++j) {
        Scalar c = l.coeff(i, j, m);
        if (!c.is_zero()) row.emplace_back(j - 1, std::move(c));
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return null_space(rows, n);
}

void Cocycle::add_term(int i, int j, Scalar c) {
  if (i >= j || i < 1) throw AlgebraError("cocycle terms need 1 <= i < j");
  if (j > dim) throw AlgebraError("cocycle index out of range");
  if (c.is_zero()) return;
  terms[{i, j}] = std::move(c);
}

Scalar Cocycle::value(int i, int j) const {
  if (i == j) return Scalar();
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = terms.find({i, j});
  if (it == terms.end()) return Scalar();
  return flip ? -it->second : it->second;
}

LieAlgebra central_extension(const LieAlgebra& l, const Cocycle& omega, std::string name) {
  if (omega.dim != l.dim()) throw AlgebraError("cocycle dimension mismatch");
  const int n = l.dim();
  // Cocycle identity: sum over cyclic permutations of omega([x,y], z) = 0 on
  // basis triples.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        Scalar acc;
        const int idx[3][2] = {{i, j}, {j, k}, {k, i}};
        const int third[3] = {k, i, j};
        for (int t = 0; t < 3; ++t) {
          for (const auto& [m, c] : l.bracket(idx[t][0], idx[t][1]))
            acc += c * omega.value(m, third[t]);
        }
        if (!acc.is_zero()) {
          std::ostringstream os;
          os << "cocycle identity fails at " << BracketKey{i, j, k} << " with value " << acc;
          throw AlgebraError(os.str());
        }
      }
    }
  }
  long d = l.field_d();
  for (const auto& [ij, c] : omega.terms)
    if (c.d() != 1) d = c.d();
  LieAlgebra ext(n + 1, d, std::move(name));
  for (const auto& [t, c] : l.brackets()) ext.add_bracket(t.i, t.j, t.k, c);
  for (const auto& [ij, c] : omega.terms) ext.add_bracket(ij.first, ij.second, n + 1, c);
  return ext;
}

B2CocycleReport b2_cocycle_check(const LieAlgebra& l) {
  const int base = l.dim();
  if (base % 2 == 0) throw AlgebraError("b2_cocycle_check expects an odd-dimensional base");
  // Normal form: [e_1, e_i] = e_{i+1} exactly, for i = 2..dim-1.
  for (int i = 2; i < base; ++i) {
    SparseVec b = l.bracket(1, i);
    if (b.size() != 1 || b.begin()->first != i + 1 || !(b.begin()->second == Scalar(1)))
      throw AlgebraError("algebra is not in chain normal form [e1,e_i] = e_{i+1}");
  }
  // Graded form for the rest: [e_i, e_j] lands in e_{i+j} (or vanishes).
  auto c_of = [&](int i, int j) -> Scalar {
    SparseVec b = l.bracket(i, j);
    if (b.empty()) return Scalar();
    if (b.size() != 1 || b.begin()->first != i + j)
      throw AlgebraError("algebra is not graded with [e_i,e_j] in e_{i+j}");
    return b.begin()->second;
  };
  const int n = base + 1;  // target extension dimension
  B2CocycleReport rep;
  rep.pass = true;
  for (int i = 2; i <= base; ++i) {
    for (int j = i + 1; j <= base; ++j) {
      const int k = n + 1 - i - j;
      if (k <= j || k > base) continue;  // want i < j < k, all in range
      auto sgn = [](int e) { return (e % 2 == 0) ? 1 : -1; };
      Scalar val = c_of(i, j) * Scalar(sgn(k)) + c_of(j, k) * Scalar(sgn(i)) +
                   (-c_of(i, k)) * Scalar(sgn(j));
      if (!val.is_zero()) {
        rep.pass = false;
        rep.violations.emplace_back(BracketKey{i, j, k}, std::move(val));
      }
    }
  }
  return rep;
}

// --- text format ----------------------------------------------------------

LieAlgebra parse_algebra(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::string name;
  long d = 1;
  int dim = -1;
  std::vector<std::tuple<int, int, int, std::string>> pending;
  auto fail = [&](const std::string& msg) {
    throw AlgebraError("parse error at line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "name") {
      std::getline(ls >> std::ws, name);
    } else if (kw == "dim") {
      if (!(ls >> dim) || dim < 1) fail("bad dimension");
    } else if (kw == "field") {
      std::string sq;
      if (!(ls >> sq >> d) || sq != "sqrt" || d < 1) fail("expected 'field sqrt <d>'");
    } else if (kw == "bracket") {
      int i, j, k;
      std::string coef;
      if (!(ls >> i >> j >> k >> coef)) fail("expected 'bracket <i> <j> <k> <coef>'");
      pending.emplace_back(i, j, k, coef);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (dim < 1) throw AlgebraError("parse error: missing 'dim' line");
  LieAlgebra l(dim, d, name);
  for (const auto& [i, j, k, coef] : pending) {
    Scalar c;
    try {
      c = parse_scalar(coef, d);
    } catch (const std::exception& e) {
      throw AlgebraError(std::string("parse error in coefficient: ") + e.what());
    }
    if (i >= j) throw AlgebraError("parse error: bracket lines need i < j");
    l.add_bracket(i, j, k, std::move(c));
  }
  return l;
}

LieAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open '" + path + "'");
  return parse_algebra(in);
}

void write_algebra(std::ostream& os, const LieAlgebra& l) {
  if (!l.name().empty()) os << "name " << l.name() << "\n";
  os << "dim " << l.dim() << "\n";
  if (l.field_d() != 1) os << "field sqrt " << l.field_d() << "\n";
  for (const auto& [t, c] : l.brackets())
    os << "bracket " << t.i << ' ' << t.j << ' ' << t.k << ' ' << c.str() << "\n";
}

}  // namespace einsnil

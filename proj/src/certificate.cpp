#include "einsnil/certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "einsnil/simplex.hpp"

namespace einsnil {

namespace {

// LP1: max t s.t. Uv = [1], v - t[1] >= 0, t <= 1. Substituting v = s + t[1],
// t = 1 - u gives  min u  s.t.  U s - u U[1] = [1] - U[1],  s, u >= 0.
struct Lp1Outcome {
  Rational t_star;
  QVector v;  // v = s + t*[1] (meaningful when t_star > 0)
};

Lp1Outcome solve_lp1(const AlphaSystem& s) {
  const int nn = s.count();
  QMatrix a(nn, QVector(nn + 1));
  QVector b(nn), cost(nn + 1, Rational(0));
  cost[nn] = 1;
  for (int r = 0; r < nn; ++r) {
    Rational u1 = 0;
    for (int c = 0; c < nn; ++c) {
      a[r][c] = s.gram()[r][c];
      u1 += s.gram()[r][c];
    }
    a[r][nn] = -u1;
    b[r] = Rational(1) - u1;
  }
  LpResult res = simplex_min(a, b, cost);
  if (res.status == LpStatus::Infeasible)
    throw std::logic_error("U v = [1] infeasible: AlphaSystem invariant violated");
  if (res.status == LpStatus::Unbounded)
    throw std::logic_error("decision LP unbounded despite the t <= 1 cap");
  Lp1Outcome out;
  out.t_star = Rational(1) - res.x[nn];
  out.v.assign(nn, Rational(0));
  for (int j = 0; j < nn; ++j) out.v[j] = res.x[j] + out.t_star;
  return out;
}

// LP2 (NO side): min [1]^t y  s.t.  U y - z = 0, [1]^t z = 1, z >= 0, y free.
// Then a = Y y satisfies Y^t a = z >= 0, sum(z) = 1, and
// (a, p) = |p|^2 [1]^t y, so a nonpositive optimum yields the witness.
QVector solve_lp2(const AlphaSystem& s) {
  const int nn = s.count();
  const int nv = 3 * nn;  // y+, y-, z
  QMatrix a;
  QVector b;
  for (int r = 0; r < nn; ++r) {
    QVector row(nv, Rational(0));
    for (int c = 0; c < nn; ++c) {
      row[c] = s.gram()[r][c];
      row[nn + c] = -row[c];
    }
    row[2 * nn + r] = -1;
    a.push_back(std::move(row));
    b.push_back(Rational(0));
  }
  QVector last(nv, Rational(0));
  for (int c = 0; c < nn; ++c) last[2 * nn + c] = 1;
  a.push_back(std::move(last));
  b.push_back(Rational(1));
  QVector cost(nv, Rational(0));
  for (int c = 0; c < nn; ++c) {
    cost[c] = 1;
    cost[nn + c] = -1;
  }
  LpResult res = simplex_min(a, b, cost);
  if (res.status != LpStatus::Optimal)
    throw std::logic_error("separating LP failed; expected a bounded optimum");
  if (res.value > 0)
    throw std::logic_error("separating LP positive although the decision LP said NO");
  QVector y(nn);
  for (int j = 0; j < nn; ++j) y[j] = res.x[j] - res.x[nn + j];
  return y;
}

}  // namespace

Certificate decide_einstein(const AlphaSystem& s) {
  Lp1Outcome lp1 = solve_lp1(s);
  Certificate cert;
  cert.order = s.triples();
  if (lp1.t_star > 0) {
    cert.verdict = Verdict::Yes;
    cert.v = std::move(lp1.v);
  } else {
    cert.verdict = Verdict::No;
    cert.a = s.combine(solve_lp2(s));
  }
  if (!verify_certificate(s, cert))
    throw std::logic_error("internal error: produced certificate failed verification");
  return cert;
}

Rational decision_margin(const AlphaSystem& s) { return solve_lp1(s).t_star; }

bool verify_certificate(const AlphaSystem& s, const Certificate& c) {
  if (c.verdict == Verdict::Yes) {
    if (static_cast<int>(c.v.size()) != s.count())
      throw AlgebraError("certificate dimension mismatch");
    // Re-align entries when the certificate fixes its own alpha order.
    std::vector<Rational> v = c.v;
    if (!c.order.empty() && c.order != s.triples()) {
      if (c.order.size() != c.v.size()) throw AlgebraError("certificate order length mismatch");
      std::map<BracketKey, Rational> by_triple;
      for (size_t j = 0; j < c.order.size(); ++j) {
        if (!by_triple.emplace(c.order[j], c.v[j]).second)
          throw AlgebraError("certificate order has duplicate triples");
      }
      for (int j = 0; j < s.count(); ++j) {
        auto it = by_triple.find(s.triples()[j]);
        if (it == by_triple.end()) throw AlgebraError("certificate order does not match support");
        v[j] = it->second;
      }
    }
    for (const auto& x : v)
      if (x <= 0) return false;
    for (int r = 0; r < s.count(); ++r) {
      Rational acc = 0;
      for (int j = 0; j < s.count(); ++j) acc += Rational(s.gram()[r][j]) * v[j];
      if (acc != 1) return false;
    }
    return true;
  }
  if (static_cast<int>(c.a.size()) != s.n()) throw AlgebraError("certificate dimension mismatch");
  bool some_positive = false;
  for (int j = 0; j < s.count(); ++j) {
    Rational q = s.pair_with_alpha(c.a, j);
    if (q < 0) return false;
    if (q > 0) some_positive = true;
  }
  if (!some_positive) return false;  // Y^t a must be nonzero
  Rational ap = 0;
  for (int i = 0; i < s.n(); ++i) ap += c.a[i] * s.projection()[i];
  return ap <= 0;
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string certificate_to_text(const Certificate& c) {
  std::ostringstream os;
  os << "verdict " << (c.verdict == Verdict::Yes ? "YES" : "NO") << "\n";
  os << (c.verdict == Verdict::Yes ? "v" : "a");
  for (const auto& q : (c.verdict == Verdict::Yes ? c.v : c.a)) os << ' ' << q;
  os << "\norder";
  for (const auto& t : c.order) os << ' ' << t.i << ',' << t.j << ',' << t.k;
  os << "\n";
  return os.str();
}

Certificate certificate_from_text(const std::string& text) {
  std::istringstream in(text);
  Certificate c;
  std::string line;
  bool have_verdict = false, have_vec = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "verdict") {
      std::string w;
      ls >> w;
      if (w == "YES")
        c.verdict = Verdict::Yes;
      else if (w == "NO")
        c.verdict = Verdict::No;
      else
        throw AlgebraError("certificate: bad verdict '" + w + "'");
      have_verdict = true;
    } else if (kw == "v" || kw == "a") {
      std::string tok;
      std::vector<Rational> vals;
      while (ls >> tok) {
        Rational q;
        if (q.set_str(tok, 10) != 0) throw AlgebraError("certificate: bad rational '" + tok + "'");
        q.canonicalize();
        vals.push_back(std::move(q));
      }
      (kw == "v" ? c.v : c.a) = std::move(vals);
      have_vec = true;
    } else if (kw == "order") {
      std::string tok;
      while (ls >> tok) {
        BracketKey t{};
        if (std::sscanf(tok.c_str(), "%d,%d,%d", &t.i, &t.j, &t.k) != 3)
          throw AlgebraError("certificate: bad order entry '" + tok + "'");
        c.order.push_back(t);
      }
    } else {
      throw AlgebraError("certificate: unknown keyword '" + kw + "'");
    }
  }
  if (!have_verdict || !have_vec) throw AlgebraError("certificate: missing verdict or vector");
  if (c.verdict == Verdict::Yes && c.v.empty()) throw AlgebraError("certificate: YES without v");
  if (c.verdict == Verdict::No && c.a.empty()) throw AlgebraError("certificate: NO without a");
  return c;
}

Certificate certificate_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return certificate_from_text(os.str());
}

}  // namespace einsnil

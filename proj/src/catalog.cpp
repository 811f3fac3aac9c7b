#include "einsnil/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace einsnil {
namespace catalog {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw AlgebraError(msg);
}

void add_chain(LieAlgebra& l, int upto) {
  // [e_1, e_i] = e_{i+1} for i = 2..upto
  for (int i = 2; i <= upto; ++i) l.add_bracket(1, i, i + 1, Scalar(1));
}

LieAlgebra make_m0(int n) {
  require(n >= 3, "m0(n) needs n >= 3");
  LieAlgebra l(n, 1, "m0(" + std::to_string(n) + ")");
  add_chain(l, n - 1);
  return l;
}

LieAlgebra make_m1(int n) {
  require(n % 2 == 0 && n >= 4, "m1(n) needs even n >= 4");
  LieAlgebra l(n, 1, "m1(" + std::to_string(n) + ")");
  add_chain(l, n - 2);
  for (int i = 2; i <= n / 2; ++i) l.add_bracket(i, n + 1 - i, n, Scalar((i % 2 == 0) ? 1 : -1));
  return l;
}

LieAlgebra make_m2(int n) {
  require(n >= 5, "m2(n) needs n >= 5");
  LieAlgebra l(n, 1, "m2(" + std::to_string(n) + ")");
  add_chain(l, n - 1);
  for (int i = 3; i <= n - 2; ++i) l.add_bracket(2, i, i + 2, Scalar(1));
  return l;
}

LieAlgebra make_witt(int n) {
  require(n >= 4, "V(n) needs n >= 4");
  LieAlgebra l(n, 1, "V(" + std::to_string(n) + ")");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j + i <= n; ++j) l.add_bracket(i, j, i + j, Scalar(j - i));
  return l;
}

LieAlgebra make_m01(int n) {
  require(n % 2 == 1 && n >= 7, "m01(n) needs odd n >= 7");
  const int m = (n - 1) / 2;
  LieAlgebra l(n, 1, "m01(" + std::to_string(n) + ")");
  add_chain(l, n - 1);
  for (int i = 2; i <= m; ++i) l.add_bracket(i, n - i, n, Scalar((i % 2 == 0) ? 1 : -1));
  return l;
}

LieAlgebra make_m02(int n) {
  require(n % 2 == 0 && n >= 8, "m02(n) needs even n >= 8");
  const int m = (n - 2) / 2;
  LieAlgebra l(n, 1, "m02(" + std::to_string(n) + ")");
  add_chain(l, n - 1);
  for (int i = 2; i <= m; ++i) l.add_bracket(i, n - 1 - i, n - 1, Scalar((i % 2 == 0) ? 1 : -1));
  for (int j = 2; j <= m; ++j)
    l.add_bracket(j, n - j, n, Scalar((j % 2 == 0) ? (m - j + 1) : -(m - j + 1)));
  return l;
}

LieAlgebra make_m03(int n) {
  require(n % 2 == 1 && n >= 9, "m03(n) needs odd n >= 9");
  const int m = (n - 3) / 2;
  LieAlgebra l(n, 1, "m03(" + std::to_string(n) + ")");
  add_chain(l, n - 1);
  for (int i = 2; i <= m; ++i) l.add_bracket(i, n - 2 - i, n - 2, Scalar((i % 2 == 0) ? 1 : -1));
  for (int j = 2; j <= m; ++j)
    l.add_bracket(j, n - 1 - j, n - 1, Scalar((j % 2 == 0) ? (m - j + 1) : -(m - j + 1)));
  for (int k = 3; k <= m + 1; ++k) {
    long coef = static_cast<long>(k - 2) * m - static_cast<long>(k - 2) * (k - 1) / 2;
    l.add_bracket(k, n - k, n, Scalar((k % 2 == 0) ? coef : -coef));
  }
  return l;
}

LieAlgebra make_g_alpha(int n, const Scalar& al) {
  require(n >= 7 && n <= 11, "g_alpha(n) is defined for 7 <= n <= 11");
  const Scalar one(1), two(2), three(3), five(5);
  const Scalar den9 = al * two + five;  // 2a + 5
  if (n >= 9)
    require(!den9.is_zero(), "g_alpha pole: alpha = -5/2 makes the level-9 coefficients blow up");
  const Scalar quad = al * al + al * Scalar(4) + three;  // (a+1)(a+3)
  if (n >= 11)
    require(!quad.is_zero(), "g_alpha pole: alpha in {-1, -3} makes the level-11 coefficients blow up");
  std::ostringstream nm;
  nm << "g_" << al.str() << "(" << n << ")";
  LieAlgebra l(n, al.d(), nm.str());
  add_chain(l, n - 1);
  l.add_bracket(2, 3, 5, al + two);
  l.add_bracket(2, 4, 6, al + two);
  l.add_bracket(2, 5, 7, al + one);
  l.add_bracket(3, 4, 7, one);
  if (n >= 8) {
    l.add_bracket(2, 6, 8, al);
    l.add_bracket(3, 5, 8, one);
  }
  if (n >= 9) {
    l.add_bracket(2, 7, 9, (al * al * two + al * three - two) / den9);
    l.add_bracket(3, 6, 9, (al * two + two) / den9);
    l.add_bracket(4, 5, 9, three / den9);
  }
  if (n >= 10) {
    l.add_bracket(2, 8, 10, (al * al * two + al - one) / den9);
    l.add_bracket(3, 7, 10, (al * two - one) / den9);
    l.add_bracket(4, 6, 10, three / den9);
  }
  if (n >= 11) {
    const Scalar den11 = quad * den9 * two;
    l.add_bracket(2, 9, 11, (al * al * al * two + al * al * two + three) / (quad * two));
    l.add_bracket(3, 8, 11,
                  (al * al * al * Scalar(4) + al * al * Scalar(8) - al * Scalar(8) - Scalar(21)) / den11);
    l.add_bracket(4, 7, 11, (al * al * two + al * Scalar(4) + five) * three / den11);
    l.add_bracket(5, 6, 11, (al * Scalar(4) + one) * three / den11);
  }
  return l;
}

LieAlgebra extend_b2(const LieAlgebra& base, const std::string& name) {
  return central_extension(base, b2_standard_cocycle(base.dim() + 1), name);
}

LieAlgebra make_nt8(const Rational& t) {
  require(t != 0 && t != 1, "n_t(8) needs t not in {0, 1}");
  LieAlgebra l(8, 1, "n_" + t.get_str() + "(8)");
  for (int i = 2; i <= 6; ++i) l.add_bracket(1, i, i + 2, Scalar(1));
  l.add_bracket(2, 3, 6, Scalar(1));
  l.add_bracket(2, 4, 7, Scalar(1));
  l.add_bracket(2, 5, 8, Scalar(t));
  l.add_bracket(3, 4, 8, Scalar(t - 1));
  return l;
}

LieAlgebra make_two_step(int p) {
  require(p >= 1, "two-step family needs p >= 1");
  LieAlgebra l(2 * p + 1, 1, "twostep(" + std::to_string(p) + ")");
  for (int i = 2; i <= p + 1; ++i) l.add_bracket(1, i, i + p, Scalar(1));
  return l;
}

LieAlgebra make_two_step10() {
  LieAlgebra l(10, 1, "twostep10");
  l.add_bracket(1, 2, 7, Scalar(1));
  l.add_bracket(1, 3, 8, Scalar(1));
  l.add_bracket(2, 3, 9, Scalar(1));
  l.add_bracket(4, 5, 9, Scalar(1));
  l.add_bracket(3, 4, 10, Scalar(1));
  l.add_bracket(1, 6, 10, Scalar(1));
  return l;
}

LieAlgebra make_heisenberg(int n) {
  require(n % 2 == 1 && n >= 3, "heisenberg needs odd n >= 3");
  LieAlgebra l(n, 1, "heisenberg(" + std::to_string(n) + ")");
  for (int i = 1; i <= (n - 1) / 2; ++i) l.add_bracket(2 * i - 1, 2 * i, n, Scalar(1));
  return l;
}

}  // namespace

std::string rational_str(const Rational& q);  // fwd decl shim

LieAlgebra generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::M0: return make_m0(spec.n);
    case Family::M1: return make_m1(spec.n);
    case Family::M2: return make_m2(spec.n);
    case Family::Witt: return make_witt(spec.n);
    case Family::M01: return make_m01(spec.n);
    case Family::M02: return make_m02(spec.n);
    case Family::M03: return make_m03(spec.n);
    case Family::GAlpha: return make_g_alpha(spec.n, spec.alpha);
    case Family::B6: return extend_b2(make_m2(5), "b(6)");
    case Family::B8: return extend_b2(make_g_alpha(7, Scalar(Rational(-5, 2))), "b(8)");
    case Family::B1_10: return extend_b2(make_g_alpha(9, Scalar(-1)), "b1(10)");
    case Family::B2_10: return extend_b2(make_g_alpha(9, Scalar(-3)), "b2(10)");
    case Family::B12Plus:
      return extend_b2(make_g_alpha(11, Scalar(Rational(-2), Rational(1, 2), 10)), "b+(12)");
    case Family::B12Minus:
      return extend_b2(make_g_alpha(11, Scalar(Rational(-2), Rational(-1, 2), 10)), "b-(12)");
    case Family::Nt8: return make_nt8(spec.t);
    case Family::TwoStepP: return make_two_step(spec.p);
    case Family::TwoStep10: return make_two_step10();
    case Family::Heisenberg: return make_heisenberg(spec.n);
    case Family::Abelian: {
      require(spec.n >= 1, "abelian needs n >= 1");
      return LieAlgebra(spec.n, 1, "abelian(" + std::to_string(spec.n) + ")");
    }
  }
  throw AlgebraError("unknown family");
}

Cocycle b2_standard_cocycle(int extension_dim) {
  require(extension_dim % 2 == 0 && extension_dim >= 4, "B2 extension dimension must be even");
  Cocycle w;
  w.dim = extension_dim - 1;
  for (int i = 2; i <= extension_dim / 2; ++i)
    w.add_term(i, extension_dim + 1 - i, Scalar((i % 2 == 0) ? 1 : -1));
  return w;
}

namespace {

const std::map<std::string, Family> kFamilyNames = {
    {"m0", Family::M0},         {"m1", Family::M1},
    {"m2", Family::M2},         {"witt", Family::Witt},
    {"m01", Family::M01},       {"m02", Family::M02},
    {"m03", Family::M03},       {"g_alpha", Family::GAlpha},
    {"b6", Family::B6},         {"b8", Family::B8},
    {"b1_10", Family::B1_10},   {"b2_10", Family::B2_10},
    {"b12_plus", Family::B12Plus}, {"b12_minus", Family::B12Minus},
    {"nt8", Family::Nt8},       {"two_step_p", Family::TwoStepP},
    {"two_step10", Family::TwoStep10},
    {"heisenberg", Family::Heisenberg}, {"abelian", Family::Abelian},
};

}  // namespace

std::optional<Family> family_by_name(const std::string& name) {
  auto it = kFamilyNames.find(name);
  if (it == kFamilyNames.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : kFamilyNames) out.push_back(n);
  return out;
}

// --- fixtures --------------------------------------------------------------

namespace {

std::vector<BracketKey> support_of(const LieAlgebra& l) {
  std::vector<BracketKey> out;
  for (const auto& [t, c] : l.brackets()) out.push_back(t);
  return out;  // map order = lexicographic
}

bool is_chain_triple(const BracketKey& t) { return t.i == 1 && t.k == t.j + 1; }

// Order used by the published g_{-1}(8) coefficient vector: chain brackets
// first, the rest sorted by grading (k, i, j).
std::vector<BracketKey> order_chain_graded(std::vector<BracketKey> sup) {
  std::stable_sort(sup.begin(), sup.end(), [](const BracketKey& a, const BracketKey& b) {
    const bool ca = is_chain_triple(a), cb = is_chain_triple(b);
    if (ca != cb) return ca;
    if (ca) return a < b;
    return std::tuple(a.k, a.i, a.j) < std::tuple(b.k, b.i, b.j);
  });
  return sup;
}

// Order used by the published B2 v-vectors: base-algebra brackets in
// lexicographic order, then the extension brackets ascending in i.
std::vector<BracketKey> order_base_then_omega(const LieAlgebra& ext) {
  std::vector<BracketKey> base, omega;
  for (const auto& [t, c] : ext.brackets())
    (t.k == ext.dim() ? omega : base).push_back(t);
  base.insert(base.end(), omega.begin(), omega.end());
  return base;
}

std::vector<Rational> scaled(long den, std::initializer_list<long> nums) {
  std::vector<Rational> out;
  for (long v : nums) {
    Rational q(v, den);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

FamilySpec galpha_spec(int n, Rational alpha) {
  FamilySpec s;
  s.family = Family::GAlpha;
  s.n = n;
  s.alpha = Scalar(std::move(alpha));
  return s;
}

Fixture convex_fixture(const std::string& name, FamilySpec spec, long den,
                       std::initializer_list<long> nums, bool chain_graded_order = false) {
  LieAlgebra l = generate(spec);
  Fixture f;
  f.name = name;
  f.kind = FixtureKind::ConvexCoefficients;
  f.dim = l.dim();
  f.support = chain_graded_order ? order_chain_graded(support_of(l)) : support_of(l);
  f.vec = scaled(den, nums);
  f.algebra = spec;
  f.expected_verdict = "YES";
  return f;
}

Fixture yes_fixture(const std::string& name, FamilySpec spec, long den,
                    std::initializer_list<long> nums) {
  LieAlgebra l = generate(spec);
  Fixture f;
  f.name = name;
  f.kind = FixtureKind::YesVector;
  f.dim = l.dim();
  f.support = order_base_then_omega(l);
  f.vec = scaled(den, nums);
  f.algebra = spec;
  f.expected_verdict = "YES";
  return f;
}

Fixture no_fixture(const std::string& name, FamilySpec spec, std::vector<Rational> a) {
  LieAlgebra l = generate(spec);
  Fixture f;
  f.name = name;
  f.kind = FixtureKind::NoVector;
  f.dim = l.dim();
  f.support = support_of(l);
  f.vec = std::move(a);
  f.algebra = spec;
  f.expected_verdict = "NO";
  return f;
}

std::vector<Rational> no_vector_m2(int n) {
  std::vector<Rational> a(n);
  a[0] = n - 2;
  a[1] = 2 * (n - 2);
  for (int i = 3; i <= n; ++i) a[i - 1] = Rational(i * (n - 2)) - Rational(n * (n + 1), 2);
  return a;
}

std::vector<Rational> no_vector_m01(int n) {
  const int m = (n - 1) / 2;
  std::vector<Rational> a(n);
  a[0] = 1;
  for (int i = 2; i <= n - 1; ++i) a[i - 1] = i - 1 - m;
  a[n - 1] = -1;
  return a;
}

// The published vector ends "..., m-1, 1, 0"; the sign of the second-to-last
// entry must be negative for Y^t a >= 0 to hold (checked exactly), so the
// shipped fixture uses -1 there.
std::vector<Rational> no_vector_m02(int n) {
  const int m = (n - 2) / 2;
  std::vector<Rational> a(n);
  a[0] = 1;
  for (int i = 2; i <= n - 2; ++i) a[i - 1] = i - 1 - m;
  a[n - 2] = -1;
  a[n - 1] = 0;
  return a;
}

// a_i = i(n+2) - n(n+1)/2 also at i = 2 (the published range starts at 3 but
// leaves a_2 undefined; the i = 2 value is the one that verifies).
std::vector<Rational> no_vector_m03(int n) {
  std::vector<Rational> a(n);
  a[0] = n + 2;
  for (int i = 2; i <= n - 3; ++i) a[i - 1] = Rational(i * (n + 2)) - Rational(n * (n + 1), 2);
  a[n - 3] = -n - 4;
  a[n - 2] = -2;
  a[n - 1] = n;
  return a;
}

}  // namespace

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;

  // 4.1 convex coefficient vectors for the exceptional g_alpha(n).
  out.push_back(convex_fixture("g_0(8)", galpha_spec(8, 0), 28, {4, 2, 3, 1, 2, 2, 3, 2, 2, 2, 5}));
  out.push_back(convex_fixture("g_-1(8)", galpha_spec(8, -1), 28, {2, 2, 2, 4, 3, 1, 3, 3, 2, 3, 3},
                               /*chain_graded_order=*/true));
  out.push_back(convex_fixture("g_-1(9)", galpha_spec(9, -1), 36,
                               {2, 2, 1, 2, 2, 2, 5, 3, 3, 4, 1, 3, 4, 2}));
  out.push_back(convex_fixture("g_0(9)", galpha_spec(9, 0), 72,
                               {6, 6, 5, 3, 5, 6, 1, 5, 5, 5, 5, 5, 5, 5, 5}));
  out.push_back(convex_fixture("g_1/2(9)", galpha_spec(9, Rational(1, 2)), 36,
                               {3, 1, 2, 4, 1, 3, 2, 4, 2, 2, 2, 2, 2, 4, 2}));
  out.push_back(convex_fixture("g_0(10)", galpha_spec(10, 0), 45,
                               {4, 3, 2, 1, 2, 2, 2, 2, 2, 3, 2, 2, 2, 2, 5, 2, 2, 2, 3}));
  out.push_back(convex_fixture(
      "g_-2(11)", galpha_spec(11, -2), 220,
      {22, 12, 15, 12, 1, 8, 8, 1, 1, 8, 8, 8, 22, 14, 12, 17, 15, 8, 14, 5, 8, 1}));
  out.push_back(convex_fixture(
      "g_-1/4(11)", galpha_spec(11, Rational(-1, 4)), 55,
      {2, 3, 2, 3, 2, 2, 2, 2, 2, 2, 1, 4, 2, 2, 2, 2, 2, 3, 2, 2, 2, 2, 3, 4}));
  out.push_back(convex_fixture(
      "g_0(11)", galpha_spec(11, 0), 55,
      {2, 2, 2, 2, 2, 4, 1, 3, 2, 2, 1, 4, 4, 2, 2, 4, 2, 2, 2, 2, 2, 2, 2, 2}));
  out.push_back(convex_fixture(
      "g_1/2(11)", galpha_spec(11, Rational(1, 2)), 110,
      {9, 10, 1, 6, 1, 4, 4, 4, 1, 7, 6, 4, 4, 4, 1, 6, 5, 8, 7, 11, 6, 1}));

  // The two cubic-irrational alpha values: no generator, but the support is
  // pinned by which single coefficient vanishes (the cubic's own numerator).
  {
    std::vector<BracketKey> generic = support_of(generate(galpha_spec(11, 3)));
    auto drop = [&](const BracketKey& gone) {
      std::vector<BracketKey> s;
      for (const auto& t : generic)
        if (!(t == gone)) s.push_back(t);
      return s;
    };
    Fixture f1;
    f1.name = "g_alpha1(11)";
    f1.kind = FixtureKind::ConvexCoefficients;
    f1.dim = 11;
    f1.support = drop({2, 9, 11});
    f1.vec = scaled(55, {3, 3, 2, 3, 2, 2, 1, 2, 2, 3, 3, 2, 2, 2, 2, 2, 3, 1, 2, 3, 2, 3, 2, 3});
    f1.expected_verdict = "YES";
    out.push_back(std::move(f1));
    Fixture f2;
    f2.name = "g_alpha2(11)";
    f2.kind = FixtureKind::ConvexCoefficients;
    f2.dim = 11;
    f2.support = drop({3, 8, 11});
    f2.vec = scaled(55, {1, 4, 2, 3, 2, 1, 3, 2, 2, 2, 3, 2, 2, 2, 2, 3, 2, 3, 2, 2, 2, 3, 3, 2});
    f2.expected_verdict = "YES";
    out.push_back(std::move(f2));
  }

  // 4.2 nilsoliton vectors for the B2 algebras.
  out.push_back(yes_fixture("b(6)", {Family::B6}, 52, {13, 16, 12, 4, 13, 12}));
  out.push_back(yes_fixture("b(8)", {Family::B8}, 221,
                            {44, 11, 33, 79, 17, 48, 17, 21, 17, 17, 78, 17}));
  out.push_back(yes_fixture("b1(10)", {Family::B1_10}, 29,
                            {2, 5, 4, 4, 4, 2, 4, 2, 4, 5, 4, 4, 4, 3, 4, 4, 3, 4}));
  out.push_back(yes_fixture("b2(10)", {Family::B2_10}, 29,
                            {3, 5, 3, 3, 3, 3, 5, 3, 3, 3, 3, 3, 5, 4, 1, 1, 3, 2, 6, 4}));
  const std::initializer_list<long> b12v = {33, 4,  93, 151, 105, 137, 8,  45, 20, 130,
                                            45, 45, 45, 45,  45,  84,  45, 45, 112, 45,
                                            45, 45, 45, 45,  45,  45,  45, 45, 172, 45};
  out.push_back(yes_fixture("b+(12)", {Family::B12Plus}, 675, b12v));
  out.push_back(yes_fixture("b-(12)", {Family::B12Minus}, 675, b12v));

  // 4.1 separating vectors for the non-Einstein infinite series.
  for (int n : {8, 9, 10, 11, 12})
    out.push_back(no_fixture("m2(" + std::to_string(n) + ")",
                             {Family::M2, n}, no_vector_m2(n)));
  for (int n : {9, 11})
    out.push_back(no_fixture("m01(" + std::to_string(n) + ")",
                             {Family::M01, n}, no_vector_m01(n)));
  for (int n : {8, 10, 12})
    out.push_back(no_fixture("m02(" + std::to_string(n) + ")",
                             {Family::M02, n}, no_vector_m02(n)));
  for (int n : {9, 11})
    out.push_back(no_fixture("m03(" + std::to_string(n) + ")",
                             {Family::M03, n}, no_vector_m03(n)));
  return out;
}

}  // namespace catalog
}  // namespace einsnil

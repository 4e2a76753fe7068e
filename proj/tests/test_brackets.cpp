#include <catch_amalgamated.hpp>

#include "lieflag/brackets.hpp"
#include "lieflag/error.hpp"
#include "lieflag/hermitian.hpp"
#include "lieflag/reference.hpp"

using namespace lieflag;

namespace {

struct Hermitian {
  std::string label;
  RootSystemPtr rs;
  std::shared_ptr<const ChevalleyAlgebra> alg;
  int alpha_prime;
  ParabolicSet j;
};

std::vector<Hermitian> hermitian_cases(bool with_e6) {
  std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                             {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}};
  if (with_e6) types.push_back({'E', 6});
  std::vector<Hermitian> out;
  for (auto [s, n] : types) {
    auto rs = RootSystem::build(CartanDatum::make(s, n));
    auto alg = ChevalleyAlgebra::build(rs);
    for (int ap : cominuscule_roots(*rs))
      out.push_back({rs->datum().name() + " omit " + std::to_string(ap + 1), rs, alg, ap,
                     ParabolicSet::omit(rs->rank(), ap)});
  }
  return out;
}

Quadratic q_of(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  Quadratic q;
  for (const auto& [a, b, c] : terms) q[{std::min(a, b), std::max(a, b)}] = c;
  return q;
}

int idx(const QuadraticBracketTable& t, const std::string& name) {
  const auto i = t.index_of(name);
  REQUIRE(i.has_value());
  return *i;
}

QuadraticBracketTable computed(char s, int n, int ap, RJConvention conv = RJConvention::Normalized) {
  auto rs = RootSystem::build(CartanDatum::make(s, n));
  auto alg = ChevalleyAlgebra::build(rs);
  return bracket_table(*alg, ParabolicSet::omit(n, ap), conv);
}

}  // namespace

TEST_CASE("smallest table: A2 with J = {alpha_1}") {
  const auto t = computed('A', 2, 1);
  REQUIRE(t.size() == 2);
  CHECK(t.names == std::vector<std::string>{"y[0,1]", "y[1,1]"});
  CHECK(t.coeffs.size() == 2);  // {y_0, y_1} and its negative
  CHECK(t.bracket(0, 1) == q_of({{0, 1, Rational(-1)}}));
  CHECK(t.bracket(1, 0) == q_of({{0, 1, Rational(1)}}));
  CHECK(t.bracket(0, 0).empty());
}

TEST_CASE("hermitian parabolics") {
  auto rs = RootSystem::build(CartanDatum::make('B', 3));
  CHECK(is_hermitian(*rs, ParabolicSet::omit(3, 0)));
  CHECK_FALSE(is_hermitian(*rs, ParabolicSet::omit(3, 1)));
  CHECK_FALSE(is_hermitian(*rs, ParabolicSet(3, {0})));
  auto alg = ChevalleyAlgebra::build(rs);
  CHECK_THROWS_AS(bracket_table(*alg, ParabolicSet::omit(3, 2)), DomainError);
  auto g2 = RootSystem::build(CartanDatum::make('G', 2));
  CHECK_FALSE(is_hermitian(*g2, ParabolicSet::omit(2, 0)));
}

TEST_CASE("root formula agrees with r_J acting by adjoint matrices") {
  for (const auto& h : hermitian_cases(true))
    for (auto conv : {RJConvention::Unit, RJConvention::Normalized}) {
      INFO(h.label << " " << to_string(conv));
      const auto t = bracket_table(*h.alg, h.j, conv);
      const auto oracle = reference::bracket_by_action(*h.alg, h.j, conv);
      CHECK(t.coeffs.size() == oracle.size());
      for (const auto& [ab, q] : oracle) CHECK(t.bracket(ab.first, ab.second) == q);
    }
}

TEST_CASE("antisymmetry, homogeneity and Jacobi in every Hermitian case") {
  for (const auto& h : hermitian_cases(true)) {
    INFO(h.label);
    const auto t = bracket_table(*h.alg, h.j);
    CHECK(t.size() == h.rs->num_positive() - static_cast<int>(h.rs->positive_roots_in(h.j.indices()).size()));
    CHECK_FALSE(antisymmetry_violation(t));
    CHECK_FALSE(homogeneity_violation(t));
    const auto jr = jacobi_check(t);
    CHECK(jr.ok());
    const long n = t.size();
    CHECK(jr.triples == n * (n - 1) * (n - 2) / 6);
  }
}

TEST_CASE("E6 table has 16 coordinates and 560 triples") {
  for (int ap : {0, 5}) {
    const auto t = computed('E', 6, ap);
    CHECK(t.size() == 16);
    const auto jr = jacobi_check(t);
    CHECK(jr.triples == 560);
    CHECK(jr.ok());
  }
}

TEST_CASE("unweighted formula breaks Jacobi when the Levi factor has two root lengths") {
  CHECK_FALSE(jacobi_check(computed('B', 3, 0, RJConvention::Unit)).ok());
  CHECK_FALSE(jacobi_check(computed('B', 4, 0, RJConvention::Unit)).ok());
  CHECK(jacobi_check(computed('B', 3, 0, RJConvention::Normalized)).ok());
  // Equal root lengths in Delta_J: the conventions differ by a global factor.
  const auto cu = computed('C', 3, 2, RJConvention::Unit);
  CHECK(scale_table(computed('C', 3, 2, RJConvention::Normalized), Rational(2)).coeffs == cu.coeffs);
  CHECK(computed('D', 4, 0, RJConvention::Unit).coeffs == computed('D', 4, 0, RJConvention::Normalized).coeffs);
}

TEST_CASE("jacobi_check on hand-made tables") {
  QuadraticBracketTable zero;
  zero.names = {"a", "b", "c"};
  zero.weights = {{1}, {1}, {1}};
  CHECK(jacobi_check(zero).ok());
  CHECK(jacobi_check(zero).triples == 1);

  // Log-canonical brackets are always Poisson.
  QuadraticBracketTable lc = zero;
  const Rational p[3][3] = {{0, 1, 3}, {-1, 0, Rational(1, 2)}, {-3, Rational(-1, 2), 0}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (p[a][b] != 0) lc.add(a, b, a, b, p[a][b]);
  CHECK_FALSE(antisymmetry_violation(lc));
  CHECK(jacobi_check(lc).ok());

  // {a, b} = c^2, {c, a} = ab: the cyclic sum is b c^2.
  QuadraticBracketTable bad = zero;
  bad.add(0, 1, 2, 2, 1);
  bad.add(1, 0, 2, 2, -1);
  bad.add(2, 0, 0, 1, 1);
  bad.add(0, 2, 0, 1, -1);
  const auto jr = jacobi_check(bad);
  CHECK_FALSE(jr.ok());
  CHECK(jr.failure == std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(jr.residual.empty());

  QuadraticBracketTable lopsided = zero;
  lopsided.add(0, 1, 0, 1, 1);
  CHECK(antisymmetry_violation(lopsided));
  QuadraticBracketTable heavy = zero;
  heavy.weights = {{1}, {2}, {3}};
  heavy.add(0, 1, 0, 0, 1);
  heavy.add(1, 0, 0, 0, -1);
  CHECK(homogeneity_violation(heavy));
}

TEST_CASE("golden closed forms") {
  SECTION("rectangular") {
    const auto t = golden_table(GoldenFamily::Rectangular, 1, 2);
    CHECK(t.bracket(idx(t, "x11"), idx(t, "x12")) == q_of({{0, 1, Rational(1)}}));
    const auto s = golden_table(GoldenFamily::Rectangular, 2, 2);
    CHECK(s.bracket(idx(s, "x11"), idx(s, "x22")) == q_of({{idx(s, "x12"), idx(s, "x21"), Rational(2)}}));
    CHECK(s.bracket(idx(s, "x12"), idx(s, "x21")).empty());
  }
  SECTION("odd Euclidean") {
    const auto t = golden_table(GoldenFamily::OddEuclidean, 3);
    CHECK(t.size() == 5);
    const int x2 = idx(t, "x2"), x3 = idx(t, "x3"), y2 = idx(t, "y2"), y3 = idx(t, "y3"), z = idx(t, "z");
    CHECK(t.bracket(x2, x3) == q_of({{x2, x3, Rational(1, 2)}}));
    CHECK(t.bracket(y2, y3) == q_of({{y2, y3, Rational(-1, 2)}}));
    CHECK(t.bracket(z, x2) == q_of({{z, x2, Rational(-1, 2)}}));
    CHECK(t.bracket(z, y3) == q_of({{z, y3, Rational(1, 2)}}));
    CHECK(t.bracket(x2, y3) == q_of({{x2, y3, Rational(1, 2)}}));
    CHECK(t.bracket(x2, y2) == q_of({{x3, y3, Rational(-1)}, {z, z, Rational(-1, 2)}}));
    CHECK(t.bracket(x3, y3) == q_of({{z, z, Rational(-1, 2)}}));
  }
  SECTION("even Euclidean") {
    const auto t = golden_table(GoldenFamily::EvenEuclidean, 4);
    CHECK(t.size() == 6);
    const int x2 = idx(t, "x2"), x3 = idx(t, "x3"), x4 = idx(t, "x4"), y3 = idx(t, "y3"), y4 = idx(t, "y4");
    CHECK(t.bracket(idx(t, "y2"), x2) == q_of({{x3, y3, Rational(1)}, {x4, y4, Rational(1)}}));
    CHECK(t.bracket(x4, y4).empty());
  }
  SECTION("symmetric") {
    const auto t = golden_table(GoldenFamily::Symmetric, 3);
    const int y11 = idx(t, "y11"), y12 = idx(t, "y12"), y22 = idx(t, "y22"), y13 = idx(t, "y13");
    CHECK(t.bracket(y11, y22) == q_of({{y12, y12, Rational(4)}}));
    CHECK(t.bracket(y11, y12) == q_of({{y11, y12, Rational(2)}}));
    CHECK(t.bracket(y12, y13) == q_of({{y12, y13, Rational(1)}}));
    CHECK(t.bracket(y11, idx(t, "y23")) == q_of({{y12, y13, Rational(4)}}));
    CHECK(t.bracket(y13, y22).empty());
  }
  SECTION("antisymmetric") {
    const auto t = golden_table(GoldenFamily::Antisymmetric, 4);
    const int y12 = idx(t, "y12"), y13 = idx(t, "y13"), y34 = idx(t, "y34");
    CHECK(t.bracket(y12, y13) == q_of({{y12, y13, Rational(1, 2)}}));
    CHECK(t.bracket(y12, y34) == q_of({{y13, idx(t, "y24"), Rational(1)}, {idx(t, "y14"), idx(t, "y23"), Rational(-1)}}));
  }
  SECTION("half-spin") {
    const auto t = golden_table(GoldenFamily::HalfSpin, 5);
    CHECK(t.size() == 16);
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        const int a = idx(t, "y" + std::to_string(i)), b = idx(t, "y" + std::to_string(j));
        CHECK(t.bracket(a, b) == q_of({{a, b, Rational(1)}}));
      }
    const int y1 = idx(t, "y1"), y123 = idx(t, "y123");
    CHECK(t.bracket(y1, y123) == q_of({{y1, y123, Rational(1, 2)}}));
    CHECK(half_spin_table(Rational(1)).bracket(y1, y123) == q_of({{y1, y123, Rational(1)}}));
  }
  CHECK_THROWS_AS(golden_table(GoldenFamily::HalfSpin, 4), InvalidArgument);
  CHECK_THROWS_AS(golden_table(GoldenFamily::Antisymmetric, 3), InvalidArgument);
  CHECK_THROWS_AS(parse_golden_family("spinor"), InvalidArgument);
  for (auto f : {GoldenFamily::Rectangular, GoldenFamily::OddEuclidean, GoldenFamily::Symmetric,
                 GoldenFamily::EvenEuclidean, GoldenFamily::Antisymmetric, GoldenFamily::HalfSpin})
    CHECK(parse_golden_family(to_string(f)) == f);
}

TEST_CASE("golden tables: structure and Jacobi") {
  struct G {
    GoldenFamily f;
    int n, m;
  };
  for (auto g : std::vector<G>{{GoldenFamily::Rectangular, 2, 3},
                               {GoldenFamily::OddEuclidean, 2, 0},
                               {GoldenFamily::OddEuclidean, 3, 0},
                               {GoldenFamily::OddEuclidean, 4, 0},
                               {GoldenFamily::Symmetric, 3, 0},
                               {GoldenFamily::Symmetric, 4, 0},
                               {GoldenFamily::EvenEuclidean, 4, 0},
                               {GoldenFamily::EvenEuclidean, 5, 0},
                               {GoldenFamily::Antisymmetric, 4, 0},
                               {GoldenFamily::Antisymmetric, 5, 0}}) {
    INFO(to_string(g.f) << " " << g.n);
    const auto t = golden_table(g.f, g.n, g.m);
    CHECK_FALSE(antisymmetry_violation(t));
    CHECK_FALSE(homogeneity_violation(t));
    CHECK(jacobi_check(t).ok());
  }
  const auto hs = golden_table(GoldenFamily::HalfSpin, 5);
  CHECK_FALSE(antisymmetry_violation(hs));
  CHECK_FALSE(homogeneity_violation(hs));
  // As printed, the pair sums carry 1/2 and the result is not Poisson; coefficient 1 is.
  CHECK_FALSE(jacobi_check(hs).ok());
  CHECK(jacobi_check(half_spin_table(Rational(1))).ok());
  CHECK(jacobi_check(half_spin_table(Rational(-1))).ok());
  CHECK_FALSE(jacobi_check(half_spin_table(Rational(0))).ok());
}

TEST_CASE("matching: identity, corruption, rescaling") {
  const auto c3 = computed('C', 3, 2);
  const auto self = match_tables(c3, c3);
  REQUIRE(self.success);
  CHECK(self.literal);
  CHECK(self.scale == 1);
  for (int a = 0; a < c3.size(); ++a) CHECK(self.lambda[a] == 1);
  CHECK(transform(c3, self.sigma, self.lambda, c3.names, c3.weights).coeffs == c3.coeffs);

  std::vector<int> id(c3.size());
  std::vector<Rational> lambda(c3.size());
  for (int a = 0; a < c3.size(); ++a) {
    id[a] = a;
    lambda[a] = Rational((a % 2 ? -1 : 1) * (a + 2), 3);
  }
  const auto rescaled = transform(c3, id, lambda, c3.names, c3.weights);
  CHECK(rescaled.coeffs != c3.coeffs);
  CHECK(jacobi_check(rescaled).ok());
  const auto back = match_tables(c3, rescaled);
  REQUIRE(back.success);
  CHECK_FALSE(back.literal);
  CHECK(transform(c3, back.sigma, back.lambda, rescaled.names, rescaled.weights).coeffs == rescaled.coeffs);

  const auto golden = golden_table(GoldenFamily::Symmetric, 3);
  QuadraticBracketTable corrupted = golden;
  auto& q = corrupted.coeffs.begin()->second;
  const auto key = corrupted.coeffs.begin()->first;
  q.begin()->second = -q.begin()->second;
  corrupted.coeffs[{key.second, key.first}].begin()->second *= -1;
  CHECK_FALSE(antisymmetry_violation(corrupted));
  const auto bad = match_tables_up_to_scale(computed('C', 3, 2, RJConvention::Unit), corrupted);
  CHECK_FALSE(bad.success);
  CHECK_FALSE(bad.failure.empty());
  CHECK(match_tables(computed('C', 3, 2, RJConvention::Unit), golden).success);

  CHECK_FALSE(match_tables(c3, golden_table(GoldenFamily::Symmetric, 4)).success);
}

TEST_CASE("computed tables against the closed forms") {
  struct M {
    char s;
    int n, ap;
    Rational scale;
  };
  // golden = scale * (rescaled computed); a global factor survives every rescaling.
  for (auto m : std::vector<M>{{'A', 2, 0, 1},
                               {'A', 3, 1, 1},
                               {'A', 4, 2, 1},
                               {'B', 2, 0, Rational(1, 2)},
                               {'B', 3, 0, Rational(1, 2)},
                               {'B', 4, 0, Rational(1, 2)},
                               {'C', 2, 1, 2},
                               {'C', 3, 2, 2},
                               {'C', 4, 3, 2},
                               {'D', 4, 0, Rational(1, 2)},
                               {'D', 4, 2, Rational(1, 2)},
                               {'D', 4, 3, Rational(1, 2)},
                               {'D', 5, 0, Rational(1, 2)},
                               {'D', 5, 4, Rational(1, 2)}}) {
    auto rs = RootSystem::build(CartanDatum::make(m.s, m.n));
    INFO(rs->datum().name() << " omit " << m.ap + 1);
    const auto t = computed(m.s, m.n, m.ap);
    const auto g = golden_for(*rs, m.ap);
    REQUIRE(g.has_value());
    const auto golden = golden_table(g->first, g->second.first, g->second.second);
    CHECK(match_tables(t, golden).success == (m.scale == 1));
    const auto rep = match_tables_up_to_scale(t, golden);
    REQUIRE(rep.success);
    CHECK(rep.scale == m.scale);
    const auto image = transform(t, rep.sigma, rep.lambda, golden.names, golden.weights);
    CHECK(scale_table(image, rep.scale).coeffs == golden.coeffs);
    CHECK(jacobi_check(image).ok());
  }
}

TEST_CASE("E6 against the half-spin form") {
  const auto literal = golden_table(GoldenFamily::HalfSpin, 5);
  const auto fixed = half_spin_table(Rational(1));
  for (int ap : {0, 5}) {
    const auto t = computed('E', 6, ap);
    CHECK_FALSE(match_tables_up_to_scale(t, literal).success);
    const auto rep = match_tables(t, fixed);
    REQUIRE(rep.success);
    CHECK(rep.scale == 1);
    CHECK(jacobi_check(transform(t, rep.sigma, rep.lambda, fixed.names, fixed.weights)).ok());
  }
}

TEST_CASE("golden_for covers the classical families") {
  auto fam = [](char s, int n, int ap) {
    return golden_for(*RootSystem::build(CartanDatum::make(s, n)), ap);
  };
  CHECK(fam('A', 4, 1)->first == GoldenFamily::Rectangular);
  CHECK(fam('A', 4, 1)->second == std::make_pair(3, 2));
  CHECK(fam('B', 3, 0)->first == GoldenFamily::OddEuclidean);
  CHECK(fam('C', 3, 2)->first == GoldenFamily::Symmetric);
  CHECK(fam('D', 5, 0)->first == GoldenFamily::EvenEuclidean);
  CHECK(fam('D', 5, 3)->first == GoldenFamily::Antisymmetric);
  CHECK(fam('E', 6, 5)->first == GoldenFamily::HalfSpin);
  CHECK_FALSE(fam('E', 7, 6).has_value());
}

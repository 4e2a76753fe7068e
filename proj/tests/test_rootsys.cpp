#include <catch_amalgamated.hpp>

#include "lieflag/error.hpp"
#include "lieflag/reference.hpp"
#include "lieflag/rootsys.hpp"

using namespace lieflag;

namespace {

std::vector<CartanDatum> all_small_types() {
  std::vector<CartanDatum> out;
  for (int n = 1; n <= 6; ++n) out.push_back(CartanDatum::make('A', n));
  for (int n = 2; n <= 5; ++n) out.push_back(CartanDatum::make('B', n));
  for (int n = 2; n <= 5; ++n) out.push_back(CartanDatum::make('C', n));
  for (int n = 4; n <= 6; ++n) out.push_back(CartanDatum::make('D', n));
  for (int n = 6; n <= 8; ++n) out.push_back(CartanDatum::make('E', n));
  out.push_back(CartanDatum::make('F', 4));
  out.push_back(CartanDatum::make('G', 2));
  return out;
}

int expected_positive(const CartanDatum& d) {
  const int n = d.rank();
  switch (d.series()) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("Cartan data validate rank bounds") {
  CHECK_THROWS_AS(CartanDatum::make('A', 0), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::make('B', 1), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::make('C', 1), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::make('D', 3), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::make('E', 5), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::make('E', 9), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::make('F', 3), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::make('G', 3), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::make('X', 3), InvalidArgument);
  CHECK(CartanDatum::make('B', 3).name() == "B3");
}

TEST_CASE("Cartan matrix entries") {
  for (const auto& d : all_small_types()) {
    for (int i = 0; i < d.rank(); ++i) {
      CHECK(d.cartan(i, i) == 2);
      for (int j = 0; j < d.rank(); ++j) {
        if (i == j) continue;
        CHECK(d.cartan(i, j) <= 0);
        CHECK(d.cartan(i, j) >= -3);
        CHECK((d.cartan(i, j) == 0) == (d.cartan(j, i) == 0));
      }
    }
  }
  // alpha_n short in B, long in C; alpha_1 short in G2.
  CHECK(CartanDatum::make('B', 3).cartan(2, 1) == -2);
  CHECK(CartanDatum::make('C', 3).cartan(1, 2) == -2);
  CHECK(CartanDatum::make('G', 2).cartan(0, 1) == -3);
}

TEST_CASE("positive roots agree with the reflection-orbit oracle") {
  for (const auto& d : all_small_types()) {
    auto rs = RootSystem::build(d);
    INFO(d.name());
    CHECK(rs->num_positive() == expected_positive(d));
    std::set<Root> got(rs->positive_roots().begin(), rs->positive_roots().end());
    CHECK(got == reference::positive_roots(d));
  }
}

TEST_CASE("small root counts") {
  CHECK(RootSystem::build(CartanDatum::make('A', 2))->num_positive() == 3);
  CHECK(RootSystem::build(CartanDatum::make('B', 2))->num_positive() == 4);
  CHECK(RootSystem::build(CartanDatum::make('G', 2))->num_positive() == 6);
  auto a2 = RootSystem::build(CartanDatum::make('A', 2));
  CHECK(a2->positive_root(0) == Root({1, 0}));
  CHECK(a2->positive_root(1) == Root({0, 1}));
  CHECK(a2->positive_root(2) == Root({1, 1}));
}

TEST_CASE("root order is by height then decreasing coefficients") {
  for (const auto& d : all_small_types()) {
    auto rs = RootSystem::build(d);
    for (int i = 0; i < d.rank(); ++i) CHECK(rs->simple_root(i) == Root::simple(d.rank(), i));
    for (int k = 1; k < rs->num_positive(); ++k) {
      const Root& a = rs->positive_root(k - 1);
      const Root& b = rs->positive_root(k);
      CHECK((a.height() < b.height() || (a.height() == b.height() && a > b)));
    }
  }
}

TEST_CASE("highest roots") {
  auto e6 = RootSystem::build(CartanDatum::make('E', 6));
  CHECK(e6->highest_root() == Root({1, 2, 2, 3, 2, 1}));
  CHECK(height(e6->highest_root(), 3) == 3);
  for (int n = 2; n <= 5; ++n) {
    auto a = RootSystem::build(CartanDatum::make('A', n));
    CHECK(a->highest_root() == Root(std::vector<int>(n, 1)));

    auto b = RootSystem::build(CartanDatum::make('B', n));
    std::vector<int> bt(n, 2);
    bt[0] = 1;
    CHECK(b->highest_root() == Root(bt));
    CHECK(height(b->highest_root(), 0) == 1);

    auto c = RootSystem::build(CartanDatum::make('C', n));
    std::vector<int> ct(n, 2);
    ct[n - 1] = 1;
    CHECK(c->highest_root() == Root(ct));
  }
  for (int n = 4; n <= 6; ++n) {
    auto d = RootSystem::build(CartanDatum::make('D', n));
    std::vector<int> dt(n, 2);
    dt[0] = dt[n - 2] = dt[n - 1] = 1;
    CHECK(d->highest_root() == Root(dt));
  }
  // theta is the unique coefficientwise maximum.
  for (const auto& d : all_small_types()) {
    auto rs = RootSystem::build(d);
    for (const Root& r : rs->positive_roots()) CHECK((rs->highest_root() - r).is_zero() == (r == rs->highest_root()));
    for (const Root& r : rs->positive_roots())
      for (int i = 0; i < d.rank(); ++i) CHECK(rs->highest_root()[i] >= r[i]);
  }
}

TEST_CASE("height and support") {
  auto a3 = RootSystem::build(CartanDatum::make('A', 3));
  CHECK(support(Root({1, 1, 0})) == std::vector<int>{0, 1});
  CHECK(support(Root::simple(3, 0)) == std::vector<int>{0});
  CHECK(height(Root::simple(3, 2), 2) == 1);
  CHECK_THROWS_AS(height(Root::simple(3, 2), 3), InvalidArgument);
  for (const auto& d : all_small_types()) {
    auto rs = RootSystem::build(d);
    CHECK(support(rs->highest_root()).size() == static_cast<std::size_t>(d.rank()));
  }
}

TEST_CASE("invariant form normalization") {
  for (const auto& d : all_small_types()) {
    auto rs = RootSystem::build(d);
    CHECK(rs->norm2(rs->highest_root()) == 2);
    for (const Root& r : rs->positive_roots()) {
      CHECK(rs->norm2(r) <= 2);
      if (rs->is_long(r)) {
        auto cv = rs->coroot(r);
        for (int i = 0; i < d.rank(); ++i) CHECK(cv[i] == r[i]);
      }
    }
  }
  auto b2 = RootSystem::build(CartanDatum::make('B', 2));
  CHECK(b2->norm2(Root::simple(2, 1)) == 1);
  auto g2 = RootSystem::build(CartanDatum::make('G', 2));
  CHECK(g2->norm2(Root::simple(2, 0)) == Rational(2, 3));
}

TEST_CASE("reflection closure") {
  for (const auto& d : all_small_types()) {
    if (d.rank() > 6) continue;
    auto rs = RootSystem::build(d);
    for (const Root& a : rs->positive_roots())
      for (const Root& b : rs->positive_roots()) {
        CHECK(rs->is_root(rs->reflect(b, a)));
        CHECK(rs->is_root(rs->reflect(-b, a)));
      }
  }
}

TEST_CASE("cominuscule heights are in {-1,0,1}") {
  for (const auto& d : all_small_types()) {
    auto rs = RootSystem::build(d);
    for (int p = 0; p < d.rank(); ++p) {
      if (rs->highest_root()[p] != 1) continue;
      for (const Root& r : rs->positive_roots()) CHECK(r[p] <= 1);
    }
  }
}

TEST_CASE("connected components and subsystem highest roots") {
  auto d5 = RootSystem::build(CartanDatum::make('D', 5));
  std::vector<int> sub{0, 2, 3, 4};
  CHECK(connected_component(*d5, sub, 0) == std::vector<int>{0});
  CHECK(connected_component(*d5, sub, 3) == std::vector<int>{2, 3, 4});
  std::vector<int> tail{2, 3, 4};
  CHECK(d5->highest_root_of(tail) == Root({0, 0, 1, 1, 1}));
}

TEST_CASE("classical realizations") {
  auto a4 = RootSystem::build(CartanDatum::make('A', 4));
  auto asc = ClassicalRealization::of(*a4, EpsilonOrder::Ascending);
  CHECK(asc.dimension() == 5);
  auto b1 = asc.from_epsilon(parse_epsilon("e3-e1", 5));
  REQUIRE(b1);
  CHECK(*b1 == Root({1, 1, 0, 0}));
  auto b2 = asc.from_epsilon(parse_epsilon("e4-e2", 5));
  REQUIRE(b2);
  CHECK(*b2 == Root({0, 1, 1, 0}));
  CHECK(*asc.from_epsilon(parse_epsilon("e3-e2", 5)) == Root::simple(4, 1));

  auto desc = ClassicalRealization::of(*a4);
  CHECK(*desc.from_epsilon(parse_epsilon("e1-e3", 5)) == Root({1, 1, 0, 0}));
  CHECK_FALSE(desc.from_epsilon(parse_epsilon("e1", 5)));

  for (char s : {'B', 'C', 'D'}) {
    auto rs = RootSystem::build(CartanDatum::make(s, 4));
    auto cr = ClassicalRealization::of(*rs);
    for (const Root& r : rs->positive_roots()) {
      auto v = cr.to_epsilon(r);
      Rational n2 = 0;
      for (auto& x : v) n2 += x * x;
      // epsilon lengths are proportional to the normalized form
      CHECK(n2 / rs->norm2(r) == (s == 'C' ? 2 : 1));
      CHECK(*cr.from_epsilon(v) == r);
    }
  }
  auto e6 = RootSystem::build(CartanDatum::make('E', 6));
  CHECK_THROWS_AS(ClassicalRealization::of(*e6), InvalidArgument);
  CHECK_THROWS_AS(ClassicalRealization::of(*RootSystem::build(CartanDatum::make('B', 3)), EpsilonOrder::Ascending),
                  InvalidArgument);
}

TEST_CASE("epsilon parser") {
  auto v = parse_epsilon("2e1-e3+e2", 3);
  CHECK(v == std::vector<Rational>{2, 1, -1});
  CHECK(parse_epsilon("-e2", 3) == std::vector<Rational>{0, -1, 0});
  CHECK_THROWS_AS(parse_epsilon("e4", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_epsilon("e0", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_epsilon("e1e2", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_epsilon("", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_epsilon("x1", 3), InvalidArgument);
}

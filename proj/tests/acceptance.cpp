// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit status is 0 when every criterion was evaluated; with --strict it is the number of
// criteria that failed.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "lieflag/brackets.hpp"
#include "lieflag/hermitian.hpp"
#include "lieflag/reference.hpp"
#include "lieflag/strata.hpp"

using namespace lieflag;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

RootSystemPtr rs_of(char s, int n) { return RootSystem::build(CartanDatum::make(s, n)); }

std::vector<ParabolicSet> all_subsets(int n) {
  std::vector<ParabolicSet> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    out.emplace_back(n, idx);
  }
  return out;
}

std::vector<std::pair<char, int>> rank_le4_plus_e6() {
  return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
          {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'E', 6}};
}

std::string label(const RootSystem& rs, int ap) { return rs.datum().name() + " omit " + std::to_string(ap + 1); }

void criterion1(Outcome& o) {
  double worst = 0;
  int cases = 0;
  for (auto [s, n] : rank_le4_plus_e6()) {
    auto rs = rs_of(s, n);
    WeylGroup w(rs);
    for (const auto& j : all_subsets(n)) {
      const auto start = std::chrono::steady_clock::now();
      ++cases;
      const std::string tag = rs->datum().name() + " J=" + to_string(j);
      const auto mins = min_coset_reps(w, j);
      const auto maxs = max_coset_reps(w, j);
      const auto index = w.size() / w.parabolic_subgroup(j).size();
      o.require(mins.size() == index && maxs.size() == index, tag + " representative count");
      // Independent description: no right descent in J (minimal) or every J letter a descent (maximal).
      std::vector<WeylGroup::Index> dmin, dmax;
      for (WeylGroup::Index x = 0; x < w.size(); ++x) {
        bool none = true, all = true;
        for (int i : j.indices()) {
          const bool d = w.is_right_descent(x, i);
          none = none && !d;
          all = all && d;
        }
        if (none) dmin.push_back(x);
        if (all) dmax.push_back(x);
      }
      o.require(dmin == mins && dmax == maxs, tag + " descent description");
      try {
        coset_tables(w, j);
      } catch (const std::logic_error& e) {
        o.require(false, tag + " bijections: " + e.what());
      }
      worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
  }
  o.require(worst < 60, "runtime per case");
  o.note << cases << " (type, J) cases; slowest case " << worst << " s";
}

void criterion2(Outcome& o) {
  auto count = [](char s, int n) {
    WeylGroup w(rs_of(s, n));
    return enumerate_strata(w, ParabolicSet::empty(n)).size();
  };
  const auto a1 = count('A', 1), a2 = count('A', 2);
  o.require(a1 == 3 && a2 == 19, "A1/A2 counts");
  int cases = 0;
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                                                        {'C', 2}, {'C', 3}, {'G', 2}}) {
    auto rs = rs_of(s, n);
    WeylGroup w(rs);
    for (const auto& j : all_subsets(n)) {
      ++cases;
      std::vector<std::pair<WeylGroup::Index, WeylGroup::Index>> got;
      for (auto x : enumerate_strata(w, j)) got.emplace_back(x.w1, x.w2);
      auto want = reference::strata_pairs(w, j);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      o.require(got == want, rs->datum().name() + " J=" + to_string(j));
    }
  }
  o.note << "|Omega| A1 = " << a1 << ", A2 = " << a2 << "; " << cases << " (type, J) cases equal the brute-force scan";
}

void criterion3(Outcome& o) {
  long pairs = 0;
  int cases = 0;
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                                                        {'C', 2}, {'C', 3}, {'G', 2}}) {
    auto rs = rs_of(s, n);
    WeylGroup w(rs);
    for (const auto& j : all_subsets(n)) {
      ++cases;
      const std::string tag = rs->datum().name() + " J=" + to_string(j);
      const auto p = closure_poset(w, j);
      const auto viol = partial_order_violation(p);
      o.require(!viol, tag + " partial order: " + viol.value_or(""));
      const int m = static_cast<int>(p.nodes.size());
      if (j.size() == 0)
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            ++pairs;
            const bool want = w.bruhat_leq(p.nodes[b].w1, p.nodes[a].w1) && w.bruhat_leq(p.nodes[a].w2, p.nodes[b].w2);
            o.require(p.leq(a, b) == want, tag + " componentwise");
          }
      for (auto cell : max_coset_reps(w, j)) {
        const auto strata = cell_strata(w, cell, j);
        for (auto a : strata)
          for (auto b : strata) {
            ++pairs;
            o.require(cell_closure_leq(w, a, b) == closure_leq(w, j, a, b), tag + " within-cell order");
          }
      }
    }
  }
  o.note << cases << " posets are partial orders; " << pairs << " pairs compared";
}

void criterion4(Outcome& o) {
  struct K {
    char s;
    int n, ap, k;
  };
  std::vector<K> ks;
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) ks.push_back({'A', n, m - 1, std::min(m, n + 1 - m)});
  for (int n = 2; n <= 4; ++n) ks.push_back({'B', n, 0, 2});
  for (int n = 2; n <= 4; ++n) ks.push_back({'C', n, n - 1, n});
  for (int n = 4; n <= 5; ++n) {
    ks.push_back({'D', n, 0, 2});
    ks.push_back({'D', n, n - 2, n / 2});
    ks.push_back({'D', n, n - 1, n / 2});
  }
  ks.push_back({'E', 6, 0, 2});
  ks.push_back({'E', 6, 5, 2});
  ks.push_back({'E', 7, 6, 3});
  for (const auto& x : ks) {
    auto rs = rs_of(x.s, x.n);
    const auto cd = CominusculeDatum::make(*rs, x.ap);
    const auto c = cascade(*rs, cd);
    const auto tag = label(*rs, x.ap);
    o.require(c.k() == x.k, tag + " k = " + std::to_string(c.k()));
    o.require(reference::orthogonal_long_clique(*rs, cd.j) == c.k(), tag + " clique oracle");
    o.require(!cascade_violation(*rs, cd, c), tag + " cascade invariants");
    o.require(static_cast<int>(orbit_reps(c).size()) == (x.k + 1) * (x.k + 2) / 2, tag + " orbit count");
  }
  o.note << ks.size() << " cominuscule cases match the formula and the clique oracle";
}

void criterion5(Outcome& o) {
  int cases = 0, literal = 0, double_cosets = 0;
  std::string literal_cases;
  for (auto [s, n] : rank_le4_plus_e6()) {
    auto rs = rs_of(s, n);
    WeylGroup w(rs);
    for (int ap : cominuscule_roots(*rs)) {
      ++cases;
      const auto cd = CominusculeDatum::make(*rs, ap);
      const auto c = cascade(*rs, cd);
      const bool eq = check_minreps(w, c, cd.j);
      literal += eq;
      if (eq) literal_cases += " " + label(*rs, ap);
      const bool dc = check_double_cosets(w, c, cd.j);
      auto mins = cascade_coset_minima(w, c, cd.j);
      std::sort(mins.begin(), mins.end());
      const bool minima = mins == double_coset_min_reps(w, cd.j, cd.j);
      double_cosets += dc && minima;
      o.require(eq, label(*rs, ap) + " {w_s} differs from the double-coset minima");
    }
  }
  o.note << "{w_s} equals the minimal double-coset representatives in " << literal << "/" << cases
         << " cases (" << (literal_cases.empty() ? " none" : literal_cases)
         << " ); in " << double_cosets << "/" << cases
         << " cases the w_s lie in distinct (J,J) double cosets covering W and the minima of those cosets are"
            " exactly the minimal representatives";
}

void criterion6(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  int points = 0;
  std::vector<std::pair<char, int>> types = {{'A', 2}, {'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}};
  for (auto [s, n] : types) {
    auto rs = rs_of(s, n);
    auto alg = ChevalleyAlgebra::build(rs);
    std::vector<int> aps = cominuscule_roots(*rs);
    if (s == 'D') aps = {0, 3};
    for (int ap : aps) {
      const auto cd = CominusculeDatum::make(*rs, ap);
      const auto c = cascade(*rs, cd);
      for (auto [t, u] : orbit_reps(c)) {
        ++points;
        const auto v = vanishing_check(*alg, base_point(*alg, c, t, u), cd.j, RJConvention::Unit);
        o.require(v.direct_vanishes(),
                  label(*rs, ap) + " (t,s) = (" + std::to_string(t) + "," + std::to_string(u) + ")");
      }
    }
  }
  auto rs = rs_of('A', 4);
  auto alg = ChevalleyAlgebra::build(rs);
  const auto real = ClassicalRealization::of(*rs, EpsilonOrder::Ascending);
  auto eps = [&](const char* text) { return *real.from_epsilon(parse_epsilon(text, real.dimension())); };
  const auto j = ParabolicSet::omit(4, 1);
  const auto v = vanishing_check(*alg, base_point_custom(*alg, j, {eps("e3-e1"), eps("e4-e2")}, 0), j,
                                 RJConvention::Unit);
  o.require(!v.direct_vanishes(), "A4 custom point vanishes");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 300, "runtime");
  o.note << points << " base points vanish (r_J unit weights, Ad_x orientation); A4 point with betas e3-e1, e4-e2 "
         << "leaves " << v.direct.size() << " nonzero term(s); " << secs << " s";
}

void criterion7(Outcome& o) {
  long instances = 0;
  int cases = 0;
  for (auto [s, n] : rank_le4_plus_e6()) {
    if (s == 'E') continue;
    auto rs = rs_of(s, n);
    auto alg = ChevalleyAlgebra::build(rs);
    for (int ap : cominuscule_roots(*rs)) {
      ++cases;
      const auto cd = CominusculeDatum::make(*rs, ap);
      const auto c = cascade(*rs, cd);
      for (const auto& [name, scan] : std::vector<std::pair<std::string, IdentityScan>>{
               {"reflection", check_reflection_identity(*alg, cd.j)},
               {"pairing", check_pairing_cancellation(*alg, c, cd.j)},
               {"expansion", check_first_order_expansion(*alg, c, cd.j, RJConvention::Unit)}}) {
        instances += scan.checked;
        o.require(scan.ok(), label(*rs, ap) + " " + name + ": " + (scan.ok() ? "" : scan.failures.front()));
      }
    }
  }
  o.note << cases << " Hermitian cases, " << instances << " identity instances checked";
}

void criterion8(Outcome& o) {
  long strata = 0;
  int cases = 0;
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                                                        {'C', 2}, {'C', 3}}) {
    auto rs = rs_of(s, n);
    WeylGroup w(rs);
    for (int ap : cominuscule_roots(*rs)) {
      ++cases;
      const auto cd = CominusculeDatum::make(*rs, ap);
      const auto c = cascade(*rs, cd);
      const auto w0j = w.longest_of(cd.j);
      std::set<std::pair<int, int>> classes;
      for (auto ix : enumerate_strata(w, cd.j)) {
        ++strata;
        try {
          const auto lo = leaf_orbit(w, c, cd.j, ix);
          classes.insert({lo.t, lo.s});
        } catch (const std::logic_error& e) {
          o.require(false, label(*rs, ap) + ": " + e.what());
        }
        o.require(reference::factorization_count(w, w.multiply(ix.w1, w0j), cd.j, cd.j) == 1 &&
                      reference::factorization_count(w, ix.w2, cd.j, cd.j) == 1,
                  label(*rs, ap) + " factorization not unique");
      }
      const int k = c.k();
      o.require(static_cast<int>(classes.size()) == (k + 1) * (k + 2) / 2, label(*rs, ap) + " class count");
    }
  }
  o.note << strata << " strata in " << cases << " Hermitian cases; every class count is (k+1)(k+2)/2";
}

void criterion9(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  int tables = 0;
  for (auto [s, n] : rank_le4_plus_e6()) {
    auto rs = rs_of(s, n);
    auto alg = ChevalleyAlgebra::build(rs);
    for (int ap : cominuscule_roots(*rs)) {
      ++tables;
      const auto t = bracket_table(*alg, ParabolicSet::omit(n, ap));
      o.require(!antisymmetry_violation(t) && !homogeneity_violation(t), label(*rs, ap) + " table shape");
      const auto jr = jacobi_check(t);
      o.require(jr.ok(), label(*rs, ap) + " Jacobi");
      if (s == 'E') o.require(t.size() == 16 && jr.triples == 560, "E6 size");
    }
  }
  o.note << tables << " computed tables pass (alpha-terms weighted by <a,a>/2); ";

  struct G {
    GoldenFamily f;
    int n;
    char s;
    int rank, ap;
  };
  const std::vector<G> goldens = {{GoldenFamily::OddEuclidean, 3, 'B', 3, 0},
                                  {GoldenFamily::Symmetric, 3, 'C', 3, 2},
                                  {GoldenFamily::EvenEuclidean, 4, 'D', 4, 0},
                                  {GoldenFamily::Antisymmetric, 4, 'D', 4, 3},
                                  {GoldenFamily::HalfSpin, 5, 'E', 6, 0}};
  for (const auto& g : goldens) {
    const auto golden = golden_table(g.f, g.n);
    const bool jac = jacobi_check(golden).ok();
    o.require(jac, to_string(g.f) + " closed form fails Jacobi");
    auto rs = rs_of(g.s, g.rank);
    auto alg = ChevalleyAlgebra::build(rs);
    const auto t = bracket_table(*alg, ParabolicSet::omit(g.rank, g.ap));
    const auto strict = match_tables(t, golden);
    o.require(strict.success, to_string(g.f) + " no rescaling witness");
    const auto scaled = match_tables_up_to_scale(t, golden);
    o.note << to_string(g.f) << ": Jacobi " << (jac ? "ok" : "FAILS") << ", rescaling "
           << (strict.success ? "found" : "none");
    if (!strict.success && scaled.success) o.note << " (found with global factor " << scaled.scale.get_str() << ")";
    o.note << "; ";
  }
  const auto fixed = half_spin_table(Rational(1));
  auto e6 = rs_of('E', 6);
  auto alg = ChevalleyAlgebra::build(e6);
  const auto m = match_tables(bracket_table(*alg, ParabolicSet::omit(6, 0)), fixed);
  o.note << "half-spin with pair coefficient 1: Jacobi " << (jacobi_check(fixed).ok() ? "ok" : "FAILS")
         << ", rescaling " << (m.success ? "found" : "none") << "; ";
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 600, "runtime");
  o.note << secs << " s";
}

void criterion10(Outcome& o) {
  const auto order = weyl_group_order(CartanDatum::make('E', 7));
  o.require(order == 2903040, "E7 order");
  o.note << "no result requires full scale; E7 strata (|W| = " << order
         << ") are left out of this run, and E7 enters only through its cascade (criterion 4)";
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::string(argv[1]) == "--strict";
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"coset machinery", criterion1},       {"strata enumeration", criterion2}, {"closure order", criterion3},
      {"cascade", criterion4},               {"cascade products", criterion5},   {"vanishing", criterion6},
      {"identity scans", criterion7},        {"leaf orbits", criterion8},        {"brackets", criterion9},
      {"scale", criterion10}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
              << secs << " s) " << o.note.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return strict ? failed : 0;
}

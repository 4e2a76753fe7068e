// lieflag: command-line front end. Reports are JSON on stdout, diagnostics on stderr.
// Exit status: 0 success, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lieflag/brackets.hpp"
#include "lieflag/error.hpp"
#include "lieflag/hermitian.hpp"
#include "lieflag/io.hpp"
#include "lieflag/strata.hpp"

using namespace lieflag;
using io::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string sub;
  char type = 0;
  int rank = 0;
  std::string parabolic;
  bool parabolic_given = false;
  int omit = 0;
  std::string format = "json";
  std::uint64_t cap = WeylGroup::kDefaultCap;
  std::size_t strata_cap = kDefaultStrataCap;
  std::string convention = "unit";
  std::string orientation = "direct";
  std::string bracket_convention = "normalized";
  std::vector<std::string> betas;
  int t = 0;
  std::string expect = "vanish";
  std::string epsilon_order = "descending";
  std::string check;
  std::string family;
  int size = 0;
  int size2 = 0;
  std::string pair_coefficient;
  std::string fixtures;
  std::string fixture_out;
  bool allow_scale = false;
  long max_bijections = 100000;
};

struct Report {
  Json spec;
  Json conventions;
  Json result = Json::object();
  Json checks = Json::array();
  bool failed = false;

  void check(const std::string& name, bool ok, Json witness = nullptr) {
    Json c = {{"name", name}, {"status", ok ? "pass" : "fail"}};
    if (!witness.is_null()) c["witness"] = std::move(witness);
    checks.push_back(std::move(c));
    failed = failed || !ok;
  }

  Json document() const {
    Json d;
    d["spec"] = spec;
    d["version"] = kVersion;
    d["conventions"] = conventions;
    d["result"] = result;
    d["checks"] = checks;
    return d;
  }
};

Json word_json(const std::vector<int>& w) {
  Json out = Json::array();
  for (int s : w) out.push_back(s + 1);
  return out;
}

Json word_json(const WeylGroup& w, WeylGroup::Index x) { return word_json(w.word(x)); }

Json indices_json(const std::vector<int>& v) { return word_json(v); }

Json root_json(const Root& r) { return r.coeffs(); }

RootSystemPtr root_system(const Options& o) {
  if (o.type == 0 || o.rank == 0) throw UsageError("--type and --rank are required");
  try {
    return RootSystem::build(CartanDatum::make(o.type, o.rank));
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("invalid Cartan datum: ") + e.what());
  }
}

ParabolicSet parse_parabolic(const std::string& text, int rank) {
  auto index = [&](const std::string& s) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("bad simple root index \"" + s + "\"");
    }
    if (v < 1 || v > rank) throw UsageError("simple root index " + s + " out of range 1.." + std::to_string(rank));
    return v - 1;
  };
  if (text.rfind("omit=", 0) == 0) return ParabolicSet::omit(rank, index(text.substr(5)));
  std::vector<int> ids;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" "));
    token.erase(token.find_last_not_of(" ") + 1);
    if (!token.empty()) ids.push_back(index(token));
  }
  return ParabolicSet(rank, ids);
}

ParabolicSet parabolic_of(const Options& o, int rank) {
  if (o.omit != 0) {
    if (o.parabolic_given) throw UsageError("give either --omit or --parabolic, not both");
    return parse_parabolic("omit=" + std::to_string(o.omit), rank);
  }
  return parse_parabolic(o.parabolic, rank);
}

int omitted_root(const Options& o, const RootSystem& rs) {
  const std::string text = o.omit != 0 ? "omit=" + std::to_string(o.omit) : o.parabolic;
  if (text.rfind("omit=", 0) != 0) throw UsageError("this command needs --omit <index> (or --parabolic omit=<index>)");
  const auto j = parse_parabolic(text, rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    if (!j.contains(i)) return i;
  throw UsageError("bad --omit");
}

RJConvention rj_convention(const std::string& s) {
  return s == "normalized" ? RJConvention::Normalized : RJConvention::Unit;
}

Json datum_spec(const Options& o) {
  Json s;
  s["command"] = o.command;
  if (!o.sub.empty()) s["subcommand"] = o.sub;
  if (o.type) s["type"] = std::string(1, o.type);
  if (o.rank) s["rank"] = o.rank;
  return s;
}

void run_roots(const Options& o, Report& rep) {
  const auto rs = root_system(o);
  rep.spec = datum_spec(o);
  Json roots = Json::array();
  for (int k = 0; k < rs->num_positive(); ++k) {
    const Root& r = rs->positive_root(k);
    roots.push_back({{"index", k + 1},
                     {"coefficients", root_json(r)},
                     {"height", r.height()},
                     {"norm2", io::rational_string(rs->norm2(r))},
                     {"long", rs->is_long(r)}});
  }
  rep.result["name"] = rs->datum().name();
  rep.result["cartan_matrix"] = rs->datum().cartan_matrix();
  rep.result["num_positive"] = rs->num_positive();
  rep.result["highest_root"] = root_json(rs->highest_root());
  rep.result["roots"] = roots;
}

void run_weyl(const Options& o, Report& rep) {
  const auto rs = root_system(o);
  const auto j = parabolic_of(o, rs->rank());
  rep.spec = datum_spec(o);
  rep.spec["parabolic"] = indices_json(j.indices());
  const WeylGroup w(rs, o.cap);
  rep.result["order"] = w.size();
  rep.result["longest_word"] = word_json(w, w.longest());
  rep.result["longest_length"] = w.length(w.longest());
  const auto mins = min_coset_reps(w, j);
  const auto maxs = max_coset_reps(w, j);
  const auto wj = w.parabolic_subgroup(j);
  Json min_words = Json::array(), max_words = Json::array();
  for (auto x : mins) min_words.push_back(word_json(w, x));
  for (auto x : maxs) max_words.push_back(word_json(w, x));
  rep.result["parabolic_order"] = wj.size();
  rep.result["longest_of_parabolic"] = word_json(w, w.longest_of(j));
  rep.result["min_reps"] = min_words;
  rep.result["max_reps"] = max_words;
  rep.check("coset_count", mins.size() * wj.size() == w.size() && maxs.size() == mins.size(),
            {{"min_reps", mins.size()}, {"max_reps", maxs.size()}, {"index", w.size() / wj.size()}});
  bool ok = true;
  std::string why;
  try {
    coset_tables(w, j);
  } catch (const std::logic_error& e) {
    ok = false;
    why = e.what();
  }
  rep.check("coset_bijections", ok, why.empty() ? Json(nullptr) : Json(why));
}

Json stratum_json(const WeylGroup& w, StratumId s) {
  return {{"w1", word_json(w, s.w1)}, {"w2", word_json(w, s.w2)}, {"dimension", leaf_dimension(w, s)}};
}

void run_strata(const Options& o, Report& rep) {
  const auto rs = root_system(o);
  const auto j = parabolic_of(o, rs->rank());
  rep.spec = datum_spec(o);
  rep.spec["parabolic"] = indices_json(j.indices());
  const WeylGroup w(rs, o.cap);
  const auto strata = enumerate_strata(w, j, o.strata_cap);
  Json list = Json::array();
  for (auto s : strata) list.push_back(stratum_json(w, s));
  rep.result["count"] = strata.size();
  rep.result["strata"] = list;
}

void run_closure(const Options& o, Report& rep) {
  const auto rs = root_system(o);
  const auto j = parabolic_of(o, rs->rank());
  rep.spec = datum_spec(o);
  rep.spec["parabolic"] = indices_json(j.indices());
  const WeylGroup w(rs, o.cap);
  const auto poset = closure_poset(w, j, o.strata_cap);
  Json nodes = Json::array(), covers = Json::array();
  for (auto s : poset.nodes) nodes.push_back(stratum_json(w, s));
  for (auto [a, b] : poset.covers) covers.push_back({a + 1, b + 1});
  rep.result["count"] = poset.nodes.size();
  rep.result["strata"] = nodes;
  rep.result["covers"] = covers;
  const auto po = partial_order_violation(poset);
  rep.check("partial_order", !po, po ? Json(*po) : Json(nullptr));
  const auto dm = dimension_monotonicity_violation(w, poset);
  rep.check("dimension_monotone", !dm, dm ? Json({dm->first + 1, dm->second + 1}) : Json(nullptr));
}

Json cascade_json(const Cascade& c) {
  Json betas = Json::array(), gammas = Json::array();
  for (const auto& b : c.betas) betas.push_back(root_json(b));
  for (const auto& g : c.gammas) gammas.push_back(indices_json(g));
  return {{"k", c.k()}, {"betas", betas}, {"gammas", gammas}};
}

void scan_check(Report& rep, const std::string& name, const IdentityScan& s) {
  Json w = {{"instances", s.checked}};
  if (!s.ok()) w["first_failure"] = s.failures.front();
  rep.check(name, s.ok(), w);
}

Root parse_beta(const std::string& text, const RootSystem& rs, const std::string& order) {
  if (text.find('e') != std::string::npos) {
    const auto real =
        ClassicalRealization::of(rs, order == "ascending" ? EpsilonOrder::Ascending : EpsilonOrder::Descending);
    const auto r = real.from_epsilon(parse_epsilon(text, real.dimension()));
    if (!r) throw InvalidArgument("\"" + text + "\" is not in the root lattice");
    return *r;
  }
  std::vector<int> coeffs;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) coeffs.push_back(std::stoi(token));
  if (static_cast<int>(coeffs.size()) != rs.rank()) throw InvalidArgument("root \"" + text + "\" has wrong length");
  return Root(coeffs);
}

void run_hermitian(const Options& o, Report& rep) {
  const auto rs = root_system(o);
  const int ap = omitted_root(o, *rs);
  rep.spec = datum_spec(o);
  rep.spec["omit"] = ap + 1;
  const auto cd = CominusculeDatum::make(*rs, ap);
  const auto c = cascade(*rs, cd);
  rep.result["alpha_prime"] = ap + 1;
  rep.result["theta_restricted"] = cd.theta_restricted;
  rep.result["cascade"] = cascade_json(c);
  if (o.sub == "cascade") {
    const auto viol = cascade_violation(*rs, cd, c);
    rep.check("cascade_invariants", !viol, viol ? Json(*viol) : Json(nullptr));
    const WeylGroup w(rs, o.cap);
    Json prods = Json::array(), mins = Json::array(), reps = Json::array();
    for (auto x : cascade_products(w, c)) prods.push_back(word_json(w, x));
    for (auto x : cascade_coset_minima(w, c, cd.j)) mins.push_back(word_json(w, x));
    for (auto [t, s] : orbit_reps(c)) reps.push_back({t, s});
    rep.result["orbit_reps"] = reps;
    rep.result["cascade_products"] = prods;
    rep.result["double_coset_minima"] = mins;
    rep.check("double_cosets", check_double_cosets(w, c, cd.j));
    return;
  }
  const auto alg = ChevalleyAlgebra::build(rs);
  const auto conv = rj_convention(o.convention);
  const bool direct = o.orientation == "direct";
  auto vanishes = [&](const VanishingResult& v) { return direct ? v.direct_vanishes() : v.inverse_vanishes(); };
  Json points = Json::array();
  if (!o.betas.empty()) {
    std::vector<Root> betas;
    for (const auto& b : o.betas) betas.push_back(parse_beta(b, *rs, o.epsilon_order));
    const auto bp = base_point_custom(*alg, cd.j, betas, o.t);
    const auto v = vanishing_check(*alg, bp, cd.j, conv);
    Json bj = Json::array();
    for (const auto& b : betas) bj.push_back(root_json(b));
    points.push_back({{"betas", bj},
                      {"t", o.t},
                      {"direct_vanishes", v.direct_vanishes()},
                      {"inverse_vanishes", v.inverse_vanishes()},
                      {"component_terms", (direct ? v.direct : v.inverse).size()}});
    rep.result["points"] = points;
    const bool want = o.expect == "vanish";
    rep.check(want ? "vanishing" : "nonvanishing", vanishes(v) == want);
    return;
  }
  for (auto [t, s] : orbit_reps(c)) {
    const auto v = vanishing_check(*alg, base_point(*alg, c, t, s), cd.j, conv);
    points.push_back({{"t", t},
                      {"s", s},
                      {"direct_vanishes", v.direct_vanishes()},
                      {"inverse_vanishes", v.inverse_vanishes()}});
    rep.check("vanishing t=" + std::to_string(t) + " s=" + std::to_string(s), vanishes(v));
  }
  rep.result["points"] = points;
  scan_check(rep, "reflection_identity", check_reflection_identity(*alg, cd.j));
  scan_check(rep, "pairing_cancellation", check_pairing_cancellation(*alg, c, cd.j));
  scan_check(rep, "first_order_expansion", check_first_order_expansion(*alg, c, cd.j, conv));
  scan_check(rep, "commutation", check_commutation(*alg, c));
}

std::string provenance_note(GoldenFamily f) {
  switch (f) {
    case GoldenFamily::Rectangular:
      return "Standard quadratic bracket on p x q matrices, the quasiclassical limit of quantum matrices: "
             "{x_ij, x_il} = x_ij x_il, {x_ij, x_kj} = x_ij x_kj, {x_ij, x_kl} = 2 x_il x_kj for i<k, j<l.";
    case GoldenFamily::OddEuclidean:
      return "Odd dimensional quantum Euclidean space, quasiclassical limit, on x_2..x_N, y_2..y_N, z for "
             "so(2N+1) with J all simple roots but the first; relations written for 2{.,.}.";
    case GoldenFamily::Symmetric:
      return "Quantum symmetric matrices, quasiclassical limit, on y_ij (i <= j) for sp(2N) with J all simple "
             "roots but the last.";
    case GoldenFamily::EvenEuclidean:
      return "Even dimensional quantum Euclidean space, quasiclassical limit, on x_2..x_N, y_2..y_N for so(2N) "
             "with J all simple roots but the first; relations written for 2{.,.}.";
    case GoldenFamily::Antisymmetric:
      return "Quantum antisymmetric matrices, quasiclassical limit, on y_ij (i < j) for so(2N) with J all simple "
             "roots but the last; displayed with 2{.,.}.";
    case GoldenFamily::HalfSpin:
      return "Half-spin representation of so(10) for E6 with J all simple roots but the first; coordinates y_I, "
             "I odd subsets of {1..5}; pair sums carry 1/2 exactly as printed (this version is not Poisson).";
  }
  return "";
}

QuadraticBracketTable load_golden(const Options& o, GoldenFamily f, int size, int size2, Json& provenance) {
  if (!o.fixtures.empty()) {
    std::string name = to_string(f) + "-" + std::to_string(size);
    if (f == GoldenFamily::Rectangular) name += "x" + std::to_string(size2);
    const auto path = std::filesystem::path(o.fixtures) / (name + ".json");
    std::ifstream in(path);
    if (!in) throw UsageError("fixture not found: " + path.string());
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("unreadable fixture " + path.string() + ": " + e.what());
    }
    provenance = {{"source", path.string()}};
    if (j.contains("provenance")) provenance["note"] = j["provenance"];
    return io::table_from_json(j.at("table"));
  }
  provenance = {{"source", "built-in"}};
  if (f == GoldenFamily::HalfSpin && !o.pair_coefficient.empty())
    return half_spin_table(io::parse_rational(o.pair_coefficient));
  return golden_table(f, size, size2);
}

Json jacobi_witness(const QuadraticBracketTable& t, const JacobiReport& jr) {
  Json w = {{"triples", jr.triples}};
  if (jr.failure) {
    const auto& f = *jr.failure;
    w["triple"] = {t.names[f[0]], t.names[f[1]], t.names[f[2]]};
    Json res = Json::array();
    for (const auto& [m, c] : jr.residual)
      res.push_back({t.names[m[0]], t.names[m[1]], t.names[m[2]], io::rational_string(c)});
    w["residual"] = res;
  }
  return w;
}

void table_checks(Report& rep, const QuadraticBracketTable& t, bool jacobi) {
  const auto anti = antisymmetry_violation(t);
  rep.check("antisymmetry", !anti, anti ? Json(*anti) : Json(nullptr));
  const auto hom = homogeneity_violation(t);
  rep.check("homogeneity", !hom, hom ? Json(*hom) : Json(nullptr));
  if (jacobi) {
    const auto jr = jacobi_check(t);
    rep.check("jacobi", jr.ok(), jacobi_witness(t, jr));
  }
}

Json match_witness(const QuadraticBracketTable& computed, const QuadraticBracketTable& golden, const MatchReport& m) {
  Json w = {{"bijections_tried", m.bijections_tried}};
  if (!m.success) {
    w["failure"] = m.failure;
    return w;
  }
  Json sigma = Json::object(), lambda = Json::object();
  for (int a = 0; a < computed.size(); ++a) {
    sigma[computed.names[a]] = golden.names[m.sigma[a]];
    lambda[computed.names[a]] = io::rational_string(m.lambda[a]);
  }
  w["sigma"] = sigma;
  w["lambda"] = lambda;
  w["scale"] = io::rational_string(m.scale);
  w["literal"] = m.literal;
  return w;
}

void run_brackets(const Options& o, Report& rep) {
  rep.spec = datum_spec(o);
  const bool jacobi = o.check == "jacobi";
  if (o.sub == "golden") {
    const auto f = parse_golden_family(o.family);
    rep.spec["family"] = o.family;
    rep.spec["size"] = o.size;
    if (o.size2) rep.spec["size2"] = o.size2;
    Json provenance;
    const auto t = load_golden(o, f, o.size, o.size2, provenance);
    rep.result["provenance"] = provenance;
    rep.result["size"] = t.size();
    rep.result["table"] = io::table_to_json(t);
    table_checks(rep, t, jacobi);
    if (!o.fixture_out.empty()) {
      Json fx;
      fx["family"] = o.family;
      fx["size"] = o.size;
      if (o.size2) fx["size2"] = o.size2;
      fx["provenance"] = provenance_note(f);
      fx["table"] = rep.result["table"];
      std::ofstream out(o.fixture_out);
      if (!out) throw UsageError("cannot write " + o.fixture_out);
      out << fx.dump(1) << "\n";
    }
    return;
  }
  const auto rs = root_system(o);
  const int ap = omitted_root(o, *rs);
  rep.spec["omit"] = ap + 1;
  const auto alg = ChevalleyAlgebra::build(rs);
  const auto j = ParabolicSet::omit(rs->rank(), ap);
  const auto t = bracket_table(*alg, j, rj_convention(o.bracket_convention));
  rep.result["size"] = t.size();
  if (o.sub == "table") {
    rep.result["table"] = io::table_to_json(t);
    table_checks(rep, t, jacobi);
    return;
  }
  const auto g = golden_for(*rs, ap);
  if (!g) throw UsageError("no closed form is bundled for " + rs->datum().name() + " omit " + std::to_string(ap + 1));
  Json provenance;
  const auto golden = load_golden(o, g->first, g->second.first, g->second.second, provenance);
  rep.result["golden"] = {{"family", to_string(g->first)}, {"size", g->second.first}, {"provenance", provenance}};
  if (g->first == GoldenFamily::Rectangular) rep.result["golden"]["size2"] = g->second.second;
  const auto m = o.allow_scale ? match_tables_up_to_scale(t, golden, o.max_bijections)
                               : match_tables(t, golden, o.max_bijections);
  rep.check(o.allow_scale ? "match_up_to_scale" : "match", m.success, match_witness(t, golden, m));
  if (m.success) {
    const auto image = transform(t, m.sigma, m.lambda, golden.names, golden.weights);
    const auto jr = jacobi_check(image);
    rep.check("witness_preserves_jacobi", jr.ok(), jacobi_witness(image, jr));
  }
}

void run_verify(const Options& o, Report& rep) {
  const auto rs = root_system(o);
  rep.spec = datum_spec(o);
  const WeylGroup w(rs, o.cap);
  std::vector<ParabolicSet> js;
  if (o.omit != 0 || o.parabolic_given) {
    js.push_back(parabolic_of(o, rs->rank()));
  } else {
    for (int ap : cominuscule_roots(*rs)) js.push_back(ParabolicSet::omit(rs->rank(), ap));
    if (js.empty()) js.push_back(ParabolicSet::empty(rs->rank()));
  }
  Json parabolics = Json::array();
  for (const auto& j : js) parabolics.push_back(indices_json(j.indices()));
  rep.spec["parabolics"] = parabolics;
  for (const auto& j : js) {
    const std::string tag = " J=" + to_string(j);
    bool ok = true;
    try {
      coset_tables(w, j);
    } catch (const std::logic_error&) {
      ok = false;
    }
    rep.check("coset_bijections" + tag, ok);
    try {
      const auto poset = closure_poset(w, j, o.strata_cap);
      rep.check("closure_partial_order" + tag, !partial_order_violation(poset), {{"strata", poset.nodes.size()}});
    } catch (const CapExceeded& e) {
      std::cerr << "skipping closure order" << tag << ": " << e.what() << "\n";
    }
    if (!is_hermitian(*rs, j)) continue;
    const int ap = [&] {
      for (int i = 0; i < rs->rank(); ++i)
        if (!j.contains(i)) return i;
      return -1;
    }();
    const auto cd = CominusculeDatum::make(*rs, ap);
    const auto c = cascade(*rs, cd);
    const auto alg = ChevalleyAlgebra::build(rs);
    const auto viol = cascade_violation(*rs, cd, c);
    rep.check("cascade_invariants" + tag, !viol, viol ? Json(*viol) : Json(nullptr));
    bool all = true;
    for (auto [t, s] : orbit_reps(c))
      all = all && vanishing_check(*alg, base_point(*alg, c, t, s), j, RJConvention::Unit).direct_vanishes();
    rep.check("vanishing_all_base_points" + tag, all, {{"points", orbit_reps(c).size()}});
    for (auto [name, scan] : std::vector<std::pair<std::string, IdentityScan>>{
             {"reflection_identity", check_reflection_identity(*alg, j)},
             {"pairing_cancellation", check_pairing_cancellation(*alg, c, j)},
             {"first_order_expansion", check_first_order_expansion(*alg, c, j, RJConvention::Unit)},
             {"commutation", check_commutation(*alg, c)}})
      scan_check(rep, name + tag, scan);
    rep.check("cascade_double_cosets" + tag, check_double_cosets(w, c, j));
    Json prods = Json::array(), mins = Json::array();
    for (auto x : cascade_products(w, c)) prods.push_back(word_json(w, x));
    for (auto x : double_coset_min_reps(w, j, j)) mins.push_back(word_json(w, x));
    rep.check("cascade_products_are_double_coset_minima" + tag, check_minreps(w, c, j),
              {{"cascade_products", prods}, {"double_coset_minima", mins}});
    const auto t = bracket_table(*alg, j);
    const auto anti = antisymmetry_violation(t);
    const auto hom = homogeneity_violation(t);
    rep.check("bracket_antisymmetry" + tag, !anti);
    rep.check("bracket_homogeneity" + tag, !hom);
    const auto jr = jacobi_check(t);
    rep.check("bracket_jacobi" + tag, jr.ok(), jacobi_witness(t, jr));
  }
}

int run(const Options& o) {
  Report rep;
  rep.conventions = {{"indices", "1-based"},
                     {"rationals", "p/q"},
                     {"roots", "simple-root coefficients, ordered by height"},
                     {"words", "reduced words, lexicographically least"},
                     {"r_j", o.convention},
                     {"ad_orientation", o.orientation},
                     {"bracket_weights", o.bracket_convention}};
  if (o.command == "roots") run_roots(o, rep);
  else if (o.command == "weyl") run_weyl(o, rep);
  else if (o.command == "strata") run_strata(o, rep);
  else if (o.command == "closure") run_closure(o, rep);
  else if (o.command == "hermitian") run_hermitian(o, rep);
  else if (o.command == "brackets") run_brackets(o, rep);
  else if (o.command == "verify") run_verify(o, rep);
  else throw UsageError("unknown command " + o.command);

  const Json doc = rep.document();
  if (o.format == "tsv") {
    const auto& r = doc["result"];
    if (o.command == "roots") {
      std::cout << "index\tcoefficients\theight\tnorm2\n";
      for (const auto& x : r["roots"])
        std::cout << x["index"] << '\t' << x["coefficients"].dump() << '\t' << x["height"] << '\t'
                  << x["norm2"].get<std::string>() << '\n';
    } else if (o.command == "strata" || o.command == "closure") {
      std::cout << "index\tw1\tw2\tdimension\n";
      int i = 0;
      for (const auto& x : r["strata"])
        std::cout << ++i << '\t' << x["w1"].dump() << '\t' << x["w2"].dump() << '\t' << x["dimension"] << '\n';
    } else if (r.contains("table")) {
      std::cout << "left\tright\tterms\n";
      for (const auto& b : r["table"]["brackets"])
        std::cout << b["left"].get<std::string>() << '\t' << b["right"].get<std::string>() << '\t' << b["terms"].dump()
                  << '\n';
    } else {
      throw UsageError("tsv output is available for roots, strata, closure and bracket tables");
    }
    for (const auto& c : doc["checks"])
      std::cerr << c["name"].get<std::string>() << ": " << c["status"].get<std::string>() << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
  return rep.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus orbits of symplectic leaves, Hermitian cascades and quadratic brackets"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto datum = [&](CLI::App* c, bool required) {
    auto* t = c->add_option("--type", o.type, "Cartan series A-G");
    auto* r = c->add_option("--rank", o.rank, "rank")->check(CLI::PositiveNumber);
    if (required) {
      t->required();
      r->required();
    }
  };
  auto parabolic = [&](CLI::App* c) {
    c->add_option("--parabolic", o.parabolic, "J as 1-based indices \"1,3\", \"\" for empty, or \"omit=<i>\"")
        ->each([&](const std::string&) { o.parabolic_given = true; });
    c->add_option("--omit", o.omit, "Hermitian shorthand: J = all simple roots but this one")
        ->check(CLI::PositiveNumber);
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    c->add_option("--cap", o.cap, "largest Weyl group to enumerate");
    c->add_option("--strata-cap", o.strata_cap, "largest number of strata");
  };

  auto* roots = app.add_subcommand("roots", "positive roots, heights and norms");
  datum(roots, true);
  common(roots);

  auto* weyl = app.add_subcommand("weyl", "Weyl group order and coset representatives");
  datum(weyl, true);
  parabolic(weyl);
  common(weyl);

  auto* strata = app.add_subcommand("strata", "enumerate the strata indexed by Omega^J");
  datum(strata, true);
  parabolic(strata);
  common(strata);

  auto* closure = app.add_subcommand("closure", "closure order on strata");
  datum(closure, true);
  parabolic(closure);
  common(closure);

  auto* herm = app.add_subcommand("hermitian", "cascades and vanishing at base points");
  herm->require_subcommand(1);
  for (const char* name : {"cascade", "verify"}) {
    auto* s = herm->add_subcommand(name, std::string(name) == "cascade" ? "cascade of orthogonal long roots"
                                                                        : "vanishing checks and identity scans");
    datum(s, true);
    parabolic(s);
    common(s);
    s->add_option("--convention", o.convention, "r_J weights: unit or normalized")
        ->check(CLI::IsMember({"unit", "normalized"}));
    s->add_option("--orientation", o.orientation, "direct (Ad_x) or inverse (Ad_x^-1)")
        ->check(CLI::IsMember({"direct", "inverse"}));
    if (std::string(name) == "verify") {
      s->add_option("--beta", o.betas, "custom base point root (coefficients \"1,1,0\" or epsilon \"e3-e1\")");
      s->add_option("--t", o.t, "custom base point: number of Weyl factors");
      s->add_option("--expect", o.expect, "vanish or nonzero (custom points)")
          ->check(CLI::IsMember({"vanish", "nonzero"}));
      s->add_option("--epsilon-order", o.epsilon_order, "descending or ascending (type A)")
          ->check(CLI::IsMember({"descending", "ascending"}));
    }
  }

  auto* br = app.add_subcommand("brackets", "quadratic brackets on n_J^-");
  br->require_subcommand(1);
  for (const char* name : {"table", "golden", "match"}) {
    const std::string n = name;
    auto* s = br->add_subcommand(name, n == "table"    ? "bracket table of a Hermitian case"
                                       : n == "golden" ? "closed-form table of a family"
                                                       : "match the computed table against its closed form");
    common(s);
    s->add_option("--fixtures", o.fixtures, "directory of golden tables");
    s->add_option("--pair-coefficient", o.pair_coefficient, "half-spin pair-sum coefficient (default 1/2)");
    if (n == "golden") {
      s->add_option("--family", o.family, "rectangular, odd-euclidean, symmetric, even-euclidean, antisymmetric, half-spin")
          ->required();
      s->add_option("--size", o.size, "N (p for rectangular)")->required();
      s->add_option("--size2", o.size2, "q for rectangular");
      s->add_option("--fixture-out", o.fixture_out, "also write the table as a fixture file");
    } else {
      datum(s, true);
      parabolic(s);
      s->add_option("--convention", o.bracket_convention, "alpha-term weights: normalized or unit")
          ->check(CLI::IsMember({"unit", "normalized"}));
    }
    if (n != "match") s->add_option("--check", o.check, "jacobi")->check(CLI::IsMember({"jacobi"}));
    if (n == "match") {
      s->add_flag("--allow-scale", o.allow_scale, "also try a global factor");
      s->add_option("--max-bijections", o.max_bijections, "search cap");
    }
  }

  auto* verify = app.add_subcommand("verify", "all checks for one Cartan datum");
  datum(verify, true);
  parabolic(verify);
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (auto* sub : app.get_subcommands()) {
    o.command = sub->get_name();
    for (auto* s2 : sub->get_subcommands()) o.sub = s2->get_name();
  }
  try {
    return run(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: cap exceeded: " << e.what() << "\n";
    return 2;
  }
}

#include "lieflag/io.hpp"

#include "lieflag/error.hpp"

namespace lieflag::io {

std::string rational_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  auto digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = allow_sign && !part.empty() && part[0] == '-' ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw InvalidArgument("not a rational: \"" + s + "\"");
  const mpz_class q(den);
  if (q == 0) throw InvalidArgument("zero denominator: \"" + s + "\"");
  Rational r(mpz_class(num), q);
  r.canonicalize();
  return r;
}

Json quadratic_to_json(const QuadraticBracketTable& t, const Quadratic& q) {
  Json terms = Json::array();
  for (const auto& [m, c] : q) terms.push_back({t.names[m.first], t.names[m.second], rational_string(c)});
  return terms;
}

Json table_to_json(const QuadraticBracketTable& t) {
  Json j;
  j["names"] = t.names;
  j["weights"] = t.weights;
  Json brackets = Json::array();
  for (const auto& [ab, q] : t.coeffs) {
    if (q.empty()) continue;
    brackets.push_back({{"left", t.names[ab.first]}, {"right", t.names[ab.second]}, {"terms", quadratic_to_json(t, q)}});
  }
  j["brackets"] = brackets;
  return j;
}

QuadraticBracketTable table_from_json(const Json& j) {
  QuadraticBracketTable t;
  try {
    t.names = j.at("names").get<std::vector<std::string>>();
    t.weights = j.at("weights").get<std::vector<std::vector<int>>>();
    if (t.weights.size() != t.names.size()) throw InvalidArgument("names and weights differ in length");
    auto id = [&](const Json& name) {
      const auto i = t.index_of(name.get<std::string>());
      if (!i) throw InvalidArgument("unknown coordinate " + name.dump());
      return *i;
    };
    for (const auto& b : j.at("brackets")) {
      const int l = id(b.at("left")), r = id(b.at("right"));
      for (const auto& term : b.at("terms")) {
        if (!term.is_array() || term.size() != 3) throw InvalidArgument("malformed term " + term.dump());
        t.add(l, r, id(term[0]), id(term[1]), parse_rational(term[2].get<std::string>()));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed table: ") + e.what());
  }
  return t;
}

}  // namespace lieflag::io

#include "lieflag/rational.hpp"

#include <stdexcept>

namespace lieflag {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (num.front() == '+') num.erase(0, 1);
  const mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace lieflag

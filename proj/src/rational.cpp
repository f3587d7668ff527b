#include "groupwalk/rational.hpp"

#include <cctype>

#include "groupwalk/errors.hpp"

namespace groupwalk {

namespace {

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (s[i] == '-' || s[i] == '+') ++i;
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  return digits(i) && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!looks_like_rational(text))
    throw ParseError("not a rational 'p' or 'p/q': \"" + text + "\"");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw ParseError("not a rational 'p' or 'p/q': \"" + text + "\"");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw ParseError("zero denominator in rational \"" + text + "\"");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace groupwalk

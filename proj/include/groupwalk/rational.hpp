#pragma once

#include <gmpxx.h>

#include <string>

namespace groupwalk {

// Exact arithmetic everywhere a claim is exact; doubles only in the decay /
// entropy labs.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws ParseError
// on anything else, including zero denominators.
Rational parse_rational(const std::string& text);

// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace groupwalk

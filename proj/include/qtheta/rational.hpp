#pragma once
// Exact scalar types shared by every module.

#include <gmpxx.h>

#include <string>

namespace qtheta {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" for non-integral values, bare "p" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q"; the result is canonicalized.
inline Rational parse_rational(const std::string& s) {
  Rational r(s, 10);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

}  // namespace qtheta

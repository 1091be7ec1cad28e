#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace dflab {

using Int = std::int64_t;
using IVec = std::vector<Int>;
using Rational = mpq_class;
using QVec = std::vector<Rational>;

/// Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws Error(InvalidInput) on anything else.
Rational parse_rational(const std::string& text);

QVec to_qvec(const IVec& v);

Int dot(const IVec& a, const IVec& b);
Rational dot(const QVec& a, const QVec& b);

Int gcd_of(const IVec& v);

/// Scales a nonzero rational vector to the primitive integer vector on the same ray.
IVec primitive(const QVec& v);

Int factorial(int n);

bool is_integer(const Rational& q);

}  // namespace dflab

namespace dflab {

/// num/den in canonical form.
inline Rational make_rational(Int num, Int den) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

}  // namespace dflab

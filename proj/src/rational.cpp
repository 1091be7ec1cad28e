#include "dflab/rational.hpp"

#include <numeric>
#include <regex>

#include "dflab/error.hpp"

namespace dflab {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NonLatticeVertex: return "NonLatticeVertex";
    case ErrorKind::InconsistentVertices: return "InconsistentVertices";
    case ErrorKind::NonUnimodularChartVertex: return "NonUnimodularChartVertex";
    case ErrorKind::PointOutsidePolytope: return "PointOutsidePolytope";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::UnsupportedMode: return "UnsupportedMode";
    case ErrorKind::NonPositiveExceptionalRay: return "NonPositiveExceptionalRay";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::ExponentTooSmall: return "ExponentTooSmall";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex grammar(R"(-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?)");
  if (!std::regex_match(text, grammar)) {
    throw Error(ErrorKind::InvalidInput, "not an exact rational: '" + text + "'");
  }
  Rational q(text);
  q.canonicalize();
  return q;
}

QVec to_qvec(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int gcd_of(const IVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

IVec primitive(const QVec& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) {
    mpz_class d = x.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> scaled;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class s = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    scaled.push_back(s);
  }
  if (g == 0) throw Error(ErrorKind::InvalidInput, "primitive() of the zero vector");
  IVec out;
  out.reserve(v.size());
  for (auto& s : scaled) {
    mpz_class q = s / g;
    out.push_back(q.get_si());
  }
  return out;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace dflab

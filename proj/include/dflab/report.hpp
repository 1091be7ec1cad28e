#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dflab/intersection.hpp"
#include "dflab/rational.hpp"

namespace dflab {

/// Rational polynomial, coefficients lowest degree first, valid (matching
/// every retained sample) from `threshold` on.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coefficients, Int threshold = 0);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of K^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int threshold() const { return threshold_; }
  Rational operator()(const Rational& x) const;

  bool operator==(const ExactPolynomial&) const = default;

 private:
  std::vector<Rational> coeffs_;
  Int threshold_ = 0;
};

enum class Pipeline { counting, intersection, both };
std::string to_string(Pipeline p);

struct DFReport {
  int dimension = 0;
  Int exponent = 1;
  Rational df;
  std::string normalization = "as-given";
  Pipeline pipeline = Pipeline::counting;
  std::optional<ExactPolynomial> A;  ///< weight polynomial in K
  std::optional<ExactPolynomial> h;  ///< Hilbert polynomial in K
  std::optional<Rational> chow;
  std::optional<Rational> df_counting;
  std::optional<Rational> df_intersection;
  std::optional<DecompositionReport> decomposition;
  std::map<std::string, bool> identities;
  bool trivial = false;
  bool consistent = true;
};

}  // namespace dflab

#pragma once

// Newton polyhedron NP(J) = conv(gens(I_j) × {j} ∪ {(0, N)}) + R^{n+1}_{>=0}
// of a point-supported chart-mode flag ideal. Its compact lower facets are
// the exceptional divisors of the normalized blow-up; the lower envelope
// Φ(x) = min { s : (x, s) ∈ NP } is the asymptotic t-degree function.

#include <vector>

#include "dflab/monomial.hpp"
#include "dflab/rational.hpp"

namespace dflab {

/// A compact lower facet { p : <w, p> = order } of NP with w > 0.
struct ExceptionalFacet {
  IVec normal;                  ///< primitive w ∈ Z^{n+1}, last entry is the t-weight
  Int order = 0;                ///< ord_w(J) = min <w, NP>
  Int discrepancy = 0;          ///< a_w = |w|_1 - 1
  std::vector<IVec> vertices;   ///< vertices of the facet, lexicographic
};

class NewtonPolyhedron {
 public:
  int ambient_dimension() const { return static_cast<int>(n_) + 1; }
  Int length() const { return N_; }
  /// Exponent points spanning NP (before adding the orthant).
  const std::vector<IVec>& points() const { return points_; }
  /// Sorted lexicographically by normal.
  const std::vector<ExceptionalFacet>& facets() const { return facets_; }

  /// Φ(x) = max(0, max_w (ord_w - <w_x, x>) / w_t) for x in the orthant.
  Rational phi(const QVec& x) const;

  /// (x, s) ∈ NP
  bool contains(const QVec& point) const;

  friend NewtonPolyhedron newton_polyhedron(const FlagIdeal& J);

 private:
  std::size_t n_ = 0;
  Int N_ = 0;
  std::vector<IVec> points_;
  std::vector<ExceptionalFacet> facets_;
};

/// Requires a validated, point-supported, chart-mode flag ideal.
NewtonPolyhedron newton_polyhedron(const FlagIdeal& J);

Rational phi_value(const NewtonPolyhedron& np, const QVec& x);

/// Whether every power J^k is integrally closed (the Rees algebra is
/// normal). For monomial ideals in d variables it suffices that J, ..., J^{d-1}
/// are integrally closed; here d = n + 1.
bool is_normal(const FlagIdeal& J);

/// Whether J^k equals its integral closure, i.e. g_k(x) = ⌈k·Φ(x/k)⌉ on the
/// box where generators of the closure can live.
bool power_integrally_closed(const FlagIdeal& J, const NewtonPolyhedron& np, int k);

}  // namespace dflab

#pragma once

// Intersection-number pipeline: evaluates the closed formula
//
//   DF = { -n (L^{n-1}.K_X)(L(-E))^{n+1} + (n+1)(L^n)((L(-E))^n.Π*p1*K_X)
//          + (n+1)(L^n)((L(-E))^n.K_{B/X×A^1}) } / (2·n!·(n+1)!)
//
// on the normalized blow-up of a point-supported flag ideal, with L replaced
// by L^r. Toric data: (L(-E))^{n+1} = -(n+1)!·∫_{rP} Φ, each compact facet
// F_w of NP contributes a_w·n!·latvol(F_w) to the discrepancy term, and the
// middle term vanishes because E lies over points of X×{0}.

#include <vector>

#include "dflab/lattice.hpp"
#include "dflab/monomial.hpp"
#include "dflab/newton.hpp"
#include "dflab/rational.hpp"

namespace dflab {

struct RayContribution {
  IVec normal;
  Int order = 0;
  Int discrepancy = 0;
  Rational face_degree;  ///< ((L(-E))^n . E_w)
};

struct DecompositionReport {
  Rational T1, T2, T3;
  Rational df;
  Rational top_self_intersection;  ///< (L^r(-E))^{n+1}
  Int Ln = 0;                      ///< (L^r)^n
  Int LK = 0;                      ///< ((L^r)^{n-1}.K_X)
  std::vector<RayContribution> rays;
  /// The blow-up of J itself is not normal; the numbers describe its normalization.
  bool normalized_configuration = false;
};

/// Throws ExponentTooSmall if some compact facet of NP projects outside the
/// chart image of rP.
void check_exponent(const PolarizedToricVariety& variety, const NewtonPolyhedron& np, Int r);

/// ∫ Φ over the chart image of rP, exact.
Rational lower_hull_integral(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r);

/// Compact lower facets of NP: (w, ord_w, a_w, facet vertices).
std::vector<ExceptionalFacet> exceptional_data(const FlagIdeal& J);

/// ((L^r(-E))^n . E_w) = n!·latvol(F_w).
Rational face_degree(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r, const IVec& w);

DecompositionReport df_intersection(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r);

}  // namespace dflab

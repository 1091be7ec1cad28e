#include "dflab/intersection.hpp"

#include <algorithm>

#include "dflab/error.hpp"
#include "dflab/polyhedral.hpp"

namespace dflab {

namespace {

void require_supported(const FlagIdeal& J) {
  if (J.mode() != IdealMode::chart || J.support() != SupportClass::point_supported) {
    throw Error(ErrorKind::UnsupportedMode,
                "decomposition needs a point-supported chart-mode ideal; use the counting pipeline");
  }
}

Int power(Int base, int e) {
  Int out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

const ExceptionalFacet& find_facet(const NewtonPolyhedron& np, const IVec& w) {
  for (const auto& f : np.facets()) {
    if (f.normal == w) return f;
  }
  throw Error(ErrorKind::InvalidInput, "not an exceptional ray of this flag ideal");
}

Rational facet_degree(const ExceptionalFacet& f) {
  return normalized_volume(to_hyperplane_lattice(f.vertices, f.normal));
}

// ∫ of the affine function s over the projection of the facet to the chart.
Rational facet_integral(const ExceptionalFacet& f, int n) {
  std::vector<QVec> projected;
  for (const auto& v : f.vertices) projected.push_back(to_qvec(IVec(v.begin(), v.begin() + n)));
  Rational total = 0;
  const Rational simplex_scale(factorial(n) * (n + 1));
  for (const auto& s : triangulate(projected)) {
    Rational height_sum = 0;
    for (auto i : s) height_sum += static_cast<long>(f.vertices[i][static_cast<std::size_t>(n)]);
    total += abs(simplex_determinant(projected, s)) * height_sum / simplex_scale;
  }
  return total;
}

}  // namespace

void check_exponent(const PolarizedToricVariety& variety, const NewtonPolyhedron& np, Int r) {
  const int n = variety.dimension();
  for (const auto& f : np.facets()) {
    for (const auto& v : f.vertices) {
      IVec x(v.begin(), v.begin() + n);
      if (!variety.polytope.contains(from_chart_coords(variety, x, r), r)) {
        throw Error(ErrorKind::ExponentTooSmall,
                    "exceptional facet projects outside the chart of rP; increase r to at least make "
                    "every facet vertex a section of L^r");
      }
    }
  }
}

Rational lower_hull_integral(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r) {
  if (J.trivial()) return 0;
  require_supported(J);
  auto np = newton_polyhedron(J);
  check_exponent(variety, np, r);
  Rational total = 0;
  for (const auto& f : np.facets()) total += facet_integral(f, variety.dimension());
  return total;
}

std::vector<ExceptionalFacet> exceptional_data(const FlagIdeal& J) {
  require_supported(J);
  return newton_polyhedron(J).facets();
}

Rational face_degree(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r, const IVec& w) {
  require_supported(J);
  auto np = newton_polyhedron(J);
  check_exponent(variety, np, r);
  return facet_degree(find_facet(np, w));
}

DecompositionReport df_intersection(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r) {
  const int n = variety.dimension();
  auto numbers = intersection_numbers(variety);
  DecompositionReport rep;
  rep.Ln = power(r, n) * numbers.top;
  rep.LK = power(r, n - 1) * numbers.canonical;
  if (J.trivial()) return rep;
  require_supported(J);
  auto np = newton_polyhedron(J);
  check_exponent(variety, np, r);

  Rational integral = 0;
  Rational discrepancy_sum = 0;
  for (const auto& f : np.facets()) {
    integral += facet_integral(f, n);
    Rational degree = facet_degree(f);
    discrepancy_sum += static_cast<long>(f.discrepancy) * degree;
    rep.rays.push_back({f.normal, f.order, f.discrepancy, degree});
  }
  rep.top_self_intersection = -Rational(static_cast<long>(factorial(n + 1))) * integral;
  rep.T1 = Rational(static_cast<long>(-n * rep.LK)) * rep.top_self_intersection;
  rep.T2 = 0;
  rep.T3 = Rational(static_cast<long>((n + 1) * rep.Ln)) * discrepancy_sum;
  rep.df = (rep.T1 + rep.T2 + rep.T3) / Rational(static_cast<long>(2 * factorial(n) * factorial(n + 1)));
  rep.normalized_configuration = !is_normal(J);
  return rep;
}

}  // namespace dflab

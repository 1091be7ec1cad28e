#pragma once

// Polarized toric varieties (X, L) given by full-dimensional lattice
// polytopes, with a distinguished smooth vertex whose cone supplies the
// affine chart used for flag ideals.

#include <cstddef>
#include <string>
#include <vector>

#include "dflab/rational.hpp"

namespace dflab {

/// Facet inequality <normal, u> >= offset; normal primitive and inward.
struct LatticeFacet {
  IVec normal;
  Int offset;
};

class LatticePolytope {
 public:
  /// Validates the vertex list; facets are ordered by inner normal,
  /// lexicographically descending (this is the Cox variable order).
  static LatticePolytope from_vertices(std::vector<IVec> vertices);

  int dimension() const { return dimension_; }
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<LatticeFacet>& facets() const { return facets_; }

  /// u ∈ scale·P
  bool contains(const IVec& u, Int scale = 1) const;

  /// Indices of the facets through the given vertex, in facet order.
  std::vector<std::size_t> facets_at(const IVec& vertex) const;

  /// Slack <n_F, u> - scale·offset_F for every facet F (Cox exponents of u).
  IVec slacks(const IVec& u, Int scale) const;

  IVec box_min() const { return box_min_; }
  IVec box_max() const { return box_max_; }

 private:
  int dimension_ = 0;
  std::vector<IVec> vertices_;
  std::vector<LatticeFacet> facets_;
  IVec box_min_, box_max_;
};

/// Affine chart at a smooth vertex: the facets through it, whose inner
/// normals form the rows of the unimodular chart basis.
struct VertexChart {
  IVec vertex;
  std::vector<std::size_t> facets;
};

struct PolarizedToricVariety {
  LatticePolytope polytope;
  VertexChart chart;
  /// Rows: inner normals of the chart facets. Maps the primitive edge
  /// directions at the chart vertex to the standard basis.
  std::vector<IVec> chart_basis;
  bool smooth = false;

  int dimension() const { return polytope.dimension(); }
};

PolarizedToricVariety make_variety(std::vector<IVec> vertices, const IVec& chart_vertex);

/// Same, for input that might carry non-integral coordinates.
PolarizedToricVariety make_variety_from_rationals(const std::vector<QVec>& vertices, const QVec& chart_vertex);

/// (P^n, O(d)): the simplex d·Δ_n, chart at the origin.
PolarizedToricVariety projective_space(int n, Int d);

/// Charts at every vertex; throws UnsupportedMode unless the polytope is smooth.
std::vector<VertexChart> vertex_charts(const PolarizedToricVariety& variety);

/// Visits every point of (scale·P) ∩ Z^n in lexicographic order.
template <class Fn>
void for_each_lattice_point(const LatticePolytope& polytope, Int scale, Fn&& fn) {
  const int n = polytope.dimension();
  IVec lo = polytope.box_min(), hi = polytope.box_max();
  for (int i = 0; i < n; ++i) {
    lo[i] *= scale;
    hi[i] *= scale;
  }
  IVec u = lo;
  while (true) {
    if (polytope.contains(u, scale)) fn(static_cast<const IVec&>(u));
    int i = n - 1;
    while (i >= 0 && u[i] == hi[i]) {
      u[i] = lo[i];
      --i;
    }
    if (i < 0) return;
    ++u[i];
  }
}

/// #(kP ∩ Z^n)
Int ehrhart_count(const PolarizedToricVariety& variety, Int k);

struct IntersectionNumbers {
  Int top;        ///< (L^n) = n!·vol(P)
  Int canonical;  ///< (L^{n-1}.K_X) = -(n-1)!·Σ_F latvol(F)
};

IntersectionNumbers intersection_numbers(const PolarizedToricVariety& variety);

struct NamedVariety {
  std::string name;
  PolarizedToricVariety variety;
};

/// Small reference set: simplices, products of simplices and the
/// Hirzebruch quadrilateral of F_1.
std::vector<NamedVariety> polytope_library();

/// U·(u - scale·v0) for u ∈ scale·P; throws PointOutsidePolytope otherwise.
IVec chart_coords(const PolarizedToricVariety& variety, const IVec& u, Int scale);

/// Inverse of chart_coords (no membership check).
IVec from_chart_coords(const PolarizedToricVariety& variety, const IVec& x, Int scale);

}  // namespace dflab

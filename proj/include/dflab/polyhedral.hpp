#pragma once

// Exact convex-hull primitives over the rationals. Point sets here are tiny
// (generator sets, polytope vertices), so facets are found by testing every
// affinely independent d-subset; no floating point is involved anywhere.

#include <cstddef>
#include <span>
#include <vector>

#include "dflab/rational.hpp"

namespace dflab {

/// Facet of conv(points): { x : <normal, x> >= offset }, normal primitive and
/// inward. `incident` lists every input point lying on the facet.
struct HullFacet {
  IVec normal;
  Rational offset;
  std::vector<std::size_t> incident;
};

/// Basis of the rational solution space of rows * x = 0, x in Q^dim.
std::vector<QVec> nullspace(const std::vector<QVec>& rows, std::size_t dim);

Rational determinant(std::vector<QVec> rows);

/// Dimension of the affine hull of the points (-1 for an empty set).
int affine_rank(std::span<const QVec> points);

/// Facets of a full-dimensional point configuration, sorted by normal.
std::vector<HullFacet> hull_facets(std::span<const QVec> points);

/// Indices of the points that are vertices of their convex hull.
std::vector<std::size_t> hull_vertices(std::span<const QVec> points);

/// Pulling triangulation of a full-dimensional configuration in Q^d. Each
/// simplex is d+1 indices into `points`; together they tile the hull.
std::vector<std::vector<std::size_t>> triangulate(std::span<const QVec> points);

/// det of the edge vectors p[s_i] - p[s_0]; |value| is the normalized volume.
Rational simplex_determinant(std::span<const QVec> points,
                             const std::vector<std::size_t>& simplex);

/// Normalized volume d!·vol of conv(points), points full-dimensional in Q^d.
Rational normalized_volume(std::span<const QVec> points);

/// Lattice basis of { x in Z^m : <w, x> = 0 } for a nonzero integer w.
std::vector<IVec> lattice_kernel_basis(const IVec& w);

/// Integer coordinates of v in the given lattice basis (v must lie in its span).
IVec lattice_coordinates(const IVec& v, const std::vector<IVec>& basis);

/// Re-expresses points on the affine hyperplane <w, x> = c (w primitive) in
/// coordinates of the lattice Z^m ∩ w^perp, anchored at points[0]. Lebesgue
/// volume in the result is the lattice-normalized volume of the face.
std::vector<QVec> to_hyperplane_lattice(std::span<const IVec> points, const IVec& w);

}  // namespace dflab

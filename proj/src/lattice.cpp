#include "dflab/lattice.hpp"

#include <algorithm>
#include <set>

#include "dflab/error.hpp"
#include "dflab/polyhedral.hpp"

namespace dflab {

namespace {

bool unimodular(const std::vector<IVec>& rows) {
  std::vector<QVec> q;
  for (const auto& r : rows) q.push_back(to_qvec(r));
  Rational d = determinant(std::move(q));
  return d == 1 || d == -1;
}

// A vertex cone is smooth iff exactly n facets pass through the vertex and
// their normals form a unimodular matrix (the dual cone is then unimodular).
bool smooth_at(const LatticePolytope& p, const IVec& vertex) {
  auto fs = p.facets_at(vertex);
  if (static_cast<int>(fs.size()) != p.dimension()) return false;
  std::vector<IVec> rows;
  for (auto f : fs) rows.push_back(p.facets()[f].normal);
  return unimodular(rows);
}

}  // namespace

LatticePolytope LatticePolytope::from_vertices(std::vector<IVec> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidInput, "polytope has no vertices");
  const std::size_t n = vertices[0].size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "polytope dimension must be positive");
  for (const auto& v : vertices) {
    if (v.size() != n) throw Error(ErrorKind::InvalidInput, "vertices have mixed dimensions");
  }
  std::set<IVec> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) {
    throw Error(ErrorKind::InconsistentVertices, "duplicate vertex in polytope description");
  }
  std::vector<QVec> q;
  for (const auto& v : vertices) q.push_back(to_qvec(v));
  if (affine_rank(q) != static_cast<int>(n)) {
    throw Error(ErrorKind::NotFullDimensional, "vertices do not span the ambient space");
  }
  if (hull_vertices(q).size() != vertices.size()) {
    throw Error(ErrorKind::InconsistentVertices,
                "listed points are not all vertices of their convex hull");
  }
  LatticePolytope p;
  p.dimension_ = static_cast<int>(n);
  p.vertices_ = std::move(vertices);
  for (const auto& f : hull_facets(q)) {
    if (!is_integer(f.offset)) throw Error(ErrorKind::NonLatticeVertex, "non-integral facet offset");
    p.facets_.push_back({f.normal, f.offset.get_num().get_si()});
  }
  std::sort(p.facets_.begin(), p.facets_.end(),
            [](const LatticeFacet& a, const LatticeFacet& b) { return a.normal > b.normal; });
  p.box_min_ = p.box_max_ = p.vertices_[0];
  for (const auto& v : p.vertices_) {
    for (std::size_t i = 0; i < n; ++i) {
      p.box_min_[i] = std::min(p.box_min_[i], v[i]);
      p.box_max_[i] = std::max(p.box_max_[i], v[i]);
    }
  }
  return p;
}

bool LatticePolytope::contains(const IVec& u, Int scale) const {
  for (const auto& f : facets_) {
    if (dot(f.normal, u) < scale * f.offset) return false;
  }
  return true;
}

std::vector<std::size_t> LatticePolytope::facets_at(const IVec& vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (dot(facets_[i].normal, vertex) == facets_[i].offset) out.push_back(i);
  }
  return out;
}

IVec LatticePolytope::slacks(const IVec& u, Int scale) const {
  IVec s;
  s.reserve(facets_.size());
  for (const auto& f : facets_) s.push_back(dot(f.normal, u) - scale * f.offset);
  return s;
}

PolarizedToricVariety make_variety(std::vector<IVec> vertices, const IVec& chart_vertex) {
  PolarizedToricVariety v{LatticePolytope::from_vertices(std::move(vertices)), {}, {}, false};
  const auto& verts = v.polytope.vertices();
  if (std::find(verts.begin(), verts.end(), chart_vertex) == verts.end()) {
    throw Error(ErrorKind::InvalidInput, "chart vertex is not a vertex of the polytope");
  }
  if (!smooth_at(v.polytope, chart_vertex)) {
    throw Error(ErrorKind::NonUnimodularChartVertex, "the cone at the chart vertex is not unimodular");
  }
  v.chart = {chart_vertex, v.polytope.facets_at(chart_vertex)};
  for (auto f : v.chart.facets) v.chart_basis.push_back(v.polytope.facets()[f].normal);
  v.smooth = std::all_of(verts.begin(), verts.end(),
                         [&](const IVec& x) { return smooth_at(v.polytope, x); });
  return v;
}

PolarizedToricVariety make_variety_from_rationals(const std::vector<QVec>& vertices, const QVec& chart_vertex) {
  auto lattice = [](const QVec& q) {
    IVec out;
    for (const auto& x : q) {
      if (!is_integer(x)) throw Error(ErrorKind::NonLatticeVertex, "vertex " + to_string(x) + " is not integral");
      out.push_back(x.get_num().get_si());
    }
    return out;
  };
  std::vector<IVec> iv;
  for (const auto& q : vertices) iv.push_back(lattice(q));
  return make_variety(std::move(iv), lattice(chart_vertex));
}

PolarizedToricVariety projective_space(int n, Int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidInput, "projective space needs n >= 1 and d >= 1");
  std::vector<IVec> vertices{IVec(n, 0)};
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = d;
    vertices.push_back(e);
  }
  return make_variety(std::move(vertices), IVec(n, 0));
}

std::vector<VertexChart> vertex_charts(const PolarizedToricVariety& variety) {
  if (!variety.smooth) {
    throw Error(ErrorKind::UnsupportedMode, "homogeneous-coordinate mode needs a smooth polytope");
  }
  std::vector<VertexChart> charts;
  for (const auto& v : variety.polytope.vertices()) charts.push_back({v, variety.polytope.facets_at(v)});
  std::sort(charts.begin(), charts.end(),
            [](const VertexChart& a, const VertexChart& b) { return a.vertex < b.vertex; });
  return charts;
}

Int ehrhart_count(const PolarizedToricVariety& variety, Int k) {
  Int count = 0;
  for_each_lattice_point(variety.polytope, k, [&](const IVec&) { ++count; });
  return count;
}

IntersectionNumbers intersection_numbers(const PolarizedToricVariety& variety) {
  const auto& p = variety.polytope;
  std::vector<QVec> q;
  for (const auto& v : p.vertices()) q.push_back(to_qvec(v));
  Rational top = normalized_volume(q);

  // Each facet is mapped into Z^{n-1} through a basis of its direction
  // lattice; the normalized volume there is (n-1)!·latvol(F).
  Rational boundary = 0;
  for (const auto& f : p.facets()) {
    std::vector<IVec> on;
    for (const auto& v : p.vertices()) {
      if (dot(f.normal, v) == f.offset) on.push_back(v);
    }
    boundary += normalized_volume(to_hyperplane_lattice(on, f.normal));
  }
  return {top.get_num().get_si(), -boundary.get_num().get_si()};
}

std::vector<NamedVariety> polytope_library() {
  std::vector<NamedVariety> lib;
  for (Int d = 1; d <= 3; ++d) lib.push_back({"P1 O(" + std::to_string(d) + ")", projective_space(1, d)});
  lib.push_back({"P2 O(1)", projective_space(2, 1)});
  lib.push_back({"P2 O(2)", projective_space(2, 2)});
  lib.push_back({"P3 O(1)", projective_space(3, 1)});
  lib.push_back({"P1xP1 O(1,1)", make_variety({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0})});
  lib.push_back({"P1xP1 O(2,1)", make_variety({{0, 0}, {2, 0}, {0, 1}, {2, 1}}, {0, 0})});
  lib.push_back({"F1", make_variety({{0, 0}, {3, 0}, {1, 2}, {0, 2}}, {0, 0})});
  lib.push_back({"P1xP1xP1", make_variety({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                           {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
                                          {0, 0, 0})});
  return lib;
}

IVec chart_coords(const PolarizedToricVariety& variety, const IVec& u, Int scale) {
  if (!variety.polytope.contains(u, scale)) {
    throw Error(ErrorKind::PointOutsidePolytope, "point lies outside the scaled polytope");
  }
  IVec x;
  x.reserve(variety.chart_basis.size());
  for (const auto& row : variety.chart_basis) {
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += row[i] * (u[i] - scale * variety.chart.vertex[i]);
    x.push_back(s);
  }
  return x;
}

IVec from_chart_coords(const PolarizedToricVariety& variety, const IVec& x, Int scale) {
  std::vector<QVec> rows;
  for (const auto& r : variety.chart_basis) rows.push_back(to_qvec(r));
  // Solve U y = x; U is unimodular so y is integral.
  const std::size_t n = x.size();
  std::vector<QVec> aug(n, QVec(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = rows[r][c];
    aug[r][n] = static_cast<long>(x[r]);
  }
  // Gauss-Jordan
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& e : aug[c]) e *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t k = 0; k <= n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  IVec u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = aug[i][n].get_num().get_si() + scale * variety.chart.vertex[i];
  return u;
}

}  // namespace dflab

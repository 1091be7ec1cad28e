#include "dflab/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "dflab/error.hpp"

namespace dflab {

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<QVec>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

QVec difference(const QVec& a, const QVec& b) {
  QVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<QVec> nullspace(const std::vector<QVec>& rows, std::size_t dim) {
  std::vector<QVec> m = rows;
  auto pivots = row_reduce(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    QVec v(dim, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(std::vector<QVec> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

int affine_rank(std::span<const QVec> points) {
  if (points.empty()) return -1;
  std::vector<QVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(difference(points[i], points[0]));
  if (diffs.empty()) return 0;
  return static_cast<int>(row_reduce(diffs, points[0].size()).size());
}

std::vector<HullFacet> hull_facets(std::span<const QVec> points) {
  if (points.empty()) throw Error(ErrorKind::NotFullDimensional, "empty point set");
  const std::size_t d = points[0].size();
  if (affine_rank(points) != static_cast<int>(d)) {
    throw Error(ErrorKind::NotFullDimensional, "point configuration is not full-dimensional");
  }
  std::map<IVec, HullFacet> found;
  for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& subset) {
    std::vector<QVec> rows;
    for (std::size_t i = 1; i < subset.size(); ++i) {
      rows.push_back(difference(points[subset[i]], points[subset[0]]));
    }
    auto kernel = nullspace(rows, d);
    if (kernel.size() != 1) return;
    IVec normal = primitive(kernel[0]);
    QVec qn = to_qvec(normal);
    Rational level = dot(qn, points[subset[0]]);
    bool below = false, above = false;
    for (const auto& p : points) {
      Rational v = dot(qn, p);
      if (v < level) below = true;
      if (v > level) above = true;
    }
    if (below && above) return;
    if (below) {
      for (auto& x : normal) x = -x;
      level = -level;
      qn = to_qvec(normal);
    }
    if (found.count(normal)) return;
    HullFacet f{normal, level, {}};
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (dot(qn, points[i]) == level) f.incident.push_back(i);
    }
    found.emplace(normal, std::move(f));
  });
  std::vector<HullFacet> out;
  for (auto& [key, f] : found) out.push_back(std::move(f));
  return out;
}

std::vector<std::size_t> hull_vertices(std::span<const QVec> points) {
  std::vector<std::size_t> out;
  if (points.empty()) return out;
  const std::size_t d = points[0].size();
  if (d == 0 || affine_rank(points) == 0) {
    out.push_back(0);
    return out;
  }
  auto facets = hull_facets(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    // A point is a vertex iff the normals of its facets span Q^d.
    std::vector<QVec> normals;
    for (const auto& f : facets) {
      if (std::find(f.incident.begin(), f.incident.end(), i) != f.incident.end()) {
        normals.push_back(to_qvec(f.normal));
      }
    }
    if (normals.size() < d) continue;
    if (row_reduce(normals, d).size() == d) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> triangulate(std::span<const QVec> points) {
  if (points.empty()) return {};
  const std::size_t d = points[0].size();
  if (d == 0) return {{0}};
  auto facets = hull_facets(points);
  // Pull from the lexicographically least point, which is always a vertex.
  std::size_t apex = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] < points[apex]) apex = i;
  }
  std::vector<std::vector<std::size_t>> simplices;
  for (const auto& f : facets) {
    if (std::find(f.incident.begin(), f.incident.end(), apex) != f.incident.end()) continue;
    // Drop one coordinate with a nonzero normal entry: an affine bijection
    // from the facet hyperplane onto Q^{d-1}.
    std::size_t drop = 0;
    while (f.normal[drop] == 0) ++drop;
    std::vector<QVec> projected;
    for (auto i : f.incident) {
      QVec p;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != drop) p.push_back(points[i][c]);
      }
      projected.push_back(std::move(p));
    }
    for (const auto& s : triangulate(projected)) {
      std::vector<std::size_t> simplex{apex};
      for (auto j : s) simplex.push_back(f.incident[j]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

Rational simplex_determinant(std::span<const QVec> points, const std::vector<std::size_t>& simplex) {
  std::vector<QVec> rows;
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    rows.push_back(difference(points[simplex[i]], points[simplex[0]]));
  }
  if (rows.empty()) return 1;
  return determinant(std::move(rows));
}

Rational normalized_volume(std::span<const QVec> points) {
  if (!points.empty() && points[0].empty()) return 1;
  Rational total = 0;
  for (const auto& s : triangulate(points)) total += abs(simplex_determinant(points, s));
  return total;
}

std::vector<IVec> lattice_kernel_basis(const IVec& w) {
  const std::size_t m = w.size();
  IVec a = w;
  // Columns of u; unimodular column operations keep a == w * u.
  std::vector<IVec> u(m, IVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
  std::size_t lead = 0;
  while (lead < m && a[lead] == 0) ++lead;
  if (lead == m) throw Error(ErrorKind::InvalidInput, "kernel basis of the zero vector");
  std::swap(a[0], a[lead]);
  std::swap(u[0], u[lead]);
  for (std::size_t i = 1; i < m; ++i) {
    while (a[i] != 0) {
      Int q = a[0] / a[i];
      a[0] -= q * a[i];
      for (std::size_t r = 0; r < m; ++r) u[0][r] -= q * u[i][r];
      std::swap(a[0], a[i]);
      std::swap(u[0], u[i]);
    }
  }
  return std::vector<IVec>(u.begin() + 1, u.end());
}

IVec lattice_coordinates(const IVec& v, const std::vector<IVec>& basis) {
  const std::size_t m = v.size();
  const std::size_t k = basis.size();
  // Solve basis^T c = v through the augmented system [B | v].
  std::vector<QVec> aug(m, QVec(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = static_cast<long>(basis[c][r]);
    aug[r][k] = static_cast<long>(v[r]);
  }
  auto pivots = row_reduce(aug, k + 1);
  if (!pivots.empty() && pivots.back() == k) {
    throw Error(ErrorKind::InvalidInput, "vector outside the span of the basis");
  }
  IVec coords(k, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Rational& x = aug[r][k];
    if (!is_integer(x)) throw Error(ErrorKind::InvalidInput, "vector is not in the lattice");
    coords[pivots[r]] = x.get_num().get_si();
  }
  return coords;
}

std::vector<QVec> to_hyperplane_lattice(std::span<const IVec> points, const IVec& w) {
  auto basis = lattice_kernel_basis(w);
  std::vector<QVec> out;
  for (const auto& p : points) {
    IVec diff(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) diff[i] = p[i] - points[0][i];
    out.push_back(to_qvec(lattice_coordinates(diff, basis)));
  }
  return out;
}

}  // namespace dflab

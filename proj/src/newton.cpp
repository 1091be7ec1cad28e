#include "dflab/newton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dflab/error.hpp"
#include "dflab/polyhedral.hpp"

namespace dflab {

namespace {

Rational ceil_of(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c);
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const FlagIdeal& J) {
  if (J.mode() != IdealMode::chart || J.support() != SupportClass::point_supported) {
    throw Error(ErrorKind::UnsupportedMode, "Newton polyhedron needs a point-supported chart-mode ideal");
  }
  NewtonPolyhedron np;
  np.n_ = J.num_vars();
  np.N_ = J.length();
  const std::size_t dim = np.n_ + 1;
  for (int j = 0; j < J.length(); ++j) {
    for (const auto& g : J.chain()[j].generators()) {
      IVec p = g;
      p.push_back(j);
      np.points_.push_back(std::move(p));
    }
  }
  IVec apex(dim, 0);
  apex[np.n_] = np.N_;
  np.points_.push_back(apex);
  std::sort(np.points_.begin(), np.points_.end());
  np.points_.erase(std::unique(np.points_.begin(), np.points_.end()), np.points_.end());
  if (J.trivial()) return np;

  // Supporting hyperplanes through dim affinely independent points whose
  // normal is nonnegative; the strictly positive ones are the compact facets.
  std::vector<QVec> q;
  for (const auto& p : np.points_) q.push_back(to_qvec(p));
  std::vector<IVec> seen;
  const std::size_t m = q.size();
  std::vector<std::size_t> idx(dim);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == dim) {
      std::vector<QVec> rows;
      for (std::size_t i = 1; i < dim; ++i) {
        QVec d(dim);
        for (std::size_t c = 0; c < dim; ++c) d[c] = q[idx[i]][c] - q[idx[0]][c];
        rows.push_back(std::move(d));
      }
      auto kernel = nullspace(rows, dim);
      if (kernel.size() != 1) return;
      IVec w = primitive(kernel[0]);
      if (std::all_of(w.begin(), w.end(), [](Int x) { return x <= 0; })) {
        for (auto& x : w) x = -x;
      }
      if (std::any_of(w.begin(), w.end(), [](Int x) { return x < 0; })) return;
      Int level = dot(w, np.points_[idx[0]]);
      for (const auto& p : np.points_) {
        if (dot(w, p) < level) return;
      }
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) return;
      seen.push_back(w);
      const bool compact = std::all_of(w.begin(), w.end(), [](Int x) { return x > 0; });
      if (!compact) {
        if (level > 0) {
          throw Error(ErrorKind::NonPositiveExceptionalRay,
                      "lower facet with a zero normal coordinate and positive order");
        }
        return;
      }
      ExceptionalFacet f;
      f.normal = w;
      f.order = level;
      f.discrepancy = std::accumulate(w.begin(), w.end(), Int{0}) - 1;
      std::vector<IVec> on;
      for (const auto& p : np.points_) {
        if (dot(w, p) == level) on.push_back(p);
      }
      auto local = to_hyperplane_lattice(on, w);
      for (auto v : hull_vertices(local)) f.vertices.push_back(on[v]);
      std::sort(f.vertices.begin(), f.vertices.end());
      np.facets_.push_back(std::move(f));
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  std::sort(np.facets_.begin(), np.facets_.end(),
            [](const ExceptionalFacet& a, const ExceptionalFacet& b) { return a.normal < b.normal; });
  return np;
}

Rational NewtonPolyhedron::phi(const QVec& x) const {
  Rational best = 0;
  for (const auto& f : facets_) {
    Rational v = f.order;
    for (std::size_t i = 0; i < n_; ++i) v -= f.normal[i] * x[i];
    v /= f.normal[n_];
    if (v > best) best = v;
  }
  return best;
}

bool NewtonPolyhedron::contains(const QVec& point) const {
  for (const auto& c : point) {
    if (c < 0) return false;
  }
  QVec x(point.begin(), point.end() - 1);
  return point.back() >= phi(x);
}

Rational phi_value(const NewtonPolyhedron& np, const QVec& x) { return np.phi(x); }

bool power_integrally_closed(const FlagIdeal& J, const NewtonPolyhedron& np, int k) {
  if (J.trivial()) return true;
  const std::size_t n = J.num_vars();
  IVec hi(n, 0);
  for (const auto& I : J.chain()) {
    for (const auto& g : I.generators()) {
      for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(hi[i], g[i] * k);
    }
  }
  GradedPieces pieces(J.chain(), n);
  IVec x(n, 0);
  while (true) {
    QVec scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = make_rational(x[i], k);
    Rational closure_level = ceil_of(k * np.phi(scaled));
    if (Rational(static_cast<long>(pieces.least_level(k, x))) != closure_level) return false;
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i++] = 0;
    if (i == n) return true;
    ++x[i];
  }
}

bool is_normal(const FlagIdeal& J) {
  auto np = newton_polyhedron(J);
  const int d = static_cast<int>(J.num_vars()) + 1;
  for (int k = 1; k <= std::max(1, d - 1); ++k) {
    if (!power_integrally_closed(J, np, k)) return false;
  }
  return true;
}

}  // namespace dflab

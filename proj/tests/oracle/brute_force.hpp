#pragma once

// Independent reference computation of DF by the counting route. It
// deliberately shares nothing with the library: polytopes are hand-written
// inequality systems, J^K is expanded by brute-force multiplication of all
// generator products, and the polynomials come from a Vandermonde solve.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;

struct Polytope {
  std::vector<Vec> normals;   ///< inequalities <normal, u> >= scale * offset
  Vec offsets;
  Vec box_lo, box_hi;         ///< bounding box of P
  std::vector<int> chart;     ///< facets through the chart vertex (chart mode)
  std::vector<std::vector<int>> vertex_facets;  ///< facets through each vertex (cox mode)
};

inline long slack(const Polytope& P, int f, const Vec& u, long scale) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += P.normals[f][i] * u[i];
  return s - scale * P.offsets[f];
}

template <class Fn>
void points(const Polytope& P, long scale, Fn&& fn) {
  const std::size_t n = P.box_lo.size();
  Vec u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = P.box_lo[i] * scale;
  while (true) {
    bool inside = true;
    for (std::size_t f = 0; f < P.normals.size() && inside; ++f) inside = slack(P, static_cast<int>(f), u, scale) >= 0;
    if (inside) fn(u);
    std::size_t i = n;
    while (i > 0 && u[i - 1] == P.box_hi[i - 1] * scale) {
      u[i - 1] = P.box_lo[i - 1] * scale;
      --i;
    }
    if (i == 0) return;
    ++u[i - 1];
  }
}

/// A monomial x^e t^j of the Rees algebra.
using Term = std::pair<Vec, long>;

/// Flag ideal as a generator list of J ⊂ k[x, t]: every generator of I_j
/// times t^j, plus t^N.
struct Flag {
  std::size_t vars;
  std::vector<Term> gens;
  bool cox = false;
};

inline Flag make_flag(std::size_t vars, const std::vector<std::vector<Vec>>& ideals, bool cox = false) {
  Flag F{vars, {}, cox};
  for (std::size_t j = 0; j < ideals.size(); ++j) {
    for (const auto& g : ideals[j]) F.gens.push_back({g, static_cast<long>(j)});
  }
  F.gens.push_back({Vec(vars, 0), static_cast<long>(ideals.size())});
  return F;
}

/// Generators of J^K, obtained by multiplying out all K-fold products and
/// discarding terms that are multiples of others.
inline std::vector<Term> power(const Flag& F, int K) {
  std::set<Term> cur{{Vec(F.vars, 0), 0}};
  for (int step = 0; step < K; ++step) {
    std::set<Term> next;
    for (const auto& a : cur) {
      for (const auto& g : F.gens) {
        Vec e(F.vars);
        for (std::size_t i = 0; i < F.vars; ++i) e[i] = a.first[i] + g.first[i];
        next.insert({e, a.second + g.second});
      }
    }
    std::vector<Term> all(next.begin(), next.end()), kept;
    for (const auto& x : all) {
      bool redundant = false;
      for (const auto& y : all) {
        if (&x == &y || y.second > x.second) continue;
        bool divides = true;
        for (std::size_t i = 0; i < F.vars && divides; ++i) divides = y.first[i] <= x.first[i];
        if (divides && (y.second < x.second || y.first != x.first)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(x);
    }
    cur = std::set<Term>(kept.begin(), kept.end());
  }
  return {cur.begin(), cur.end()};
}

/// min { j : x^e t^j ∈ (generators) } restricted to the listed coordinates.
inline long level(const std::vector<Term>& gens, const Vec& e, const std::vector<int>& coords, long cap) {
  long best = cap;
  for (const auto& g : gens) {
    bool divides = true;
    for (int c : coords) divides = divides && g.first[c] <= e[c];
    if (divides) best = std::min(best, g.second);
  }
  return best;
}

struct Samples {
  std::vector<mpq_class> W, h;  ///< indexed by K - 1
};

inline Samples sample(const Polytope& P, const Flag& F, long r, int K_max) {
  Samples s;
  const long N = F.gens.back().second;
  for (int K = 1; K <= K_max; ++K) {
    auto gens = power(F, K);
    long total = 0, count = 0;
    points(P, K * r, [&](const Vec& u) {
      ++count;
      if (!F.cox) {
        Vec x;
        std::vector<int> coords;
        for (std::size_t i = 0; i < P.chart.size(); ++i) {
          x.push_back(slack(P, P.chart[i], u, K * r));
          coords.push_back(static_cast<int>(i));
        }
        total += level(gens, x, coords, K * N);
      } else {
        Vec x;
        for (std::size_t f = 0; f < P.normals.size(); ++f) x.push_back(slack(P, static_cast<int>(f), u, K * r));
        long g = 0;
        for (const auto& vf : P.vertex_facets) g = std::max(g, level(gens, x, vf, K * N));
        total += g;
      }
    });
    s.W.push_back(mpq_class(-total));
    s.h.push_back(mpq_class(count));
  }
  return s;
}

/// Coefficients (lowest first) of the degree-d polynomial through
/// (K, values[K-1]) for K = from..from+d, by Gauss-Jordan on the Vandermonde matrix.
inline std::vector<mpq_class> interpolate(const std::vector<mpq_class>& values, int from, int d) {
  const int m = d + 1;
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
  for (int row = 0; row < m; ++row) {
    mpq_class K = from + row, p = 1;
    for (int c = 0; c < m; ++c) {
      a[row][c] = p;
      p *= K;
    }
    a[row][m] = values[from + row - 1];
  }
  for (int c = 0; c < m; ++c) {
    int piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (int row = 0; row < m; ++row) {
      if (row == c || a[row][c] == 0) continue;
      mpq_class f = a[row][c] / a[c][c];
      for (int k = c; k <= m; ++k) a[row][k] -= f * a[c][k];
    }
  }
  std::vector<mpq_class> coeffs(m);
  for (int c = 0; c < m; ++c) coeffs[c] = a[c][m] / a[c][c];
  return coeffs;
}

inline mpq_class evaluate(const std::vector<mpq_class>& c, long K) {
  mpq_class v = 0, p = 1;
  for (const auto& x : c) {
    v += x * p;
    p *= K;
  }
  return v;
}

struct Result {
  std::vector<mpq_class> A, h;
  mpq_class df;
};

/// DF = A_{n+1} h_{n-1} - A_n h_n, or nothing if the samples on
/// K = 1..K_max are not explained by a single polynomial fitted on the
/// last n+2 of them.
inline std::optional<Result> df(const Polytope& P, const Flag& F, long r, int n, int K_max) {
  auto s = sample(P, F, r, K_max);
  const int from = K_max - (n + 1);
  Result res;
  res.A = interpolate(s.W, from, n + 1);
  res.h = interpolate(s.h, from, n + 1);
  const int stable_from = std::max(1, K_max - (n + 4));
  for (long K = stable_from; K <= K_max; ++K) {
    if (evaluate(res.A, K) != s.W[K - 1] || evaluate(res.h, K) != s.h[K - 1]) return std::nullopt;
  }
  res.df = res.A[n + 1] * res.h[n - 1] - res.A[n] * res.h[n];
  return res;
}

// Reference polytopes as explicit inequality systems.

inline Polytope segment(long d) {
  return {{{1}, {-1}}, {0, -d}, {0}, {d}, {0}, {{0}, {1}}};
}

inline Polytope triangle(long d) {
  return {{{1, 0}, {0, 1}, {-1, -1}}, {0, 0, -d}, {0, 0}, {d, d}, {0, 1}, {{0, 1}, {1, 2}, {0, 2}}};
}

inline Polytope box(long a, long b) {
  return {{{1, 0}, {0, 1}, {0, -1}, {-1, 0}}, {0, 0, -b, -a}, {0, 0}, {a, b}, {0, 1},
          {{0, 1}, {1, 3}, {2, 3}, {0, 2}}};
}

/// Quadrilateral (0,0),(3,0),(1,2),(0,2) (the Hirzebruch surface F_1).
/// Facets: x >= 0, y >= 0, y <= 2, x + y <= 3.
inline Polytope hirzebruch() {
  return {{{1, 0}, {0, 1}, {0, -1}, {-1, -1}}, {0, 0, -2, -3}, {0, 0}, {3, 2}, {0, 1},
          {{0, 1}, {1, 3}, {2, 3}, {0, 2}}};
}

}  // namespace oracle

#include "dflab/weights.hpp"

#include <algorithm>

#include "dflab/error.hpp"
#include "dflab/parallel.hpp"

namespace dflab {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coefficients, Int threshold)
    : coeffs_(std::move(coefficients)), threshold_(threshold) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ExactPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational ExactPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(Pipeline p) {
  switch (p) {
    case Pipeline::counting: return "counting";
    case Pipeline::intersection: return "intersection";
    case Pipeline::both: return "both";
  }
  return "counting";
}

namespace {

// order-th differences with step `step`: D_i = Σ_t (-1)^{order-t} C(order,t) f(i + t·step)
std::vector<Rational> differences(std::span<const Sample> s, int order, std::size_t step) {
  std::vector<Rational> out;
  const std::size_t span = static_cast<std::size_t>(order) * step;
  if (s.size() <= span) return out;
  std::vector<Rational> binom(order + 1);
  binom[0] = 1;
  for (int t = 1; t <= order; ++t) binom[t] = binom[t - 1] * (order - t + 1) / t;
  for (std::size_t i = 0; i + span < s.size(); ++i) {
    Rational d = 0;
    for (int t = 0; t <= order; ++t) {
      Rational term = binom[t] * s[i + static_cast<std::size_t>(t) * step].value;
      d += ((order - t) % 2 == 0) ? term : Rational(-term);
    }
    out.push_back(d);
  }
  return out;
}

std::size_t trailing_zeros(const std::vector<Rational>& v) {
  std::size_t z = 0;
  for (auto it = v.rbegin(); it != v.rend() && *it == 0; ++it) ++z;
  return z;
}

// Coefficients of the product of two polynomials.
std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

ExactPolynomial fit_polynomial(std::span<const Sample> samples, int max_degree, int guard) {
  if (max_degree < 0 || guard < 0) throw Error(ErrorKind::InvalidInput, "bad fit parameters");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].k != samples[i - 1].k + 1) {
      throw Error(ErrorKind::InvalidInput, "fit samples must be at consecutive integers");
    }
  }
  const std::size_t needed = static_cast<std::size_t>(max_degree + 2 + guard);
  if (samples.size() < needed) {
    throw NotStabilizedError("need at least " + std::to_string(needed) +
                                 " samples; extend K_range", 0);
  }
  const int order = max_degree + 1;
  auto diffs = differences(samples, order, 1);
  const std::size_t zeros = trailing_zeros(diffs);
  if (zeros < static_cast<std::size_t>(guard + 1)) {
    for (std::size_t p = 2; p <= 4; ++p) {
      auto qd = differences(samples, order, p);
      const std::size_t need = std::max<std::size_t>(guard + 1, p);
      if (!qd.empty() && trailing_zeros(qd) >= need) {
        throw NotStabilizedError(
            "weights follow a quasi-polynomial of period " + std::to_string(p) +
                "; the exponent r is too small for L^r(-E) to be semiample, increase r",
            static_cast<int>(p));
      }
    }
    throw NotStabilizedError("differences of order " + std::to_string(order) +
                                 " do not vanish on the sampled range; extend K_range",
                             0);
  }
  const std::size_t start = diffs.size() - zeros;
  auto tail = samples.subspan(start);

  // Newton forward form anchored at K0, expanded in the monomial basis.
  const Int k0 = tail[0].k;
  std::vector<Rational> table;
  for (const auto& s : tail.first(static_cast<std::size_t>(order))) table.push_back(s.value);
  std::vector<Rational> coeffs(1, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // C(K - K0, t)
  for (int t = 0; t < order; ++t) {
    const Rational lead = table[0];
    if (lead != 0) {
      if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += lead * basis[i];
    }
    for (std::size_t i = 0; i + 1 < table.size(); ++i) table[i] = table[i + 1] - table[i];
    table.pop_back();
    basis = multiply(basis, {make_rational(-k0 - t, t + 1), make_rational(1, t + 1)});
  }
  ExactPolynomial poly(coeffs, k0);
  for (const auto& s : tail) {
    if (poly(Rational(static_cast<long>(s.k))) != s.value) {
      throw Error(ErrorKind::CrossCheckFailure, "interpolant does not reproduce a stabilized sample");
    }
  }
  return poly;
}

std::vector<Int> weight_sequence(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                                 Int k_first, Int k_last, unsigned workers) {
  if (k_first < 1 || k_last < k_first) throw Error(ErrorKind::InvalidInput, "K range must be nonempty with K >= 1");
  std::vector<Int> out(static_cast<std::size_t>(k_last - k_first + 1), 0);
  if (J.trivial()) return out;
  TDegree g(variety, J, r);
  g.prepare(static_cast<int>(k_last));
  parallel_for(out.size(), workers, [&](std::size_t i) {
    const int k = static_cast<int>(k_first + static_cast<Int>(i));
    Int total = 0;
    for_each_lattice_point(variety.polytope, k * r, [&](const IVec& u) { total += g(k, u); });
    out[i] = -total;
  });
  return out;
}

std::vector<Int> hilbert_sequence(const PolarizedToricVariety& variety, Int r, Int k_first, Int k_last) {
  std::vector<Int> out;
  for (Int k = k_first; k <= k_last; ++k) out.push_back(ehrhart_count(variety, k * r));
  return out;
}

namespace {

std::vector<Sample> as_samples(Int k_first, const std::vector<Int>& values) {
  std::vector<Sample> s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.push_back({k_first + static_cast<Int>(i), Rational(static_cast<long>(values[i]))});
  }
  return s;
}

}  // namespace

CountingFit fit_counting(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                         const FitOptions& options) {
  const int n = variety.dimension();
  CountingFit fit;
  fit.k_first = options.k_first;
  Int k_last = options.k_last > 0 ? options.k_last : options.k_first + n + 5;
  const Int cap = std::max(options.k_cap, k_last);
  while (true) {
    const Int have = options.k_first + static_cast<Int>(fit.weights.size()) - 1;
    if (k_last > have) {
      auto w = weight_sequence(variety, J, r, have + 1, k_last, options.workers);
      fit.weights.insert(fit.weights.end(), w.begin(), w.end());
      auto h = hilbert_sequence(variety, r, have + 1, k_last);
      fit.hilbert.insert(fit.hilbert.end(), h.begin(), h.end());
    }
    try {
      auto hs = as_samples(fit.k_first, fit.hilbert);
      fit.h = fit_polynomial(hs, n, options.guard);
      auto ws = as_samples(fit.k_first, fit.weights);
      fit.A = fit_polynomial(ws, n + 1, options.guard);
      return fit;
    } catch (const NotStabilizedError& e) {
      if (e.quasi_period() != 0 || k_last >= cap) throw;
      k_last = std::min(cap, 2 * k_last);
    }
  }
}

Rational df_from_polynomials(const ExactPolynomial& A, const ExactPolynomial& h, int n) {
  const auto un = static_cast<std::size_t>(n);
  return A.coefficient(un + 1) * h.coefficient(un - 1) - A.coefficient(un) * h.coefficient(un);
}

Rational chow_from_polynomials(const ExactPolynomial& A, const ExactPolynomial& h, int n) {
  const auto un = static_cast<std::size_t>(n);
  return h(1) * A.coefficient(un + 1) - A(1) * h.coefficient(un);
}

DFReport df_counting(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                     const FitOptions& options) {
  DFReport report;
  report.dimension = variety.dimension();
  report.exponent = r;
  report.pipeline = Pipeline::counting;
  report.trivial = J.trivial();
  auto fit = fit_counting(variety, J, r, options);
  report.A = fit.A;
  report.h = fit.h;
  report.df = report.trivial ? Rational(0) : df_from_polynomials(fit.A, fit.h, report.dimension);
  report.chow = report.trivial ? Rational(0) : chow_from_polynomials(fit.A, fit.h, report.dimension);
  report.df_counting = report.df;
  return report;
}

Rational chow_number(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                     const FitOptions& options) {
  return *df_counting(variety, J, r, options).chow;
}

Rational normalized_weight(const ExactPolynomial& A, const ExactPolynomial& h, Int exponent,
                           const Rational& a, const Rational& b) {
  const Rational e(static_cast<long>(exponent));
  auto w = [&](const Rational& k) { return A(k / e); };
  auto P = [&](const Rational& k) { return h(k / e); };
  return w(b) * a * P(a) - w(a) * b * P(b);
}

bool mabuchi_check(const ExactPolynomial& A, const ExactPolynomial& h, Int exponent, Int r, Int k,
                   Int k_prime) {
  const Rational e(static_cast<long>(exponent));
  auto P = [&](const Rational& x) { return h(x / e); };
  const Rational rq(static_cast<long>(r)), kq(static_cast<long>(k)), kk(static_cast<long>(k * k_prime));
  const Rational kp(static_cast<long>(k_prime));
  if (P(kk) == 0 || P(kq) == 0) return false;
  Rational lhs = normalized_weight(A, h, exponent, rq, kk) / (kk * P(kk)) -
                 normalized_weight(A, h, exponent, rq, kq) / (kq * P(kq));
  Rational rhs = rq * P(rq) / (kq * kq * kp * P(kk) * P(kq)) * normalized_weight(A, h, exponent, kq, kk);
  return lhs == rhs;
}

bool normalized_leading_check(const ExactPolynomial& A, const ExactPolynomial& h, int n, Int r) {
  const Rational rq(static_cast<long>(r));
  // W̃(K) = A(K)·r·h(1) - A(1)·r·K·h(K), built coefficientwise.
  std::vector<Rational> wt(static_cast<std::size_t>(n) + 3, Rational(0));
  for (std::size_t i = 0; i < wt.size(); ++i) {
    wt[i] += A.coefficient(i) * rq * h(1);
    if (i >= 1) wt[i] -= A(1) * rq * h.coefficient(i - 1);
  }
  const auto top = static_cast<std::size_t>(n) + 1;
  return wt[top] == rq * chow_from_polynomials(A, h, n) && wt[top + 1] == 0;
}

bool weak_riemann_roch_check(const PolarizedToricVariety& variety, const ExactPolynomial& h, Int r) {
  const int n = variety.dimension();
  const auto nums = intersection_numbers(variety);
  Rational rn = 1;
  for (int i = 0; i < n - 1; ++i) rn *= static_cast<long>(r);
  const Rational top = rn * static_cast<long>(r) * static_cast<long>(nums.top) / static_cast<long>(factorial(n));
  const Rational sub = -rn * static_cast<long>(nums.canonical) / (2 * static_cast<long>(factorial(n - 1)));
  const auto un = static_cast<std::size_t>(n);
  return h.degree() == n && h.coefficient(0) == 1 && h.coefficient(un) == top && h.coefficient(un - 1) == sub;
}

bool semiample_precheck(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r) {
  if (J.trivial() || J.mode() != IdealMode::chart) return true;
  Int degree = 0;
  for (const auto& I : J.chain()) degree = std::max(degree, I.max_degree());
  for (std::size_t i = 0; i < variety.chart_basis.size(); ++i) {
    Int width = 0;
    for (const auto& v : variety.polytope.vertices()) width = std::max(width, chart_coords(variety, v, 1)[i]);
    if (r * width < degree) return false;
  }
  return true;
}

}  // namespace dflab

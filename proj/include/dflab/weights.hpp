#pragma once

// Counting pipeline. The total weight of the central
// fibre in degree K is W(K) = -Σ_{u ∈ KrP} g_K(u), a colength count; fitting
// W and the Ehrhart counts h(K) = #(KrP ∩ Z^n) by exact polynomials yields
// DF := A_{n+1}·h_{n-1} - A_n·h_n, which is the normalized-weight
// coefficient e_{n+1,n} times the positive factor r^{2n}.

#include <span>
#include <utility>
#include <vector>

#include "dflab/lattice.hpp"
#include "dflab/monomial.hpp"
#include "dflab/report.hpp"

namespace dflab {

struct Sample {
  Int k;
  Rational value;
};

/// Newton forward-difference fit on consecutive samples. The
/// (max_degree+1)-th differences must vanish on at least guard+1 trailing
/// windows; otherwise NotStabilizedError, carrying a detected quasi-period
/// in 2..4 when the tail is quasi-polynomial.
ExactPolynomial fit_polynomial(std::span<const Sample> samples, int max_degree, int guard = 2);

/// W(K) for K in [k_first, k_last].
std::vector<Int> weight_sequence(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                                 Int k_first, Int k_last, unsigned workers = 0);

/// #(KrP ∩ Z^n) for K in [k_first, k_last].
std::vector<Int> hilbert_sequence(const PolarizedToricVariety& variety, Int r, Int k_first, Int k_last);

struct FitOptions {
  Int k_first = 1;
  Int k_last = 0;  ///< 0: n + 6
  int guard = 2;
  Int k_cap = 40;  ///< auto-extension stops here
  unsigned workers = 0;
};

struct CountingFit {
  ExactPolynomial A;
  ExactPolynomial h;
  Int k_first = 1;
  std::vector<Int> weights;  ///< W(k_first), W(k_first+1), ...
  std::vector<Int> hilbert;
};

/// Samples W and h, doubling the K range up to the cap until both fits
/// stabilize. A detected quasi-period stops the extension early.
CountingFit fit_counting(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                         const FitOptions& options = {});

/// A_{n+1}·h_{n-1} - A_n·h_n
Rational df_from_polynomials(const ExactPolynomial& A, const ExactPolynomial& h, int n);

/// h(1)·A_{n+1} - A(1)·h_n = r^n·e_{n+1}(r)
Rational chow_from_polynomials(const ExactPolynomial& A, const ExactPolynomial& h, int n);

DFReport df_counting(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                     const FitOptions& options = {});

Rational chow_number(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                     const FitOptions& options = {});

/// Normalized weight w̃_{a,b} = w(b)·a·P(a) - w(a)·b·P(b), where w and P are
/// the fitted polynomials read in the k = exponent·K variable.
Rational normalized_weight(const ExactPolynomial& A, const ExactPolynomial& h, Int exponent,
                           const Rational& a, const Rational& b);

/// Exact check of
///   w̃_{r,kk'}/(kk'P(kk')) - w̃_{r,k}/(kP(k)) = rP(r)/(k²k'P(kk')P(k)) · w̃_{k,kk'}.
bool mabuchi_check(const ExactPolynomial& A, const ExactPolynomial& h, Int exponent, Int r, Int k,
                   Int k_prime);

/// W̃(K) = A(K)·r·h(1) - A(1)·r·K·h(K): its K^{n+1} coefficient must equal
/// r times the Chow representative (so the normalized top coefficient vanishes
/// exactly when the Chow weight does).
bool normalized_leading_check(const ExactPolynomial& A, const ExactPolynomial& h, int n, Int r);

/// Cheap sufficient test for L^r(-E) being semiample on a chart-mode ideal:
/// r times the lattice width of P along every chart axis is at least the
/// largest generator degree. Failing it is only a warning; quasi-polynomial
/// detection during fitting is the authoritative guard.
bool semiample_precheck(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r);

/// The fitted h(K) = #(KrP ∩ Z^n) against the intersection numbers:
/// constant term 1, K^n coefficient r^n·(L^n)/n!, and K^{n-1} coefficient
/// -r^{n-1}·(L^{n-1}.K_X)/(2·(n-1)!).
bool weak_riemann_roch_check(const PolarizedToricVariety& variety, const ExactPolynomial& h, Int r);

}  // namespace dflab

#pragma once

#include <complex>
#include <deque>
#include <mutex>
#include <vector>

#include "xhermite/scaled_poly.hpp"

namespace xhermite {

/// Memoized probabilists' Hermite polynomials He_n(x), grown on demand with
/// He_{n+1} = x He_n - n He_{n-1}. Elements never move once stored, so the
/// returned references stay valid for the lifetime of the cache.
class HermiteCache {
 public:
  HermiteCache();

  const ScaledPoly& get(int n);
  /// Grows the table to n inclusive.
  void reserve(int n);

  static HermiteCache& global();

 private:
  std::mutex mutex_;
  std::deque<ScaledPoly> table_;
};

/// He_n(x), exact, scale_exp 0.
const ScaledPoly& hermite(int n);

/// h_n(x) h_n(y) = He_n(x) He_n(y) / n! * (2*pi)^(-1/2).
///
/// A lone h_n = p_n He_n carries sqrt(n!) and is never materialized; the
/// paired form is rational up to the (2*pi) tag.
ScaledPoly normalized_hermite_pair(int n);

/// p_n^2 = 1 / n! (the (2*pi)^(-1/2) part is tracked by scale_exp 1).
Rational norm_sq_rational(int n);

Integer factorial(int n);

/// h_0(z) ... h_{n_max}(z) in double precision via the normalized recurrence
/// h_{n+1} = (z h_n - sqrt(n) h_{n-1}) / sqrt(n+1).
std::vector<std::complex<double>> normalized_hermite_values(std::complex<double> z, int n_max);
std::vector<double> normalized_hermite_values(double x, int n_max);

/// Oscillator eigenfunction psi_n(x) = h_n(x) exp(-x^2/4) for n = 0..n_max.
std::vector<double> oscillator_eigenfunctions(double x, int n_max);

}  // namespace xhermite

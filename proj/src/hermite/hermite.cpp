#include "xhermite/hermite.hpp"

#include <cmath>
#include <numbers>

namespace xhermite {

HermiteCache::HermiteCache() {
  table_.push_back(ScaledPoly::constant(1));
  table_.push_back(ScaledPoly::x());
}

void HermiteCache::reserve(int n) {
  std::lock_guard lock(mutex_);
  while (static_cast<int>(table_.size()) <= n) {
    const int k = static_cast<int>(table_.size()) - 1;
    table_.push_back(ScaledPoly::x() * table_[k] - table_[k - 1] * Rational(k));
  }
}

const ScaledPoly& HermiteCache::get(int n) {
  reserve(n);
  std::lock_guard lock(mutex_);
  return table_[n];
}

HermiteCache& HermiteCache::global() {
  static HermiteCache cache;
  return cache;
}

const ScaledPoly& hermite(int n) { return HermiteCache::global().get(n); }

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational norm_sq_rational(int n) { return Rational(1, factorial(n)); }

ScaledPoly normalized_hermite_pair(int n) {
  const ScaledPoly& he = hermite(n);
  return (he * he.in_y() * norm_sq_rational(n)).with_scale(1);
}

namespace {

template <typename T>
std::vector<T> normalized_values(T z, int n_max) {
  std::vector<T> h(static_cast<size_t>(std::max(n_max, 0) + 1));
  h[0] = std::pow(2.0 * std::numbers::pi, -0.25);
  if (n_max >= 1) h[1] = z * h[0];
  for (int n = 1; n < n_max; ++n) {
    h[n + 1] = (z * h[n] - std::sqrt(double(n)) * h[n - 1]) / std::sqrt(double(n + 1));
  }
  return h;
}

}  // namespace

std::vector<std::complex<double>> normalized_hermite_values(std::complex<double> z, int n_max) {
  return normalized_values(z, n_max);
}

std::vector<double> normalized_hermite_values(double x, int n_max) {
  return normalized_values(x, n_max);
}

std::vector<double> oscillator_eigenfunctions(double x, int n_max) {
  auto h = normalized_values(x, n_max);
  const double g = std::exp(-0.25 * x * x);
  for (auto& v : h) v *= g;
  return h;
}

}  // namespace xhermite

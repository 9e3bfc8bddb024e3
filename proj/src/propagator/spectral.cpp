#include "xhermite/spectral.hpp"

#include <cmath>

#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"
#include "xhermite/propagator.hpp"

namespace xhermite {

double normalized_wronskian_value(std::span<const int> levels, std::span<const double> h) {
  const int n = static_cast<int>(levels.size());
  if (n == 0) return 1.0;
  std::vector<double> a(static_cast<size_t>(n * n));
  for (int c = 0; c < n; ++c) {
    const int level = levels[c];
    double factor = 1.0;  // sqrt(level! / (level - r)!)
    for (int r = 0; r < n; ++r) {
      a[r * n + c] = r <= level ? factor * h[level - r] : 0.0;
      factor *= std::sqrt(static_cast<double>(std::max(level - r, 0)));
    }
  }
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
    }
    if (a[p * n + k] == 0.0) return 0.0;
    if (p != k) {
      for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      d = -d;
    }
    d *= a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      for (int c = k + 1; c < n; ++c) a[i * n + c] -= f * a[k * n + c];
    }
  }
  return d;
}

std::vector<double> xeigen_pair_values(const LevelSequence& sigma, int n_max, double x, double y) {
  const int top = std::max(n_max, sigma.last());
  const auto hx = normalized_hermite_values(x, top);
  const auto hy = normalized_hermite_values(y, top);
  std::vector<int> cols = sigma.levels();
  const double base = normalized_wronskian_value(cols, hx) * normalized_wronskian_value(cols, hy);
  if (base == 0.0) throw WronskianZero("Wr[h_sigma] vanishes at the evaluation point");
  const double gauss = std::exp(-0.25 * (x * x + y * y));
  cols.push_back(0);
  std::vector<double> out(static_cast<size_t>(n_max + 1), 0.0);
  for (int n = 0; n <= n_max; ++n) {
    if (sigma.contains(n)) continue;
    cols.back() = n;
    const double wx = normalized_wronskian_value(cols, hx);
    const double wy = normalized_wronskian_value(cols, hy);
    out[n] = gauss * normalization_sq(sigma, n).get_d() * wx * wy / base;
  }
  return out;
}

std::vector<double> oscillator_pair_values(int n_max, double x, double y) {
  const auto px = oscillator_eigenfunctions(x, n_max);
  const auto py = oscillator_eigenfunctions(y, n_max);
  std::vector<double> out(static_cast<size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) out[n] = px[n] * py[n];
  return out;
}

std::complex<double> g_osc_truncated(double x, double y, std::complex<double> energy, int n_max) {
  if (n_max < 0) return 0.0;
  const auto pairs = oscillator_pair_values(n_max, x, y);
  std::complex<double> g = 0.0;
  for (int n = n_max; n >= 0; --n) g += pairs[n] / (n + 0.5 - energy);
  return g;
}

std::complex<double> k_osc_spectral(double x, double y, std::complex<double> t, int n_max) {
  const auto pairs = oscillator_pair_values(n_max, x, y);
  const std::complex<double> i{0.0, 1.0};
  std::complex<double> k = 0.0;
  for (int n = n_max; n >= 0; --n) k += pairs[n] * std::exp(-i * (n + 0.5) * t);
  return k;
}

std::complex<double> k_sigma_spectral(const LevelSequence& sigma, double x, double y,
                                      std::complex<double> t, int n_max) {
  const auto pairs = xeigen_pair_values(sigma, n_max, x, y);
  const std::complex<double> i{0.0, 1.0};
  std::complex<double> k = 0.0;
  for (int n = n_max; n >= 0; --n) k += pairs[n] * std::exp(-i * (n + 0.5) * t);
  return k;
}

GreenValue green_function(const PropagatorModel& model, double x, double y, cdouble energy,
                          int n_trunc) {
  if (n_trunc < 4.0 * std::abs(energy)) {
    throw TruncationTooSmall("n_trunc must be at least 4|E|");
  }
  const double nearest = std::max(0.0, std::round(energy.real() - 0.5));
  if (std::abs(energy - cdouble(nearest + 0.5, 0.0)) < 1e-6) {
    throw NearPole("E is within 1e-6 of the oscillator level " + std::to_string(nearest + 0.5));
  }
  const int count = model.qtable().size();
  cdouble rel = 0.0;
  for (int k = 0; k < count; ++k) {
    rel += model.q_value(k, x, y) * g_osc_truncated(x, y, energy - double(k), n_trunc - k);
  }
  rel /= model.q_sum(x, y);
  const auto pairs = xeigen_pair_values(model.sigma(), n_trunc, x, y);
  cdouble direct = 0.0;
  for (int n = n_trunc; n >= 0; --n) {
    if (!model.sigma().contains(n)) direct += pairs[n] / (n + 0.5 - energy);
  }
  return {rel, direct};
}

}  // namespace xhermite

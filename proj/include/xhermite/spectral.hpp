#pragma once

#include <complex>
#include <span>
#include <vector>

#include "xhermite/wronskian.hpp"

namespace xhermite {

/// Wr[h_{c_1}, ..., h_{c_N}](x) in double precision, using
/// h_c^(r) = sqrt(c! / (c - r)!) h_{c - r} and partial-pivot elimination.
/// `h` must hold h_0(x) ... h_{max c}(x).
double normalized_wronskian_value(std::span<const int> levels, std::span<const double> h);

/// psi_n^sigma(x) psi_n^sigma(y) for n = 0 ... n_max, from numerical Wronskians
/// of normalized Hermite functions. Zero for n in sigma.
std::vector<double> xeigen_pair_values(const LevelSequence& sigma, int n_max, double x, double y);

/// psi_n(x) psi_n(y) for n = 0 ... n_max.
std::vector<double> oscillator_pair_values(int n_max, double x, double y);

/// sum_{n <= n_max} psi_n(x) psi_n(y) / (n + 1/2 - E).
std::complex<double> g_osc_truncated(double x, double y, std::complex<double> energy, int n_max);

/// sum_{n <= n_max} psi_n(x) psi_n(y) exp(-i (n + 1/2) t).
std::complex<double> k_osc_spectral(double x, double y, std::complex<double> t, int n_max);

/// sum over n <= n_max, n not in sigma, of psi_n^sigma(x) psi_n^sigma(y) exp(-i (n + 1/2) t).
std::complex<double> k_sigma_spectral(const LevelSequence& sigma, double x, double y,
                                      std::complex<double> t, int n_max);

}  // namespace xhermite

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "xhermite/connection.hpp"
#include "xhermite/execution.hpp"
#include "xhermite/numeric_poly.hpp"
#include "xhermite/report.hpp"
#include "xhermite/wronskian.hpp"

namespace xhermite {

using cdouble = std::complex<double>;

/// Harmonic oscillator propagator for H = -d^2/dx^2 + x^2/4,
///   K_osc = exp(i[(x^2+y^2) cos t - 2xy] / (4 sin t)) / sqrt(4 pi i sin t)
/// with the principal square root. This equals
/// sum_n psi_n(x) psi_n(y) exp(-i(n + 1/2) t), i.e. the closed form carries the
/// zero-point phase exp(-it/2) that the lambda^n series leaves implicit.
/// Throws SingularTime for |sin t| <= 1e-12.
cdouble k_osc(cdouble x, cdouble y, cdouble t);

/// Propagator of the rational extension H^sigma:
///   K^sigma = K_osc * sum_k Q_k lambda^k / sum_k Q_k,  lambda = exp(-it).
class PropagatorModel {
 public:
  explicit PropagatorModel(const LevelSequence& sigma);
  explicit PropagatorModel(QTable q);

  const LevelSequence& sigma() const { return q_.sigma; }
  const QTable& qtable() const { return q_; }
  const ScaledPoly& w_hat() const { return w_hat_; }

  /// sum_k Q_k(x, y) lambda^k.
  cdouble q_series(cdouble x, cdouble y, cdouble lambda) const;
  /// sum_k Q_k(x, y) = (-1)^|sigma| Wr[h_sigma](x) Wr[h_sigma](y).
  cdouble q_sum(cdouble x, cdouble y) const;
  cdouble q_value(int k, cdouble x, cdouble y) const { return q_numeric_[k](x, y); }

 private:
  QTable q_;
  ScaledPoly w_hat_;
  std::vector<NumericPoly> q_numeric_;
  NumericPoly q_sum_numeric_;
};

/// Throws SingularTime, or WronskianZero when sum_k Q_k vanishes at (x, y).
cdouble k_sigma(const PropagatorModel& model, cdouble x, cdouble y, cdouble t);

/// Hand-simplified closed forms for sigma = {1,2} and {2,3}.
cdouble k12_closed_form(cdouble x, cdouble y, cdouble t);
cdouble k23_closed_form(cdouble x, cdouble y, cdouble t);

/// V^sigma(x) = x^2/4 + numerator/denominator with
///   numerator = 2M W^2 - 2(W'' W - W'^2),  denominator = W^2,  W = Wr[He_sigma].
/// The constant 2M is kept inside numerator and also recorded in `shift`.
class PotentialModel {
 public:
  LevelSequence sigma;
  ScaledPoly numerator;
  ScaledPoly denominator;
  int shift = 0;

  double value(double x) const;
  double derivative(double x) const;

 private:
  friend PotentialModel potential(const LevelSequence& sigma);
  NumericPoly num_, den_, num_d_, den_d_;
};

/// Throws NotKreinAdler.
PotentialModel potential(const LevelSequence& sigma);

/// Exact check of Delta V^sigma(x) = sum_k k Q_k(x,x) / sum_j Q_j(x,x) where
/// Delta V^sigma = V^sigma - x^2/4 = 2M - 2 (log W_hat)''. Throws NotKreinAdler.
VerificationReport verify_deltaV_identity(const LevelSequence& sigma);

/// Local minima of V on a uniform grid, from sign changes of V'.
std::vector<double> potential_minima(const PotentialModel& v, double lo, double hi, int points);

struct GreenValue {
  cdouble relation;  // sum_k Q_k G_osc(E - k) / sum_k Q_k
  cdouble direct;    // sum over n not in sigma of psi_n^sigma psi_n^sigma / (n + 1/2 - E)
};

/// Resolvent kernel of H^sigma by the connection relation and by the direct
/// spectral sum. Both routes use the same truncation n <= n_trunc: G_osc(E - k)
/// is summed to n_trunc - k so that the two values see the same spectral
/// window. Throws NearPole, TruncationTooSmall.
GreenValue green_function(const PropagatorModel& model, double x, double y, cdouble energy,
                          int n_trunc);

struct EigenCheckConfig {
  double step = 1e-3;
  double half_width = 10.0;
  double tolerance = 1e-5;
  Execution exec = Execution::parallel;
};

/// Finite-difference residual |(-d^2 + V^sigma - (n + 1/2)) psi_n^sigma| on a
/// grid, for n <= n_max. Levels in sigma must give psi identically zero.
/// Throws NotKreinAdler.
VerificationReport verify_eigenfunctions(const LevelSequence& sigma, int n_max,
                                         const EigenCheckConfig& cfg = {});

/// max |<psi_n^sigma, psi_m^sigma> - delta_nm| over n, m <= n_max not in sigma,
/// composite Simpson on [-L, L], L = max(12, sigma[[-1]] + 8). For the empty
/// sigma these are the plain oscillator eigenfunctions.
VerificationReport verify_orthonormality(const LevelSequence& sigma, int n_max,
                                         double tolerance, int points = 8001);

/// psi_n^sigma(x) for KA sigma from the exact Wronskian, as a callable.
class XEigenfunction {
 public:
  XEigenfunction(const LevelSequence& sigma, int n);
  double operator()(double x) const;
  bool identically_zero() const { return zero_; }

 private:
  NumericPoly num_, den_;
  double c_ = 0.0;
  bool zero_ = false;
};

/// |(i d/dt - H^sigma_x) K^sigma(x, y; t)| by central differences with step h
/// in t and the 5-point stencil with step h in x; real x, y, t.
double schrodinger_residual(const PropagatorModel& model, const PotentialModel& v, double x,
                            double y, double t, double h);

}  // namespace xhermite

#include "xhermite/propagator.hpp"

#include <cmath>
#include <numbers>

#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"
#include "xhermite/poly_json.hpp"

namespace xhermite {

namespace {

constexpr cdouble kI{0.0, 1.0};
constexpr double kSingularSin = 1e-12;

void check_time(cdouble t) {
  if (std::abs(std::sin(t)) <= kSingularSin) {
    throw SingularTime("|sin t| <= 1e-12 at t = (" + std::to_string(t.real()) + ", " +
                       std::to_string(t.imag()) + ")");
  }
}

}  // namespace

cdouble k_osc(cdouble x, cdouble y, cdouble t) {
  check_time(t);
  const cdouble s = std::sin(t);
  const cdouble phase = kI * ((x * x + y * y) * std::cos(t) - 2.0 * x * y) / (4.0 * s);
  return std::exp(phase) / std::sqrt(4.0 * std::numbers::pi * kI * s);
}

PropagatorModel::PropagatorModel(const LevelSequence& sigma)
    : PropagatorModel(build_qtable(sigma)) {}

PropagatorModel::PropagatorModel(QTable q)
    : q_(std::move(q)), w_hat_(wronskian_of_levels(q_.sigma)), q_sum_numeric_(q_.sum()) {
  q_numeric_.reserve(q_.polys.size());
  for (const auto& p : q_.polys) q_numeric_.emplace_back(p);
}

cdouble PropagatorModel::q_series(cdouble x, cdouble y, cdouble lambda) const {
  cdouble acc = 0.0;
  for (auto it = q_numeric_.rbegin(); it != q_numeric_.rend(); ++it) acc = acc * lambda + (*it)(x, y);
  return acc;
}

cdouble PropagatorModel::q_sum(cdouble x, cdouble y) const { return q_sum_numeric_(x, y); }

cdouble k_sigma(const PropagatorModel& model, cdouble x, cdouble y, cdouble t) {
  check_time(t);
  const cdouble den = model.q_sum(x, y);
  if (den == 0.0) throw WronskianZero("sum_k Q_k vanishes at the evaluation point");
  const cdouble lambda = std::exp(-kI * t);
  return k_osc(x, y, t) * model.q_series(x, y, lambda) / den;
}

cdouble k12_closed_form(cdouble x, cdouble y, cdouble t) {
  const cdouble s = std::sin(t);
  const cdouble corr =
      1.0 - 4.0 * kI * s * (x * y - std::exp(kI * t)) / ((1.0 + x * x) * (1.0 + y * y));
  return std::exp(-2.0 * kI * t) * k_osc(x, y, t) * corr;
}

cdouble k23_closed_form(cdouble x, cdouble y, cdouble t) {
  const cdouble s = std::sin(t);
  const cdouble c = std::cos(t);
  const cdouble xy = x * y;
  const cdouble x2 = x * x, y2 = y * y;
  const cdouble bracket = xy * (xy * xy - 3.0) - 3.0 * (x2 + y2) * c - 3.0 * kI * (xy * xy + 1.0) * s;
  const cdouble corr = 1.0 - 8.0 * kI * s * bracket / ((3.0 + x2 * x2) * (3.0 + y2 * y2));
  return std::exp(-2.0 * kI * t) * k_osc(x, y, t) * corr;
}

PotentialModel potential(const LevelSequence& sigma) {
  if (!sigma.is_krein_adler()) {
    throw NotKreinAdler(sigma.to_string() + " does not split into pairs {k, k+1}");
  }
  const ScaledPoly w = wronskian_of_levels(sigma);
  const ScaledPoly w1 = poly_diff(w, Var::x);
  const ScaledPoly w2 = poly_diff(w, Var::x, 2);
  PotentialModel v;
  v.sigma = sigma;
  v.shift = 2 * sigma.pair_count();
  v.denominator = w * w;
  v.numerator = v.denominator * Rational(v.shift) - (w2 * w - w1 * w1) * Rational(2);
  v.num_ = NumericPoly(v.numerator);
  v.den_ = NumericPoly(v.denominator);
  v.num_d_ = NumericPoly(poly_diff(v.numerator, Var::x));
  v.den_d_ = NumericPoly(poly_diff(v.denominator, Var::x));
  return v;
}

double PotentialModel::value(double x) const { return 0.25 * x * x + num_(x) / den_(x); }

double PotentialModel::derivative(double x) const {
  const double d = den_(x);
  return 0.5 * x + (num_d_(x) * d - num_(x) * den_d_(x)) / (d * d);
}

std::vector<double> potential_minima(const PotentialModel& v, double lo, double hi, int points) {
  std::vector<double> minima;
  const double h = (hi - lo) / (points - 1);
  double prev = v.derivative(lo);
  for (int i = 1; i < points; ++i) {
    const double x = lo + i * h;
    const double d = v.derivative(x);
    if (prev < 0.0 && d >= 0.0) minima.push_back(x);
    prev = d;
  }
  return minima;
}

VerificationReport verify_deltaV_identity(const LevelSequence& sigma) {
  const PotentialModel v = potential(sigma);
  const QTable q = build_qtable(sigma);
  ScaledPoly weighted = ScaledPoly();
  for (int k = 1; k < q.size(); ++k) weighted += q.polys[k].diagonal() * Rational(k);
  const ScaledPoly total = q.sum().diagonal();
  const ScaledPoly diff = weighted * v.denominator - total * v.numerator;
  VerificationReport r;
  r.check_name = "deltaV_identity";
  r.sigma = sigma;
  r.worst_residual = exact_residual(diff);
  nlohmann::json c = {{"shift", v.shift}};
  if (!diff.is_zero()) c["difference"] = to_json(diff);
  r.cases.push_back(std::move(c));
  r.finalize();
  return r;
}

XEigenfunction::XEigenfunction(const LevelSequence& sigma, int n) {
  if (!sigma.is_krein_adler()) throw NotKreinAdler(sigma.to_string());
  const RationalFunction lf = apply_Lhat(sigma, hermite(n));
  zero_ = lf.numerator.is_zero();
  if (zero_) return;
  num_ = NumericPoly(lf.numerator);
  den_ = NumericPoly(lf.denominator);
  // psi_n^sigma = N_n p_n exp(-x^2/4) Wr[He_sigma, He_n] / W_hat.
  const double nn = normalization_sq(sigma, n).get_d() * norm_sq_rational(n).get_d();
  c_ = std::sqrt(nn) * std::pow(2.0 * std::numbers::pi, -0.25);
}

double XEigenfunction::operator()(double x) const {
  if (zero_) return 0.0;
  return c_ * std::exp(-0.25 * x * x) * num_(x) / den_(x);
}

VerificationReport verify_eigenfunctions(const LevelSequence& sigma, int n_max,
                                         const EigenCheckConfig& cfg) {
  const PotentialModel v = potential(sigma);
  VerificationReport r;
  r.check_name = "eigenfunctions";
  r.sigma = sigma;
  r.tolerance = cfg.tolerance;
  const double h = cfg.step;
  const int count = static_cast<int>(std::lround(2.0 * cfg.half_width / h)) + 1;
  for (int n = 0; n <= n_max; ++n) {
    const XEigenfunction psi(sigma, n);
    if (sigma.contains(n)) {
      const double res = psi.identically_zero() ? 0.0 : 1.0;
      r.worst_residual = std::max(r.worst_residual, res);
      r.cases.push_back({{"n", n}, {"deleted", true}, {"residual", res}});
      continue;
    }
    const double energy = n + 0.5;
    std::vector<double> res(static_cast<size_t>(count), 0.0);
    auto point = [&](int i) {
      const double x = -cfg.half_width + i * h;
      const double f0 = psi(x);
      const double d2 = (-psi(x + 2 * h) + 16 * psi(x + h) - 30 * f0 + 16 * psi(x - h) -
                         psi(x - 2 * h)) /
                        (12 * h * h);
      res[i] = std::abs(-d2 + (v.value(x) - energy) * f0);
    };
    if (cfg.exec == Execution::parallel) {
#pragma omp parallel for
      for (int i = 0; i < count; ++i) point(i);
    } else {
      for (int i = 0; i < count; ++i) point(i);
    }
    double worst = 0.0;
    for (double e : res) worst = std::max(worst, e);
    r.worst_residual = std::max(r.worst_residual, worst);
    r.cases.push_back({{"n", n}, {"deleted", false}, {"residual", worst}});
  }
  r.finalize();
  return r;
}

VerificationReport verify_orthonormality(const LevelSequence& sigma, int n_max,
                                         double tolerance, int points) {
  VerificationReport r;
  r.check_name = "orthonormality";
  r.sigma = sigma;
  r.tolerance = tolerance;
  if (points % 2 == 0) ++points;
  const double half = std::max(12.0, sigma.last() + 8.0);
  const double h = 2.0 * half / (points - 1);
  std::vector<int> levels;
  std::vector<std::vector<double>> values;
  for (int n = 0; n <= n_max; ++n) {
    if (sigma.contains(n)) continue;
    const XEigenfunction psi(sigma, n);
    std::vector<double> col(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) col[i] = psi(-half + i * h);
    levels.push_back(n);
    values.push_back(std::move(col));
  }
  const int m = static_cast<int>(levels.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      double s = 0.0;
      for (int i = 0; i < points; ++i) {
        const double w = (i == 0 || i == points - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        s += w * values[a][i] * values[b][i];
      }
      s *= h / 3.0;
      const double dev = std::abs(s - (a == b ? 1.0 : 0.0));
      r.worst_residual = std::max(r.worst_residual, dev);
      r.cases.push_back({{"n", levels[a]}, {"m", levels[b]}, {"gram", s}});
    }
  }
  r.finalize();
  return r;
}

double schrodinger_residual(const PropagatorModel& model, const PotentialModel& v, double x,
                            double y, double t, double h) {
  auto k = [&](double xx, double tt) { return k_sigma(model, xx, y, tt); };
  const cdouble k0 = k(x, t);
  const cdouble dt = (k(x, t + h) - k(x, t - h)) / (2.0 * h);
  const cdouble dxx =
      (-k(x + 2 * h, t) + 16.0 * k(x + h, t) - 30.0 * k0 + 16.0 * k(x - h, t) - k(x - 2 * h, t)) /
      (12.0 * h * h);
  return std::abs(kI * dt - (-dxx + v.value(x) * k0));
}

}  // namespace xhermite

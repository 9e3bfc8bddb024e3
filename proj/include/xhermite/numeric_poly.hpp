#pragma once

#include <complex>
#include <vector>

#include "xhermite/scaled_poly.hpp"

namespace xhermite {

/// Dense double-precision snapshot of a ScaledPoly for repeated evaluation.
/// The (2*pi)^(-e/2) factor is folded into the coefficients.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const ScaledPoly& p);

  std::complex<double> operator()(std::complex<double> x,
                                  std::complex<double> y = 0.0) const;
  double operator()(double x, double y = 0.0) const;

  int arity() const { return arity_; }

 private:
  template <typename T>
  T eval(T x, T y) const;

  std::vector<std::vector<double>> rows_;  // rows_[dx][dy]
  int arity_ = 1;
};

}  // namespace xhermite

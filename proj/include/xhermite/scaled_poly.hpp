#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <map>
#include <optional>
#include <string>

namespace xhermite {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

enum class Var { x, y };

struct Exponent {
  int dx = 0;
  int dy = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Exact polynomial in one or two variables over the rationals, times a
/// global factor (2*pi)^(-scale_exp/2).
///
/// Zero coefficients are never stored. The zero polynomial always carries
/// scale_exp 0 and acts as the additive identity for any scale. Addition of
/// two nonzero polynomials requires identical scale_exp, since reconciling
/// different exponents would need a power of pi.
class ScaledPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  ScaledPoly() = default;
  ScaledPoly(TermMap terms, int scale_exp, int arity);

  static ScaledPoly constant(const Rational& c, int scale_exp = 0, int arity = 1);
  static ScaledPoly monomial(const Rational& c, int dx, int dy, int scale_exp = 0);
  static ScaledPoly x() { return monomial(1, 1, 0); }
  static ScaledPoly y() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  int scale_exp() const { return scale_exp_; }
  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of x^dx y^dy (zero when absent).
  Rational coeff(int dx, int dy = 0) const;
  int degree(Var v) const;
  int total_degree() const;

  /// Same coefficients, different (2*pi) tag. Used where a rational power of
  /// 2*pi is known to be absorbed, e.g. division by h_0(x)h_0(y).
  ScaledPoly with_scale(int scale_exp) const;
  /// Same polynomial viewed as bivariate (arity 2).
  ScaledPoly as_bivariate() const;
  /// Univariate p(x) rewritten as p(y); result has arity 2.
  ScaledPoly in_y() const;

  /// p(sx * x, sy * y) for signs sx, sy in {+1, -1}.
  ScaledPoly reflect(int sx, int sy) const;
  /// p(y, x).
  ScaledPoly swap_xy() const;
  /// p(x, x) as a univariate polynomial.
  ScaledPoly diagonal() const;

  ScaledPoly operator-() const;
  ScaledPoly& operator+=(const ScaledPoly& rhs);
  ScaledPoly& operator-=(const ScaledPoly& rhs);
  ScaledPoly& operator*=(const Rational& c);

  friend ScaledPoly operator+(ScaledPoly a, const ScaledPoly& b) { return a += b; }
  friend ScaledPoly operator-(ScaledPoly a, const ScaledPoly& b) { return a -= b; }
  friend ScaledPoly operator*(ScaledPoly a, const Rational& c) { return a *= c; }
  friend ScaledPoly operator*(const Rational& c, ScaledPoly a) { return a *= c; }
  friend ScaledPoly operator*(const ScaledPoly& a, const ScaledPoly& b);

  friend bool operator==(const ScaledPoly& a, const ScaledPoly& b);

  std::string to_string() const;

 private:
  void normalize();

  TermMap terms_;
  int scale_exp_ = 0;
  int arity_ = 1;
};

ScaledPoly poly_add(const ScaledPoly& a, const ScaledPoly& b);
ScaledPoly poly_mul(const ScaledPoly& a, const ScaledPoly& b);
ScaledPoly poly_diff(const ScaledPoly& a, Var var, int order = 1);

/// Exact quotient a / b over Q[x, y]; throws NotDivisible when b does not
/// divide a. scale_exp of the result is a.scale_exp - b.scale_exp.
ScaledPoly exact_divide(const ScaledPoly& a, const ScaledPoly& b);

/// Horner evaluation in double precision including (2*pi)^(-e/2).
std::complex<double> poly_eval_complex(const ScaledPoly& a, std::complex<double> x,
                                       std::optional<std::complex<double>> y = std::nullopt);

/// Largest |coefficient| as a double; 0 for the zero polynomial.
double max_abs_coeff(const ScaledPoly& a);

/// (2*pi)^(-e/2) as a double.
double scale_factor(int scale_exp);

}  // namespace xhermite

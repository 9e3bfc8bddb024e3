#pragma once

#include <array>
#include <map>
#include <span>
#include <string>

#include "xhermite/scaled_poly.hpp"

namespace xhermite {

/// Polynomial in x whose coefficients are rational polynomials in two formal
/// scale indeterminates alpha and beta. Keys are {deg_x, deg_alpha, deg_beta}.
class AlphaPoly {
 public:
  using Key = std::array<int, 3>;
  using TermMap = std::map<Key, Rational>;

  AlphaPoly() = default;
  explicit AlphaPoly(TermMap terms);

  static AlphaPoly term(const Rational& c, int dx, int da = 0, int db = 0);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;

  /// Coefficient of x^k as a polynomial in (alpha, beta) only.
  AlphaPoly coeff_x(int k) const;

  AlphaPoly derivative_x() const;
  /// Substitutes numeric values for alpha and beta, leaving a polynomial in x.
  ScaledPoly at(const Rational& alpha, const Rational& beta) const;

  AlphaPoly& operator+=(const AlphaPoly& rhs);
  AlphaPoly& operator-=(const AlphaPoly& rhs);
  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  friend AlphaPoly operator*(const Rational& c, const AlphaPoly& a);
  friend bool operator==(const AlphaPoly&, const AlphaPoly&) = default;

  std::string to_string() const;

 private:
  void normalize();
  TermMap terms_;
};

/// Which formal scale the rescaled family uses.
enum class HermiteScale { alpha, beta, alpha_plus_beta };

/// He_n^[s](x) = s^(n/2) He_n(x / sqrt(s)): coefficient of x^k is
/// h_{n,k} s^((n-k)/2), which vanishes for odd n-k.
AlphaPoly rescaled_hermite(int n, HermiteScale scale);

/// (A o B)(x) = sum_k [x^k]A * B_k(x). basis must hold B_0 ... B_{deg A}.
AlphaPoly umbral_compose(const AlphaPoly& a, std::span<const AlphaPoly> basis);

}  // namespace xhermite

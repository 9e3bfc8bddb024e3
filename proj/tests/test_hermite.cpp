#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "xhermite/alpha_poly.hpp"
#include "xhermite/hermite.hpp"

using namespace xhermite;

namespace {

const ScaledPoly X = ScaledPoly::x();
const ScaledPoly Y = ScaledPoly::y();
ScaledPoly c(long v, int e = 0) { return ScaledPoly::constant(v, e); }

}  // namespace

TEST_CASE("Hermite polynomials") {
  CHECK(hermite(0) == c(1));
  CHECK(hermite(2) == X * X - c(1));
  CHECK(hermite(3) == X * X * X - c(3) * X);
  for (int n = 0; n <= 20; ++n) {
    CHECK(hermite(n).degree(Var::x) == n);
    CHECK(hermite(n).coeff(n) == 1);
    CHECK(hermite(n).reflect(-1, 1) == hermite(n) * Rational(n % 2 == 0 ? 1 : -1));
    for (int k = n - 1; k >= 0; k -= 2) CHECK(hermite(n).coeff(k) == 0);
  }
}

TEST_CASE("normalized pairs") {
  CHECK(normalized_hermite_pair(0) == ScaledPoly::constant(1, 1, 2));
  CHECK(normalized_hermite_pair(1) == ScaledPoly::monomial(1, 1, 1, 1));
  const ScaledPoly h2 = ((X * X - c(1)) * (Y * Y - c(1).as_bivariate())) * Rational(1, 2);
  CHECK(normalized_hermite_pair(2) == h2.with_scale(1));
  CHECK(factorial(5) == 120);
}

TEST_CASE("concurrent cache access returns equal values") {
  HermiteCache cache;
  std::vector<ScaledPoly> a(8), b(8);
  std::thread t1([&] {
    for (int i = 0; i < 8; ++i) a[i] = cache.get(30 + i);
  });
  std::thread t2([&] {
    for (int i = 7; i >= 0; --i) b[i] = cache.get(30 + i);
  });
  t1.join();
  t2.join();
  for (int i = 0; i < 8; ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i] == hermite(30 + i));
  }
}

TEST_CASE("normalized Hermite function values") {
  const auto h = normalized_hermite_values(0.7, 10);
  for (int n = 0; n <= 10; ++n) {
    const double direct = poly_eval_complex(hermite(n), 0.7).real() /
                          std::sqrt(std::tgamma(n + 1.0) * std::sqrt(2 * std::numbers::pi));
    CHECK(h[n] == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("rescaled Hermite polynomials") {
  CHECK(rescaled_hermite(0, HermiteScale::alpha) == AlphaPoly::term(1, 0));
  CHECK(rescaled_hermite(2, HermiteScale::alpha) ==
        AlphaPoly::term(1, 2) - AlphaPoly::term(1, 0, 1));
  CHECK(rescaled_hermite(3, HermiteScale::alpha) ==
        AlphaPoly::term(1, 3) - AlphaPoly::term(3, 1, 1));
  for (int n = 0; n <= 10; ++n) CHECK(rescaled_hermite(n, HermiteScale::alpha).at(1, 0) == hermite(n));
}

TEST_CASE("Appell property") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(rescaled_hermite(n, HermiteScale::alpha).derivative_x() ==
          Rational(n) * rescaled_hermite(n - 1, HermiteScale::alpha));
  }
}

TEST_CASE("umbral composition") {
  std::vector<AlphaPoly> beta;
  for (int k = 0; k <= 12; ++k) beta.push_back(rescaled_hermite(k, HermiteScale::beta));
  for (int n = 0; n <= 12; ++n) {
    CHECK(umbral_compose(rescaled_hermite(n, HermiteScale::alpha), std::span(beta).first(n + 1)) ==
          rescaled_hermite(n, HermiteScale::alpha_plus_beta));
  }
  // He^[0]_n = x^n is the identity basis
  const AlphaPoly composed = umbral_compose(rescaled_hermite(4, HermiteScale::alpha), beta);
  CHECK(composed.at(0, 1) == hermite(4));
  // He_2^[1] o He^[1] = He_2^[2] = x^2 - 2
  CHECK(composed.at(1, 1) == rescaled_hermite(4, HermiteScale::alpha).at(2, 0));
  const AlphaPoly c2 = umbral_compose(rescaled_hermite(2, HermiteScale::alpha), beta);
  CHECK(c2.at(1, 1) == X * X - c(2));
}

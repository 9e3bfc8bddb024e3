#include <doctest.h>

#include <cmath>

#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"
#include "xhermite/numeric_poly.hpp"
#include "xhermite/poly_matrix.hpp"
#include "xhermite/wronskian.hpp"

using namespace xhermite;

namespace {

const ScaledPoly X = ScaledPoly::x();
const ScaledPoly Y = ScaledPoly::y();
ScaledPoly c(long v, int e = 0) { return ScaledPoly::constant(v, e); }

const std::vector<LevelSequence> kKreinAdler = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 2, 3, 4},
                                                {2, 3, 5, 6}, {7, 8}, {1, 2, 6, 7}};
const std::vector<LevelSequence> kOther = {{1}, {2}, {3}, {1, 3}, {2, 4}, {1, 2, 3}, {1, 4}};

}  // namespace

TEST_CASE("level sequence validation") {
  CHECK_THROWS_WITH_AS(LevelSequence::parse("2,1"), doctest::Contains("sequence must be strictly increasing"),
                       InvalidSequence);
  CHECK_THROWS_AS(LevelSequence::parse("1,1"), InvalidSequence);
  CHECK_THROWS_AS(LevelSequence({-1, 2}), InvalidSequence);
  CHECK_THROWS_AS(LevelSequence::parse("1,a"), InvalidSequence);
  CHECK(LevelSequence::parse("1,2") == LevelSequence{1, 2});
  CHECK(LevelSequence::parse("").empty());
  CHECK(LevelSequence{1, 2}.is_krein_adler());
  CHECK(LevelSequence{2, 3, 5, 6}.is_krein_adler());
  CHECK_FALSE(LevelSequence{1}.is_krein_adler());
  CHECK_FALSE(LevelSequence{1, 3}.is_krein_adler());
  CHECK_FALSE(LevelSequence{1, 2, 3}.is_krein_adler());
  CHECK(LevelSequence().is_krein_adler());
  CHECK(LevelSequence{1, 2, 3, 4}.pair_count() == 2);
  CHECK(LevelSequence{2, 3}.to_string() == "{2,3}");
}

TEST_CASE("Wronskians of Hermite columns") {
  CHECK(wronskian_of_levels({1, 2}) == X * X + c(1));
  CHECK(wronskian_of_levels({2, 3}) == X * X * X * X + c(3));
  CHECK(wronskian_of_levels({}) == c(1));
  std::vector<ScaledPoly> cols = {hermite(1), hermite(2), hermite(0)};
  CHECK(wronskian(cols) == c(2));
}

TEST_CASE("Wronskian degree, parity and nodelessness") {
  for (const auto& s : kKreinAdler) {
    CAPTURE(s.to_string());
    const ScaledPoly w = wronskian_of_levels(s);
    int expected = 0;
    for (int j = 0; j < s.size(); ++j) expected += s.levels()[j] - j;
    CHECK(w.degree(Var::x) == expected);
    CHECK(s.wronskian_degree() == expected);
    for (const auto& [e, v] : w.terms()) CHECK(e.dx % 2 == 0);
    const NumericPoly wn(w);
    const double sign = wn(0.0) > 0 ? 1.0 : -1.0;
    for (int i = 0; i <= 4000; ++i) CHECK(sign * wn(-20.0 + 0.01 * i) > 0.0);
  }
  for (const auto& s : kOther) CHECK(wronskian_of_levels(s).degree(Var::x) == s.wronskian_degree());
}

TEST_CASE("large sequences take the Bareiss path") {
  const LevelSequence s{1, 2, 3, 4, 5, 6};
  std::vector<ScaledPoly> cols;
  for (int l : s.levels()) cols.push_back(hermite(l));
  PolyMatrix m(6, 6);
  for (int r = 0; r < 6; ++r) {
    for (int j = 0; j < 6; ++j) m.set(r, j, poly_diff(cols[j], Var::x, r));
  }
  CHECK(det_bareiss(m) == wronskian_of_levels(s));
  CHECK(wronskian_of_levels(s).degree(Var::x) == s.wronskian_degree());
}

TEST_CASE("normalization") {
  CHECK(normalization_sq({1, 2}, 0) == Rational(1, 2));
  CHECK(normalization_sq({1, 2}, 3) == Rational(1, 2));
  CHECK(normalization_sq({1, 2}, 1) == 0);
  CHECK(normalization_sq({1}, 3) == Rational(-1, 2));
}

TEST_CASE("x-Hermite pairs") {
  CHECK(xhermite_pair({1, 2}, 1).is_zero());
  CHECK(xhermite_pair({1, 2}, 2).is_zero());
  for (int n = 0; n < 6; ++n) {
    const ScaledPoly p = xhermite_pair({2, 3}, n);
    CHECK(p == p.swap_xy());
    if (!p.is_zero()) CHECK(p.scale_exp() == 3);
  }
  // sigma = {1}: h_m h_m = (1/(sqrt(2 pi)(1-m))) (x He_{m-1} m - He_m)(y ...) / m!
  for (int m = 0; m <= 8; ++m) {
    if (m == 1) continue;
    const ScaledPoly fx = X * hermite(m - 1 < 0 ? 0 : m - 1) * Rational(m) - hermite(m);
    const ScaledPoly f = fx.as_bivariate() * fx.in_y();
    Rational inv(1, 1 - m);
    inv.canonicalize();
    const Rational coeff = inv / Rational(factorial(m));
    CHECK(xhermite_pair({1}, m) == (f * coeff).with_scale(2));
  }
  CHECK(xhermite_pair({}, 4) == normalized_hermite_pair(4));
}

TEST_CASE("L-hat operator") {
  CHECK(apply_Lhat({1, 2}, hermite(1)).numerator.is_zero());
  CHECK(apply_Lhat({1, 2}, hermite(2)).numerator.is_zero());
  const auto id = apply_Lhat({}, X * X + c(3));
  CHECK(id.numerator == X * X + c(3));
  CHECK(id.denominator == c(1));
  const auto l0 = apply_Lhat({1, 2}, hermite(0));
  CHECK(l0.numerator == c(2));
  CHECK(l0.denominator == X * X + c(1));
}

TEST_CASE("Wronskian set") {
  const WronskianSet w = wronskian_set({2, 3});
  CHECK(w.w_hat == X * X * X * X + c(3));
  REQUIRE(w.w_hat_minus.size() == 2);
  CHECK(w.w_hat_minus[0] == hermite(3));
  CHECK(w.w_hat_minus[1] == hermite(2));
}

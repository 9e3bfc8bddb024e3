#include <doctest.h>

#include <fstream>

#include "xhermite/connection.hpp"
#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"
#include "xhermite/render.hpp"

using namespace xhermite;

namespace {

const ScaledPoly X = ScaledPoly::x().as_bivariate();
const ScaledPoly Y = ScaledPoly::y();
ScaledPoly c(long v) { return ScaledPoly::constant(v, 0, 2); }

// Printed tables with the (2 pi)^(-e/2) prefactor split off.
std::vector<ScaledPoly> printed_1_2() {
  return {c(1).with_scale(2), (-(X * Y)).with_scale(2),
          ((X * X * Y * Y + X * X + Y * Y - c(1)) * Rational(1, 2)).with_scale(2),
          (X * Y).with_scale(2)};
}

std::vector<ScaledPoly> printed_2_3() {
  const ScaledPoly xy = X * Y;
  return {((X * X + c(1)) * (Y * Y + c(1)) * Rational(1, 2)).with_scale(2),
          (xy * (c(3) - xy * xy) * Rational(1, 3)).with_scale(2),
          ((X * X * X * X * Y * Y * Y * Y + c(3) * X * X * X * X + c(3) * Y * Y * Y * Y -
            c(12) * X * X * Y * Y - c(3)) *
           Rational(1, 12))
              .with_scale(2),
          (xy * (xy * xy - c(3)) * Rational(1, 3)).with_scale(2),
          ((X * X - c(1)) * (Y * Y - c(1)) * Rational(1, 2)).with_scale(2)};
}

nlohmann::json load(const std::string& name) {
  std::ifstream f(std::string(XHERMITE_GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  return nlohmann::json::parse(f);
}

}  // namespace

TEST_CASE("printed connection polynomials") {
  CHECK(build_qtable({1, 2}).polys == printed_1_2());
  CHECK(build_qtable({2, 3}).polys == printed_2_3());
  const QTable q1 = build_qtable({1});
  CHECK(q1.polys == std::vector<ScaledPoly>{c(1).with_scale(1), (-(X * Y)).with_scale(1),
                                            c(-1).with_scale(1)});
  CHECK(q1.scale_exp == 1);
  CHECK(build_qtable({}).polys == std::vector<ScaledPoly>{c(1)});
}

TEST_CASE("golden tables") {
  for (const auto& [file, sigma] : std::vector<std::pair<std::string, LevelSequence>>{
           {"qtable_1_2.json", {1, 2}}, {"qtable_2_3.json", {2, 3}}, {"qtable_1.json", {1}}}) {
    CAPTURE(file);
    const QTable golden = qtable_from_json(load(file));
    CHECK(golden == build_qtable(sigma));
    CHECK(to_json(build_qtable(sigma)) == load(file));
  }
}

TEST_CASE("QTable JSON round trip") {
  for (const LevelSequence& s : {LevelSequence{1, 2}, LevelSequence{2, 3, 5, 6}, LevelSequence{1}}) {
    const QTable q = build_qtable(s);
    CHECK(qtable_from_json(nlohmann::json::parse(to_json(q).dump())) == q);
  }
  nlohmann::json bad = to_json(build_qtable({1, 2}));
  bad["q"].erase(0);
  CHECK_THROWS_AS(qtable_from_json(bad), ParseError);
}

TEST_CASE("rendered tables") {
  const QTable q = build_qtable({1, 2});
  CHECK(render(q.polys[0]) == "1/(2π)");
  CHECK(render(q.polys[1]) == "-x*y/(2π)");
  CHECK(render(q.polys[2]) == "(x^2*y^2 + x^2 + y^2 - 1)/(4π)");
  CHECK(render(q.polys[3]) == "x*y/(2π)");
  const QTable q1 = build_qtable({1});
  CHECK(render(q1.polys[0]) == "1/√(2π)");
  CHECK(render(q1.polys[2]) == "-1/√(2π)");
  CHECK(render(build_qtable({2, 3}).polys[2]) ==
        "(x^4*y^4 + 3*x^4 - 12*x^2*y^2 + 3*y^4 - 3)/(24π)");
}

TEST_CASE("sum rule") {
  CHECK(build_qtable({1, 2}).sum() == ((X * X + c(1)) * (Y * Y + c(1)) * Rational(1, 2)).with_scale(2));
  const ScaledPoly x4 = X * X * X * X, y4 = Y * Y * Y * Y;
  CHECK(build_qtable({2, 3}).sum() == ((x4 + c(3)) * (y4 + c(3)) * Rational(1, 12)).with_scale(2));
  for (const LevelSequence& s : {LevelSequence{}, LevelSequence{1, 2}, LevelSequence{3, 4},
                                 LevelSequence{1, 2, 3, 4}, LevelSequence{1}, LevelSequence{1, 3},
                                 LevelSequence{1, 2, 5}}) {
    CAPTURE(s.to_string());
    CHECK(verify_sum_rule(build_qtable(s)).passed());
  }
}

TEST_CASE("connection lemma") {
  const QTable q = build_qtable({1, 2});
  CHECK(connection_lhs(q, 1).is_zero());
  CHECK(connection_lhs(q, 2).is_zero());
  CHECK(connection_lhs(q, 0) == xhermite_pair({1, 2}, 0));
  const auto r = verify_connection_lemma(build_qtable({2, 3}), 8);
  CHECK(r.passed());
  CHECK(r.cases.size() == 9);
  CHECK_THROWS_AS(verify_connection_lemma(q, 2), TruncationTooSmall);
  // three-term identity of the sigma = {1} table
  const QTable q1 = build_qtable({1});
  for (int m = 0; m <= 20; ++m) {
    ScaledPoly three = normalized_hermite_pair(m) * q1.polys[0];
    if (m >= 1) three += normalized_hermite_pair(m - 1) * q1.polys[1];
    if (m >= 2) three += normalized_hermite_pair(m - 2) * q1.polys[2];
    CHECK(three == xhermite_pair({1}, m));
  }
}

TEST_CASE("serial and parallel lemma checks agree") {
  const QTable q = build_qtable({2, 3, 5, 6});
  const auto a = verify_connection_lemma(q, 12, Execution::serial);
  const auto b = verify_connection_lemma(q, 12, Execution::parallel);
  CHECK(to_json(a) == to_json(b));
  CHECK(a.passed());
}

TEST_CASE("symmetry and parity") {
  CHECK(xhermite_ground_degree({1, 2}) == 0);
  CHECK(xhermite_ground_degree({2, 3}) == 2);
  const QTable q = build_qtable({1, 2});
  CHECK(q.polys[1].reflect(-1, 1) == -q.polys[1]);
  CHECK(build_qtable({2, 3}).polys[0].reflect(-1, 1) == build_qtable({2, 3}).polys[0]);
  for (const LevelSequence& s : {LevelSequence{1, 2}, LevelSequence{2, 3}, LevelSequence{4, 5},
                                 LevelSequence{1, 2, 3, 4}, LevelSequence{1}, LevelSequence{1, 3},
                                 LevelSequence{2, 4}}) {
    CAPTURE(s.to_string());
    CHECK(verify_parity(build_qtable(s)).passed());
  }
}

TEST_CASE("recursion length and degree bound") {
  for (const LevelSequence& s : {LevelSequence{1, 2}, LevelSequence{3, 4}, LevelSequence{2, 3, 5, 6}}) {
    const QTable q = build_qtable(s);
    CHECK(q.size() == s.last() + 2);
    for (const auto& p : q.polys) {
      CHECK(p.scale_exp() == s.size());
      CHECK(p.degree(Var::x) <= 2 * s.wronskian_degree());
    }
  }
}

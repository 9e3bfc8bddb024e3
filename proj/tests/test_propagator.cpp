#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"
#include "xhermite/kernels.hpp"
#include "xhermite/propagator.hpp"
#include "xhermite/render.hpp"
#include "xhermite/spectral.hpp"

using namespace xhermite;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cdouble kI{0.0, 1.0};

double rel(cdouble a, cdouble b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("oscillator propagator") {
  // reference: sum_{n <= 80} psi_n(0.3) psi_n(-0.5) e^{-(n + 1/2)}, 40 digits
  const cdouble t{0.0, -1.0};
  CHECK(std::abs(k_osc(0.3, -0.5, t) - 0.21834941829343317933) < 1e-15);
  CHECK(std::abs(k_osc(0.3, -0.5, t) - k_osc_spectral(0.3, -0.5, t, 80)) < 1e-10);
  CHECK(k_osc(0.4, -1.1, 0.7) == k_osc(-1.1, 0.4, 0.7));
  CHECK_THROWS_AS(k_osc(0.1, 0.2, 0.0), SingularTime);
  CHECK_THROWS_AS(k_osc(0.1, 0.2, kPi), SingularTime);
}

TEST_CASE("propagator against independent closed-form evaluations") {
  // 40-digit evaluations of the printed closed forms
  const PropagatorModel m12({1, 2});
  CHECK(rel(k_sigma(m12, 0.5, -0.3, 1.0), {0.54251735408367685896, -0.30122939011168827309}) < 1e-14);
  const PropagatorModel m23({2, 3});
  CHECK(rel(k_sigma(m23, 0.5, -0.3, kPi / 2), {0.42717139596078528431, -0.22314010872165060997}) <
        1e-14);
  CHECK(rel(k12_closed_form(0.5, -0.3, 1.0), k_sigma(m12, 0.5, -0.3, 1.0)) < 1e-14);
}

TEST_CASE("propagator symmetry, periodicity and short-time limit") {
  for (const LevelSequence& s : {LevelSequence{1, 2}, LevelSequence{2, 3}, LevelSequence{1, 2, 3, 4}}) {
    const PropagatorModel m(s);
    const cdouble x{0.4, 0.1}, y{-0.9, 0.2}, t{1.1, -0.3};
    CHECK(std::abs(k_sigma(m, x, y, t) - k_sigma(m, y, x, t)) <= 1e-14 * std::abs(k_sigma(m, x, y, t)));
    CHECK(std::abs(std::abs(k_sigma(m, x, y, t + 2 * kPi)) - std::abs(k_sigma(m, x, y, t))) <
          1e-12 * std::abs(k_sigma(m, x, y, t)));
    double prev = HUGE_VAL;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const cdouble te{0.0, -eps};
      const double dev = std::abs(k_sigma(m, 0.3, 0.7, te) / k_osc(0.3, 0.7, te) - 1.0);
      CHECK(dev < prev);
      prev = dev;
    }
    CHECK(prev < 1e-3);
  }
}

TEST_CASE("vanishing Wronskian at the evaluation point") {
  // Wr[He_1] = x vanishes at the origin for the non-Krein-Adler sequence {1}
  const PropagatorModel m({1});
  CHECK_THROWS_AS(k_sigma(m, 0.0, 0.5, 1.0), WronskianZero);
}

TEST_CASE("potentials") {
  const PotentialModel v12 = potential({1, 2});
  CHECK(v12.shift == 2);
  for (double x : {-3.0, -0.7, 0.0, 0.4, 2.5}) {
    const double printed = x * x / 4 + 2 * (1 + 2 * (x * x - 1) / ((x * x + 1) * (x * x + 1)));
    CHECK(v12.value(x) == doctest::Approx(printed).epsilon(1e-14));
    const double x4 = x * x * x * x;
    const double printed23 = x * x / 4 + 2 * (1 + 4 * x * x * (x4 - 9) / ((x4 + 3) * (x4 + 3)));
    CHECK(potential({2, 3}).value(x) == doctest::Approx(printed23).epsilon(1e-14));
  }
  CHECK(render_potential(v12) == "x^2/4 + 2 + 4*(x^2 - 1)/(x^2 + 1)^2");
  CHECK(render_potential(potential({})) == "x^2/4");
  CHECK(potential({}).value(1.5) == doctest::Approx(0.5625));
  CHECK_THROWS_AS(potential({1}), NotKreinAdler);
  // Delta V -> 2M at infinity: the rational part has numerator degree equal to
  // the denominator degree with ratio 2M
  CHECK(v12.numerator.degree(Var::x) == v12.denominator.degree(Var::x));
}

TEST_CASE("potential minima") {
  const auto m23 = potential_minima(potential({2, 3}), -5, 5, 10001);
  REQUIRE(m23.size() == 2);
  CHECK(m23[0] == doctest::Approx(-0.9210638566443318).epsilon(1e-3));
  CHECK(m23[1] == doctest::Approx(0.9210638566443318).epsilon(1e-3));
  CHECK(potential_minima(potential({1, 2}), -5, 5, 10001).size() == 1);
}

TEST_CASE("Delta V identity") {
  for (const LevelSequence& s : {LevelSequence{}, LevelSequence{1, 2}, LevelSequence{2, 3},
                                 LevelSequence{3, 4}, LevelSequence{1, 2, 3, 4}}) {
    CAPTURE(s.to_string());
    CHECK(verify_deltaV_identity(s).passed());
  }
  CHECK_THROWS_AS(verify_deltaV_identity({1}), NotKreinAdler);
}

TEST_CASE("Green function") {
  const PropagatorModel m({1, 2});
  const GreenValue g = green_function(m, 0.4, -0.3, {0.1, 0.3}, 200);
  // 40-digit spectral sum over n <= 200
  const cdouble ref{0.86162065610119220857, 0.70695965285861945241};
  CHECK(std::abs(g.direct - ref) < 1e-12);
  CHECK(std::abs(g.relation - g.direct) < 1e-8);
  CHECK_THROWS_AS(green_function(m, 0.4, -0.3, {0.5, 0.0}, 200), NearPole);
  CHECK_THROWS_AS(green_function(m, 0.4, -0.3, {30.2, 0.1}, 100), TruncationTooSmall);
  // residue at the ground level: psi_0 psi_0 = 0.59280542473537225854
  std::vector<double> d;
  for (double r : {1e-2, 1e-3}) {
    const cdouble e = 0.5 + std::polar(r, 0.7);
    const GreenValue gv = green_function(m, 0.4, -0.3, e, 200);
    d.push_back(std::abs((0.5 - e) * gv.relation - 0.59280542473537225854));
  }
  CHECK(d[1] < d[0]);
  CHECK(d[1] < 1e-3);
  // no pole at the deleted levels
  for (double level : {1.5, 2.5}) {
    const GreenValue gv = green_function(m, 0.4, -0.3, level + std::polar(1e-4, 0.3), 200);
    CHECK(std::abs(gv.relation) < 10.0);
  }
}

TEST_CASE("eigenfunctions") {
  EigenCheckConfig cfg;
  const auto r = verify_eigenfunctions({1, 2}, 6, cfg);
  CHECK(r.passed());
  CHECK(r.cases[0]["residual"].get<double>() < 1e-6);
  CHECK(XEigenfunction({1, 2}, 1).identically_zero());
  CHECK(XEigenfunction({1, 2}, 2).identically_zero());
  CHECK(verify_orthonormality({1, 2}, 6, 1e-6).passed());
  CHECK(verify_orthonormality({}, 8, 1e-8).passed());
  cfg.exec = Execution::serial;
  CHECK(to_json(verify_eigenfunctions({2, 3}, 4, cfg)) ==
        to_json(verify_eigenfunctions({2, 3}, 4, EigenCheckConfig{})));
}

TEST_CASE("spectral expansion of the extended propagator") {
  const LevelSequence s{1, 2};
  const PropagatorModel m(s);
  const cdouble t{0.0, -1.0};
  double prev = HUGE_VAL;
  for (int n : {5, 10, 20}) {
    const double err = std::abs(k_sigma(m, 0.3, -0.5, t) - k_sigma_spectral(s, 0.3, -0.5, t, n));
    CHECK(err < prev);
    prev = err;
  }
  CHECK(std::abs(k_sigma(m, 0.3, -0.5, t) - k_sigma_spectral(s, 0.3, -0.5, t, 80)) < 1e-10);
  const auto pairs = xeigen_pair_values(s, 5, 0.4, -0.3);
  CHECK(pairs[1] == 0.0);
  CHECK(pairs[0] == doctest::Approx(0.59280542473537225854).epsilon(1e-13));
}

TEST_CASE("grid kernels") {
  const PropagatorModel m({2, 3});
  std::vector<GridPoint> pts;
  for (int i = 0; i < 50; ++i) pts.push_back({-1.0 + 0.04 * i, 0.3, {0.2 + 0.05 * i, 0.0}});
  pts.push_back({0.1, 0.2, {0.0, 0.0}});
  const auto a = propagator_grid(m, pts, Execution::serial);
  const auto b = propagator_grid(m, pts, Execution::parallel);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i] == k_sigma(m, pts[i].x, pts[i].y, pts[i].t));
  }
  CHECK(std::isnan(a.back().real()));

  const PotentialModel v = potential({2, 3});
  std::vector<double> xs{-2.0, 0.0, 1.3};
  const auto vs = potential_grid(v, xs, Execution::parallel);
  for (size_t i = 0; i < xs.size(); ++i) CHECK(vs[i] == v.value(xs[i]));

  const GridSpec g = GridSpec::parse("-1:1:5");
  CHECK(g.count == 5);
  CHECK(g.at(4) == 1.0);
  CHECK_THROWS_AS(GridSpec::parse("0:1"), ParseError);
  CHECK_THROWS_AS(GridSpec::parse("0:1:0"), ParseError);
}

TEST_CASE("Schrodinger residual decays at second order") {
  const PropagatorModel m({1, 2});
  const PotentialModel v = potential({1, 2});
  const double r1 = schrodinger_residual(m, v, 0.3, -0.4, 1.3, 1e-2);
  const double r2 = schrodinger_residual(m, v, 0.3, -0.4, 1.3, 5e-3);
  CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.05));
}

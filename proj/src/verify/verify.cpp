#include "xhermite/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "xhermite/alpha_poly.hpp"
#include "xhermite/connection.hpp"
#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"
#include "xhermite/numeric_poly.hpp"
#include "xhermite/spectral.hpp"

namespace xhermite {

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::complex<double> Sampler::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform(0.0, 1.0));
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(r, phi);
}

namespace {

const std::map<std::string, Suite>& suite_names() {
  static const std::map<std::string, Suite> names = {
      {"sum", Suite::sum_rule},       {"lemma", Suite::lemma},
      {"parity", Suite::parity},      {"deltav", Suite::deltav},
      {"closed", Suite::closed_form}, {"schrodinger", Suite::schrodinger},
      {"mehler", Suite::mehler},      {"xmehler", Suite::xmehler},
      {"green", Suite::green},        {"eigen", Suite::eigen},
      {"gram", Suite::orthonormality}, {"umbral", Suite::umbral},
      {"wells", Suite::wells},        {"spectral", Suite::spectral},
  };
  return names;
}

// Distinct streams per randomized check so that selecting suites does not
// move the points of the others.
std::uint64_t stream(std::uint64_t seed, std::uint64_t tag) {
  return seed ^ (0x9E3779B97F4A7C15ull * (tag + 1));
}

VerificationReport make(std::string name, const LevelSequence& sigma, double tol) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.sigma = sigma;
  r.tolerance = tol;
  return r;
}

nlohmann::json cjson(std::complex<double> z) { return {z.real(), z.imag()}; }

std::complex<double> mehler_kernel(std::complex<double> lambda, double x, double y) {
  const std::complex<double> one_minus = 1.0 - lambda * lambda;
  return std::exp((-lambda * lambda * (x * x + y * y) + 2.0 * lambda * x * y) / (2.0 * one_minus)) /
         std::sqrt(one_minus);
}

void check_lambda(std::complex<double> lambda) {
  if (std::abs(lambda) > 0.9) {
    throw LambdaTooLarge("|lambda| must be at most 0.9");
  }
}

}  // namespace

std::set<Suite> parse_suites(const std::string& text) {
  std::set<Suite> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      for (const auto& [n, s] : suite_names()) out.insert(s);
    } else if (item == "potential") {
      out.insert({Suite::deltav, Suite::eigen, Suite::wells, Suite::schrodinger});
    } else if (item == "exact") {
      out.insert({Suite::sum_rule, Suite::lemma, Suite::parity, Suite::deltav, Suite::umbral});
    } else if (auto it = suite_names().find(item); it != suite_names().end()) {
      out.insert(it->second);
    } else {
      throw ParseError("unknown suite '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("no suite selected");
  return out;
}

std::string to_string(Suite s) {
  for (const auto& [n, v] : suite_names()) {
    if (v == s) return n;
  }
  return "?";
}

void validate(const VerifyConfig& cfg) {
  for (auto l : cfg.mehler_lambdas) check_lambda(l);
  for (auto l : cfg.xmehler_lambdas) check_lambda(l);
  if (cfg.fd_steps.size() < 2) throw ParseError("need at least two finite-difference steps");
}

std::vector<std::pair<double, double>> default_mehler_grid() {
  std::vector<std::pair<double, double>> g;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) g.emplace_back(-1.5 + 0.75 * i, -1.5 + 0.75 * j);
  }
  return g;
}

VerificationReport verify_mehler(std::complex<double> lambda,
                                 std::span<const std::pair<double, double>> grid, int n_trunc,
                                 double tolerance) {
  check_lambda(lambda);
  VerificationReport r = make("mehler", LevelSequence(), tolerance);
  std::vector<NumericPoly> he;
  std::vector<double> inv_fact;
  for (int n = 0; n <= n_trunc; ++n) {
    he.emplace_back(hermite(n));
    inv_fact.push_back(1.0 / std::tgamma(n + 1.0));
  }
  for (const auto& [x, y] : grid) {
    std::complex<double> lhs = 0.0;
    std::complex<double> lp = 1.0;
    for (int n = 0; n <= n_trunc; ++n, lp *= lambda) lhs += he[n](x) * he[n](y) * inv_fact[n] * lp;
    const std::complex<double> rhs = mehler_kernel(lambda, x, y);
    const double res = std::abs(lhs - rhs);
    r.worst_residual = std::max(r.worst_residual, res);
    r.cases.push_back({{"x", x}, {"y", y}, {"lambda", cjson(lambda)}, {"residual", res}});
  }
  r.finalize();
  return r;
}

VerificationReport verify_xmehler(const LevelSequence& sigma, std::complex<double> lambda,
                                  std::span<const std::pair<double, double>> grid, int n_trunc,
                                  double tolerance) {
  check_lambda(lambda);
  if (n_trunc < sigma.last() + 20) throw TruncationTooSmall("n_trunc < sigma[[-1]] + 20");
  VerificationReport r = make("xmehler", sigma, tolerance);
  std::vector<NumericPoly> pairs;
  for (int n = 0; n <= n_trunc; ++n) pairs.emplace_back(xhermite_pair(sigma, n));
  const PropagatorModel model(sigma);
  for (const auto& [x, y] : grid) {
    std::complex<double> lhs = 0.0;
    std::complex<double> lp = 1.0;
    for (int n = 0; n <= n_trunc; ++n, lp *= lambda) lhs += pairs[n](x, y) * lp;
    const std::complex<double> rhs = mehler_kernel(lambda, x, y) /
                                     std::sqrt(2.0 * std::numbers::pi) *
                                     model.q_series(x, y, lambda);
    const double res = std::abs(lhs - rhs);
    r.worst_residual = std::max(r.worst_residual, res);
    r.cases.push_back({{"x", x}, {"y", y}, {"lambda", cjson(lambda)}, {"residual", res}});
  }
  r.finalize();
  return r;
}

VerificationReport verify_closed_form(const PropagatorModel& model, int n_points,
                                      std::uint64_t seed, double tolerance) {
  const LevelSequence& sigma = model.sigma();
  VerificationReport r = make("closed_form", sigma, tolerance);
  cdouble (*closed)(cdouble, cdouble, cdouble) = nullptr;
  if (sigma == LevelSequence{1, 2}) closed = k12_closed_form;
  if (sigma == LevelSequence{2, 3}) closed = k23_closed_form;
  if (!closed) return VerificationReport::skipped("closed_form", sigma, "no closed form");
  Sampler s(seed);
  for (int i = 0; i < n_points; ++i) {
    const cdouble x = s.in_disk(2.0);
    const cdouble y = s.in_disk(2.0);
    const cdouble t{s.uniform(0.2, 2.9), s.uniform(-1.0, 1.0)};
    const cdouble ref = closed(x, y, t);
    const double res = std::abs(k_sigma(model, x, y, t) - ref) / std::abs(ref);
    r.worst_residual = std::max(r.worst_residual, res);
    r.cases.push_back({{"x", cjson(x)}, {"y", cjson(y)}, {"t", cjson(t)}, {"relative", res}});
  }
  r.finalize();
  return r;
}

SchrodingerReports verify_schrodinger(const PropagatorModel& model, int n_points,
                                      std::span<const double> steps, std::uint64_t seed,
                                      double tolerance, double order_tolerance) {
  const LevelSequence& sigma = model.sigma();
  SchrodingerReports out{make("schrodinger_residual", sigma, tolerance),
                         make("schrodinger_order", sigma, order_tolerance)};
  const PotentialModel v = potential(sigma);
  Sampler s(seed);
  for (int i = 0; i < n_points; ++i) {
    const double x = s.uniform(-1.5, 1.5);
    const double y = s.uniform(-1.5, 1.5);
    const double t = s.uniform(0.5, 2.5);
    std::vector<double> res;
    for (double h : steps) res.push_back(schrodinger_residual(model, v, x, y, t, h));
    double order_dev = 0.0;
    nlohmann::json orders = nlohmann::json::array();
    for (size_t k = 0; k + 1 < res.size(); ++k) {
      const double p = std::log(res[k] / res[k + 1]) / std::log(steps[k] / steps[k + 1]);
      orders.push_back(p);
      order_dev = std::max(order_dev, std::isfinite(p) ? std::abs(p - 2.0) : HUGE_VAL);
    }
    if (!(res.back() < res.front())) order_dev = HUGE_VAL;
    out.residual.worst_residual = std::max(out.residual.worst_residual, res.back());
    out.order.worst_residual = std::max(out.order.worst_residual, order_dev);
    out.residual.cases.push_back({{"x", x}, {"y", y}, {"t", t}, {"residuals", res}});
    out.order.cases.push_back({{"x", x}, {"y", y}, {"t", t}, {"orders", orders}});
  }
  out.residual.finalize();
  out.order.finalize();
  return out;
}

GreenReports verify_green(const PropagatorModel& model, double x, double y, int n_energies,
                          int n_trunc, std::uint64_t seed, double tolerance, double bound) {
  const LevelSequence& sigma = model.sigma();
  GreenReports out{make("green_relation", sigma, tolerance),
                   make("green_deleted_levels", sigma, bound)};
  Sampler s(seed);
  std::vector<double> magnitudes;
  for (int i = 0; i < n_energies; ++i) {
    const cdouble e{s.uniform(0.0, 6.0), s.uniform(0.05, 0.5)};
    const GreenValue g = green_function(model, x, y, e, n_trunc);
    const double res = std::abs(g.relation - g.direct);
    magnitudes.push_back(std::abs(g.relation));
    out.agreement.worst_residual = std::max(out.agreement.worst_residual, res);
    out.agreement.cases.push_back({{"energy", cjson(e)},
                                   {"relation", cjson(g.relation)},
                                   {"direct", cjson(g.direct)},
                                   {"residual", res}});
  }
  std::nth_element(magnitudes.begin(), magnitudes.begin() + magnitudes.size() / 2,
                   magnitudes.end());
  const double median = magnitudes[magnitudes.size() / 2];
  for (int level : sigma.levels()) {
    const double theta = s.uniform(0.0, 2.0 * std::numbers::pi);
    const cdouble e = cdouble(level + 0.5, 0.0) + std::polar(1e-3, theta);
    const GreenValue g = green_function(model, x, y, e, std::max(n_trunc, level + 8));
    const double ratio = std::abs(g.relation) / median;
    out.deleted_levels.worst_residual = std::max(out.deleted_levels.worst_residual, ratio);
    out.deleted_levels.cases.push_back(
        {{"energy", cjson(e)}, {"abs_g", std::abs(g.relation)}, {"median", median}, {"ratio", ratio}});
  }
  out.agreement.finalize();
  out.deleted_levels.finalize();
  return out;
}

VerificationReport verify_umbral(int n_max) {
  VerificationReport r = make("umbral", LevelSequence(), 0.0);
  std::vector<AlphaPoly> beta_basis;
  for (int k = 0; k <= n_max; ++k) beta_basis.push_back(rescaled_hermite(k, HermiteScale::beta));
  AlphaPoly prev;
  for (int n = 0; n <= n_max; ++n) {
    const AlphaPoly a = rescaled_hermite(n, HermiteScale::alpha);
    const AlphaPoly composed = umbral_compose(a, std::span(beta_basis).first(n + 1));
    const AlphaPoly diff = composed - rescaled_hermite(n, HermiteScale::alpha_plus_beta);
    // Appell: d/dx He_n^[a] = n He_{n-1}^[a].
    const AlphaPoly appell = a.derivative_x() - Rational(n) * prev;
    const double res = static_cast<double>(diff.terms().size() + appell.terms().size());
    r.worst_residual = std::max(r.worst_residual, res);
    r.cases.push_back({{"n", n}, {"umbral_terms", diff.terms().size()},
                       {"appell_terms", appell.terms().size()}});
    prev = a;
  }
  r.finalize();
  return r;
}

VerificationReport verify_wells(const LevelSequence& sigma) {
  const auto& lv = sigma.levels();
  if (lv.size() != 2 || lv[1] != lv[0] + 1) {
    return VerificationReport::skipped("wells", sigma, "only defined for sigma = {k, k+1}");
  }
  VerificationReport r = make("wells", sigma, 0.0);
  const PotentialModel v = potential(sigma);
  const auto minima = potential_minima(v, -5.0, 5.0, 10001);
  r.worst_residual = std::abs(static_cast<double>(minima.size()) - lv[0]);
  r.cases.push_back({{"expected", lv[0]}, {"minima", minima}});
  r.finalize();
  return r;
}

VerificationReport verify_spectral(const PropagatorModel& model, int n_trunc,
                                   std::uint64_t seed, double tolerance) {
  const LevelSequence& sigma = model.sigma();
  VerificationReport r = make("spectral", sigma, tolerance);
  const cdouble t{0.0, -1.0};
  Sampler s(seed);
  for (int i = 0; i < 5; ++i) {
    const double x = s.uniform(-2.0, 2.0);
    const double y = s.uniform(-2.0, 2.0);
    const double res_osc = std::abs(k_osc(x, y, t) - k_osc_spectral(x, y, t, n_trunc));
    const double res_sigma =
        std::abs(k_sigma(model, x, y, t) - k_sigma_spectral(sigma, x, y, t, n_trunc));
    r.worst_residual = std::max({r.worst_residual, res_osc, res_sigma});
    r.cases.push_back({{"x", x}, {"y", y}, {"osc", res_osc}, {"sigma", res_sigma}});
  }
  r.finalize();
  return r;
}

std::vector<VerificationReport> run_all(std::span<const LevelSequence> sigmas,
                                        const VerifyConfig& cfg) {
  validate(cfg);
  std::vector<VerificationReport> out;
  if (sigmas.empty()) return out;
  const auto on = [&](Suite s) { return cfg.suites.contains(s); };
  const auto guarded = [&](const std::string& name, const LevelSequence& sigma, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      VerificationReport r = make(name, sigma, 0.0);
      r.worst_residual = HUGE_VAL;
      r.note = e.what();
      r.finalize();
      out.push_back(std::move(r));
    }
  };
  const std::uint64_t seed = cfg.seed;
  const LevelSequence none;

  if (on(Suite::mehler)) {
    guarded("mehler", none, [&] {
      const auto grid = default_mehler_grid();
      for (auto l : cfg.mehler_lambdas) {
        out.push_back(verify_mehler(l, grid, cfg.mehler_trunc, cfg.tol.mehler));
      }
    });
  }
  if (on(Suite::umbral)) guarded("umbral", none, [&] { out.push_back(verify_umbral(12)); });
  if (on(Suite::orthonormality)) {
    guarded("orthonormality", none,
            [&] { out.push_back(verify_orthonormality(none, 8, cfg.tol.orthonormality)); });
  }

  for (const LevelSequence& sigma : sigmas) {
    const bool ka = sigma.is_krein_adler();
    const auto need_ka = [&](const std::string& name, auto&& body) {
      if (!ka) {
        out.push_back(VerificationReport::skipped(name, sigma, "non-Krein-Adler"));
        return;
      }
      guarded(name, sigma, body);
    };
    QTable q;
    guarded("build_qtable", sigma, [&] { q = build_qtable(sigma); });
    if (q.polys.empty()) continue;
    std::optional<PropagatorModel> model;
    guarded("propagator_model", sigma, [&] { model.emplace(q); });

    if (on(Suite::sum_rule)) guarded("sum_rule", sigma, [&] { out.push_back(verify_sum_rule(q)); });
    if (on(Suite::lemma)) {
      guarded("connection_lemma", sigma, [&] {
        const int m_max =
            cfg.lemma_m_max >= 0 ? cfg.lemma_m_max : std::max(2 * sigma.last(), sigma.last() + 1);
        out.push_back(verify_connection_lemma(q, std::max(m_max, sigma.last() + 1)));
      });
    }
    if (on(Suite::parity)) guarded("parity", sigma, [&] { out.push_back(verify_parity(q)); });
    if (on(Suite::deltav)) {
      need_ka("deltaV_identity", [&] { out.push_back(verify_deltaV_identity(sigma)); });
    }
    if (on(Suite::xmehler)) {
      guarded("xmehler", sigma, [&] {
        const auto grid = default_mehler_grid();
        for (auto l : cfg.xmehler_lambdas) {
          out.push_back(verify_xmehler(sigma, l, grid, cfg.xmehler_trunc, cfg.tol.xmehler));
        }
      });
    }
    if (!model) continue;
    if (on(Suite::closed_form)) {
      guarded("closed_form", sigma, [&] {
        out.push_back(verify_closed_form(*model, cfg.closed_form_points, stream(seed, 1),
                                         cfg.tol.closed_form));
      });
    }
    if (on(Suite::spectral)) {
      need_ka("spectral", [&] {
        out.push_back(verify_spectral(*model, cfg.spectral_trunc, stream(seed, 2), cfg.tol.spectral));
      });
    }
    if (on(Suite::schrodinger)) {
      need_ka("schrodinger", [&] {
        auto s = verify_schrodinger(*model, cfg.schrodinger_points, cfg.fd_steps, stream(seed, 3),
                                    cfg.tol.schrodinger, cfg.tol.schrodinger_order);
        out.push_back(std::move(s.residual));
        out.push_back(std::move(s.order));
      });
    }
    if (on(Suite::green)) {
      need_ka("green", [&] {
        auto g = verify_green(*model, cfg.green_x, cfg.green_y, cfg.green_energies,
                              cfg.green_trunc, stream(seed, 4), cfg.tol.green, cfg.tol.green_bound);
        out.push_back(std::move(g.agreement));
        out.push_back(std::move(g.deleted_levels));
      });
    }
    if (on(Suite::eigen)) {
      need_ka("eigenfunctions", [&] {
        EigenCheckConfig ec;
        ec.tolerance = cfg.tol.eigen;
        out.push_back(verify_eigenfunctions(sigma, cfg.eigen_n_max, ec));
      });
      need_ka("orthonormality", [&] {
        out.push_back(verify_orthonormality(sigma, cfg.eigen_n_max, cfg.tol.gram));
      });
    }
    if (on(Suite::wells)) need_ka("wells", [&] { out.push_back(verify_wells(sigma)); });
  }
  return out;
}

nlohmann::json to_json(std::span<const VerificationReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

}  // namespace xhermite

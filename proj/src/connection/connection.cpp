#include "xhermite/connection.hpp"

#include <algorithm>

#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"
#include "xhermite/poly_json.hpp"

namespace xhermite {

ScaledPoly QTable::sum() const {
  ScaledPoly s = ScaledPoly().as_bivariate();
  for (const auto& p : polys) s += p;
  return s;
}

QTable build_qtable(const LevelSequence& sigma) {
  QTable q{sigma, sigma.size(), {}};
  const int count = sigma.last() + 2;
  q.polys.reserve(count);
  for (int k = 0; k < count; ++k) {
    ScaledPoly acc = xhermite_pair(sigma, k);
    for (int j = 1; j <= k; ++j) acc -= q.polys[k - j] * normalized_hermite_pair(j);
    q.polys.push_back(acc.with_scale(sigma.size()).as_bivariate());
  }
  return q;
}

ScaledPoly connection_lhs(const QTable& q, int m) {
  ScaledPoly acc = ScaledPoly().as_bivariate();
  for (int k = 0; k < q.size() && k <= m; ++k) {
    acc += normalized_hermite_pair(m - k) * q.polys[k];
  }
  return acc;
}

int xhermite_ground_degree(const LevelSequence& sigma) {
  return sigma.wronskian_degree() - sigma.size();
}

VerificationReport verify_sum_rule(const QTable& q) {
  VerificationReport r;
  r.check_name = "sum_rule";
  r.sigma = q.sigma;
  // The formal norms 1/prod(sigma_j - n) have sign (-1)^|sigma| for large n,
  // which carries over to the sum; for Krein-Adler sequences |sigma| is even.
  const int sign = q.sigma.size() % 2 == 0 ? 1 : -1;
  const ScaledPoly diff = q.sum() - normalized_wronskian_pair(q.sigma) * Rational(sign);
  r.worst_residual = exact_residual(diff);
  nlohmann::json c = {{"terms_in_sum", q.sum().terms().size()}, {"sign", sign}};
  if (!diff.is_zero()) c["difference"] = to_json(diff);
  r.cases.push_back(std::move(c));
  r.finalize();
  return r;
}

VerificationReport verify_connection_lemma(const QTable& q, int m_max, Execution exec) {
  VerificationReport r;
  r.check_name = "connection_lemma";
  r.sigma = q.sigma;
  if (m_max < q.sigma.last() + 1) {
    throw TruncationTooSmall("m_max must be at least sigma[[-1]] + 1");
  }
  // The Hermite cache is filled up front so the parallel loop only reads it.
  HermiteCache::global().reserve(m_max);
  std::vector<ScaledPoly> diffs(static_cast<size_t>(m_max + 1));
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int m = 0; m <= m_max; ++m) {
      diffs[m] = connection_lhs(q, m) - xhermite_pair(q.sigma, m);
    }
  } else {
    for (int m = 0; m <= m_max; ++m) {
      diffs[m] = connection_lhs(q, m) - xhermite_pair(q.sigma, m);
    }
  }
  for (int m = 0; m <= m_max; ++m) {
    const double res = exact_residual(diffs[m]);
    r.worst_residual = std::max(r.worst_residual, res);
    nlohmann::json c = {{"m", m}, {"residual", res}, {"m_in_sigma", q.sigma.contains(m)}};
    if (!diffs[m].is_zero()) c["difference"] = to_json(diffs[m]);
    r.cases.push_back(std::move(c));
  }
  r.finalize();
  return r;
}

VerificationReport verify_parity(const QTable& q) {
  VerificationReport r;
  r.check_name = "parity";
  r.sigma = q.sigma;
  const int ground_sign = xhermite_ground_degree(q.sigma) % 2 == 0 ? 1 : -1;
  for (int k = 0; k < q.size(); ++k) {
    const ScaledPoly& p = q.polys[k];
    const int sx = k % 2 == 0 ? ground_sign : -ground_sign;
    const double sym = exact_residual(p - p.swap_xy());
    const double both = exact_residual(p - p.reflect(-1, -1));
    const double single = exact_residual(p.reflect(-1, 1) - p * Rational(sx));
    r.worst_residual = std::max({r.worst_residual, sym, both, single});
    r.cases.push_back({{"k", k}, {"symmetry", sym}, {"reflect_xy", both}, {"reflect_x", single}});
  }
  r.finalize();
  return r;
}

nlohmann::json to_json(const QTable& q) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : q.polys) polys.push_back(to_json(p));
  return {{"sigma", q.sigma.levels()}, {"scale_exp", q.scale_exp}, {"q", std::move(polys)}};
}

QTable qtable_from_json(const nlohmann::json& j) {
  try {
    QTable q;
    q.sigma = LevelSequence(j.at("sigma").get<std::vector<int>>());
    q.scale_exp = j.at("scale_exp").get<int>();
    for (const auto& p : j.at("q")) q.polys.push_back(poly_from_json(p));
    if (q.size() != q.sigma.last() + 2) throw ParseError("QTable length does not match sigma");
    return q;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ex.what());
  }
}

}  // namespace xhermite

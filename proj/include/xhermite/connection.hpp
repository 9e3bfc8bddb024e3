#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "xhermite/execution.hpp"
#include "xhermite/report.hpp"
#include "xhermite/scaled_poly.hpp"
#include "xhermite/wronskian.hpp"

namespace xhermite {

/// Connection polynomials Q_0 ... Q_{sigma[[-1]]+1} for one level sequence.
/// All nonzero entries carry scale_exp == |sigma|.
struct QTable {
  LevelSequence sigma;
  int scale_exp = 0;
  std::vector<ScaledPoly> polys;

  int size() const { return static_cast<int>(polys.size()); }
  /// sum_k Q_k(x, y).
  ScaledPoly sum() const;

  friend bool operator==(const QTable&, const QTable&) = default;
};

/// Q_k = (h_k^s(x) h_k^s(y) - sum_{j=1..k} Q_{k-j} h_j(x) h_j(y)) / (h_0(x) h_0(y)).
/// The divisor is the constant (2*pi)^(-1/2), so the division only lowers
/// scale_exp by one.
QTable build_qtable(const LevelSequence& sigma);

/// sum_k h_{m-k}(x) h_{m-k}(y) Q_k(x, y), with h_j = 0 for j < 0.
ScaledPoly connection_lhs(const QTable& q, int m);

/// deg h_0^sigma = sum_j (sigma[[j]] - j + 1) - |sigma|.
int xhermite_ground_degree(const LevelSequence& sigma);

/// sum_k Q_k = (-1)^|sigma| Wr[h_sigma](x) Wr[h_sigma](y).
VerificationReport verify_sum_rule(const QTable& q);
VerificationReport verify_connection_lemma(const QTable& q, int m_max,
                                           Execution exec = Execution::parallel);
/// Symmetry Q_k(x,y) = Q_k(y,x) together with both parity rules.
VerificationReport verify_parity(const QTable& q);

nlohmann::json to_json(const QTable& q);
QTable qtable_from_json(const nlohmann::json& j);

}  // namespace xhermite

#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "xhermite/scaled_poly.hpp"

namespace xhermite {

/// Strictly increasing sequence sigma of deleted oscillator levels.
class LevelSequence {
 public:
  LevelSequence() = default;
  explicit LevelSequence(std::vector<int> levels);
  LevelSequence(std::initializer_list<int> levels)
      : LevelSequence(std::vector<int>(levels)) {}

  /// Parses "1,2" (empty string gives the empty sequence).
  static LevelSequence parse(const std::string& text);

  const std::vector<int>& levels() const { return levels_; }
  int size() const { return static_cast<int>(levels_.size()); }
  bool empty() const { return levels_.empty(); }
  /// sigma[[-1]]; -1 for the empty sequence so that sigma[[-1]] + 2 = 1.
  int last() const { return levels_.empty() ? -1 : levels_.back(); }
  bool contains(int n) const;
  LevelSequence without_index(int i) const;

  /// True iff the levels split into consecutive pairs {k, k+1}.
  bool is_krein_adler() const { return krein_adler_; }
  /// M = |sigma| / 2 for Krein-Adler sequences.
  int pair_count() const { return size() / 2; }

  /// sum_j (sigma[[j]] - j + 1), j counted from 1: the degree of Wr[He_sigma].
  int wronskian_degree() const;

  std::string to_string() const;
  friend bool operator==(const LevelSequence& a, const LevelSequence& b) {
    return a.levels_ == b.levels_;
  }

 private:
  std::vector<int> levels_;
  bool krein_adler_ = true;
};

/// Wr[f_1, ..., f_N](x) with rows of successive derivatives; Wr[] = 1.
ScaledPoly wronskian(std::span<const ScaledPoly> columns);

/// W_hat(x) = Wr[He_sigma](x), columns in ascending sigma order.
ScaledPoly wronskian_of_levels(const LevelSequence& sigma);

/// Wr[He_sigma, He_n](x), the unnormalized exceptional Hermite polynomial.
ScaledPoly xhermite_wronskian(const LevelSequence& sigma, int n);

/// N_n^2 = 1 / prod_j (sigma[[j]] - n); zero for n in sigma.
Rational normalization_sq(const LevelSequence& sigma, int n);

/// h_n^sigma(x) h_n^sigma(y), exact with scale_exp |sigma| + 1.
ScaledPoly xhermite_pair(const LevelSequence& sigma, int n);

/// Wr[h_sigma](x) Wr[h_sigma](y) = prod_j p_{sigma_j}^2 W_hat(x) W_hat(y),
/// scale_exp |sigma|.
ScaledPoly normalized_wronskian_pair(const LevelSequence& sigma);

struct WronskianSet {
  LevelSequence sigma;
  ScaledPoly w_hat;
  /// w_hat_minus[i] = Wr[He_{sigma \ sigma[[i]]}].
  std::vector<ScaledPoly> w_hat_minus;
};

WronskianSet wronskian_set(const LevelSequence& sigma);

struct RationalFunction {
  ScaledPoly numerator;
  ScaledPoly denominator;
};

/// L_hat f = Wr[He_sigma, f] / Wr[He_sigma].
RationalFunction apply_Lhat(const LevelSequence& sigma, const ScaledPoly& f);

}  // namespace xhermite

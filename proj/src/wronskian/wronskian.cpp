#include "xhermite/wronskian.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"
#include "xhermite/poly_matrix.hpp"

namespace xhermite {

LevelSequence::LevelSequence(std::vector<int> levels) : levels_(std::move(levels)) {
  for (size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] < 0) throw InvalidSequence("levels must be nonnegative");
    if (i > 0 && levels_[i] <= levels_[i - 1]) {
      throw InvalidSequence("sequence must be strictly increasing");
    }
  }
  krein_adler_ = levels_.size() % 2 == 0;
  for (size_t i = 0; krein_adler_ && i < levels_.size(); i += 2) {
    krein_adler_ = levels_[i + 1] == levels_[i] + 1;
  }
}

LevelSequence LevelSequence::parse(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  const auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  if (text.find_first_not_of(" \t") == std::string::npos) return LevelSequence();
  while (pos <= text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    size_t b = pos, e = end;
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e, v);
    if (b == e || ec != std::errc() || ptr != text.data() + e) {
      throw InvalidSequence("not an integer: '" + text.substr(b, e - b) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return LevelSequence(std::move(out));
}

bool LevelSequence::contains(int n) const {
  return std::binary_search(levels_.begin(), levels_.end(), n);
}

LevelSequence LevelSequence::without_index(int i) const {
  std::vector<int> v = levels_;
  v.erase(v.begin() + i);
  return LevelSequence(std::move(v));
}

int LevelSequence::wronskian_degree() const {
  int d = 0;
  for (int j = 0; j < size(); ++j) d += levels_[j] - j;
  return d;
}

std::string LevelSequence::to_string() const {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << levels_[i];
  os << '}';
  return os.str();
}

ScaledPoly wronskian(std::span<const ScaledPoly> columns) {
  const int n = static_cast<int>(columns.size());
  if (n == 0) return ScaledPoly::constant(1);
  PolyMatrix m(n, n);
  for (int c = 0; c < n; ++c) {
    ScaledPoly f = columns[c];
    for (int r = 0; r < n; ++r) {
      m.set(r, c, f);
      f = poly_diff(f, Var::x);
    }
  }
  return det(m);
}

namespace {

std::vector<ScaledPoly> hermite_columns(const LevelSequence& sigma) {
  std::vector<ScaledPoly> cols;
  for (int s : sigma.levels()) cols.push_back(hermite(s));
  return cols;
}

Rational sigma_norm_sq(const LevelSequence& sigma) {
  Rational c = 1;
  for (int s : sigma.levels()) c *= norm_sq_rational(s);
  return c;
}

}  // namespace

ScaledPoly wronskian_of_levels(const LevelSequence& sigma) {
  return wronskian(hermite_columns(sigma));
}

ScaledPoly xhermite_wronskian(const LevelSequence& sigma, int n) {
  if (sigma.contains(n)) return ScaledPoly();
  auto cols = hermite_columns(sigma);
  cols.push_back(hermite(n));
  return wronskian(cols);
}

Rational normalization_sq(const LevelSequence& sigma, int n) {
  if (sigma.contains(n)) return 0;
  Integer prod = 1;
  for (int s : sigma.levels()) prod *= s - n;
  Rational r(1, prod);
  r.canonicalize();
  return r;
}

ScaledPoly xhermite_pair(const LevelSequence& sigma, int n) {
  if (sigma.contains(n)) return ScaledPoly().as_bivariate();
  const ScaledPoly w = xhermite_wronskian(sigma, n);
  const Rational c = normalization_sq(sigma, n) * sigma_norm_sq(sigma) * norm_sq_rational(n);
  return (w * w.in_y() * c).with_scale(sigma.size() + 1);
}

ScaledPoly normalized_wronskian_pair(const LevelSequence& sigma) {
  const ScaledPoly w = wronskian_of_levels(sigma);
  return (w * w.in_y() * sigma_norm_sq(sigma)).with_scale(sigma.size());
}

WronskianSet wronskian_set(const LevelSequence& sigma) {
  WronskianSet ws{sigma, wronskian_of_levels(sigma), {}};
  for (int i = 0; i < sigma.size(); ++i) {
    ws.w_hat_minus.push_back(wronskian_of_levels(sigma.without_index(i)));
  }
  return ws;
}

RationalFunction apply_Lhat(const LevelSequence& sigma, const ScaledPoly& f) {
  auto cols = hermite_columns(sigma);
  cols.push_back(f);
  return {wronskian(cols), wronskian_of_levels(sigma)};
}

}  // namespace xhermite

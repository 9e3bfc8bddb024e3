#include "xhermite/alpha_poly.hpp"

#include <algorithm>
#include <sstream>

#include "xhermite/error.hpp"
#include "xhermite/hermite.hpp"

namespace xhermite {

AlphaPoly::AlphaPoly(TermMap terms) : terms_(std::move(terms)) { normalize(); }

AlphaPoly AlphaPoly::term(const Rational& c, int dx, int da, int db) {
  return AlphaPoly(TermMap{{Key{dx, da, db}, c}});
}

void AlphaPoly::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

int AlphaPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k[0]);
  return d;
}

AlphaPoly AlphaPoly::coeff_x(int k) const {
  TermMap t;
  for (const auto& [key, c] : terms_) {
    if (key[0] == k) t.emplace(Key{0, key[1], key[2]}, c);
  }
  return AlphaPoly(std::move(t));
}

AlphaPoly AlphaPoly::derivative_x() const {
  TermMap t;
  for (const auto& [key, c] : terms_) {
    if (key[0] > 0) t.emplace(Key{key[0] - 1, key[1], key[2]}, c * key[0]);
  }
  return AlphaPoly(std::move(t));
}

ScaledPoly AlphaPoly::at(const Rational& alpha, const Rational& beta) const {
  ScaledPoly::TermMap t;
  for (const auto& [key, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < key[1]; ++i) v *= alpha;
    for (int i = 0; i < key[2]; ++i) v *= beta;
    t[Exponent{key[0], 0}] += v;
  }
  return ScaledPoly(std::move(t), 0, 1);
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) terms_[k] += c;
  normalize();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) terms_[k] -= c;
  normalize();
  return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  AlphaPoly::TermMap t;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      t[AlphaPoly::Key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}] += ca * cb;
    }
  }
  return AlphaPoly(std::move(t));
}

AlphaPoly operator*(const Rational& c, const AlphaPoly& a) {
  AlphaPoly r = a;
  for (auto& [k, v] : r.terms_) v *= c;
  r.normalize();
  return r;
}

std::string AlphaPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    os << (first ? "" : " + ") << c.get_str();
    if (k[0]) os << "*x^" << k[0];
    if (k[1]) os << "*a^" << k[1];
    if (k[2]) os << "*b^" << k[2];
    first = false;
  }
  return os.str();
}

AlphaPoly rescaled_hermite(int n, HermiteScale scale) {
  const ScaledPoly& he = hermite(n);
  AlphaPoly out;
  for (const auto& [e, c] : he.terms()) {
    const int p = (n - e.dx) / 2;  // h_{n,k} = 0 for odd n-k
    switch (scale) {
      case HermiteScale::alpha:
        out += AlphaPoly::term(c, e.dx, p, 0);
        break;
      case HermiteScale::beta:
        out += AlphaPoly::term(c, e.dx, 0, p);
        break;
      case HermiteScale::alpha_plus_beta: {
        // (alpha + beta)^p by the binomial theorem.
        Integer binom = 1;
        for (int i = 0; i <= p; ++i) {
          out += AlphaPoly::term(c * Rational(binom), e.dx, i, p - i);
          binom = binom * (p - i) / (i + 1);
        }
        break;
      }
    }
  }
  return out;
}

AlphaPoly umbral_compose(const AlphaPoly& a, std::span<const AlphaPoly> basis) {
  const int deg = a.degree_x();
  if (deg >= static_cast<int>(basis.size())) {
    throw ArityMismatch("umbral basis too short for degree " + std::to_string(deg));
  }
  AlphaPoly out;
  for (int k = 0; k <= deg; ++k) out += a.coeff_x(k) * basis[k];
  return out;
}

}  // namespace xhermite

#include "xhermite/scaled_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "xhermite/error.hpp"

namespace xhermite {

namespace {

void check_arity(int arity) {
  if (arity != 1 && arity != 2) {
    throw ArityMismatch("arity must be 1 or 2, got " + std::to_string(arity));
  }
}

// Falling factorial n (n-1) ... (n-k+1).
Integer falling(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace

ScaledPoly::ScaledPoly(TermMap terms, int scale_exp, int arity)
    : terms_(std::move(terms)), scale_exp_(scale_exp), arity_(arity) {
  check_arity(arity_);
  if (arity_ == 1) {
    for (const auto& [e, c] : terms_) {
      if (e.dy != 0 && sgn(c) != 0) {
        throw ArityMismatch("univariate polynomial with a y term");
      }
    }
  }
  for (const auto& [e, c] : terms_) {
    if (e.dx < 0 || e.dy < 0) throw ArityMismatch("negative exponent");
  }
  normalize();
}

ScaledPoly ScaledPoly::constant(const Rational& c, int scale_exp, int arity) {
  TermMap t;
  t.emplace(Exponent{0, 0}, c);
  return ScaledPoly(std::move(t), scale_exp, arity);
}

ScaledPoly ScaledPoly::monomial(const Rational& c, int dx, int dy, int scale_exp) {
  TermMap t;
  t.emplace(Exponent{dx, dy}, c);
  return ScaledPoly(std::move(t), scale_exp, dy > 0 ? 2 : 1);
}

void ScaledPoly::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  if (terms_.empty()) scale_exp_ = 0;
}

Rational ScaledPoly::coeff(int dx, int dy) const {
  auto it = terms_.find(Exponent{dx, dy});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ScaledPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Var::x ? e.dx : e.dy);
  return d;
}

int ScaledPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.dx + e.dy);
  return d;
}

ScaledPoly ScaledPoly::with_scale(int scale_exp) const {
  ScaledPoly r = *this;
  if (!r.is_zero()) r.scale_exp_ = scale_exp;
  return r;
}

ScaledPoly ScaledPoly::as_bivariate() const {
  ScaledPoly r = *this;
  r.arity_ = 2;
  return r;
}

ScaledPoly ScaledPoly::in_y() const {
  if (arity_ != 1) throw ArityMismatch("in_y expects a univariate polynomial");
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(Exponent{0, e.dx}, c);
  return ScaledPoly(std::move(t), scale_exp_, 2);
}

ScaledPoly ScaledPoly::reflect(int sx, int sy) const {
  ScaledPoly r = *this;
  for (auto& [e, c] : r.terms_) {
    if ((sx < 0 && e.dx % 2 == 1) != (sy < 0 && e.dy % 2 == 1)) c = -c;
  }
  return r;
}

ScaledPoly ScaledPoly::swap_xy() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(Exponent{e.dy, e.dx}, c);
  return ScaledPoly(std::move(t), scale_exp_, 2);
}

ScaledPoly ScaledPoly::diagonal() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t[Exponent{e.dx + e.dy, 0}] += c;
  return ScaledPoly(std::move(t), scale_exp_, 1);
}

ScaledPoly ScaledPoly::operator-() const {
  ScaledPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ScaledPoly& ScaledPoly::operator+=(const ScaledPoly& rhs) {
  if (arity_ != rhs.arity_) {
    throw ArityMismatch("cannot add arity " + std::to_string(arity_) + " and arity " +
                        std::to_string(rhs.arity_));
  }
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    scale_exp_ = rhs.scale_exp_;
  } else if (scale_exp_ != rhs.scale_exp_) {
    throw IrrationalScaleMismatch("scale_exp " + std::to_string(scale_exp_) + " vs " +
                                  std::to_string(rhs.scale_exp_));
  }
  for (const auto& [e, c] : rhs.terms_) terms_[e] += c;
  normalize();
  return *this;
}

ScaledPoly& ScaledPoly::operator-=(const ScaledPoly& rhs) { return *this += -rhs; }

ScaledPoly& ScaledPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    scale_exp_ = 0;
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ScaledPoly operator*(const ScaledPoly& a, const ScaledPoly& b) {
  const int arity = std::max(a.arity_, b.arity_);
  ScaledPoly::TermMap t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      t[Exponent{ea.dx + eb.dx, ea.dy + eb.dy}] += ca * cb;
    }
  }
  return ScaledPoly(std::move(t), a.scale_exp_ + b.scale_exp_, arity);
}

bool operator==(const ScaledPoly& a, const ScaledPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.scale_exp_ == b.scale_exp_ && a.terms_ == b.terms_;
}

std::string ScaledPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : " + ") << c.get_str();
    if (e.dx > 0) os << "*x^" << e.dx;
    if (e.dy > 0) os << "*y^" << e.dy;
    first = false;
  }
  if (scale_exp_ != 0) os << " [(2pi)^(-" << scale_exp_ << "/2)]";
  return os.str();
}

ScaledPoly poly_add(const ScaledPoly& a, const ScaledPoly& b) { return a + b; }

ScaledPoly poly_mul(const ScaledPoly& a, const ScaledPoly& b) { return a * b; }

ScaledPoly poly_diff(const ScaledPoly& a, Var var, int order) {
  if (order < 0) throw ArityMismatch("negative derivative order");
  if (order == 0) return a;
  ScaledPoly::TermMap t;
  for (const auto& [e, c] : a.terms()) {
    const int d = var == Var::x ? e.dx : e.dy;
    if (d < order) continue;
    Exponent ne = e;
    (var == Var::x ? ne.dx : ne.dy) -= order;
    t.emplace(ne, c * Rational(falling(d, order)));
  }
  return ScaledPoly(std::move(t), a.scale_exp(), a.arity());
}

ScaledPoly exact_divide(const ScaledPoly& a, const ScaledPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  const int arity = std::max(a.arity(), b.arity());
  // Lexicographic order on (dx, dy); the map's last element leads.
  ScaledPoly::TermMap rem = a.terms();
  ScaledPoly::TermMap quot;
  const auto& [lb_e, lb_c] = *b.terms().rbegin();
  while (!rem.empty()) {
    const auto [lr_e, lr_c] = *rem.rbegin();
    const Exponent qe{lr_e.dx - lb_e.dx, lr_e.dy - lb_e.dy};
    if (qe.dx < 0 || qe.dy < 0) throw NotDivisible("nonzero remainder");
    const Rational qc = lr_c / lb_c;
    quot[qe] += qc;
    for (const auto& [e, c] : b.terms()) {
      Exponent pe{e.dx + qe.dx, e.dy + qe.dy};
      auto& slot = rem[pe];
      slot -= qc * c;
      if (sgn(slot) == 0) rem.erase(pe);
    }
  }
  return ScaledPoly(std::move(quot), a.scale_exp() - b.scale_exp(), arity);
}

double scale_factor(int scale_exp) {
  return std::pow(2.0 * std::numbers::pi, -0.5 * scale_exp);
}

std::complex<double> poly_eval_complex(const ScaledPoly& a, std::complex<double> x,
                                       std::optional<std::complex<double>> y) {
  if (a.arity() == 2 && !y) throw MissingVariable("bivariate polynomial needs y");
  if (a.arity() == 1 && y) throw ArityMismatch("univariate polynomial given a y value");
  if (a.is_zero()) return 0.0;
  // Horner in x over inner Horner polynomials in y.
  const int nx = a.degree(Var::x);
  std::vector<std::vector<double>> rows(nx + 1);
  for (const auto& [e, c] : a.terms()) {
    auto& row = rows[e.dx];
    if (static_cast<int>(row.size()) <= e.dy) row.resize(e.dy + 1, 0.0);
    row[e.dy] = c.get_d();
  }
  const std::complex<double> yv = y.value_or(0.0);
  std::complex<double> acc = 0.0;
  for (int i = nx; i >= 0; --i) {
    std::complex<double> inner = 0.0;
    for (auto it = rows[i].rbegin(); it != rows[i].rend(); ++it) inner = inner * yv + *it;
    acc = acc * x + inner;
  }
  return acc * scale_factor(a.scale_exp());
}

double max_abs_coeff(const ScaledPoly& a) {
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, std::abs(c.get_d()));
  return m;
}

}  // namespace xhermite

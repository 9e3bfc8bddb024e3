#include "xhermite/numeric_poly.hpp"

namespace xhermite {

NumericPoly::NumericPoly(const ScaledPoly& p) : arity_(p.arity()) {
  if (p.is_zero()) return;
  const double s = scale_factor(p.scale_exp());
  rows_.resize(p.degree(Var::x) + 1);
  for (const auto& [e, c] : p.terms()) {
    auto& row = rows_[e.dx];
    if (static_cast<int>(row.size()) <= e.dy) row.resize(e.dy + 1, 0.0);
    row[e.dy] = c.get_d() * s;
  }
}

template <typename T>
T NumericPoly::eval(T x, T y) const {
  T acc = 0.0;
  for (auto row = rows_.rbegin(); row != rows_.rend(); ++row) {
    T inner = 0.0;
    for (auto it = row->rbegin(); it != row->rend(); ++it) inner = inner * y + *it;
    acc = acc * x + inner;
  }
  return acc;
}

std::complex<double> NumericPoly::operator()(std::complex<double> x,
                                             std::complex<double> y) const {
  return eval(x, y);
}

double NumericPoly::operator()(double x, double y) const { return eval(x, y); }

}  // namespace xhermite

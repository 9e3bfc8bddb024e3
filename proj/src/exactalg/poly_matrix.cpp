#include "xhermite/poly_matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "xhermite/error.hpp"

namespace xhermite {

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<ScaledPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 0 || cols_ < 0 || static_cast<int>(entries_.size()) != rows_ * cols_) {
    throw NonSquare("entry count does not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
  // Validates the shared arity and scale.
  (void)arity();
  (void)entry_scale();
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : PolyMatrix(rows, cols, std::vector<ScaledPoly>(static_cast<size_t>(rows * cols))) {}

void PolyMatrix::set(int r, int c, ScaledPoly p) { entries_[r * cols_ + c] = std::move(p); }

int PolyMatrix::entry_scale() const {
  std::optional<int> e;
  for (const auto& p : entries_) {
    if (p.is_zero()) continue;
    if (e && *e != p.scale_exp()) {
      throw IrrationalScaleMismatch("matrix entries carry different scale_exp");
    }
    e = p.scale_exp();
  }
  return e.value_or(0);
}

int PolyMatrix::arity() const {
  int a = 1;
  for (const auto& p : entries_) a = std::max(a, p.arity());
  return a;
}

PolyMatrix PolyMatrix::minor(int i, int j) const {
  std::vector<ScaledPoly> out;
  out.reserve(static_cast<size_t>((rows_ - 1) * (cols_ - 1)));
  for (int r = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (int c = 0; c < cols_; ++c) {
      if (c != j) out.push_back((*this)(r, c));
    }
  }
  return PolyMatrix(rows_ - 1, cols_ - 1, std::move(out));
}

namespace {

void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NonSquare(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Entries with the (2*pi) tag removed and lifted to the common arity.
std::vector<ScaledPoly> stripped(const PolyMatrix& m) {
  const int arity = m.arity();
  std::vector<ScaledPoly> out;
  out.reserve(static_cast<size_t>(m.rows() * m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.emplace_back(m(r, c).terms(), 0, arity);
  }
  return out;
}

ScaledPoly cofactor_rec(const std::vector<ScaledPoly>& a, int n, int arity) {
  if (n == 0) return ScaledPoly::constant(1, 0, arity);
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  ScaledPoly acc = ScaledPoly::constant(0, 0, arity);
  std::vector<ScaledPoly> sub(static_cast<size_t>((n - 1) * (n - 1)));
  for (int j = 0; j < n; ++j) {
    if (a[j].is_zero()) continue;
    size_t k = 0;
    for (int r = 1; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (c != j) sub[k++] = a[r * n + c];
      }
    }
    ScaledPoly term = a[j] * cofactor_rec(sub, n - 1, arity);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

ScaledPoly det_cofactor(const PolyMatrix& m) {
  require_square(m);
  const int n = m.rows();
  ScaledPoly d = cofactor_rec(stripped(m), n, m.arity());
  return d.with_scale(n * m.entry_scale());
}

ScaledPoly det_bareiss(const PolyMatrix& m) {
  require_square(m);
  const int n = m.rows();
  const int arity = m.arity();
  if (n == 0) return ScaledPoly::constant(1, 0, arity);
  std::vector<ScaledPoly> a = stripped(m);
  auto at = [&](int r, int c) -> ScaledPoly& { return a[r * n + c]; };
  bool negate = false;
  ScaledPoly prev = ScaledPoly::constant(1, 0, arity);
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      int p = k + 1;
      while (p < n && at(p, k).is_zero()) ++p;
      if (p == n) return ScaledPoly::constant(0, 0, arity);
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = exact_divide(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
      }
    }
    prev = at(k, k);
  }
  ScaledPoly d = negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
  return d.with_scale(n * m.entry_scale());
}

ScaledPoly det(const PolyMatrix& m) {
  require_square(m);
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

}  // namespace xhermite

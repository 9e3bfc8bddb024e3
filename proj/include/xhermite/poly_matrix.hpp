#pragma once

#include <vector>

#include "xhermite/scaled_poly.hpp"

namespace xhermite {

/// Rectangular matrix of polynomials sharing one arity and one scale_exp
/// (zero entries are compatible with any scale).
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, std::vector<ScaledPoly> entries);
  PolyMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const ScaledPoly& operator()(int r, int c) const { return entries_[r * cols_ + c]; }
  void set(int r, int c, ScaledPoly p);

  /// Shared scale_exp of the nonzero entries (0 if all entries are zero).
  int entry_scale() const;
  int arity() const;

  /// Copy with row i and column j removed.
  PolyMatrix minor(int i, int j) const;

 private:
  int rows_;
  int cols_;
  std::vector<ScaledPoly> entries_;
};

/// Determinant. Cofactor expansion up to 4x4, fraction-free Bareiss above.
/// The result carries scale_exp n * entry_scale().
ScaledPoly det(const PolyMatrix& m);

/// Both strategies, exposed for cross-checking.
ScaledPoly det_cofactor(const PolyMatrix& m);
ScaledPoly det_bareiss(const PolyMatrix& m);

}  // namespace xhermite

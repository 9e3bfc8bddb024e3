#pragma once

#include <string>

#include "xhermite/propagator.hpp"
#include "xhermite/scaled_poly.hpp"

namespace xhermite {

/// p = content * primitive, with primitive having coprime integer
/// coefficients and a positive leading term. The scale tag stays in `content`
/// bookkeeping; primitive has scale_exp 0.
struct PrimitiveSplit {
  Rational content;
  ScaledPoly primitive;
};
PrimitiveSplit primitive_part(const ScaledPoly& p);

/// Integer-coefficient form such as "x^2*y^2 + x^2 + y^2 - 1"; terms ordered
/// by descending total degree, then descending power of x.
std::string render_terms(const ScaledPoly& p);

/// Typeset with a single prefactor, e.g. "1/(2π)", "-x*y/(2π)",
/// "(x^2*y^2 + x^2 + y^2 - 1)/(4π)", "1/√(2π)".
std::string render(const ScaledPoly& p);

/// "x^2/4 + 2 + (4*x^2 - 4)/(x^2 + 1)^2" with W = Wr[He_sigma] made primitive.
std::string render_potential(const PotentialModel& v);

}  // namespace xhermite

#include "xhermite/render.hpp"

#include <algorithm>
#include <vector>

namespace xhermite {

namespace {

// Descending total degree, then descending x power.
std::vector<std::pair<Exponent, Rational>> ordered(const ScaledPoly& p) {
  std::vector<std::pair<Exponent, Rational>> t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    const int da = a.first.dx + a.first.dy, db = b.first.dx + b.first.dy;
    if (da != db) return da > db;
    return a.first.dx > b.first.dx;
  });
  return t;
}

std::string power(const char* v, int d) {
  if (d == 0) return "";
  return d == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(d);
}

std::string monomial(const Exponent& e) {
  std::string s = power("x", e.dx);
  const std::string ys = power("y", e.dy);
  if (!s.empty() && !ys.empty()) s += "*";
  return s + ys;
}

bool single_unit_monomial(const ScaledPoly& prim) {
  return prim.terms().size() == 1 && prim.terms().begin()->second == 1;
}

}  // namespace

PrimitiveSplit primitive_part(const ScaledPoly& p) {
  if (p.is_zero()) return {Rational(0), p};
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (ordered(p).front().second < 0) content = -content;
  Rational inv = 1 / content;
  return {content, (p * inv).with_scale(0)};
}

std::string render_terms(const ScaledPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered(p)) {
    const bool neg = c < 0;
    const Rational a = abs(c);
    const std::string m = monomial(e);
    std::string body;
    if (m.empty()) {
      body = a.get_str();
    } else if (a == 1) {
      body = m;
    } else {
      body = a.get_str() + "*" + m;
    }
    if (first) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

std::string render(const ScaledPoly& p) {
  if (p.is_zero()) return "0";
  const auto [content, prim] = primitive_part(p);
  const int e = p.scale_exp();
  // (2 pi)^(-e/2) = 1 / (2^k pi^k) [* 1/sqrt(2 pi) when e is odd].
  const int k = e >= 0 ? e / 2 : -((-e + 1) / 2);
  const bool root = e % 2 != 0;
  Rational factor = abs(content);
  if (k >= 0) {
    factor /= Rational(Integer(1) << k);
  } else {
    factor *= Rational(Integer(1) << -k);
  }
  factor.canonicalize();

  std::string den;
  int den_tokens = 0;
  if (factor.get_den() != 1) {
    den += factor.get_den().get_str();
    ++den_tokens;
  }
  if (k > 0) {
    den += k == 1 ? "π" : "π^" + std::to_string(k);
    ++den_tokens;
  }
  if (root && e > 0) {
    den += "√(2π)";
    ++den_tokens;
  }
  std::string lead;  // numerator-side pi factors for negative scale tags
  if (k < 0) lead += (-k == 1 ? "π" : "π^" + std::to_string(-k));
  if (root && e < 0) lead += (lead.empty() ? "" : "*") + std::string("√(2π)");

  std::string num;
  const std::string a = factor.get_num() == 1 ? "" : factor.get_num().get_str();
  const bool constant_one = prim.terms().size() == 1 && prim.terms().begin()->first == Exponent{} &&
                            prim.terms().begin()->second == 1;
  std::vector<std::string> parts;
  if (!a.empty()) parts.push_back(a);
  if (!lead.empty()) parts.push_back(lead);
  if (!constant_one) {
    const std::string body = render_terms(prim);
    const bool wrap = !single_unit_monomial(prim) && (!parts.empty() || !den.empty());
    parts.push_back(wrap ? "(" + body + ")" : body);
  }
  if (parts.empty()) parts.push_back("1");
  for (size_t i = 0; i < parts.size(); ++i) num += (i ? "*" : "") + parts[i];

  std::string out = (content < 0 ? "-" : "") + num;
  if (!den.empty()) out += "/" + (den_tokens > 1 ? "(" + den + ")" : den);
  return out;
}

std::string render_potential(const PotentialModel& v) {
  std::string out = "x^2/4";
  if (v.shift != 0) out += " + " + std::to_string(v.shift);
  const ScaledPoly w = primitive_part(wronskian_of_levels(v.sigma)).primitive;
  const ScaledPoly w1 = poly_diff(w, Var::x);
  const ScaledPoly w2 = poly_diff(w, Var::x, 2);
  const ScaledPoly rest = (w2 * w - w1 * w1) * Rational(-2);
  if (rest.is_zero()) return out;
  const auto [c, prim] = primitive_part(rest);
  std::string num = render_terms(prim);
  if (c != 1 && c != -1) num = Rational(abs(c)).get_str() + "*(" + num + ")";
  else if (prim.terms().size() > 1) num = "(" + num + ")";
  out += (c < 0 ? " - " : " + ") + num + "/(" + render_terms(w) + ")^2";
  return out;
}

}  // namespace xhermite

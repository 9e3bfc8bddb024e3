#include "xhermite/poly_json.hpp"

#include "xhermite/error.hpp"

namespace xhermite {

nlohmann::json to_json(const ScaledPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"dx", e.dx},
                     {"dy", e.dy},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  }
  return {{"scale_exp", p.scale_exp()}, {"arity", p.arity()}, {"terms", std::move(terms)}};
}

ScaledPoly poly_from_json(const nlohmann::json& j) {
  try {
    ScaledPoly::TermMap terms;
    for (const auto& t : j.at("terms")) {
      Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
      if (sgn(c.get_den()) == 0) throw ParseError("zero denominator");
      c.canonicalize();
      const Exponent e{t.at("dx").get<int>(), t.at("dy").get<int>()};
      if (!terms.emplace(e, c).second) throw ParseError("duplicate term");
    }
    return ScaledPoly(std::move(terms), j.at("scale_exp").get<int>(), j.at("arity").get<int>());
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("bad integer: ") + ex.what());
  }
}

}  // namespace xhermite

#include "xhermite/parse.hpp"

#include <charconv>
#include <string>

#include "xhermite/error.hpp"

namespace xhermite {

double parse_double(std::string_view s) {
  double v = 0.0;
  // from_chars rejects a leading '+', which users still type.
  const std::string_view body = !s.empty() && s.front() == '+' ? s.substr(1) : s;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size()) {
    throw ParseError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::complex<double> parse_complex(std::string_view s) {
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent.
  size_t split = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  std::string_view im = split == std::string_view::npos ? body : body.substr(split);
  double imv = 0.0;
  if (im.empty() || im == "+") {
    imv = 1.0;
  } else if (im == "-") {
    imv = -1.0;
  } else {
    imv = parse_double(im);
  }
  return {re.empty() ? 0.0 : parse_double(re), imv};
}

}  // namespace xhermite

#include "xhermite/kernels.hpp"

#include <charconv>
#include <limits>

#include "xhermite/error.hpp"
#include "xhermite/parse.hpp"

namespace xhermite {

GridSpec GridSpec::parse(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw ParseError("grid must be start:stop:count, got '" + text + "'");
  }
  GridSpec g;
  g.start = parse_double(std::string_view(text).substr(0, a));
  g.stop = parse_double(std::string_view(text).substr(a + 1, b - a - 1));
  const std::string_view cs = std::string_view(text).substr(b + 1);
  auto [ptr, ec] = std::from_chars(cs.data(), cs.data() + cs.size(), g.count);
  if (cs.empty() || ec != std::errc() || ptr != cs.data() + cs.size() || g.count < 1) {
    throw ParseError("grid count must be a positive integer, got '" + std::string(cs) + "'");
  }
  return g;
}

double GridSpec::at(int i) const {
  return count == 1 ? start : start + (stop - start) * i / (count - 1);
}

std::vector<std::complex<double>> propagator_grid(const PropagatorModel& model,
                                                  std::span<const GridPoint> points,
                                                  Execution exec) {
  const int n = static_cast<int>(points.size());
  std::vector<std::complex<double>> out(points.size());
  auto eval = [&](int i) {
    try {
      out[i] = k_sigma(model, points[i].x, points[i].y, points[i].t);
    } catch (const Error&) {
      out[i] = std::numeric_limits<double>::quiet_NaN();
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) eval(i);
  } else {
    for (int i = 0; i < n; ++i) eval(i);
  }
  return out;
}

std::vector<double> potential_grid(const PotentialModel& v, std::span<const double> xs,
                                   Execution exec) {
  const int n = static_cast<int>(xs.size());
  std::vector<double> out(xs.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[i] = v.value(xs[i]);
  } else {
    for (int i = 0; i < n; ++i) out[i] = v.value(xs[i]);
  }
  return out;
}

}  // namespace xhermite

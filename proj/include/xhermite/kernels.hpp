#pragma once

#include <complex>
#include <span>
#include <vector>

#include "xhermite/execution.hpp"
#include "xhermite/propagator.hpp"

namespace xhermite {

struct GridPoint {
  double x;
  double y;
  std::complex<double> t;
};

/// "start:stop:count" grid specification; count >= 1.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  static GridSpec parse(const std::string& text);
  double at(int i) const;
};

/// K^sigma at every point. Points where evaluation fails (singular time or
/// a vanishing Wronskian) yield NaN.
std::vector<std::complex<double>> propagator_grid(const PropagatorModel& model,
                                                  std::span<const GridPoint> points,
                                                  Execution exec = Execution::parallel);

/// V^sigma(x_i) for every x_i.
std::vector<double> potential_grid(const PotentialModel& v, std::span<const double> xs,
                                   Execution exec = Execution::parallel);

}  // namespace xhermite

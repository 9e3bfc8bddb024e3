#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "xhermite/scaled_poly.hpp"
#include "xhermite/wronskian.hpp"

namespace xhermite {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// Outcome of one identity check. status is pass iff worst_residual <=
/// tolerance. Exact checks use tolerance 0 and report as residual the number
/// of nonzero terms left in the difference polynomial.
struct VerificationReport {
  std::string check_name;
  LevelSequence sigma;
  Status status = Status::fail;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  nlohmann::json cases = nlohmann::json::array();
  std::string note;

  bool passed() const { return status == Status::pass; }

  /// Sets status from worst_residual and tolerance.
  void finalize();

  static VerificationReport skipped(std::string check, LevelSequence sigma, std::string why);
};

/// Residual used by exact checks: count of nonzero terms of diff.
double exact_residual(const ScaledPoly& diff);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace xhermite

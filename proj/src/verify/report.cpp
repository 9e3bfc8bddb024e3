#include "xhermite/report.hpp"

#include <cmath>

namespace xhermite {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "fail";
}

void VerificationReport::finalize() {
  status = (std::isfinite(worst_residual) && worst_residual <= tolerance) ? Status::pass
                                                                          : Status::fail;
}

VerificationReport VerificationReport::skipped(std::string check, LevelSequence sigma,
                                               std::string why) {
  VerificationReport r;
  r.check_name = std::move(check);
  r.sigma = std::move(sigma);
  r.status = Status::skipped;
  r.note = std::move(why);
  return r;
}

double exact_residual(const ScaledPoly& diff) { return static_cast<double>(diff.terms().size()); }

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = {{"check", r.check_name},
                      {"sigma", r.sigma.levels()},
                      {"status", to_string(r.status)},
                      {"worst_residual", r.worst_residual},
                      {"tolerance", r.tolerance},
                      {"cases", r.cases}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace xhermite

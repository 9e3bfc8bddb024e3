#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "xhermite/propagator.hpp"
#include "xhermite/report.hpp"
#include "xhermite/wronskian.hpp"

namespace xhermite {

/// Reproducible uniform sampler; the mapping from raw 64-bit draws to doubles
/// is fixed here so results do not depend on the standard library's
/// distribution implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi);
  /// Uniform in the disk |z| <= radius.
  std::complex<double> in_disk(double radius);

 private:
  std::mt19937_64 rng_;
};

enum class Suite {
  sum_rule,
  lemma,
  parity,
  deltav,
  closed_form,
  schrodinger,
  mehler,
  xmehler,
  green,
  eigen,
  orthonormality,
  umbral,
  wells,
  spectral,
};

/// Parses a comma-separated list of suite names. "all" selects everything,
/// "potential" selects the checks that need a regular potential, "exact"
/// the polynomial identities.
std::set<Suite> parse_suites(const std::string& text);
std::string to_string(Suite s);

/// Single source of truth for check tolerances.
struct Tolerances {
  double closed_form = 1e-12;  // relative
  double schrodinger = 1e-5;
  double schrodinger_order = 0.5;  // |observed order - 2|
  double mehler = 1e-12;
  double xmehler = 1e-9;
  double green = 1e-8;
  double green_bound = 10.0;  // |G| near deleted levels / median |G|
  double eigen = 1e-5;
  double gram = 1e-6;
  double orthonormality = 1e-8;
  double spectral = 1e-10;
};

struct VerifyConfig {
  std::uint64_t seed = 20240611;
  Tolerances tol;
  std::set<Suite> suites = parse_suites("all");

  /// Connection lemma checked for m <= lemma_m_max; negative means 2 sigma[[-1]].
  int lemma_m_max = -1;

  std::vector<std::complex<double>> mehler_lambdas = {0.5};
  int mehler_trunc = 60;
  std::vector<std::complex<double>> xmehler_lambdas = {{0.5, 0.0}, {0.0, 0.6}};
  int xmehler_trunc = 80;

  int closed_form_points = 100;
  int schrodinger_points = 10;
  std::vector<double> fd_steps = {1e-2, 5e-3, 2.5e-3};

  int green_trunc = 200;
  int green_energies = 5;
  double green_x = 0.4;
  double green_y = -0.3;

  int eigen_n_max = 6;
  int spectral_trunc = 80;
};

/// Rejects configurations that break an operation's preconditions, e.g.
/// |lambda| > 0.9 (LambdaTooLarge).
void validate(const VerifyConfig& cfg);

VerificationReport verify_mehler(std::complex<double> lambda,
                                 std::span<const std::pair<double, double>> grid, int n_trunc,
                                 double tolerance);
VerificationReport verify_xmehler(const LevelSequence& sigma, std::complex<double> lambda,
                                  std::span<const std::pair<double, double>> grid, int n_trunc,
                                  double tolerance);
/// 25-point grid on [-1.5, 1.5]^2.
std::vector<std::pair<double, double>> default_mehler_grid();

/// Relative error of k_sigma against the hand-simplified closed form at
/// seeded complex points: |x|, |y| <= 2, Re t in [0.2, 2.9], Im t in [-1, 1].
VerificationReport verify_closed_form(const PropagatorModel& model, int n_points,
                                      std::uint64_t seed, double tolerance);

struct SchrodingerReports {
  VerificationReport residual;
  VerificationReport order;
};

/// Seeded real points x, y in [-1.5, 1.5], t in [0.5, 2.5].
SchrodingerReports verify_schrodinger(const PropagatorModel& model, int n_points,
                                      std::span<const double> steps, std::uint64_t seed,
                                      double tolerance, double order_tolerance);

struct GreenReports {
  VerificationReport agreement;
  VerificationReport deleted_levels;
};

/// Seeded energies Re E in [0, 6], Im E in [0.05, 0.5].
GreenReports verify_green(const PropagatorModel& model, double x, double y, int n_energies,
                          int n_trunc, std::uint64_t seed, double tolerance, double bound);

/// Umbral composition He_n^[a] o He^[b] = He_n^[a+b] and the Appell property.
VerificationReport verify_umbral(int n_max);

/// For sigma = {k, k+1}: V^sigma has exactly k local minima on [-5, 5].
VerificationReport verify_wells(const LevelSequence& sigma);

/// k_sigma against its truncated eigenfunction expansion at t = -i.
VerificationReport verify_spectral(const PropagatorModel& model, int n_trunc,
                                   std::uint64_t seed, double tolerance);

/// Runs the selected suites for every sigma. Errors inside a check become a
/// failed report; sigma-independent checks run once, ahead of the rest.
std::vector<VerificationReport> run_all(std::span<const LevelSequence> sigmas,
                                        const VerifyConfig& cfg);

nlohmann::json to_json(std::span<const VerificationReport> reports);

}  // namespace xhermite

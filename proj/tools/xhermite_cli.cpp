#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "xhermite/connection.hpp"
#include "xhermite/error.hpp"
#include "xhermite/kernels.hpp"
#include "xhermite/parse.hpp"
#include "xhermite/poly_json.hpp"
#include "xhermite/propagator.hpp"
#include "xhermite/render.hpp"
#include "xhermite/verify.hpp"

using namespace xhermite;

namespace {

enum Exit { ok = 0, failed = 1, invalid = 2, singular = 3 };

struct Globals {
  std::vector<std::string> sigma;
  std::string output;
  std::string format = "text";
  std::string seed;
  std::vector<std::string> tolerance;
  std::string trunc;
};

std::string num(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string cnum(std::complex<double> z) { return num(z.real()) + " " + num(z.imag()); }

nlohmann::json cjson(std::complex<double> z) { return {z.real(), z.imag()}; }

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

LevelSequence single_sigma(const Globals& g) {
  if (g.sigma.size() > 1) throw ParseError("this command takes a single --sigma");
  return g.sigma.empty() ? LevelSequence() : LevelSequence::parse(g.sigma.front());
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (g.format == f) return;
  }
  throw ParseError("format '" + g.format + "' is not supported by this command");
}

void apply_tolerances(const std::vector<std::string>& items, Tolerances& tol) {
  const std::map<std::string, double*> fields = {
      {"closed_form", &tol.closed_form},   {"schrodinger", &tol.schrodinger},
      {"schrodinger_order", &tol.schrodinger_order}, {"mehler", &tol.mehler},
      {"xmehler", &tol.xmehler},           {"green", &tol.green},
      {"green_bound", &tol.green_bound},   {"eigen", &tol.eigen},
      {"gram", &tol.gram},                 {"orthonormality", &tol.orthonormality},
      {"spectral", &tol.spectral},
  };
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("tolerance must be name=value, got '" + item + "'");
    const auto it = fields.find(item.substr(0, eq));
    if (it == fields.end()) throw ParseError("unknown tolerance '" + item.substr(0, eq) + "'");
    *it->second = parse_double(std::string_view(item).substr(eq + 1));
  }
}

std::uint64_t parse_seed(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("seed must be a nonnegative integer, got '" + s + "'");
  }
  return v;
}

int cmd_qpoly(const Globals& g) {
  require_format(g, {"text", "json"});
  const QTable q = build_qtable(single_sigma(g));
  Sink sink(g.output);
  if (g.format == "json") {
    sink.out() << to_json(q).dump(2) << "\n";
    return ok;
  }
  sink.out() << "sigma = " << q.sigma.to_string() << "\n";
  for (int k = 0; k < q.size(); ++k) sink.out() << "Q_" << k << " = " << render(q.polys[k]) << "\n";
  return ok;
}

struct PropagatorArgs {
  std::string x = "0", y = "0", t;
  std::string grid_x, grid_y, grid_t, t_imag = "0";
};

int cmd_propagator(const Globals& g, const PropagatorArgs& a) {
  const PropagatorModel model(single_sigma(g));
  Sink sink(g.output);
  const bool grid = !a.grid_x.empty() || !a.grid_y.empty() || !a.grid_t.empty();
  if (!grid) {
    require_format(g, {"text", "json", "csv"});
    if (a.t.empty()) throw ParseError("--t is required");
    const double x = parse_double(a.x), y = parse_double(a.y);
    const cdouble t = parse_complex(a.t);
    const cdouble k = k_sigma(model, x, y, t);
    if (g.format == "json") {
      sink.out() << nlohmann::json{{"sigma", model.sigma().levels()}, {"x", x}, {"y", y},
                                   {"t", cjson(t)}, {"K", cjson(k)}}
                        .dump(2)
                 << "\n";
    } else if (g.format == "csv") {
      sink.out() << "x,y,t_re,t_im,K_re,K_im\n"
                 << num(x) << "," << num(y) << "," << num(t.real()) << "," << num(t.imag()) << ","
                 << num(k.real()) << "," << num(k.imag()) << "\n";
    } else {
      sink.out() << "Re K = " << num(k.real()) << "\nIm K = " << num(k.imag()) << "\n";
    }
    return ok;
  }
  require_format(g, {"csv", "text"});
  const auto axis = [](const std::string& spec, const std::string& fallback) {
    return spec.empty() ? GridSpec{parse_double(fallback), parse_double(fallback), 1}
                        : GridSpec::parse(spec);
  };
  const GridSpec gx = axis(a.grid_x, a.x), gy = axis(a.grid_y, a.y);
  const GridSpec gt = a.grid_t.empty() ? axis("", a.t.empty() ? "1" : a.t) : GridSpec::parse(a.grid_t);
  const double t_im = parse_double(a.t_imag);
  std::vector<GridPoint> pts;
  for (int i = 0; i < gx.count; ++i) {
    for (int j = 0; j < gy.count; ++j) {
      for (int l = 0; l < gt.count; ++l) pts.push_back({gx.at(i), gy.at(j), {gt.at(l), t_im}});
    }
  }
  const auto values = propagator_grid(model, pts);
  sink.out() << "x,y,t_re,t_im,K_re,K_im\n";
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    sink.out() << num(p.x) << "," << num(p.y) << "," << num(p.t.real()) << "," << num(p.t.imag())
               << "," << num(values[i].real()) << "," << num(values[i].imag()) << "\n";
  }
  return ok;
}

int cmd_potential(const Globals& g, const std::string& grid) {
  require_format(g, {"text", "json", "csv"});
  const PotentialModel v = potential(single_sigma(g));
  Sink sink(g.output);
  std::vector<double> xs;
  if (!grid.empty()) {
    const GridSpec gs = GridSpec::parse(grid);
    for (int i = 0; i < gs.count; ++i) xs.push_back(gs.at(i));
  }
  const auto values = potential_grid(v, xs);
  if (g.format == "json") {
    nlohmann::json table = nlohmann::json::array();
    for (size_t i = 0; i < xs.size(); ++i) table.push_back({xs[i], values[i]});
    sink.out() << nlohmann::json{{"sigma", v.sigma.levels()},
                                 {"shift", v.shift},
                                 {"wronskian", to_json(wronskian_of_levels(v.sigma))},
                                 {"numerator", to_json(v.numerator)},
                                 {"denominator", to_json(v.denominator)},
                                 {"rendered", render_potential(v)},
                                 {"grid", table}}
                      .dump(2)
               << "\n";
    return ok;
  }
  if (g.format == "csv") {
    sink.out() << "x,V\n";
    for (size_t i = 0; i < xs.size(); ++i) sink.out() << num(xs[i]) << "," << num(values[i]) << "\n";
    return ok;
  }
  if (xs.empty()) {
    sink.out() << "sigma = " << v.sigma.to_string() << "\n"
               << "W(x) = " << render_terms(primitive_part(wronskian_of_levels(v.sigma)).primitive)
               << "\n"
               << "V(x) = " << render_potential(v) << "\n";
  } else {
    // gnuplot data table
    sink.out() << "# sigma = " << v.sigma.to_string() << "\n# x V(x)\n";
    for (size_t i = 0; i < xs.size(); ++i) sink.out() << num(xs[i]) << " " << num(values[i]) << "\n";
  }
  return ok;
}

struct GreenArgs {
  std::string x = "0.4", y = "-0.3", energy;
};

int cmd_green(const Globals& g, const GreenArgs& a) {
  require_format(g, {"text", "json"});
  const LevelSequence sigma = single_sigma(g);
  if (!sigma.is_krein_adler()) throw NotKreinAdler(sigma.to_string());
  if (a.energy.empty()) throw ParseError("--energy is required");
  const PropagatorModel model(sigma);
  const double x = parse_double(a.x), y = parse_double(a.y);
  const cdouble e = parse_complex(a.energy);
  const int n_trunc = g.trunc.empty() ? 200 : parse_int(g.trunc);
  const GreenValue v = green_function(model, x, y, e, n_trunc);
  Sink sink(g.output);
  if (g.format == "json") {
    sink.out() << nlohmann::json{{"sigma", sigma.levels()}, {"x", x}, {"y", y},
                                 {"energy", cjson(e)}, {"n_trunc", n_trunc},
                                 {"relation", cjson(v.relation)}, {"direct", cjson(v.direct)}}
                      .dump(2)
               << "\n";
  } else {
    sink.out() << "G (connection relation) = " << cnum(v.relation) << "\n"
               << "G (spectral sum)        = " << cnum(v.direct) << "\n"
               << "difference              = " << num(std::abs(v.relation - v.direct)) << "\n";
  }
  return ok;
}

void print_summary(std::ostream& os, std::span<const VerificationReport> reports) {
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : reports) {
    if (r.status == Status::skipped) {
      ++skip;
      os << "SKIP  " << r.check_name << " " << r.sigma.to_string() << "  skipped: " << r.note << "\n";
      continue;
    }
    (r.passed() ? pass : fail)++;
    os << (r.passed() ? "PASS  " : "FAIL  ") << r.check_name << " " << r.sigma.to_string()
       << "  residual=" << num(r.worst_residual) << " tol=" << num(r.tolerance);
    if (!r.note.empty()) os << "  " << r.note;
    os << "\n";
  }
  os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
}

struct VerifyArgs {
  std::string suite = "all";
  std::vector<std::string> lambda;
  std::vector<std::string> steps;
  std::string points;
  std::string lemma_m_max;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  require_format(g, {"text", "json"});
  VerifyConfig cfg;
  cfg.suites = parse_suites(a.suite);
  if (!g.seed.empty()) cfg.seed = parse_seed(g.seed);
  apply_tolerances(g.tolerance, cfg.tol);
  if (!g.trunc.empty()) {
    const int t = parse_int(g.trunc);
    cfg.mehler_trunc = cfg.xmehler_trunc = cfg.green_trunc = cfg.spectral_trunc = t;
  }
  if (!a.lambda.empty()) {
    cfg.mehler_lambdas.clear();
    for (const auto& l : a.lambda) cfg.mehler_lambdas.push_back(parse_complex(l));
    cfg.xmehler_lambdas = cfg.mehler_lambdas;
  }
  if (!a.steps.empty()) {
    cfg.fd_steps.clear();
    for (const auto& s : a.steps) cfg.fd_steps.push_back(parse_double(s));
  }
  if (!a.points.empty()) cfg.closed_form_points = cfg.schrodinger_points = parse_int(a.points);
  if (!a.lemma_m_max.empty()) cfg.lemma_m_max = parse_int(a.lemma_m_max);
  validate(cfg);

  std::vector<LevelSequence> sigmas;
  for (const auto& s : g.sigma) sigmas.push_back(LevelSequence::parse(s));
  if (sigmas.empty()) sigmas = {{1, 2}, {2, 3}, {3, 4}, {1, 2, 3, 4}};

  const auto reports = run_all(sigmas, cfg);
  const std::string json = to_json(reports).dump(2);
  if (!g.output.empty()) {
    Sink sink(g.output);
    sink.out() << json << "\n";
  }
  if (g.format == "json" && g.output.empty()) {
    std::cout << json << "\n";
  } else {
    print_summary(std::cout, reports);
  }
  for (const auto& r : reports) {
    if (r.status == Status::fail) return failed;
  }
  return ok;
}

struct XMehlerArgs {
  std::string lambda = "0.5";
  std::string x, y;
};

int cmd_xmehler(const Globals& g, const XMehlerArgs& a) {
  require_format(g, {"text", "json"});
  const LevelSequence sigma = single_sigma(g);
  Tolerances tol;
  apply_tolerances(g.tolerance, tol);
  const cdouble lambda = parse_complex(a.lambda);
  const int n_trunc = g.trunc.empty() ? 80 : parse_int(g.trunc);
  std::vector<std::pair<double, double>> grid;
  if (a.x.empty() != a.y.empty()) throw ParseError("--x and --y go together");
  if (a.x.empty()) {
    grid = default_mehler_grid();
  } else {
    grid.emplace_back(parse_double(a.x), parse_double(a.y));
  }
  const VerificationReport r = verify_xmehler(sigma, lambda, grid, n_trunc, tol.xmehler);
  Sink sink(g.output);
  if (g.format == "json") {
    sink.out() << to_json(r).dump(2) << "\n";
  } else {
    print_summary(sink.out(), std::span(&r, 1));
  }
  return r.passed() ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connection polynomials and propagators of rationally extended oscillators"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--sigma", g.sigma,
                 "Level sequence, e.g. 1,2 (verify accepts the flag several times)");
  app.add_option("--output", g.output, "Write the result to this file");
  app.add_option("--format", g.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for sampled evaluation points");
  app.add_option("--tolerance", g.tolerance, "Tolerance override name=value (repeatable)");
  app.add_option("--trunc", g.trunc, "Truncation order of spectral sums");

  auto* qpoly = app.add_subcommand("qpoly", "Print the connection polynomials Q_k");

  PropagatorArgs pa;
  auto* prop = app.add_subcommand("propagator", "Evaluate K^sigma(x, y; t)");
  prop->add_option("--x", pa.x, "x (default 0)");
  prop->add_option("--y", pa.y, "y (default 0)");
  prop->add_option("--t", pa.t, "time, may be complex such as 1-0.2i");
  prop->add_option("--grid-x", pa.grid_x, "start:stop:count");
  prop->add_option("--grid-y", pa.grid_y, "start:stop:count");
  prop->add_option("--grid-t", pa.grid_t, "start:stop:count (real part of t)");
  prop->add_option("--t-imag", pa.t_imag, "imaginary part of t on a grid");

  std::string pot_grid;
  auto* pot = app.add_subcommand("potential", "Print V^sigma and optionally tabulate it");
  pot->add_option("--grid", pot_grid, "start:stop:count");

  GreenArgs ga;
  auto* green = app.add_subcommand("green", "Green function by connection relation and spectral sum");
  green->add_option("--x", ga.x, "x (default 0.4)");
  green->add_option("--y", ga.y, "y (default -0.3)");
  green->add_option("--energy", ga.energy, "complex energy off the spectrum, e.g. 0.1+0.3i");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 if any check fails");
  verify->add_option("--suite", va.suite, "all | exact | potential | comma list of suites");
  verify->add_option("--lambda", va.lambda, "Mehler parameters (repeatable, complex allowed)");
  verify->add_option("--steps", va.steps, "finite-difference steps, coarse to fine (repeatable)");
  verify->add_option("--points", va.points, "sampled points for closed-form and PDE checks");
  verify->add_option("--lemma-m-max", va.lemma_m_max, "largest m in the connection lemma");

  XMehlerArgs xa;
  auto* xm = app.add_subcommand("xmehler", "Check the exceptional Mehler formula");
  xm->add_option("--lambda", xa.lambda, "lambda, |lambda| <= 0.9 (default 0.5)");
  xm->add_option("--x", xa.x, "single point x (default: 5x5 grid)");
  xm->add_option("--y", xa.y, "single point y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid;
  }

  try {
    if (qpoly->parsed()) return cmd_qpoly(g);
    if (prop->parsed()) return cmd_propagator(g, pa);
    if (pot->parsed()) return cmd_potential(g, pot_grid);
    if (green->parsed()) return cmd_green(g, ga);
    if (verify->parsed()) return cmd_verify(g, va);
    if (xm->parsed()) return cmd_xmehler(g, xa);
  } catch (const SingularTime& e) {
    std::cerr << e.what() << "\n";
    return singular;
  } catch (const InvalidSequence& e) {
    std::cerr << e.what() << "\n";
    return invalid;
  } catch (const NotKreinAdler& e) {
    std::cerr << e.what() << "\n";
    return invalid;
  } catch (const LambdaTooLarge& e) {
    std::cerr << e.what() << "\n";
    return invalid;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return invalid;
  } catch (const NearPole& e) {
    std::cerr << e.what() << "\n";
    return invalid;
  } catch (const TruncationTooSmall& e) {
    std::cerr << e.what() << "\n";
    return invalid;
  } catch (const WronskianZero& e) {
    std::cerr << e.what() << "\n";
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return failed;
  }
  return failed;
}

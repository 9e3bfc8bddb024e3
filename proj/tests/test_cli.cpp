#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "xhermite/connection.hpp"
#include "xhermite/parse.hpp"

using namespace xhermite;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(XHERMITE_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("xhermite_cli_" + name)).string();
}

}  // namespace

TEST_CASE("qpoly") {
  const Run r = run("qpoly --sigma 1,2");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "sigma = {1,2}\nQ_0 = 1/(2π)\nQ_1 = -x*y/(2π)\nQ_2 = (x^2*y^2 + x^2 + y^2 - 1)/(4π)\n"
        "Q_3 = x*y/(2π)\n");
  const Run b = run("qpoly --sigma 1");
  CHECK(b.out == "sigma = {1}\nQ_0 = 1/√(2π)\nQ_1 = -x*y/√(2π)\nQ_2 = -1/√(2π)\n");
  const Run bad = run("qpoly --sigma 2,1");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("sequence must be strictly increasing") != std::string::npos);
  CHECK(run("qpoly --sigma 1,x").code == 2);
  CHECK(run("qpoly --sigma 1,2 --format csv").code == 2);
}

TEST_CASE("qpoly JSON round trip and golden files") {
  for (const auto& [sigma, file] : std::vector<std::pair<std::string, std::string>>{
           {"1,2", "qtable_1_2.json"}, {"2,3", "qtable_2_3.json"}, {"1", "qtable_1.json"}}) {
    const std::string path = temp_path(file);
    REQUIRE(run("qpoly --sigma " + sigma + " --format json --output " + path).code == 0);
    std::ifstream produced(path), golden(std::string(XHERMITE_GOLDEN_DIR) + "/" + file);
    const auto pj = nlohmann::json::parse(produced);
    CHECK(pj == nlohmann::json::parse(golden));
    CHECK(qtable_from_json(pj) == build_qtable(LevelSequence::parse(sigma)));
    std::filesystem::remove(path);
  }
}

TEST_CASE("propagator") {
  const Run r = run("propagator --sigma 1,2 --x 0.5 --y -0.3 --t 1.0 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  // 40-digit evaluation of the printed closed form
  CHECK(std::abs(j["K"][0].get<double>() - 0.54251735408367685896) < 1e-15);
  CHECK(std::abs(j["K"][1].get<double>() + 0.30122939011168827309) < 1e-15);

  const Run t = run("propagator --sigma 2,3 --x 0.5 --y -0.3 --t 1.5707963267948966");
  CHECK(t.code == 0);
  CHECK(t.out.find("Re K = 0.427171395960785") != std::string::npos);

  const Run s = run("propagator --sigma 1,2 --x 0.5 --y 0.1 --t 0");
  CHECK(s.code == 3);
  CHECK(s.out.find("SingularTime") != std::string::npos);
}

TEST_CASE("propagator grid CSV") {
  const Run r = run("propagator --sigma 1,2 --grid-x -1:1:3 --grid-t 0.5:1.5:2 --y 0.2 --format csv");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,t_re,t_im,K_re,K_im");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
    const auto last = line.substr(line.rfind(',') + 1);
    CHECK_NOTHROW(parse_double(last));
  }
  CHECK(rows == 6);
}

TEST_CASE("potential") {
  const Run r = run("potential --sigma 1,2");
  CHECK(r.code == 0);
  CHECK(r.out.find("V(x) = x^2/4 + 2 + 4*(x^2 - 1)/(x^2 + 1)^2") != std::string::npos);
  const Run r23 = run("potential --sigma 2,3");
  CHECK(r23.out.find("W(x) = x^4 + 3") != std::string::npos);
  CHECK(r23.out.find("V(x) = x^2/4 + 2 + 8*(x^6 - 9*x^2)/(x^4 + 3)^2") != std::string::npos);
  CHECK(run("potential --sigma 1").code == 2);
  const Run g = run("potential --sigma 2,3 --grid -2:2:5");
  CHECK(g.code == 0);
  CHECK(g.out.rfind("# sigma = {2,3}\n# x V(x)\n-2 ", 0) == 0);
}

TEST_CASE("green") {
  const Run r = run("green --sigma 1,2 --x 0.4 --y -0.3 --energy 0.1+0.3i --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["direct"][0].get<double>() - 0.86162065610119220857) < 1e-12);
  CHECK(run("green --sigma 1,2 --energy 0.5").code == 2);
  CHECK(run("green --sigma 1 --energy 0.1+0.3i").code == 2);
}

TEST_CASE("verify and xmehler") {
  const Run skipped = run("verify --sigma 1 --suite potential");
  CHECK(skipped.code == 0);
  CHECK(skipped.out.find("skipped: non-Krein-Adler") != std::string::npos);

  const Run big = run("verify --suite mehler --lambda 0.95");
  CHECK(big.code == 2);
  CHECK(big.out.find("LambdaTooLarge") != std::string::npos);

  const std::string path = temp_path("report.json");
  const Run ok = run("verify --sigma 1,2 --sigma 2,3 --suite exact,closed --output " + path);
  CHECK(ok.code == 0);
  std::ifstream f(path);
  const auto report = nlohmann::json::parse(f);
  CHECK(report.is_array());
  CHECK(report.size() > 5);
  std::filesystem::remove(path);

  // a failing check never exits 0
  CHECK(run("verify --sigma 1,2 --suite mehler --tolerance mehler=0 --lambda 0.9 --trunc 5").code == 1);
  CHECK(run("verify --suite mehler --tolerance bogus=1").code == 2);

  CHECK(run("xmehler --sigma 2,3 --lambda 0.6i").code == 0);
  CHECK(run("xmehler --sigma 1,2 --lambda 0.5 --x 0.3 --y 0.8 --format json").code == 0);
  CHECK(run("xmehler --sigma 1,2 --lambda 0.91").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("qpoly --format yaml").code == 2);
  CHECK(run("--help").code == 0);
}

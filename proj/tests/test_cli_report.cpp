#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"

#include "trigroots/errors.hpp"
#include "trigroots/io.hpp"
#include "trigroots/report.hpp"

using namespace trigroots;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("trigroots_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string(TRIGROOTS_CLI) + " " + args + " > " + (scratch() / "stdout.txt").string() +
                          " 2> " + (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

Polynomial z_pow_minus_one(int n) {
  std::vector<Complex> c(n + 1);
  c[0] = -1.0;
  c[n] = 1.0;
  return Polynomial(c);
}

}  // namespace

TEST_CASE("fejer(50) report") {
  const AnalysisReport r = analyze(input_from_family({FamilyName::fejer, 50}));
  CHECK_FALSE(r.advisory());
  CHECK(r.n == 50);
  CHECK(r.trig.X == 50);
  CHECK(r.trig.tangential == 50);
  REQUIRE(r.clusters.size() == 3);
  CHECK(r.clusters[0].alpha == 0.5);
  CHECK(r.clusters[0].I == 0);
  for (Complex z : r.roots.roots) CHECK(std::abs(z) >= 1.0 - 1e-8);
  CHECK(r.inside_root_count == 0);
  CHECK(r.scale == 2.0);
  REQUIRE(r.et_bound);
  CHECK(r.discrepancy <= *r.et_bound);
  CHECK(r.jensen.within_contract);
  // Frozen after the first verified run.
  CHECK(r.discrepancy == doctest::Approx(0.046653891073359495).epsilon(1e-9));
  CHECK(r.h->value == doctest::Approx(1.7351774548959182).epsilon(1e-9));
  CHECK(r.log_integral.value == doctest::Approx(20.349216865318397).epsilon(1e-9));
}

TEST_CASE("young(50) report") {
  const AnalysisReport r = analyze(input_from_family({FamilyName::young, 50}));
  CHECK(r.trig.X == 0);
  const double ref = kTwoPi * std::log(50.0);
  CHECK(r.log_integral.value >= ref / 3);
  CHECK(r.log_integral.value <= ref * 3);
}

TEST_CASE("roots of unity report") {
  AnalysisInput in;
  in.raw = z_pow_minus_one(100);
  const AnalysisReport r = analyze(in);
  CHECK(std::abs(r.discrepancy - 0.01) < 1e-10);
  for (const auto& c : r.clusters) CHECK(c.I == 0);
  CHECK(r.origin_root_count == 0);
}

TEST_CASE("a_0 = 0 leaves h undefined without failing") {
  AnalysisInput in;
  in.raw = Polynomial{0.0, -1.0, 0.0, 1.0};
  const AnalysisReport r = analyze(in);
  CHECK_FALSE(r.h);
  CHECK_FALSE(r.et_bound);
  CHECK(r.origin_root_count == 1);
  const json doc = json::parse(to_json(r));
  CHECK(doc["h"].is_null());
  CHECK(doc["discrepancy"]["et_bound"].is_null());
}

TEST_CASE("stage errors carry the stage name") {
  AnalysisInput in;
  in.raw = Polynomial{3.0};
  try {
    analyze(in);
    FAIL("expected an error");
  } catch (const DegenerateInputError& e) {
    CHECK(std::string(e.what()).find("normalize") == 0);
  }
  AnalysisConfig cfg;
  cfg.alphas = {1.5};
  in.raw = Polynomial{1.0, 0.0, 1.0};
  CHECK_THROWS_WITH_AS(analyze(in, cfg), doctest::Contains("clustering_count"), ParameterError);
}

TEST_CASE("uncertified roots make the report advisory") {
  AnalysisConfig cfg;
  cfg.tol = 1e-30;
  const AnalysisReport r = analyze(input_from_family({FamilyName::fejer, 30}), cfg);
  CHECK(r.advisory());
  const json doc = json::parse(to_json(r));
  CHECK(doc["status"] == "advisory");
  CHECK_FALSE(doc["notes"].empty());
}

TEST_CASE("report JSON") {
  const AnalysisReport r = analyze(input_from_family({FamilyName::poisson, 30, 0.5}));
  const std::string a = to_json(r);
  CHECK(a == to_json(analyze(input_from_family({FamilyName::poisson, 30, 0.5}))));
  const json doc = json::parse(a);
  CHECK(doc["input"]["family"]["name"] == "poisson");
  CHECK(doc["input"]["family"]["rho"] == 0.5);
  CHECK(doc["config"]["alphas"].size() == 3);
  CHECK(doc["roots"]["values"].size() == 30);
  CHECK(doc["coefficients"].size() == 31);
  CHECK(doc["clustering"].size() == 3);
  CHECK(doc["h"]["error_estimate"].is_number());
  CHECK(doc["log_integral"]["nodes"].is_number());
  CHECK_FALSE(doc.contains("timings_seconds"));
  // Doubles go out with 17 significant digits.
  CHECK(a.find(format_double(r.discrepancy)) != std::string::npos);
  CHECK(doc["discrepancy"]["value"].get<double>() == r.discrepancy);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("coefficient files") {
  const Polynomial p{Complex(0.1, -1.0 / 3.0), Complex(std::numbers::pi, 1e-300), 1.0};
  CHECK(parse_coefficients(format_coefficients(p)) == p);
  CHECK(parse_coefficients("{\"terms\": [[3, 1, 0], [0, -1, 0], [3, 1, 0]]}") == Polynomial{-1.0, 0.0, 0.0, 2.0});
  CHECK(parse_coefficients("[[1, 0], [0, 1]]") == Polynomial{1.0, Complex(0, 1)});
  CHECK_THROWS_AS(parse_coefficients("[[1, 0], [0]]"), IoError);
  CHECK_THROWS_AS(parse_coefficients("[1, 2"), IoError);
  CHECK_THROWS_AS(parse_coefficients("{\"terms\": [[-1, 1, 0]]}"), IoError);
  CHECK_THROWS_AS(parse_coefficients("[]"), IoError);
  CHECK_THROWS_AS(read_coefficients(path("missing.json")), IoError);
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("root dumps") {
  const RootSet rs = find_roots(Polynomial{1.0, 0.0, 0.0, 0.0, 1.0});
  const std::string dump = format_root_dump(rs);
  const std::vector<Complex> back = parse_root_dump(dump);
  REQUIRE(back.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(back[k] == rs.roots[k]);
  std::istringstream in(dump);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::istringstream cols(line);
  int n = 0;
  for (double x; cols >> x;) ++n;
  CHECK(n == 5);
  CHECK_THROWS_AS(parse_root_dump("1.0\n"), IoError);
}

TEST_CASE("svg output") {
  const RootSet rs = find_roots(Polynomial{1.0, 0.0, 0.0, 0.0, 1.0});
  const std::string svg = render_svg(rs.roots, "z^4 + 1");
  std::size_t markers = 0;
  for (std::size_t at = svg.find("class=\"root\""); at != std::string::npos; at = svg.find("class=\"root\"", at + 1))
    ++markers;
  CHECK(markers == 4);
  CHECK(svg.find("class=\"unit\"") != std::string::npos);
  CHECK(svg.find("z^4 + 1") != std::string::npos);
}

TEST_CASE("cli: family, analyze, plot") {
  REQUIRE(run("family --name fejer --n 20 --out " + path("f20.json")) == 0);
  CHECK(read_coefficients(path("f20.json")) == family({FamilyName::fejer, 20}).poly);

  REQUIRE(run("analyze --coeffs " + path("f20.json") + " --out " + path("r1.json") + " --roots-out " +
              path("roots.txt")) == 0);
  REQUIRE(run("analyze --coeffs " + path("f20.json") + " --out " + path("r2.json")) == 0);
  CHECK(read_text(path("r1.json")) == read_text(path("r2.json")));
  const json doc = json::parse(read_text(path("r1.json")));
  CHECK(doc["real_roots"]["X"] == 20);
  CHECK(doc["status"] == "certified");
  CHECK(parse_root_dump(read_text(path("roots.txt"))).size() == 20);

  REQUIRE(run("plot --in " + path("r1.json") + " --out " + path("a.svg")) == 0);
  REQUIRE(run("plot --in " + path("roots.txt") + " --out " + path("b.svg") + " --title fejer20") == 0);
  CHECK(read_text(path("a.svg")).find("n = 20") != std::string::npos);
  CHECK(read_text(path("b.svg")).find("fejer20") != std::string::npos);

  REQUIRE(run("analyze --family young --n 12 --alpha 0.5,0.6 --factor 4 --seed 9 --timings --out " +
              path("y.json")) == 0);
  const json y = json::parse(read_text(path("y.json")));
  CHECK(y["config"]["alphas"].size() == 2);
  CHECK(y["config"]["factor"] == 4.0);
  CHECK(y.contains("timings_seconds"));

  REQUIRE(run("analyze --family fejer --n 20 --perturb 1 --out " + path("p.json")) == 0);
  const json pj = json::parse(read_text(path("p.json")));
  CHECK(pj["input"]["perturb_psi"] == 1.0);
  const auto c = read_coefficients(path("f20.json"));
  const Polynomial expect = add_rotated_copy(family_raw({FamilyName::fejer, 20}), 1.0);
  CHECK(parse_coefficients(pj.dump()) == expect);
  (void)c;
}

TEST_CASE("cli: echoed coefficients reproduce the numeric fields") {
  REQUIRE(run("analyze --family poisson --n 25 --rho 0.6 --out " + path("orig.json")) == 0);
  json orig = json::parse(read_text(path("orig.json")));
  write_text(path("echo.json"), orig["coefficients"].dump());
  REQUIRE(run("analyze --coeffs " + path("echo.json") + " --out " + path("again.json")) == 0);
  json again = json::parse(read_text(path("again.json")));
  orig.erase("input");
  again.erase("input");
  CHECK(orig == again);
}

TEST_CASE("cli: exit codes") {
  CHECK(run("") == 2);
  CHECK(run("analyze --family dirichlet --n 5 --out " + path("x.json")) == 2);
  CHECK(run("analyze --family fejer --out " + path("x.json")) == 2);
  CHECK(run("analyze --coeffs " + path("nope.json") + " --out " + path("x.json")) == 2);
  CHECK(run("analyze --coeffs a --family fejer --n 3 --out " + path("x.json")) == 2);
  CHECK(run("family --name poisson --n 5 --rho 2 --out " + path("x.json")) == 2);
  write_text(path("bad.json"), "[[1, 0], [2]]");
  CHECK(run("analyze --coeffs " + path("bad.json") + " --out " + path("x.json")) == 2);
  CHECK(run("--version") == 0);
}

TEST_CASE("cli: verify") {
  CHECK(run("verify") == 0);
  const std::string table = read_text(path("stdout.txt"));
  CHECK(table.find("FAIL") == std::string::npos);
  CHECK(table.find("drop_sweep") != std::string::npos);
  CHECK(table.find("erdos_turan") != std::string::npos);
  CHECK(run("verify --seed 77") == 0);
  // A 1e-14 quadrature target cannot be met next to the circle.
  CHECK(run("verify --strict") == 1);
  CHECK(read_text(path("stdout.txt")).find("jensen_near_circle") != std::string::npos);
}

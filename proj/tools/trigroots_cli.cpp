#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trigroots/errors.hpp"
#include "trigroots/io.hpp"
#include "trigroots/report.hpp"

namespace {

using namespace trigroots;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct AnalyzeArgs {
  std::string coeffs;
  std::string family;
  int n = 0;
  double rho = 0.5;
  std::vector<double> alphas{0.5, 0.75, 0.9};
  double factor = 5.0;
  double tol = 1e-10;
  unsigned long long seed = 0x5eed;
  std::optional<double> perturb;
  std::string out;
  std::string roots_out;
  bool timings = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  AnalysisInput in;
  if (!a.coeffs.empty()) {
    in = input_from_file(a.coeffs);
    if (a.perturb) {
      in.raw = add_rotated_copy(in.raw, *a.perturb);
      in.perturb = a.perturb;
    }
  } else {
    in = input_from_family(FamilySpec{family_from_string(a.family), a.n, a.rho}, a.perturb);
  }
  AnalysisConfig cfg;
  cfg.alphas = a.alphas;
  cfg.factor = a.factor;
  cfg.tol = a.tol;
  cfg.seed = a.seed;
  cfg.timings = a.timings;
  const AnalysisReport rep = analyze(in, cfg);
  write_text(a.out, to_json(rep));
  if (!a.roots_out.empty()) write_text(a.roots_out, format_root_dump(rep.roots));
  std::cerr << "n=" << rep.n << " X=" << rep.trig.X << " discrepancy=" << format_double(rep.discrepancy)
            << " status=" << (rep.advisory() ? "advisory" : "certified") << "\n";
  return kOk;
}

int cmd_plot(const std::string& in_path, const std::string& out_path, const std::string& title) {
  const std::string text = read_text(in_path);
  std::vector<Complex> roots;
  std::string caption = title;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
      for (const auto& z : doc.at("roots").at("values")) roots.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
      if (caption.empty()) caption = doc.at("input").at("label").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw IoError(std::string("report: ") + e.what());
    }
  } else {
    roots = parse_root_dump(text);
  }
  if (roots.empty()) throw IoError("plot: no roots in " + in_path);
  if (caption.empty()) caption = "roots";
  caption += ", n = " + std::to_string(roots.size());
  write_text(out_path, render_svg(roots, caption));
  return kOk;
}

int cmd_verify(unsigned long long seed, bool strict) {
  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.strict = strict;
  const auto rows = run_verify(cfg);
  std::cout << format_verify_table(rows);
  for (const auto& r : rows)
    if (!r.pass) return kCheckFailed;
  return kOk;
}

int cmd_family(const std::string& name, int n, double rho, const std::string& out) {
  const FamilyPolynomial f = family(FamilySpec{family_from_string(name), n, rho});
  write_coefficients(out, f.poly);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root statistics of complex polynomials against their trigonometric real parts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", trigroots::kToolVersion);

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Full analysis report for a coefficient file or a family");
  auto* o_coeffs = analyze->add_option("--coeffs", aa.coeffs, "Coefficient file");
  auto* o_family = analyze->add_option("--family", aa.family, "fejer, poisson or young");
  o_coeffs->excludes(o_family);
  analyze->add_option("--n", aa.n, "Family degree");
  analyze->add_option("--rho", aa.rho, "Poisson parameter in (0, 1)");
  analyze->add_option("--alpha", aa.alphas, "Interval exponents")->delimiter(',');
  analyze->add_option("--factor", aa.factor, "Dense-interval factor");
  analyze->add_option("--tol", aa.tol, "Root residual tolerance");
  analyze->add_option("--seed", aa.seed, "Initial-guess seed");
  analyze->add_option("--perturb", aa.perturb, "Add the copy p(e^{i psi} z)");
  analyze->add_option("--out", aa.out, "Report path")->required();
  analyze->add_option("--roots-out", aa.roots_out, "Also write a root dump");
  analyze->add_flag("--timings", aa.timings, "Include stage timings");

  std::string plot_in, plot_out, plot_title;
  auto* plot = app.add_subcommand("plot", "SVG of the roots from a report or root dump");
  plot->add_option("--in", plot_in, "Report or root dump")->required();
  plot->add_option("--out", plot_out, "SVG path")->required();
  plot->add_option("--title", plot_title, "Caption");

  unsigned long long verify_seed = trigroots::VerifyConfig{}.seed;
  bool strict = false;
  auto* verify = app.add_subcommand("verify", "Run the numerical lemma and property checks");
  verify->add_option("--seed", verify_seed, "Random draw seed");
  verify->add_flag("--strict", strict, "Quadrature target 1e-14");

  std::string fam_name, fam_out;
  int fam_n = 0;
  double fam_rho = 0.5;
  auto* fam = app.add_subcommand("family", "Write a normalized family member as a coefficient file");
  fam->add_option("--name", fam_name, "fejer, poisson or young")->required();
  fam->add_option("--n", fam_n, "Degree")->required();
  fam->add_option("--rho", fam_rho, "Poisson parameter in (0, 1)");
  fam->add_option("--out", fam_out, "Coefficient file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      if (aa.coeffs.empty() && aa.family.empty()) throw trigroots::ParameterError("analyze: need --coeffs or --family");
      if (!aa.family.empty() && aa.n < 1) throw trigroots::ParameterError("analyze: --family needs --n >= 1");
      return cmd_analyze(aa);
    }
    if (*plot) return cmd_plot(plot_in, plot_out, plot_title);
    if (*verify) return cmd_verify(verify_seed, strict);
    if (*fam) return cmd_family(fam_name, fam_n, fam_rho, fam_out);
  } catch (const trigroots::SingularInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const trigroots::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

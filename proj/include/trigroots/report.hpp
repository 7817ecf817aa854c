#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigroots/circle_integrals.hpp"
#include "trigroots/discrepancy.hpp"
#include "trigroots/lemmas.hpp"
#include "trigroots/polynomial.hpp"
#include "trigroots/roots.hpp"
#include "trigroots/trig_roots.hpp"

namespace trigroots {

inline constexpr const char* kToolVersion = "1.0.0";

struct AnalysisConfig {
  std::vector<double> alphas{0.5, 0.75, 0.9};
  double factor = 5.0;
  double tol = 1e-10;
  unsigned long long seed = 0x5eed;
  double rel_target = 1e-6;
  double largeness = 0.01;
  // Wall-clock stage timings vary run to run, so they are opt-in.
  bool timings = false;
};

struct AnalysisInput {
  Polynomial raw;  // as given, before leading normalization
  std::optional<FamilySpec> family;
  std::optional<double> perturb;  // a_k -> a_k (1 + e^{i k psi})
  std::string label;
};

// Reads a coefficient file.
AnalysisInput input_from_file(const std::string& path);
AnalysisInput input_from_family(const FamilySpec& spec, std::optional<double> perturb = std::nullopt);

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct CensusEntry {
  double alpha = 0;
  RegionCensus census;
};

struct AnalysisReport {
  AnalysisInput input;
  AnalysisConfig config;
  std::uint64_t input_hash = 0;
  double scale = 1;
  Polynomial poly;  // leading-normalized
  int n = 0;
  RootSet roots;
  int origin_root_count = 0;
  int inside_root_count = 0;  // 0 < |z| < 1
  std::optional<CircleIntegralResult> h;  // empty when a_0 = 0
  CircleIntegralResult log_integral;
  TrigRootReport trig;
  double discrepancy = 0;
  std::optional<double> et_bound;
  std::vector<ClusterReport> clusters;
  std::vector<CensusEntry> census;  // one per chosen interval, per alpha
  JensenCheck jensen;
  GapStatistics gaps;
  std::vector<StageTiming> timings;
  std::vector<std::string> notes;

  bool advisory() const { return !roots.certified; }
};

// normalize -> find_roots -> angular_sample -> {h, log integral, X,
// discrepancy, clustering per alpha, Jensen}. Errors carry the stage name.
AnalysisReport analyze(const AnalysisInput& input, const AnalysisConfig& config = {});

// Structured JSON text, doubles at 17 significant digits; byte-identical for
// identical inputs when timings are off.
std::string to_json(const AnalysisReport& report);

// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string& bytes);

struct VerifyConfig {
  unsigned long long seed = 20240611;
  // Tightens the Jensen quadrature target to 1e-14; near-circle cases are
  // then expected to come back unconverged.
  bool strict = false;
};

std::vector<LemmaCheckResult> run_verify(const VerifyConfig& config = {});
std::string format_verify_table(const std::vector<LemmaCheckResult>& rows);

// Root plot: unit circle, one marker per root, equal axes, a caption.
std::string render_svg(const std::vector<Complex>& roots, const std::string& caption);

}  // namespace trigroots

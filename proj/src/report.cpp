#include "trigroots/report.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "json.hpp"

#include "trigroots/errors.hpp"
#include "trigroots/io.hpp"
#include "trigroots/sampling.hpp"

namespace trigroots {

using ojson = nlohmann::ordered_json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxCensusPerAlpha = 32;

template <class F>
auto run_stage(const char* name, std::vector<StageTiming>& timings, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto tag = [&](const std::exception& e) { return std::string(name) + ": " + e.what(); };
  try {
    auto result = f();
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    timings.push_back({name, d.count()});
    return result;
  } catch (const ParameterError& e) {
    throw ParameterError(tag(e));
  } catch (const DegenerateInputError& e) {
    throw DegenerateInputError(tag(e));
  } catch (const SingularInputError& e) {
    throw SingularInputError(tag(e));
  } catch (const IoError& e) {
    throw IoError(tag(e));
  } catch (const Error& e) {
    throw Error(tag(e));
  }
}

ojson pair(Complex z) { return ojson::array({z.real(), z.imag()}); }

ojson integral_json(const CircleIntegralResult& r) {
  return {{"value", r.value},
          {"error_estimate", r.error_estimate},
          {"converged", r.converged},
          {"nodes", r.nodes_used},
          {"refined_windows", r.refined_windows}};
}

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void dump(const ojson& j, std::string& out, int indent) {
  const std::string pad(2 * (indent + 1), ' ');
  const std::string close(2 * indent, ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad + ojson(it.key()).dump() + ": ";
        dump(it.value(), out, indent + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += close + "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric tuples stay on one line.
      const bool flat = j.size() <= 3 && std::all_of(j.begin(), j.end(), [](const ojson& e) { return e.is_number(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(j[i], out, indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        dump(j[i], out, indent + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += close + "]";
      return;
    }
    case ojson::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

AnalysisInput input_from_file(const std::string& path) {
  AnalysisInput in;
  in.raw = read_coefficients(path);
  in.label = "coefficients";
  return in;
}

AnalysisInput input_from_family(const FamilySpec& spec, std::optional<double> perturb) {
  AnalysisInput in;
  in.raw = family_raw(spec);
  in.family = spec;
  in.label = to_string(spec.name) + "(" + std::to_string(spec.n) + ")";
  if (perturb) {
    in.raw = add_rotated_copy(in.raw, *perturb);
    in.perturb = perturb;
    in.label += " + rotated copy";
  }
  return in;
}

AnalysisReport analyze(const AnalysisInput& input, const AnalysisConfig& config) {
  AnalysisReport rep;
  rep.input = input;
  rep.config = config;
  rep.input_hash = fnv1a64(format_coefficients(input.raw));
  auto& t = rep.timings;

  run_stage("normalize", t, [&] {
    if (input.raw.degree() < 1) throw DegenerateInputError("degree must be at least 1");
    rep.poly = normalize_leading(input.raw);
    rep.scale = std::abs(input.raw.leading());
    rep.n = rep.poly.degree();
    return 0;
  });
  run_stage("find_roots", t, [&] {
    RootOptions ro;
    ro.tol = config.tol;
    ro.seed = config.seed;
    rep.roots = find_roots(rep.poly, ro);
    return 0;
  });
  if (!rep.roots.certified) rep.notes.push_back("roots uncertified: " + rep.roots.diagnostic);
  const AngularSample s = run_stage("angular_sample", t, [&] { return angular_sample(rep.roots); });
  rep.origin_root_count = s.origin_count;
  for (const Complex& z : rep.roots.roots)
    if (const double r = std::abs(z); r > 0 && r < 1.0) ++rep.inside_root_count;

  CircleIntegralOptions co;
  co.rel_target = config.rel_target;
  if (rep.poly[0] != Complex(0)) {
    rep.h = run_stage("h_measure", t, [&] { return h_measure(rep.poly, co); });
  } else {
    rep.notes.push_back("a_0 = 0: h(p) and the discrepancy bound are undefined");
  }
  rep.log_integral = run_stage("log_abs_integral", t, [&] { return log_abs_integral(rep.poly, co); });
  rep.trig = run_stage("count_real_roots", t, [&] { return count_real_roots(TrigView{rep.poly, 0.0}); });
  if (rep.trig.borderline > 0)
    rep.notes.push_back(std::to_string(rep.trig.borderline) + " near-zero minima of q missed the tangential threshold");

  if (s.n_angular() > 0) {
    rep.discrepancy = run_stage("angular_discrepancy", t, [&] { return angular_discrepancy(s); });
    rep.gaps = gap_statistics(s);
  } else {
    rep.discrepancy = 1.0;
  }
  if (rep.h) rep.et_bound = et_bound_from_h(rep.h->value, rep.n);

  run_stage("clustering_count", t, [&] {
    for (double alpha : config.alphas) {
      if (rep.n < 2) break;
      ClusterReport c = clustering_count(s, alpha, config.factor);
      attach_bound(c, rep.trig.X, rep.log_integral.value, rep.n);
      CensusOptions opts;
      opts.largeness = config.largeness;
      opts.factor = config.factor;
      for (std::size_t i = 0; i < c.chosen_intervals.size() && i < kMaxCensusPerAlpha; ++i) {
        const auto& iv = c.chosen_intervals[i];
        rep.census.push_back({alpha, region_census(rep.roots, Arc{iv.start, iv.end - iv.start}, alpha, opts)});
      }
      if (c.I != c.I_closed)
        rep.notes.push_back("alpha " + format_double(alpha) + ": half-open and closed interval counts differ");
      rep.clusters.push_back(std::move(c));
    }
    return 0;
  });
  rep.jensen = run_stage("jensen_residual", t, [&] { return jensen_residual(rep.log_integral, rep.poly, rep.roots); });
  if (!config.timings) rep.timings.clear();
  return rep;
}

std::string to_json(const AnalysisReport& r) {
  ojson doc;
  doc["tool"] = "trigroots";
  doc["version"] = kToolVersion;
  doc["status"] = r.advisory() ? "advisory" : "certified";
  doc["notes"] = r.notes;

  ojson in;
  in["kind"] = r.input.family ? "family" : "coefficients";
  in["label"] = r.input.label;
  in["hash"] = "fnv1a64:" + hex64(r.input_hash);
  if (r.input.family) {
    const FamilySpec& f = *r.input.family;
    in["family"] = {{"name", to_string(f.name)}, {"n", f.n}};
    if (f.name == FamilyName::poisson) in["family"]["rho"] = f.rho;
  }
  if (r.input.perturb) {
    in["perturb_psi"] = *r.input.perturb;
    in["perturb_reading"] = "p(z) + p(e^{i psi} z): coefficients a_k (1 + e^{i k psi})";
  }
  in["leading_scale"] = r.scale;
  doc["input"] = in;

  ojson cfg;
  cfg["alphas"] = r.config.alphas;
  cfg["factor"] = r.config.factor;
  cfg["root_tolerance"] = r.config.tol;
  cfg["seed"] = r.config.seed;
  cfg["quadrature_rel_target"] = r.config.rel_target;
  cfg["largeness"] = r.config.largeness;
  doc["config"] = cfg;

  doc["n"] = r.n;
  ojson coeffs = ojson::array();
  for (Complex a : r.input.raw.coeffs()) coeffs.push_back(pair(a));
  doc["coefficients"] = coeffs;

  double max_res = 0;
  for (double x : r.roots.residuals) max_res = std::max(max_res, x);
  ojson roots;
  roots["certified"] = r.roots.certified;
  roots["tolerance"] = r.roots.tolerance;
  roots["max_residual"] = max_res;
  roots["iterations"] = r.roots.iterations;
  if (!r.roots.diagnostic.empty()) roots["diagnostic"] = r.roots.diagnostic;
  roots["origin_root_count"] = r.origin_root_count;
  roots["inside_root_count"] = r.inside_root_count;
  ojson vals = ojson::array();
  for (Complex z : r.roots.roots) vals.push_back(pair(z));
  roots["values"] = vals;
  doc["roots"] = roots;

  doc["h"] = r.h ? integral_json(*r.h) : ojson(nullptr);
  doc["log_integral"] = integral_json(r.log_integral);

  ojson trig;
  trig["X"] = r.trig.X;
  trig["sign_changes"] = r.trig.sign_changes;
  trig["tangential"] = r.trig.tangential;
  trig["borderline"] = r.trig.borderline;
  trig["grid"] = r.trig.grid;
  trig["tangential_threshold"] = r.trig.threshold;
  trig["locations"] = r.trig.locations();
  doc["real_roots"] = trig;

  ojson disc;
  disc["value"] = r.discrepancy;
  disc["et_bound"] = r.et_bound ? ojson(*r.et_bound) : ojson(nullptr);
  disc["bound_holds"] = r.et_bound ? ojson(r.discrepancy <= *r.et_bound) : ojson(nullptr);
  disc["gap_mean"] = r.gaps.mean;
  disc["gap_stddev"] = r.gaps.stddev;
  disc["gap_cv"] = r.gaps.cv;
  disc["max_gap"] = r.gaps.max_gap;
  doc["discrepancy"] = disc;

  ojson clusters = ojson::array();
  for (const ClusterReport& c : r.clusters) {
    ojson e;
    e["alpha"] = c.alpha;
    e["interval_length"] = c.interval_length;
    e["factor"] = c.factor;
    e["threshold_count"] = c.threshold_count;
    e["I"] = c.I;
    e["I_closed"] = c.I_closed;
    ojson iv = ojson::array();
    for (const auto& x : c.chosen_intervals) iv.push_back(ojson::array({x.start, x.end, x.count}));
    e["chosen_intervals"] = iv;
    e["bound_x_term"] = c.bound_x_term;
    e["bound_log_term"] = c.bound_log_term;
    e["empirical_ratio"] = c.has_ratio ? ojson(c.empirical_ratio) : ojson(nullptr);
    clusters.push_back(e);
  }
  doc["clustering"] = clusters;

  ojson census = ojson::array();
  for (const CensusEntry& ce : r.census) {
    const RegionCensus& c = ce.census;
    census.push_back({{"alpha", ce.alpha},
                      {"start", c.J.start},
                      {"length", c.J.length},
                      {"A1", c.A1},
                      {"A2", c.A2},
                      {"A3", c.A3},
                      {"B1", c.B1},
                      {"B2", c.B2},
                      {"case", std::string(1, to_char(c.case_label))}});
  }
  doc["census"] = census;

  doc["jensen"] = {{"integral", r.jensen.integral},
                   {"root_sum", r.jensen.root_sum},
                   {"residual", r.jensen.residual},
                   {"error_estimate", r.jensen.error_estimate},
                   {"converged", r.jensen.converged},
                   {"near_circle", r.jensen.near_circle},
                   {"within_contract", r.jensen.within_contract}};

  if (!r.timings.empty()) {
    ojson tj;
    for (const auto& st : r.timings) tj[st.stage] = st.seconds;
    doc["timings_seconds"] = tj;
  }
  std::string out;
  dump(doc, out, 0);
  out += "\n";
  return out;
}

namespace {

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

LemmaCheckResult aggregate(const std::string& name, double tol) {
  LemmaCheckResult r;
  r.name = name;
  r.tolerance = tol;
  r.max_violation = -std::numeric_limits<double>::infinity();
  r.pass = true;
  return r;
}

void fold(LemmaCheckResult& agg, const LemmaCheckResult& one) {
  agg.samples += one.samples;
  agg.pass = agg.pass && one.pass;
  if (one.max_violation > agg.max_violation) {
    agg.max_violation = one.max_violation;
    agg.worst_case = one.worst_case;
    agg.value = one.value;
  }
}

LemmaCheckResult jensen_row(const std::string& name, const std::vector<Polynomial>& polys, double rel_target) {
  LemmaCheckResult agg = aggregate(name, 1e-6);
  CircleIntegralOptions co;
  co.rel_target = rel_target;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const RootSet rs = find_roots(polys[i]);
    const JensenCheck j = jensen_residual(polys[i], rs, co);
    LemmaCheckResult one;
    one.samples = 1;
    one.max_violation = j.residual / (1.0 + std::abs(j.integral));
    one.value = j.integral;
    one.worst_case = {{"case", static_cast<double>(i)}, {"converged", j.converged ? 1.0 : 0.0}};
    one.pass = rs.certified && j.converged && one.max_violation <= 1e-6;
    fold(agg, one);
  }
  return agg;
}

}  // namespace

std::vector<LemmaCheckResult> run_verify(const VerifyConfig& config) {
  std::vector<LemmaCheckResult> rows;
  Rng rng(config.seed);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);

  rows.push_back(check_finite_difference(config.seed, 10000));

  for (double r : {1.5, 0.5, 1.0001, 0.9999}) {
    LemmaCheckResult c = check_full_circle(r, ang(rng));
    c.name += "_r" + short_number(r);
    rows.push_back(c);
  }
  for (double r : {1.001, 1.1}) {
    LemmaCheckResult c = check_drop(r);
    c.name += "_r" + short_number(r);
    rows.push_back(c);
  }
  rows.push_back(check_drop_sweep(1000));

  LemmaCheckResult pw = aggregate("pointwise_sweep", 1e-12);
  for (int i = 1; i <= 100; ++i) fold(pw, check_pointwise(1.0 + 9.0 * i / 100.0));
  fold(pw, check_pointwise(1.0001));
  rows.push_back(pw);

  rows.push_back(check_arc_bounds(2.0, random_arcs(config.seed + 2, 10000)));
  {
    std::vector<Arc> arcs = random_arcs(config.seed + 3, 1000);
    arcs.push_back({0.0, kTwoPi});
    rows.push_back(check_arc_bounds(0.5, arcs));
  }
  {
    LemmaCheckResult c = check_arc_bounds(1.05, {Arc{-0.05, 0.1}});
    c.name = "arc_bound_drop_window";
    c.max_violation = c.value + 1.5;
    c.tolerance = 0;
    c.pass = c.max_violation <= 0;
    rows.push_back(c);
  }

  const double rel = config.strict ? 1e-14 : 1e-6;
  {
    LemmaCheckResult c = aggregate("jensen_exact_z_minus_2", 1e-8);
    CircleIntegralOptions co;
    co.rel_target = rel;
    const CircleIntegralResult q = log_abs_integral(Polynomial{-2.0, 1.0}, co);
    c.samples = 1;
    c.value = q.value;
    c.max_violation = std::abs(q.value - kTwoPi * std::log(2.0));
    c.pass = q.converged && c.max_violation <= 1e-8;
    rows.push_back(c);
  }
  {
    std::vector<Polynomial> polys;
    for (int i = 0; i < 20; ++i) polys.push_back(random_rooted_polynomial(rng, 20, 1e-2));
    rows.push_back(jensen_row("jensen_random", polys, rel));
  }
  {
    std::vector<Polynomial> polys;
    for (int i = 0; i < 4; ++i) {
      std::vector<Complex> z;
      random_rooted_polynomial(rng, 12, 1e-2, &z);
      z[0] = std::polar(i % 2 ? 1.0 - 1e-4 : 1.0 + 1e-4, ang(rng));
      polys.push_back(reconstruct(z, 1.0));
    }
    rows.push_back(jensen_row("jensen_near_circle", polys, rel));
  }
  {
    LemmaCheckResult agg = aggregate("erdos_turan", 0);
    std::vector<Polynomial> polys;
    for (int i = 0; i < 20; ++i) polys.push_back(random_disk_polynomial(rng, 50));
    for (FamilyName f : {FamilyName::fejer, FamilyName::young, FamilyName::poisson})
      polys.push_back(family(FamilySpec{f, 50, 0.5}).poly);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const RootSet rs = find_roots(polys[i]);
      const double d = angular_discrepancy(angular_sample(rs));
      const double b = et_bound(polys[i], rs);
      LemmaCheckResult one;
      one.samples = 1;
      one.max_violation = d - b;
      one.value = d;
      one.worst_case = {{"case", static_cast<double>(i)}, {"bound", b}};
      one.pass = rs.certified && d <= b;
      fold(agg, one);
    }
    rows.push_back(agg);
  }
  return rows;
}

std::string format_verify_table(const std::vector<LemmaCheckResult>& rows) {
  std::string out = "name\tmax_violation\ttolerance\tsamples\tpass\n";
  for (const auto& r : rows) {
    out += r.name + "\t" + format_double(r.max_violation) + "\t" + format_double(r.tolerance) + "\t" +
           std::to_string(r.samples) + "\t" + (r.pass ? "PASS" : "FAIL") + "\n";
  }
  return out;
}

}  // namespace trigroots

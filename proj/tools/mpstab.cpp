// Copyright (c) 2026 The mpstab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mpstab command-line front end.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpstab/error.hpp"
#include "mpstab/model.hpp"
#include "mpstab/ops.hpp"
#include "mpstab/report.hpp"
#include "mpstab/smpl.hpp"
#include "mpstab/spectral.hpp"
#include "mpstab/stability.hpp"

namespace {

using namespace mpstab;
using nlohmann::ordered_json;

constexpr int kExitUsage = 3;
constexpr int kExitModel = 4;
constexpr int kExitRuntime = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::string notion = "uniform";
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> length;
  std::string out;
  std::string format;
  // spectral
  std::string matrix;
  bool normalize = false;
  // analyze
  std::string q_name;
  std::string switching;
  bool emit_certificate = false;
  bool min_of = false;
  // simulate
  std::string x0;
  std::string policy;
  std::string pattern;
  std::optional<double> delta;
  std::size_t lag = 1;
};

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && ::isatty(STDOUT_FILENO) == 1;
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string verdict_text(Verdict v) {
  const std::string s(to_string(v));
  switch (v) {
    case Verdict::kCertified:
      return paint(s, "32");
    case Verdict::kNotCertified:
      return paint(s, "31");
    case Verdict::kUnsupportedRegion:
      return paint(s, "33");
  }
  return s;
}

std::string vector_text(std::span<const double> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_scalar(v[i]);
  }
  return s + ")";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_entry(const std::string& s) {
  if (s == "-inf") return kEps;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw UsageError("not a finite number: '" + s + "'");
  return v;
}

/// Writes to --out when given, else stdout.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(opt.out, std::ios::binary);
  if (!os) throw UsageError("cannot write '" + opt.out + "'");
  os << text;
}

void check_format(const Options& opt, std::initializer_list<const char*> allowed) {
  if (opt.format.empty()) return;
  for (const char* a : allowed)
    if (opt.format == a) return;
  throw UsageError("--format " + opt.format + " is not supported by this command");
}

/// Q for single-matrix notions: a named candidate, the first candidate, or
/// the ⊕ of the modes.
std::pair<std::string, Matrix> select_q(const ModelFile& m, const std::string& name) {
  if (!name.empty()) {
    for (const auto& nm : m.candidate_q)
      if (nm.name == name) return {nm.name, nm.matrix};
    throw UsageError("no candidate_Q named '" + name + "'");
  }
  if (!m.candidate_q.empty()) return {m.candidate_q.front().name, m.candidate_q.front().matrix};
  return {"sum of modes", m.system().mode_sum()};
}

std::pair<std::string, Matrix> select_matrix(const ModelFile& m, const std::string& sel) {
  if (sel.empty()) return select_q(m, "");
  if (sel == "sum") return {"sum of modes", m.system().mode_sum()};
  for (const auto& nm : m.candidate_q)
    if (nm.name == sel) return {nm.name, nm.matrix};
  for (const auto& nm : m.modes)
    if (nm.name == sel) return {"mode " + nm.name, nm.matrix};
  throw UsageError("--matrix '" + sel + "' matches no mode or candidate_Q name");
}

std::optional<double> pick(const std::optional<double>& flag, const std::optional<double>& file) {
  return flag ? flag : file;
}

// ---------------------------------------------------------------- spectral

int run_spectral(const Options& opt) {
  check_format(opt, {"json"});
  const ModelFile model = load_model(opt.model);
  const auto [label, a] = select_matrix(model, opt.matrix);
  const SpectralData d = analyze_spectrum(a);

  if (d.lambda_star.is_eps()) std::cerr << "warning: λ* is ε (the matrix has an ε diagonal entry)\n";

  std::optional<double> shift;
  Matrix target = a;
  if (opt.normalize) {
    if (d.lambda_max.is_eps())
      std::cerr << "warning: λ̄ is ε (acyclic graph); nothing to normalize by\n";
    else {
      shift = d.lambda_max.value();
      target = normalize(a, *shift);
    }
  }
  std::optional<Matrix> star;
  std::string star_note;
  const Scalar target_lambda = shift ? max_cycle_mean(target) : d.lambda_max;
  if (target_lambda.is_eps() || target_lambda.value() <= kDefaultTolerance) {
    try {
      star = kleene_star(target);
    } catch (const StarDivergenceError& e) {
      star_note = e.what();
    }
  } else {
    star_note = "Kleene star diverges: λ̄ = " + target_lambda.to_string() +
                " > 0 (try --normalize)";
  }

  if (opt.format == "json") {
    ordered_json j = spectral_to_json(a, d);
    j["label"] = label;
    j["normalized_by"] = shift ? scalar_to_json(*shift) : ordered_json(nullptr);
    j["kleene_star"] = star ? matrix_to_json(*star) : ordered_json(nullptr);
    if (!star_note.empty()) j["kleene_star_note"] = star_note;
    emit(opt, j.dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  os << "matrix: " << label << "\n  " << a.to_string() << "\n";
  os << "λ̄ (max cycle mean): " << d.lambda_max.to_string() << "\n";
  os << "λ* (min diagonal): " << d.lambda_star.to_string() << "\n";
  os << "irreducible: " << (d.irreducible ? "yes" : "no") << "\n";
  os << "components:";
  for (const auto& c : d.scc.components) {
    os << " {";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
    os << "}";
  }
  os << "\n";
  if (d.eigenvector) {
    os << "eigenvector: " << vector_text(d.eigenvector->raw()) << "\n";
    os << "critical nodes:";
    for (std::size_t v : d.critical_nodes) os << " " << v + 1;
    os << "\n";
  } else {
    os << "eigenvector: none\n";
  }
  if (shift) os << "normalized by " << format_scalar(*shift) << "\n";
  if (star)
    os << "Kleene star: " << star->to_string() << "\n";
  else
    os << star_note << "\n";
  emit(opt, os.str());
  return 0;
}

// ----------------------------------------------------------------- analyze

std::string certificate_text(const StabilityCertificate& cert) {
  std::ostringstream os;
  os << "notion: " << to_string(cert.notion) << "\n";
  os << "verdict: " << verdict_text(cert.verdict) << "\n";
  os << "alpha: " << cert.alpha.to_string() << "  beta: " << format_scalar(cert.beta) << "\n";
  for (std::size_t i = 0; i < cert.cones.size(); ++i) {
    const SliceSpace& s = cert.cones[i];
    os << "cone " << i + 1 << ": ";
    if (auto hs = half_space_form(s))
      os << hs->to_string();
    else if (s.has_generators())
      os << "generators " << s.generators()->to_string();
    else
      os << "predicate only";
    os << "\n";
  }
  auto triples = [&](const std::vector<InclusionEdge>& es) {
    std::string t;
    for (const auto& e : es)
      t += " (" + std::to_string(e.from + 1) + "," + std::to_string(e.mode + 1) + "," +
           std::to_string(e.to + 1) + ")";
    return t.empty() ? std::string(" none") : t;
  };
  if (!cert.relation.empty()) os << "relation (i,l,j):" << triples(cert.relation) << "\n";
  os << "edges (i,l,j):" << triples(cert.edges) << "\n";
  if (cert.proj_bound) os << "projective-norm bound δ: " << format_scalar(*cert.proj_bound) << "\n";
  if (cert.lipschitz_bounds)
    os << "first-difference bounds: " << format_scalar(cert.lipschitz_bounds->lower)
       << " <= x(k) - x(k-1) <= " << format_scalar(cert.lipschitz_bounds->upper) << "\n";
  for (const auto& d : cert.diagnostics) os << "note: " << d << "\n";
  return os.str();
}

StabilityCertificate build_certificate(const Options& opt, const ModelFile& model) {
  const SmplSystem sys = model.system();
  const auto alpha = pick(opt.alpha, model.alpha);
  const auto beta = pick(opt.beta, model.beta);

  auto family_thresholds = [&](const std::vector<Matrix>& qs) {
    double a = std::numeric_limits<double>::infinity();
    double b = -std::numeric_limits<double>::infinity();
    for (const auto& q : qs) {
      const Scalar ls = lambda_star(q);
      const Scalar lm = max_cycle_mean(q);
      if (ls.is_eps()) throw ArgumentError("a candidate Q has an ε diagonal entry");
      a = std::min(a, ls.value());
      if (lm.is_finite()) b = std::max(b, lm.value());
    }
    return std::pair{alpha.value_or(a), beta.value_or(b)};
  };

  if (opt.notion == "uniform") return check_uniform(sys, select_q(model, opt.q_name).second, alpha, beta);
  if (opt.notion == "strong") return check_strong_bounded(sys, select_q(model, opt.q_name).second);
  if (opt.notion == "path-complete") {
    if (model.candidate_q.empty()) throw UsageError("path-complete needs candidate_Q in the model");
    const auto qs = model.candidate_matrices();
    const auto [a, b] = family_thresholds(qs);
    std::string sw = opt.switching;
    if (sw.empty()) sw = model.automaton ? "automaton" : "arbitrary";
    if (sw == "automaton" && !model.automaton)
      throw UsageError("--switching automaton needs a switching_automaton in the model");
    return check_path_complete(sys, qs, a, b,
                               sw == "automaton" ? model.automaton : std::nullopt);
  }
  if (opt.notion == "proposition1") {
    if (opt.min_of) {
      if (model.candidate_q.empty()) throw UsageError("--min-of needs candidate_Q in the model");
      const auto qs = model.candidate_matrices();
      const auto [a, b] = family_thresholds(qs);
      return check_proposition1(sys, MinOfMatrices{qs}, a, b);
    }
    const Matrix q = select_q(model, opt.q_name).second;
    const auto [a, b] = family_thresholds({q});
    return check_proposition1(sys, SingleMatrix{q}, a, b);
  }
  throw UsageError("unknown notion '" + opt.notion + "'");
}

int run_analyze(const Options& opt, bool certify) {
  check_format(opt, {"json"});
  const ModelFile model = load_model(opt.model);
  const StabilityCertificate cert = build_certificate(opt, model);
  const std::string json = certificate_to_json(cert).dump(2) + "\n";
  const bool emit_json = certify || opt.emit_certificate || opt.format == "json";
  if (emit_json) {
    emit(opt, json);
    // Keep stdout machine-readable when the certificate goes there.
    (opt.out.empty() ? std::cerr : std::cout) << certificate_text(cert);
  } else {
    emit(opt, certificate_text(cert));
  }
  return exit_code(cert.verdict);
}

// ---------------------------------------------------------------- simulate

int run_simulate(const Options& opt) {
  check_format(opt, {"csv", "json"});
  const ModelFile model = load_model(opt.model);
  const SmplSystem sys = model.system();
  const SimulationBlock block = model.simulation.value_or(SimulationBlock{});

  const std::size_t n = sys.dimension();
  Vector x0 = block.x0.value_or(Vector::constant(n, 0.0));
  if (!opt.x0.empty()) {
    std::vector<double> v;
    for (const auto& s : split_list(opt.x0)) v.push_back(parse_entry(s));
    if (v.size() != n) throw UsageError("--x0 needs " + std::to_string(n) + " entries");
    x0 = Vector(std::move(v));
  }
  const auto length = opt.length ? opt.length : block.length;
  if (!length) throw UsageError("no trajectory length: add simulation.length or --length");
  const auto seed = opt.seed ? opt.seed : block.seed;

  std::string policy = !opt.policy.empty() ? opt.policy : block.policy.value_or("");
  std::vector<std::string> pattern_names = block.pattern;
  if (!opt.pattern.empty()) pattern_names = split_list(opt.pattern);
  if (policy.empty()) policy = !pattern_names.empty() ? "periodic" : "random";

  SwitchingPolicy sp = ArbitrarySwitching{sys.mode_count()};
  if (policy == "periodic") {
    if (pattern_names.empty()) throw UsageError("periodic policy needs a pattern");
    PeriodicSwitching p;
    for (const auto& name : pattern_names) {
      try {
        p.pattern.push_back(model.mode_index(name));
      } catch (const ModelError&) {
        throw UsageError("pattern names unknown mode '" + name + "'");
      }
    }
    sp = std::move(p);
  } else if (policy == "automaton") {
    if (!model.automaton) throw UsageError("automaton policy needs a switching_automaton");
    sp = AutomatonSwitching{*model.automaton};
  } else if (policy != "random") {
    throw UsageError("unknown policy '" + policy + "'");
  }
  if (policy != "periodic" && !seed)
    throw UsageError("random switching needs an explicit seed (--seed or simulation.seed)");

  const auto word = gen_switching(sp, *length, seed.value_or(0));
  const Trajectory traj = simulate(sys, x0, word);

  std::optional<double> delta = opt.delta;
  std::string delta_source = delta ? "--delta" : "";
  if (!delta) {
    try {
      const auto q = select_q(model, "").second;
      const auto cert = check_uniform(sys, q, model.alpha, model.beta);
      if (cert.certified() && cert.proj_bound) {
        delta = cert.proj_bound;
        delta_source = "uniform certificate";
      }
    } catch (const Error&) {
      // No uniform bound available; the summary then omits violations.
    }
  }

  std::optional<EmpiricalMetrics> m;
  std::string refused;
  try {
    m = metrics(traj, opt.lag);
  } catch (const ArgumentError& e) {
    refused = e.what();
  }

  ordered_json summary;
  summary["steps"] = traj.length();
  summary["policy"] = policy;
  std::size_t violations = 0;
  double max_norm = 0;
  for (const auto& x : traj.states) {
    const double p = projective_norm(x);
    max_norm = std::max(max_norm, p);
    if (delta && p > *delta + kDefaultTolerance) ++violations;
  }
  summary["max_proj_norm"] = scalar_to_json(max_norm);
  summary["delta"] = delta ? scalar_to_json(*delta) : ordered_json(nullptr);
  summary["delta_violations"] = delta ? ordered_json(violations) : ordered_json(nullptr);
  if (m) {
    summary["delta_min"] = scalar_to_json(m->delta_min);
    summary["delta_max"] = scalar_to_json(m->delta_max);
    ordered_json g = ordered_json::array();
    for (double v : m->growth_rate) g.push_back(v);
    summary["growth_rate"] = std::move(g);
    if (m->second_differences) {
      double worst = 0;
      for (const auto& v : *m->second_differences)
        for (double e : v.raw()) worst = std::max(worst, std::fabs(e));
      summary["max_abs_second_difference"] = scalar_to_json(worst);
      summary["lag"] = m->lag;
    }
  } else {
    summary["metrics"] = "refused: " + refused;
  }

  if (opt.format == "json") {
    ordered_json j;
    j["summary"] = summary;
    ordered_json states = ordered_json::array();
    for (const auto& x : traj.states) states.push_back(vector_to_json(x));
    ordered_json sw = ordered_json::array();
    for (std::size_t l : traj.switching) sw.push_back(l + 1);
    j["switching"] = std::move(sw);
    j["states"] = std::move(states);
    emit(opt, j.dump(2) + "\n");
    return 0;
  }

  std::ostringstream csv;
  write_trajectory_csv(csv, traj);
  emit(opt, csv.str());

  std::ostream& info = opt.out.empty() ? std::cerr : std::cout;
  info << "steps: " << traj.length() << "  policy: " << policy << "\n";
  info << "max ‖x(k)‖_P: " << format_scalar(max_norm) << "\n";
  if (delta)
    info << "δ = " << format_scalar(*delta) << " (" << delta_source << "), violations: "
         << violations << "\n";
  if (m) {
    info << "first differences: M̲ = " << format_scalar(m->delta_min)
         << ", M̄ = " << format_scalar(m->delta_max) << "\n";
    info << "growth rate: " << vector_text(m->growth_rate) << "\n";
  } else {
    info << "metrics refused: " << refused << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-plus stability analysis for switching max-plus linear systems"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", opt.model, "Model JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out, "Output file (default stdout)");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto thresholds = [&](CLI::App* sub) {
    sub->add_option("--alpha", opt.alpha, "Lower slice threshold α");
    sub->add_option("--beta", opt.beta, "Upper slice threshold β");
  };

  auto* spectral = app.add_subcommand("spectral", "Spectral data of a mode or Q matrix");
  common(spectral);
  spectral->add_option("--matrix", opt.matrix, "Mode name, candidate_Q name, or 'sum'");
  spectral->add_flag("--normalize", opt.normalize, "Subtract λ̄ before forming the Kleene star");

  auto analyze_opts = [&](CLI::App* sub) {
    common(sub);
    thresholds(sub);
    sub->add_option("--notion", opt.notion, "Stability notion")
        ->check(CLI::IsMember({"uniform", "path-complete", "strong", "proposition1"}));
    sub->add_option("--q", opt.q_name, "candidate_Q name for single-matrix notions");
    sub->add_option("--switching", opt.switching, "Switching class for path-complete")
        ->check(CLI::IsMember({"automaton", "arbitrary"}));
    sub->add_flag("--min-of", opt.min_of, "proposition1 with the min of all candidate_Q");
  };
  auto* analyze = app.add_subcommand("analyze", "Check a stability notion");
  analyze_opts(analyze);
  analyze->add_flag("--emit-certificate", opt.emit_certificate, "Write the certificate JSON");
  auto* certify = app.add_subcommand("certify", "analyze --emit-certificate");
  analyze_opts(certify);

  auto* sim = app.add_subcommand("simulate", "Simulate a trajectory and report metrics");
  common(sim);
  sim->add_option("--seed", opt.seed, "RNG seed");
  sim->add_option("--length", opt.length, "Number of steps K");
  sim->add_option("--x0", opt.x0, "Initial state, comma separated");
  sim->add_option("--policy", opt.policy, "Switching policy")
      ->check(CLI::IsMember({"random", "periodic", "automaton"}));
  sim->add_option("--pattern", opt.pattern, "Periodic mode names, comma separated");
  sim->add_option("--delta", opt.delta, "Projective-norm bound to count violations against");
  sim->add_option("--lag", opt.lag, "Second-difference lag c")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (spectral->parsed()) return run_spectral(opt);
    if (analyze->parsed()) return run_analyze(opt, false);
    if (certify->parsed()) return run_analyze(opt, true);
    if (sim->parsed()) return run_simulate(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kExitModel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

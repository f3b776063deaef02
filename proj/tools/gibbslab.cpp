// Copyright 2026 The gibbslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end.  Every subcommand runs a deterministic set of
// checks (seed-driven where randomized), writes a JSON report plus a CSV
// table atomically, and exits 0 (all asserted checks pass), 1 (an asserted
// check failed) or 2 (usage or spec-file error).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gibbslab/dense.hpp"
#include "gibbslab/dobrushin.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/kernels.hpp"
#include "gibbslab/lindbladian.hpp"
#include "gibbslab/quasilocality.hpp"
#include "gibbslab/refrigeration.hpp"
#include "gibbslab/report.hpp"
#include "gibbslab/rng.hpp"
#include "gibbslab/separability.hpp"
#include "gibbslab/superop.hpp"
#include "gibbslab/version.hpp"

namespace gibbslab {
namespace {

// Errors that should surface as exit code 2 (bad invocation or bad input
// files, as opposed to a failed numerical assertion).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec;
  std::string out;
  std::string tol_overrides;
  std::string kernel_params;
  std::string regime;
  std::string kind = "heisenberg";
  std::vector<double> h;       // field grid (meaning varies per subcommand)
  std::vector<double> t_grid;  // time grid for lr-shells
  double beta = 0.1;
  double delta = 0.2;
  double eps = 1e-3;
  double omega = 0.0;
  int radius = -1;
  int site = -1;
  int origin = 0;
  int k_max = 4;
  int anc_t = 0;  // refrigerate: ancilla copies per term
  std::uint64_t seed = 1;
  int jobs = 0;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Short form for check names and CSV labels (kept comma-free so the CSV
// tables stay column-aligned without quoting).
std::string fmt_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

int resolve_jobs(const Options& o) {
  if (o.jobs > 0) return o.jobs;
  if (const char* env = std::getenv("GIBBSLAB_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

std::map<std::string, double> parse_tol_overrides(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol-overrides expects name=value pairs");
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--tol-overrides: bad value in '" + item + "'");
    }
  }
  return out;
}

// Runs fn(0..count-1) on a bounded worker pool.  Results must be written to
// index-addressed slots so the assembled report order does not depend on the
// job count.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

class ReportBuilder {
 public:
  ReportBuilder(std::string command, const std::string& tol_overrides)
      : overrides_(parse_tol_overrides(tol_overrides)) {
    report_.command = std::move(command);
  }

  void config(const std::string& key, const std::string& value) {
    report_.config.emplace_back(key, value);
  }
  void config(const std::string& key, double value) { config(key, fmt(value)); }

  // computed <= bound; named overrides replace the bound before evaluation.
  CheckRecord& add(const std::string& name, std::vector<std::pair<std::string, double>> inputs,
                   double computed, double bound, bool asserted = true) {
    const auto it = overrides_.find(name);
    if (it != overrides_.end() && asserted) bound = it->second;
    CheckRecord c;
    c.name = name;
    c.inputs = std::move(inputs);
    c.computed = computed;
    c.bound = bound;
    c.pass = computed <= bound;
    c.asserted = asserted;
    report_.checks.push_back(std::move(c));
    return report_.checks.back();
  }

  void append(std::vector<CheckRecord> checks) {
    for (auto& c : checks) report_.checks.push_back(std::move(c));
  }

  ExperimentReport& report() { return report_; }

 private:
  ExperimentReport report_;
  std::map<std::string, double> overrides_;
};

struct CommandOutput {
  ExperimentReport report;
  std::string csv;  // table for plotting; defaults to the checks table
};

// ---------------------------------------------------------------------------
// Spec handling

LocalHamiltonian load_spec(const std::string& path) {
  if (path.empty()) throw UsageError("--spec is required for this subcommand");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("spec file '" + path + "': cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw UsageError("spec file '" + path + "': empty");
  }
  try {
    return LocalHamiltonian::from_json(text);
  } catch (const std::exception& e) {
    throw UsageError("spec file '" + path + "': " + e.what());
  }
}

LocalHamiltonian with_uniform_field(const LocalHamiltonian& base, double h) {
  return LocalHamiltonian::build(base.sites(), base.terms(),
                                 ExternalField::uniform_z(base.sites(), h));
}

// Kernel parameter overrides: either "delta=D,sigma=S,eta=E" applied to every
// site, or a path to a JSON array of {"delta":..,"sigma":..,"eta":..} per site.
std::optional<FieldResonantParams> parse_kernel_params(const std::string& text, int n,
                                                       double beta) {
  if (text.empty()) return std::nullopt;
  FieldResonantParams out;
  if (text.find('=') != std::string::npos) {
    double delta = 0, sigma = 0, eta = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--kernel-params: expected key=value");
      const std::string key = item.substr(0, eq);
      const double val = std::stod(item.substr(eq + 1));
      if (key == "delta") delta = val;
      else if (key == "sigma") sigma = val;
      else if (key == "eta") eta = val;
      else throw UsageError("--kernel-params: unknown key '" + key + "'");
    }
    SiteKernelParams p{beta, delta, sigma, eta};
    p.validate();
    out.site.assign(n, p);
    return out;
  }
  std::ifstream in(text, std::ios::binary);
  if (!in) throw UsageError("--kernel-params file '" + text + "': cannot open");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("--kernel-params file '" + text + "': " + e.what());
  }
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw UsageError("--kernel-params file: expected an array with one entry per site");
  }
  for (const auto& e : j) {
    SiteKernelParams p{beta, e.at("delta").get<double>(), e.at("sigma").get<double>(),
                       e.at("eta").get<double>()};
    p.validate();
    out.site.push_back(p);
  }
  return out;
}

FieldResonantParams pick_params(const LocalHamiltonian& ham, double beta, const Options& o) {
  if (auto p = parse_kernel_params(o.kernel_params, ham.sites(), beta)) return *p;
  return field_resonant_params(ham, beta);
}

// ---------------------------------------------------------------------------
// Shared check sections (used by the individual subcommands and by `suite`)

struct Tols {
  double db = 1e-7;
  double fixed_point = 1e-8;
  double structure = 1e-9;  // trace preservation / Hermiticity preservation
};

void db_checks(ReportBuilder& rb, const std::string& label, const LindbladianBuild& lb,
               const Tols& tol) {
  std::vector<std::pair<std::string, double>> in{{"beta", lb.beta}};
  rb.add(label + ".db_defect", in, lb.db_defect(), tol.db);
  rb.add(label + ".fixed_point_l1", in, lb.fixed_point_defect(), tol.fixed_point);
  rb.add(label + ".trace_preserving_defect", in, lb.generator.trace_preserving_defect(),
         tol.structure);
  rb.add(label + ".hermiticity_defect", in, lb.generator.hermiticity_preserving_defect(),
         tol.structure);
}

struct MixRow {
  double t = 0.0, distance = 0.0;
};

struct MixOutcome {
  double gap = 0.0;
  double mono_defect = 0.0;
  double final_distance = 0.0;
  std::vector<MixRow> curve;
};

MixOutcome run_mixing(const LocalHamiltonian& ham, double beta, const FieldResonantParams& params,
                      std::uint64_t seed) {
  MixOutcome out;
  LindbladianBuild lb = build_lindbladian(ham, beta, params);
  out.gap = spectral_gap(lb.generator);
  SplitMix64 rng = SplitMix64::derive(seed, {0x6d6978ULL});
  Vec psi = random_state(rng, Eigen::Index{1} << ham.sites());
  Mat rho0 = psi * psi.adjoint();
  const double t_end = out.gap > 0 ? 25.0 / out.gap : 1.0;
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(t_end * k / 20.0);
  auto curve = mixing_curve(lb.generator, rho0, lb.gibbs, grid);
  for (std::size_t k = 0; k < curve.size(); ++k) {
    out.curve.push_back({curve[k].t, curve[k].distance});
    if (k > 0) {
      out.mono_defect = std::max(out.mono_defect, curve[k].distance - curve[k - 1].distance);
    }
  }
  out.final_distance = curve.back().distance;
  return out;
}

void mixing_checks(ReportBuilder& rb, const std::string& label, const MixOutcome& m,
                   double final_target, std::vector<std::string>* csv_rows) {
  rb.add(label + ".neg_spectral_gap", {{"gap", m.gap}}, -m.gap, 0.0).pass = m.gap > 0.0;
  rb.add(label + ".monotonicity_defect", {}, m.mono_defect, 1e-10);
  rb.add(label + ".final_distance", {{"t_end", m.curve.back().t}}, m.final_distance, final_target);
  if (csv_rows) {
    for (const auto& row : m.curve) {
      csv_rows->push_back(label + "," + fmt(row.t) + "," + fmt(row.distance));
    }
  }
}

// Kernel identity checks for one (beta, gap) parameter point.
void kernel_point_checks(ReportBuilder& rb, double beta, double gap,
                         std::vector<std::string>* csv_rows) {
  SiteKernelParams p = SiteKernelParams::field_resonant(beta, gap);
  std::vector<std::pair<std::string, double>> in{{"beta", beta}, {"gap", gap}};
  const std::string tag = "kernels[beta=" + fmt_short(beta) + ";gap=" + fmt_short(gap) + "]";
  auto row = [&](const std::string& name, double closed, double quad, double bound, bool pass) {
    if (csv_rows) {
      csv_rows->push_back(fmt(beta) + "," + fmt(gap) + "," + name + "," + fmt(closed) + "," +
                          fmt(quad) + "," + fmt(bound) + "," + (pass ? "1" : "0"));
    }
  };

  for (int r = 0; r <= 4; ++r) {
    const double closed = moment_b2_closed(p, r);
    const double quad = moment_b2_quadrature(p, r, 1e-10);
    const double rel = std::abs(quad - closed) / closed;
    auto& c = rb.add(tag + ".b2_moment_rel_err.r" + std::to_string(r), in, rel, 1e-8);
    row("b2_moment_r" + std::to_string(r), closed, quad, closed * (1 + 1e-8), c.pass);
  }
  {
    const double closed = gamma_integral_closed(p);
    const double quad = gamma_integral_quadrature(p, 1e-11);
    const double rel = std::abs(quad - closed) / closed;
    auto& c = rb.add(tag + ".gamma_integral_rel_err", in, rel, 1e-9);
    row("gamma_integral", closed, quad, closed * (1 + 1e-9), c.pass);
  }
  {
    FourierCheck fc =
        fourier_consistency_check(p, {0.0, -2.0 * p.delta, p.sigma}, 1e-9);
    auto& c1 = rb.add(tag + ".fourier_b1_abs_err", in, fc.max_error_b1, 1e-8);
    c1.pass = c1.pass && fc.converged;
    auto& c2 = rb.add(tag + ".fourier_b2_abs_err", in, fc.max_error_b2, 1e-8);
    c2.pass = c2.pass && fc.converged;
    row("fourier_b1", 0.0, fc.max_error_b1, 1e-8, c1.pass);
    row("fourier_b2", 0.0, fc.max_error_b2, 1e-8, c2.pass);
  }
  for (int r = 0; r <= 2; ++r) {
    const double bound = moment_b1_bound(p, r);
    const double quad = moment_b1_quadrature(p, r, 1e-7);
    auto& c = rb.add(tag + ".b1_moment_r" + std::to_string(r), in, quad, bound);
    row("b1_moment_r" + std::to_string(r), quad, quad, bound, c.pass);
  }
}

// Heisenberg / jump / coherent shell checks for one Hamiltonian and one grid
// point; returns the bound vector so callers can assert h-independence.
std::vector<double> shell_point_checks(ReportBuilder& rb, const std::string& kind,
                                       const LocalHamiltonian& ham, double beta, double h,
                                       double t, double omega, int site, int r_max,
                                       std::vector<std::string>* csv_rows) {
  ShellSeries ss;
  std::string tag;
  if (kind == "heisenberg") {
    ss = heisenberg_shells(ham, pauli('X'), site, t, r_max);
    tag = "lr_shells[h=" + fmt_short(h) + ";t=" + fmt_short(t) + "]";
  } else if (kind == "jump") {
    SiteKernelParams kp = SiteKernelParams::field_resonant(beta, ham.field().gap(site));
    ss = jump_shells(ham, kp, pauli('X'), site, omega, r_max);
    tag = "jump_shells[h=" + fmt_short(h) + ";omega=" + fmt_short(omega) + "]";
  } else if (kind == "coherent") {
    SiteKernelParams kp = SiteKernelParams::field_resonant(beta, ham.field().gap(site));
    ss = coherent_shells(ham, kp, pauli('X'), site, r_max);
    tag = "coherent_shells[h=" + fmt_short(h) + "]";
  } else {
    throw UsageError("--kind must be heisenberg, jump, or coherent");
  }
  double worst = 0.0;
  const int first = kind == "heisenberg" ? 1 : 0;  // r = 0 bound for F_r is ||A||, reported raw
  for (int r = first; r < ss.radius_count(); ++r) {
    if (ss.bound_values[r] > 0.0) worst = std::max(worst, ss.norms[r] / ss.bound_values[r]);
  }
  rb.add(tag + ".max_norm_over_bound", {{"h", h}, {"t", t}, {"site", double(site)}}, worst,
         1.0 + 1e-12);
  if (csv_rows) {
    for (int r = 0; r < ss.radius_count(); ++r) {
      csv_rows->push_back(kind + "," + fmt(h) + "," + fmt(t) + "," + std::to_string(r) + "," +
                          fmt(ss.norms[r]) + "," + fmt(ss.bound_values[r]));
    }
  }
  return ss.bound_values;
}

void contraction_point_checks(ReportBuilder& rb, double beta, double h, double delta,
                              int n_inputs, std::uint64_t seed,
                              std::vector<std::string>* csv_rows) {
  const double c_diag = std::exp(-0.25) / std::sqrt(2.0);
  OverlapTriple closed = overlap_integrals(h, beta);
  OverlapTriple quad = overlap_integrals_quadrature(h, beta, 1e-11);
  const double quad_err = std::max({std::abs(closed.int_gamma_a2 - quad.int_gamma_a2),
                                    std::abs(closed.int_gamma_b2 - quad.int_gamma_b2),
                                    std::abs(closed.int_gamma_c2 - quad.int_gamma_c2)});
  std::vector<std::pair<std::string, double>> in{{"beta", beta}, {"h", h}, {"delta", delta}};
  const std::string tag = "contraction[h=" + fmt_short(h) + "]";
  rb.add(tag + ".overlap_quadrature_abs_err", in, quad_err, 1e-9);
  rb.add(tag + ".b_overlap_deficit", {{"b_overlap", closed.int_gamma_b2}},
         c_diag - closed.int_gamma_b2, 1e-9);
  rb.add(tag + ".sector_sum_excess", {{"xy", closed.sector_xy()}, {"z", closed.sector_z()}},
         std::max(closed.sector_xy(), closed.sector_z()), 3.0 * std::sqrt(2.0) + 1e-9);
  rb.add(tag + ".sector_sum_deficit", {{"xy", closed.sector_xy()}, {"z", closed.sector_z()}},
         c_diag - std::min(closed.sector_xy(), closed.sector_z()), 1e-9);

  double worst_excess = -1e300;
  for (int k = 0; k < n_inputs; ++k) {
    SplitMix64 rng = SplitMix64::derive(seed, {0x636f6eULL, static_cast<std::uint64_t>(k)});
    Mat x = random_hermitian(rng, 4);
    x -= 0.5 * kron(Mat::Identity(2, 2), partial_trace(x, {0}, 2));
    ContractionResult r = local_dissipative_contraction(h, beta, delta, x, 2);
    worst_excess = std::max(worst_excess,
                            r.out_trace_norm - (1.0 - c_diag * delta) * r.input_trace_norm);
  }
  rb.add(tag + ".channel_contraction_excess", in, worst_excess, 1e-10);
  if (csv_rows) {
    csv_rows->push_back(fmt(h) + "," + fmt(closed.int_gamma_a2) + "," +
                        fmt(closed.int_gamma_b2) + "," + fmt(closed.int_gamma_c2) + "," +
                        fmt(closed.sector_xy()) + "," + fmt(closed.sector_z()) + "," +
                        fmt(quad_err) + "," + fmt(worst_excess));
  }
}

long brute_cluster_count(const LocalHamiltonian& h, int origin, int k) {
  const int m = static_cast<int>(h.terms().size());
  if (m == 0) return 0;
  std::vector<int> idx(k, 0);
  long count = 0;
  while (true) {
    std::vector<char> seen(h.sites(), 0);
    bool ok = false;
    for (int s : h.terms()[idx[0]].support) ok |= (s == origin);
    for (int s : h.terms()[idx[0]].support) seen[s] = 1;
    for (int j = 1; j < k && ok; ++j) {
      bool touches = false;
      for (int s : h.terms()[idx[j]].support) touches |= (seen[s] != 0);
      ok = touches;
      for (int s : h.terms()[idx[j]].support) seen[s] = 1;
    }
    if (ok) ++count;
    int j = k - 1;
    while (j >= 0 && ++idx[j] == m) idx[j--] = 0;
    if (j < 0) break;
  }
  return count;
}

void cluster_checks(ReportBuilder& rb, const LocalHamiltonian& ham, double beta, double h,
                    int origin, int k_max) {
  const int d_deg = ham.max_degree();
  const int loc = ham.locality();
  std::vector<std::pair<std::string, double>> in{
      {"beta", beta}, {"h", h}, {"origin", double(origin)}};
  for (int k = 1; k <= k_max; ++k) {
    const auto clusters = enumerate_clusters(ham, origin, k, k_max);
    const double count = static_cast<double>(clusters.size());
    rb.add("clusters.count_bound.k" + std::to_string(k), in, count,
           cluster_count_bound(k, d_deg, loc));
    const double terms_pow = std::pow(double(ham.terms().size()), k);
    if (k <= 4 && terms_pow <= 2e6) {
      rb.add("clusters.brute_force_diff.k" + std::to_string(k), in,
             std::abs(count - double(brute_cluster_count(ham, origin, k))), 0.0);
    }
    rb.add("clusters.coeff_bound.k" + std::to_string(k), in,
           cluster_coeff_bound(k, beta, h, loc), cluster_coeff_bound(k, beta, h, loc), false);
  }
  for (double alpha : {0.05, 0.2}) {
    for (int k : {1, 2, 3}) {
      if (alpha * loc > 1.0) continue;
      rb.add("clusters.series_identity_rel_err[alpha=" + fmt_short(alpha) +
                 ";k=" + std::to_string(k) + "]",
             in, combo_identity_check(alpha, loc, k, 400), 1e-9);
    }
  }
  rb.add("clusters.araki_regime", in, araki_regime(beta, h, d_deg, loc) ? 1.0 : 0.0, 1.0, false);
  rb.add("clusters.separability_regime", in,
         separability_regime(beta, h, d_deg, loc) ? 1.0 : 0.0, 1.0, false);
  ArakiExpansional a = araki_expansional(ham, beta, origin);
  rb.add("clusters.araki_deviation", {{"aggregate_bound", a.aggregate_bound}}, a.deviation,
         a.aggregate_bound, a.hypotheses_ok);
}

void refrigerate_checks(ReportBuilder& rb, const LocalHamiltonian& base, double beta, double h,
                        int t) {
  Gadget g = build_gadget(base, h, t);
  const double be = beta_eff(beta, h, t);
  std::vector<std::pair<std::string, double>> in{{"beta", beta}, {"h", h}, {"t", double(t)}};
  rb.config("beta_eff", be);
  rb.config("gadget_sites", fmt(double(g.total.sites())));
  rb.config("locality", fmt(double(g.total.locality())));
  rb.config("degree", fmt(double(g.total.max_degree())));
  rb.add("refrigerate.beta_eff_below_t_beta", in, be, t * beta);
  // Each base term spawns t ancilla-coupled replicas, so a base site of
  // degree D sits in exactly tD terms; ancilla sites sit in one.
  rb.add("refrigerate.degree_bound", in, double(g.total.max_degree()),
         double(t) * double(base.max_degree()));
  if (g.total.sites() <= 12) {
    rb.add("refrigerate.marginal_trace_norm", in, verify_marginal(g, beta), 1e-10);
  } else {
    rb.add("refrigerate.marginal_skipped_large_instance", in, 0.0, 0.0, false);
  }
  if (base.sites() <= 4) {
    std::string hist;
    for (double p : diagonal_distribution(base, be)) {
      hist += (hist.empty() ? "" : ",") + fmt(p);
    }
    rb.config("p_h_histogram", hist);
  }
}

void truncation_checks(ReportBuilder& rb, const LocalHamiltonian& ham, double beta, double t,
                       const std::vector<int>& radii, std::uint64_t seed) {
  FieldResonantParams fr = field_resonant_params(ham, beta);
  LindbladianBuild full = build_lindbladian(ham, beta, fr);
  for (int radius : radii) {
    Superoperator lr = truncated_lindbladian(ham, beta, fr, radius);
    TruncationGap g = truncation_gap(full.generator, lr, t, ham.sites(), radius, seed, 128);
    rb.add("truncation.lower_estimate.R" + std::to_string(radius),
           {{"t", t}, {"n", double(ham.sites())}}, g.lower_estimate, g.paper_bound);
  }
}

// ---------------------------------------------------------------------------
// Subcommands

CommandOutput cmd_build(const Options& o) {
  ReportBuilder rb("build", o.tol_overrides);
  LocalHamiltonian ham = load_spec(o.spec);
  if (!o.h.empty()) ham = with_uniform_field(ham, o.h.front());
  rb.config("spec", o.spec);
  rb.config("n", double(ham.sites()));
  rb.config("beta", o.beta);
  rb.config("zeta", ham.zeta());
  FieldResonantParams params = pick_params(ham, o.beta, o);
  for (int i = 0; i < ham.sites(); ++i) {
    rb.config("site" + std::to_string(i) + ".delta", params.site[i].delta);
  }
  LindbladianBuild lb = build_lindbladian(ham, o.beta, params);
  db_checks(rb, "build", lb, Tols{});
  const double gap = spectral_gap(lb.generator);
  rb.add("build.neg_spectral_gap", {{"gap", gap}}, -gap, 0.0).pass = gap > 0.0;
  return {std::move(rb.report()), ""};
}

CommandOutput cmd_check_db(const Options& o) {
  ReportBuilder rb("check-db", o.tol_overrides);
  LocalHamiltonian ham = load_spec(o.spec);
  if (!o.h.empty()) ham = with_uniform_field(ham, o.h.front());
  rb.config("spec", o.spec);
  rb.config("beta", o.beta);
  FieldResonantParams params = pick_params(ham, o.beta, o);
  LindbladianBuild lb = build_lindbladian(ham, o.beta, params);
  db_checks(rb, "check_db", lb, Tols{});
  // Sandwich-route cross check where sigma is well conditioned.
  if (o.beta * lb.spectral.spectral_range() < 25.0) {
    rb.add("check_db.db_defect_dense_route", {{"beta", o.beta}},
           db_defect_dense(lb.generator, lb.gibbs), 1e-6, false);
  }
  return {std::move(rb.report()), ""};
}

CommandOutput cmd_mix(const Options& o) {
  ReportBuilder rb("mix", o.tol_overrides);
  LocalHamiltonian ham = load_spec(o.spec);
  if (!o.h.empty()) ham = with_uniform_field(ham, o.h.front());
  rb.config("spec", o.spec);
  rb.config("beta", o.beta);
  rb.config("eps", o.eps);
  rb.config("seed", std::to_string(o.seed));
  rb.config("t0_bound", fmt(double(mixing_time_bound(ham.sites(), o.eps))));
  MixOutcome m = run_mixing(ham, o.beta, pick_params(ham, o.beta, o), o.seed);
  std::vector<std::string> rows;
  mixing_checks(rb, "mix", m, o.eps, &rows);
  std::string csv = "label,t,distance\n";
  for (const auto& r : rows) csv += r + "\n";
  return {std::move(rb.report()), csv};
}

CommandOutput cmd_lr_shells(const Options& o) {
  ReportBuilder rb("lr-shells", o.tol_overrides);
  LocalHamiltonian base = load_spec(o.spec);
  rb.config("spec", o.spec);
  rb.config("kind", o.kind);
  const std::vector<double> hs = o.h.empty() ? std::vector<double>{0.0, 10.0, 1e4} : o.h;
  const std::vector<double> ts =
      o.kind == "heisenberg"
          ? (o.t_grid.empty() ? std::vector<double>{0.05, 0.1, 0.2} : o.t_grid)
          : std::vector<double>{0.0};
  const int site = o.site >= 0 ? o.site : base.sites() / 2;
  const int r_max = o.radius >= 0 ? o.radius : (o.kind == "heisenberg" ? 5 : 3);
  rb.config("site", double(site));
  rb.config("r_max", double(r_max));

  struct Point {
    double h, t;
  };
  std::vector<Point> pts;
  for (double t : ts)
    for (double h : hs) pts.push_back({h, t});

  // Each point gets its own builder so worker output lands in stable order.
  std::vector<ReportBuilder> partial(pts.size(), ReportBuilder("lr-shells", o.tol_overrides));
  std::vector<std::vector<std::string>> rows(pts.size());
  std::vector<std::vector<double>> bounds(pts.size());
  parallel_for(pts.size(), resolve_jobs(o), [&](std::size_t i) {
    LocalHamiltonian ham = with_uniform_field(base, pts[i].h);
    bounds[i] = shell_point_checks(partial[i], o.kind, ham, o.beta, pts[i].h, pts[i].t, o.omega,
                                   site, r_max, &rows[i]);
  });
  for (std::size_t i = 0; i < pts.size(); ++i) rb.append(std::move(partial[i].report().checks));
  // Bounds for F_r are field-independent: identical across the h grid.
  if (o.kind == "heisenberg") {
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      double diff = 0.0;
      const auto& ref = bounds[ti * hs.size()];
      for (std::size_t hi = 1; hi < hs.size(); ++hi) {
        const auto& cur = bounds[ti * hs.size() + hi];
        for (std::size_t r = 0; r < ref.size(); ++r) diff = std::max(diff, std::abs(cur[r] - ref[r]));
      }
      rb.add("lr_shells.h_independent_bounds[t=" + fmt_short(ts[ti]) + "]", {}, diff, 0.0);
    }
  }
  std::string csv = "kind,h,t,r,norm,bound\n";
  for (const auto& point_rows : rows)
    for (const auto& r : point_rows) csv += r + "\n";
  return {std::move(rb.report()), csv};
}

CommandOutput cmd_kernels(const Options& o) {
  ReportBuilder rb("kernels", o.tol_overrides);
  rb.config("beta", o.beta);
  const std::vector<double> gaps =
      o.h.empty() ? std::vector<double>{0.0, 1.0 / o.beta, 10.0 / o.beta} : o.h;
  std::vector<ReportBuilder> partial(gaps.size(), ReportBuilder("kernels", o.tol_overrides));
  std::vector<std::vector<std::string>> rows(gaps.size());
  parallel_for(gaps.size(), resolve_jobs(o), [&](std::size_t i) {
    kernel_point_checks(partial[i], o.beta, gaps[i], &rows[i]);
  });
  for (std::size_t i = 0; i < gaps.size(); ++i) rb.append(std::move(partial[i].report().checks));
  std::string csv = "beta,gap,check,closed,quadrature,bound,pass\n";
  for (const auto& point_rows : rows)
    for (const auto& r : point_rows) csv += r + "\n";
  return {std::move(rb.report()), csv};
}

CommandOutput cmd_contraction(const Options& o) {
  ReportBuilder rb("contraction", o.tol_overrides);
  rb.config("beta", o.beta);
  rb.config("delta", o.delta);
  rb.config("seed", std::to_string(o.seed));
  std::vector<double> hs = o.h;
  if (hs.empty()) {
    for (int k = 0; k < 17; ++k) hs.push_back(std::pow(10.0, -2.0 + 0.5 * k) / o.beta);
  }
  const int per_point = std::max<int>(1, (200 + int(hs.size()) - 1) / int(hs.size()));
  std::vector<ReportBuilder> partial(hs.size(), ReportBuilder("contraction", o.tol_overrides));
  std::vector<std::vector<std::string>> rows(hs.size());
  parallel_for(hs.size(), resolve_jobs(o), [&](std::size_t i) {
    contraction_point_checks(partial[i], o.beta, hs[i], o.delta, per_point,
                             o.seed + static_cast<std::uint64_t>(i), &rows[i]);
  });
  for (std::size_t i = 0; i < hs.size(); ++i) rb.append(std::move(partial[i].report().checks));

  // Negative control: canonical (field-blind) parameters lose the overlap.
  const double dead = overlap_integrals_canonical(10.0 / o.beta, o.beta).int_gamma_b2;
  rb.add("contraction.canonical_negative_control", {{"beta_h", 10.0}}, dead, 1e-8);

  // Update-matrix constants at these (D, L) = (2, 2) chain parameters.
  UpdateMatrixBound u = update_matrix_bound(o.beta, 2, 2, 1.0 / o.beta);
  rb.config("c_diag", u.c_diag);
  rb.config("c_const", u.c_const);
  const int n = 4;
  const double delta_col = std::min(o.delta, 1.0 / (4.0 * n * u.c_const));
  const double col = dobrushin_column_bound(n, o.beta, 2, 2, 1.0 / o.beta, delta_col);
  rb.add("contraction.column_bound_formula",
         {{"delta", delta_col}, {"n", double(n)}},
         std::abs(col - (1.0 - delta_col / (2.0 * n) + u.c_const * delta_col * delta_col)), 0.0);
  std::string csv = "h,int_gamma_a2,int_gamma_b2,int_gamma_c2,sector_xy,sector_z,quad_err,"
                    "channel_excess\n";
  for (const auto& point_rows : rows)
    for (const auto& r : point_rows) csv += r + "\n";
  return {std::move(rb.report()), csv};
}

CommandOutput cmd_clusters(const Options& o) {
  ReportBuilder rb("clusters", o.tol_overrides);
  LocalHamiltonian ham = load_spec(o.spec);
  if (!o.h.empty()) ham = with_uniform_field(ham, o.h.front());
  const double h_strength = ham.field().max_strength();
  rb.config("spec", o.spec);
  rb.config("beta", o.beta);
  rb.config("h", h_strength);
  rb.config("origin", double(o.origin));
  rb.config("k_max", double(o.k_max));
  if (o.origin < 0 || o.origin >= ham.sites()) throw UsageError("--origin out of range");
  if (o.k_max < 1 || o.k_max > 6) throw UsageError("--k-max must be in [1, 6]");
  cluster_checks(rb, ham, o.beta, h_strength, o.origin, o.k_max);
  return {std::move(rb.report()), ""};
}

CommandOutput cmd_refrigerate(const Options& o) {
  ReportBuilder rb("refrigerate", o.tol_overrides);
  LocalHamiltonian base = load_spec(o.spec);
  rb.config("spec", o.spec);
  rb.config("beta", o.beta);
  int t = o.anc_t;
  double h = o.h.empty() ? -1.0 : o.h.front();
  if (!o.regime.empty()) {
    RefrigerationRegime reg;
    if (o.regime == "case1" || o.regime == "1") reg = RefrigerationRegime::case1;
    else if (o.regime == "case2" || o.regime == "2") reg = RefrigerationRegime::case2;
    else throw UsageError("--regime must be case1 or case2");
    RefrigerationParams p = choose_params(o.beta, reg);
    t = p.t;
    h = p.h_min;
    rb.config("regime", o.regime);
  }
  if (t < 1 || h < 0) {
    throw UsageError("refrigerate needs --t and --h, or --regime case1|case2");
  }
  rb.config("t", double(t));
  rb.config("h", h);
  refrigerate_checks(rb, base, o.beta, h, t);
  return {std::move(rb.report()), ""};
}

CommandOutput cmd_suite(const Options& o) {
  ReportBuilder rb("suite", o.tol_overrides);
  rb.config("seed", std::to_string(o.seed));
  const int jobs = resolve_jobs(o);
  std::vector<std::string> csv_rows;

  // Kernel identities.
  {
    struct Pt {
      double beta, gap;
    };
    std::vector<Pt> pts;
    for (double beta : {0.05, 1.0})
      for (double rel : {0.0, 1.0}) pts.push_back({beta, rel / beta});
    std::vector<ReportBuilder> partial(pts.size(), ReportBuilder("suite", o.tol_overrides));
    parallel_for(pts.size(), jobs, [&](std::size_t i) {
      kernel_point_checks(partial[i], pts[i].beta, pts[i].gap, nullptr);
    });
    for (auto& p : partial) rb.append(std::move(p.report().checks));
  }

  // Detailed balance on chains across the field range.
  {
    struct Inst {
      int n;
      double beta, h;
    };
    std::vector<Inst> insts;
    for (int n : {2, 3}) {
      for (double beta : {0.2, 0.05}) {
        for (double h : {0.0, 1.0 / beta, 1e6}) insts.push_back({n, beta, h});
      }
    }
    std::vector<ReportBuilder> partial(insts.size(), ReportBuilder("suite", o.tol_overrides));
    parallel_for(insts.size(), jobs, [&](std::size_t i) {
      LocalHamiltonian ham = chain_hamiltonian(
          insts[i].n, "XX", ExternalField::uniform_z(insts[i].n, insts[i].h));
      LindbladianBuild lb =
          build_lindbladian(ham, insts[i].beta, field_resonant_params(ham, insts[i].beta));
      db_checks(partial[i],
                "db[n=" + std::to_string(insts[i].n) + ";beta=" + fmt_short(insts[i].beta) +
                    ";h=" + fmt_short(insts[i].h) + "]",
                lb, Tols{});
    });
    for (auto& p : partial) rb.append(std::move(p.report().checks));
  }

  // Mixing instances (the n <= 4 grid).
  {
    struct Inst {
      int n;
      double beta, bh;
    };
    std::vector<Inst> insts;
    for (int n : {2, 3, 4})
      for (double beta : {0.2, 0.05})
        for (double bh : {0.0, 2.0}) insts.push_back({n, beta, bh});
    std::vector<ReportBuilder> partial(insts.size(), ReportBuilder("suite", o.tol_overrides));
    std::vector<MixOutcome> outcomes(insts.size());
    parallel_for(insts.size(), jobs, [&](std::size_t i) {
      const double h = insts[i].bh / insts[i].beta;
      LocalHamiltonian ham =
          chain_hamiltonian(insts[i].n, "XX", ExternalField::uniform_z(insts[i].n, h));
      outcomes[i] = run_mixing(ham, insts[i].beta, field_resonant_params(ham, insts[i].beta),
                               SplitMix64::derive(o.seed, {0x737569ULL, i})());
    });
    for (std::size_t i = 0; i < insts.size(); ++i) {
      mixing_checks(partial[i],
                    "mix[n=" + std::to_string(insts[i].n) + ";beta=" + fmt_short(insts[i].beta) +
                        ";bh=" + fmt_short(insts[i].bh) + "]",
                    outcomes[i], 1e-6, &csv_rows);
      rb.append(std::move(partial[i].report().checks));
    }
  }

  // Heisenberg shells on the 6-qubit chain; jump/coherent on 4 qubits.
  {
    LocalHamiltonian base6 = chain_hamiltonian(6, "XX", ExternalField::zero(6));
    struct Pt {
      double h, t;
    };
    std::vector<Pt> pts;
    for (double t : {0.05, 0.1, 0.2})
      for (double h : {0.0, 10.0, 1e4}) pts.push_back({h, t});
    std::vector<ReportBuilder> partial(pts.size(), ReportBuilder("suite", o.tol_overrides));
    std::vector<std::vector<double>> bounds(pts.size());
    parallel_for(pts.size(), jobs, [&](std::size_t i) {
      LocalHamiltonian ham = with_uniform_field(base6, pts[i].h);
      bounds[i] = shell_point_checks(partial[i], "heisenberg", ham, 0.0, pts[i].h, pts[i].t, 0.0,
                                     2, 5, nullptr);
    });
    for (auto& p : partial) rb.append(std::move(p.report().checks));
    for (int ti = 0; ti < 3; ++ti) {
      double diff = 0.0;
      for (int hi = 1; hi < 3; ++hi) {
        for (std::size_t r = 0; r < bounds[ti * 3].size(); ++r) {
          diff = std::max(diff, std::abs(bounds[ti * 3 + hi][r] - bounds[ti * 3][r]));
        }
      }
      rb.add("lr_shells.h_independent_bounds[ti=" + std::to_string(ti) + "]", {}, diff, 0.0);
    }

    const double beta5 = 1.0 / 48.0;
    LocalHamiltonian base4 = chain_hamiltonian(4, "XX", ExternalField::zero(4));
    std::vector<double> hs5 = {0.0, 10.0, 1e4};
    std::vector<ReportBuilder> partial5(2 * hs5.size(), ReportBuilder("suite", o.tol_overrides));
    parallel_for(hs5.size(), jobs, [&](std::size_t i) {
      LocalHamiltonian ham = with_uniform_field(base4, hs5[i]);
      shell_point_checks(partial5[2 * i], "jump", ham, beta5, hs5[i], 0.0, 0.0, 1, 3, nullptr);
      shell_point_checks(partial5[2 * i + 1], "coherent", ham, beta5, hs5[i], 0.0, 0.0, 1, 3,
                         nullptr);
    });
    for (auto& p : partial5) rb.append(std::move(p.report().checks));
    LocalHamiltonian zz = chain_hamiltonian(4, "ZZ", ExternalField::uniform_z(4, 5.0));
    Mat cz = coherent_term(herm_eig(zz.dense()), tensor_embed(pauli('Z'), {1}, 4),
                           SiteKernelParams::field_resonant(beta5, 5.0));
    rb.add("coherent.commuting_z_vanishes", {}, op_norm(cz), 1e-12);
  }

  // Contraction sweep.
  {
    std::vector<double> hs;
    const double beta = 0.05;
    for (int k = 0; k < 17; ++k) hs.push_back(std::pow(10.0, -2.0 + 0.5 * k) / beta);
    std::vector<ReportBuilder> partial(hs.size(), ReportBuilder("suite", o.tol_overrides));
    parallel_for(hs.size(), jobs, [&](std::size_t i) {
      contraction_point_checks(partial[i], beta, hs[i], 0.2, 2,
                               o.seed + static_cast<std::uint64_t>(i), nullptr);
    });
    for (auto& p : partial) rb.append(std::move(p.report().checks));
    rb.add("contraction.canonical_negative_control", {{"beta_h", 10.0}},
           overlap_integrals_canonical(10.0 / beta, beta).int_gamma_b2, 1e-8);
  }

  // Clusters / expansional.
  {
    LocalHamiltonian chain3 = chain_hamiltonian(3, "XX", ExternalField::uniform_z(3, 10.0));
    cluster_checks(rb, chain3, 1e-5, 10.0, 1, 4);
    LocalHamiltonian free3 = LocalHamiltonian::build(3, {}, ExternalField::uniform_z(3, 50.0));
    ArakiExpansional f = araki_expansional(free3, 0.3, 1);
    rb.add("clusters.free_field_deviation", {}, f.deviation, 1e-12);
  }

  // Refrigeration.
  {
    Mat p = Mat::Zero(4, 4);
    p(3, 3) = 1.0;
    LocalHamiltonian base =
        LocalHamiltonian::build(2, {dense_term(p, {0, 1})}, ExternalField::zero(2));
    refrigerate_checks(rb, base, 0.5, 3.0, 2);
    for (double beta : {0.25, 0.75}) {
      for (auto reg : {RefrigerationRegime::case1, RefrigerationRegime::case2}) {
        RefrigerationParams rp = choose_params(beta, reg);
        rb.add("refrigerate.regime_beta_eff_floor[beta=" + fmt_short(beta) + "]",
               {{"t", double(rp.t)}, {"h_min", rp.h_min}}, 1.87,
               beta_eff(beta, rp.h_min, rp.t));
      }
    }
  }

  // Semigroup truncation.
  {
    LocalHamiltonian ham = chain_hamiltonian(3, "XX", ExternalField::uniform_z(3, 1.0));
    truncation_checks(rb, ham, 1.0 / 48.0, 0.5, {2, 3}, o.seed);
  }

  std::string csv = "label,t,distance\n";
  for (const auto& r : csv_rows) csv += r + "\n";
  return {std::move(rb.report()), csv};
}

// ---------------------------------------------------------------------------

std::string csv_path_for(const std::string& base) {
  std::string out = base;
  const auto dot = out.rfind(".json");
  if (dot != std::string::npos && dot == out.size() - 5) out = out.substr(0, dot);
  return out + ".csv";
}

std::string json_path_for(const std::string& base) {
  const auto dot = base.rfind(".json");
  if (dot != std::string::npos && dot == base.size() - 5) return base;
  return base + ".json";
}

int emit(const Options& o, CommandOutput out) {
  if (out.csv.empty()) out.csv = out.report.to_csv();
  const std::string base = o.out.empty() ? "gibbslab_" + out.report.command : o.out;
  const std::string jpath = json_path_for(base);
  const std::string cpath = csv_path_for(base);
  write_atomic(jpath, out.report.to_json());
  write_atomic(cpath, out.csv);

  int failed = 0, asserted = 0;
  for (const auto& c : out.report.checks) {
    if (!c.asserted) continue;
    ++asserted;
    if (!c.pass) {
      ++failed;
      std::cout << "FAIL  " << c.name << "  computed=" << fmt(c.computed)
                << "  bound=" << fmt(c.bound) << "\n";
    }
  }
  std::cout << out.report.command << ": " << (asserted - failed) << "/" << asserted
            << " asserted checks pass\n";
  std::cout << "report: " << jpath << "\ntable: " << cpath << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace gibbslab

int main(int argc, char** argv) {
  using gibbslab::CommandOutput;
  using gibbslab::Options;

  CLI::App app{"gibbslab: exact field-resonant Lindbladian laboratory (v" +
               std::string(gibbslab::version_string) + ")"};
  // Long-only help: the default "-h" short flag would collide with "--h".
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  Options o;
  std::function<CommandOutput(const Options&)> run;

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->set_help_flag("--help", "print this help message and exit");
    return s;
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "seed for all randomized checks (SplitMix64 streams)");
    s->add_option("--jobs", o.jobs, "worker pool size (fallback: GIBBSLAB_JOBS, then 1)");
    s->add_option("--out", o.out, "output base path; writes <out>.json and <out>.csv");
    s->add_option("--tol-overrides", o.tol_overrides,
                  "comma-separated name=value bound overrides for asserted checks");
  };

  {
    CLI::App* s = sub("build", "assemble the Lindbladian and report defects");
    s->add_option("--spec", o.spec, "Hamiltonian spec (JSON)")->required();
    s->add_option("--beta", o.beta, "inverse temperature")->required();
    s->add_option("--h", o.h, "override: uniform z field strength")->delimiter(',');
    s->add_option("--kernel-params", o.kernel_params,
                  "delta=D,sigma=S,eta=E or a JSON file with per-site entries");
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_build; });
  }
  {
    CLI::App* s = sub("check-db", "verify KMS detailed balance and fixed point");
    s->add_option("--spec", o.spec, "Hamiltonian spec (JSON)")->required();
    s->add_option("--beta", o.beta, "inverse temperature")->required();
    s->add_option("--h", o.h, "override: uniform z field strength")->delimiter(',');
    s->add_option("--kernel-params", o.kernel_params,
                  "delta=D,sigma=S,eta=E or a JSON file with per-site entries");
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_check_db; });
  }
  {
    CLI::App* s = sub("mix", "mixing curve, spectral gap, and decay checks");
    s->add_option("--spec", o.spec, "Hamiltonian spec (JSON)")->required();
    s->add_option("--beta", o.beta, "inverse temperature")->required();
    s->add_option("--h", o.h, "override: uniform z field strength")->delimiter(',');
    s->add_option("--eps", o.eps, "final trace-distance target");
    s->add_option("--kernel-params", o.kernel_params,
                  "delta=D,sigma=S,eta=E or a JSON file with per-site entries");
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_mix; });
  }
  {
    CLI::App* s = sub("lr-shells", "shell decompositions and locality bounds");
    s->add_option("--spec", o.spec, "Hamiltonian spec (JSON)")->required();
    s->add_option("--kind", o.kind, "heisenberg | jump | coherent");
    s->add_option("--beta", o.beta, "inverse temperature (jump/coherent kinds)");
    s->add_option("--h", o.h, "field grid")->delimiter(',');
    s->add_option("--t", o.t_grid, "time grid (heisenberg kind)")->delimiter(',');
    s->add_option("--omega", o.omega, "jump frequency (jump kind)");
    s->add_option("--site", o.site, "anchor site (default: middle)");
    s->add_option("--radius", o.radius, "largest shell radius");
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_lr_shells; });
  }
  {
    CLI::App* s = sub("kernels", "kernel closed forms vs quadrature and bounds");
    s->add_option("--beta", o.beta, "inverse temperature")->required();
    s->add_option("--h", o.h, "local gap grid")->delimiter(',');
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_kernels; });
  }
  {
    CLI::App* s = sub("contraction", "overlap integrals and channel contraction");
    s->add_option("--beta", o.beta, "inverse temperature")->required();
    s->add_option("--h", o.h, "field grid (default: 17 log-spaced values)")->delimiter(',');
    s->add_option("--delta", o.delta, "channel step size");
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_contraction; });
  }
  {
    CLI::App* s = sub("clusters", "cluster counts, series identity, expansional");
    s->add_option("--spec", o.spec, "Hamiltonian spec (JSON)")->required();
    s->add_option("--beta", o.beta, "inverse temperature")->required();
    s->add_option("--h", o.h, "override: uniform z field strength")->delimiter(',');
    s->add_option("--origin", o.origin, "anchor site");
    s->add_option("--k-max", o.k_max, "largest cluster size (<= 6)");
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_clusters; });
  }
  {
    CLI::App* s = sub("refrigerate", "ancilla gadget and effective temperature");
    s->add_option("--spec", o.spec, "base Hamiltonian spec (commuting projectors)")->required();
    s->add_option("--beta", o.beta, "physical inverse temperature")->required();
    s->add_option("--t", o.anc_t, "ancilla copies per term");
    s->add_option("--h", o.h, "ancilla field strength")->delimiter(',');
    s->add_option("--regime", o.regime, "case1 | case2 (picks t and h automatically)");
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_refrigerate; });
  }
  {
    CLI::App* s = sub("suite", "run every check section at desk scale");
    add_common(s);
    s->callback([&] { run = gibbslab::cmd_suite; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help/version requests exit 0 through app.exit; real parse errors
    // collapse onto the usage exit code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CommandOutput out = run(o);
    return gibbslab::emit(o, std::move(out));
  } catch (const gibbslab::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

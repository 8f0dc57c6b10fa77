// Copyright 2026 The ustatdp Authors
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

// Command-line front end. Talks to the library only through ustatdp.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ustatdp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAudit = 2;
constexpr int kExitBottom = 3;

struct Globals {
  uint64_t seed = 1;
  std::string eps = "1";
  std::string alpha = "0.05";
  std::string out;
};

int ExitFor(ustatdp_status s) {
  switch (s) {
    case USTATDP_OK:
      return kExitOk;
    case USTATDP_BOTTOM:
      return kExitBottom;
    case USTATDP_AUDIT_FAILURE:
      return kExitAudit;
    default:
      return kExitError;
  }
}

int Report(ustatdp_status s) {
  if (s != USTATDP_OK) {
    std::cerr << "error: " << ustatdp_status_name(s) << ": "
              << ustatdp_last_error() << "\n";
  }
  return ExitFor(s);
}

void PrintWarnings() {
  const std::string w = ustatdp_last_warnings();
  if (w.empty()) return;
  std::istringstream in(w);
  for (std::string line; std::getline(in, line);) {
    std::cerr << "warning: " << line << "\n";
  }
}

void PrintLedger(const ustatdp_budget* b) {
  const size_t len = ustatdp_budget_summary(b, nullptr, 0);
  std::string buf(len + 1, '\0');
  ustatdp_budget_summary(b, buf.data(), buf.size());
  buf.resize(len);
  std::cerr << buf;
  if (!buf.empty() && buf.back() != '\n') std::cerr << "\n";
}

double ParseScalar(const std::string& flag, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw CLI::ValidationError(flag, "expected a single number, got '" +
                                         text + "'");
  }
  return v;
}

// One CSV row for a single estimate, written when --out is given.
int WriteReportCsv(const std::string& path, const std::string& command,
                   const ustatdp_report& r, ustatdp_status s,
                   const std::string& extra_header = "",
                   const std::string& extra = "") {
  if (path.empty()) return kExitOk;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitError;
  }
  out.precision(17);
  out << "command,estimate,radius,noise_scale,iterations,L,bad,bottom"
      << extra_header << "\n";
  out << command << ",";
  if (s == USTATDP_OK) out << r.estimate;
  out << "," << r.radius << "," << r.noise_scale << "," << r.iterations
      << "," << r.L << "," << r.bad_count << "," << r.bottom << extra
      << "\n";
  return kExitOk;
}

void PrintReport(const ustatdp_report& r, ustatdp_status s) {
  std::cout.precision(10);
  if (s == USTATDP_OK) {
    std::cout << "estimate " << r.estimate << "\n";
  } else {
    std::cout << "estimate bottom\n";
  }
  std::cout << "radius " << r.radius << "\n"
            << "noise_scale " << r.noise_scale << "\n"
            << "iterations " << r.iterations << "\n"
            << "L " << r.L << "\n"
            << "bad " << r.bad_count << "\n";
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string data;
  std::string kernel = "pair-mean";
  double tau = 0;
  std::string method = "all";
  std::string xi = "auto";
  double C = -1;
  double R = 10;
  uint64_t M = 0;
  std::string family;
  uint64_t family_subsample = 0;
  std::string family_out;
  bool strict = false;
};

int RunEstimate(const Globals& g, const EstimateArgs& a) {
  ustatdp_estimate_options o;
  ustatdp_estimate_options_init(&o);
  const std::string methods[] = {"naive", "all", "subsampled", "hajek"};
  int mi = 0;
  while (mi < 4 && methods[mi] != a.method) ++mi;
  o.method = static_cast<ustatdp_method>(mi);
  o.eps = ParseScalar("--eps", g.eps);
  o.alpha = ParseScalar("--alpha", g.alpha);
  o.R = a.R;
  o.tau = a.tau;
  o.M = a.M;
  o.C = a.C;
  o.seed = g.seed;
  o.strict_alg3_scale = a.strict;
  if (a.xi == "auto") {
    o.xi_mode = USTATDP_XI_AUTO;
  } else if (a.xi == "auto-subgaussian") {
    o.xi_mode = USTATDP_XI_SUBGAUSSIAN;
  } else if (a.xi == "auto-degenerate") {
    o.xi_mode = USTATDP_XI_DEGENERATE;
  } else {
    o.xi_mode = USTATDP_XI_VALUE;
    o.xi = ParseScalar("--xi", a.xi);
  }

  const bool categorical = a.kernel == "collision" ||
                           a.kernel.rfind("equality:", 0) == 0;
  ustatdp_dataset* d = nullptr;
  ustatdp_status s = ustatdp_dataset_read(a.data.c_str(), categorical, &d);
  if (s != USTATDP_OK) return Report(s);
  ustatdp_kernel* h = nullptr;
  s = ustatdp_kernel_builtin(a.kernel.c_str(), a.tau, &h);
  if (s != USTATDP_OK) {
    ustatdp_dataset_free(d);
    return Report(s);
  }

  ustatdp_family* f = nullptr;
  const int64_t n = static_cast<int64_t>(ustatdp_dataset_size(d));
  if (!a.family.empty()) {
    s = ustatdp_family_read(a.family.c_str(), n, &f);
  } else if (a.family_subsample > 0) {
    s = ustatdp_family_subsample(n, ustatdp_kernel_degree(h),
                                 a.family_subsample, g.seed, &f);
  }
  if (s == USTATDP_OK && f && !a.family_out.empty()) {
    s = ustatdp_family_write(f, a.family_out.c_str());
  }
  if (s != USTATDP_OK) {
    ustatdp_kernel_free(h);
    ustatdp_dataset_free(d);
    return Report(s);
  }
  o.family = f;

  ustatdp_budget* b = nullptr;
  ustatdp_budget_new(o.eps, &b);
  ustatdp_report r{};
  s = ustatdp_estimate(h, d, &o, b, &r);
  PrintWarnings();
  if (s == USTATDP_OK || s == USTATDP_BOTTOM) {
    PrintReport(r, s);
    if (WriteReportCsv(g.out, "estimate", r, s) != kExitOk) s = USTATDP_IO_ERROR;
  }
  PrintLedger(b);
  const int code = Report(s);
  ustatdp_budget_free(b);
  ustatdp_family_free(f);
  ustatdp_kernel_free(h);
  ustatdp_dataset_free(d);
  return code;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string emit = "experiment";
  std::string method = "all";
  std::string kernel = "pair-mean";
  std::string distribution = "gaussian";
  std::string params;
  std::string n = "100";
  std::string M = "0";
  int64_t trials = 1;
  std::string xi = "auto";
  bool boost = false;
  bool strict = false;
  bool timing = false;
  int threads = 1;
};

double Param(const std::string& params, const std::string& key,
             double fallback) {
  std::istringstream in(params);
  for (std::string kv; std::getline(in, kv, ',');) {
    const auto eq = kv.find('=');
    if (eq != std::string::npos && kv.substr(0, eq) == key) {
      return ParseScalar(key, kv.substr(eq + 1));
    }
  }
  return fallback;
}

int RunSimulate(const Globals& g, const SimulateArgs& a) {
  if (a.emit == "data") {
    // A single synthetic dataset instead of an experiment grid.
    const int64_t n = static_cast<int64_t>(ParseScalar("--n", a.n));
    ustatdp_dataset* d = nullptr;
    ustatdp_status s;
    if (a.distribution == "gaussian") {
      s = ustatdp_simulate_gaussian(n, Param(a.params, "mu", 0),
                                    Param(a.params, "sigma", 1), g.seed, &d);
    } else if (a.distribution == "two-level") {
      const int m = static_cast<int>(Param(a.params, "m", 100));
      const std::string spec =
          "two-level:" + std::to_string(Param(a.params, "delta", 0));
      s = ustatdp_simulate_multinomial(m, spec.c_str(), n, g.seed, &d);
    } else {
      std::cerr << "error: cannot emit data for distribution '"
                << a.distribution << "'\n";
      return kExitError;
    }
    if (s == USTATDP_OK) {
      const bool to_stdout = g.out.empty() || g.out == "-";
      s = ustatdp_dataset_write(d, to_stdout ? "/dev/stdout" : g.out.c_str());
    }
    ustatdp_dataset_free(d);
    return Report(s);
  }
  ustatdp_experiment e;
  ustatdp_experiment_init(&e);
  e.method = a.method.c_str();
  e.kernel = a.kernel.c_str();
  e.distribution = a.distribution.c_str();
  e.params = a.params.c_str();
  e.n = a.n.c_str();
  e.eps = g.eps.c_str();
  e.alpha = g.alpha.c_str();
  e.M = a.M.c_str();
  e.trials = a.trials;
  e.seed = g.seed;
  e.xi = a.xi.c_str();
  e.boost = a.boost;
  e.strict_alg3_scale = a.strict;
  e.timing = a.timing;
  e.threads = a.threads;
  const ustatdp_status s =
      ustatdp_run_experiment(&e, g.out.empty() ? "-" : g.out.c_str());
  // Every trial gets a fresh budget equal to its eps; there is no shared
  // ledger to print.
  std::cerr << "privacy ledger: one independent budget of eps per trial\n";
  return Report(s);
}

// --------------------------------------------------------- uniformity-test

struct UniformityArgs {
  int m = 0;
  double delta = 0;
  std::string data;
  std::string simulate;
  int64_t n = 0;
  bool strict = false;
};

int RunUniformity(const Globals& g, const UniformityArgs& a) {
  const double eps = ParseScalar("--eps", g.eps);
  const double alpha = ParseScalar("--alpha", g.alpha);
  ustatdp_dataset* d = nullptr;
  ustatdp_status s;
  if (!a.data.empty()) {
    s = ustatdp_dataset_read(a.data.c_str(), 1, &d);
  } else {
    if (a.n <= 0) {
      std::cerr << "error: --simulate needs --n\n";
      return kExitError;
    }
    s = ustatdp_simulate_multinomial(a.m, a.simulate.c_str(), a.n, g.seed,
                                     &d);
  }
  if (s != USTATDP_OK) return Report(s);
  ustatdp_budget* b = nullptr;
  ustatdp_budget_new(eps, &b);
  ustatdp_report r{};
  int reject = 0;
  double threshold = 0;
  s = ustatdp_uniformity_test(d, a.m, a.delta, eps, alpha, g.seed, a.strict,
                              b, &reject, &threshold, &r);
  PrintWarnings();
  if (s == USTATDP_OK || s == USTATDP_BOTTOM) {
    PrintReport(r, s);
    std::cout << "threshold " << threshold << "\n"
              << "decision " << (reject ? "reject" : "accept") << "\n";
    std::ostringstream extra;
    extra.precision(17);
    extra << "," << threshold << "," << (reject ? "reject" : "accept");
    if (WriteReportCsv(g.out, "uniformity-test", r, s, ",threshold,decision",
                       extra.str()) != kExitOk) {
      s = USTATDP_IO_ERROR;
    }
  }
  PrintLedger(b);
  const int code = Report(s);
  ustatdp_budget_free(b);
  ustatdp_dataset_free(d);
  return code;
}

// ----------------------------------------------------------- rgg-triangles

struct TriangleArgs {
  std::string graph;
  std::string simulate;
  int64_t nodes = 0;
  double nu_scale = 2;
  bool strict = false;
};

int RunTriangles(const Globals& g, const TriangleArgs& a) {
  const double eps = ParseScalar("--eps", g.eps);
  const double alpha = ParseScalar("--alpha", g.alpha);
  ustatdp_graph* gr = nullptr;
  ustatdp_status s;
  if (!a.graph.empty()) {
    s = ustatdp_graph_read(a.graph.c_str(), a.nodes, &gr);
  } else {
    const auto comma = a.simulate.find(',');
    if (comma == std::string::npos) {
      std::cerr << "error: --simulate expects n,r\n";
      return kExitError;
    }
    const double n = ParseScalar("--simulate", a.simulate.substr(0, comma));
    const double r = ParseScalar("--simulate", a.simulate.substr(comma + 1));
    s = ustatdp_graph_sample_rgg(static_cast<int64_t>(n), r, g.seed, &gr);
  }
  if (s != USTATDP_OK) return Report(s);
  // The edge-density release and the Hajek release each spend eps.
  ustatdp_budget* b = nullptr;
  ustatdp_budget_new(2 * eps, &b);
  ustatdp_report r{};
  s = ustatdp_triangle_density(gr, eps, alpha, g.seed, a.nu_scale, a.strict,
                               b, &r);
  PrintWarnings();
  if (s == USTATDP_OK || s == USTATDP_BOTTOM) {
    PrintReport(r, s);
    if (WriteReportCsv(g.out, "rgg-triangles", r, s) != kExitOk) {
      s = USTATDP_IO_ERROR;
    }
  }
  PrintLedger(b);
  const int code = Report(s);
  ustatdp_budget_free(b);
  ustatdp_graph_free(gr);
  return code;
}

// ------------------------------------------------------------------ audits

struct SmoothnessArgs {
  int n = 5;
  double xi = 0;
  double C = 1;
  std::string kernel = "equality";
  double s_scale = 1;
};

int RunAuditSmoothness(const Globals& g, const SmoothnessArgs& a) {
  ustatdp_smoothness_report r{};
  const ustatdp_status s =
      ustatdp_audit_smoothness(a.n, ParseScalar("--eps", g.eps), a.xi, a.C,
                               a.kernel.c_str(), a.s_scale, &r);
  if (s == USTATDP_OK) {
    std::cout << "datasets " << r.datasets << "\n"
              << "pairs " << r.pairs << "\n"
              << "dominance_margin " << r.dominance_margin << "\n"
              << "smoothness_margin " << r.smoothness_margin << "\n"
              << "audit pass\n";
  } else if (s == USTATDP_AUDIT_FAILURE) {
    std::cout << "audit FAIL\n";
  }
  std::cerr << "privacy ledger: no releases (audit only)\n";
  return Report(s);
}

struct NoiseArgs {
  std::string law = "quartic";
  int64_t draws = 1000000;
  double scale = 1;
  double reference_scale = 0;
};

int RunAuditNoise(const Globals& g, const NoiseArgs& a) {
  ustatdp_gof_report r{};
  const ustatdp_status s = ustatdp_audit_noise(
      a.law.c_str(), a.draws, g.seed, a.scale, a.reference_scale, &r);
  if (s == USTATDP_OK || s == USTATDP_AUDIT_FAILURE) {
    std::cout << "draws " << r.draws << "\n"
              << "gap " << r.gap << "\n"
              << "threshold " << r.threshold << "\n"
              << "acceptance_rate " << r.acceptance_rate << "\n"
              << "audit " << (r.passed ? "pass" : "FAIL") << "\n";
  }
  std::cerr << "privacy ledger: no releases (audit only)\n";
  return Report(s);
}

struct FixtureArgs {
  int64_t n = 60;
  int k = 2;
  std::string d0_out;
  std::string d1_out;
};

int RunFixture(const Globals& g, const FixtureArgs& a) {
  ustatdp_dataset* d0 = nullptr;
  ustatdp_dataset* d1 = nullptr;
  ustatdp_fixture_info info{};
  ustatdp_status s = ustatdp_fixture_adversarial(
      a.n, a.k, ParseScalar("--eps", g.eps), &d0, &d1, &info);
  PrintWarnings();
  if (s == USTATDP_OK) {
    std::cout.precision(10);
    std::cout << "b_n " << info.b_n << "\n"
              << "flipped " << info.flipped << "\n"
              << "xi " << info.xi << "\n"
              << "gap " << info.gap << "\n"
              << "bound " << info.bound << "\n"
              << "inequality " << (info.holds ? "holds" : "FAILS") << "\n";
    if (!a.d0_out.empty()) s = ustatdp_dataset_write(d0, a.d0_out.c_str());
    if (s == USTATDP_OK && !a.d1_out.empty()) {
      s = ustatdp_dataset_write(d1, a.d1_out.c_str());
    }
  }
  ustatdp_dataset_free(d0);
  ustatdp_dataset_free(d1);
  std::cerr << "privacy ledger: no releases (fixture only)\n";
  return Report(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private U-statistic estimation"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");

  Globals g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--eps", g.eps,
                 "privacy parameter (comma grid for simulate)")
      ->capture_default_str();
  app.add_option("--alpha", g.alpha,
                 "failure probability; 1 disables median of means")
      ->capture_default_str();
  app.add_option("--out", g.out, "CSV output path");

  int code = kExitOk;

  EstimateArgs ea;
  auto* est = app.add_subcommand("estimate", "private mean of a U-statistic");
  est->add_option("--data", ea.data, "one value per line")->required();
  est->add_option("--kernel", ea.kernel,
                  "identity | pair-mean | collision | equality:<k> | "
                  "constant:<k>")
      ->capture_default_str();
  est->add_option("--tau", ea.tau,
                  "sub-Gaussian proxy, needed by identity and pair-mean; the "
                  "value for constant:<k>");
  est->add_option("--method", ea.method)
      ->check(CLI::IsMember({"naive", "all", "subsampled", "hajek"}))
      ->capture_default_str();
  est->add_option("--xi", ea.xi,
                  "auto | auto-subgaussian | auto-degenerate | <value>")
      ->capture_default_str();
  est->add_option("--C", ea.C, "kernel range override");
  est->add_option("--R", ea.R, "prior bound |theta| <= R")
      ->capture_default_str();
  est->add_option("--M", ea.M, "subsample size (0 = automatic)");
  est->add_option("--family", ea.family,
                  "hajek on a subset family read from this file");
  est->add_option("--family-subsample", ea.family_subsample,
                  "hajek on a random family of this many subsets");
  est->add_option("--family-out", ea.family_out,
                  "write the family used to this file");
  est->add_flag("--strict-scale", ea.strict,
                "noise at S/eps instead of 10 S/eps");
  est->callback([&] { code = RunEstimate(g, ea); });

  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo experiment grid");
  sim->add_option("--emit", sa.emit, "experiment | data")
      ->check(CLI::IsMember({"experiment", "data"}))
      ->capture_default_str();
  sim->add_option("--method", sa.method)
      ->check(CLI::IsMember({"naive", "all", "subsampled", "hajek"}))
      ->capture_default_str();
  sim->add_option("--kernel", sa.kernel,
                  "identity | pair-mean | collision | constant")
      ->capture_default_str();
  sim->add_option("--distribution", sa.distribution,
                  "gaussian | two-level | constant")
      ->capture_default_str();
  sim->add_option("--params", sa.params, "key=value,... e.g. mu=0,sigma=1");
  sim->add_option("--n", sa.n, "comma grid of sample sizes")
      ->capture_default_str();
  sim->add_option("--M", sa.M, "comma grid of subsample sizes");
  sim->add_option("--trials", sa.trials)->capture_default_str();
  sim->add_option("--xi", sa.xi)->capture_default_str();
  sim->add_flag("--boost", sa.boost, "wrap in median of means");
  sim->add_flag("--strict-scale", sa.strict);
  sim->add_flag("--timing", sa.timing, "add a wall_time_ms column");
  sim->add_option("--threads", sa.threads)->capture_default_str();
  sim->callback([&] { code = RunSimulate(g, sa); });

  UniformityArgs ua;
  auto* uni = app.add_subcommand("uniformity-test",
                                 "private collision-based uniformity test");
  uni->add_option("--m", ua.m, "number of categories")->required();
  uni->add_option("--delta", ua.delta, "TV separation")->required();
  auto* udata = uni->add_option("--data", ua.data, "labels 1..m, one per line");
  auto* usim = uni->add_option("--simulate", ua.simulate,
                               "uniform | two-level:<delta> | a1,a2,...");
  uni->add_option("--n", ua.n, "sample size for --simulate");
  uni->add_flag("--strict-scale", ua.strict);
  udata->excludes(usim);
  uni->callback([&] {
    if (ua.data.empty() && ua.simulate.empty()) {
      throw CLI::RequiredError("--data or --simulate");
    }
    code = RunUniformity(g, ua);
  });

  TriangleArgs ta;
  auto* tri = app.add_subcommand("rgg-triangles",
                                 "private triangle density of a graph");
  auto* tgraph =
      tri->add_option("--graph", ta.graph, "edge list, 1-based 'i j' lines");
  auto* tsim = tri->add_option("--simulate", ta.simulate,
                               "random geometric graph n,r");
  tri->add_option("--nodes", ta.nodes,
                  "node count for --graph (default: largest id)");
  tri->add_option("--nu-scale", ta.nu_scale,
                  "edge-density noise is this over (n eps)")
      ->capture_default_str();
  tri->add_flag("--strict-scale", ta.strict);
  tgraph->excludes(tsim);
  tri->callback([&] {
    if (ta.graph.empty() && ta.simulate.empty()) {
      throw CLI::RequiredError("--graph or --simulate");
    }
    code = RunTriangles(g, ta);
  });

  SmoothnessArgs ma;
  auto* smo = app.add_subcommand("audit-smoothness",
                                 "exhaustive smooth-sensitivity check");
  smo->add_option("--n", ma.n)->check(CLI::Range(2, 6))->capture_default_str();
  smo->add_option("--xi", ma.xi, "0 picks the degenerate choice");
  smo->add_option("--C", ma.C)->capture_default_str();
  smo->add_option("--kernel", ma.kernel)
      ->check(CLI::IsMember({"equality", "constant"}))
      ->capture_default_str();
  smo->add_option("--s-scale", ma.s_scale,
                  "multiply S before checking (fault injection)")
      ->capture_default_str();
  smo->callback([&] { code = RunAuditSmoothness(g, ma); });

  NoiseArgs na;
  auto* noi = app.add_subcommand("audit-noise", "KS check of a noise sampler");
  noi->add_option("--law", na.law)
      ->check(CLI::IsMember({"laplace", "quartic"}))
      ->capture_default_str();
  noi->add_option("--draws", na.draws)->capture_default_str();
  noi->add_option("--scale", na.scale, "sampling scale")
      ->capture_default_str();
  noi->add_option("--reference-scale", na.reference_scale,
                  "CDF scale to test against (0 = same as --scale)");
  noi->callback([&] { code = RunAuditNoise(g, na); });

  FixtureArgs fa;
  auto* fix = app.add_subcommand("fixture-adversarial",
                                 "lower-bound dataset pair for equality");
  fix->add_option("--n", fa.n)->capture_default_str();
  fix->add_option("--k", fa.k)->capture_default_str();
  fix->add_option("--d0-out", fa.d0_out);
  fix->add_option("--d1-out", fa.d1_out);
  fix->callback([&] { code = RunFixture(g, fa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }
  return code;
}

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

#include "ustatdp.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "ustatdp/applications.h"
#include "ustatdp/boosting.h"
#include "ustatdp/dataset.h"
#include "ustatdp/estimate.h"
#include "ustatdp/harness/audit.h"
#include "ustatdp/harness/experiment.h"
#include "ustatdp/kernel.h"
#include "ustatdp/privacy_budget.h"
#include "ustatdp/random.h"
#include "ustatdp/subset_family.h"
#include "ustatdp/ustat.h"

struct ustatdp_budget {
  ustatdp::PrivacyBudget impl;
};
struct ustatdp_dataset {
  ustatdp::Dataset impl;
};
struct ustatdp_kernel {
  ustatdp::Kernel impl;
};
struct ustatdp_family {
  std::shared_ptr<const ustatdp::SubsetFamily> impl;
};
struct ustatdp_graph {
  ustatdp::GeometricGraph impl;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_warnings;

ustatdp_status Fail(ustatdp_status code, std::string message) {
  g_error = std::move(message);
  return code;
}

ustatdp_status FromStatus(const absl::Status& s) {
  if (s.ok()) return USTATDP_OK;
  ustatdp_status code = USTATDP_INTERNAL;
  switch (s.code()) {
    case absl::StatusCode::kInvalidArgument:
      code = USTATDP_INVALID_ARGUMENT;
      break;
    case absl::StatusCode::kResourceExhausted:
      code = USTATDP_BUDGET_EXHAUSTED;
      break;
    case absl::StatusCode::kOutOfRange:
      code = USTATDP_COMBINATORIAL_OVERFLOW;
      break;
    case absl::StatusCode::kFailedPrecondition:
      code = USTATDP_PRECONDITION;
      break;
    case absl::StatusCode::kAborted:
      code = USTATDP_AUDIT_FAILURE;
      break;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kDataLoss:
      code = USTATDP_IO_ERROR;
      break;
    default:
      break;
  }
  return Fail(code, std::string(s.message()));
}

#define USTATDP_REQUIRE(cond, what)                        \
  do {                                                     \
    if (!(cond)) return Fail(USTATDP_INVALID_ARGUMENT, what); \
  } while (0)

ustatdp_status FillReport(const ustatdp::EstimateReport& r,
                          ustatdp_report* out) {
  g_warnings = absl::StrJoin(r.warnings, "\n");
  out->estimate = r.estimate;
  out->radius = r.radius;
  out->noise_scale = r.noise_scale;
  out->iterations = r.iterations;
  out->L = r.L;
  out->bad_count = r.bad_count;
  out->bottom = r.bottom ? 1 : 0;
  out->warning_count = static_cast<int>(r.warnings.size());
  if (r.bottom) return Fail(USTATDP_BOTTOM, r.bottom_reason);
  return USTATDP_OK;
}

// Median of means at alpha, or a single run when q = 1.
absl::StatusOr<ustatdp::EstimateReport> RunBoosted(
    const ustatdp::ChunkEstimator& est, const ustatdp::Dataset& d, int k,
    double alpha, uint64_t seed, ustatdp::PrivacyBudget& budget) {
  auto plan = ustatdp::MakeBoostPlan(alpha, d.size(), k);
  if (!plan.ok()) return plan.status();
  if (plan->q == 1) {
    ustatdp::Rng rng(seed);
    return est(d, budget, rng);
  }
  return ustatdp::MedianOfMeans(est, d, *plan, budget, seed);
}


template <typename T>
bool ParseGrid(const char* text, std::vector<T>* out) {
  out->clear();
  if (!text) return false;
  for (absl::string_view tok :
       absl::StrSplit(text, ',', absl::SkipWhitespace())) {
    tok = absl::StripAsciiWhitespace(tok);
    T v;
    bool ok;
    if constexpr (std::is_floating_point_v<T>) {
      ok = absl::SimpleAtod(tok, &v);
    } else {
      ok = absl::SimpleAtoi(tok, &v);
    }
    if (!ok) return false;
    out->push_back(v);
  }
  return !out->empty();
}


ustatdp_status WrapFamily(absl::StatusOr<ustatdp::SubsetFamily> f,
                          ustatdp_family** out) {
  if (!f.ok()) return FromStatus(f.status());
  *out = new ustatdp_family{
      std::make_shared<const ustatdp::SubsetFamily>(*std::move(f))};
  return USTATDP_OK;
}

}  // namespace

extern "C" {

const char* ustatdp_last_error(void) { return g_error.c_str(); }
const char* ustatdp_last_warnings(void) { return g_warnings.c_str(); }

const char* ustatdp_status_name(ustatdp_status s) {
  switch (s) {
    case USTATDP_OK:
      return "ok";
    case USTATDP_INVALID_ARGUMENT:
      return "invalid argument";
    case USTATDP_BUDGET_EXHAUSTED:
      return "budget exhausted";
    case USTATDP_COMBINATORIAL_OVERFLOW:
      return "combinatorial overflow";
    case USTATDP_PRECONDITION:
      return "precondition failed";
    case USTATDP_BOTTOM:
      return "bottom";
    case USTATDP_AUDIT_FAILURE:
      return "audit failure";
    case USTATDP_IO_ERROR:
      return "i/o error";
    case USTATDP_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

// ---- budget ----

ustatdp_status ustatdp_budget_new(double total, ustatdp_budget** out) {
  USTATDP_REQUIRE(out, "null output");
  USTATDP_REQUIRE(total > 0 && std::isfinite(total),
                  "budget must be positive");
  *out = new ustatdp_budget{ustatdp::PrivacyBudget(total)};
  return USTATDP_OK;
}

void ustatdp_budget_free(ustatdp_budget* b) { delete b; }
double ustatdp_budget_total(const ustatdp_budget* b) {
  return b->impl.total();
}
double ustatdp_budget_spent(const ustatdp_budget* b) {
  return b->impl.spent();
}
size_t ustatdp_budget_entry_count(const ustatdp_budget* b) {
  return b->impl.ledger().size();
}

ustatdp_status ustatdp_budget_entry(const ustatdp_budget* b, size_t i,
                                    const char** label, double* eps) {
  USTATDP_REQUIRE(b && i < b->impl.ledger().size(), "no such ledger entry");
  const auto& e = b->impl.ledger()[i];
  if (label) *label = e.label.c_str();
  if (eps) *eps = e.epsilon;
  return USTATDP_OK;
}

size_t ustatdp_budget_summary(const ustatdp_budget* b, char* buf,
                              size_t len) {
  const std::string s = b->impl.Summary();
  if (buf && len > 0) {
    const size_t n = std::min(len - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return s.size();
}

// ---- datasets ----

ustatdp_status ustatdp_dataset_from_array(const double* values, size_t n,
                                          ustatdp_dataset** out) {
  USTATDP_REQUIRE(out && (values || n == 0), "null argument");
  *out = new ustatdp_dataset{
      ustatdp::Dataset{std::vector<double>(values, values + n)}};
  return USTATDP_OK;
}

ustatdp_status ustatdp_dataset_read(const char* path, int categorical,
                                    ustatdp_dataset** out) {
  USTATDP_REQUIRE(path && out, "null argument");
  auto d = categorical ? ustatdp::ReadCategorical(path)
                       : ustatdp::ReadDataset(path);
  if (!d.ok()) return FromStatus(d.status());
  *out = new ustatdp_dataset{*std::move(d)};
  return USTATDP_OK;
}

ustatdp_status ustatdp_dataset_write(const ustatdp_dataset* d,
                                     const char* path) {
  USTATDP_REQUIRE(d && path, "null argument");
  return FromStatus(ustatdp::WriteDataset(d->impl, path));
}

size_t ustatdp_dataset_size(const ustatdp_dataset* d) {
  return d->impl.size();
}
const double* ustatdp_dataset_values(const ustatdp_dataset* d) {
  return d->impl.points.data();
}
void ustatdp_dataset_free(ustatdp_dataset* d) { delete d; }

ustatdp_status ustatdp_simulate_gaussian(int64_t n, double mu, double sigma,
                                         uint64_t seed,
                                         ustatdp_dataset** out) {
  USTATDP_REQUIRE(out, "null output");
  USTATDP_REQUIRE(n >= 1 && sigma >= 0, "need n >= 1 and sigma >= 0");
  ustatdp::Rng rng(seed);
  ustatdp::Dataset d;
  d.points.resize(n);
  for (double& x : d.points) x = mu + sigma * rng.Normal();
  *out = new ustatdp_dataset{std::move(d)};
  return USTATDP_OK;
}

ustatdp_status ustatdp_simulate_multinomial(int m, const char* a_spec,
                                            int64_t n, uint64_t seed,
                                            ustatdp_dataset** out) {
  USTATDP_REQUIRE(out && a_spec, "null argument");
  USTATDP_REQUIRE(n >= 1, "need n >= 1");
  auto dist = ustatdp::ParsePerturbation(a_spec, m);
  if (!dist.ok()) return FromStatus(dist.status());
  ustatdp::Rng rng(seed);
  *out = new ustatdp_dataset{ustatdp::SampleMultinomial(*dist, n, rng)};
  return USTATDP_OK;
}

// ---- kernels ----

ustatdp_status ustatdp_kernel_builtin(const char* name, double param,
                                      ustatdp_kernel** out) {
  USTATDP_REQUIRE(name && out, "null argument");
  const std::string s = name;
  auto degree_after = [&](const std::string& prefix, int* k) {
    return s.rfind(prefix, 0) == 0 &&
           absl::SimpleAtoi(s.substr(prefix.size()), k) && *k >= 1;
  };
  int k = 0;
  if (s == "identity") {
    USTATDP_REQUIRE(param > 0, "identity needs tau > 0");
    *out = new ustatdp_kernel{ustatdp::kernels::Identity(param)};
  } else if (s == "pair-mean") {
    USTATDP_REQUIRE(param > 0, "pair-mean needs tau > 0");
    *out = new ustatdp_kernel{ustatdp::kernels::PairMean(param)};
  } else if (s == "collision") {
    *out = new ustatdp_kernel{ustatdp::kernels::Collision()};
  } else if (degree_after("equality:", &k)) {
    *out = new ustatdp_kernel{ustatdp::kernels::Equality(k)};
  } else if (degree_after("constant:", &k)) {
    *out = new ustatdp_kernel{ustatdp::kernels::Constant(k, param)};
  } else {
    return Fail(USTATDP_INVALID_ARGUMENT,
                absl::StrCat("unknown kernel '", s, "'"));
  }
  return USTATDP_OK;
}

ustatdp_status ustatdp_kernel_custom(int degree, ustatdp_kernel_fn fn,
                                     void* user, int bounded,
                                     double tail_param,
                                     ustatdp_kernel** out) {
  USTATDP_REQUIRE(fn && out, "null argument");
  USTATDP_REQUIRE(degree >= 1, "degree must be positive");
  USTATDP_REQUIRE(tail_param >= 0, "tail parameter must be non-negative");
  ustatdp::Tail tail = bounded ? ustatdp::Tail(ustatdp::Bounded{tail_param})
                               : ustatdp::Tail(ustatdp::SubGaussian{tail_param});
  *out = new ustatdp_kernel{ustatdp::Kernel(
      degree,
      [fn, user](std::span<const double> x) {
        return fn(x.data(), static_cast<int>(x.size()), user);
      },
      tail)};
  return USTATDP_OK;
}

int ustatdp_kernel_degree(const ustatdp_kernel* h) {
  return h->impl.degree();
}
void ustatdp_kernel_free(ustatdp_kernel* h) { delete h; }

// ---- families ----


ustatdp_status ustatdp_family_all_tuples(int64_t n, int k,
                                         ustatdp_family** out) {
  USTATDP_REQUIRE(out, "null output");
  return WrapFamily(ustatdp::SubsetFamily::AllTuples(n, k), out);
}

ustatdp_status ustatdp_family_subsample(int64_t n, int k, uint64_t m,
                                        uint64_t seed, ustatdp_family** out) {
  USTATDP_REQUIRE(out, "null output");
  return WrapFamily(ustatdp::SubsetFamily::Subsample(n, k, m, seed), out);
}

ustatdp_status ustatdp_family_read(const char* path, int64_t n,
                                   ustatdp_family** out) {
  USTATDP_REQUIRE(path && out, "null argument");
  return WrapFamily(ustatdp::ReadFamily(path, n), out);
}

ustatdp_status ustatdp_family_write(const ustatdp_family* f,
                                    const char* path) {
  USTATDP_REQUIRE(f && path, "null argument");
  return FromStatus(ustatdp::WriteFamily(*f->impl, path));
}

uint64_t ustatdp_family_size(const ustatdp_family* f) {
  return f->impl->size();
}
double ustatdp_family_dep(const ustatdp_family* f) { return f->impl->dep(); }

ustatdp_status ustatdp_family_check(const ustatdp_family* f) {
  USTATDP_REQUIRE(f, "null family");
  const auto r = f->impl->CheckRegularity();
  return r.ok ? USTATDP_OK : Fail(USTATDP_BOTTOM, r.reason);
}

void ustatdp_family_free(ustatdp_family* f) { delete f; }

ustatdp_status ustatdp_ustat(const ustatdp_kernel* h,
                             const ustatdp_dataset* d,
                             const ustatdp_family* f, double* out) {
  USTATDP_REQUIRE(h && d && f && out, "null argument");
  auto v = ustatdp::EvaluateUStat(h->impl, d->impl, *f->impl);
  if (!v.ok()) return FromStatus(v.status());
  *out = *v;
  return USTATDP_OK;
}

// ---- estimation ----

void ustatdp_estimate_options_init(ustatdp_estimate_options* o) {
  o->method = USTATDP_METHOD_ALL;
  o->eps = 1;
  o->alpha = 0.05;
  o->R = 10;
  o->tau = 0;
  o->M = 0;
  o->xi_mode = USTATDP_XI_AUTO;
  o->xi = 0;
  o->C = -1;
  o->strict_alg3_scale = 0;
  o->seed = 1;
  o->family = nullptr;
}

ustatdp_status ustatdp_estimate(const ustatdp_kernel* h,
                                const ustatdp_dataset* d,
                                const ustatdp_estimate_options* o,
                                ustatdp_budget* budget, ustatdp_report* out) {
  USTATDP_REQUIRE(h && d && o && budget && out, "null argument");
  g_warnings.clear();
  ustatdp::EstimatorSpec s;
  static const char* kMethods[] = {"naive", "all", "subsampled", "hajek"};
  USTATDP_REQUIRE(o->method >= 0 && o->method <= 3, "unknown method");
  s.method = kMethods[o->method];
  s.eps = o->eps;
  s.R = o->R;
  if (o->tau > 0) s.tau = o->tau;
  s.M = o->M;
  static const char* kModes[] = {"auto", "auto-subgaussian", "auto-degenerate",
                                 "value"};
  USTATDP_REQUIRE(o->xi_mode >= 0 && o->xi_mode <= 3, "unknown xi mode");
  s.xi_mode = kModes[o->xi_mode];
  s.xi = o->xi;
  if (o->C >= 0) s.C = o->C;
  s.alpha = std::min(o->alpha, 0.5);
  s.strict_alg3_scale = o->strict_alg3_scale != 0;
  if (o->family) {
    USTATDP_REQUIRE(o->method == USTATDP_METHOD_HAJEK,
                    "a custom family applies to the hajek method only");
    s.family = o->family->impl;
  }
  auto est = ustatdp::MakeChunkEstimator(h->impl, s);
  if (!est.ok()) return FromStatus(est.status());
  absl::StatusOr<ustatdp::EstimateReport> r;
  if (o->family) {
    ustatdp::Rng rng(o->seed);
    r = (*est)(d->impl, budget->impl, rng);
  } else {
    r = RunBoosted(*est, d->impl, h->impl.degree(), o->alpha, o->seed,
                   budget->impl);
  }
  if (!r.ok()) return FromStatus(r.status());
  return FillReport(*r, out);
}

ustatdp_status ustatdp_uniformity_test(const ustatdp_dataset* d, int m,
                                       double delta, double eps, double alpha,
                                       uint64_t seed, int strict_alg3_scale,
                                       ustatdp_budget* budget, int* reject,
                                       double* threshold,
                                       ustatdp_report* out) {
  USTATDP_REQUIRE(d && budget && reject && out, "null argument");
  USTATDP_REQUIRE(delta > 0 && delta < 1, "delta must be in (0, 1)");
  g_warnings.clear();
  ustatdp::UniformityOptions uo;
  uo.strict_alg3_scale = strict_alg3_scale != 0;
  ustatdp::ChunkEstimator est = [=](const ustatdp::Dataset& chunk,
                                    ustatdp::PrivacyBudget& b,
                                    ustatdp::Rng& rng) {
    return ustatdp::PrivateCollisionEstimate(chunk, m, eps, b, rng, uo);
  };
  auto r = RunBoosted(est, d->impl, 2, alpha, seed, budget->impl);
  if (!r.ok()) return FromStatus(r.status());
  const double t = ustatdp::UniformityThreshold(m, delta);
  if (threshold) *threshold = t;
  *reject = !r->bottom && r->estimate >= t;
  return FillReport(*r, out);
}

// ---- graphs ----

ustatdp_status ustatdp_graph_sample_rgg(int64_t n, double r, uint64_t seed,
                                        ustatdp_graph** out) {
  USTATDP_REQUIRE(out, "null output");
  ustatdp::Rng rng(seed);
  auto g = ustatdp::SampleRgg(n, r, rng);
  if (!g.ok()) return FromStatus(g.status());
  *out = new ustatdp_graph{*std::move(g)};
  return USTATDP_OK;
}

ustatdp_status ustatdp_graph_read(const char* path, int64_t n,
                                  ustatdp_graph** out) {
  USTATDP_REQUIRE(path && out, "null argument");
  auto g = ustatdp::ReadEdgeList(path, n);
  if (!g.ok()) return FromStatus(g.status());
  *out = new ustatdp_graph{*std::move(g)};
  return USTATDP_OK;
}

int64_t ustatdp_graph_nodes(const ustatdp_graph* g) { return g->impl.n; }
double ustatdp_graph_edge_density(const ustatdp_graph* g) {
  return ustatdp::EdgeDensity(g->impl);
}
void ustatdp_graph_free(ustatdp_graph* g) { delete g; }

ustatdp_status ustatdp_triangle_density(const ustatdp_graph* g, double eps,
                                        double alpha, uint64_t seed,
                                        double nu_scale,
                                        int strict_alg3_scale,
                                        ustatdp_budget* budget,
                                        ustatdp_report* out) {
  USTATDP_REQUIRE(g && budget && out, "null argument");
  g_warnings.clear();
  ustatdp::TriangleOptions to;
  if (nu_scale > 0) to.nu_scale = nu_scale;
  to.strict_alg3_scale = strict_alg3_scale != 0;
  auto plan = ustatdp::MakeBoostPlan(alpha, g->impl.n, 3);
  if (!plan.ok()) return FromStatus(plan.status());
  absl::StatusOr<ustatdp::EstimateReport> r;
  if (plan->q == 1) {
    ustatdp::Rng rng(seed);
    r = ustatdp::PrivateTriangleDensity(g->impl, eps, budget->impl, rng, to);
  } else {
    // Chunks are node blocks; each runs on its induced subgraph.
    ustatdp::Dataset ids;
    for (int64_t i = 0; i < g->impl.n; ++i) ids.points.push_back(i);
    const ustatdp::GeometricGraph& whole = g->impl;
    ustatdp::ChunkEstimator est = [&](const ustatdp::Dataset& chunk,
                                      ustatdp::PrivacyBudget& b,
                                      ustatdp::Rng& rng) {
      const auto first = static_cast<int64_t>(chunk[0]);
      const auto sub = ustatdp::InducedSubgraph(
          whole, first, first + static_cast<int64_t>(chunk.size()));
      return ustatdp::PrivateTriangleDensity(sub, eps, b, rng, to);
    };
    r = ustatdp::MedianOfMeans(est, ids, *plan, budget->impl, seed);
  }
  if (!r.ok()) return FromStatus(r.status());
  return FillReport(*r, out);
}

// ---- harness ----

void ustatdp_experiment_init(ustatdp_experiment* e) {
  e->method = "all";
  e->kernel = "pair-mean";
  e->distribution = "gaussian";
  e->params = "";
  e->n = "100";
  e->eps = "1";
  e->alpha = "0.05";
  e->M = "0";
  e->trials = 1;
  e->seed = 1;
  e->xi = "auto";
  e->boost = 0;
  e->strict_alg3_scale = 0;
  e->timing = 0;
  e->threads = 1;
}


ustatdp_status ustatdp_run_experiment(const ustatdp_experiment* e,
                                      const char* out_path) {
  USTATDP_REQUIRE(e && e->method && e->kernel && e->distribution && e->xi,
                  "null argument");
  ustatdp::ExperimentSpec s;
  s.method = e->method;
  s.kernel = e->kernel;
  s.distribution = e->distribution;
  if (e->params) {
    for (absl::string_view kv :
         absl::StrSplit(e->params, ',', absl::SkipWhitespace())) {
      std::pair<std::string, std::string> p = absl::StrSplit(kv, '=');
      double v;
      if (!absl::SimpleAtod(p.second, &v)) {
        return Fail(USTATDP_INVALID_ARGUMENT,
                    absl::StrCat("bad param '", std::string(kv), "'"));
      }
      s.params[std::string(absl::StripAsciiWhitespace(p.first))] = v;
    }
  }
  USTATDP_REQUIRE(ParseGrid(e->n, &s.n), "bad n grid");
  USTATDP_REQUIRE(ParseGrid(e->eps, &s.eps), "bad eps grid");
  USTATDP_REQUIRE(ParseGrid(e->alpha, &s.alpha), "bad alpha grid");
  USTATDP_REQUIRE(ParseGrid(e->M, &s.M), "bad M grid");
  s.trials = e->trials;
  s.seed = e->seed;
  s.xi = e->xi;
  s.boost = e->boost != 0;
  s.strict_alg3_scale = e->strict_alg3_scale != 0;
  s.timing = e->timing != 0;
  s.threads = e->threads;
  if (!out_path || std::string(out_path) == "-") {
    return FromStatus(ustatdp::RunExperiment(s, std::cout));
  }
  std::ofstream out(out_path);
  if (!out) {
    return Fail(USTATDP_IO_ERROR, absl::StrCat("cannot write ", out_path));
  }
  return FromStatus(ustatdp::RunExperiment(s, out));
}

ustatdp_status ustatdp_audit_smoothness(int n, double eps, double xi,
                                        double C, const char* kernel,
                                        double s_scale,
                                        ustatdp_smoothness_report* out) {
  USTATDP_REQUIRE(out, "null output");
  ustatdp::SmoothnessAuditOptions o;
  o.n = n;
  o.eps = eps;
  o.xi = xi;
  o.C = C;
  o.kernel = kernel ? kernel : "equality";
  o.s_scale = s_scale;
  auto r = ustatdp::SmoothnessAudit(o);
  if (!r.ok()) return FromStatus(r.status());
  out->datasets = r->datasets;
  out->pairs = r->pairs;
  out->dominance_margin = r->dominance_margin;
  out->smoothness_margin = r->smoothness_margin;
  return USTATDP_OK;
}

ustatdp_status ustatdp_audit_noise(const char* law, int64_t draws,
                                   uint64_t seed, double sample_scale,
                                   double reference_scale,
                                   ustatdp_gof_report* out) {
  USTATDP_REQUIRE(law && out, "null argument");
  ustatdp::NoiseLaw l;
  if (std::string(law) == "laplace") {
    l = ustatdp::NoiseLaw::kLaplace;
  } else if (std::string(law) == "quartic") {
    l = ustatdp::NoiseLaw::kQuartic;
  } else {
    return Fail(USTATDP_INVALID_ARGUMENT,
                absl::StrCat("unknown noise law '", law, "'"));
  }
  auto r = ustatdp::NoiseGof(l, draws, seed, sample_scale, reference_scale);
  if (!r.ok()) return FromStatus(r.status());
  out->draws = r->draws;
  out->gap = r->gap;
  out->threshold = r->threshold;
  out->acceptance_rate = r->acceptance_rate;
  out->passed = r->passed ? 1 : 0;
  if (!r->passed) {
    return Fail(USTATDP_AUDIT_FAILURE,
                absl::StrCat("KS gap ", r->gap, " exceeds ", r->threshold));
  }
  return USTATDP_OK;
}

ustatdp_status ustatdp_fixture_adversarial(int64_t n, int k, double eps,
                                           ustatdp_dataset** d0,
                                           ustatdp_dataset** d1,
                                           ustatdp_fixture_info* info) {
  USTATDP_REQUIRE(info, "null output");
  g_warnings.clear();
  auto f = ustatdp::MakeAdversarialFixture(n, k, eps);
  if (!f.ok()) return FromStatus(f.status());
  g_warnings = absl::StrJoin(f->warnings, "\n");
  info->b_n = f->b_n;
  info->flipped = f->flipped;
  info->xi = f->xi;
  info->gap = f->gap;
  info->bound = f->bound;
  info->holds = f->gap >= f->bound ? 1 : 0;
  if (d0) *d0 = new ustatdp_dataset{f->d0};
  if (d1) *d1 = new ustatdp_dataset{f->d1};
  return USTATDP_OK;
}

}  // extern "C"

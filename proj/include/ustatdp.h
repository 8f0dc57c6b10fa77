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

// C interface to the ustatdp library. All objects are opaque handles owned
// by the caller and released with the matching *_free function. Functions
// that can fail return a ustatdp_status; on failure ustatdp_last_error()
// describes the problem. Error and warning strings are thread local and
// valid until the next call on the same thread.

#ifndef USTATDP_H_
#define USTATDP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(USTATDP_BUILDING_LIBRARY)
#define USTATDP_API __attribute__((visibility("default")))
#else
#define USTATDP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  USTATDP_OK = 0,
  USTATDP_INVALID_ARGUMENT = 1,
  USTATDP_BUDGET_EXHAUSTED = 2,
  USTATDP_COMBINATORIAL_OVERFLOW = 3,
  // Too little data, or an index that no subset covers.
  USTATDP_PRECONDITION = 4,
  // The estimator declined to answer. The report is still filled in.
  USTATDP_BOTTOM = 5,
  USTATDP_AUDIT_FAILURE = 6,
  USTATDP_IO_ERROR = 7,
  USTATDP_INTERNAL = 8
} ustatdp_status;

typedef struct ustatdp_budget ustatdp_budget;
typedef struct ustatdp_dataset ustatdp_dataset;
typedef struct ustatdp_kernel ustatdp_kernel;
typedef struct ustatdp_family ustatdp_family;
typedef struct ustatdp_graph ustatdp_graph;

USTATDP_API const char* ustatdp_last_error(void);
// Newline-separated warnings from the last estimation call.
USTATDP_API const char* ustatdp_last_warnings(void);
USTATDP_API const char* ustatdp_status_name(ustatdp_status s);

// ---- privacy budget ----
USTATDP_API ustatdp_status ustatdp_budget_new(double total,
                                              ustatdp_budget** out);
USTATDP_API void ustatdp_budget_free(ustatdp_budget* b);
USTATDP_API double ustatdp_budget_total(const ustatdp_budget* b);
USTATDP_API double ustatdp_budget_spent(const ustatdp_budget* b);
USTATDP_API size_t ustatdp_budget_entry_count(const ustatdp_budget* b);
// label stays valid while b is alive and unchanged.
USTATDP_API ustatdp_status ustatdp_budget_entry(const ustatdp_budget* b,
                                                size_t i, const char** label,
                                                double* eps);
// Copies the ledger summary into buf (NUL terminated, truncated to len)
// and returns the full length.
USTATDP_API size_t ustatdp_budget_summary(const ustatdp_budget* b, char* buf,
                                          size_t len);

// ---- datasets ----
USTATDP_API ustatdp_status ustatdp_dataset_from_array(const double* values,
                                                      size_t n,
                                                      ustatdp_dataset** out);
// categorical != 0 requires non-negative integers.
USTATDP_API ustatdp_status ustatdp_dataset_read(const char* path,
                                                int categorical,
                                                ustatdp_dataset** out);
USTATDP_API ustatdp_status ustatdp_dataset_write(const ustatdp_dataset* d,
                                                 const char* path);
USTATDP_API size_t ustatdp_dataset_size(const ustatdp_dataset* d);
USTATDP_API const double* ustatdp_dataset_values(const ustatdp_dataset* d);
USTATDP_API void ustatdp_dataset_free(ustatdp_dataset* d);
USTATDP_API ustatdp_status ustatdp_simulate_gaussian(int64_t n, double mu,
                                                     double sigma,
                                                     uint64_t seed,
                                                     ustatdp_dataset** out);
// a_spec: "uniform", "two-level:<delta>" or comma-separated a_i.
USTATDP_API ustatdp_status ustatdp_simulate_multinomial(
    int m, const char* a_spec, int64_t n, uint64_t seed,
    ustatdp_dataset** out);

// ---- kernels ----
typedef double (*ustatdp_kernel_fn)(const double* x, int k, void* user);

// name: identity (param = tau), pair-mean (param = tau), collision,
// equality:<k>, constant:<k> (param = value).
USTATDP_API ustatdp_status ustatdp_kernel_builtin(const char* name,
                                                  double param,
                                                  ustatdp_kernel** out);
// bounded != 0: tail_param is the additive range; otherwise it is tau.
// fn must be symmetric and safe to call concurrently.
USTATDP_API ustatdp_status ustatdp_kernel_custom(int degree,
                                                 ustatdp_kernel_fn fn,
                                                 void* user, int bounded,
                                                 double tail_param,
                                                 ustatdp_kernel** out);
USTATDP_API int ustatdp_kernel_degree(const ustatdp_kernel* h);
USTATDP_API void ustatdp_kernel_free(ustatdp_kernel* h);

// ---- subset families ----
USTATDP_API ustatdp_status ustatdp_family_all_tuples(int64_t n, int k,
                                                     ustatdp_family** out);
USTATDP_API ustatdp_status ustatdp_family_subsample(int64_t n, int k,
                                                    uint64_t m, uint64_t seed,
                                                    ustatdp_family** out);
USTATDP_API ustatdp_status ustatdp_family_read(const char* path, int64_t n,
                                               ustatdp_family** out);
USTATDP_API ustatdp_status ustatdp_family_write(const ustatdp_family* f,
                                                const char* path);
USTATDP_API uint64_t ustatdp_family_size(const ustatdp_family* f);
USTATDP_API double ustatdp_family_dep(const ustatdp_family* f);
// USTATDP_OK if regular, USTATDP_BOTTOM (reason in last_error) otherwise.
USTATDP_API ustatdp_status ustatdp_family_check(const ustatdp_family* f);
USTATDP_API void ustatdp_family_free(ustatdp_family* f);

USTATDP_API ustatdp_status ustatdp_ustat(const ustatdp_kernel* h,
                                         const ustatdp_dataset* d,
                                         const ustatdp_family* f,
                                         double* out);

// ---- estimation ----
typedef struct {
  double estimate;
  double radius;
  double noise_scale;
  int iterations;
  int64_t L;
  int64_t bad_count;
  int bottom;
  int warning_count;
} ustatdp_report;

typedef enum {
  USTATDP_METHOD_NAIVE = 0,
  USTATDP_METHOD_ALL = 1,
  USTATDP_METHOD_SUBSAMPLED = 2,
  USTATDP_METHOD_HAJEK = 3
} ustatdp_method;

typedef enum {
  // Sub-Gaussian pipeline for unbounded kernels, degenerate choice else.
  USTATDP_XI_AUTO = 0,
  USTATDP_XI_SUBGAUSSIAN = 1,
  USTATDP_XI_DEGENERATE = 2,
  USTATDP_XI_VALUE = 3
} ustatdp_xi_mode;

typedef struct {
  ustatdp_method method;
  double eps;
  // Median of means over the smallest odd q >= 8 ln(1/alpha) chunks;
  // alpha = 1 runs the estimator once on all data.
  double alpha;
  double R;
  // <= 0 takes tau from the kernel.
  double tau;
  // Subsampled family size; 0 picks ceil(5 (n/k) ln n).
  uint64_t M;
  ustatdp_xi_mode xi_mode;
  double xi;
  // < 0 takes the kernel's range.
  double C;
  int strict_alg3_scale;
  uint64_t seed;
  // Optional: the Hajek method then uses this family instead of all
  // tuples (no boosting). Not owned.
  const ustatdp_family* family;
} ustatdp_estimate_options;

USTATDP_API void ustatdp_estimate_options_init(ustatdp_estimate_options* o);
USTATDP_API ustatdp_status ustatdp_estimate(
    const ustatdp_kernel* h, const ustatdp_dataset* d,
    const ustatdp_estimate_options* o, ustatdp_budget* budget,
    ustatdp_report* out);

// Private uniformity test; categories are 1..m. *reject is set to 1 when
// approximate uniformity is rejected.
USTATDP_API ustatdp_status ustatdp_uniformity_test(
    const ustatdp_dataset* d, int m, double delta, double eps, double alpha,
    uint64_t seed, int strict_alg3_scale, ustatdp_budget* budget,
    int* reject, double* threshold, ustatdp_report* out);

// ---- graphs ----
USTATDP_API ustatdp_status ustatdp_graph_sample_rgg(int64_t n, double r,
                                                    uint64_t seed,
                                                    ustatdp_graph** out);
// n <= 0 infers the node count from the largest index.
USTATDP_API ustatdp_status ustatdp_graph_read(const char* path, int64_t n,
                                              ustatdp_graph** out);
USTATDP_API int64_t ustatdp_graph_nodes(const ustatdp_graph* g);
USTATDP_API double ustatdp_graph_edge_density(const ustatdp_graph* g);
USTATDP_API void ustatdp_graph_free(ustatdp_graph* g);
// nu_scale <= 0 uses the default 2.
USTATDP_API ustatdp_status ustatdp_triangle_density(
    const ustatdp_graph* g, double eps, double alpha, uint64_t seed,
    double nu_scale, int strict_alg3_scale, ustatdp_budget* budget,
    ustatdp_report* out);

// ---- harness ----
typedef struct {
  const char* method;
  const char* kernel;
  const char* distribution;
  // "key=value,key=value"
  const char* params;
  // Comma-separated grids.
  const char* n;
  const char* eps;
  const char* alpha;
  const char* M;
  int64_t trials;
  uint64_t seed;
  const char* xi;
  int boost;
  int strict_alg3_scale;
  int timing;
  int threads;
} ustatdp_experiment;

USTATDP_API void ustatdp_experiment_init(ustatdp_experiment* e);
// out_path NULL or "-" writes to stdout.
USTATDP_API ustatdp_status ustatdp_run_experiment(const ustatdp_experiment* e,
                                                  const char* out_path);

typedef struct {
  int64_t datasets;
  int64_t pairs;
  double dominance_margin;
  double smoothness_margin;
} ustatdp_smoothness_report;

// kernel: "equality" or "constant". USTATDP_AUDIT_FAILURE on a violation.
USTATDP_API ustatdp_status ustatdp_audit_smoothness(
    int n, double eps, double xi, double C, const char* kernel,
    double s_scale, ustatdp_smoothness_report* out);

typedef struct {
  int64_t draws;
  double gap;
  double threshold;
  double acceptance_rate;
  int passed;
} ustatdp_gof_report;

// law: "laplace" or "quartic". reference_scale 0 means sample_scale.
// USTATDP_AUDIT_FAILURE when the gap exceeds the threshold.
USTATDP_API ustatdp_status ustatdp_audit_noise(const char* law,
                                               int64_t draws, uint64_t seed,
                                               double sample_scale,
                                               double reference_scale,
                                               ustatdp_gof_report* out);

typedef struct {
  int64_t b_n;
  int64_t flipped;
  double xi;
  double gap;
  double bound;
  // 1 if gap >= bound.
  int holds;
} ustatdp_fixture_info;

USTATDP_API ustatdp_status ustatdp_fixture_adversarial(
    int64_t n, int k, double eps, ustatdp_dataset** d0, ustatdp_dataset** d1,
    ustatdp_fixture_info* info);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // USTATDP_H_

/*************************************************************************************
 * C API of zenotomo: quantum Zeno absorption tomography simulator
 *
 * Copyright 2026 The zenotomo authors
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not use
 * this file except in compliance with the License.  You may obtain a copy of the
 * License at
 *     https://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software distributed
 * under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
 * CONDITIONS OF ANY KIND, either express or implied.  See the License for the
 * specific language governing permissions and limitations under the License.
 *************************************************************************************/

#ifndef ZENOTOMO_ZENOTOMO_H
#define ZENOTOMO_ZENOTOMO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---- status codes ----------------------------------------------------- */

/* Every function returning int32_t yields ZT_OK (0) on success or one of the
 * negative codes below.  On failure a thread-local message with the details
 * is available from zt_last_error_message(). */
#define ZT_OK 0
#define ZT_ERR_INVALID_ARGUMENT (-1) /* parameter outside its documented domain */
#define ZT_ERR_REGIME (-2)           /* outside the regime of the requested formula */
#define ZT_ERR_DEGENERATE (-3)       /* degenerate decision geometry */
#define ZT_ERR_UNREACHABLE (-4)      /* numeric target cannot be met */
#define ZT_ERR_IO (-5)               /* filesystem failure */
#define ZT_ERR_FORMAT (-6)           /* malformed input file */
#define ZT_ERR_NULL_POINTER (-7)     /* required pointer argument was NULL */
#define ZT_ERR_INTERNAL (-8)         /* internal consistency failure */

/* Short name of a status code ("ZT_OK", "ZT_ERR_REGIME", ...). */
const char* zt_strerror(int32_t code);

/* Message describing the most recent failure on this thread; empty string if
 * none.  The buffer is overwritten by the next failing call. */
const char* zt_last_error_message(void);

void zt_version(int32_t* major, int32_t* minor, int32_t* patch);

/* ---- interferometer ---------------------------------------------------- */

/* Exact channel probabilities (zeno, orthogonal, absorbed) for a particle
 * making `loops` passes with a sample of transmission amplitude tau. */
int32_t zt_zeno_probabilities(int64_t loops, double tau, double* p_z, double* p_o,
                              double* p_a);

/* Large-loop closed form; requires tau < zt_zeno_threshold(loops) and tau < 1.
 * Fails with ZT_ERR_REGIME (message names the threshold) otherwise. */
int32_t zt_zeno_probabilities_asymptotic(int64_t loops, double tau, double* p_z, double* p_o,
                                         double* p_a);

/* tau_max below which the apparatus with `loops` passes is in the Zeno regime. */
int32_t zt_zeno_threshold(int64_t loops, double* tau_max);

/* Real-valued loop count above which a given tau < 1 is in the Zeno regime. */
int32_t zt_zeno_min_loops(double tau, double* loops_min);

/* One-pass transmission experiment: (tau^2, 1 - tau^2). */
int32_t zt_standard_probabilities(double tau, double* p_detect, double* p_absorb);

/* sqrt(1 - p_a) with the exact absorption probability. */
int32_t zt_effective_transmission(int64_t loops, double tau, double* tau_eff);

/* ---- estimation bounds -------------------------------------------------- */

/* Variance bound tau^2 (1-tau^2)/N of the one-pass estimator of T = tau^2. */
int32_t zt_crlb_standard(double tau, int64_t n_particles, double* bound);

/* Variance bound 4 tau^2 (1-tau)^3 (1+tau) L / (pi^2 N); requires the
 * asymptotic regime L > zt_zeno_min_loops(tau). */
int32_t zt_crlb_zeno(double tau, int64_t n_particles, int64_t loops, double* bound);

/* Standard-deviation bound tau (1-tau^2)/sqrt(N_a) shared by both setups. */
int32_t zt_crlb_per_absorbed(double tau, double n_absorbed, double* bound);

/* ---- two-hypothesis decisions ------------------------------------------ */

#define ZT_RULE_THRESHOLD 0 /* decide H1 iff n_a <= threshold */
#define ZT_RULE_ALWAYS_H1 1
#define ZT_RULE_ALWAYS_H2 2

/* Optimal absorbed-count decision level for hypotheses with absorption
 * probabilities p_a1 < p_a2 and prior alpha on H1.  threshold is the floor of
 * threshold_raw clamped to [-1, N]; kind flags the constant rules. */
int32_t zt_binomial_threshold(double p_a1, double p_a2, double alpha, int64_t n_particles,
                              double* threshold_raw, int64_t* threshold, int32_t* kind);

/* Error probability of the rule "H1 iff n_a <= threshold" (threshold < 0 means
 * always H2, >= N always H1), via the regularized incomplete beta function. */
int32_t zt_binomial_error(double p_a1, double p_a2, double alpha, int64_t n_particles,
                          int64_t threshold, double* pe);

/* zt_binomial_error at the optimal threshold. */
int32_t zt_optimal_binomial_error(double p_a1, double p_a2, double alpha, int64_t n_particles,
                                  double* pe);

/* Expected absorbed count N [alpha p_a1 + (1-alpha) p_a2]. */
int32_t zt_mean_absorbed(double p_a1, double p_a2, double alpha, int64_t n_particles,
                         double* n_absorbed);

/* Smallest N whose optimal-threshold error stays below target_pe (see the
 * library documentation for the three-consecutive-counts acceptance rule). */
int32_t zt_required_particles(double p_a1, double p_a2, double alpha, double target_pe,
                              int64_t* n_particles);

/* Equal-likelihood line n_z - slope*n_o = intercept for the two-channel
 * protocol; h1_side is +/-1 such that h1_side*(n_z - slope*n_o - intercept) > 0
 * decides H1.  All six probabilities must be strictly inside (0, 1). */
int32_t zt_trinomial_line(double p_z1, double p_o1, double p_a1, double p_z2, double p_o2,
                          double p_a2, double alpha, int64_t n_particles, double* slope,
                          double* intercept, int32_t* h1_side);

/* ---- gray models -------------------------------------------------------- */

typedef struct zt_model zt_model;

int32_t zt_model_create(zt_model** model);
void zt_model_free(zt_model* model);

/* Appends a level; pixel values in [range_lo, range_hi] map to it and it is
 * written back out as display_value.  Levels may be added in any tau order
 * and are sorted when validated. */
int32_t zt_model_add_level(zt_model* model, double tau, double alpha, int32_t range_lo,
                           int32_t range_hi, int32_t display_value);

/* Sorts by tau and checks the model invariants (taus strictly increasing in
 * [0,1), alphas in (0,1) summing to 1, disjoint pixel ranges). */
int32_t zt_model_validate(zt_model* model);

/* Loads and validates a model file: one "<tau> <alpha> <lo> <hi> <display>"
 * line per level, '#' comments allowed. */
int32_t zt_model_load(const char* path, zt_model** model);

int32_t zt_model_level_count(const zt_model* model, int32_t* count);
int32_t zt_model_level(const zt_model* model, int32_t index, double* tau, double* alpha,
                       int32_t* range_lo, int32_t* range_hi, int32_t* display_value);

/* Replaces the declared frequencies with the ones measured from the image.
 * Fails if some level does not occur in the image. */
int32_t zt_model_measure_alpha(zt_model* model, const struct zt_image* image);

/* ---- images -------------------------------------------------------------- */

typedef struct zt_image zt_image;

int32_t zt_image_create(int32_t width, int32_t height, zt_image** image);
void zt_image_free(zt_image* image);
int32_t zt_image_size(const zt_image* image, int32_t* width, int32_t* height);
int32_t zt_image_get(const zt_image* image, int32_t x, int32_t y, int32_t* level);
int32_t zt_image_set(zt_image* image, int32_t x, int32_t y, int32_t level);

/* Binary graymap I/O (magic P5, maxval 255); the model maps raw pixel values
 * to level indices and back. */
int32_t zt_image_read_pgm(const char* path, const zt_model* model, zt_image** image);
int32_t zt_image_write_pgm(const zt_image* image, const zt_model* model, const char* path);

/* Deterministic synthetic sample whose level frequencies match the model's
 * declared alphas exactly (largest-remainder rounding). */
int32_t zt_image_synthetic_specimen(int32_t width, int32_t height, const zt_model* model,
                                    zt_image** image);

/* ---- classifiers --------------------------------------------------------- */

#define ZT_SETUP_STANDARD 0
#define ZT_SETUP_ZENO 1
#define ZT_SETUP_ZENO_ASYMPTOTIC 2 /* large-L law instead of the exact power */

typedef struct zt_classifier zt_classifier;

/* Prior-weighted maximum-likelihood classifier for the model under a setup
 * (loops is ignored for ZT_SETUP_STANDARD). */
int32_t zt_classifier_create(const zt_model* model, int32_t setup, int64_t loops,
                             int64_t n_particles, zt_classifier** classifier);
void zt_classifier_free(zt_classifier* classifier);

/* Gray level index for the outcome; for the standard setup pass the
 * transmitted count as n_z and 0 as n_o. */
int32_t zt_classifier_classify(const zt_classifier* classifier, int64_t n_z, int64_t n_o,
                               int32_t* level);

int32_t zt_classifier_channel_probabilities(const zt_classifier* classifier, int32_t level,
                                            double* p_z, double* p_o, double* p_a);

/* Decision data for adjacent level pair (pair_index, pair_index + 1). */
typedef struct zt_pair_rule {
  int32_t lower_level;
  int32_t binomial_h1_level; /* which of the two absorbs less */
  double binomial_alpha;     /* prior of that hypothesis within the pair */
  int32_t has_binomial;
  double binomial_threshold_raw;
  int64_t binomial_threshold;
  int32_t binomial_kind; /* ZT_RULE_* */
  int32_t has_trinomial; /* the line treats the lower level as H1 */
  double trinomial_slope;
  double trinomial_intercept;
  int32_t trinomial_h1_side;
  int32_t lower_in_zeno_regime; /* meaningful for the Zeno setup only */
  int32_t upper_in_zeno_regime;
} zt_pair_rule;

int32_t zt_classifier_pair_count(const zt_classifier* classifier, int32_t* count);
int32_t zt_classifier_pair_rule(const zt_classifier* classifier, int32_t pair_index,
                                zt_pair_rule* rule);

/* ---- simulation ----------------------------------------------------------- */

/* One pixel's trinomial counts from the deterministic stream derived from
 * (master_seed, pixel_index). */
int32_t zt_simulate_pixel(double p_z, double p_o, double p_a, int64_t n_particles,
                          uint64_t master_seed, uint64_t pixel_index, int64_t* n_z,
                          int64_t* n_o, int64_t* n_a);

/* Binomial analogue for the one-pass experiment. */
int32_t zt_simulate_standard_pixel(double tau, int64_t n_particles, uint64_t master_seed,
                                   uint64_t pixel_index, int64_t* n_t, int64_t* n_a);

/* Smallest per-pixel N whose expected absorbed count reaches na_target. */
int32_t zt_particles_for_absorbed(const zt_model* model, int32_t setup, int64_t loops,
                                  double na_target, int64_t* n_particles);

typedef struct zt_report zt_report;

/* Simulates every pixel of the sample and reconstructs it with the protocol
 * matching the setup.  ZENO_TOMO_THREADS caps internal parallelism; results
 * are identical regardless of the worker count. */
int32_t zt_reconstruct(const zt_image* sample, const zt_model* model, int32_t setup,
                       int64_t loops, int64_t n_particles, uint64_t master_seed,
                       zt_report** report);
void zt_report_free(zt_report* report);

int32_t zt_report_error_count(const zt_report* report, int64_t* count);
int32_t zt_report_mean_absorbed(const zt_report* report, double* mean);
int32_t zt_report_total_particles(const zt_report* report, int64_t* total);
int32_t zt_report_particles_per_pixel(const zt_report* report, int64_t* n);

/* Borrowed pointer, valid for the report's lifetime. */
int32_t zt_report_reconstruction(const zt_report* report, const zt_image** image);

/* 1 where the reconstructed level differs from the truth. */
int32_t zt_report_misinterpreted(const zt_report* report, int32_t x, int32_t y,
                                 int32_t* flag);

/* Writes the misinterpretation mask as a graymap (255 = misinterpreted). */
int32_t zt_report_write_mask_pgm(const zt_report* report, const char* path);

/* ---- irradiation comparison ------------------------------------------------ */

/* Absorbed-particle budgets both setups need to tell tau from tau + d_tau at
 * error target_pe with the single-channel protocol, and their ratio. */
int32_t zt_irradiation_ratio(double tau, double d_tau, int64_t loops, double target_pe,
                             double alpha, double* ratio, int64_t* n_standard,
                             int64_t* n_zeno, double* absorbed_standard,
                             double* absorbed_zeno);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZENOTOMO_ZENOTOMO_H */

/*************************************************************************************
 * Monte Carlo tomographic reconstruction and irradiation accounting
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

#ifndef ZENOTOMO_SIMULATOR_HPP
#define ZENOTOMO_SIMULATOR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "decision.hpp"
#include "gray_image.hpp"
#include "interferometer.hpp"
#include "rng.hpp"

namespace zenotomo {

/// Which experiment illuminates the pixels.  kZenoAsymptotic replaces the
/// exact matrix power with the large-L law (and fails out of regime).
enum class Setup { kStandard, kZeno, kZenoAsymptotic };

struct SetupConfig {
  Setup kind = Setup::kStandard;
  std::int64_t loops = 1;  // used only by the Zeno setups

  static SetupConfig standard() { return {Setup::kStandard, 1}; }
  static SetupConfig zeno(std::int64_t loops) { return {Setup::kZeno, loops}; }
  static SetupConfig zeno_asymptotic(std::int64_t loops) {
    return {Setup::kZenoAsymptotic, loops};
  }
};

/// Counts for one pixel; always n_z + n_o + n_a = N.  Standard-setup outcomes
/// reuse the struct with n_o = 0 and the transmitted count in n_z.
struct PixelOutcome {
  std::int64_t n_z = 0;
  std::int64_t n_o = 0;
  std::int64_t n_a = 0;
};

/// Number of successes in n Bernoulli(p) trials, one uniform draw per trial.
std::int64_t sample_binomial(PixelRng& rng, std::int64_t n, double p);

/// Trinomial draw as two chained binomials (n_a first, then n_o out of the
/// remainder) for robustness when the orthogonal channel is nearly closed.
PixelOutcome simulate_pixel(const ChannelProbabilities& probs, std::int64_t n_particles,
                            PixelRng& rng);

/// Binomial analogue for the one-pass experiment: (n_t, n_a).
std::pair<std::int64_t, std::int64_t> simulate_standard_pixel(double tau,
                                                              std::int64_t n_particles,
                                                              PixelRng& rng);

/// Per-level channel probabilities under a setup (exact matrix power for the
/// Zeno configuration, squares for the standard one).
std::vector<ChannelProbabilities> channel_probabilities(const GrayModel& model,
                                                        const SetupConfig& setup);

/// Prior-weighted mean absorption probability per particle for the model.
double mean_absorption_probability(const GrayModel& model, const SetupConfig& setup);

/// Smallest N whose expected absorbed count per pixel reaches na_target.
std::int64_t particles_for_absorbed_budget(const GrayModel& model, const SetupConfig& setup,
                                           double na_target);

struct ReconstructionReport {
  GrayImage reconstructed;
  std::vector<std::uint8_t> misinterpreted;  // 1 where reconstructed != truth
  std::int64_t error_count = 0;
  double mean_absorbed_per_pixel = 0.0;
  std::int64_t total_particles = 0;
  std::int64_t particles_per_pixel = 0;
};

/// Illuminates every pixel of the sample with n_particles, classifies the
/// counted outcome with the protocol matching the setup, and tallies the
/// misinterpreted pixels.  Per-pixel random streams are derived from
/// (master_seed, pixel index): results are independent of evaluation order,
/// and pixels may be processed in parallel (ZENO_TOMO_THREADS caps the worker
/// count).
ReconstructionReport reconstruct(const GrayImage& sample, const GrayModel& model,
                                 const SetupConfig& setup, std::int64_t n_particles,
                                 std::uint64_t master_seed);

/// One point of the irradiation-ratio comparison: at prior alpha, the number
/// of particles (and absorbed particles) each setup needs to reach target_pe
/// when discriminating tau from tau + d_tau with the single-channel protocol.
struct RatioPoint {
  double alpha = 0.0;
  double ratio = 0.0;  // absorbed_zeno / absorbed_standard
  std::int64_t n_standard = 0;
  std::int64_t n_zeno = 0;
  double absorbed_standard = 0.0;
  double absorbed_zeno = 0.0;
};

RatioPoint irradiation_ratio(double tau, double d_tau, std::int64_t loops, double target_pe,
                             double alpha);

/// Ratio curve over an alpha grid.  Grid points whose target is unreachable
/// are collected as (alpha, message) diagnostics instead of aborting the sweep.
struct RatioCurve {
  std::vector<RatioPoint> points;
  std::vector<std::pair<double, std::string>> failures;
};

RatioCurve irradiation_ratio_curve(double tau, double d_tau, std::int64_t loops,
                                   double target_pe, std::span<const double> alpha_grid);

/// Deterministic synthetic test sample: the most frequent level forms the
/// background and each rarer level fills a disk-shaped region, with level
/// counts matching round(alpha_i * w * h) exactly (largest-remainder rounding).
GrayImage synthetic_specimen(std::int32_t width, std::int32_t height,
                             std::span<const double> alphas);

}  // namespace zenotomo

#endif  // ZENOTOMO_SIMULATOR_HPP

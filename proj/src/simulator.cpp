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

#include "simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <thread>

#include "errors.hpp"

namespace zenotomo {

namespace {

void check_distribution(const ChannelProbabilities& probs) {
  const double sum = probs.zeno + probs.orthogonal + probs.absorbed;
  if (!(probs.zeno >= 0.0) || !(probs.orthogonal >= 0.0) || !(probs.absorbed >= 0.0) ||
      std::fabs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("channel probabilities must be a distribution over 3 outcomes");
  }
}

int worker_count(std::size_t pixel_count) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("ZENO_TOMO_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  // No point spinning up workers for a handful of pixels.
  const std::size_t max_useful = pixel_count / 256 + 1;
  return static_cast<int>(std::min<std::size_t>(n, max_useful));
}

}  // namespace

std::int64_t sample_binomial(PixelRng& rng, std::int64_t n, double p) {
  if (n < 0) throw std::invalid_argument("trial count must be >= 0");
  if (p <= 0.0) return 0;
  if (p >= 1.0) return n;
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (rng.next_unit() < p) ++successes;
  }
  return successes;
}

PixelOutcome simulate_pixel(const ChannelProbabilities& probs, std::int64_t n_particles,
                            PixelRng& rng) {
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");
  check_distribution(probs);
  PixelOutcome outcome;
  outcome.n_a = sample_binomial(rng, n_particles, probs.absorbed);
  const std::int64_t detected = n_particles - outcome.n_a;
  const double p_detect = probs.zeno + probs.orthogonal;
  const double q = p_detect > 0.0 ? probs.orthogonal / p_detect : 0.0;
  outcome.n_o = sample_binomial(rng, detected, q);
  outcome.n_z = detected - outcome.n_o;
  return outcome;
}

std::pair<std::int64_t, std::int64_t> simulate_standard_pixel(double tau,
                                                              std::int64_t n_particles,
                                                              PixelRng& rng) {
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");
  const auto [p_detect, p_absorb] = standard_probabilities(tau);
  (void)p_detect;
  const std::int64_t n_a = sample_binomial(rng, n_particles, p_absorb);
  return {n_particles - n_a, n_a};
}

std::vector<ChannelProbabilities> channel_probabilities(const GrayModel& model,
                                                        const SetupConfig& setup) {
  model.validate();
  std::vector<ChannelProbabilities> probs;
  probs.reserve(model.levels.size());
  for (const GrayLevel& level : model.levels) {
    switch (setup.kind) {
      case Setup::kStandard: {
        const auto [p_detect, p_absorb] = standard_probabilities(level.tau);
        probs.push_back({p_detect, 0.0, p_absorb});
        break;
      }
      case Setup::kZeno:
        probs.push_back(zeno_probabilities({setup.loops, level.tau}));
        break;
      case Setup::kZenoAsymptotic:
        probs.push_back(zeno_probabilities_asymptotic({setup.loops, level.tau}));
        break;
    }
  }
  return probs;
}

double mean_absorption_probability(const GrayModel& model, const SetupConfig& setup) {
  const auto probs = channel_probabilities(model, setup);
  double mean = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    mean += model.levels[i].alpha * probs[i].absorbed;
  }
  return mean;
}

std::int64_t particles_for_absorbed_budget(const GrayModel& model, const SetupConfig& setup,
                                           double na_target) {
  if (!(na_target > 0.0)) throw std::invalid_argument("absorbed budget must be > 0");
  const double mean_pa = mean_absorption_probability(model, setup);
  if (!(mean_pa > 0.0)) {
    throw UnreachableTargetError("the model absorbs nothing under this setup");
  }
  const double n = std::ceil(na_target / mean_pa);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(n));
}

ReconstructionReport reconstruct(const GrayImage& sample, const GrayModel& model,
                                 const SetupConfig& setup, std::int64_t n_particles,
                                 std::uint64_t master_seed) {
  model.validate();
  check_levels(sample, model.levels.size());
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");

  const auto probs = channel_probabilities(model, setup);
  std::vector<double> priors;
  priors.reserve(model.levels.size());
  for (const GrayLevel& level : model.levels) priors.push_back(level.alpha);
  const Classifier classifier(std::move(priors), probs, n_particles);

  const std::size_t pixel_count = sample.pixel_count();
  ReconstructionReport report;
  report.reconstructed = GrayImage(sample.width, sample.height);
  report.misinterpreted.assign(pixel_count, 0);
  report.particles_per_pixel = n_particles;
  report.total_particles = n_particles * static_cast<std::int64_t>(pixel_count);

  const int workers = worker_count(pixel_count);
  std::vector<std::int64_t> errors_per_worker(workers, 0);
  std::vector<std::int64_t> absorbed_per_worker(workers, 0);
  std::vector<std::exception_ptr> worker_errors(workers);

  const std::size_t chunk = (pixel_count + workers - 1) / workers;
  auto run_range = [&](int worker, std::size_t begin, std::size_t end) {
    try {
      std::int64_t errors = 0;
      std::int64_t absorbed = 0;
      for (std::size_t i = begin; i < end; ++i) {
        const std::uint8_t truth = sample.levels[i];
        PixelRng rng = pixel_stream(master_seed, i);
        const PixelOutcome outcome = simulate_pixel(probs[truth], n_particles, rng);
        const int decided = classifier.classify(outcome.n_z, outcome.n_o);
        report.reconstructed.levels[i] = static_cast<std::uint8_t>(decided);
        if (decided != truth) {
          report.misinterpreted[i] = 1;
          ++errors;
        }
        absorbed += outcome.n_a;
      }
      errors_per_worker[worker] = errors;
      absorbed_per_worker[worker] = absorbed;
    } catch (...) {
      worker_errors[worker] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_range(0, 0, pixel_count);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(pixel_count, static_cast<std::size_t>(w) * chunk);
      const std::size_t end = std::min(pixel_count, begin + chunk);
      pool.emplace_back(run_range, w, begin, end);
    }
    pool.clear();  // join
  }
  for (const auto& err : worker_errors) {
    if (err) std::rethrow_exception(err);
  }

  report.error_count = std::accumulate(errors_per_worker.begin(), errors_per_worker.end(),
                                       std::int64_t{0});
  const std::int64_t absorbed_total =
      std::accumulate(absorbed_per_worker.begin(), absorbed_per_worker.end(), std::int64_t{0});
  report.mean_absorbed_per_pixel =
      static_cast<double>(absorbed_total) / static_cast<double>(pixel_count);
  return report;
}

RatioPoint irradiation_ratio(double tau, double d_tau, std::int64_t loops, double target_pe,
                             double alpha) {
  if (!(d_tau > 0.0)) throw std::invalid_argument("d_tau must be > 0");
  if (!(tau > 0.0) || !(tau + d_tau < 1.0)) {
    throw std::invalid_argument("requires 0 < tau and tau + d_tau < 1");
  }
  const double tau2 = tau + d_tau;

  // Single-channel protocol for both setups.  required_particles wants its
  // hypotheses ordered with the less absorbing one first, so each setup
  // relabels as needed (absorption decreases with tau in the standard setup
  // and increases with it in the Zeno regime).
  const auto particles_needed = [&](double pa_1, double pa_2) {
    if (pa_1 < pa_2) return required_particles(pa_1, pa_2, alpha, target_pe);
    return required_particles(pa_2, pa_1, 1.0 - alpha, target_pe);
  };

  const double pa_std_1 = standard_probabilities(tau).second;
  const double pa_std_2 = standard_probabilities(tau2).second;
  const double pa_zeno_1 = zeno_probabilities({loops, tau}).absorbed;
  const double pa_zeno_2 = zeno_probabilities({loops, tau2}).absorbed;

  RatioPoint point;
  point.alpha = alpha;
  point.n_standard = particles_needed(pa_std_1, pa_std_2);
  point.n_zeno = particles_needed(pa_zeno_1, pa_zeno_2);
  point.absorbed_standard = mean_absorbed(pa_std_1, pa_std_2, alpha, point.n_standard);
  point.absorbed_zeno = mean_absorbed(pa_zeno_1, pa_zeno_2, alpha, point.n_zeno);
  point.ratio = point.absorbed_zeno / point.absorbed_standard;
  return point;
}

RatioCurve irradiation_ratio_curve(double tau, double d_tau, std::int64_t loops,
                                   double target_pe, std::span<const double> alpha_grid) {
  RatioCurve curve;
  for (double alpha : alpha_grid) {
    try {
      curve.points.push_back(irradiation_ratio(tau, d_tau, loops, target_pe, alpha));
    } catch (const UnreachableTargetError& err) {
      curve.failures.emplace_back(alpha, err.what());
    } catch (const std::invalid_argument& err) {
      curve.failures.emplace_back(alpha, err.what());
    }
  }
  return curve;
}

GrayImage synthetic_specimen(std::int32_t width, std::int32_t height,
                             std::span<const double> alphas) {
  if (width < 1 || height < 1 ||
      static_cast<std::int64_t>(width) * static_cast<std::int64_t>(height) > (1 << 22)) {
    throw std::invalid_argument("unsupported specimen dimensions");
  }
  if (alphas.empty() || alphas.size() > 256) {
    throw std::invalid_argument("level count must be in 1..256");
  }
  double sum = 0.0;
  for (double a : alphas) {
    if (!(a >= 0.0)) throw std::invalid_argument("frequencies must be >= 0");
    sum += a;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("frequencies must sum to 1");
  }

  const std::size_t pixel_count =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);

  // Largest-remainder rounding to exact per-level pixel counts.
  std::vector<std::int64_t> counts(alphas.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double exact = alphas[i] * static_cast<double>(pixel_count);
    counts[i] = static_cast<std::int64_t>(std::floor(exact));
    assigned += counts[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::int64_t left = static_cast<std::int64_t>(pixel_count) - assigned; left > 0;
       --left) {
    ++counts[remainders[static_cast<std::size_t>(left - 1) % remainders.size()].second];
  }

  const std::size_t background =
      static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) -
                               counts.begin());

  // Rarest regions are placed first so later, larger regions flow around them.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (i != background) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] < counts[b]; });

  GrayImage image(width, height);
  std::fill(image.levels.begin(), image.levels.end(),
            static_cast<std::uint8_t>(background));
  std::vector<std::uint8_t> taken(pixel_count, 0);

  std::vector<std::pair<std::int64_t, std::size_t>> by_distance;
  by_distance.reserve(pixel_count);
  for (std::size_t blob = 0; blob < order.size(); ++blob) {
    const std::size_t level = order[blob];
    if (counts[level] == 0) continue;
    const double angle = 2.4 * static_cast<double>(blob);
    const double cx = 0.5 * width + 0.10 * width * std::cos(angle);
    const double cy = 0.5 * height + 0.10 * height * std::sin(angle);
    by_distance.clear();
    for (std::size_t i = 0; i < pixel_count; ++i) {
      if (taken[i]) continue;
      const double x = static_cast<double>(i % static_cast<std::size_t>(width));
      const double y = static_cast<double>(i / static_cast<std::size_t>(width));
      const double dx = x - cx;
      const double dy = y - cy;
      // Scaled to integers so ordering is exact and platform independent.
      by_distance.emplace_back(static_cast<std::int64_t>((dx * dx + dy * dy) * 16.0), i);
    }
    std::sort(by_distance.begin(), by_distance.end());
    const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(counts[level]),
                                                   by_distance.size());
    for (std::size_t k = 0; k < take; ++k) {
      const std::size_t pixel = by_distance[k].second;
      image.levels[pixel] = static_cast<std::uint8_t>(level);
      taken[pixel] = 1;
    }
  }
  return image;
}

}  // namespace zenotomo

/*************************************************************************************
 * C API of zenotomo: wraps the C++ core behind opaque handles and error codes
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

#include "zenotomo/zenotomo.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "decision.hpp"
#include "errors.hpp"
#include "estimation.hpp"
#include "gray_image.hpp"
#include "interferometer.hpp"
#include "pgm.hpp"
#include "rng.hpp"
#include "sample_model.hpp"
#include "simulator.hpp"

namespace {

constexpr int32_t kVersionMajor = 0;
constexpr int32_t kVersionMinor = 1;
constexpr int32_t kVersionPatch = 0;

thread_local std::string tl_last_error;

void set_error(const char* message) { tl_last_error = message ? message : ""; }

int32_t fail(int32_t code, const char* message) {
  set_error(message);
  return code;
}

// Runs the body and translates exceptions into status codes.
template <typename Fn>
int32_t guarded(Fn&& fn) {
  try {
    fn();
    return ZT_OK;
  } catch (const zenotomo::RegimeError& e) {
    return fail(ZT_ERR_REGIME, e.what());
  } catch (const zenotomo::DegenerateError& e) {
    return fail(ZT_ERR_DEGENERATE, e.what());
  } catch (const zenotomo::UnreachableTargetError& e) {
    return fail(ZT_ERR_UNREACHABLE, e.what());
  } catch (const zenotomo::ParseError& e) {
    return fail(ZT_ERR_FORMAT, e.what());
  } catch (const zenotomo::IoError& e) {
    return fail(ZT_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ZT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ZT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(ZT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZT_ERR_INTERNAL, e.what());
  }
}

int32_t require(bool ok, const char* name) {
  return ok ? ZT_OK : fail(ZT_ERR_NULL_POINTER, name);
}

}  // namespace

struct zt_model {
  zenotomo::SampleModel impl;
  bool validated = false;
};

struct zt_image {
  zenotomo::GrayImage impl;
};

struct zt_classifier {
  zenotomo::Classifier impl;
  zenotomo::SetupConfig setup;
  zenotomo::GrayModel gray;
  std::vector<zenotomo::PairRule> pairs;
};

struct zt_report {
  zenotomo::ReconstructionReport impl;
  zt_image reconstruction;  // view exposed through zt_report_reconstruction
};

namespace {

zenotomo::SetupConfig make_setup(int32_t setup, int64_t loops) {
  if (setup == ZT_SETUP_STANDARD) return zenotomo::SetupConfig::standard();
  if (setup == ZT_SETUP_ZENO) return zenotomo::SetupConfig::zeno(loops);
  if (setup == ZT_SETUP_ZENO_ASYMPTOTIC) return zenotomo::SetupConfig::zeno_asymptotic(loops);
  throw std::invalid_argument("setup must be one of the ZT_SETUP_* constants");
}

const zenotomo::SampleModel& validated_model(const zt_model* model) {
  model->impl.validate();
  return model->impl;
}

}  // namespace

extern "C" {

const char* zt_strerror(int32_t code) {
  switch (code) {
    case ZT_OK: return "ZT_OK";
    case ZT_ERR_INVALID_ARGUMENT: return "ZT_ERR_INVALID_ARGUMENT";
    case ZT_ERR_REGIME: return "ZT_ERR_REGIME";
    case ZT_ERR_DEGENERATE: return "ZT_ERR_DEGENERATE";
    case ZT_ERR_UNREACHABLE: return "ZT_ERR_UNREACHABLE";
    case ZT_ERR_IO: return "ZT_ERR_IO";
    case ZT_ERR_FORMAT: return "ZT_ERR_FORMAT";
    case ZT_ERR_NULL_POINTER: return "ZT_ERR_NULL_POINTER";
    case ZT_ERR_INTERNAL: return "ZT_ERR_INTERNAL";
    default: return "ZT_ERR_UNKNOWN";
  }
}

const char* zt_last_error_message(void) { return tl_last_error.c_str(); }

void zt_version(int32_t* major, int32_t* minor, int32_t* patch) {
  if (major) *major = kVersionMajor;
  if (minor) *minor = kVersionMinor;
  if (patch) *patch = kVersionPatch;
}

/* ---- interferometer ---- */

int32_t zt_zeno_probabilities(int64_t loops, double tau, double* p_z, double* p_o,
                              double* p_a) {
  if (int32_t rc = require(p_z && p_o && p_a, "p_z/p_o/p_a")) return rc;
  return guarded([&] {
    const auto probs = zenotomo::zeno_probabilities({loops, tau});
    *p_z = probs.zeno;
    *p_o = probs.orthogonal;
    *p_a = probs.absorbed;
  });
}

int32_t zt_zeno_probabilities_asymptotic(int64_t loops, double tau, double* p_z, double* p_o,
                                         double* p_a) {
  if (int32_t rc = require(p_z && p_o && p_a, "p_z/p_o/p_a")) return rc;
  return guarded([&] {
    const auto probs = zenotomo::zeno_probabilities_asymptotic({loops, tau});
    *p_z = probs.zeno;
    *p_o = probs.orthogonal;
    *p_a = probs.absorbed;
  });
}

int32_t zt_zeno_threshold(int64_t loops, double* tau_max) {
  if (int32_t rc = require(tau_max != nullptr, "tau_max")) return rc;
  return guarded([&] { *tau_max = zenotomo::zeno_threshold(loops); });
}

int32_t zt_zeno_min_loops(double tau, double* loops_min) {
  if (int32_t rc = require(loops_min != nullptr, "loops_min")) return rc;
  return guarded([&] { *loops_min = zenotomo::zeno_min_loops(tau); });
}

int32_t zt_standard_probabilities(double tau, double* p_detect, double* p_absorb) {
  if (int32_t rc = require(p_detect && p_absorb, "p_detect/p_absorb")) return rc;
  return guarded([&] {
    const auto [d, a] = zenotomo::standard_probabilities(tau);
    *p_detect = d;
    *p_absorb = a;
  });
}

int32_t zt_effective_transmission(int64_t loops, double tau, double* tau_eff) {
  if (int32_t rc = require(tau_eff != nullptr, "tau_eff")) return rc;
  return guarded([&] { *tau_eff = zenotomo::effective_transmission({loops, tau}); });
}

/* ---- estimation ---- */

int32_t zt_crlb_standard(double tau, int64_t n_particles, double* bound) {
  if (int32_t rc = require(bound != nullptr, "bound")) return rc;
  return guarded([&] { *bound = zenotomo::crlb_standard(tau, n_particles); });
}

int32_t zt_crlb_zeno(double tau, int64_t n_particles, int64_t loops, double* bound) {
  if (int32_t rc = require(bound != nullptr, "bound")) return rc;
  return guarded([&] { *bound = zenotomo::crlb_zeno(tau, n_particles, loops); });
}

int32_t zt_crlb_per_absorbed(double tau, double n_absorbed, double* bound) {
  if (int32_t rc = require(bound != nullptr, "bound")) return rc;
  return guarded([&] { *bound = zenotomo::crlb_per_absorbed(tau, n_absorbed); });
}

/* ---- decisions ---- */

int32_t zt_binomial_threshold(double p_a1, double p_a2, double alpha, int64_t n_particles,
                              double* threshold_raw, int64_t* threshold, int32_t* kind) {
  if (int32_t rc = require(threshold_raw && threshold && kind, "threshold outputs")) return rc;
  return guarded([&] {
    const auto rule = zenotomo::binomial_threshold(p_a1, p_a2, alpha, n_particles);
    *threshold_raw = rule.threshold_raw;
    *threshold = rule.threshold;
    switch (rule.kind) {
      case zenotomo::BinomialRuleKind::kThreshold: *kind = ZT_RULE_THRESHOLD; break;
      case zenotomo::BinomialRuleKind::kAlwaysH1: *kind = ZT_RULE_ALWAYS_H1; break;
      case zenotomo::BinomialRuleKind::kAlwaysH2: *kind = ZT_RULE_ALWAYS_H2; break;
    }
  });
}

int32_t zt_binomial_error(double p_a1, double p_a2, double alpha, int64_t n_particles,
                          int64_t threshold, double* pe) {
  if (int32_t rc = require(pe != nullptr, "pe")) return rc;
  return guarded([&] {
    zenotomo::BinomialRule rule;
    rule.threshold = threshold;
    rule.threshold_raw = static_cast<double>(threshold);
    rule.kind = threshold < 0             ? zenotomo::BinomialRuleKind::kAlwaysH2
                : threshold >= n_particles ? zenotomo::BinomialRuleKind::kAlwaysH1
                                           : zenotomo::BinomialRuleKind::kThreshold;
    *pe = zenotomo::binomial_error(p_a1, p_a2, alpha, n_particles, rule);
  });
}

int32_t zt_optimal_binomial_error(double p_a1, double p_a2, double alpha, int64_t n_particles,
                                  double* pe) {
  if (int32_t rc = require(pe != nullptr, "pe")) return rc;
  return guarded([&] {
    *pe = zenotomo::optimal_binomial_error(p_a1, p_a2, alpha, n_particles);
  });
}

int32_t zt_mean_absorbed(double p_a1, double p_a2, double alpha, int64_t n_particles,
                         double* n_absorbed) {
  if (int32_t rc = require(n_absorbed != nullptr, "n_absorbed")) return rc;
  return guarded([&] {
    *n_absorbed = zenotomo::mean_absorbed(p_a1, p_a2, alpha, n_particles);
  });
}

int32_t zt_required_particles(double p_a1, double p_a2, double alpha, double target_pe,
                              int64_t* n_particles) {
  if (int32_t rc = require(n_particles != nullptr, "n_particles")) return rc;
  return guarded([&] {
    *n_particles = zenotomo::required_particles(p_a1, p_a2, alpha, target_pe);
  });
}

int32_t zt_trinomial_line(double p_z1, double p_o1, double p_a1, double p_z2, double p_o2,
                          double p_a2, double alpha, int64_t n_particles, double* slope,
                          double* intercept, int32_t* h1_side) {
  if (int32_t rc = require(slope && intercept && h1_side, "line outputs")) return rc;
  return guarded([&] {
    const auto rule = zenotomo::trinomial_line({p_z1, p_o1, p_a1}, {p_z2, p_o2, p_a2}, alpha,
                                               n_particles);
    *slope = rule.slope;
    *intercept = rule.intercept;
    *h1_side = rule.h1_side;
  });
}

/* ---- models ---- */

int32_t zt_model_create(zt_model** model) {
  if (int32_t rc = require(model != nullptr, "model")) return rc;
  return guarded([&] { *model = new zt_model(); });
}

void zt_model_free(zt_model* model) { delete model; }

int32_t zt_model_add_level(zt_model* model, double tau, double alpha, int32_t range_lo,
                           int32_t range_hi, int32_t display_value) {
  if (int32_t rc = require(model != nullptr, "model")) return rc;
  return guarded([&] {
    model->impl.gray.levels.push_back({tau, alpha});
    model->impl.bands.push_back({range_lo, range_hi, display_value});
    model->validated = false;
  });
}

int32_t zt_model_validate(zt_model* model) {
  if (int32_t rc = require(model != nullptr, "model")) return rc;
  return guarded([&] {
    // Sort levels (and their bands) by tau before checking the invariants.
    auto& gray = model->impl.gray;
    auto& bands = model->impl.bands;
    std::vector<std::size_t> order(gray.levels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return gray.levels[a].tau < gray.levels[b].tau;
    });
    zenotomo::SampleModel sorted;
    for (std::size_t i : order) {
      sorted.gray.levels.push_back(gray.levels[i]);
      if (i < bands.size()) sorted.bands.push_back(bands[i]);
    }
    sorted.validate();
    model->impl = std::move(sorted);
    model->validated = true;
  });
}

int32_t zt_model_load(const char* path, zt_model** model) {
  if (int32_t rc = require(path && model, "path/model")) return rc;
  return guarded([&] {
    auto owned = std::make_unique<zt_model>();
    owned->impl = zenotomo::SampleModel::load(path);
    owned->validated = true;
    *model = owned.release();
  });
}

int32_t zt_model_level_count(const zt_model* model, int32_t* count) {
  if (int32_t rc = require(model && count, "model/count")) return rc;
  *count = static_cast<int32_t>(model->impl.gray.levels.size());
  return ZT_OK;
}

int32_t zt_model_level(const zt_model* model, int32_t index, double* tau, double* alpha,
                       int32_t* range_lo, int32_t* range_hi, int32_t* display_value) {
  if (int32_t rc = require(model != nullptr, "model")) return rc;
  return guarded([&] {
    if (index < 0 || static_cast<std::size_t>(index) >= model->impl.gray.levels.size()) {
      throw std::out_of_range("level index " + std::to_string(index) + " out of range");
    }
    const auto& level = model->impl.gray.levels[static_cast<std::size_t>(index)];
    const auto& band = model->impl.bands[static_cast<std::size_t>(index)];
    if (tau) *tau = level.tau;
    if (alpha) *alpha = level.alpha;
    if (range_lo) *range_lo = band.lo;
    if (range_hi) *range_hi = band.hi;
    if (display_value) *display_value = band.display;
  });
}

int32_t zt_model_measure_alpha(zt_model* model, const zt_image* image) {
  if (int32_t rc = require(model && image, "model/image")) return rc;
  return guarded([&] {
    const auto alphas =
        zenotomo::measure_alphas(image->impl, model->impl.gray.levels.size());
    zenotomo::SampleModel updated = model->impl;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      updated.gray.levels[i].alpha = alphas[i];
    }
    updated.validate();  // rejects levels missing from the image
    model->impl = std::move(updated);
    model->validated = true;
  });
}

/* ---- images ---- */

int32_t zt_image_create(int32_t width, int32_t height, zt_image** image) {
  if (int32_t rc = require(image != nullptr, "image")) return rc;
  return guarded([&] { *image = new zt_image{zenotomo::GrayImage(width, height)}; });
}

void zt_image_free(zt_image* image) { delete image; }

int32_t zt_image_size(const zt_image* image, int32_t* width, int32_t* height) {
  if (int32_t rc = require(image && width && height, "image/width/height")) return rc;
  *width = image->impl.width;
  *height = image->impl.height;
  return ZT_OK;
}

int32_t zt_image_get(const zt_image* image, int32_t x, int32_t y, int32_t* level) {
  if (int32_t rc = require(image && level, "image/level")) return rc;
  return guarded([&] { *level = image->impl.at(x, y); });
}

int32_t zt_image_set(zt_image* image, int32_t x, int32_t y, int32_t level) {
  if (int32_t rc = require(image != nullptr, "image")) return rc;
  return guarded([&] {
    if (level < 0 || level > 255) {
      throw std::invalid_argument("level must be in 0..255");
    }
    image->impl.set(x, y, static_cast<std::uint8_t>(level));
  });
}

int32_t zt_image_read_pgm(const char* path, const zt_model* model, zt_image** image) {
  if (int32_t rc = require(path && model && image, "path/model/image")) return rc;
  return guarded([&] {
    auto owned = std::make_unique<zt_image>();
    owned->impl = zenotomo::read_gray_image(path, validated_model(model));
    *image = owned.release();
  });
}

int32_t zt_image_write_pgm(const zt_image* image, const zt_model* model, const char* path) {
  if (int32_t rc = require(image && model && path, "image/model/path")) return rc;
  return guarded([&] {
    zenotomo::write_gray_image(path, image->impl, validated_model(model));
  });
}

int32_t zt_image_synthetic_specimen(int32_t width, int32_t height, const zt_model* model,
                                    zt_image** image) {
  if (int32_t rc = require(model && image, "model/image")) return rc;
  return guarded([&] {
    const auto& sample = validated_model(model);
    std::vector<double> alphas;
    alphas.reserve(sample.gray.levels.size());
    for (const auto& level : sample.gray.levels) alphas.push_back(level.alpha);
    auto owned = std::make_unique<zt_image>();
    owned->impl = zenotomo::synthetic_specimen(width, height, alphas);
    *image = owned.release();
  });
}

/* ---- classifiers ---- */

namespace {

zt_classifier* build_classifier(const zenotomo::SampleModel& sample,
                                const zenotomo::SetupConfig& setup, int64_t n_particles) {
  const auto probs = zenotomo::channel_probabilities(sample.gray, setup);
  std::vector<double> priors;
  priors.reserve(sample.gray.levels.size());
  for (const auto& level : sample.gray.levels) priors.push_back(level.alpha);
  auto owned = std::make_unique<zt_classifier>(zt_classifier{
      zenotomo::Classifier(std::move(priors), probs, n_particles), setup, sample.gray,
      zenotomo::adjacent_pair_rules(sample.gray, probs, n_particles)});
  return owned.release();
}

}  // namespace

int32_t zt_classifier_create(const zt_model* model, int32_t setup, int64_t loops,
                             int64_t n_particles, zt_classifier** classifier) {
  if (int32_t rc = require(model && classifier, "model/classifier")) return rc;
  return guarded([&] {
    *classifier =
        build_classifier(validated_model(model), make_setup(setup, loops), n_particles);
  });
}

void zt_classifier_free(zt_classifier* classifier) { delete classifier; }

int32_t zt_classifier_classify(const zt_classifier* classifier, int64_t n_z, int64_t n_o,
                               int32_t* level) {
  if (int32_t rc = require(classifier && level, "classifier/level")) return rc;
  return guarded([&] { *level = classifier->impl.classify(n_z, n_o); });
}

int32_t zt_classifier_channel_probabilities(const zt_classifier* classifier, int32_t level,
                                            double* p_z, double* p_o, double* p_a) {
  if (int32_t rc = require(classifier && p_z && p_o && p_a, "classifier/outputs")) return rc;
  return guarded([&] {
    if (level < 0 || level >= classifier->impl.level_count()) {
      throw std::out_of_range("level index out of range");
    }
    const auto& probs =
        classifier->impl.channel_probabilities()[static_cast<std::size_t>(level)];
    *p_z = probs.zeno;
    *p_o = probs.orthogonal;
    *p_a = probs.absorbed;
  });
}

int32_t zt_classifier_pair_count(const zt_classifier* classifier, int32_t* count) {
  if (int32_t rc = require(classifier && count, "classifier/count")) return rc;
  *count = static_cast<int32_t>(classifier->pairs.size());
  return ZT_OK;
}

int32_t zt_classifier_pair_rule(const zt_classifier* classifier, int32_t pair_index,
                                zt_pair_rule* rule) {
  if (int32_t rc = require(classifier && rule, "classifier/rule")) return rc;
  return guarded([&] {
    if (pair_index < 0 || static_cast<std::size_t>(pair_index) >= classifier->pairs.size()) {
      throw std::out_of_range("pair index out of range");
    }
    const auto& pair = classifier->pairs[static_cast<std::size_t>(pair_index)];
    std::memset(rule, 0, sizeof(*rule));
    rule->lower_level = pair.lower_level;
    rule->binomial_h1_level = pair.h1_level;
    rule->binomial_alpha = pair.pair_alpha;
    if (pair.binomial) {
      rule->has_binomial = 1;
      rule->binomial_threshold_raw = pair.binomial->threshold_raw;
      rule->binomial_threshold = pair.binomial->threshold;
      switch (pair.binomial->kind) {
        case zenotomo::BinomialRuleKind::kThreshold:
          rule->binomial_kind = ZT_RULE_THRESHOLD;
          break;
        case zenotomo::BinomialRuleKind::kAlwaysH1:
          rule->binomial_kind = ZT_RULE_ALWAYS_H1;
          break;
        case zenotomo::BinomialRuleKind::kAlwaysH2:
          rule->binomial_kind = ZT_RULE_ALWAYS_H2;
          break;
      }
    }
    if (pair.trinomial) {
      rule->has_trinomial = 1;
      rule->trinomial_slope = pair.trinomial->slope;
      rule->trinomial_intercept = pair.trinomial->intercept;
      rule->trinomial_h1_side = pair.trinomial->h1_side;
    }
    if (classifier->setup.kind != zenotomo::Setup::kStandard) {
      const double threshold = zenotomo::zeno_threshold(classifier->setup.loops);
      const std::size_t lo = static_cast<std::size_t>(pair.lower_level);
      rule->lower_in_zeno_regime = classifier->gray.levels[lo].tau < threshold ? 1 : 0;
      rule->upper_in_zeno_regime = classifier->gray.levels[lo + 1].tau < threshold ? 1 : 0;
    }
  });
}

/* ---- simulation ---- */

int32_t zt_simulate_pixel(double p_z, double p_o, double p_a, int64_t n_particles,
                          uint64_t master_seed, uint64_t pixel_index, int64_t* n_z,
                          int64_t* n_o, int64_t* n_a) {
  if (int32_t rc = require(n_z && n_o && n_a, "count outputs")) return rc;
  return guarded([&] {
    zenotomo::PixelRng rng = zenotomo::pixel_stream(master_seed, pixel_index);
    const auto outcome = zenotomo::simulate_pixel({p_z, p_o, p_a}, n_particles, rng);
    *n_z = outcome.n_z;
    *n_o = outcome.n_o;
    *n_a = outcome.n_a;
  });
}

int32_t zt_simulate_standard_pixel(double tau, int64_t n_particles, uint64_t master_seed,
                                   uint64_t pixel_index, int64_t* n_t, int64_t* n_a) {
  if (int32_t rc = require(n_t && n_a, "count outputs")) return rc;
  return guarded([&] {
    zenotomo::PixelRng rng = zenotomo::pixel_stream(master_seed, pixel_index);
    const auto [t, a] = zenotomo::simulate_standard_pixel(tau, n_particles, rng);
    *n_t = t;
    *n_a = a;
  });
}

int32_t zt_particles_for_absorbed(const zt_model* model, int32_t setup, int64_t loops,
                                  double na_target, int64_t* n_particles) {
  if (int32_t rc = require(model && n_particles, "model/n_particles")) return rc;
  return guarded([&] {
    *n_particles = zenotomo::particles_for_absorbed_budget(
        validated_model(model).gray, make_setup(setup, loops), na_target);
  });
}

int32_t zt_reconstruct(const zt_image* sample, const zt_model* model, int32_t setup,
                       int64_t loops, int64_t n_particles, uint64_t master_seed,
                       zt_report** report) {
  if (int32_t rc = require(sample && model && report, "sample/model/report")) return rc;
  return guarded([&] {
    auto owned = std::make_unique<zt_report>();
    owned->impl = zenotomo::reconstruct(sample->impl, validated_model(model).gray,
                                        make_setup(setup, loops), n_particles, master_seed);
    owned->reconstruction.impl = owned->impl.reconstructed;
    *report = owned.release();
  });
}

void zt_report_free(zt_report* report) { delete report; }

int32_t zt_report_error_count(const zt_report* report, int64_t* count) {
  if (int32_t rc = require(report && count, "report/count")) return rc;
  *count = report->impl.error_count;
  return ZT_OK;
}

int32_t zt_report_mean_absorbed(const zt_report* report, double* mean) {
  if (int32_t rc = require(report && mean, "report/mean")) return rc;
  *mean = report->impl.mean_absorbed_per_pixel;
  return ZT_OK;
}

int32_t zt_report_total_particles(const zt_report* report, int64_t* total) {
  if (int32_t rc = require(report && total, "report/total")) return rc;
  *total = report->impl.total_particles;
  return ZT_OK;
}

int32_t zt_report_particles_per_pixel(const zt_report* report, int64_t* n) {
  if (int32_t rc = require(report && n, "report/n")) return rc;
  *n = report->impl.particles_per_pixel;
  return ZT_OK;
}

int32_t zt_report_reconstruction(const zt_report* report, const zt_image** image) {
  if (int32_t rc = require(report && image, "report/image")) return rc;
  *image = &report->reconstruction;
  return ZT_OK;
}

int32_t zt_report_misinterpreted(const zt_report* report, int32_t x, int32_t y,
                                 int32_t* flag) {
  if (int32_t rc = require(report && flag, "report/flag")) return rc;
  return guarded([&] {
    const std::size_t index = report->impl.reconstructed.index(x, y);
    *flag = report->impl.misinterpreted[index];
  });
}

int32_t zt_report_write_mask_pgm(const zt_report* report, const char* path) {
  if (int32_t rc = require(report && path, "report/path")) return rc;
  return guarded([&] {
    zenotomo::RawGraymap map;
    map.width = report->impl.reconstructed.width;
    map.height = report->impl.reconstructed.height;
    map.pixels.resize(report->impl.misinterpreted.size());
    for (std::size_t i = 0; i < map.pixels.size(); ++i) {
      map.pixels[i] = report->impl.misinterpreted[i] ? 255 : 0;
    }
    zenotomo::write_pgm(path, map);
  });
}

/* ---- irradiation comparison ---- */

int32_t zt_irradiation_ratio(double tau, double d_tau, int64_t loops, double target_pe,
                             double alpha, double* ratio, int64_t* n_standard,
                             int64_t* n_zeno, double* absorbed_standard,
                             double* absorbed_zeno) {
  if (int32_t rc = require(ratio != nullptr, "ratio")) return rc;
  return guarded([&] {
    const auto point = zenotomo::irradiation_ratio(tau, d_tau, loops, target_pe, alpha);
    *ratio = point.ratio;
    if (n_standard) *n_standard = point.n_standard;
    if (n_zeno) *n_zeno = point.n_zeno;
    if (absorbed_standard) *absorbed_standard = point.absorbed_standard;
    if (absorbed_zeno) *absorbed_zeno = point.absorbed_zeno;
  });
}

} /* extern "C" */

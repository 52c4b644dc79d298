/*************************************************************************************
 * Minimum-error discrimination of gray levels from counted outcomes
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

#include "decision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "betainc.hpp"
#include "errors.hpp"

namespace zenotomo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_probability_open(double p, const char* name) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be strictly inside (0, 1), got " +
                                std::to_string(p));
  }
}

double safe_log(double p) { return p > 0.0 ? std::log(p) : -kInf; }

// c * log(p) with the convention 0 * log(0) = 0.
double count_term(std::int64_t c, double log_p) {
  return c == 0 ? 0.0 : static_cast<double>(c) * log_p;
}

}  // namespace

void GrayModel::validate() const {
  if (levels.size() < 2) {
    throw std::invalid_argument("gray model needs at least 2 levels, got " +
                                std::to_string(levels.size()));
  }
  double alpha_sum = 0.0;
  double prev_tau = -1.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const GrayLevel& lvl = levels[i];
    if (!(lvl.tau >= 0.0) || !(lvl.tau < 1.0)) {
      throw std::invalid_argument("level " + std::to_string(i) +
                                  ": tau must be in [0, 1), got " + std::to_string(lvl.tau));
    }
    if (!(lvl.tau > prev_tau)) {
      throw std::invalid_argument("level taus must be strictly increasing");
    }
    prev_tau = lvl.tau;
    if (!(lvl.alpha > 0.0) || !(lvl.alpha < 1.0)) {
      throw std::invalid_argument("level " + std::to_string(i) +
                                  ": alpha must be in (0, 1), got " + std::to_string(lvl.alpha));
    }
    alpha_sum += lvl.alpha;
  }
  if (std::fabs(alpha_sum - 1.0) > 1e-12) {
    throw std::invalid_argument("level frequencies must sum to 1, got " +
                                std::to_string(alpha_sum));
  }
}

BinomialRule binomial_threshold(double p_a1, double p_a2, double alpha,
                                std::int64_t n_particles) {
  check_probability_open(p_a1, "p_a1");
  check_probability_open(p_a2, "p_a2");
  check_probability_open(alpha, "alpha");
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");
  if (p_a1 == p_a2) {
    throw DegenerateError("hypotheses are indistinguishable: p_a1 == p_a2 == " +
                          std::to_string(p_a1));
  }
  if (p_a1 > p_a2) {
    throw std::invalid_argument("H1 must be the less absorbing hypothesis (p_a1 < p_a2)");
  }

  const double log_survival = std::log((1.0 - p_a1) / (1.0 - p_a2));
  const double numerator =
      std::log((1.0 - alpha) / alpha) - static_cast<double>(n_particles) * log_survival;
  const double denominator = std::log(p_a1 / p_a2) - log_survival;

  BinomialRule rule;
  rule.threshold_raw = numerator / denominator;
  rule.threshold = static_cast<std::int64_t>(std::floor(rule.threshold_raw));
  if (rule.threshold < 0) {
    rule.threshold = -1;
    rule.kind = BinomialRuleKind::kAlwaysH2;
  } else if (rule.threshold >= n_particles) {
    rule.threshold = n_particles;
    rule.kind = BinomialRuleKind::kAlwaysH1;
  } else {
    rule.kind = BinomialRuleKind::kThreshold;
  }
  return rule;
}

double binomial_error(double p_a1, double p_a2, double alpha, std::int64_t n_particles,
                      const BinomialRule& rule) {
  check_probability_open(p_a1, "p_a1");
  check_probability_open(p_a2, "p_a2");
  check_probability_open(alpha, "alpha");
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");

  // Constant rules carry a single prior term.
  if (rule.threshold < 0) return alpha;
  if (rule.threshold >= n_particles) return 1.0 - alpha;

  const double a = static_cast<double>(n_particles - rule.threshold);
  const double b = static_cast<double>(rule.threshold + 1);
  const double miss_h1 = 1.0 - reg_inc_beta(a, b, 1.0 - p_a1);  // P(n_a > threshold | H1)
  const double miss_h2 = reg_inc_beta(a, b, 1.0 - p_a2);        // P(n_a <= threshold | H2)
  return alpha * miss_h1 + (1.0 - alpha) * miss_h2;
}

double optimal_binomial_error(double p_a1, double p_a2, double alpha,
                              std::int64_t n_particles) {
  const BinomialRule rule = binomial_threshold(p_a1, p_a2, alpha, n_particles);
  return binomial_error(p_a1, p_a2, alpha, n_particles, rule);
}

double mean_absorbed(double p_a1, double p_a2, double alpha, std::int64_t n_particles) {
  if (!(p_a1 >= 0.0) || !(p_a1 <= 1.0) || !(p_a2 >= 0.0) || !(p_a2 <= 1.0)) {
    throw std::invalid_argument("absorption probabilities must be in [0, 1]");
  }
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be in [0, 1]");
  }
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");
  return static_cast<double>(n_particles) * (alpha * p_a1 + (1.0 - alpha) * p_a2);
}

std::int64_t required_particles(double p_a1, double p_a2, double alpha, double target_pe) {
  check_probability_open(p_a1, "p_a1");
  check_probability_open(p_a2, "p_a2");
  check_probability_open(alpha, "alpha");
  if (p_a1 == p_a2) {
    throw UnreachableTargetError("target error is unreachable: p_a1 == p_a2");
  }
  if (p_a1 > p_a2) {
    throw std::invalid_argument("H1 must be the less absorbing hypothesis (p_a1 < p_a2)");
  }
  const double floor_pe = std::min(alpha, 1.0 - alpha);
  if (!(target_pe > 0.0) || !(target_pe < floor_pe)) {
    throw std::invalid_argument("target error must satisfy 0 < target < min(alpha, 1-alpha)");
  }

  const auto meets = [&](std::int64_t n) {
    return optimal_binomial_error(p_a1, p_a2, alpha, n) <= target_pe;
  };
  // The error is stepwise non-monotone across integer-threshold jumps, so
  // accept N only once the target holds for three consecutive counts.
  const auto settled = [&](std::int64_t n) {
    return meets(n) && meets(n + 1) && meets(n + 2);
  };

  if (settled(1)) return 1;
  std::int64_t hi = 1;
  while (!settled(hi)) {
    hi *= 2;
    if (hi > (std::int64_t{1} << 26)) {
      throw UnreachableTargetError("target error not reached within 2^26 particles");
    }
  }
  for (std::int64_t n = hi / 2 + 1; n < hi; ++n) {
    if (settled(n)) return n;
  }
  return hi;
}

int TrinomialRule::decide(std::int64_t n_z, std::int64_t n_o) const {
  const double f =
      static_cast<double>(n_z) - slope * static_cast<double>(n_o) - intercept;
  const double oriented = h1_side > 0 ? f : -f;
  if (oriented > 0.0) return 0;
  if (oriented < 0.0) return 1;
  return alpha >= 0.5 ? 0 : 1;
}

TrinomialRule trinomial_line(const ChannelProbabilities& probs1,
                             const ChannelProbabilities& probs2, double alpha,
                             std::int64_t n_particles) {
  for (const auto* p : {&probs1, &probs2}) {
    check_probability_open(p->zeno, "p_z");
    check_probability_open(p->orthogonal, "p_o");
    check_probability_open(p->absorbed, "p_a");
  }
  check_probability_open(alpha, "alpha");
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");

  const double denominator =
      std::log(probs2.zeno * probs1.absorbed / (probs1.zeno * probs2.absorbed));
  if (std::fabs(denominator) < 1e-12) {
    throw DegenerateError("degenerate decision geometry: p_z(2) p_a(1) == p_z(1) p_a(2)");
  }

  TrinomialRule rule;
  rule.slope = std::log(probs1.orthogonal * probs2.absorbed /
                        (probs2.orthogonal * probs1.absorbed)) /
               denominator;
  rule.intercept = (static_cast<double>(n_particles) *
                        std::log(probs1.absorbed / probs2.absorbed) +
                    std::log(alpha / (1.0 - alpha))) /
                   denominator;
  rule.alpha = alpha;

  // Orient the line by evaluating the likelihood ratio at a witness outcome
  // off the R = 1 locus.
  const double log_prior_ratio = std::log(alpha / (1.0 - alpha));
  const double dz = std::log(probs1.zeno / probs2.zeno);
  const double dn = std::log(probs1.orthogonal / probs2.orthogonal);
  const double da = std::log(probs1.absorbed / probs2.absorbed);
  const auto log_ratio = [&](std::int64_t n_z, std::int64_t n_o) {
    const std::int64_t n_a = n_particles - n_z - n_o;
    return log_prior_ratio + static_cast<double>(n_z) * dz + static_cast<double>(n_o) * dn +
           static_cast<double>(n_a) * da;
  };

  const std::int64_t half = n_particles / 2;
  const std::int64_t corners[][2] = {
      {n_particles, 0}, {0, n_particles}, {0, 0}, {half, 0}, {0, half}};
  std::int64_t wz = n_particles, wo = 0;
  double lr = log_ratio(wz, wo);
  for (const auto& c : corners) {
    const double candidate = log_ratio(c[0], c[1]);
    if (std::fabs(candidate) > 1e-9) {
      wz = c[0];
      wo = c[1];
      lr = candidate;
      break;
    }
  }
  rule.witness_n_z = wz;
  rule.witness_n_o = wo;
  rule.witness_decision = lr > 0.0 ? 0 : 1;
  const double f = static_cast<double>(wz) - rule.slope * static_cast<double>(wo) -
                   rule.intercept;
  const int f_sign = f >= 0.0 ? 1 : -1;
  rule.h1_side = rule.witness_decision == 0 ? f_sign : -f_sign;
  return rule;
}

Classifier::Classifier(std::vector<double> priors, std::vector<ChannelProbabilities> probs,
                       std::int64_t n_particles)
    : priors_(std::move(priors)), probs_(std::move(probs)), n_particles_(n_particles) {
  if (priors_.empty() || priors_.size() != probs_.size()) {
    throw std::invalid_argument("classifier needs matching, non-empty priors and probabilities");
  }
  if (n_particles_ < 1) throw std::invalid_argument("particle count must be >= 1");
  double prior_sum = 0.0;
  for (double a : priors_) {
    if (!(a >= 0.0) || !(a <= 1.0)) {
      throw std::invalid_argument("priors must be in [0, 1]");
    }
    prior_sum += a;
  }
  if (std::fabs(prior_sum - 1.0) > 1e-9) {
    throw std::invalid_argument("priors must sum to 1, got " + std::to_string(prior_sum));
  }
  for (const auto& p : probs_) {
    const double sum = p.zeno + p.orthogonal + p.absorbed;
    if (!(p.zeno >= 0.0) || !(p.orthogonal >= 0.0) || !(p.absorbed >= 0.0) ||
        std::fabs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("channel probabilities must be a distribution over 3 outcomes");
    }
  }
  log_prior_.reserve(priors_.size());
  log_pz_.reserve(priors_.size());
  log_po_.reserve(priors_.size());
  log_pa_.reserve(priors_.size());
  for (std::size_t i = 0; i < priors_.size(); ++i) {
    log_prior_.push_back(safe_log(priors_[i]));
    log_pz_.push_back(safe_log(probs_[i].zeno));
    log_po_.push_back(safe_log(probs_[i].orthogonal));
    log_pa_.push_back(safe_log(probs_[i].absorbed));
  }
}

double Classifier::log_likelihood(int level, std::int64_t n_z, std::int64_t n_o) const {
  // The multinomial coefficient is shared by all hypotheses and dropped.
  const std::int64_t n_a = n_particles_ - n_z - n_o;
  const std::size_t i = static_cast<std::size_t>(level);
  return log_prior_[i] + count_term(n_z, log_pz_[i]) + count_term(n_o, log_po_[i]) +
         count_term(n_a, log_pa_[i]);
}

int Classifier::classify(std::int64_t n_z, std::int64_t n_o) const {
  if (n_z < 0 || n_o < 0 || n_z + n_o > n_particles_) {
    throw std::invalid_argument("outcome (" + std::to_string(n_z) + ", " + std::to_string(n_o) +
                                ") lies outside the triangle 0 <= n_z + n_o <= " +
                                std::to_string(n_particles_));
  }
  int best = -1;
  double best_ll = -kInf;
  for (int i = 0; i < level_count(); ++i) {
    const double ll = log_likelihood(i, n_z, n_o);
    if (ll > best_ll || (ll == best_ll && best >= 0 && priors_[static_cast<std::size_t>(i)] >
                                              priors_[static_cast<std::size_t>(best)])) {
      best = i;
      best_ll = ll;
    }
  }
  if (best < 0 || best_ll == -kInf) {
    throw std::domain_error("outcome is impossible under every hypothesis with nonzero prior");
  }
  return best;
}

int classify(std::int64_t n_z, std::int64_t n_o, const GrayModel& model,
             std::span<const ChannelProbabilities> channel_probs,
             std::int64_t n_particles) {
  model.validate();
  if (channel_probs.size() != model.levels.size()) {
    throw std::invalid_argument("channel probabilities must align with the model levels");
  }
  std::vector<double> priors;
  priors.reserve(model.levels.size());
  for (const auto& lvl : model.levels) priors.push_back(lvl.alpha);
  const Classifier clf(std::move(priors),
                       std::vector<ChannelProbabilities>(channel_probs.begin(),
                                                         channel_probs.end()),
                       n_particles);
  return clf.classify(n_z, n_o);
}

std::vector<PairRule> adjacent_pair_rules(const GrayModel& model,
                                          std::span<const ChannelProbabilities> channel_probs,
                                          std::int64_t n_particles) {
  model.validate();
  if (channel_probs.size() != model.levels.size()) {
    throw std::invalid_argument("channel probabilities must align with the model levels");
  }
  std::vector<PairRule> rules;
  for (std::size_t i = 0; i + 1 < model.levels.size(); ++i) {
    PairRule pair;
    pair.lower_level = static_cast<int>(i);
    const ChannelProbabilities& lo = channel_probs[i];
    const ChannelProbabilities& hi = channel_probs[i + 1];
    const double alpha_lo = model.levels[i].alpha;
    const double alpha_hi = model.levels[i + 1].alpha;
    const double pair_sum = alpha_lo + alpha_hi;

    const bool lo_absorbs_less = lo.absorbed < hi.absorbed;
    pair.h1_level = lo_absorbs_less ? static_cast<int>(i) : static_cast<int>(i + 1);
    const double pa_small = lo_absorbs_less ? lo.absorbed : hi.absorbed;
    const double pa_large = lo_absorbs_less ? hi.absorbed : lo.absorbed;
    pair.pair_alpha = (lo_absorbs_less ? alpha_lo : alpha_hi) / pair_sum;
    try {
      pair.binomial = binomial_threshold(pa_small, pa_large, pair.pair_alpha, n_particles);
    } catch (const std::invalid_argument&) {
      pair.binomial.reset();
    }

    try {
      pair.trinomial = trinomial_line(lo, hi, alpha_lo / pair_sum, n_particles);
    } catch (const std::invalid_argument&) {
      pair.trinomial.reset();
    }
    rules.push_back(pair);
  }
  return rules;
}

}  // namespace zenotomo

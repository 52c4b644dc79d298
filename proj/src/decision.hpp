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

#ifndef ZENOTOMO_DECISION_HPP
#define ZENOTOMO_DECISION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "interferometer.hpp"

namespace zenotomo {

/// One gray level: transmission amplitude and its prior frequency in the sample.
struct GrayLevel {
  double tau = 0.0;
  double alpha = 0.0;
};

/// Ordered list of gray-level hypotheses, ascending by tau.
struct GrayModel {
  std::vector<GrayLevel> levels;

  /// Throws std::invalid_argument unless there are >= 2 levels, the taus are
  /// strictly increasing within [0, 1), each alpha is in (0, 1) and the alphas
  /// sum to 1 within 1e-12.
  void validate() const;
};

/// Binomial decision data for a pair of hypotheses ordered so that H1 absorbs
/// less (p_a1 < p_a2): choose H1 iff n_a <= threshold.
enum class BinomialRuleKind {
  kThreshold,  // threshold in [0, N-1]
  kAlwaysH1,   // raw level >= N: every outcome favors H1
  kAlwaysH2,   // raw level < 0: every outcome favors H2
};

struct BinomialRule {
  double threshold_raw = 0.0;    // real-valued solution of the equal-likelihood condition
  std::int64_t threshold = 0;    // greatest integer <= threshold_raw, clamped to [-1, N]
  BinomialRuleKind kind = BinomialRuleKind::kThreshold;

  bool chooses_h1(std::int64_t n_absorbed) const { return n_absorbed <= threshold; }
};

/// Optimal decision level for the absorbed count.  Requires 0 < p_a1 < p_a2 < 1
/// and 0 < alpha < 1; equal absorption probabilities are rejected as
/// indistinguishable.
BinomialRule binomial_threshold(double p_a1, double p_a2, double alpha,
                                std::int64_t n_particles);

/// Prior-weighted misclassification probability of the given rule, evaluated
/// through the regularized incomplete beta function.  For the constant rules
/// it reduces to the corresponding single prior term.
double binomial_error(double p_a1, double p_a2, double alpha, std::int64_t n_particles,
                      const BinomialRule& rule);

/// binomial_error at the optimal threshold for these inputs.
double optimal_binomial_error(double p_a1, double p_a2, double alpha,
                              std::int64_t n_particles);

/// Expected absorbed count N [alpha p_a1 + (1-alpha) p_a2]; alpha may touch the
/// endpoints here since no likelihood is formed.
double mean_absorbed(double p_a1, double p_a2, double alpha, std::int64_t n_particles);

/// Smallest N whose optimal-threshold error stays <= target_pe for three
/// consecutive particle counts (the error is stepwise non-monotone where the
/// integer threshold jumps).  Requires 0 < target_pe < min(alpha, 1-alpha).
std::int64_t required_particles(double p_a1, double p_a2, double alpha, double target_pe);

/// Equal-likelihood line n_z - slope * n_o = intercept in the outcome triangle,
/// with an empirically determined orientation: sign(h1_side * (n_z - slope*n_o
/// - intercept)) > 0 decides H1.  The witness outcome used to fix the
/// orientation is retained for reporting.
struct TrinomialRule {
  double slope = 0.0;      // depends only on the channel probabilities
  double intercept = 0.0;  // shifts with alpha and N
  int h1_side = 1;         // +1 or -1
  std::int64_t witness_n_z = 0;
  std::int64_t witness_n_o = 0;
  int witness_decision = 0;  // 0 -> H1, 1 -> H2
  double alpha = 0.5;        // prior of H1, used only to break exact ties

  /// 0 -> H1, 1 -> H2.  Outcomes exactly on the line go to the hypothesis
  /// with the larger prior (H1 when equal).
  int decide(std::int64_t n_z, std::int64_t n_o) const;
};

/// Decision line for the two-channel protocol.  All six probabilities must be
/// strictly inside (0, 1); a vanishing slope denominator is rejected as
/// degenerate geometry.
TrinomialRule trinomial_line(const ChannelProbabilities& probs1,
                             const ChannelProbabilities& probs2, double alpha,
                             std::int64_t n_particles);

/// Prior-weighted maximum-likelihood classifier over M >= 1 hypotheses with
/// trinomial outcome laws.  Levels with zero prior are never chosen; exact
/// log-likelihood ties resolve to the larger prior, then the lower index.
class Classifier {
 public:
  Classifier(std::vector<double> priors, std::vector<ChannelProbabilities> probs,
             std::int64_t n_particles);

  int classify(std::int64_t n_z, std::int64_t n_o) const;
  double log_likelihood(int level, std::int64_t n_z, std::int64_t n_o) const;

  std::int64_t particles() const { return n_particles_; }
  int level_count() const { return static_cast<int>(priors_.size()); }
  const std::vector<double>& priors() const { return priors_; }
  const std::vector<ChannelProbabilities>& channel_probabilities() const { return probs_; }

 private:
  std::vector<double> priors_;
  std::vector<ChannelProbabilities> probs_;
  std::vector<double> log_prior_, log_pz_, log_po_, log_pa_;
  std::int64_t n_particles_;
};

/// Spec-level entry point: gray level index for the outcome (n_z, n_o) under
/// the model's priors and the per-level channel probabilities.
int classify(std::int64_t n_z, std::int64_t n_o, const GrayModel& model,
             std::span<const ChannelProbabilities> channel_probs,
             std::int64_t n_particles);

/// Decision data for one adjacent pair of gray levels, as used in rule reports.
struct PairRule {
  int lower_level = 0;  // index of the pair's smaller-tau hypothesis
  int h1_level = 0;     // which of the two absorbs less (is H1 of the binomial rule)
  double pair_alpha = 0.5;  // prior of H1 renormalized within the pair
  std::optional<BinomialRule> binomial;    // absent when the pair is degenerate
  std::optional<TrinomialRule> trinomial;  // absent when any channel probability is 0
};

/// Rules for every adjacent pair of a validated model under the given
/// per-level channel probabilities.
std::vector<PairRule> adjacent_pair_rules(const GrayModel& model,
                                          std::span<const ChannelProbabilities> channel_probs,
                                          std::int64_t n_particles);

}  // namespace zenotomo

#endif  // ZENOTOMO_DECISION_HPP

/*************************************************************************************
 * Looped Mach-Zehnder interferometer dynamics for a semitransparent sample
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

#include "interferometer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace zenotomo {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Tiny negative absorption probabilities appear from rounding when tau is at
// or just below 1 and L is large; anything beyond this guard indicates a real
// inconsistency in the matrix power, not floating-point noise.
constexpr double kProbabilityDriftGuard = 1e-10;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

void validate(const ApparatusConfig& cfg) {
  if (cfg.loops < 1) {
    throw std::invalid_argument("loop count must be >= 1, got " + std::to_string(cfg.loops));
  }
  if (!(cfg.tau >= 0.0) || !(cfg.tau <= 1.0)) {
    throw std::invalid_argument("transmission amplitude must be in [0, 1], got " +
                                format_double(cfg.tau));
  }
}

TransferMatrix TransferMatrix::pow(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("matrix power requires a non-negative exponent");
  TransferMatrix result = identity();
  TransferMatrix base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

double mirror_angle(std::int64_t loops) {
  if (loops < 1) {
    throw std::invalid_argument("loop count must be >= 1, got " + std::to_string(loops));
  }
  return kPi / (4.0 * static_cast<double>(loops));
}

TransferMatrix beam_splitter(std::int64_t loops) {
  const double theta = mirror_angle(loops);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

TransferMatrix absorber(double tau) {
  if (!(tau >= 0.0) || !(tau <= 1.0)) {
    throw std::invalid_argument("transmission amplitude must be in [0, 1], got " +
                                format_double(tau));
  }
  return {1.0, 0.0, 0.0, tau};
}

TransferMatrix loop_matrix(const ApparatusConfig& cfg) {
  validate(cfg);
  const double theta = mirror_angle(cfg.loops);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double t = cfg.tau;
  return {(1.0 + t) * c * c - t, -s * c * (1.0 + t),
          s * c * (1.0 + t), t - (1.0 + t) * s * s};
}

Amplitudes evolve(const ApparatusConfig& cfg) {
  const TransferMatrix w = loop_matrix(cfg).pow(cfg.loops);
  return {w.m11, w.m21};
}

ChannelProbabilities zeno_probabilities(const ApparatusConfig& cfg) {
  const Amplitudes u = evolve(cfg);
  double p_z = u.zeno * u.zeno;
  double p_o = u.orthogonal * u.orthogonal;
  double p_a = 1.0 - p_z - p_o;
  if (p_a < 0.0) {
    if (p_a < -kProbabilityDriftGuard) {
      throw std::runtime_error("internal consistency failure: channel probabilities sum to " +
                               format_double(p_z + p_o) + " > 1 at tau=" + format_double(cfg.tau) +
                               ", L=" + std::to_string(cfg.loops));
    }
    const double sum = p_z + p_o;
    p_z /= sum;
    p_o /= sum;
    p_a = 0.0;
  }
  return {p_z, p_o, p_a};
}

ChannelProbabilities zeno_probabilities_asymptotic(const ApparatusConfig& cfg) {
  validate(cfg);
  if (cfg.tau >= 1.0) {
    throw std::invalid_argument("asymptotic form is undefined at tau = 1; use the exact path");
  }
  const double threshold = zeno_threshold(cfg.loops);
  if (!(cfg.tau < threshold)) {
    throw RegimeError("tau=" + format_double(cfg.tau) + " is outside the Zeno regime at L=" +
                      std::to_string(cfg.loops) + ": requires tau < " + format_double(threshold));
  }
  double p_a = kPi * kPi / (4.0 * static_cast<double>(cfg.loops)) *
               (1.0 + cfg.tau) / (1.0 - cfg.tau);
  if (p_a > 1.0) p_a = 1.0;
  if (p_a < 0.0) p_a = 0.0;
  return {1.0 - p_a, 0.0, p_a};
}

double zeno_threshold(std::int64_t loops) {
  if (loops < 1) {
    throw std::invalid_argument("loop count must be >= 1, got " + std::to_string(loops));
  }
  const double s = std::sin(kPi / (2.0 * static_cast<double>(loops)));
  return (1.0 - s) / (1.0 + s);
}

double zeno_min_loops(double tau) {
  if (!(tau >= 0.0) || !(tau < 1.0)) {
    throw std::invalid_argument("zeno_min_loops requires 0 <= tau < 1, got " +
                                format_double(tau));
  }
  return kPi / (2.0 * std::asin((1.0 - tau) / (1.0 + tau)));
}

std::pair<double, double> standard_probabilities(double tau) {
  if (!(tau >= 0.0) || !(tau <= 1.0)) {
    throw std::invalid_argument("transmission amplitude must be in [0, 1], got " +
                                format_double(tau));
  }
  const double p_detect = tau * tau;
  return {p_detect, 1.0 - p_detect};
}

double effective_transmission(const ApparatusConfig& cfg) {
  return std::sqrt(1.0 - zeno_probabilities(cfg).absorbed);
}

}  // namespace zenotomo

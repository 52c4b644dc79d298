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

#ifndef ZENOTOMO_INTERFEROMETER_HPP
#define ZENOTOMO_INTERFEROMETER_HPP

#include <cstdint>
#include <utility>

namespace zenotomo {

/// Number of passes L through the apparatus and transmission amplitude tau of
/// the object placed in its lower arm.  tau = 1 is a fully transparent
/// ("white") pixel, tau = 0 a fully opaque ("black") one.
struct ApparatusConfig {
  std::int64_t loops = 1;
  double tau = 1.0;
};

/// Throws std::invalid_argument unless loops >= 1 and 0 <= tau <= 1.
void validate(const ApparatusConfig& cfg);

/// Real 2x2 matrix acting on the (zeno, orthogonal) channel amplitudes.
struct TransferMatrix {
  double m11 = 1.0, m12 = 0.0;
  double m21 = 0.0, m22 = 1.0;

  static TransferMatrix identity() { return {}; }

  friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }

  /// Matrix power by repeated squaring; n >= 0.
  TransferMatrix pow(std::int64_t n) const;

  double trace() const { return m11 + m22; }
  double determinant() const { return m11 * m22 - m12 * m21; }
};

/// Mirror rotation angle theta_L = pi / (4 L).
double mirror_angle(std::int64_t loops);

/// Semi-transparent mirror: rotation by theta_L, entries ((c, -s), (s, c)).
TransferMatrix beam_splitter(std::int64_t loops);

/// Sample interaction: diag(1, tau).  Not unitary for tau < 1.
TransferMatrix absorber(double tau);

/// One full loop, B * A_tau * B, written in closed form.
TransferMatrix loop_matrix(const ApparatusConfig& cfg);

/// Channel amplitudes after L loops (first column of loop_matrix^L).
/// Both amplitudes are real; their signs are meaningful only relative to the
/// initial state and are exposed for testing, not for physics consumers.
struct Amplitudes {
  double zeno = 0.0;
  double orthogonal = 0.0;
};
Amplitudes evolve(const ApparatusConfig& cfg);

/// Per-particle trinomial outcome law: detected in the zeno channel, detected
/// in the orthogonal channel, or absorbed by the sample.
struct ChannelProbabilities {
  double zeno = 0.0;
  double orthogonal = 0.0;
  double absorbed = 0.0;
};

/// Exact channel probabilities from the L-th matrix power.
ChannelProbabilities zeno_probabilities(const ApparatusConfig& cfg);

/// Large-L closed form, valid strictly below the Zeno threshold:
///   p_a = (pi^2 / 4L) (1+tau)/(1-tau),  p_z = 1 - p_a,  p_o = 0,
/// with order 1/L^2 neglected and results clamped to [0, 1].
/// Throws RegimeError (naming the threshold) when tau >= zeno_threshold(loops),
/// and std::invalid_argument for tau = 1.
ChannelProbabilities zeno_probabilities_asymptotic(const ApparatusConfig& cfg);

/// Zeno threshold tau_L^Z = (1 - sin(pi/2L)) / (1 + sin(pi/2L)).  The
/// apparatus operates in the Zeno regime for tau < tau_L^Z.
double zeno_threshold(std::int64_t loops);

/// Dual form: the (real-valued) loop count L_tau^Z = pi / (2 asin[(1-tau)/(1+tau)])
/// above which a given tau < 1 is inside the Zeno regime.
double zeno_min_loops(double tau);

/// One-pass transmission experiment: (p_detect, p_absorb) = (tau^2, 1 - tau^2).
std::pair<double, double> standard_probabilities(double tau);

/// tau_eff = sqrt(1 - p_a) with the exact absorption probability.  Recasts the
/// looped apparatus as a one-pass experiment with this transmission amplitude.
double effective_transmission(const ApparatusConfig& cfg);

}  // namespace zenotomo

#endif  // ZENOTOMO_INTERFEROMETER_HPP

/*************************************************************************************
 * Cramer-Rao lower bounds for estimating the transmission coefficient T = tau^2
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

#ifndef ZENOTOMO_ESTIMATION_HPP
#define ZENOTOMO_ESTIMATION_HPP

#include <cstdint>

namespace zenotomo {

/// Variance bound tau^2 (1 - tau^2) / N for the one-pass experiment.
/// Requires 0 < tau < 1 (the Fisher information is singular at the endpoints)
/// and N >= 1.
double crlb_standard(double tau, std::int64_t n_particles);

/// Variance bound 4 tau^2 (1-tau)^3 (1+tau) L / (pi^2 N) for the looped
/// apparatus, valid in the asymptotic regime L > zeno_min_loops(tau).
double crlb_zeno(double tau, std::int64_t n_particles, std::int64_t loops);

/// Standard-deviation bound tau (1 - tau^2) / sqrt(N_a) common to both setups
/// once expressed per absorbed particle.  Requires n_absorbed > 0.
double crlb_per_absorbed(double tau, double n_absorbed);

/// Bundle of the bounds above plus the expected absorbed counts used to
/// translate between them.  The per-absorbed bound is evaluated at the
/// standard setup's absorbed count; by construction it equals the Zeno one.
struct CrlbReport {
  double variance_bound_standard = 0.0;
  double variance_bound_zeno = 0.0;
  double bound_per_absorbed = 0.0;
  double n_absorbed_standard = 0.0;
  double n_absorbed_zeno = 0.0;
};
CrlbReport crlb_report(double tau, std::int64_t n_particles, std::int64_t loops);

}  // namespace zenotomo

#endif  // ZENOTOMO_ESTIMATION_HPP

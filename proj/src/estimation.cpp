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

#include "estimation.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "interferometer.hpp"

namespace zenotomo {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_open_interval(double tau) {
  if (!(tau > 0.0) || !(tau < 1.0)) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", tau);
    throw std::invalid_argument(std::string("bound degenerates at tau = ") + buf +
                                "; requires 0 < tau < 1");
  }
}

}  // namespace

double crlb_standard(double tau, std::int64_t n_particles) {
  check_open_interval(tau);
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");
  const double t2 = tau * tau;
  return t2 * (1.0 - t2) / static_cast<double>(n_particles);
}

double crlb_zeno(double tau, std::int64_t n_particles, std::int64_t loops) {
  check_open_interval(tau);
  if (n_particles < 1) throw std::invalid_argument("particle count must be >= 1");
  if (loops < 1) throw std::invalid_argument("loop count must be >= 1");
  const double min_loops = zeno_min_loops(tau);
  if (!(static_cast<double>(loops) > min_loops)) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", min_loops);
    throw RegimeError("L=" + std::to_string(loops) + " is below the Zeno regime for tau=" +
                      std::to_string(tau) + ": requires L > " + buf);
  }
  const double one_minus = 1.0 - tau;
  return 4.0 * tau * tau * one_minus * one_minus * one_minus * (1.0 + tau) *
         static_cast<double>(loops) / (kPi * kPi * static_cast<double>(n_particles));
}

double crlb_per_absorbed(double tau, double n_absorbed) {
  check_open_interval(tau);
  if (!(n_absorbed > 0.0)) throw std::invalid_argument("absorbed count must be > 0");
  return tau * (1.0 - tau * tau) / std::sqrt(n_absorbed);
}

CrlbReport crlb_report(double tau, std::int64_t n_particles, std::int64_t loops) {
  CrlbReport report;
  report.variance_bound_standard = crlb_standard(tau, n_particles);
  report.variance_bound_zeno = crlb_zeno(tau, n_particles, loops);
  const double n = static_cast<double>(n_particles);
  report.n_absorbed_standard = n * standard_probabilities(tau).second;
  report.n_absorbed_zeno = n * zeno_probabilities({loops, tau}).absorbed;
  report.bound_per_absorbed = crlb_per_absorbed(tau, report.n_absorbed_standard);
  return report;
}

}  // namespace zenotomo

/*************************************************************************************
 * Regularized incomplete beta function and binomial distribution helpers
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

#ifndef ZENOTOMO_BETAINC_HPP
#define ZENOTOMO_BETAINC_HPP

#include <cstdint>

namespace zenotomo {

/// log Beta(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Regularized incomplete beta function B_I(a, b; x) = I_x(a, b), a, b > 0,
/// 0 <= x <= 1.  Continued-fraction evaluation with the usual symmetry
/// reduction; absolute accuracy around 1e-13 or better.
double reg_inc_beta(double a, double b, double x);

/// log C(n, k) through log-gamma, safe for n well beyond 10^3.
double log_binomial_coefficient(std::int64_t n, std::int64_t k);

/// log P(X = k) for X ~ Binomial(n, p).  p = 0 and p = 1 handled exactly.
double log_binomial_pmf(std::int64_t k, std::int64_t n, double p);

/// P(X <= k) for X ~ Binomial(n, p), via B_I(n-k, k+1; 1-p).
double binomial_cdf(std::int64_t k, std::int64_t n, double p);

}  // namespace zenotomo

#endif  // ZENOTOMO_BETAINC_HPP

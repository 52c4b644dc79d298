/*************************************************************************************
 * Error types shared across the library
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

#ifndef ZENOTOMO_ERRORS_HPP
#define ZENOTOMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zenotomo {

/// A parameter is outside the regime in which the requested formula is valid
/// (e.g. asymptotic expansion requested above the Zeno threshold).
class RegimeError : public std::domain_error {
 public:
  explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

/// The inputs make the requested decision geometry degenerate
/// (indistinguishable hypotheses, zero slope denominator, ...).
class DegenerateError : public std::invalid_argument {
 public:
  explicit DegenerateError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numeric target cannot be met for the given inputs.
class UnreachableTargetError : public std::runtime_error {
 public:
  explicit UnreachableTargetError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem-level I/O failure.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zenotomo

#endif  // ZENOTOMO_ERRORS_HPP

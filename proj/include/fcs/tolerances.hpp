// Copyright 2026 fcstool authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FCS_TOLERANCES_HPP
#define FCS_TOLERANCES_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fcs {

/// Numerical thresholds used across the library. All entries can be
/// overridden per call; `Tolerances{}` gives the documented defaults.
struct Tolerances {
  double eps_alg = 1e-10;   ///< algebraic identities (products, adjoints, unitality)
  double eps_psd = 1e-10;   ///< positive-semidefiniteness / trace normalization
  double eps_per = 1e-8;    ///< peripheral eigenvalue detection, |1-|lambda||
  double eps_eq = 1e-8;     ///< state-equality threshold on word values
  double eps_wt = 1e-12;    ///< weight below which ergodic components are dropped
  double span_tol = 1e-10;  ///< residual threshold when growing linear spans
  double cf_tol = 1e-9;     ///< commensurability: residual |g_i - n_i g|
  double cf_theta = 1e-3;   ///< commensurability: believability bound err*q^2
  long long q_max = 1000000;///< commensurability: largest trusted denominator
  double pure_entropy_tol = 1e-9; ///< mean-entropy estimate treated as zero
};

/// Process-wide defaults. FCSTOOL_TOL (a double) overrides the base
/// algebraic/psd tolerance; model files may override further.
inline Tolerances default_tolerances() {
  Tolerances t;
  if (const char* env = std::getenv("FCSTOOL_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end && end != env && v > 0.0 && v < 1.0) {
      t.eps_alg = v;
      t.eps_psd = v;
    }
  }
  return t;
}

/// Error with a stable machine-readable code ("choi_not_psd", ...) next to
/// the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Raised when two routes that must agree (e.g. Theorem-style equivalent
/// conditions) disagree numerically. Signals tolerance breakdown, never
/// silently resolved.
class InternalConsistencyError : public Error {
 public:
  InternalConsistencyError(const std::string& message)
      : Error("internal_consistency", message) {}
};

}  // namespace fcs

#endif  // FCS_TOLERANCES_HPP

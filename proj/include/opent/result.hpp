// Copyright 2026 The opent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPENT_RESULT_HPP
#define OPENT_RESULT_HPP

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "opent/errors.hpp"

namespace opent {

/// Every inequality or identity the verifier knows how to check.
enum class TheoremId {
  mean_integral,
  compression_jensen,
  entropy_lower,
  entropy_nonneg,
  entropy_upper,
  klein_upper,
  info_ineq,
  subadditive,
  homogeneous,
  joint_concave,
  map_monotone,
  rev_jensen_gamma,
  rev_entropy_gamma,
  rev_jensen_zeta,
  rev_entropy_zeta,
  example_log_pair,
};

inline constexpr std::size_t kTheoremCount = 16;

inline constexpr std::array<TheoremId, kTheoremCount> kAllTheorems = {
    TheoremId::mean_integral,    TheoremId::compression_jensen, TheoremId::entropy_lower,
    TheoremId::entropy_nonneg,   TheoremId::entropy_upper,      TheoremId::klein_upper,
    TheoremId::info_ineq,        TheoremId::subadditive,        TheoremId::homogeneous,
    TheoremId::joint_concave,    TheoremId::map_monotone,       TheoremId::rev_jensen_gamma,
    TheoremId::rev_entropy_gamma, TheoremId::rev_jensen_zeta,   TheoremId::rev_entropy_zeta,
    TheoremId::example_log_pair,
};

inline constexpr std::array<std::string_view, kTheoremCount> kTheoremNames = {
    "mean_integral",    "compression_jensen", "entropy_lower",   "entropy_nonneg",
    "entropy_upper",    "klein_upper",        "info_ineq",       "subadditive",
    "homogeneous",      "joint_concave",      "map_monotone",    "rev_jensen_gamma",
    "rev_entropy_gamma", "rev_jensen_zeta",   "rev_entropy_zeta", "example_log_pair",
};

constexpr std::size_t index_of(TheoremId id) noexcept { return static_cast<std::size_t>(id); }

constexpr std::string_view to_string(TheoremId id) noexcept { return kTheoremNames[index_of(id)]; }

/// Accepts the lower-case names above, case-insensitively.
inline TheoremId parse_theorem(std::string_view name) {
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (std::size_t i = 0; i < kTheoremCount; ++i)
    if (kTheoremNames[i] == lower) return kAllTheorems[i];
  throw PreconditionError("unknown theorem '" + std::string(name) + "'");
}

/// Classification of a tolerance failure after re-running at 1e-6.
enum class Triage { none, numerical, substantive };

constexpr std::string_view to_string(Triage t) noexcept {
  switch (t) {
    case Triage::none:
      return "none";
    case Triage::numerical:
      return "numerical";
    case Triage::substantive:
      return "substantive";
  }
  return "none";
}

/// Outcome of checking one inequality instance. When hypothesis_met is
/// false the instance is "not applicable": holds is false but the result
/// never counts as a failure.
struct VerificationResult {
  std::optional<TheoremId> theorem;
  std::string label;
  bool holds = false;
  /// lambda_min(rhs - lhs) for Loewner inequalities; scalar slack otherwise.
  double margin = 0.0;
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
  bool hypothesis_met = true;
  Triage triage = Triage::none;
  std::string detail;

  bool failed() const noexcept { return hypothesis_met && !holds; }
};

}  // namespace opent

#endif  // OPENT_RESULT_HPP

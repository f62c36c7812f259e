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

// Catalog of scalar functions f:(0,inf) -> R together with the metadata the
// inequality checkers need (nonnegativity range, operator monotonicity,
// operator concavity).

#ifndef OPENT_FUNCTIONS_HPP
#define OPENT_FUNCTIONS_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opent/errors.hpp"

namespace opent {

/// Number of uniformly spaced points (endpoints included) used by every
/// scalar scan over [m, M].
inline constexpr int kScanGridSize = 4096;

enum class FunctionKind { identity, constant, affine, power, log, neg_t_log_t, custom };

/// Closed interval [lo, hi]; hi may be +inf.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double a, double b) const noexcept { return lo <= a && b <= hi; }
};

struct FunctionFlags {
  std::optional<Interval> nonnegative_on;
  bool operator_monotone = false;
  bool operator_concave = false;
  bool strictly_concave = false;
};

/// Descriptor of a real function on (domain_low, inf).
class ScalarFunction {
 public:
  using Map = std::function<double(double)>;

  static ScalarFunction identity() {
    return ScalarFunction(FunctionKind::identity, "identity", [](double t) { return t; },
                          [](double) { return 1.0; },
                          {Interval{0.0}, true, true, false});
  }

  static ScalarFunction constant(double c) {
    if (!(c >= 0.0) || !std::isfinite(c))
      throw PreconditionError("const: value must be finite and >= 0");
    return ScalarFunction(FunctionKind::constant, "const:" + format_number(c),
                          [c](double) { return c; }, [](double) { return 0.0; },
                          {Interval{0.0}, true, true, false}, {c});
  }

  static ScalarFunction affine(double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
      throw PreconditionError("affine: coefficients must be finite and >= 0");
    return ScalarFunction(FunctionKind::affine,
                          "affine:" + format_number(a) + "," + format_number(b),
                          [a, b](double t) { return a + b * t; },
                          [b](double) { return b; }, {Interval{0.0}, true, true, false},
                          {a, b});
  }

  /// t^p for p in [0, 1]; outside that range the function is neither
  /// operator monotone nor operator concave and is refused.
  static ScalarFunction power(double p) {
    if (!(p >= 0.0 && p <= 1.0))
      throw PreconditionError("power: exponent must lie in [0, 1]");
    return ScalarFunction(FunctionKind::power, "power:" + format_number(p),
                          [p](double t) { return std::pow(t, p); },
                          [p](double t) { return p * std::pow(t, p - 1.0); },
                          {Interval{0.0}, true, true, p > 0.0 && p < 1.0}, {p});
  }

  static ScalarFunction log() {
    return ScalarFunction(FunctionKind::log, "log", [](double t) { return std::log(t); },
                          [](double t) { return 1.0 / t; },
                          {Interval{1.0}, true, true, true});
  }

  /// -t log t: operator concave on (0, inf) but not operator monotone.
  static ScalarFunction neg_t_log_t() {
    return ScalarFunction(FunctionKind::neg_t_log_t, "neg_t_log_t",
                          [](double t) { return -t * std::log(t); },
                          [](double t) { return -std::log(t) - 1.0; },
                          {Interval{0.0, 1.0}, false, true, true});
  }

  /// Caller-declared function. Flags are taken on trust here; checkers
  /// grid-verify nonnegativity and midpoint concavity before use.
  static ScalarFunction custom(std::string name, Map evaluate, std::optional<Map> derivative,
                               double domain_low, FunctionFlags flags) {
    if (!evaluate) throw PreconditionError("custom function needs an evaluator");
    if (!(domain_low >= 0.0)) throw PreconditionError("custom: domain_low must be >= 0");
    ScalarFunction f(FunctionKind::custom, std::move(name), std::move(evaluate),
                     derivative ? std::move(*derivative) : Map{}, flags);
    f.domain_low_ = domain_low;
    return f;
  }

  /// Parses "log" | "power:p" | "neg_t_log_t" | "affine:a,b" | "const:c" | "identity".
  static ScalarFunction parse(std::string_view spec) {
    auto head = spec.substr(0, spec.find(':'));
    auto tail = spec.find(':') == std::string_view::npos ? std::string_view{}
                                                         : spec.substr(spec.find(':') + 1);
    auto number = [&](std::string_view s) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw PreconditionError("bad number '" + std::string(s) + "' in function spec '" +
                                std::string(spec) + "'");
      return v;
    };
    if (spec == "identity") return identity();
    if (spec == "log") return log();
    if (spec == "neg_t_log_t") return neg_t_log_t();
    if (head == "power" && !tail.empty()) return power(number(tail));
    if (head == "const" && !tail.empty()) return constant(number(tail));
    if (head == "affine" && !tail.empty()) {
      auto comma = tail.find(',');
      if (comma == std::string_view::npos)
        throw PreconditionError("affine spec needs two coefficients: affine:a,b");
      return affine(number(tail.substr(0, comma)), number(tail.substr(comma + 1)));
    }
    throw PreconditionError("unknown function spec '" + std::string(spec) + "'");
  }

  FunctionKind kind() const noexcept { return kind_; }
  const std::string& spec() const noexcept { return spec_; }
  const FunctionFlags& flags() const noexcept { return flags_; }
  double domain_low() const noexcept { return domain_low_; }
  const std::vector<double>& parameters() const noexcept { return params_; }
  bool has_derivative() const noexcept { return static_cast<bool>(derivative_); }

  bool in_domain(double t) const noexcept { return t > domain_low_ && std::isfinite(t); }

  double evaluate(double t) const {
    if (!in_domain(t)) {
      std::ostringstream os;
      os.precision(17);
      os << spec_ << ": argument " << t << " outside domain (" << domain_low_ << ", inf)";
      throw DomainError(os.str());
    }
    return eval_(t);
  }

  double operator()(double t) const { return evaluate(t); }

  std::optional<double> derivative(double t) const {
    if (!derivative_) return std::nullopt;
    if (!in_domain(t)) throw DomainError(spec_ + ": derivative argument outside domain");
    return derivative_(t);
  }

 private:
  ScalarFunction(FunctionKind kind, std::string spec, Map eval, Map deriv, FunctionFlags flags,
                 std::vector<double> params = {})
      : kind_(kind),
        spec_(std::move(spec)),
        eval_(std::move(eval)),
        derivative_(std::move(deriv)),
        flags_(flags),
        params_(std::move(params)) {}

  static std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
  }

  FunctionKind kind_;
  std::string spec_;
  Map eval_;
  Map derivative_;
  FunctionFlags flags_;
  std::vector<double> params_;
  double domain_low_ = 0.0;
};

/// The 4096-point grid over [m, M] used by every scalar scan; the endpoints
/// are exact.
inline std::vector<double> scan_grid(double m, double M, int n = kScanGridSize) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  if (n == 1) {
    grid[0] = m;
    return grid;
  }
  const double h = (M - m) / (n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = m + h * i;
  grid.back() = M;
  return grid;
}

/// True iff f >= -1e-12 on the scan grid over [m, M].
inline bool check_nonnegative_on(const ScalarFunction& f, double m, double M) {
  if (!(m > 0.0 && m <= M)) throw PreconditionError("check_nonnegative_on: need 0 < m <= M");
  for (double t : scan_grid(m, M)) {
    if (!(f.evaluate(t) >= -1e-12)) return false;
  }
  return true;
}

/// True iff f(t) <= g(t) + slack on the scan grid over [m, M].
inline bool check_dominated_on(const ScalarFunction& f, const std::function<double(double)>& g,
                               double m, double M, double slack = 1e-12) {
  for (double t : scan_grid(m, M)) {
    if (!(f.evaluate(t) <= g(t) + slack)) return false;
  }
  return true;
}

/// Midpoint concavity f((a+b)/2) >= (f(a)+f(b))/2 - 1e-12 over all pairs of a
/// coarse subgrid of [m, M]. Necessary (not sufficient) for operator concavity.
inline bool check_midpoint_concave_on(const ScalarFunction& f, double m, double M,
                                      int points = 65) {
  const auto grid = scan_grid(m, M, points);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double a = grid[i], b = grid[j];
      const double mid = f.evaluate(0.5 * (a + b));
      const double chord = 0.5 * (f.evaluate(a) + f.evaluate(b));
      if (mid < chord - 1e-12 * std::max(1.0, std::abs(chord))) return false;
    }
  }
  return true;
}

/// Refuses a custom function whose declared flags fail the grid checks on
/// [m, M]. Catalog functions pass unconditionally.
inline void validate_declared_flags(const ScalarFunction& f, double m, double M) {
  if (f.kind() != FunctionKind::custom) return;
  const auto& fl = f.flags();
  if (fl.nonnegative_on && fl.nonnegative_on->contains(m, M) && !check_nonnegative_on(f, m, M))
    throw PreconditionError(f.spec() + ": declared nonnegative but negative on [m, M]");
  if ((fl.operator_concave || fl.strictly_concave) && !check_midpoint_concave_on(f, m, M))
    throw PreconditionError(f.spec() + ": declared concave but fails midpoint concavity");
}

}  // namespace opent

#endif  // OPENT_FUNCTIONS_HPP

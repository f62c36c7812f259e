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

// Mond-Pecaric secant data: chord coefficients (mu, nu) of f over [m, M]
// and the reverse constants
//
//   gamma = max_{m<=t<=M} f(t) / (mu t + nu)
//   zeta  = max_{m<=t<=M} f(t) - mu t - nu
//
// computed by grid bracketing plus golden-section refinement, with a
// derivative-based stationarity cross-check when f' is known.

#ifndef OPENT_BOUNDS_HPP
#define OPENT_BOUNDS_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opent/errors.hpp"
#include "opent/functions.hpp"

namespace opent {

struct SecantCoefficients {
  double mu = 0.0;
  double nu = 0.0;
};

struct ScalarMaximum {
  double value = 0.0;
  double argmax = 0.0;
};

struct SecantData {
  double m = 0.0;
  double M = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  /// Empty when gamma is undefined on [m, M] (see gamma_error).
  std::optional<double> gamma;
  std::optional<double> argmax_gamma;
  std::string gamma_error;
  double zeta = 0.0;
  double argmax_zeta = 0.0;
};

inline SecantCoefficients secant_coeffs(const ScalarFunction& f, double m, double M) {
  if (!(m > 0.0 && m < M)) throw PreconditionError("secant_coeffs: need 0 < m < M");
  const double fm = f.evaluate(m), fM = f.evaluate(M);
  return {(fM - fm) / (M - m), (M * fm - m * fM) / (M - m)};
}

namespace detail {

inline constexpr double kGoldenWidth = 1e-12;
inline constexpr double kStationarityTol = 1e-9;

// Golden-section maximization of phi on [lo, hi] down to width tol.
inline ScalarMaximum golden_section_max(const std::function<double(double)>& phi, double lo,
                                        double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = phi(c), fd = phi(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = phi(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = phi(d);
    }
  }
  const double t = 0.5 * (a + b);
  return {phi(t), t};
}

// Grid bracket on the 4096-point scan grid, then golden refinement of the
// best bracket. The result is never below the best grid value.
inline ScalarMaximum maximize_on(const std::function<double(double)>& phi, double m, double M) {
  const auto grid = scan_grid(m, M);
  std::size_t best = 0;
  double best_value = phi(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = phi(grid[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  ScalarMaximum out{best_value, grid[best]};
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[best + 1 == grid.size() ? best : best + 1];
  if (hi > lo) {
    const auto refined = golden_section_max(phi, lo, hi, kGoldenWidth * (M - m));
    if (refined.value > out.value) out = refined;
  }
  return out;
}

// Roots of g on [m, M] located by bisection on grid sign changes.
inline std::vector<double> grid_roots(const std::function<double(double)>& g, double m,
                                      double M) {
  const auto grid = scan_grid(m, M);
  std::vector<double> roots;
  double prev = g(grid[0]);
  if (prev == 0.0) roots.push_back(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = g(grid[i]);
    if (cur == 0.0) {
      roots.push_back(grid[i]);
    } else if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) {
      double a = grid[i - 1], b = grid[i], ga = prev;
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if ((gm < 0.0) == (ga < 0.0)) {
          a = mid;
          ga = gm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev = cur;
  }
  return roots;
}

// Compares the optimizer result with the best stationary point; they must
// agree to 1e-9 when both are interior. Returns the larger.
inline ScalarMaximum cross_check(const std::function<double(double)>& phi,
                                 const std::vector<double>& stationary, ScalarMaximum grid_best,
                                 const char* what) {
  ScalarMaximum best = grid_best;
  for (double t : stationary) {
    const double v = phi(t);
    if (v > best.value + kStationarityTol) {
      std::ostringstream os;
      os.precision(17);
      os << what << ": stationary point t=" << t << " beats grid optimum by "
         << v - grid_best.value;
      throw std::logic_error(os.str());
    }
    if (v > best.value) best = {v, t};
  }
  return best;
}

}  // namespace detail

/// gamma_f = max f(t) / (mu t + nu) over [m, M]. Requires f >= 0 and the
/// chord positive on the open interval. At an endpoint where f (and hence
/// the chord) vanishes, the ratio is its one-sided limit f'(t) / mu.
inline ScalarMaximum gamma_f_with_argmax(const ScalarFunction& f, double m, double M) {
  const auto [mu, nu] = secant_coeffs(f, m, M);
  const double fm = f.evaluate(m), fM = f.evaluate(M);
  // The chord interpolates f exactly at the endpoints.
  auto chord = [&, mu = mu, nu = nu](double t) {
    return t == m ? fm : t == M ? fM : mu * t + nu;
  };
  const auto grid = scan_grid(m, M);
  for (double t : grid) {
    const double c = chord(t);
    const bool endpoint = t == m || t == M;
    if (!(c > 0.0) && !(endpoint && c == 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "gamma_f undefined: chord mu t + nu = " << c << " <= 0 at t = " << t;
      throw DomainError(os.str());
    }
  }
  if (!check_nonnegative_on(f, m, M))
    throw PreconditionError("gamma_f: " + f.spec() + " is negative somewhere on [m, M]");
  auto endpoint_limit = [&, mu = mu](double t) {
    if (auto d = f.derivative(t)) return *d / mu;
    const double h = 1e-7 * (M - m) * (t == m ? 1.0 : -1.0);
    return (f.evaluate(t + h) - f.evaluate(t)) / (h * mu);
  };
  const std::function<double(double)> phi = [&](double t) {
    const double c = chord(t);
    return c == 0.0 ? endpoint_limit(t) : f.evaluate(t) / c;
  };
  auto best = detail::maximize_on(phi, m, M);
  if (f.has_derivative()) {
    // d/dt f/c = (f' c - f mu) / c^2
    const std::function<double(double)> g = [&, mu = mu, nu = nu](double t) {
      return *f.derivative(t) * (mu * t + nu) - f.evaluate(t) * mu;
    };
    best = detail::cross_check(phi, detail::grid_roots(g, m, M), best, "gamma_f");
  }
  return best;
}

inline double gamma_f(const ScalarFunction& f, double m, double M) {
  return gamma_f_with_argmax(f, m, M).value;
}

/// zeta_f = max f(t) - mu t - nu over [m, M].
inline ScalarMaximum zeta_f_with_argmax(const ScalarFunction& f, double m, double M) {
  const auto [mu, nu] = secant_coeffs(f, m, M);
  const std::function<double(double)> phi = [&](double t) { return f.evaluate(t) - mu * t - nu; };
  auto best = detail::maximize_on(phi, m, M);
  if (f.has_derivative()) {
    const std::function<double(double)> g = [&](double t) { return *f.derivative(t) - mu; };
    best = detail::cross_check(phi, detail::grid_roots(g, m, M), best, "zeta_f");
  }
  return best;
}

inline double zeta_f(const ScalarFunction& f, double m, double M) {
  return zeta_f_with_argmax(f, m, M).value;
}

inline SecantData secant_data(const ScalarFunction& f, double m, double M) {
  SecantData d;
  d.m = m;
  d.M = M;
  const auto c = secant_coeffs(f, m, M);
  d.mu = c.mu;
  d.nu = c.nu;
  try {
    const auto g = gamma_f_with_argmax(f, m, M);
    d.gamma = g.value;
    d.argmax_gamma = g.argmax;
  } catch (const Error& e) {
    d.gamma_error = e.what();
  }
  const auto z = zeta_f_with_argmax(f, m, M);
  d.zeta = z.value;
  d.argmax_zeta = z.argmax;
  return d;
}

namespace detail {
inline bool nearly_equal_args(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(a, b);
}
inline void require_positive_pair(double a, double b, const char* what) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw PreconditionError(std::string(what) + ": arguments must be positive");
}
}  // namespace detail

/// L(a, b) = (b - a) / (log b - log a), L(a, a) = a.
inline double logarithmic_mean(double a, double b) {
  detail::require_positive_pair(a, b, "logarithmic_mean");
  if (detail::nearly_equal_args(a, b)) return 0.5 * (a + b);
  return (b - a) / std::log1p((b - a) / a);
}

/// I(a, b) = (1/e) (b^b / a^a)^{1/(b-a)}, I(a, a) = a. Evaluated in log space.
inline double identric_mean(double a, double b) {
  detail::require_positive_pair(a, b, "identric_mean");
  if (detail::nearly_equal_args(a, b)) return 0.5 * (a + b);
  return std::exp((b * std::log(b) - a * std::log(a)) / (b - a) - 1.0);
}

struct ZetaClosedForms {
  /// zeta for log t: log[(1/e) (M^m / m^M)^{1/(M-m)} L(m, M)].
  double zeta_log = 0.0;
  /// zeta for -t log t: I(m, M) - L(1/m, 1/M)^{-1}.
  double zeta_neg_t_log_t = 0.0;
};

/// Closed forms of zeta for log t and -t log t, valid for 0 < m < 1 < M.
inline ZetaClosedForms zeta_closed_forms(double m, double M) {
  if (!(m > 0.0 && m < 1.0 && 1.0 < M))
    throw PreconditionError("zeta_closed_forms: need 0 < m < 1 < M");
  ZetaClosedForms z;
  z.zeta_log = -1.0 + (m * std::log(M) - M * std::log(m)) / (M - m) +
               std::log(logarithmic_mean(m, M));
  z.zeta_neg_t_log_t = identric_mean(m, M) - 1.0 / logarithmic_mean(1.0 / m, 1.0 / M);
  return z;
}

}  // namespace opent

#endif  // OPENT_BOUNDS_HPP

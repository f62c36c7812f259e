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

// Random instance generators that realize each inequality's hypotheses, the
// checker registry (one checker per TheoremId) and bulk campaigns.
//
// Every checker evaluates both sides of its inequality as written and
// reports margin = lambda_min(rhs - lhs), so margin >= 0 means the
// inequality holds exactly and small negative values are round-off.

#ifndef OPENT_VERIFY_HPP
#define OPENT_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "opent/bounds.hpp"
#include "opent/entropy.hpp"
#include "opent/errors.hpp"
#include "opent/functions.hpp"
#include "opent/maps.hpp"
#include "opent/matcore.hpp"
#include "opent/random.hpp"
#include "opent/result.hpp"

namespace opent {

/// Weighted compression family {(w_s, C_s)} with sum w_s C_s* C_s <= I.
struct Compressions {
  std::vector<double> weights;
  std::vector<CMatrix> matrices;
};

/// A generated (or loaded) inequality instance. Which members are populated
/// depends on the theorem:
///   field theorems            fa, fb (A and B fields)
///   subadditive               fa, fb, fc, fd = A, B, C, D in S(A+B | C+D)
///   joint_concave             fa, fb = (A1, B1); fc, fd = (A2, B2); alpha, 1 - alpha
///   map_monotone              fa, fb, map
///   compression lemmas        x, compressions
///   info_ineq                 prob_a, prob_b (fa, fb hold their diagonals)
struct Instance {
  TheoremId theorem = TheoremId::entropy_lower;
  std::uint64_t seed = 0;
  int dim = 0;
  int k = 0;
  bool diagonal = false;
  ScalarFunction f = ScalarFunction::log();
  /// q or p, depending on the theorem.
  double param = 0.0;
  double t0 = 1.0;
  double m = 1.0;
  double M = 1.0;
  double alpha = 1.0;
  std::optional<OperatorField> fa, fb, fc, fd;
  std::optional<PositiveLinearMap> map;
  std::optional<PositiveDefiniteMatrix> x;
  std::optional<Compressions> compressions;
  std::vector<double> prob_a, prob_b;
};

// ---------------------------------------------------------------------------
// Theorem metadata

enum class ParamRule { none, unit_interval, zero, any };

struct TheoremInfo {
  TheoremId id;
  /// Human-readable statement with its orientation.
  const char* statement;
  ParamRule param;
  /// Fixed function spec, or nullptr when the caller chooses f.
  const char* fixed_function;
  bool uses_function;
};

constexpr TheoremInfo theorem_info(TheoremId id) {
  switch (id) {
    case TheoremId::mean_integral:
      return {id, "sum w (A#_pB) <= (sum w A) #_p (sum w B)", ParamRule::unit_interval, nullptr,
              false};
    case TheoremId::compression_jensen:
      return {id, "sum w C*f(X)C + f(t0)(I - sum w C*C) <= f(sum w C*XC + t0(I - sum w C*C))",
              ParamRule::none, nullptr, true};
    case TheoremId::entropy_lower:
      return {id, "S_p^f(A|B) <= f[sum w A#_{p+1}B + t0(I - W)] - f(t0)(I - W)",
              ParamRule::unit_interval, nullptr, true};
    case TheoremId::entropy_nonneg:
      return {id, "0 <= S_q^f(A|B) for f >= 0", ParamRule::any, nullptr, true};
    case TheoremId::entropy_upper:
      return {id, "S_q^f(A|B) <= sum w (A#_{q+1}B - A#_qB) for f(t) <= t - 1", ParamRule::any,
              nullptr, true};
    case TheoremId::klein_upper:
      return {id, "S(A|B) <= B - A", ParamRule::zero, "log", true};
    case TheoremId::info_ineq:
      return {id, "0 <= sum a_j log(a_j / b_j)", ParamRule::none, nullptr, false};
    case TheoremId::subadditive:
      return {id, "S_0^f(A|C) + S_0^f(B|D) <= S_0^f(A+B | C+D)", ParamRule::zero, nullptr, true};
    case TheoremId::homogeneous:
      return {id, "S_q^f(aA|aB) = a S_q^f(A|B)", ParamRule::any, nullptr, true};
    case TheoremId::joint_concave:
      return {id, "a S_0^f(A1|B1) + b S_0^f(A2|B2) <= S_0^f(aA1+bA2 | aB1+bB2)", ParamRule::zero,
              nullptr, true};
    case TheoremId::map_monotone:
      return {id, "Phi(S_0^f(A|B)) <= S_0^f(Phi(A)|Phi(B))", ParamRule::zero, nullptr, true};
    case TheoremId::rev_jensen_gamma:
      return {id,
              "f(sum w C*XC + t0(I - sum w C*C)) <= gamma [sum w C*f(X)C + f(t0)(I - sum w C*C)]",
              ParamRule::none, nullptr, true};
    case TheoremId::rev_entropy_gamma:
      return {id, "f[sum w A#_{p+1}B + t0(I - W)] - gamma f(t0)(I - W) <= gamma S_p^f(A|B)",
              ParamRule::unit_interval, nullptr, true};
    case TheoremId::rev_jensen_zeta:
      return {id,
              "f(sum w C*XC + t0(I - sum w C*C)) <= sum w C*f(X)C + f(t0)(I - sum w C*C) + zeta",
              ParamRule::none, nullptr, true};
    case TheoremId::rev_entropy_zeta:
      return {id, "f[sum w A#_{p+1}B + t0(I - W)] - f(t0)(I - W) <= S_p^f(A|B) + zeta",
              ParamRule::unit_interval, nullptr, true};
    case TheoremId::example_log_pair:
      return {id,
              "Z log Z - t0 log t0 (I - W) >= S_{p+1}(A|B) - zeta_{-tlogt} and "
              "log Z - log t0 (I - W) <= S_p(A|B) + zeta_log",
              ParamRule::unit_interval, "log", true};
  }
  return {id, "", ParamRule::none, nullptr, false};
}

enum class InstanceShape { fields_normalized, fields_free, single_pair, four_fields, map_fields,
                           compression, probability };

constexpr InstanceShape instance_shape(TheoremId id) {
  switch (id) {
    case TheoremId::mean_integral:
      return InstanceShape::fields_free;
    case TheoremId::compression_jensen:
    case TheoremId::rev_jensen_gamma:
    case TheoremId::rev_jensen_zeta:
      return InstanceShape::compression;
    case TheoremId::entropy_lower:
    case TheoremId::entropy_nonneg:
    case TheoremId::entropy_upper:
    case TheoremId::homogeneous:
    case TheoremId::rev_entropy_gamma:
    case TheoremId::rev_entropy_zeta:
    case TheoremId::example_log_pair:
      return InstanceShape::fields_normalized;
    case TheoremId::klein_upper:
      return InstanceShape::single_pair;
    case TheoremId::info_ineq:
      return InstanceShape::probability;
    case TheoremId::subadditive:
    case TheoremId::joint_concave:
      return InstanceShape::four_fields;
    case TheoremId::map_monotone:
      return InstanceShape::map_fields;
  }
  return InstanceShape::fields_free;
}

// ---------------------------------------------------------------------------
// Generators

inline constexpr int kMaxResampleTries = 100;
/// Strict straddle required of measured (m, M): m <= 1 - gap and M >= 1 + gap.
inline constexpr double kStraddleGap = 1e-6;

namespace detail {

/// Rebuilds a PD matrix from its entries. scaled() reuses eigenvectors, which
/// a JSON reload would not; canonical copies make instances reload bit-exact.
inline PositiveDefiniteMatrix canonical(const PositiveDefiniteMatrix& a) {
  return PositiveDefiniteMatrix(HermitianMatrix(a.matrix()));
}

inline PositiveDefiniteMatrix generator_pd(Rng& rng, int dim, bool diagonal) {
  return diagonal ? random_diagonal_pd(rng, dim) : random_pd(rng, dim);
}

inline std::vector<double> generator_weights(Rng& rng, int k, bool unit) {
  std::vector<double> w(static_cast<std::size_t>(k), 1.0);
  if (!unit)
    for (auto& x : w) x = rng.uniform(0.5, 1.5);
  return w;
}

// Matrices A_j = S^{-1/2} G_j S^{-1/2} / w_j with S = sum G_j, so that
// sum w_j A_j = I.
inline OperatorField resolution(Rng& rng, int dim, const std::vector<double>& weights,
                                bool diagonal) {
  const auto k = weights.size();
  if (k == 1) return OperatorField(weights, {PositiveDefiniteMatrix::identity(dim).scaled(1.0 / weights[0])});
  std::vector<PositiveDefiniteMatrix> gs;
  CMatrix s = CMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < k; ++j) {
    gs.push_back(generator_pd(rng, dim, diagonal));
    s += gs.back().matrix();
  }
  const auto inv_sqrt = half_powers(PositiveDefiniteMatrix(HermitianMatrix(s))).inv_sqrt;
  std::vector<PositiveDefiniteMatrix> out;
  for (std::size_t j = 0; j < k; ++j)
    out.emplace_back(HermitianMatrix(inv_sqrt.matrix() * gs[j].matrix() * inv_sqrt.matrix() /
                                     weights[j]));
  return OperatorField(weights, std::move(out));
}

inline OperatorField free_field(Rng& rng, int dim, const std::vector<double>& weights,
                                bool diagonal) {
  std::vector<PositiveDefiniteMatrix> out;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double scale = std::exp(rng.uniform(std::log(0.25), std::log(4.0)));
    out.push_back(canonical(generator_pd(rng, dim, diagonal).scaled(scale)));
  }
  return OperatorField(weights, std::move(out));
}

inline SandwichBounds field_bounds(const OperatorField& fa, const OperatorField& fb) {
  SandwichBounds out{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < fa.size(); ++i) {
    const auto b = sandwich_bounds(fa[i], fb[i]);
    out.m = std::min(out.m, b.m);
    out.M = std::max(out.M, b.M);
  }
  return out;
}

inline bool strictly_straddles(double m, double M) {
  return m <= 1.0 - kStraddleGap && M >= 1.0 + kStraddleGap;
}

inline Compressions random_compressions(Rng& rng, int dim, int k, bool unit_weights,
                                        bool diagonal) {
  Compressions c;
  c.weights = generator_weights(rng, k, unit_weights);
  CMatrix s = CMatrix::Zero(dim, dim);
  std::vector<CMatrix> gs;
  for (int i = 0; i < k; ++i) {
    CMatrix g;
    if (diagonal) {
      g = CMatrix::Zero(dim, dim);
      for (int j = 0; j < dim; ++j) g(j, j) = rng.uniform(0.1, 1.1) * (rng.bernoulli(0.5) ? 1 : -1);
    } else {
      g = random_ginibre(rng, dim, dim);
    }
    s += c.weights[static_cast<std::size_t>(i)] * (g.adjoint() * g);
    gs.push_back(std::move(g));
  }
  // Deficiency I - sum w C*C: zero (normalized family) for about a third of draws.
  if (!rng.bernoulli(1.0 / 3.0)) {
    const double u = rng.uniform(0.05, 1.0);
    s += u * (diagonal ? random_diagonal_pd(rng, dim) : random_pd(rng, dim)).matrix() *
         (s.trace().real() / dim);
  }
  const auto inv_sqrt = half_powers(PositiveDefiniteMatrix(HermitianMatrix(s))).inv_sqrt;
  for (auto& g : gs) c.matrices.push_back(g * inv_sqrt.matrix());
  return c;
}

inline PositiveLinearMap random_map(Rng& rng, int dim, bool diagonal) {
  if (!diagonal) {
    const int out = rng.uniform_int(std::max(1, dim - 1), dim);
    const int kraus = rng.uniform_int(1, 3);
    return PositiveLinearMap::random_normalized(rng, dim, out, kraus);
  }
  const int kraus = rng.uniform_int(1, 3);
  std::vector<CMatrix> gs;
  RVector s = RVector::Zero(dim);
  for (int i = 0; i < kraus; ++i) {
    CMatrix g = CMatrix::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
      g(j, j) = rng.uniform(0.1, 1.1);
      s(j) += std::norm(g(j, j));
    }
    gs.push_back(std::move(g));
  }
  for (auto& g : gs)
    for (int j = 0; j < dim; ++j) g(j, j) /= std::sqrt(s(j));
  return PositiveLinearMap(std::move(gs));
}

inline std::vector<double> random_probability(Rng& rng, int n) {
  std::vector<double> p(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : p) total += (x = rng.uniform(0.05, 1.0));
  for (auto& x : p) x /= total;
  return p;
}

inline OperatorField diagonal_field(const std::vector<double>& d) {
  RVector v = Eigen::Map<const RVector>(d.data(), static_cast<Eigen::Index>(d.size()));
  return OperatorField::unit_weights(
      {PositiveDefiniteMatrix::from_spectrum(v, CMatrix::Identity(v.size(), v.size()))});
}

inline void require_param(TheoremId id, double param) {
  const auto rule = theorem_info(id).param;
  if (rule == ParamRule::unit_interval && !(param >= 0.0 && param <= 1.0))
    throw PreconditionError(std::string(to_string(id)) + ": p must lie in [0, 1]");
  if (!std::isfinite(param)) throw PreconditionError("parameter must be finite");
}

}  // namespace detail

/// k unit-weight PD matrices summing to I. Deterministic in seed.
inline OperatorField random_resolution(int dim, int k, std::uint64_t seed, bool diagonal = false) {
  if (dim < 1 || dim > kMaxDim) throw PreconditionError("random_resolution: dim out of range");
  if (k < 1) throw PreconditionError("random_resolution: k must be >= 1");
  Rng rng(seed);
  return detail::resolution(rng, dim, std::vector<double>(static_cast<std::size_t>(k), 1.0),
                            diagonal);
}

/// Random instance realizing the hypotheses of `theorem`. Fixed-function
/// theorems ignore `f`; q = 0 theorems ignore `param`.
inline Instance random_instance(TheoremId theorem, int dim, int k, std::uint64_t seed,
                                const ScalarFunction& f, double param, bool diagonal = false) {
  if (dim < 1 || dim > kMaxDim) throw PreconditionError("dim must lie in [1, 64]");
  if (k < 1) throw PreconditionError("k must be >= 1");
  const auto info = theorem_info(theorem);
  const auto shape = instance_shape(theorem);

  Instance inst;
  inst.theorem = theorem;
  inst.seed = seed;
  inst.dim = dim;
  inst.k = k;
  inst.diagonal = diagonal;
  inst.f = info.fixed_function ? ScalarFunction::parse(info.fixed_function) : f;
  inst.param = info.param == ParamRule::zero ? 0.0 : param;
  detail::require_param(theorem, inst.param);

  Rng rng(seed);
  const bool unit = rng.bernoulli(0.5);

  switch (shape) {
    case InstanceShape::fields_normalized: {
      for (int attempt = 0;; ++attempt) {
        if (attempt == kMaxResampleTries)
          throw GenerationError("could not draw fields with m < 1 < M in 100 tries");
        const auto w = detail::generator_weights(rng, k, unit);
        auto fa = detail::resolution(rng, dim, w, diagonal);
        auto fb = detail::resolution(rng, dim, w, diagonal);
        const auto b = detail::field_bounds(fa, fb);
        if (!detail::strictly_straddles(b.m, b.M)) continue;
        inst.fa = std::move(fa);
        inst.fb = std::move(fb);
        inst.m = b.m;
        inst.M = b.M;
        break;
      }
      if (theorem == TheoremId::homogeneous) inst.alpha = rng.bernoulli(0.5) ? 0.5 : 2.0;
      break;
    }
    case InstanceShape::fields_free:
    case InstanceShape::map_fields: {
      const auto w = detail::generator_weights(rng, k, unit);
      inst.fa = detail::free_field(rng, dim, w, diagonal);
      inst.fb = detail::free_field(rng, dim, w, diagonal);
      const auto b = detail::field_bounds(*inst.fa, *inst.fb);
      inst.m = b.m;
      inst.M = b.M;
      if (shape == InstanceShape::map_fields) {
        for (int attempt = 0;; ++attempt) {
          if (attempt == kMaxResampleTries)
            throw GenerationError("could not draw a map with invertible images in 100 tries");
          auto p = detail::random_map(rng, dim, diagonal);
          try {
            (void)apply_map(p, *inst.fa);
            (void)apply_map(p, *inst.fb);
          } catch (const DomainError&) {
            continue;
          }
          inst.map = std::move(p);
          break;
        }
      }
      break;
    }
    case InstanceShape::single_pair: {
      inst.k = 1;
      auto a = detail::generator_pd(rng, dim, diagonal);
      auto b = rng.bernoulli(0.1) ? a : detail::generator_pd(rng, dim, diagonal);
      const auto bounds = sandwich_bounds(a, b);
      inst.m = bounds.m;
      inst.M = bounds.M;
      inst.fa = OperatorField::unit_weights({std::move(a)});
      inst.fb = OperatorField::unit_weights({std::move(b)});
      break;
    }
    case InstanceShape::four_fields: {
      const auto w = detail::generator_weights(rng, k, unit);
      inst.fa = detail::free_field(rng, dim, w, diagonal);
      inst.fb = detail::free_field(rng, dim, w, diagonal);
      inst.fc = detail::free_field(rng, dim, w, diagonal);
      inst.fd = detail::free_field(rng, dim, w, diagonal);
      const auto b = detail::field_bounds(*inst.fa, *inst.fb);
      inst.m = b.m;
      inst.M = b.M;
      if (theorem == TheoremId::joint_concave) inst.alpha = rng.uniform(0.05, 0.95);
      break;
    }
    case InstanceShape::compression: {
      if (dim < 2) throw PreconditionError("compression lemmas need dim >= 2 so that m < M");
      // X rescaled so lambda_min lambda_max = 1, which places 1 strictly inside [m, M].
      for (int attempt = 0;; ++attempt) {
        if (attempt == kMaxResampleTries)
          throw GenerationError("could not draw X with m < 1 < M in 100 tries");
        const auto x0 = detail::generator_pd(rng, dim, diagonal);
        auto x = detail::canonical(x0.scaled(1.0 / std::sqrt(x0.lambda_min() * x0.lambda_max())));
        if (!detail::strictly_straddles(x.lambda_min(), x.lambda_max())) continue;
        inst.m = x.lambda_min();
        inst.M = x.lambda_max();
        inst.x = std::move(x);
        break;
      }
      inst.compressions = detail::random_compressions(rng, dim, k, unit, diagonal);
      break;
    }
    case InstanceShape::probability: {
      inst.k = 1;
      inst.prob_a = detail::random_probability(rng, dim);
      inst.prob_b = rng.bernoulli(0.25) ? inst.prob_a : detail::random_probability(rng, dim);
      inst.fa = detail::diagonal_field(inst.prob_a);
      inst.fb = detail::diagonal_field(inst.prob_b);
      inst.m = inst.M = 1.0;
      for (std::size_t j = 0; j < inst.prob_a.size(); ++j) {
        inst.m = std::min(inst.m, inst.prob_b[j] / inst.prob_a[j]);
        inst.M = std::max(inst.M, inst.prob_b[j] / inst.prob_a[j]);
      }
      break;
    }
  }
  inst.t0 = rng.uniform(inst.m, inst.M);
  return inst;
}

// ---------------------------------------------------------------------------
// Checkers

namespace checkers {

inline VerificationResult not_applicable(std::string why) {
  VerificationResult r;
  r.hypothesis_met = false;
  r.detail = std::move(why);
  return r;
}

inline const OperatorField& need(const std::optional<OperatorField>& f, const char* name) {
  if (!f) throw ShapeError(std::string("instance lacks field ") + name);
  return *f;
}

inline HermitianMatrix identity_minus(const HermitianMatrix& w) {
  return HermitianMatrix(CMatrix::Identity(w.dim(), w.dim()) - w.matrix());
}

inline HermitianMatrix plus_identity(const HermitianMatrix& a, double c) {
  return HermitianMatrix(a.matrix() + c * CMatrix::Identity(a.dim(), a.dim()));
}

// Hypotheses shared by the normalized-field theorems: both fields sum to I,
// stored (m, M) sandwich every node pair, m < 1 < M and t0 in [m, M].
inline std::optional<std::string> normalized_field_hypotheses(const Instance& inst) {
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  if (!is_normalized(fa) || !is_normalized(fb)) return "fields do not sum to I";
  const auto b = detail::field_bounds(fa, fb);
  const double slack = 1e-12 * std::max(1.0, b.M);
  if (b.m < inst.m - slack || b.M > inst.M + slack)
    return "stored (m, M) does not sandwich the fields";
  if (!(inst.m > 0.0 && inst.m < 1.0 && 1.0 < inst.M)) return "m < 1 < M fails";
  if (!(inst.t0 >= inst.m && inst.t0 <= inst.M)) return "t0 outside [m, M]";
  return std::nullopt;
}

inline std::optional<std::string> compression_hypotheses(const Instance& inst) {
  if (!inst.x || !inst.compressions) throw ShapeError("instance lacks X or compressions");
  const auto& x = *inst.x;
  const double slack = 1e-12 * std::max(1.0, inst.M);
  if (!(inst.m > 0.0 && inst.m < inst.M)) return "need 0 < m < M";
  if (x.lambda_min() < inst.m - slack || x.lambda_max() > inst.M + slack)
    return "spectrum of X not inside [m, M]";
  if (!(inst.t0 >= inst.m && inst.t0 <= inst.M)) return "t0 outside [m, M]";
  const auto& c = *inst.compressions;
  const auto csum = detail::compression_sum(c.matrices, c.weights);
  if (!loewner_leq(csum, HermitianMatrix::identity(csum.dim()), 1e-10).holds)
    return "sum w C*C exceeds I";
  return std::nullopt;
}

inline std::optional<std::string> concave_hypothesis(const ScalarFunction& f) {
  if (!f.flags().operator_concave) return f.spec() + " is not operator concave";
  return std::nullopt;
}

// gamma needs f >= 0 and a positive chord on [m, M]; gamma_f reports which
// one fails.
inline std::optional<std::string> gamma_hypotheses(const ScalarFunction& f, double m, double M) {
  if (auto h = concave_hypothesis(f)) return h;
  try {
    (void)gamma_f(f, m, M);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

struct EntropyPieces {
  HermitianMatrix w;          // sum w A #_p B
  PositiveDefiniteMatrix z;   // sum w A #_{p+1} B + t0 (I - W)
  HermitianMatrix entropy;    // S_p^f aggregate
};

inline EntropyPieces entropy_pieces(const Instance& inst, const ScalarFunction& f, double p) {
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  auto w = power_mean_sum(fa, fb, p);
  const auto upper = power_mean_sum(fa, fb, p + 1.0);
  PositiveDefiniteMatrix z(HermitianMatrix(upper.matrix() + inst.t0 * identity_minus(w).matrix()));
  auto s = generalized_entropy(fa, fb, p, f);
  return {std::move(w), std::move(z), std::move(s)};
}

inline VerificationResult mean_integral(const Instance& inst, double tol) {
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  const double p = inst.param;
  if (!(p >= 0.0 && p <= 1.0)) return not_applicable("p outside [0, 1]");
  const PositiveDefiniteMatrix ia(field_integral(fa)), ib(field_integral(fb));
  return loewner_result("mean_integral", mean_field(fa, fb, p), natural_power(ia, ib, p), tol);
}

inline VerificationResult compression_jensen(const Instance& inst, double tol) {
  if (auto h = compression_hypotheses(inst)) return not_applicable(*h);
  if (auto h = concave_hypothesis(inst.f)) return not_applicable(*h);
  validate_declared_flags(inst.f, inst.m, inst.M);
  const auto& c = *inst.compressions;
  const auto arg = lifted_jensen_lhs(c.matrices, c.weights, *inst.x, inst.t0);
  return loewner_result("compression_jensen",
                        lifted_jensen_rhs(c.matrices, c.weights, *inst.x, inst.t0, inst.f),
                        apply_function(arg, inst.f), tol);
}

inline VerificationResult entropy_lower(const Instance& inst, double tol) {
  if (auto h = normalized_field_hypotheses(inst)) return not_applicable(*h);
  if (auto h = concave_hypothesis(inst.f)) return not_applicable(*h);
  if (!(inst.param >= 0.0 && inst.param <= 1.0)) return not_applicable("p outside [0, 1]");
  validate_declared_flags(inst.f, inst.m, inst.M);
  const auto e = entropy_pieces(inst, inst.f, inst.param);
  const auto rhs = HermitianMatrix(apply_function(e.z, inst.f).matrix() -
                                   inst.f(inst.t0) * identity_minus(e.w).matrix());
  return loewner_result("entropy_lower", e.entropy, rhs, tol);
}

inline VerificationResult entropy_nonneg(const Instance& inst, double tol) {
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  const auto b = detail::field_bounds(fa, fb);
  if (!check_nonnegative_on(inst.f, b.m, b.M))
    return not_applicable(inst.f.spec() + " is negative on the kernel spectra range");
  return loewner_result("entropy_nonneg", HermitianMatrix::zero(fa.dim()),
                        generalized_entropy(fa, fb, inst.param, inst.f), tol);
}

inline VerificationResult entropy_upper(const Instance& inst, double tol) {
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  const auto b = detail::field_bounds(fa, fb);
  if (!check_dominated_on(inst.f, [](double t) { return t - 1.0; }, b.m, b.M))
    return not_applicable("f(t) <= t - 1 fails on the kernel spectra range");
  const double q = inst.param;
  const auto s = generalized_entropy(fa, fb, q, inst.f);
  const auto rhs = power_mean_sum(fa, fb, q + 1.0) - power_mean_sum(fa, fb, q);
  auto r = loewner_result("entropy_upper", s, rhs, tol);
  // Closed-form specializations: q = 0 gives B - A, q = 1 gives B A^{-1} B - B.
  std::optional<HermitianMatrix> special;
  if (q == 0.0) special = field_integral(fb) - field_integral(fa);
  if (q == 1.0) {
    CMatrix sum = CMatrix::Zero(fa.dim(), fa.dim());
    for (std::size_t i = 0; i < fa.size(); ++i)
      sum += fa.weight(i) * (fb[i].matrix() * inverse(fa[i]).matrix() * fb[i].matrix() -
                             fb[i].matrix());
    special = HermitianMatrix(sum);
  }
  if (special) {
    const auto r2 = loewner_result("entropy_upper", s, *special, tol);
    r.detail = "closed-form specialization margin " + std::to_string(r2.margin);
    if (r2.margin < r.margin) {
      r.margin = r2.margin;
      r.holds = r2.holds;
    }
  }
  return r;
}

inline VerificationResult klein_upper(const Instance& inst, double tol) {
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  const auto log = ScalarFunction::log();
  return loewner_result("klein_upper", generalized_entropy(fa, fb, 0.0, log),
                        field_integral(fb) - field_integral(fa), tol);
}

/// sum a_j log(a_j / b_j) with 0 log 0 = 0.
inline double kl_divergence(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0.0) continue;
    if (b[j] == 0.0) return std::numeric_limits<double>::infinity();
    s += a[j] * std::log(a[j] / b[j]);
  }
  return s;
}

inline VerificationResult info_ineq(const Instance& inst, double tol) {
  const auto& a = inst.prob_a;
  const auto& b = inst.prob_b;
  if (a.empty() || a.size() != b.size()) throw ShapeError("info_ineq: probability vectors");
  double sa = 0.0, sb = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 0.0 || b[j] < 0.0) return not_applicable("negative probability");
    sa += a[j];
    sb += b[j];
  }
  const double slack = 1e-12 * static_cast<double>(a.size());
  if (std::abs(sa - 1.0) > slack || std::abs(sb - 1.0) > slack)
    return not_applicable("vectors do not sum to one");

  VerificationResult r;
  r.label = "info_ineq";
  const double value = kl_divergence(a, b);
  r.margin = value;
  r.lhs_norm = 0.0;
  r.rhs_norm = std::abs(value);
  r.holds = value >= -tol;
  std::ostringstream os;
  os.precision(17);
  if (a == b) {
    r.holds = r.holds && std::abs(value) <= 1e-12;
    os << "equality case a = b, value " << value;
  } else {
    os << (value > 0.0 ? "strict" : "non-strict") << " case, value " << value;
  }
  // Matrix route: <S(diag a | diag b) 1, 1> = -value.
  if (std::all_of(a.begin(), a.end(), [](double v) { return v > 0.0; }) &&
      std::all_of(b.begin(), b.end(), [](double v) { return v > 0.0; })) {
    const auto s = s_q_f(detail::diagonal_field(a)[0], detail::diagonal_field(b)[0], 0.0,
                         ScalarFunction::log());
    os << "; matrix route discrepancy " << std::abs(s.matrix().sum().real() + value);
  }
  r.detail = os.str();
  return r;
}

inline VerificationResult subadditive(const Instance& inst, double tol) {
  if (auto h = concave_hypothesis(inst.f)) return not_applicable(*h);
  const auto& a = need(inst.fa, "fa");
  const auto& b = need(inst.fb, "fb");
  const auto& c = need(inst.fc, "fc");
  const auto& d = need(inst.fd, "fd");
  const auto lhs = generalized_entropy(a, c, 0.0, inst.f) + generalized_entropy(b, d, 0.0, inst.f);
  const auto rhs = generalized_entropy(a + b, c + d, 0.0, inst.f);
  return loewner_result("subadditive", lhs, rhs, tol);
}

inline VerificationResult homogeneous(const Instance& inst, double tol) {
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  if (!(inst.alpha > 0.0)) return not_applicable("scaling factor must be positive");
  const auto lhs = generalized_entropy(fa.scaled(inst.alpha), fb.scaled(inst.alpha), inst.param,
                                       inst.f);
  const auto rhs = inst.alpha * generalized_entropy(fa, fb, inst.param, inst.f);
  VerificationResult r;
  r.label = "homogeneous";
  r.margin = -relative_frobenius_error(lhs.matrix(), rhs.matrix());
  r.lhs_norm = spectral_norm(lhs);
  r.rhs_norm = spectral_norm(rhs);
  r.holds = r.margin >= -tol;
  r.detail = "identity; margin is minus the relative Frobenius discrepancy";
  return r;
}

inline VerificationResult joint_concave(const Instance& inst, double tol) {
  if (auto h = concave_hypothesis(inst.f)) return not_applicable(*h);
  const double alpha = inst.alpha, beta = 1.0 - inst.alpha;
  if (!(alpha > 0.0 && beta > 0.0)) return not_applicable("need alpha, beta > 0");
  const auto& a1 = need(inst.fa, "fa");
  const auto& b1 = need(inst.fb, "fb");
  const auto& a2 = need(inst.fc, "fc");
  const auto& b2 = need(inst.fd, "fd");
  const auto lhs = HermitianMatrix(alpha * generalized_entropy(a1, b1, 0.0, inst.f).matrix() +
                                   beta * generalized_entropy(a2, b2, 0.0, inst.f).matrix());
  const auto rhs = generalized_entropy(OperatorField::combine(alpha, a1, beta, a2),
                                       OperatorField::combine(alpha, b1, beta, b2), 0.0, inst.f);
  return loewner_result("joint_concave", lhs, rhs, tol);
}

inline VerificationResult map_monotone(const Instance& inst, double tol) {
  if (auto h = concave_hypothesis(inst.f)) return not_applicable(*h);
  if (!inst.map) throw ShapeError("instance lacks map");
  const auto& p = *inst.map;
  if (!p.is_normalized()) return not_applicable("map is not normalized");
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  std::optional<OperatorField> pa, pb;
  try {
    pa = apply_map(p, fa);
    pb = apply_map(p, fb);
  } catch (const DomainError&) {
    return not_applicable("Phi(A_s) or Phi(B_s) is not invertible");
  }
  return loewner_result("map_monotone", p.apply(generalized_entropy(fa, fb, 0.0, inst.f)),
                        generalized_entropy(*pa, *pb, 0.0, inst.f), tol);
}

inline VerificationResult rev_jensen_gamma(const Instance& inst, double tol) {
  if (auto h = compression_hypotheses(inst)) return not_applicable(*h);
  if (auto h = gamma_hypotheses(inst.f, inst.m, inst.M)) return not_applicable(*h);
  validate_declared_flags(inst.f, inst.m, inst.M);
  const double gamma = gamma_f(inst.f, inst.m, inst.M);
  const auto& c = *inst.compressions;
  const auto arg = lifted_jensen_lhs(c.matrices, c.weights, *inst.x, inst.t0);
  auto r = loewner_result(
      "rev_jensen_gamma", apply_function(arg, inst.f),
      gamma * lifted_jensen_rhs(c.matrices, c.weights, *inst.x, inst.t0, inst.f), tol);
  r.detail = "gamma_f = " + std::to_string(gamma);
  return r;
}

inline VerificationResult rev_entropy_gamma(const Instance& inst, double tol) {
  if (auto h = normalized_field_hypotheses(inst)) return not_applicable(*h);
  if (auto h = gamma_hypotheses(inst.f, inst.m, inst.M)) return not_applicable(*h);
  if (!(inst.param >= 0.0 && inst.param <= 1.0)) return not_applicable("p outside [0, 1]");
  validate_declared_flags(inst.f, inst.m, inst.M);
  const double gamma = gamma_f(inst.f, inst.m, inst.M);
  const auto e = entropy_pieces(inst, inst.f, inst.param);
  const auto lhs = HermitianMatrix(apply_function(e.z, inst.f).matrix() -
                                   gamma * inst.f(inst.t0) * identity_minus(e.w).matrix());
  auto r = loewner_result("rev_entropy_gamma", lhs, gamma * e.entropy, tol);
  r.detail = "gamma_f = " + std::to_string(gamma);
  return r;
}

inline VerificationResult rev_jensen_zeta(const Instance& inst, double tol) {
  if (auto h = compression_hypotheses(inst)) return not_applicable(*h);
  if (auto h = concave_hypothesis(inst.f)) return not_applicable(*h);
  validate_declared_flags(inst.f, inst.m, inst.M);
  const double zeta = zeta_f(inst.f, inst.m, inst.M);
  const auto& c = *inst.compressions;
  const auto arg = lifted_jensen_lhs(c.matrices, c.weights, *inst.x, inst.t0);
  auto r = loewner_result(
      "rev_jensen_zeta", apply_function(arg, inst.f),
      plus_identity(lifted_jensen_rhs(c.matrices, c.weights, *inst.x, inst.t0, inst.f), zeta),
      tol);
  r.detail = "zeta_f = " + std::to_string(zeta);
  return r;
}

inline VerificationResult rev_entropy_zeta(const Instance& inst, double tol) {
  if (auto h = normalized_field_hypotheses(inst)) return not_applicable(*h);
  if (auto h = concave_hypothesis(inst.f)) return not_applicable(*h);
  if (!(inst.param >= 0.0 && inst.param <= 1.0)) return not_applicable("p outside [0, 1]");
  validate_declared_flags(inst.f, inst.m, inst.M);
  const double zeta = zeta_f(inst.f, inst.m, inst.M);
  const auto e = entropy_pieces(inst, inst.f, inst.param);
  const auto lhs = HermitianMatrix(apply_function(e.z, inst.f).matrix() -
                                   inst.f(inst.t0) * identity_minus(e.w).matrix());
  auto r = loewner_result("rev_entropy_zeta", lhs, plus_identity(e.entropy, zeta), tol);
  r.detail = "zeta_f = " + std::to_string(zeta);
  return r;
}

// Both displays of the log / -t log t example, with the closed-form zetas.
// The -t log t display is the zeta reverse multiplied by -1, where
// S_p^{-t log t}(A|B) = -S_{p+1}(A|B) (Furuta's entropy).
inline VerificationResult example_log_pair(const Instance& inst, double tol) {
  if (auto h = normalized_field_hypotheses(inst)) return not_applicable(*h);
  if (!(inst.param >= 0.0 && inst.param <= 1.0)) return not_applicable("p outside [0, 1]");
  const double p = inst.param;
  const auto z = zeta_closed_forms(inst.m, inst.M);
  const auto log = ScalarFunction::log();
  const auto& fa = need(inst.fa, "fa");
  const auto& fb = need(inst.fb, "fb");
  const auto e = entropy_pieces(inst, log, p);
  const auto deficiency = identity_minus(e.w);

  // Z log Z - t0 log t0 (I - W) >= S_{p+1}(A|B) - zeta_{-t log t}
  const auto zlogz = e.z.spectrum().map([](double t) { return t * std::log(t); });
  const auto first_big = HermitianMatrix(zlogz.matrix() -
                                         inst.t0 * std::log(inst.t0) * deficiency.matrix());
  const auto first_small =
      plus_identity(generalized_entropy(fa, fb, p + 1.0, log), -z.zeta_neg_t_log_t);
  const auto r1 = loewner_result("example_log_pair", first_small, first_big, tol);

  // log Z - log t0 (I - W) <= S_p(A|B) + zeta_log
  const auto second_small = HermitianMatrix(apply_function(e.z, log).matrix() -
                                            std::log(inst.t0) * deficiency.matrix());
  const auto second_big = plus_identity(e.entropy, z.zeta_log);
  const auto r2 = loewner_result("example_log_pair", second_small, second_big, tol);

  auto r = r1.margin <= r2.margin ? r1 : r2;
  r.holds = r1.holds && r2.holds;
  std::ostringstream os;
  os.precision(17);
  os << "-t log t margin " << r1.margin << " (zeta " << z.zeta_neg_t_log_t << "); log margin "
     << r2.margin << " (zeta " << z.zeta_log << ")";
  r.detail = os.str();
  return r;
}

}  // namespace checkers

using Checker = VerificationResult (*)(const Instance&, double);

/// Total registry: the switch names every enumerator.
constexpr Checker checker_for(TheoremId id) {
  switch (id) {
    case TheoremId::mean_integral: return &checkers::mean_integral;
    case TheoremId::compression_jensen: return &checkers::compression_jensen;
    case TheoremId::entropy_lower: return &checkers::entropy_lower;
    case TheoremId::entropy_nonneg: return &checkers::entropy_nonneg;
    case TheoremId::entropy_upper: return &checkers::entropy_upper;
    case TheoremId::klein_upper: return &checkers::klein_upper;
    case TheoremId::info_ineq: return &checkers::info_ineq;
    case TheoremId::subadditive: return &checkers::subadditive;
    case TheoremId::homogeneous: return &checkers::homogeneous;
    case TheoremId::joint_concave: return &checkers::joint_concave;
    case TheoremId::map_monotone: return &checkers::map_monotone;
    case TheoremId::rev_jensen_gamma: return &checkers::rev_jensen_gamma;
    case TheoremId::rev_entropy_gamma: return &checkers::rev_entropy_gamma;
    case TheoremId::rev_jensen_zeta: return &checkers::rev_jensen_zeta;
    case TheoremId::rev_entropy_zeta: return &checkers::rev_entropy_zeta;
    case TheoremId::example_log_pair: return &checkers::example_log_pair;
  }
  return nullptr;
}

/// Tolerance used to separate round-off from genuine violations.
inline constexpr double kTriageTol = 1e-6;

/// Checks `theorem` on `inst`. A failure is re-run at 1e-6 and triaged as
/// "numerical" (passes there) or "substantive".
inline VerificationResult check(TheoremId theorem, const Instance& inst, double tol = kLoewnerTol) {
  const Checker run = checker_for(theorem);
  auto r = run(inst, tol);
  r.theorem = theorem;
  r.label = std::string(to_string(theorem));
  if (!r.hypothesis_met) r.holds = false;
  if (r.failed()) r.triage = run(inst, std::max(tol, kTriageTol)).holds ? Triage::numerical
                                                                        : Triage::substantive;
  return r;
}

// ---------------------------------------------------------------------------
// Campaigns

struct CampaignConfig {
  std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
  int trials = 1000;
  int dim_min = 2;
  int dim_max = 8;
  int k_min = 2;
  int k_max = 4;
  std::vector<std::string> functions{"power:0.5", "power:0.25", "neg_t_log_t", "log"};
  std::vector<double> params{0.0, 0.25, 0.5, 0.75, 1.0};
  double tol = kLoewnerTol;
  std::uint64_t seed = 42;
  bool diagonal = false;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  int threads = 0;

  void validate() const {
    if (trials < 0) throw PreconditionError("trials must be >= 0");
    if (!(tol > 0.0)) throw PreconditionError("tol must be > 0");
    if (dim_min < 1 || dim_max > kMaxDim || dim_min > dim_max)
      throw PreconditionError("dims must lie within 1..64");
    if (k_min < 1 || k_min > k_max) throw PreconditionError("k range invalid");
    if (functions.empty()) throw PreconditionError("need at least one function");
    if (params.empty()) throw PreconditionError("need at least one q/p value");
    for (const auto& s : functions) (void)ScalarFunction::parse(s);
  }
};

struct TrialRecord {
  TheoremId theorem = TheoremId::entropy_lower;
  int trial = 0;
  std::uint64_t seed = 0;
  int dim = 0;
  int k = 0;
  std::string function;
  double param = 0.0;
  double m = 0.0;
  double M = 0.0;
  VerificationResult result;
  /// Non-empty when generation or evaluation threw.
  std::string error;
};

/// Trials binned by the measured sandwich width M/m.
struct WidthBin {
  double upper = 0.0;  // exclusive upper edge of M/m (inf for the last bin)
  int count = 0;
  std::optional<double> min_margin;
};

struct TheoremSummary {
  TheoremId theorem = TheoremId::entropy_lower;
  int trials = 0;
  int passes = 0;
  int skips = 0;
  int failures = 0;
  int numerical = 0;
  int substantive = 0;
  int errors = 0;
  std::optional<double> min_margin;
  std::optional<std::uint64_t> worst_seed;
  std::vector<WidthBin> width_bins;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<TheoremSummary> results;
  std::vector<TrialRecord> trials;

  int substantive_violations() const {
    int n = 0;
    for (const auto& s : results) n += s.substantive;
    return n;
  }
};

inline constexpr std::uint64_t trial_seed(std::uint64_t master, TheoremId id, int trial) {
  return derive_seed({master, static_cast<std::uint64_t>(index_of(id)) + 1,
                      static_cast<std::uint64_t>(trial)});
}

struct TrialSetup {
  int dim = 0;
  int k = 0;
  std::string function;
  double param = 0.0;
};

/// Trial-level choices (dim, k, f, q/p), all derived from the trial seed.
inline TrialSetup trial_setup(const CampaignConfig& config, TheoremId theorem,
                              std::uint64_t seed) {
  Rng rng(derive_seed({seed, 0x5e7u}));
  TrialSetup s;
  s.dim = rng.uniform_int(config.dim_min, config.dim_max);
  s.k = rng.uniform_int(config.k_min, config.k_max);
  s.function = config.functions[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<int>(config.functions.size()) - 1))];
  std::vector<double> allowed;
  const auto rule = theorem_info(theorem).param;
  for (double v : config.params)
    if (rule != ParamRule::unit_interval || (v >= 0.0 && v <= 1.0)) allowed.push_back(v);
  if (allowed.empty()) allowed.push_back(0.0);
  s.param = allowed[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(allowed.size()) - 1))];
  if (rule == ParamRule::zero) s.param = 0.0;
  if (instance_shape(theorem) == InstanceShape::compression) s.dim = std::max(s.dim, 2);
  return s;
}

/// The instance behind a campaign trial.
inline Instance trial_instance(const CampaignConfig& config, TheoremId theorem,
                               std::uint64_t seed) {
  const auto setup = trial_setup(config, theorem, seed);
  return random_instance(theorem, setup.dim, setup.k, seed, ScalarFunction::parse(setup.function),
                         setup.param, config.diagonal);
}

/// Regenerates and checks one trial; `campaign` is built from this, so
/// replaying a reported seed reproduces the margin bit for bit.
inline TrialRecord run_trial(const CampaignConfig& config, TheoremId theorem, std::uint64_t seed,
                             int trial = -1) {
  TrialRecord rec;
  rec.theorem = theorem;
  rec.trial = trial;
  rec.seed = seed;
  const auto setup = trial_setup(config, theorem, seed);
  rec.dim = setup.dim;
  rec.k = setup.k;
  rec.param = setup.param;
  rec.function = setup.function;
  try {
    const auto inst = trial_instance(config, theorem, seed);
    rec.function = inst.f.spec();
    rec.k = inst.k;
    rec.m = inst.m;
    rec.M = inst.M;
    rec.result = check(theorem, inst, config.tol);
  } catch (const Error& e) {
    rec.error = e.what();
    rec.result.theorem = theorem;
    rec.result.label = std::string(to_string(theorem));
    rec.result.hypothesis_met = false;
  }
  return rec;
}

inline std::vector<WidthBin> empty_width_bins() {
  return {{2.0, 0, {}}, {5.0, 0, {}}, {20.0, 0, {}},
          {std::numeric_limits<double>::infinity(), 0, {}}};
}

inline TheoremSummary summarize(TheoremId theorem, std::span<const TrialRecord> records) {
  TheoremSummary s;
  s.theorem = theorem;
  s.width_bins = empty_width_bins();
  for (const auto& rec : records) {
    ++s.trials;
    if (!rec.error.empty()) {
      ++s.errors;
      continue;
    }
    const auto& r = rec.result;
    if (!r.hypothesis_met) {
      ++s.skips;
      continue;
    }
    if (r.holds) {
      ++s.passes;
    } else {
      ++s.failures;
      if (r.triage == Triage::numerical) ++s.numerical;
      if (r.triage == Triage::substantive) ++s.substantive;
    }
    if (!s.min_margin || r.margin < *s.min_margin) {
      s.min_margin = r.margin;
      s.worst_seed = rec.seed;
    }
    const double width = rec.m > 0.0 ? rec.M / rec.m : std::numeric_limits<double>::infinity();
    for (auto& bin : s.width_bins) {
      if (width < bin.upper || std::isinf(bin.upper)) {
        ++bin.count;
        if (!bin.min_margin || r.margin < *bin.min_margin) bin.min_margin = r.margin;
        break;
      }
    }
  }
  return s;
}

/// Runs config.trials trials per theorem. Trials run on worker threads but
/// every trial owns its RNG stream and aggregation is in trial order, so the
/// report does not depend on scheduling.
inline CampaignReport campaign(const CampaignConfig& config) {
  config.validate();
  CampaignReport report;
  report.config = config;
  const auto per = static_cast<std::size_t>(config.trials);
  const std::size_t total = per * config.theorems.size();
  report.trials.resize(total);

  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const auto theorem = config.theorems[i / per];
      const int trial = static_cast<int>(i % per);
      report.trials[i] = run_trial(config, theorem, trial_seed(config.seed, theorem, trial), trial);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (std::size_t t = 0; t < config.theorems.size(); ++t) {
    report.results.push_back(summarize(
        config.theorems[t], std::span<const TrialRecord>(report.trials.data() + t * per, per)));
  }
  return report;
}

}  // namespace opent

#endif  // OPENT_VERIFY_HPP

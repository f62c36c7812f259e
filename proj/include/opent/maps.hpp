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

// Positive linear maps in Kraus form, X -> sum_i C_i* X C_i, together with
// the Davis-Choi-Jensen inequality f(Phi(A)) >= Phi(f(A)) and its
// Mond-Pecaric reverses at the map level.

#ifndef OPENT_MAPS_HPP
#define OPENT_MAPS_HPP

#include <sstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opent/bounds.hpp"
#include "opent/entropy.hpp"
#include "opent/errors.hpp"
#include "opent/functions.hpp"
#include "opent/matcore.hpp"
#include "opent/random.hpp"
#include "opent/result.hpp"

namespace opent {

/// Phi(X) = sum_i C_i* X C_i with each C_i of shape in_dim x out_dim.
class PositiveLinearMap {
 public:
  explicit PositiveLinearMap(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw ShapeError("map: needs at least one Kraus operator");
    for (const auto& c : kraus_) {
      if (c.rows() != kraus_.front().rows() || c.cols() != kraus_.front().cols())
        throw ShapeError("map: Kraus operators differ in shape");
    }
    if (in_dim() < 1 || out_dim() < 1) throw ShapeError("map: empty Kraus operator");
  }

  static PositiveLinearMap unitary(const CMatrix& u) { return PositiveLinearMap({u}); }

  /// Pinching onto the diagonal: Kraus operators are the rank-one projectors e_i e_i*.
  static PositiveLinearMap pinching(int n) {
    std::vector<CMatrix> ks;
    for (int i = 0; i < n; ++i) {
      CMatrix p = CMatrix::Zero(n, n);
      p(i, i) = 1.0;
      ks.push_back(std::move(p));
    }
    return PositiveLinearMap(std::move(ks));
  }

  /// k Ginibre matrices G_i, S = sum G_i* G_i, C_i = G_i S^{-1/2}: normalized by construction.
  static PositiveLinearMap random_normalized(Rng& rng, int in_dim, int out_dim, int k) {
    std::vector<CMatrix> gs;
    CMatrix s = CMatrix::Zero(out_dim, out_dim);
    for (int i = 0; i < k; ++i) {
      gs.push_back(random_ginibre(rng, in_dim, out_dim));
      s += gs.back().adjoint() * gs.back();
    }
    const auto inv_sqrt = half_powers(PositiveDefiniteMatrix(HermitianMatrix(s))).inv_sqrt;
    for (auto& g : gs) g = g * inv_sqrt.matrix();
    return PositiveLinearMap(std::move(gs));
  }

  int in_dim() const noexcept { return static_cast<int>(kraus_.front().rows()); }
  int out_dim() const noexcept { return static_cast<int>(kraus_.front().cols()); }
  const std::vector<CMatrix>& kraus() const noexcept { return kraus_; }

  HermitianMatrix apply(const HermitianMatrix& x) const {
    if (x.dim() != in_dim()) throw ShapeError("map: input dimension mismatch");
    CMatrix sum = CMatrix::Zero(out_dim(), out_dim());
    for (const auto& c : kraus_) sum += c.adjoint() * x.matrix() * c;
    return HermitianMatrix(sum);
  }

  HermitianMatrix operator()(const HermitianMatrix& x) const { return apply(x); }

  /// ||sum C_i* C_i - I||_F
  double normalization_residual() const {
    CMatrix sum = CMatrix::Zero(out_dim(), out_dim());
    for (const auto& c : kraus_) sum += c.adjoint() * c;
    return (sum - CMatrix::Identity(out_dim(), out_dim())).norm();
  }

  bool is_normalized(double tol = 1e-10) const { return normalization_residual() <= tol; }

 private:
  std::vector<CMatrix> kraus_;
};

inline HermitianMatrix apply_map(const PositiveLinearMap& p, const HermitianMatrix& x) {
  return p.apply(x);
}

/// Node-wise image Phi(F). Throws DomainError if some Phi(A_s) is not PD.
inline OperatorField apply_map(const PositiveLinearMap& p, const OperatorField& f) {
  std::vector<PositiveDefiniteMatrix> out;
  out.reserve(f.size());
  for (const auto& a : f.matrices()) out.emplace_back(p.apply(a));
  return OperatorField(f.weights(), std::move(out));
}

namespace detail {

inline void require_same_count(std::span<const CMatrix> cs, std::span<const double> weights) {
  if (cs.empty()) throw ShapeError("compression family is empty");
  if (cs.size() != weights.size()) throw ShapeError("compression weights/matrices mismatch");
  for (const auto& c : cs)
    if (c.rows() != cs.front().rows() || c.cols() != cs.front().cols())
      throw ShapeError("compression matrices differ in shape");
}

// sum_s w_s C_s* C_s
inline HermitianMatrix compression_sum(std::span<const CMatrix> cs,
                                       std::span<const double> weights) {
  CMatrix sum = CMatrix::Zero(cs.front().cols(), cs.front().cols());
  for (std::size_t i = 0; i < cs.size(); ++i) sum += weights[i] * (cs[i].adjoint() * cs[i]);
  return HermitianMatrix(sum);
}

inline HermitianMatrix weighted_congruence_sum(std::span<const CMatrix> cs,
                                               std::span<const double> weights,
                                               const HermitianMatrix& x) {
  if (cs.front().rows() != x.dim()) throw ShapeError("compression rows must equal dim X");
  CMatrix sum = CMatrix::Zero(cs.front().cols(), cs.front().cols());
  for (std::size_t i = 0; i < cs.size(); ++i)
    sum += weights[i] * (cs[i].adjoint() * x.matrix() * cs[i]);
  return HermitianMatrix(sum);
}

inline void require_contraction(const HermitianMatrix& sum) {
  const auto cmp = loewner_leq(sum, HermitianMatrix::identity(sum.dim()), 1e-10);
  if (!cmp.holds) {
    std::ostringstream os;
    os.precision(17);
    os << "compression sum exceeds I: lambda_min(I - sum w C*C) = " << cmp.margin;
    throw PreconditionError(os.str());
  }
}

inline void require_t0_in_spectrum(const PositiveDefiniteMatrix& x, double t0) {
  const double slack = 1e-12 * x.lambda_max();
  if (!(t0 >= x.lambda_min() - slack && t0 <= x.lambda_max() + slack)) {
    std::ostringstream os;
    os.precision(17);
    os << "t0 = " << t0 << " outside [" << x.lambda_min() << ", " << x.lambda_max() << "]";
    throw PreconditionError(os.str());
  }
}

}  // namespace detail

/// sum_s w_s C_s* X C_s + t0 (I - sum_s w_s C_s* C_s).
inline PositiveDefiniteMatrix lifted_jensen_lhs(std::span<const CMatrix> cs,
                                                std::span<const double> weights,
                                                const PositiveDefiniteMatrix& x, double t0) {
  detail::require_same_count(cs, weights);
  const auto csum = detail::compression_sum(cs, weights);
  detail::require_contraction(csum);
  detail::require_t0_in_spectrum(x, t0);
  const auto n = csum.dim();
  const CMatrix deficiency = CMatrix::Identity(n, n) - csum.matrix();
  return PositiveDefiniteMatrix(
      HermitianMatrix(detail::weighted_congruence_sum(cs, weights, x).matrix() + t0 * deficiency));
}

/// sum_s w_s C_s* f(X) C_s + f(t0) (I - sum_s w_s C_s* C_s).
inline HermitianMatrix lifted_jensen_rhs(std::span<const CMatrix> cs,
                                         std::span<const double> weights,
                                         const PositiveDefiniteMatrix& x, double t0,
                                         const ScalarFunction& f) {
  detail::require_same_count(cs, weights);
  const auto csum = detail::compression_sum(cs, weights);
  const auto n = csum.dim();
  const CMatrix deficiency = CMatrix::Identity(n, n) - csum.matrix();
  return HermitianMatrix(
      detail::weighted_congruence_sum(cs, weights, apply_function(x, f)).matrix() +
      f.evaluate(t0) * deficiency);
}

/// Fills holds/margin/norms from a Loewner comparison lhs <= rhs.
inline VerificationResult loewner_result(std::string label, const HermitianMatrix& lhs,
                                         const HermitianMatrix& rhs, double tol) {
  const auto cmp = loewner_leq(lhs, rhs, tol);
  VerificationResult r;
  r.label = std::move(label);
  r.holds = cmp.holds;
  r.margin = cmp.margin;
  r.lhs_norm = cmp.lhs_norm;
  r.rhs_norm = cmp.rhs_norm;
  return r;
}

namespace detail {

inline void require_normalized(const PositiveLinearMap& p) {
  if (!p.is_normalized()) {
    std::ostringstream os;
    os << "map is not normalized: ||sum C*C - I||_F = " << p.normalization_residual();
    throw PreconditionError(os.str());
  }
}

inline void require_spectrum_within(const PositiveDefiniteMatrix& a, double m, double M) {
  const double slack = 1e-12 * std::max(1.0, M);
  if (!(m > 0.0 && m < M)) throw PreconditionError("need 0 < m < M");
  if (a.lambda_min() < m - slack || a.lambda_max() > M + slack)
    throw PreconditionError("spectrum of A not contained in [m, M]");
}

}  // namespace detail

/// Davis-Choi-Jensen: Phi(f(A)) <= f(Phi(A)) for operator concave f.
inline VerificationResult check_jensen(const PositiveLinearMap& p, const PositiveDefiniteMatrix& a,
                                       const ScalarFunction& f, double tol = kLoewnerTol) {
  detail::require_normalized(p);
  const PositiveDefiniteMatrix image(p.apply(a));
  if (!f.flags().operator_concave) {
    VerificationResult r;
    r.label = "jensen";
    r.hypothesis_met = false;
    r.detail = f.spec() + " is not flagged operator concave";
    return r;
  }
  validate_declared_flags(f, std::min(a.lambda_min(), image.lambda_min()),
                          std::max(a.lambda_max(), image.lambda_max()));
  return loewner_result("jensen", p.apply(apply_function(a, f)), apply_function(image, f), tol);
}

/// f(Phi(A)) <= gamma_f Phi(f(A)) for spectrum of A in [m, M].
inline VerificationResult check_jensen_reverse_gamma(const PositiveLinearMap& p,
                                                     const PositiveDefiniteMatrix& a,
                                                     const ScalarFunction& f, double m, double M,
                                                     double tol = kLoewnerTol) {
  detail::require_normalized(p);
  detail::require_spectrum_within(a, m, M);
  const double gamma = gamma_f(f, m, M);
  const PositiveDefiniteMatrix image(p.apply(a));
  auto r = loewner_result("jensen_reverse_gamma", apply_function(image, f),
                          gamma * p.apply(apply_function(a, f)), tol);
  r.detail = "gamma_f = " + std::to_string(gamma);
  return r;
}

/// f(Phi(A)) <= zeta_f I + Phi(f(A)) for spectrum of A in [m, M].
inline VerificationResult check_jensen_reverse_zeta(const PositiveLinearMap& p,
                                                    const PositiveDefiniteMatrix& a,
                                                    const ScalarFunction& f, double m, double M,
                                                    double tol = kLoewnerTol) {
  detail::require_normalized(p);
  detail::require_spectrum_within(a, m, M);
  const double zeta = zeta_f(f, m, M);
  const PositiveDefiniteMatrix image(p.apply(a));
  const auto rhs = HermitianMatrix(p.apply(apply_function(a, f)).matrix() +
                                   zeta * CMatrix::Identity(p.out_dim(), p.out_dim()));
  auto r = loewner_result("jensen_reverse_zeta", apply_function(image, f), rhs, tol);
  r.detail = "zeta_f = " + std::to_string(zeta);
  return r;
}

}  // namespace opent

#endif  // OPENT_MAPS_HPP

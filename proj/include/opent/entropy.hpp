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

// Natural power means X #_q Y, the generalized relative operator entropy
// S_q^f(A|B) and its aggregates over weighted operator fields.
//
// A field is a finite list of (weight, matrix) nodes; the integral of a
// field against its measure is the weighted sum.

#ifndef OPENT_ENTROPY_HPP
#define OPENT_ENTROPY_HPP

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opent/errors.hpp"
#include "opent/functions.hpp"
#include "opent/matcore.hpp"

namespace opent {

class OperatorField {
 public:
  OperatorField(std::vector<double> weights, std::vector<PositiveDefiniteMatrix> matrices)
      : weights_(std::move(weights)), matrices_(std::move(matrices)) {
    if (weights_.size() != matrices_.size())
      throw ShapeError("field: weight and matrix counts differ");
    if (matrices_.empty()) throw ShapeError("field: needs at least one node");
    for (double w : weights_)
      if (!(w > 0.0) || !std::isfinite(w)) throw PreconditionError("field: weights must be > 0");
    for (const auto& m : matrices_)
      if (m.dim() != matrices_.front().dim()) throw ShapeError("field: node dims differ");
  }

  static OperatorField unit_weights(std::vector<PositiveDefiniteMatrix> matrices) {
    std::vector<double> w(matrices.size(), 1.0);
    return OperatorField(std::move(w), std::move(matrices));
  }

  std::size_t size() const noexcept { return matrices_.size(); }
  int dim() const noexcept { return matrices_.front().dim(); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<PositiveDefiniteMatrix>& matrices() const noexcept { return matrices_; }
  double weight(std::size_t i) const { return weights_.at(i); }
  const PositiveDefiniteMatrix& operator[](std::size_t i) const { return matrices_.at(i); }

  /// alpha F: matrices scaled, weights untouched.
  OperatorField scaled(double alpha) const {
    std::vector<PositiveDefiniteMatrix> out;
    out.reserve(size());
    for (const auto& m : matrices_) out.push_back(m.scaled(alpha));
    return OperatorField(weights_, std::move(out));
  }

  /// Node-wise alpha F + beta G over a shared measure.
  static OperatorField combine(double alpha, const OperatorField& f, double beta,
                               const OperatorField& g) {
    require_aligned(f, g, "field combination");
    std::vector<PositiveDefiniteMatrix> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      out.emplace_back(HermitianMatrix(alpha * f[i].matrix() + beta * g[i].matrix()));
    return OperatorField(f.weights_, std::move(out));
  }

  friend OperatorField operator+(const OperatorField& f, const OperatorField& g) {
    return combine(1.0, f, 1.0, g);
  }

  /// Node counts, dims and weights agree (weights to 1e-12 relative).
  static bool aligned(const OperatorField& f, const OperatorField& g) {
    if (f.size() != g.size() || f.dim() != g.dim()) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double a = f.weights_[i], b = g.weights_[i];
      if (std::abs(a - b) > 1e-12 * std::max(a, b)) return false;
    }
    return true;
  }

  static void require_aligned(const OperatorField& f, const OperatorField& g,
                              const std::string& what) {
    if (f.size() != g.size() || f.dim() != g.dim())
      throw ShapeError(what + ": fields differ in node count or dimension");
    if (!aligned(f, g)) throw ShapeError(what + ": fields are not node-aligned in weight");
  }

 private:
  std::vector<double> weights_;
  std::vector<PositiveDefiniteMatrix> matrices_;
};

/// Sum of w_s A_s.
inline HermitianMatrix field_integral(const OperatorField& f) {
  CMatrix sum = CMatrix::Zero(f.dim(), f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) sum += f.weight(i) * f[i].matrix();
  return HermitianMatrix(sum);
}

/// ||sum w_s A_s - I||_F <= tol.
inline bool is_normalized(const OperatorField& f, double tol = 1e-10) {
  return (field_integral(f).matrix() - CMatrix::Identity(f.dim(), f.dim())).norm() <= tol;
}

/// A^{-1/2} B A^{-1/2}.
inline PositiveDefiniteMatrix relative_kernel(const PositiveDefiniteMatrix& a,
                                              const PositiveDefiniteMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("dimension mismatch between A and B");
  return PositiveDefiniteMatrix(congruence(half_powers(a).inv_sqrt.matrix(), b));
}

namespace detail {

// A^{1/2} g(Z) A^{1/2} for the kernel Z = A^{-1/2} B A^{-1/2}, as a raw product.
template <class G>
CMatrix outer_sandwich(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& z, G&& g) {
  const auto& s = z.spectrum();
  Eigen::VectorXcd d(s.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = g(s.eigenvalues(i));
  const CMatrix w = half_powers(a).sqrt.matrix() * s.eigenvectors;
  return w * d.asDiagonal() * w.adjoint();
}

inline void check_spectrum_in_domain(const PositiveDefiniteMatrix& z, const ScalarFunction& f) {
  for (Eigen::Index i = 0; i < z.spectrum().eigenvalues.size(); ++i) {
    const double t = z.spectrum().eigenvalues(i);
    if (!f.in_domain(t)) {
      std::ostringstream os;
      os.precision(17);
      os << "eigenvalue " << t << " of A^{-1/2} B A^{-1/2} outside the domain of " << f.spec();
      throw DomainError(os.str());
    }
  }
}

inline CMatrix natural_power_raw(const PositiveDefiniteMatrix& x, const PositiveDefiniteMatrix& y,
                                 double q) {
  return outer_sandwich(x, relative_kernel(x, y), [q](double t) { return std::pow(t, q); });
}

inline CMatrix s_q_f_raw(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                         double q, const ScalarFunction& f) {
  const auto z = relative_kernel(a, b);
  check_spectrum_in_domain(z, f);
  return outer_sandwich(a, z, [&](double t) { return std::pow(t, q) * f.evaluate(t); });
}

}  // namespace detail

/// X #_q Y = X^{1/2} (X^{-1/2} Y X^{-1/2})^q X^{1/2}, any real q.
inline PositiveDefiniteMatrix natural_power(const PositiveDefiniteMatrix& x,
                                            const PositiveDefiniteMatrix& y, double q) {
  return PositiveDefiniteMatrix(HermitianMatrix(detail::natural_power_raw(x, y, q)));
}

/// S_q^f(A|B) = A^{1/2} Z^q f(Z) A^{1/2}, Z = A^{-1/2} B A^{-1/2}.
/// q = 0 with f = log is the Fujii-Kamei relative operator entropy S(A|B);
/// f = log with general q is Furuta's S_q(A|B).
inline HermitianMatrix s_q_f(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                             double q, const ScalarFunction& f) {
  return HermitianMatrix(detail::s_q_f_raw(a, b, q, f));
}

/// B S_{q-1}^f(B^{-1} | A^{-1}) B, which equals S_q^f(A|B).
inline HermitianMatrix variational_form(const PositiveDefiniteMatrix& a,
                                        const PositiveDefiniteMatrix& b, double q,
                                        const ScalarFunction& f) {
  const CMatrix inner = detail::s_q_f_raw(inverse(b), inverse(a), q - 1.0, f);
  return HermitianMatrix(b.matrix() * inner * b.matrix());
}

/// Sum of w_s (A_s #_q B_s) for any real q.
inline HermitianMatrix power_mean_sum(const OperatorField& fa, const OperatorField& fb,
                                      double q) {
  OperatorField::require_aligned(fa, fb, "power_mean_sum");
  CMatrix sum = CMatrix::Zero(fa.dim(), fa.dim());
  for (std::size_t i = 0; i < fa.size(); ++i)
    sum += fa.weight(i) * detail::natural_power_raw(fa[i], fb[i], q);
  return HermitianMatrix(sum);
}

/// Sum of w_s (A_s #_p B_s) for p in [0, 1].
inline HermitianMatrix mean_field(const OperatorField& fa, const OperatorField& fb, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("mean_field: p must lie in [0, 1]");
  return power_mean_sum(fa, fb, p);
}

/// Weighted aggregate sum_s w_s S_q^f(A_s|B_s). Nodes are reduced in index order.
inline HermitianMatrix generalized_entropy(const OperatorField& fa, const OperatorField& fb,
                                           double q, const ScalarFunction& f) {
  OperatorField::require_aligned(fa, fb, "generalized_entropy");
  CMatrix sum = CMatrix::Zero(fa.dim(), fa.dim());
  for (std::size_t i = 0; i < fa.size(); ++i)
    sum += fa.weight(i) * detail::s_q_f_raw(fa[i], fb[i], q, f);
  return HermitianMatrix(sum);
}

}  // namespace opent

#endif  // OPENT_ENTROPY_HPP

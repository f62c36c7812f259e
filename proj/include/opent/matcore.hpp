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

// Dense complex Hermitian kernel: cyclic Jacobi eigensolver, spectral
// functional calculus, congruences and Loewner-order comparison.

#ifndef OPENT_MATCORE_HPP
#define OPENT_MATCORE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "opent/errors.hpp"
#include "opent/functions.hpp"

namespace opent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr int kMaxDim = 64;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-13;
/// Default relative Loewner tolerance.
inline constexpr double kLoewnerTol = 1e-9;
/// A matrix with lambda_min <= kPdRatio * lambda_max is treated as singular.
inline constexpr double kPdRatio = 1e-12;

/// Complex Hermitian matrix. Construction symmetrizes (H + H*)/2, which
/// absorbs round-off drift from products.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(const CMatrix& m) : m_(m) {
    if (m.rows() != m.cols()) throw ShapeError("Hermitian matrix must be square");
    if (m.rows() < 1) throw ShapeError("Hermitian matrix needs dim >= 1");
    m_ = (m + m.adjoint()) * 0.5;
    for (Eigen::Index i = 0; i < m_.rows(); ++i) m_(i, i) = m_(i, i).real();
  }

  static HermitianMatrix identity(int n) { return HermitianMatrix(CMatrix::Identity(n, n)); }
  static HermitianMatrix zero(int n) { return HermitianMatrix(CMatrix::Zero(n, n)); }
  static HermitianMatrix diagonal(std::span<const double> d) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d.size()),
                              static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    return HermitianMatrix(m);
  }
  static HermitianMatrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  double frobenius_norm() const { return m_.norm(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    check_same(a, b);
    return HermitianMatrix(a.m_ + b.m_);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    check_same(a, b);
    return HermitianMatrix(a.m_ - b.m_);
  }
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix(a.m_ * s);
  }
  HermitianMatrix& operator+=(const HermitianMatrix& b) {
    check_same(*this, b);
    m_ += b.m_;
    return *this;
  }

 private:
  static void check_same(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw ShapeError("Hermitian dimension mismatch");
  }

  CMatrix m_;
};

/// H = V diag(eigenvalues) V*, eigenvalues nondecreasing, V unitary.
struct SpectralDecomposition {
  RVector eigenvalues;
  CMatrix eigenvectors;

  int dim() const noexcept { return static_cast<int>(eigenvalues.size()); }
  double lambda_min() const { return eigenvalues(0); }
  double lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }

  CMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }

  /// V diag(g(lambda_i)) V*.
  template <class G>
  HermitianMatrix map(G&& g) const {
    Eigen::VectorXcd d(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) d(i) = g(eigenvalues(i));
    return HermitianMatrix(eigenvectors * d.asDiagonal() * eigenvectors.adjoint());
  }
};

namespace detail {

inline double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q). With b = a(p,q) = |b| e,
// J = [[c, s e], [-s conj(e), c]] on the (p,q) plane, A <- J* A J, V <- V J.
inline void jacobi_rotate(CMatrix& a, CMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex b = a(p, q);
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return;
  const Complex e = b / abs_b;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_b);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex se = s * e;
  const Complex se_conj = s * std::conj(e);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - se_conj * akq;
    a(k, q) = se * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - se * aqk;
    a(q, k) = se_conj * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - se_conj * vkq;
    v(k, q) = se * vkp + c * vkq;
  }
}

}  // namespace detail

/// Cyclic complex Jacobi eigensolver. Converges when the off-diagonal
/// Frobenius norm drops to 1e-13 * ||H||_F; throws ConvergenceError after
/// 100 sweeps.
inline SpectralDecomposition eig(const HermitianMatrix& h) {
  const Eigen::Index n = h.dim();
  CMatrix a = h.matrix();
  CMatrix v = CMatrix::Identity(n, n);
  const double threshold = kJacobiRelTol * a.norm();

  double off = detail::off_diagonal_norm(a);
  int sweep = 0;
  while (off > threshold) {
    if (sweep == kJacobiMaxSweeps) {
      std::ostringstream os;
      os << "Jacobi eigensolver did not converge in " << kJacobiMaxSweeps
         << " sweeps; off-diagonal residual " << off;
      throw ConvergenceError(os.str(), off);
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
    off = detail::off_diagonal_norm(a);
    ++sweep;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });
  SpectralDecomposition out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

inline double lambda_min(const HermitianMatrix& h) { return eig(h).lambda_min(); }

/// Largest absolute eigenvalue.
inline double spectral_norm(const HermitianMatrix& h) {
  const auto s = eig(h);
  return std::max(std::abs(s.lambda_min()), std::abs(s.lambda_max()));
}

/// Strictly positive definite Hermitian matrix with its cached spectrum.
class PositiveDefiniteMatrix {
 public:
  explicit PositiveDefiniteMatrix(HermitianMatrix h) : h_(std::move(h)), spec_(eig(h_)) {
    validate();
  }

  /// Builds from an already-known decomposition (eigenvalues need not be sorted).
  static PositiveDefiniteMatrix from_spectrum(RVector values, CMatrix vectors) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return values(i) < values(j); });
    SpectralDecomposition s{RVector(values.size()), CMatrix(vectors.rows(), vectors.cols())};
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      s.eigenvalues(k) = values(order[static_cast<std::size_t>(k)]);
      s.eigenvectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
    }
    HermitianMatrix h(s.reconstruct());
    return PositiveDefiniteMatrix(std::move(h), std::move(s));
  }

  static PositiveDefiniteMatrix identity(int n) {
    return from_spectrum(RVector::Ones(n), CMatrix::Identity(n, n));
  }

  int dim() const noexcept { return h_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return h_; }
  const CMatrix& matrix() const noexcept { return h_.matrix(); }
  const SpectralDecomposition& spectrum() const noexcept { return spec_; }
  double lambda_min() const { return spec_.lambda_min(); }
  double lambda_max() const { return spec_.lambda_max(); }

  operator const HermitianMatrix&() const noexcept { return h_; }  // NOLINT

  /// alpha * A for alpha > 0, reusing the eigenvectors.
  PositiveDefiniteMatrix scaled(double alpha) const {
    if (!(alpha > 0.0)) throw PreconditionError("scaling factor must be positive");
    return from_spectrum(spec_.eigenvalues * alpha, spec_.eigenvectors);
  }

 private:
  PositiveDefiniteMatrix(HermitianMatrix h, SpectralDecomposition s)
      : h_(std::move(h)), spec_(std::move(s)) {
    validate();
  }

  void validate() const {
    if (!(spec_.lambda_min() > 0.0) || spec_.lambda_min() <= kPdRatio * spec_.lambda_max()) {
      std::ostringstream os;
      os.precision(17);
      os << "matrix is not strictly positive definite: lambda_min = " << spec_.lambda_min()
         << ", lambda_max = " << spec_.lambda_max();
      throw DomainError(os.str());
    }
  }

  HermitianMatrix h_;
  SpectralDecomposition spec_;
};

/// f(A) = V diag(f(lambda_i)) V*.
inline HermitianMatrix apply_function(const SpectralDecomposition& s, const ScalarFunction& f) {
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (!f.in_domain(s.eigenvalues(i))) {
      std::ostringstream os;
      os.precision(17);
      os << "eigenvalue " << s.eigenvalues(i) << " outside the domain of " << f.spec();
      throw DomainError(os.str());
    }
  }
  return s.map([&](double t) { return f.evaluate(t); });
}

inline HermitianMatrix apply_function(const PositiveDefiniteMatrix& a, const ScalarFunction& f) {
  return apply_function(a.spectrum(), f);
}

struct HalfPowers {
  PositiveDefiniteMatrix sqrt;
  PositiveDefiniteMatrix inv_sqrt;
  PositiveDefiniteMatrix inverse;
};

/// (A^{1/2}, A^{-1/2}, A^{-1}) from the cached spectrum of A.
inline HalfPowers half_powers(const PositiveDefiniteMatrix& a) {
  const auto& s = a.spectrum();
  return {PositiveDefiniteMatrix::from_spectrum(s.eigenvalues.cwiseSqrt(), s.eigenvectors),
          PositiveDefiniteMatrix::from_spectrum(s.eigenvalues.cwiseSqrt().cwiseInverse(),
                                                s.eigenvectors),
          PositiveDefiniteMatrix::from_spectrum(s.eigenvalues.cwiseInverse(), s.eigenvectors)};
}

inline PositiveDefiniteMatrix inverse(const PositiveDefiniteMatrix& a) {
  return PositiveDefiniteMatrix::from_spectrum(a.spectrum().eigenvalues.cwiseInverse(),
                                               a.spectrum().eigenvectors);
}

/// C* X C, re-symmetrized. C may be rectangular (rows == dim X).
inline HermitianMatrix congruence(const CMatrix& c, const HermitianMatrix& x) {
  if (c.rows() != x.dim()) throw ShapeError("congruence: C rows must equal dim X");
  return HermitianMatrix(c.adjoint() * x.matrix() * c);
}

struct LoewnerComparison {
  bool holds = false;
  /// Smallest eigenvalue of B - A.
  double margin = 0.0;
  /// tol * max(1, ||A||_2, ||B||_2): holds iff margin >= -scale.
  double scale = 0.0;
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
};

/// A <= B in the Loewner order, up to a relative tolerance.
inline LoewnerComparison loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                                     double tol = kLoewnerTol) {
  if (a.dim() != b.dim()) throw ShapeError("loewner_leq: dimension mismatch");
  if (!(tol >= 0.0)) throw PreconditionError("loewner_leq: tol must be >= 0");
  LoewnerComparison r;
  r.margin = lambda_min(b - a);
  r.lhs_norm = spectral_norm(a);
  r.rhs_norm = spectral_norm(b);
  r.scale = tol * std::max({1.0, r.lhs_norm, r.rhs_norm});
  r.holds = r.margin >= -r.scale;
  return r;
}

struct SandwichBounds {
  double m = 0.0;
  double M = 0.0;
};

/// Tightest m, M with m A <= B <= M A: the extreme eigenvalues of A^{-1/2} B A^{-1/2}.
inline SandwichBounds sandwich_bounds(const PositiveDefiniteMatrix& a,
                                      const PositiveDefiniteMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("sandwich_bounds: dimension mismatch");
  const auto hp = half_powers(a);
  const auto s = eig(congruence(hp.inv_sqrt.matrix(), b));
  return {s.lambda_min(), s.lambda_max()};
}

inline double relative_frobenius_error(const CMatrix& x, const CMatrix& reference) {
  return (x - reference).norm() / std::max(1.0, reference.norm());
}

}  // namespace opent

#endif  // OPENT_MATCORE_HPP

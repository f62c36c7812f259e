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

// Seeded random source. std::mt19937_64 is fully specified by the standard;
// the distributions layered on top are written out here because the
// <random> distributions are implementation-defined, and reports must be
// byte-identical across standard libraries.

#ifndef OPENT_RANDOM_HPP
#define OPENT_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

#include "opent/matcore.hpp"

namespace opent {

/// splitmix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) noexcept {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (auto p : parts) h = mix_seed(h ^ mix_seed(p));
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  Complex complex_normal() { return {normal() * std::numbers::sqrt2 / 2, normal() * std::numbers::sqrt2 / 2}; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// rows x cols matrix of iid standard complex Gaussians.
inline CMatrix random_ginibre(Rng& rng, int rows, int cols) {
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

/// Random Hermitian matrix with Gaussian entries (GUE-like).
inline HermitianMatrix random_hermitian(Rng& rng, int n) {
  return HermitianMatrix(random_ginibre(rng, n, n));
}

/// G G* / n + floor I with G Ginibre; well conditioned for floor ~ 0.1.
inline PositiveDefiniteMatrix random_pd(Rng& rng, int n, double floor = 0.1) {
  const CMatrix g = random_ginibre(rng, n, n);
  return PositiveDefiniteMatrix(
      HermitianMatrix(g * g.adjoint() / static_cast<double>(n) + floor * CMatrix::Identity(n, n)));
}

/// Diagonal PD matrix with entries uniform in [lo, hi].
inline PositiveDefiniteMatrix random_diagonal_pd(Rng& rng, int n, double lo = 0.1,
                                                 double hi = 1.1) {
  RVector d(n);
  for (int i = 0; i < n; ++i) d(i) = rng.uniform(lo, hi);
  return PositiveDefiniteMatrix::from_spectrum(d, CMatrix::Identity(n, n));
}

/// Haar-ish random unitary from the QR factor of a Ginibre matrix.
inline CMatrix random_unitary(Rng& rng, int n) {
  const CMatrix g = random_ginibre(rng, n, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

}  // namespace opent

#endif  // OPENT_RANDOM_HPP

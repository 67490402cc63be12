#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "opgraph/matrix.hpp"

namespace opgraph {

// Deterministic random source. mt19937_64 plus an explicit Box-Muller keeps
// every draw identical across platforms and standard-library versions, which
// the byte-identical-report contract of the CLI depends on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in (0, 1].
  double uniform01() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Standard complex normal with E|z|^2 = 1.
  Complex cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re * M_SQRT1_2, im * M_SQRT1_2);
  }

  CMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cgaussian();
    return m;
  }

  CVector unit_vector(Eigen::Index n) {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cgaussian();
    return v / v.norm();
  }

  // Haar-flavored unitary: Gram-Schmidt on Gaussian columns.
  CMatrix unitary(Eigen::Index n) {
    CMatrix a = gaussian_matrix(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index k = 0; k < j; ++k)
          a.col(j) -= a.col(k).dot(a.col(j)) * a.col(k);
      a.col(j) /= a.col(j).norm();
    }
    return a;
  }

  // Orthogonal projection of the given rank.
  CMatrix projection(Eigen::Index n, Eigen::Index rank) {
    CMatrix u = unitary(n);
    return u.leftCols(rank) * u.leftCols(rank).adjoint();
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace opgraph

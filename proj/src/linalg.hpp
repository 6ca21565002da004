#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace rizoro {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline MatrixXd symmetrize(const MatrixXd& m) { return 0.5 * (m + m.transpose()); }

inline double min_eigenvalue(const MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Symmetric within floating-point tolerance and no eigenvalue below
// -1e-10 * (1 + ||M||_F).
inline bool is_symmetric_psd(const MatrixXd& m, double* min_eig = nullptr) {
  if (m.rows() != m.cols()) return false;
  const double scale = 1.0 + m.norm();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) return false;
  const double lam = min_eigenvalue(symmetrize(m));
  if (min_eig) *min_eig = lam;
  return lam >= -1e-10 * scale;
}

// Symmetric square root with negative eigenvalues clamped to zero.
inline MatrixXd psd_sqrt(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(symmetrize(m));
  VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

inline bool all_finite(const VectorXd& v) { return v.allFinite(); }
inline bool all_finite(const MatrixXd& m) { return m.allFinite(); }

// Deterministic random stream. The raw engine output is standardized, and all
// transformations are done by hand so streams are reproducible across
// standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  VectorXd normal_vec(int n) {
    VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  // Uniform on the unit sphere S^{n-1}.
  VectorXd unit_sphere(int n) {
    VectorXd v = normal_vec(n);
    double nrm = v.norm();
    while (nrm < 1e-300) {
      v = normal_vec(n);
      nrm = v.norm();
    }
    return v / nrm;
  }

  // Uniform in the closed unit ball.
  VectorXd unit_ball(int n) {
    const VectorXd dir = unit_sphere(n);
    const double r = std::pow(uniform01(), 1.0 / n);
    return r * dir;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rizoro

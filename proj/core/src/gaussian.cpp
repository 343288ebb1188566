#include "cvqt/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace cvqt {

SqueezingParams::SqueezingParams(double r_, double phi_) : r(r_), phi(phi_) {
  if (!std::isfinite(r) || r < 0.0)
    throw std::invalid_argument("SqueezingParams: r must be finite and >= 0");
  if (!std::isfinite(phi)) throw std::invalid_argument("SqueezingParams: phi must be finite");
  phi = std::remainder(phi, 2.0 * M_PI);
  if (phi <= -M_PI) phi += 2.0 * M_PI;
}

const Eigen::Matrix4d& symplectic_form() {
  static const Eigen::Matrix4d J = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    m(2, 3) = 1.0;
    m(3, 2) = -1.0;
    return m;
  }();
  return J;
}

GaussianState::GaussianState(const Eigen::Matrix4d& cov) : covariance(cov) {
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("GaussianState: covariance must be symmetric");
  Eigen::Matrix4cd test = cov.cast<std::complex<double>>();
  test += std::complex<double>(0.0, 1.0) * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(test);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("GaussianState: gamma + iJ must be positive semidefinite");
}

GaussianState covariance_from_squeezing(const SqueezingParams& p) {
  double c = std::cosh(2.0 * p.r);
  double sc = std::sinh(2.0 * p.r) * std::cos(2.0 * p.phi);
  double ss = std::sinh(2.0 * p.r) * std::sin(2.0 * p.phi);
  Eigen::Matrix4d g;
  g << c, 0.0, sc, -ss,
       0.0, c, -ss, -sc,
       sc, -ss, c, 0.0,
       -ss, -sc, 0.0, c;
  return GaussianState(g);
}

double characteristic_function(const GaussianState& s, const PhasePoint& xi) {
  return std::exp(-0.25 * xi.dot(s.covariance * xi));
}

double wigner_gaussian(const GaussianState& s, const PhasePoint& x) {
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(s.covariance,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  double smin = svd.singularValues().minCoeff();
  double smax = svd.singularValues().maxCoeff();
  if (!(smin > 0.0) || smax / smin > 1e12)
    throw std::invalid_argument("wigner_gaussian: singular covariance");
  double det = s.covariance.determinant();
  Eigen::Vector4d sol = svd.solve(x);
  return std::exp(-x.dot(sol)) / (M_PI * M_PI * std::sqrt(det));
}

double wigner_tmss_explicit(const SqueezingParams& p, double k, double q_k,
                            double pi_k, double q_mk, double pi_mk) {
  if (!(k > 0.0)) throw std::invalid_argument("wigner_tmss_explicit: k must be positive");
  double c = std::cosh(2.0 * p.r);
  double sc = std::sinh(2.0 * p.r) * std::cos(2.0 * p.phi);
  double ss = std::sinh(2.0 * p.r) * std::sin(2.0 * p.phi);
  double quad = c * (k * q_k * q_k + pi_k * pi_k / k + k * q_mk * q_mk + pi_mk * pi_mk / k);
  // Cross terms pair q with the opposite mode's variables: the q-q/pi-pi
  // couplings carry cos 2phi, the q-pi couplings carry sin 2phi.
  quad -= 2.0 * sc * (k * q_k * q_mk - pi_k * pi_mk / k);
  quad += 2.0 * ss * (q_k * pi_mk + pi_k * q_mk);
  return std::exp(-quad) / (M_PI * M_PI);
}

Eigen::Matrix4cd second_moments(const GaussianState& s) {
  Eigen::Matrix4cd m = 0.5 * s.covariance.cast<std::complex<double>>();
  m += std::complex<double>(0.0, 0.5) * symplectic_form().cast<std::complex<double>>();
  return m;
}

std::pair<double, double> onemode_dispersions(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("onemode_dispersions: R must be positive");
  return {1.0 / (2.0 * R * R), R * R / 2.0};
}

double twomode_marginal_dispersion(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("twomode_marginal_dispersion: R must be positive");
  return (1.0 + R * R * R * R) / (4.0 * R * R);
}

double squeezing_db(double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("squeezing_db: r must be >= 0");
  return 20.0 * r / std::log(10.0);
}

}  // namespace cvqt

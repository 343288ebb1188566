#pragma once

#include <Eigen/Dense>
#include <utility>

namespace cvqt {

// Gaussian-state core for one (k, -k) mode pair.  Phase-space ordering is
// the dimensionless vector (sqrt(k) q_k, pi_k/sqrt(k), sqrt(k) q_-k,
// pi_-k/sqrt(k)) throughout, which removes k from everything below.

using PhasePoint = Eigen::Vector4d;

struct SqueezingParams {
  double r;    // squeezing magnitude, >= 0
  double phi;  // squeezing angle, reduced to (-pi, pi]

  SqueezingParams(double r_, double phi_);
};

// Block-diagonal symplectic form with 2x2 blocks [[0,1],[-1,0]].
const Eigen::Matrix4d& symplectic_form();

// Covariance matrix gamma of a zero-mean Gaussian state; the characteristic
// function is exp(-xi^T gamma xi / 4).
struct GaussianState {
  Eigen::Matrix4d covariance;

  // Validates symmetry (1e-12) and the uncertainty relation
  // gamma + iJ >= 0 (eigenvalues >= -1e-10); throws std::invalid_argument.
  explicit GaussianState(const Eigen::Matrix4d& cov);
};

// Two-mode squeezed vacuum covariance: diagonal cosh 2r, q-q cross block
// +sinh 2r cos 2phi, pi-pi cross block -sinh 2r cos 2phi, q-pi cross
// entries -sinh 2r sin 2phi.
GaussianState covariance_from_squeezing(const SqueezingParams& p);

// exp(-xi^T gamma xi / 4), in (0, 1].
double characteristic_function(const GaussianState& s, const PhasePoint& xi);

// W(x) = exp(-x^T gamma^{-1} x) / (pi^2 sqrt(det gamma)).  Throws
// std::invalid_argument for singular or badly conditioned covariance.
double wigner_gaussian(const GaussianState& s, const PhasePoint& x);

// The same two-mode squeezed Wigner function written out explicitly in the
// physical variables (q_k, pi_k, q_-k, pi_-k) at wavenumber k > 0.
double wigner_tmss_explicit(const SqueezingParams& p, double k, double q_k,
                            double pi_k, double q_mk, double pi_mk);

// <R_i R_j> = gamma_ij/2 + i J_ij/2.
Eigen::Matrix4cd second_moments(const GaussianState& s);

// One-mode squeezed vacuum dispersions (<dq^2>, <dpi^2>) = (1/(2R^2), R^2/2)
// for squeezing factor R = e^r; the product saturates Heisenberg at 1/4.
std::pair<double, double> onemode_dispersions(double R);

// Per-mode position dispersion of the two-mode squeezed vacuum,
// (1 + R^4)/(4 R^2); >= 1/2 with equality only at R = 1.
double twomode_marginal_dispersion(double R);

// Squeezing expressed in decibel: 20 r / ln 10.
double squeezing_db(double r);

}  // namespace cvqt

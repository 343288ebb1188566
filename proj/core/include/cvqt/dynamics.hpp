#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cvqt/gaussian.hpp"
#include "cvqt/numerics.hpp"

namespace cvqt {

// Power-law background a ~ (-eta)^(1+beta) on a conformal-time window
// eta_ini < eta_end < 0. z_norm rescales z at fixed z''/z; it drops out of
// the mode equation and enters the curvature spectrum as 1/z_norm^2.
struct BackgroundModel {
  double beta;
  double eta_ini;
  double eta_end;
  double z_norm = 1.0;

  BackgroundModel(double beta_, double eta_ini_, double eta_end_,
                  double z_norm_ = 1.0);

  double coupling(double eta) const;  // z'/z = (1+beta)/eta
};

struct BogoliubovPair {
  std::complex<double> u;
  std::complex<double> v;
};

struct BogoliubovTrajectory {
  BogoliubovTrajectory(OdeSolution sol);
  BogoliubovPair at(double eta) const;
  BogoliubovPair final() const;
  const OdeSolution& solution() const { return sol_; }

 private:
  OdeSolution sol_;
};

struct ModeRecord {
  double k;
  double zeta_mod2;
  SqueezingParams squeeze;
};

struct SpectrumPoint {
  double k;
  double power;
  bool super_hubble;  // k|eta_end| < 1 held at the end of the run
};

struct SpectrumFit {
  std::vector<SpectrumPoint> points;
  double spectral_index;  // n_s, from the least-squares slope n_s - 1
};

BogoliubovTrajectory evolve_bogoliubov(const BackgroundModel& bg, double k,
                                       double tol);

SqueezingParams squeezing_from_bogoliubov(const BogoliubovPair& b);

ModeRecord mode_function(const BackgroundModel& bg, double k);

SpectrumFit power_spectrum(const BackgroundModel& bg,
                           const std::vector<double>& k_list);

SqueezingParams inverted_oscillator_state(double omega, double t);

std::complex<double> onemode_wavefunction(double r, double q);

double wkb_quality(double r);

double onemode_wigner(double r, double q, double p);

double delta_eps_representation(double r, double q, double p);

}  // namespace cvqt

#pragma once

#include <vector>

namespace cvqt {

// Superposition of two Gaussian packets at +-q0 with momentum offset p0.
struct CatParams {
  double q0;
  double p0;
  double m = 1.0;
  double omega = 1.0;

  CatParams(double q0_, double p0_, double m_ = 1.0, double omega_ = 1.0);
  double norm_sq() const;  // N^2 = [1 + e^{-m w q0^2} cos(2 q0 p0)]^{-1}
};

// Regularized EPR pair: center-of-mass width b, relative width eps.
struct EprParams {
  double b;
  double eps;
  double q0;

  EprParams(double b_, double eps_, double q0_);
};

// Bell's quartic wavepacket with the normalization constant treated as an
// opaque positive number, reproducing the letter's pipeline.
struct BellStateParams {
  double a = 1.0;
  double q0 = 0.0;
  double n_bell_sq = 1.0;

  BellStateParams(double a_, double q0_, double n_bell_sq_);
};

struct JohansenParams {
  double q0;
  double p0;
  double s;
  double K;

  JohansenParams(double q0_, double p0_, double s_, double K_);
};

// Measurement times; they play the role of the CHSH polarizer settings.
struct TimeSettings {
  double t1;
  double t2;
  double t1p;
  double t2p;
};

struct WignerMinimum {
  double value;
  double q;
  double p;
};

struct JohansenComboRow {
  double x;
  double naive_combo;    // [3 F(x) - F(3x)] / K
  double correct_combo;  // [F(-x) + 2 F(x) - F(3x)] / K
  double two_minus_b_over_k;
};

double cat_wigner(const CatParams& c, double q, double p);
WignerMinimum cat_negativity(const CatParams& c);

double epr_wigner(const EprParams& e, double q1, double q2, double p1, double p2);
double epr_correlator(const EprParams& e, double t1, double t2);
double epr_bell(const EprParams& e, const TimeSettings& ts);

double bell_correlator(const BellStateParams& bp, double t1, double t2);
double bell_chsh(const BellStateParams& bp, double x);
double bell_chsh_reduced(const BellStateParams& bp, double x);  // (2 - B)/N^2
double bell_violation_threshold(const BellStateParams& bp);

double johansen_wigner(const JohansenParams& j, double q1, double q2, double p1,
                       double p2);
// Value on the p1 + p2 = 0 slice of the s -> 0 limit form, with the Dirac
// factor stripped and the prefactor constant taken from j.K.
double johansen_wigner_reduced(const JohansenParams& j, double q1, double q2,
                               double p1);
double johansen_correlator(const JohansenParams& j, double t1, double t2);
std::vector<JohansenComboRow> johansen_combinations(const JohansenParams& j,
                                                    const std::vector<double>& x_grid);

double normalized_bell_wigner(double a, double b, double q0, double q1, double q2,
                              double p1, double p2);

double wkb_wigner_naive(double r, double q, double p);

double berry_wigner_ho(int n, double q, double p);

}  // namespace cvqt

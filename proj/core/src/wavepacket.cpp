#include "cvqt/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cvqt/dynamics.hpp"
#include "cvqt/numerics.hpp"

namespace cvqt {

CatParams::CatParams(double q0_, double p0_, double m_, double omega_)
    : q0(q0_), p0(p0_), m(m_), omega(omega_) {
  if (!(m > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("CatParams: m and omega must be positive");
  if (!(norm_sq() > 0.0) || !std::isfinite(norm_sq()))
    throw std::invalid_argument("CatParams: degenerate normalization");
}

double CatParams::norm_sq() const {
  return 1.0 / (1.0 + std::exp(-m * omega * q0 * q0) * std::cos(2.0 * q0 * p0));
}

EprParams::EprParams(double b_, double eps_, double q0_) : b(b_), eps(eps_), q0(q0_) {
  if (!(b > 0.0) || !(eps > 0.0))
    throw std::invalid_argument("EprParams: widths must be positive");
  if (b <= eps)
    std::fprintf(stderr,
                 "EprParams: b = %g <= eps = %g; the center-of-mass envelope is "
                 "narrower than the relative one\n",
                 b, eps);
}

BellStateParams::BellStateParams(double a_, double q0_, double n_bell_sq_)
    : a(a_), q0(q0_), n_bell_sq(n_bell_sq_) {
  if (!(a > 0.0)) throw std::invalid_argument("BellStateParams: a must be positive");
  if (!(n_bell_sq > 0.0))
    throw std::invalid_argument("BellStateParams: n_bell_sq must be positive");
}

JohansenParams::JohansenParams(double q0_, double p0_, double s_, double K_)
    : q0(q0_), p0(p0_), s(s_), K(K_) {
  if (!(s > 0.0) || !(K > 0.0) || !std::isfinite(s) || !std::isfinite(K))
    throw std::invalid_argument("JohansenParams: s and K must be positive and finite");
}

double cat_wigner(const CatParams& c, double q, double p) {
  double mw = c.m * c.omega;
  double n2 = c.norm_sq();
  double dp = p - c.p0;
  double bump_plus = std::exp(-mw * (q + c.q0) * (q + c.q0) - dp * dp / mw);
  double bump_minus = std::exp(-mw * (q - c.q0) * (q - c.q0) - dp * dp / mw);
  double interference =
      2.0 * std::cos(2.0 * p * c.q0) * std::exp(-mw * q * q - dp * dp / mw);
  return n2 / (2.0 * M_PI) * (bump_plus + bump_minus + interference);
}

WignerMinimum cat_negativity(const CatParams& c) {
  double sq = 1.0 / std::sqrt(c.m * c.omega);  // position width of one packet
  double sp = std::sqrt(c.m * c.omega);
  double q_span = std::abs(c.q0) + 4.0 * sq;
  // The interference term oscillates in p with period pi/q0, so the p window
  // must cover at least one full fringe beyond the packet width.
  double fringe = c.q0 != 0.0 ? 2.0 * M_PI / std::abs(c.q0) : 0.0;
  double p_span = 4.0 * sp + fringe;
  const int n = 241;
  WignerMinimum best{1e300, 0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    double q = -q_span + 2.0 * q_span * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      double p = c.p0 - p_span + 2.0 * p_span * j / (n - 1);
      double w = cat_wigner(c, q, p);
      if (w < best.value) best = {w, q, p};
    }
  }
  auto objective = [&c](const std::vector<double>& x) {
    return cat_wigner(c, x[0], x[1]);
  };
  SimplexResult res = nelder_mead(objective, {best.q, best.p},
                                  0.05 * std::max(sq, sp), 1e-10, 1e-14);
  if (res.value < best.value) best = {res.value, res.x[0], res.x[1]};
  return best;
}

double epr_wigner(const EprParams& e, double q1, double q2, double p1, double p2) {
  double sp = p1 + p2;
  double sq = q1 + q2;
  double dp = p1 - p2;
  double dq = q1 - q2 + e.q0;
  double com = -e.b * e.b * sp * sp / 4.0 - sq * sq / (e.b * e.b);
  double rel = -e.eps * e.eps * dp * dp / 8.0 - 2.0 * dq * dq / (e.eps * e.eps);
  return std::exp(com + rel) / (M_PI * M_PI);
}

namespace {

// Momentum covariance of the time-sheared EPR state, entering the p1, p2
// Gaussian integral of the two-time distribution rho.
void epr_quadratic_form(const EprParams& e, double t1, double t2, double& a11,
                        double& a12, double& a22, double& det) {
  double cb = 2.0 / (e.b * e.b);
  double ce = 4.0 / (e.eps * e.eps);
  a11 = e.b * e.b / 2.0 + e.eps * e.eps / 4.0 + (cb + ce) * t1 * t1;
  a22 = e.b * e.b / 2.0 + e.eps * e.eps / 4.0 + (cb + ce) * t2 * t2;
  a12 = e.b * e.b / 2.0 - e.eps * e.eps / 4.0 + (cb - ce) * t1 * t2;
  det = a11 * a22 - a12 * a12;
}

}  // namespace

double epr_correlator(const EprParams& e, double t1, double t2) {
  double a11, a12, a22, det;
  epr_quadratic_form(e, t1, t2, a11, a12, a22, det);
  if (!(det > 0.0)) throw std::runtime_error("epr_correlator: degenerate form");
  return 2.0 / M_PI * std::atan(a12 / std::sqrt(det));
}

double epr_bell(const EprParams& e, const TimeSettings& ts) {
  return epr_correlator(e, ts.t1, ts.t2) + epr_correlator(e, ts.t1, ts.t2p) +
         epr_correlator(e, ts.t1p, ts.t2) - epr_correlator(e, ts.t1p, ts.t2p);
}

namespace {

double bell_f(const BellStateParams& bp, double tau) {
  return 5.0 * bp.n_bell_sq * (tau * tau + 0.4) / std::sqrt(1.0 + tau * tau);
}

}  // namespace

double bell_correlator(const BellStateParams& bp, double t1, double t2) {
  return 1.0 - bell_f(bp, t1 + t2);
}

double bell_chsh(const BellStateParams& bp, double x) {
  // B(-2x, x, 0, 3x); the time pairs reduce to F at -x, x, x, 3x and F is
  // even, so B = 2 - [3F(x) - F(3x)].
  return 2.0 - (3.0 * bell_f(bp, x) - bell_f(bp, 3.0 * x));
}

double bell_chsh_reduced(const BellStateParams& bp, double x) {
  return (2.0 - bell_chsh(bp, x)) / bp.n_bell_sq;
}

double bell_violation_threshold(const BellStateParams& bp) {
  auto g = [&bp](double x) { return bell_chsh_reduced(bp, x); };
  double lo = 0.5, hi = 1.5;
  double glo = g(lo), ghi = g(hi);
  if (!(glo > 0.0) || !(ghi < 0.0))
    throw std::runtime_error("bell_violation_threshold: no sign change in [0.5, 1.5]");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if (gm > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-14) break;
  }
  return 0.5 * (lo + hi);
}

double johansen_wigner(const JohansenParams& j, double q1, double q2, double p1,
                       double p2) {
  double dq = (q1 - q2) / std::sqrt(2.0) - j.q0;
  double dp = (p1 - p2) / std::sqrt(2.0) - j.p0;
  double sq = q1 + q2;
  double sp = p1 + p2;
  return std::exp(-dq * dq - dp * dp - j.s * j.s * sq * sq / 2.0 -
                  sp * sp / (2.0 * j.s * j.s)) /
         (M_PI * M_PI);
}

double johansen_wigner_reduced(const JohansenParams& j, double q1, double q2,
                               double p1) {
  double dq = (q1 - q2) / std::sqrt(2.0) - j.q0;
  double dp = std::sqrt(2.0) * p1 - j.p0;
  return j.K / M_PI * std::exp(-dq * dq - dp * dp);
}

namespace {

double johansen_f(const JohansenParams& j, double tau) {
  double q0t = j.q0 + j.p0 * tau;
  double w = std::sqrt(1.0 + tau * tau);
  return 2.0 * std::sqrt(2.0) * j.K *
         (w / std::sqrt(M_PI) * std::exp(-q0t * q0t / (w * w)) +
          q0t * erf(q0t / w));
}

}  // namespace

double johansen_correlator(const JohansenParams& j, double t1, double t2) {
  return 1.0 - johansen_f(j, 0.5 * (t1 + t2));
}

std::vector<JohansenComboRow> johansen_combinations(const JohansenParams& j,
                                                    const std::vector<double>& x_grid) {
  std::vector<JohansenComboRow> rows;
  rows.reserve(x_grid.size());
  for (double x : x_grid) {
    double f_m = johansen_f(j, -x);
    double f_1 = johansen_f(j, x);
    double f_3 = johansen_f(j, 3.0 * x);
    // This family averages the two times, so reaching correlator arguments
    // (-x, x, x, 3x) takes settings twice the letter's (-2x, x, 0, 3x).
    TimeSettings ts{-4.0 * x, 2.0 * x, 0.0, 6.0 * x};
    double b = johansen_correlator(j, ts.t1, ts.t2) +
               johansen_correlator(j, ts.t1, ts.t2p) +
               johansen_correlator(j, ts.t1p, ts.t2) -
               johansen_correlator(j, ts.t1p, ts.t2p);
    rows.push_back({x, (3.0 * f_1 - f_3) / j.K, (f_m + 2.0 * f_1 - f_3) / j.K,
                    (2.0 - b) / j.K});
  }
  return rows;
}

double normalized_bell_wigner(double a, double b, double q0, double q1, double q2,
                              double p1, double p2) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("normalized_bell_wigner: a and b must be positive");
  double sp = p1 + p2;
  double sq = q1 + q2;
  double u = (q1 - q2 + q0) / a;
  double v = a * (p1 - p2) / 2.0;
  double gauss = std::exp(-b * b * sp * sp / 4.0 - sq * sq / (b * b) - u * u - v * v);
  double uu = u * u;
  double vv = v * v;
  double bracket = 2.75 + (uu + vv) * (uu + vv) + vv - 5.0 * uu;
  return 4.0 / (11.0 * M_PI * M_PI) * gauss * bracket;
}

double wkb_wigner_naive(double r, double q, double p) {
  return delta_eps_representation(r, q, p);
}

double berry_wigner_ho(int n, double q, double p) {
  if (n < 1 || n > 30)
    throw std::invalid_argument("berry_wigner_ho: n must be in [1, 30]");
  double r2 = 2.0 * n + 1.0;
  double radius = std::sqrt(r2);
  double d = std::sqrt(q * q + p * p);
  if (d > radius - 0.1)
    throw std::domain_error("berry_wigner_ho: point outside the allowed region");
  if (d < 1e-9)
    throw std::domain_error("berry_wigner_ho: chord construction degenerates at the center");
  // Chord through (q, p) perpendicular to the radius; its endpoints sit on
  // the energy circle at distance h, and the enclosed area between chord
  // and arc is the circular segment.
  double h = std::sqrt(r2 - d * d);
  double area = r2 * std::acos(d / radius) - d * h;
  double hbar_arg = std::pow(1.5 * area, 1.0 / 6.0);
  double ai = airy_ai(-std::pow(1.5 * area, 2.0 / 3.0));
  return std::sqrt(2.0) / M_PI * hbar_arg / std::sqrt(2.0 * h * d) * ai;
}

}  // namespace cvqt

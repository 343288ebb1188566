#include "cvqt/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace cvqt {

BackgroundModel::BackgroundModel(double beta_, double eta_ini_, double eta_end_,
                                 double z_norm_)
    : beta(beta_), eta_ini(eta_ini_), eta_end(eta_end_), z_norm(z_norm_) {
  if (!(eta_ini < 0.0) || !(eta_end < 0.0))
    throw std::invalid_argument("BackgroundModel: conformal times must be negative");
  if (!(eta_end > eta_ini))
    throw std::invalid_argument("BackgroundModel: eta_end must exceed eta_ini");
  if (!(z_norm > 0.0))
    throw std::invalid_argument("BackgroundModel: z_norm must be positive");
}

double BackgroundModel::coupling(double eta) const {
  return (1.0 + beta) / eta;
}

BogoliubovTrajectory::BogoliubovTrajectory(OdeSolution sol) : sol_(std::move(sol)) {}

BogoliubovPair BogoliubovTrajectory::at(double eta) const {
  std::vector<double> y = sol_.sample(eta);
  return {{y[0], y[1]}, {y[2], y[3]}};
}

BogoliubovPair BogoliubovTrajectory::final() const {
  return at(sol_.times().back());
}

BogoliubovTrajectory evolve_bogoliubov(const BackgroundModel& bg, double k,
                                       double tol) {
  if (!(k > 0.0)) throw std::invalid_argument("evolve_bogoliubov: k must be positive");
  if (!(tol > 0.0) || tol > 1e-8)
    throw std::invalid_argument("evolve_bogoliubov: tol must be in (0, 1e-8]");
  OdeProblem p;
  p.dimension = 4;
  p.t0 = bg.eta_ini;
  p.t1 = bg.eta_end;
  // u' = -ik u + (z'/z) v*, v' = -ik v + (z'/z) u*, unpacked over
  // y = (Re u, Im u, Re v, Im v).
  p.rhs = [&bg, k](double eta, const std::vector<double>& y,
                   std::vector<double>& dy) {
    double g = bg.coupling(eta);
    dy[0] = k * y[1] + g * y[2];
    dy[1] = -k * y[0] - g * y[3];
    dy[2] = k * y[3] + g * y[0];
    dy[3] = -k * y[2] - g * y[1];
  };
  p.initial = {1.0, 0.0, 0.0, 0.0};
  return BogoliubovTrajectory(integrate_ode(p, tol, tol));
}

SqueezingParams squeezing_from_bogoliubov(const BogoliubovPair& b) {
  double r = std::asinh(std::abs(b.v));
  double phi = 0.0;
  if (std::abs(b.v) > 0.0)
    phi = -0.5 * (std::arg(b.u) + std::arg(b.v));
  return SqueezingParams(r, phi);
}

ModeRecord mode_function(const BackgroundModel& bg, double k) {
  BogoliubovTrajectory traj = evolve_bogoliubov(bg, k, 1e-10);
  BogoliubovPair b = traj.final();
  // z zeta_k = (u + v*)/sqrt(2k); the record stores |zeta_k|^2 at eta_end.
  std::complex<double> zzeta = (b.u + std::conj(b.v)) / std::sqrt(2.0 * k);
  double z_end = bg.z_norm * std::pow(-bg.eta_end, 1.0 + bg.beta);
  double zeta_mod2 = std::norm(zzeta) / (z_end * z_end);
  return {k, zeta_mod2, squeezing_from_bogoliubov(b)};
}

SpectrumFit power_spectrum(const BackgroundModel& bg,
                           const std::vector<double>& k_list) {
  if (k_list.size() < 2)
    throw std::invalid_argument("power_spectrum: need at least two modes");
  SpectrumFit fit;
  fit.points.reserve(k_list.size());
  for (double k : k_list) {
    ModeRecord rec = mode_function(bg, k);
    double pk = k * k * k * rec.zeta_mod2 / (2.0 * M_PI * M_PI);
    bool outside = k * std::abs(bg.eta_end) < 1.0;
    fit.points.push_back({k, pk, outside});
  }
  // Least-squares slope of ln P against ln k gives n_s - 1.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& pt : fit.points) {
    double x = std::log(pt.k);
    double y = std::log(pt.power);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.spectral_index = 1.0 + slope;
  return fit;
}

SqueezingParams inverted_oscillator_state(double omega, double t) {
  if (t < 0.0) throw std::invalid_argument("inverted_oscillator_state: t must be >= 0");
  return SqueezingParams(omega * t, -M_PI / 4.0);
}

std::complex<double> onemode_wavefunction(double r, double q) {
  if (r < 0.0) throw std::invalid_argument("onemode_wavefunction: r must be >= 0");
  double c2 = std::cosh(2.0 * r);
  double amp = std::pow(M_PI * c2, -0.25) * std::exp(-q * q / (2.0 * c2));
  double phase = 0.5 * q * q * std::tanh(2.0 * r) - 0.5 * std::atan(std::tanh(r));
  return std::polar(amp, phase);
}

double wkb_quality(double r) {
  if (r < 0.0) throw std::invalid_argument("wkb_quality: r must be >= 0");
  return std::sinh(2.0 * r);
}

double onemode_wigner(double r, double q, double p) {
  if (r < 0.0) throw std::invalid_argument("onemode_wigner: r must be >= 0");
  double c2 = std::cosh(2.0 * r);
  double ridge = p - q * std::tanh(2.0 * r);
  return std::exp(-q * q / c2 - c2 * ridge * ridge) / M_PI;
}

double delta_eps_representation(double r, double q, double p) {
  if (r < 0.0) throw std::invalid_argument("delta_eps_representation: r must be >= 0");
  double c2 = std::cosh(2.0 * r);
  // |C(q)|^2 is the position density, and the momentum spread around the
  // classical ridge p = q tanh 2r is carried by a mollified Dirac function
  // of width eps = 1/(4 cosh 2r). For the quadratic phase this is exact.
  double density = std::exp(-q * q / c2) / std::sqrt(M_PI * c2);
  double eps = 0.25 / c2;
  double x = p - q * std::tanh(2.0 * r);
  double delta = std::exp(-x * x / (4.0 * eps)) / (2.0 * std::sqrt(M_PI * eps));
  return density * delta;
}

}  // namespace cvqt

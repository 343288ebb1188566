#include "cvqt/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cvqt/numerics.hpp"

namespace cvqt {

OperatorMatrix annihilation_matrix(int N) {
  if (N < 1) throw std::invalid_argument("annihilation_matrix: N must be >= 1");
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  for (int n = 1; n <= N; ++n) c(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {c, false};
}

std::pair<OperatorMatrix, OperatorMatrix> position_momentum_matrices(int N) {
  OperatorMatrix c = annihilation_matrix(N);
  Eigen::MatrixXcd cd = c.entries.adjoint();
  Eigen::MatrixXcd q = (c.entries + cd) / std::sqrt(2.0);
  Eigen::MatrixXcd pi = std::complex<double>(0.0, -1.0) * (c.entries - cd) / std::sqrt(2.0);
  return {{q, true}, {pi, true}};
}

FockVector tmss_vector(const SqueezingParams& p, int N) {
  if (N < 1) throw std::invalid_argument("tmss_vector: N must be >= 1");
  double t = std::tanh(p.r);
  double tail = std::pow(t, 2.0 * (N + 1));
  if (!(tail < 1e-10)) {
    int needed = (p.r > 0.0)
                     ? static_cast<int>(std::ceil(-10.0 * std::log(10.0) /
                                                  (2.0 * std::log(t)))) : 1;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "tmss_vector: truncation too small for r = %.6g, need N >= %d", p.r, needed);
    throw std::invalid_argument(buf);
  }
  int D = N + 1;
  FockVector v;
  v.truncation = N;
  v.modes = 2;
  v.tail_bound = tail;
  v.amplitudes = Eigen::VectorXcd::Zero(D * D);
  double norm2 = 0.0;
  for (int n = 0; n <= N; ++n) {
    double mag = std::pow(t, n) / std::cosh(p.r);
    std::complex<double> a = std::polar(mag, -2.0 * n * p.phi);
    v.amplitudes(n * D + n) = a;
    norm2 += mag * mag;
  }
  v.amplitudes /= std::sqrt(norm2);
  return v;
}

int default_truncation(double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("default_truncation: r must be >= 0");
  if (r < 1e-8) return 8;
  double t = std::tanh(r);
  if (t == 1.0) return 120;  // tanh saturates in double near r ~ 19
  int N = static_cast<int>(std::ceil(-10.0 * std::log(10.0) / (2.0 * std::log(t))));
  return std::clamp(N, 8, 120);
}

std::complex<double> expectation(const FockVector& state, const OperatorMatrix& op) {
  if (op.entries.rows() != state.amplitudes.size() ||
      op.entries.cols() != state.amplitudes.size())
    throw std::invalid_argument("expectation: dimension mismatch");
  return state.amplitudes.dot(op.entries * state.amplitudes);
}

std::vector<double> partial_trace_mode(const FockVector& state) {
  if (state.modes != 2)
    throw std::invalid_argument("partial_trace_mode: two-mode state required");
  int D = state.dim_per_mode();
  std::vector<double> occ(D, 0.0);
  for (int n = 0; n < D; ++n)
    for (int m = 0; m < D; ++m) occ[n] += std::norm(state.amplitudes(n * D + m));
  return occ;
}

double hermite_wavefunction(int n, double q) {
  if (n < 0 || n > 100)
    throw std::invalid_argument("hermite_wavefunction: n must be in [0, 100]");
  return hermite_wavefunction_all(n, q)[n];
}

std::vector<double> hermite_wavefunction_all(int N, double q) {
  std::vector<double> phi(N + 1);
  double g = std::exp(-0.5 * q * q) * std::pow(M_PI, -0.25);
  phi[0] = g;
  if (N == 0) return phi;
  phi[1] = std::sqrt(2.0) * q * g;
  for (int n = 1; n < N; ++n)
    phi[n + 1] = std::sqrt(2.0 / (n + 1.0)) * q * phi[n] -
                 std::sqrt(n / (n + 1.0)) * phi[n - 1];
  return phi;
}

namespace {

// Chord integral for W(q, p) on the truncated basis.  The range is limited
// to where both position arguments stay inside the support of phi_N, and
// the node density grows with |p| to resolve the e^{ipx} factor.
template <typename Kernel>
double wigner_chord_integral(int N, double q, double p, const Kernel& rho) {
  double xmax = std::sqrt(2.0 * N + 1.0) + 6.0;
  double half_range = 2.0 * (xmax - std::abs(q));
  if (half_range <= 0.0) return 0.0;
  int panels = std::max(3, static_cast<int>(std::ceil(
                               half_range * (1.0 + std::abs(p)) / 10.0)));
  const GaussRule& rule = gauss_rule(64);
  double h = 2.0 * half_range / panels;
  double acc = 0.0;
  for (int b = 0; b < panels; ++b) {
    double lo = -half_range + b * h;
    double mid = lo + 0.5 * h;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      double x = mid + 0.5 * h * rule.nodes[i];
      acc += rule.weights[i] * (rho(q - 0.5 * x, q + 0.5 * x) *
                                std::polar(1.0, p * x)).real();
    }
  }
  return acc * 0.5 * h / (2.0 * M_PI);
}

}  // namespace

double wigner_numeric(const FockVector& state, double q, double p) {
  if (state.modes != 1)
    throw std::invalid_argument("wigner_numeric: single-mode state required");
  int N = state.truncation;
  auto rho = [&](double a, double b) -> std::complex<double> {
    std::vector<double> pa = hermite_wavefunction_all(N, a);
    std::vector<double> pb = hermite_wavefunction_all(N, b);
    std::complex<double> psi_a = 0.0, psi_b = 0.0;
    for (int n = 0; n <= N; ++n) {
      psi_a += state.amplitudes(n) * pa[n];
      psi_b += state.amplitudes(n) * pb[n];
    }
    return psi_a * std::conj(psi_b);
  };
  return wigner_chord_integral(N, q, p, rho);
}

double wigner_numeric(const OperatorMatrix& density, double q, double p) {
  int D = static_cast<int>(density.entries.rows());
  if (density.entries.cols() != D)
    throw std::invalid_argument("wigner_numeric: square density matrix required");
  int N = D - 1;
  auto rho = [&](double a, double b) -> std::complex<double> {
    std::vector<double> pa = hermite_wavefunction_all(N, a);
    std::vector<double> pb = hermite_wavefunction_all(N, b);
    std::complex<double> acc = 0.0;
    for (int m = 0; m <= N; ++m) {
      if (pa[m] == 0.0) continue;
      std::complex<double> row = 0.0;
      for (int n = 0; n <= N; ++n) row += density.entries(m, n) * pb[n];
      acc += pa[m] * row;
    }
    return acc;
  };
  return wigner_chord_integral(N, q, p, rho);
}

}  // namespace cvqt

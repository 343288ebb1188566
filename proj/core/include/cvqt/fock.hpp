#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cvqt/gaussian.hpp"

namespace cvqt {

// Truncated Fock-basis oracle.  Two-mode states are stored row-major with
// the k-mode index outer: amplitude(n_k, n_-k) sits at n_k*(N+1) + n_-k.

struct FockVector {
  Eigen::VectorXcd amplitudes;
  int truncation;  // N: levels 0..N per mode
  int modes;       // 1 or 2
  double tail_bound = 0.0;  // declared weight dropped by the truncation

  int dim_per_mode() const { return truncation + 1; }
};

struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  bool hermitian = false;
};

// <n-1| c |n> = sqrt(n), single mode, truncation N >= 1.
OperatorMatrix annihilation_matrix(int N);

// q = (c + c^dag)/sqrt(2), pi = -i(c - c^dag)/sqrt(2); both Hermitian.
std::pair<OperatorMatrix, OperatorMatrix> position_momentum_matrices(int N);

// Two-mode squeezed vacuum on the truncated basis: amplitude
// e^{-2 i n phi} tanh^n r / cosh r on |n, n>, renormalized after truncation.
// Requires tanh^{2(N+1)} r < 1e-10; throws std::invalid_argument naming the
// needed truncation otherwise.
FockVector tmss_vector(const SqueezingParams& p, int N);

// Smallest N with tanh^{2(N+1)} r < 1e-10, clamped to [8, 120].
int default_truncation(double r);

// <state| op |state>.  Real within 1e-10 when op is flagged Hermitian.
std::complex<double> expectation(const FockVector& state, const OperatorMatrix& op);

// Occupancies of mode k after tracing out mode -k of a two-mode state.
std::vector<double> partial_trace_mode(const FockVector& state);

// Harmonic-oscillator eigenfunction phi_n(q), normalized recurrence
// (no explicit factorials); n <= 100.
double hermite_wavefunction(int n, double q);

// All of phi_0(q) .. phi_N(q) in one recurrence sweep.
std::vector<double> hermite_wavefunction_all(int N, double q);

// W(q, p) = (1/2pi) Int dx <q - x/2|rho|q + x/2> e^{i p x} by quadrature
// over the truncated position representation; single-mode input.
double wigner_numeric(const FockVector& state, double q, double p);
double wigner_numeric(const OperatorMatrix& density, double q, double p);

}  // namespace cvqt

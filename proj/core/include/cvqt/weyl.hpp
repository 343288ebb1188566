#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "cvqt/fock.hpp"
#include "cvqt/gaussian.hpp"

namespace cvqt {

// Weyl transforms of operator expressions in the pair variables
// (q_k, pi_k, q_-k, pi_-k), classical stochastic averages over the Wigner
// measure, and the quantum-versus-stochastic equivalence oracle.

enum class PairVariable : std::uint8_t { q_k = 0, pi_k = 1, q_mk = 2, pi_mk = 3 };

// Commutative polynomial on phase space; exponents indexed by PairVariable.
struct PhasePolynomial {
  struct Term {
    std::complex<double> coefficient;
    std::array<int, 4> exponents;
  };
  std::vector<Term> terms;

  // Sorted, merged, zero-pruned canonical form; total degree <= 8.
  static PhasePolynomial from_terms(std::vector<Term> raw);
};

// Ordered (non-commutative) operator expression: sum of coefficient times an
// ordered factor list; at most 8 factors per term.
struct OrderedOperatorExpr {
  struct Term {
    std::complex<double> coefficient;
    std::vector<PairVariable> factors;
  };
  std::vector<Term> terms;
};

// Weyl symbol of the ordered expression, built by folding factors through
// the star product (each appended factor is linear, so the fold is exact).
PhasePolynomial weyl_transform(const OrderedOperatorExpr& expr);

// Quadrature evaluation of Int dx e^{-ipx} <q + x/2| op |q - x/2> for a
// single-mode operator matrix.
std::complex<double> weyl_symbol_numeric(const OperatorMatrix& op, double q, double p);

// Ordered expansion of (z zeta_k)^n = 2^{-n} [q_k + q_-k + (i/k)(pi_k - pi_-k)]^n,
// 1 <= n <= 4.
OrderedOperatorExpr zeta_composite(int n, double k);

// Exact Gaussian moment of the polynomial over the Wigner measure with
// covariance gamma/2 (pairwise contraction; odd monomials vanish).
std::complex<double> stochastic_average(const PhasePolynomial& poly, const GaussianState& s);

// <Psi| expr |Psi> on the two-mode squeezed state via the Fock oracle, with
// the truncation chosen from r and the expression degree.
std::complex<double> quantum_average(const OrderedOperatorExpr& expr,
                                     const SqueezingParams& p);

// Draws from the Gaussian with covariance gamma/2; deterministic for fixed
// seed across platforms.
std::vector<PhasePoint> sample_wigner(const GaussianState& s, long count,
                                      std::uint64_t seed);

}  // namespace cvqt

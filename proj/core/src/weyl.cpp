#include "cvqt/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "cvqt/numerics.hpp"

namespace cvqt {

PhasePolynomial PhasePolynomial::from_terms(std::vector<Term> raw) {
  std::map<std::array<int, 4>, std::complex<double>> merged;
  for (const auto& t : raw) {
    int deg = t.exponents[0] + t.exponents[1] + t.exponents[2] + t.exponents[3];
    if (deg > 8) throw std::invalid_argument("PhasePolynomial: total degree must be <= 8");
    merged[t.exponents] += t.coefficient;
  }
  PhasePolynomial p;
  for (const auto& [e, c] : merged)
    if (std::abs(c) > 0.0) p.terms.push_back({c, e});
  return p;
}

namespace {

// J entries for the dimensionless pair variables: [q, pi] = i within each
// mode, no cross-mode commutators.
double symplectic_entry(int a, int b) {
  if (a / 2 != b / 2) return 0.0;
  if (a % 2 == 0 && b % 2 == 1) return 1.0;
  if (a % 2 == 1 && b % 2 == 0) return -1.0;
  return 0.0;
}

// poly * x_a + (i/2) sum_b d(poly)/dx_b J_{ba}: the star product with a
// linear right factor, which is exact (higher Moyal orders vanish).
void star_append(std::vector<PhasePolynomial::Term>& terms, int a) {
  std::vector<PhasePolynomial::Term> out;
  out.reserve(terms.size() * 2);
  for (const auto& t : terms) {
    auto e = t.exponents;
    ++e[a];
    out.push_back({t.coefficient, e});
    for (int b = 0; b < 4; ++b) {
      double j = symplectic_entry(b, a);
      if (j == 0.0 || t.exponents[b] == 0) continue;
      auto d = t.exponents;
      --d[b];
      out.push_back({t.coefficient * std::complex<double>(0.0, 0.5) *
                         static_cast<double>(t.exponents[b]) * j,
                     d});
    }
  }
  terms = std::move(out);
}

}  // namespace

PhasePolynomial weyl_transform(const OrderedOperatorExpr& expr) {
  std::vector<PhasePolynomial::Term> acc;
  for (const auto& term : expr.terms) {
    if (term.factors.size() > 8)
      throw std::invalid_argument("weyl_transform: factor list longer than 8");
    std::vector<PhasePolynomial::Term> t{{term.coefficient, {0, 0, 0, 0}}};
    for (PairVariable v : term.factors) star_append(t, static_cast<int>(v));
    acc.insert(acc.end(), t.begin(), t.end());
  }
  return PhasePolynomial::from_terms(std::move(acc));
}

std::complex<double> weyl_symbol_numeric(const OperatorMatrix& op, double q, double p) {
  int D = static_cast<int>(op.entries.rows());
  if (op.entries.cols() != D)
    throw std::invalid_argument("weyl_symbol_numeric: square operator required");
  int N = D - 1;
  double xmax = std::sqrt(2.0 * N + 1.0) + 6.0;
  double half_range = 2.0 * (xmax - std::abs(q));
  if (half_range <= 0.0) return 0.0;
  int panels = std::max(3, static_cast<int>(std::ceil(
                               half_range * (1.0 + std::abs(p)) / 10.0)));
  const GaussRule& rule = gauss_rule(64);
  double h = 2.0 * half_range / panels;
  std::complex<double> acc = 0.0;
  for (int b = 0; b < panels; ++b) {
    double lo = -half_range + b * h;
    double mid = lo + 0.5 * h;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      double x = mid + 0.5 * h * rule.nodes[i];
      std::vector<double> pa = hermite_wavefunction_all(N, q + 0.5 * x);
      std::vector<double> pb = hermite_wavefunction_all(N, q - 0.5 * x);
      std::complex<double> kern = 0.0;
      for (int m = 0; m <= N; ++m) {
        if (pa[m] == 0.0) continue;
        std::complex<double> row = 0.0;
        for (int n = 0; n <= N; ++n) row += op.entries(m, n) * pb[n];
        kern += pa[m] * row;
      }
      acc += rule.weights[i] * kern * std::polar(1.0, -p * x);
    }
  }
  return acc * 0.5 * h;
}

OrderedOperatorExpr zeta_composite(int n, double k) {
  if (n < 1 || n > 4) throw std::invalid_argument("zeta_composite: n must be in [1, 4]");
  if (!(k > 0.0)) throw std::invalid_argument("zeta_composite: k must be positive");
  const std::array<PairVariable, 4> sym = {PairVariable::q_k, PairVariable::q_mk,
                                           PairVariable::pi_k, PairVariable::pi_mk};
  const std::array<std::complex<double>, 4> coef = {
      std::complex<double>(0.5, 0.0), std::complex<double>(0.5, 0.0),
      std::complex<double>(0.0, 0.5 / k), std::complex<double>(0.0, -0.5 / k)};
  OrderedOperatorExpr expr;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  for (int code = 0; code < total; ++code) {
    OrderedOperatorExpr::Term t;
    t.coefficient = 1.0;
    int c = code;
    for (int pos = 0; pos < n; ++pos) {
      int pick = c % 4;
      c /= 4;
      t.coefficient *= coef[pick];
      t.factors.push_back(sym[pick]);
    }
    expr.terms.push_back(std::move(t));
  }
  return expr;
}

namespace {

// Sum over pairings of the index multiset against Sigma = gamma/2.
double isserlis(const std::vector<int>& idx, const Eigen::Matrix4d& sigma) {
  if (idx.empty()) return 1.0;
  if (idx.size() % 2 == 1) return 0.0;
  std::vector<int> rest(idx.begin() + 1, idx.end());
  double acc = 0.0;
  for (size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> next;
    next.reserve(rest.size() - 1);
    for (size_t m = 0; m < rest.size(); ++m)
      if (m != j) next.push_back(rest[m]);
    acc += sigma(idx[0], rest[j]) * isserlis(next, sigma);
  }
  return acc;
}

}  // namespace

std::complex<double> stochastic_average(const PhasePolynomial& poly,
                                        const GaussianState& s) {
  Eigen::Matrix4d sigma = 0.5 * s.covariance;
  std::complex<double> acc = 0.0;
  for (const auto& t : poly.terms) {
    std::vector<int> idx;
    for (int v = 0; v < 4; ++v)
      for (int rep = 0; rep < t.exponents[v]; ++rep) idx.push_back(v);
    acc += t.coefficient * isserlis(idx, sigma);
  }
  return acc;
}

namespace {

// Apply a single pair-variable operator (k = 1 units) to a two-mode vector.
// q and pi act bidiagonally on one mode index.
void apply_pair_operator(PairVariable v, int D, const Eigen::VectorXcd& in,
                         Eigen::VectorXcd& out) {
  out.setZero();
  bool momentum = (v == PairVariable::pi_k || v == PairVariable::pi_mk);
  bool first_mode = (v == PairVariable::q_k || v == PairVariable::pi_k);
  const std::complex<double> up =
      momentum ? std::complex<double>(0.0, 1.0 / std::sqrt(2.0))
               : std::complex<double>(1.0 / std::sqrt(2.0), 0.0);
  const std::complex<double> dn = momentum ? std::conj(up) : up;
  // up multiplies the creation part (sqrt(n+1) raising), dn the annihilation
  // part: q = (c + c^dag)/sqrt(2), pi = i(c^dag - c)/sqrt(2).
  // a runs over the acted mode's occupation, b over the spectator's
  for (int b = 0; b < D; ++b) {
    for (int a = 0; a < D; ++a) {
      std::complex<double> amp = in(first_mode ? a * D + b : b * D + a);
      if (amp == std::complex<double>(0.0, 0.0)) continue;
      if (a + 1 < D) {
        int target = first_mode ? (a + 1) * D + b : b * D + (a + 1);
        out(target) += up * std::sqrt(a + 1.0) * amp;
      }
      if (a >= 1) {
        int target = first_mode ? (a - 1) * D + b : b * D + (a - 1);
        out(target) += dn * std::sqrt(static_cast<double>(a)) * amp;
      }
    }
  }
}

int quantum_truncation(double r, int degree) {
  if (r < 1e-8) return 16 + 2 * degree;
  double t2 = std::tanh(r) * std::tanh(r);
  int N = 16;
  while (N < 4000) {
    double tail = std::pow(t2, N) * std::pow(2.0 * N + 1.0, degree);
    if (tail < 1e-12) break;
    N += 8;
  }
  return N + degree;
}

}  // namespace

std::complex<double> quantum_average(const OrderedOperatorExpr& expr,
                                     const SqueezingParams& p) {
  int degree = 0;
  for (const auto& t : expr.terms)
    degree = std::max(degree, static_cast<int>(t.factors.size()));
  if (degree > 8) throw std::invalid_argument("quantum_average: degree must be <= 8");

  int N = quantum_truncation(p.r, degree);
  int D = N + 1;
  // Renormalized truncated state; the truncation uses a tail bound tighter
  // than the moment weight so degree <= 8 moments converge.
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(D * D);
  double t = std::tanh(p.r);
  double norm2 = 0.0;
  for (int n = 0; n <= N; ++n) {
    double mag = std::pow(t, n) / std::cosh(p.r);
    psi(n * D + n) = std::polar(mag, -2.0 * n * p.phi);
    norm2 += mag * mag;
  }
  psi /= std::sqrt(norm2);

  Eigen::VectorXcd work(D * D), next(D * D);
  std::complex<double> acc = 0.0;
  for (const auto& term : expr.terms) {
    work = psi;
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      apply_pair_operator(*it, D, work, next);
      work.swap(next);
    }
    acc += term.coefficient * psi.dot(work);
  }
  return acc;
}

std::vector<PhasePoint> sample_wigner(const GaussianState& s, long count,
                                      std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_wigner: count must be >= 1");
  Eigen::LLT<Eigen::Matrix4d> llt(0.5 * s.covariance);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("sample_wigner: covariance not positive definite");
  Eigen::Matrix4d L = llt.matrixL();

  std::mt19937_64 gen(seed);
  auto uniform = [&gen]() {
    // (0, 1]: never feeds log() a zero.
    return (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53;
  };
  std::vector<PhasePoint> out;
  out.reserve(count);
  double cache = 0.0;
  bool have_cache = false;
  auto normal = [&]() {
    if (have_cache) {
      have_cache = false;
      return cache;
    }
    double u1 = uniform();
    double u2 = uniform();
    double rad = std::sqrt(-2.0 * std::log(u1));
    cache = rad * std::sin(2.0 * M_PI * u2);
    have_cache = true;
    return rad * std::cos(2.0 * M_PI * u2);
  };
  for (long i = 0; i < count; ++i) {
    Eigen::Vector4d z(normal(), normal(), normal(), normal());
    out.push_back(L * z);
  }
  return out;
}

}  // namespace cvqt

#include "cvqt/pseudospin.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cvqt/numerics.hpp"
#include "cvqt/weyl.hpp"

namespace cvqt {

namespace {

using Complex = std::complex<double>;

// Boundary data for half-line overlaps: phi_n(0) for even n (zero for odd)
// and phi_n'(0) for odd n (zero for even), from
// phi_{n+1}(0) = -sqrt(n/(n+1)) phi_{n-1}(0) and phi_n'(0) = sqrt(2n) phi_{n-1}(0).
std::vector<double> value_at_zero(int N) {
  std::vector<double> v(N + 1, 0.0);
  v[0] = std::pow(M_PI, -0.25);
  for (int n = 2; n <= N; n += 2) v[n] = -std::sqrt((n - 1.0) / n) * v[n - 2];
  return v;
}

std::vector<double> slope_at_zero(int N, const std::vector<double>& value) {
  std::vector<double> d(N + 1, 0.0);
  for (int n = 1; n <= N; n += 2) d[n] = std::sqrt(2.0 * n) * value[n - 1];
  return d;
}

// Int_0^inf phi_m phi_n for opposite parity, m even and n odd.  Both factors
// solve phi'' = (q^2 - 2l - 1) phi, so the integral collapses to the boundary
// Wronskian; check value: (m, n) = (0, 1) gives 1/sqrt(2 pi).
double half_line_overlap(int m_even, int n_odd, const std::vector<double>& value,
                         const std::vector<double>& slope) {
  return value[m_even] * slope[n_odd] / (2.0 * (n_odd - m_even));
}

void check_levels(int N, int cap, const char* name) {
  if (N < 1 || N > cap)
    throw std::invalid_argument(std::string(name) + ": truncation out of range");
}

// One-mode squeezed-pair coefficient vector tanh^n r e^{-2 i n phi} / cosh r,
// renormalized on the truncated basis so the diagonal-operator identity
// <sz sz> = 1 holds exactly for parity-diagonal components.
Eigen::VectorXcd schmidt_coefficients(const SqueezingParams& p, int N) {
  Eigen::VectorXcd c(N + 1);
  const double th = std::tanh(p.r);
  for (int n = 0; n <= N; ++n)
    c[n] = std::polar(std::pow(th, n), -2.0 * n * p.phi);
  c /= c.norm();
  return c;
}

// <Psi| A (x) B |Psi> on the Schmidt-diagonal state: sum_nm cbar_n c_m A_nm B_nm.
double schmidt_contraction(const Eigen::VectorXcd& c, const Eigen::MatrixXcd& a,
                           const Eigen::MatrixXcd& b) {
  Complex e = c.adjoint() * a.cwiseProduct(b) * c;
  return e.real();
}

struct BaseCorrelators {
  double xx, xz, zz;  // zx equals xz: the contraction is symmetric in the factors
};

BaseCorrelators base_correlators(const SqueezingParams& p, const SpinTriple& t) {
  const int N = static_cast<int>(t.sz.entries.rows()) - 1;
  Eigen::VectorXcd c = schmidt_coefficients(p, N);
  BaseCorrelators bc;
  bc.xx = schmidt_contraction(c, t.sx.entries, t.sx.entries);
  bc.xz = schmidt_contraction(c, t.sx.entries, t.sz.entries);
  bc.zz = schmidt_contraction(c, t.sz.entries, t.sz.entries);
  return bc;
}

double correlator_from_base(const BaseCorrelators& bc, double ta, double tb) {
  const double sa = std::sin(ta), ca = std::cos(ta);
  const double sb = std::sin(tb), cb = std::cos(tb);
  return sa * sb * bc.xx + (sa * cb + ca * sb) * bc.xz + ca * cb * bc.zz;
}

double bell_from_base(const BaseCorrelators& bc, double t1, double t1p, double t2,
                      double t2p) {
  return correlator_from_base(bc, t1, t2) + correlator_from_base(bc, t1, t2p) +
         correlator_from_base(bc, t1p, t2) - correlator_from_base(bc, t1p, t2p);
}

}  // namespace

SpinTriple bw_triple(int N) {
  check_levels(N, 4000, "bw_triple");
  const int d = N + 1;
  Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd sy = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n <= N; ++n) sz(n, n) = (n % 2 == 0) ? -1.0 : 1.0;
  for (int n = 0; 2 * n + 1 <= N; ++n) {
    sx(2 * n, 2 * n + 1) = 1.0;
    sx(2 * n + 1, 2 * n) = 1.0;
    sy(2 * n, 2 * n + 1) = Complex(0.0, 1.0);
    sy(2 * n + 1, 2 * n) = Complex(0.0, -1.0);
  }
  return {{sx, true}, {sy, true}, {sz, true}, SpinFamily::BW, 0.0};
}

SpinTriple gkmr_triple(int N) {
  check_levels(N, 80, "gkmr_triple");
  const int d = N + 1;
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
  // The defining half-line projector integrals reduce, level by level, to the
  // parity diagonal: same-parity off-diagonal overlaps vanish by full-line
  // orthogonality, and each diagonal one is half the norm.
  for (int n = 0; n <= N; ++n) sz(n, n) = (n % 2 == 0) ? -1.0 : 1.0;
  OperatorMatrix sx = sgn_position_matrix(N);
  Eigen::MatrixXcd sy = Eigen::MatrixXcd::Zero(d, d);
  const std::vector<double> val = value_at_zero(N);
  const std::vector<double> slo = slope_at_zero(N, val);
  for (int m = 0; m <= N; m += 2) {
    for (int n = 1; n <= N; n += 2) {
      const double overlap = half_line_overlap(m, n, val, slo);
      sy(m, n) = Complex(0.0, -2.0 * overlap);
      sy(n, m) = Complex(0.0, 2.0 * overlap);
    }
  }
  return {sx, {sy, true}, {sz, true}, SpinFamily::GKMR, 0.0};
}

OperatorMatrix sgn_position_matrix(int N) {
  check_levels(N, 200, "sgn_position_matrix");
  const int d = N + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const std::vector<double> val = value_at_zero(N);
  const std::vector<double> slo = slope_at_zero(N, val);
  for (int i = 0; i <= N; i += 2) {
    for (int j = 1; j <= N; j += 2) {
      // sgn weighs the odd product function, so the full-line integral is
      // twice the half-line overlap
      const double e = 2.0 * half_line_overlap(i, j, val, slo);
      m(i, j) = e;
      m(j, i) = e;
    }
  }
  return {m, true};
}

SpinTriple larsson_triple(int N, double ell) {
  check_levels(N, 80, "larsson_triple");
  if (!(ell >= 0.1 && ell <= 10.0))
    throw std::invalid_argument("larsson_triple: ell outside [0.1, 10]");
  const int d = N + 1;
  const double qmax = std::sqrt(2.0 * N + 1.0) + 7.0;
  const GaussRule& rule = gauss_rule(16);

  Eigen::MatrixXd sz = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd splus = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd tbl_a(d), tbl_b(d);

  // Accumulates Int_{lo}^{lo+ell} phi_i(q) phi_j(q + shift) dq scaled by
  // sign into the target, panel by panel; skips segments whose basis mass
  // is below 1e-14.
  auto accumulate_segment = [&](Eigen::MatrixXd& target, double sign, double lo,
                                double shift) {
    const int panels = std::max(1, static_cast<int>(std::ceil(ell / 0.5)));
    const double h = ell / panels;
    Eigen::MatrixXd local = Eigen::MatrixXd::Zero(d, d);
    double mass = 0.0;
    for (int pnl = 0; pnl < panels; ++pnl) {
      const double a = lo + pnl * h;
      for (size_t g = 0; g < rule.nodes.size(); ++g) {
        const double q = a + 0.5 * h * (rule.nodes[g] + 1.0);
        const double w = 0.5 * h * rule.weights[g];
        std::vector<double> pa = hermite_wavefunction_all(N, q);
        std::vector<double> pb =
            shift == 0.0 ? pa : hermite_wavefunction_all(N, q + shift);
        for (int i = 0; i <= N; ++i) tbl_a[i] = pa[i];
        for (int j = 0; j <= N; ++j) tbl_b[j] = pb[j];
        local.noalias() += (w * sign) * tbl_a * tbl_b.transpose();
        mass += w * tbl_a.norm() * tbl_b.norm();
      }
    }
    if (mass < 1e-14) return false;
    target += local;
    return true;
  };

  const int n_lo = static_cast<int>(std::floor(-qmax / ell)) - 1;
  const int n_hi = static_cast<int>(std::ceil(qmax / ell)) + 1;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double sign = (std::abs(n) % 2 == 0) ? 1.0 : -1.0;
    accumulate_segment(sz, sign, n * ell, 0.0);
  }
  // Raising part couples [2n ell, (2n+1) ell] to the same window shifted by
  // ell; outside the basis support both factors vanish together.
  const int m_lo = static_cast<int>(std::floor(-qmax / (2.0 * ell))) - 1;
  const int m_hi = static_cast<int>(std::ceil(qmax / (2.0 * ell))) + 1;
  for (int n = m_lo; n <= m_hi; ++n)
    accumulate_segment(splus, 1.0, 2.0 * n * ell, ell);

  Eigen::MatrixXcd cx = (splus + splus.transpose()).cast<Complex>();
  Eigen::MatrixXcd cy =
      Complex(0.0, -1.0) * (splus - splus.transpose()).cast<Complex>();
  Eigen::MatrixXcd cz = sz.cast<Complex>();
  return {{cx, true}, {cy, true}, {cz, true}, SpinFamily::LARSSON, ell};
}

OperatorMatrix spin_along(const SpinTriple& t, const MeasurementSetting& m) {
  const double st = std::sin(m.theta), ct = std::cos(m.theta);
  const double ca = std::cos(m.azimuth), sa = std::sin(m.azimuth);
  Eigen::MatrixXcd e = ca * st * t.sx.entries + sa * st * t.sy.entries +
                       ct * t.sz.entries;
  return {e, true};
}

double correlator_E(const SqueezingParams& p, const SpinTriple& t,
                    const MeasurementSetting& mA, const MeasurementSetting& mB) {
  const int N = static_cast<int>(t.sz.entries.rows()) - 1;
  Eigen::VectorXcd c = schmidt_coefficients(p, N);
  OperatorMatrix a = spin_along(t, mA);
  OperatorMatrix b = spin_along(t, mB);
  return schmidt_contraction(c, a.entries, b.entries);
}

double bell_mean(const SqueezingParams& p, const SpinTriple& t,
                 const std::array<MeasurementSetting, 4>& s) {
  return correlator_E(p, t, s[0], s[2]) + correlator_E(p, t, s[0], s[3]) +
         correlator_E(p, t, s[1], s[2]) - correlator_E(p, t, s[1], s[3]);
}

BellOptimum maximize_bell(const SqueezingParams& p, const SpinTriple& t) {
  const BaseCorrelators bc = base_correlators(p, t);

  // Coarse scan at 24 angles per setting.  The correlator is symmetric in
  // its two sides, so the (t1, t1') pair index never needs to exceed the
  // (t2, t2') one.
  const int n_grid = 24;
  std::vector<double> angles(n_grid);
  for (int i = 0; i < n_grid; ++i) angles[i] = M_PI * i / n_grid;
  double best = -1e300;
  std::array<double, 4> arg{};
  for (int i1 = 0; i1 < n_grid; ++i1)
    for (int i1p = 0; i1p < n_grid; ++i1p) {
      const int pair_a = i1 * n_grid + i1p;
      for (int i2 = 0; i2 < n_grid; ++i2)
        for (int i2p = 0; i2p < n_grid; ++i2p) {
          if (i2 * n_grid + i2p < pair_a) continue;
          const double b = bell_from_base(bc, angles[i1], angles[i1p], angles[i2],
                                          angles[i2p]);
          if (b > best) {
            best = b;
            arg = {angles[i1], angles[i1p], angles[i2], angles[i2p]};
          }
        }
    }

  auto objective = [&bc](const std::vector<double>& x) {
    return -bell_from_base(bc, x[0], x[1], x[2], x[3]);
  };
  SimplexResult res = nelder_mead(objective, {arg[0], arg[1], arg[2], arg[3]},
                                  M_PI / n_grid, 1e-5, 1e-9);
  if (-res.value > best) {
    best = -res.value;
    arg = {res.x[0], res.x[1], res.x[2], res.x[3]};
  }
  BellOptimum out;
  out.settings = {MeasurementSetting{arg[0]}, MeasurementSetting{arg[1]},
                  MeasurementSetting{arg[2]}, MeasurementSetting{arg[3]}};
  out.value = best;
  return out;
}

EllSweepResult larsson_ell_sweep(const SqueezingParams& p,
                                 const std::vector<double>& ell_grid, int N) {
  if (ell_grid.empty())
    throw std::invalid_argument("larsson_ell_sweep: empty grid");
  EllSweepResult out{0.0, -1e300, {}};
  for (double ell : ell_grid) {
    SpinTriple t = larsson_triple(N, ell);
    BellOptimum opt = maximize_bell(p, t);
    if (opt.value > out.value) out = {ell, opt.value, opt};
  }
  return out;
}

SymbolClassification classify_weyl_symbol(const OperatorMatrix& op) {
  // Grid offset by an irrational-looking fraction keeps nodes clear of bin
  // edges and of the sign discontinuity at the origin.
  const int n_grid = 21;
  const double span = 6.0;
  int off = 0, total = 0;
  for (int i = 0; i < n_grid; ++i) {
    const double q = -0.5 * span + span * (i + 0.382) / n_grid;
    for (int j = 0; j < n_grid; ++j) {
      const double p = -0.5 * span + span * (j + 0.382) / n_grid;
      const Complex w = weyl_symbol_numeric(op, q, p);
      const double dist = std::min(std::abs(w - 1.0), std::abs(w + 1.0));
      if (dist > 0.5) ++off;
      ++total;
    }
  }
  const double frac = static_cast<double>(off) / total;
  return {frac > 0.10, frac};
}

ProperImproperReport proper_improper_report(const SpinTriple& t) {
  ProperImproperReport rep{classify_weyl_symbol(t.sx), classify_weyl_symbol(t.sy),
                           classify_weyl_symbol(t.sz), 0};
  rep.improper_count = (rep.x.improper ? 1 : 0) + (rep.y.improper ? 1 : 0) +
                       (rep.z.improper ? 1 : 0);
  return rep;
}

}  // namespace cvqt

#include "cvqt/pseudospin.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "cvqt/fock.hpp"
#include "cvqt/numerics.hpp"

using namespace cvqt;
using Eigen::MatrixXcd;
using cplx = std::complex<double>;

namespace {

double max_abs(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double block_max(const MatrixXcd& m, int lo, int hi) {
  double w = 0.0;
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) w = std::max(w, std::abs(m(i, j)));
  return w;
}

// Deviations of the three commutators and three squares from the dichotomic
// algebra, measured on the level block [0, top].
std::array<double, 6> algebra_deviations(const SpinTriple& t, int top) {
  const MatrixXcd& sx = t.sx.entries;
  const MatrixXcd& sy = t.sy.entries;
  const MatrixXcd& sz = t.sz.entries;
  const cplx i2(0.0, 2.0);
  const MatrixXcd id = MatrixXcd::Identity(sx.rows(), sx.cols());
  return {block_max(sx * sy - sy * sx - i2 * sz, 0, top),
          block_max(sy * sz - sz * sy - i2 * sx, 0, top),
          block_max(sz * sx - sx * sz - i2 * sy, 0, top),
          block_max(sx * sx - id, 0, top),
          block_max(sy * sy - id, 0, top),
          block_max(sz * sz - id, 0, top)};
}

}  // namespace

TEST_CASE("number-pair construction closes the spin algebra exactly") {
  // An odd top level keeps every (2n, 2n+1) pair complete, and then the
  // algebra holds to machine precision at any truncation, not just in a limit.
  for (int N : {41, 201}) {
    SpinTriple t = bw_triple(N);
    for (double d : algebra_deviations(t, N)) CHECK(d < 1e-12);
    CHECK(t.sx.hermitian);
    CHECK(t.sy.hermitian);
    CHECK(t.sz.hermitian);
  }

  SpinTriple t = bw_triple(41);
  for (int n = 0; n <= 41; ++n) {
    CHECK(t.sz.entries(n, n).real() == doctest::Approx(n % 2 ? 1.0 : -1.0));
    for (int m = 0; m < n; ++m) CHECK(std::abs(t.sz.entries(m, n)) == 0.0);
  }
  // sx swaps the two members of a pair with unit amplitude
  CHECK(std::abs(t.sx.entries(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(t.sx.entries(2, 1)) == 0.0);

  CHECK_THROWS_AS((void)bw_triple(0), std::invalid_argument);
  CHECK_THROWS_AS((void)bw_triple(4001), std::invalid_argument);
}

TEST_CASE("parity construction reproduces its defining half-line integrals") {
  const int N = 10;
  SpinTriple t = gkmr_triple(N);

  // I(m, n) = integral over q > 0 of phi_m phi_n; the wavefunctions die well
  // before q = 12 at these levels.
  auto half_overlap = [](int m, int n) {
    return gauss_legendre({0.0, 12.0, 96}, [&](double q) {
      return hermite_wavefunction(m, q) * hermite_wavefunction(n, q);
    });
  };

  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n) {
      const cplx x = t.sx.entries(m, n);
      const cplx y = t.sy.entries(m, n);
      const cplx z = t.sz.entries(m, n);
      if (m % 2 == n % 2) {
        CHECK(std::abs(x) < 1e-13);
        CHECK(std::abs(y) < 1e-13);
        const double zd = (m == n) ? (m % 2 ? 1.0 : -1.0) : 0.0;
        CHECK(std::abs(z - zd) < 1e-13);
      } else {
        const double I = half_overlap(m, n);
        CHECK(std::abs(x - 2.0 * I) < 1e-12);
        // y carries -2i I from even row to odd column and the conjugate below
        const cplx yd = (m % 2 == 0) ? cplx(0.0, -2.0 * I) : cplx(0.0, 2.0 * I);
        CHECK(std::abs(y - yd) < 1e-12);
        CHECK(std::abs(z) < 1e-13);
      }
    }

  // the x component is nothing but sgn(position) in the number basis
  CHECK(max_abs(t.sx.entries - sgn_position_matrix(N).entries) < 1e-14);
  // lowest off-diagonal overlap in closed form
  CHECK(half_overlap(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-13));

  CHECK_THROWS_AS((void)gkmr_triple(81), std::invalid_argument);
  CHECK_THROWS_AS((void)sgn_position_matrix(201), std::invalid_argument);
}

TEST_CASE("parity construction: relations that are exact at finite truncation") {
  // sz is diagonal with entries of unit modulus, so these two commutators
  // collapse elementwise with no completeness sum involved. Note the triple is
  // left-handed: (sx, sy, -sz) obeys the usual orientation.
  SpinTriple t = gkmr_triple(60);
  const MatrixXcd& sx = t.sx.entries;
  const MatrixXcd& sy = t.sy.entries;
  const MatrixXcd& sz = t.sz.entries;
  const cplx i2(0.0, 2.0);
  CHECK(max_abs(sy * sz - sz * sy + i2 * sx) < 1e-13);
  CHECK(max_abs(sz * sx - sx * sz + i2 * sy) < 1e-13);
  CHECK(max_abs(sz * sz - MatrixXcd::Identity(61, 61)) == 0.0);
}

TEST_CASE("completeness-sum relations approach the algebra like 1/sqrt(N)") {
  // (sgn^2)_{mn} - delta_{mn} is a tail of sum_k I(m,k) I(k,n) with
  // I(0,k) ~ k^{-3/4}, so doubling the truncation shrinks the defect by
  // 1/sqrt(2). A small absolute bound is out of reach here: machine-level
  // closure would need N beyond 1e10 levels.
  auto sgn_defect = [](int N) {
    MatrixXcd s = sgn_position_matrix(N).entries;
    return std::abs((s * s)(0, 0) - 1.0);
  };
  const double d50 = sgn_defect(50);
  const double d100 = sgn_defect(100);
  const double d200 = sgn_defect(200);
  CHECK(d50 == doctest::Approx(7.195e-2).epsilon(0.01));
  CHECK(d100 / d50 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.01));
  CHECK(d200 / d100 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.01));

  // same law for the one commutator of the parity triple that needs the sum
  auto xy_defect = [](int N) {
    SpinTriple t = gkmr_triple(N);
    MatrixXcd c = t.sx.entries * t.sy.entries - t.sy.entries * t.sx.entries;
    return block_max(c + cplx(0.0, 2.0) * t.sz.entries, 0, N / 2);
  };
  const double g40 = xy_defect(40);
  const double g80 = xy_defect(80);
  CHECK(g80 < g40);
  CHECK(g80 / g40 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.06));
}

TEST_CASE("binned construction: wide bins reduce to sgn, algebra improves with N") {
  // With bin width 10 the only sign flips inside the support of the low
  // wavefunctions are at the origin, so the z component collapses onto
  // sgn(position) for levels whose turning point stays well inside the bin.
  {
    SpinTriple t = larsson_triple(80, 10.0);
    OperatorMatrix s = sgn_position_matrix(80);
    CHECK(block_max(t.sz.entries - s.entries, 0, 20) < 1e-12);
    CHECK(t.sx.hermitian);
    CHECK(t.sy.hermitian);
    CHECK(t.sz.hermitian);
  }

  // at unit bin width every deviation from the algebra shrinks when the
  // truncation doubles
  std::array<double, 6> a40 = algebra_deviations(larsson_triple(40, 1.0), 20);
  std::array<double, 6> a80 = algebra_deviations(larsson_triple(80, 1.0), 20);
  for (int i = 0; i < 6; ++i) CHECK(a80[i] < a40[i]);

  CHECK_THROWS_AS((void)larsson_triple(40, 0.05), std::invalid_argument);
  CHECK_THROWS_AS((void)larsson_triple(40, 11.0), std::invalid_argument);
  CHECK_THROWS_AS((void)larsson_triple(81, 1.0), std::invalid_argument);
}

TEST_CASE("spin_along interpolates the components and keeps a unit square") {
  SpinTriple t = bw_triple(41);
  CHECK(max_abs(spin_along(t, {0.0, 2.2}).entries - t.sz.entries) < 1e-14);
  CHECK(max_abs(spin_along(t, {M_PI / 2, 0.0}).entries - t.sx.entries) < 1e-14);
  CHECK(max_abs(spin_along(t, {M_PI / 2, M_PI / 2}).entries - t.sy.entries) < 1e-14);

  OperatorMatrix a = spin_along(t, {0.7, 0.3});
  CHECK(a.hermitian);
  CHECK(max_abs(a.entries * a.entries - MatrixXcd::Identity(42, 42)) < 1e-12);
}

TEST_CASE("pair correlator: closed form on the two-mode squeezed state") {
  // at phi = 0 the correlator of the pair family reduces to
  // cos t1 cos t2 + tanh(2r) sin t1 sin t2 cos(a1 + a2)
  const SqueezingParams p(0.8, 0.0);
  const SpinTriple t = bw_triple(121);
  const double th = std::tanh(1.6);
  for (double t1 : {0.0, 0.7, M_PI / 2, 2.4})
    for (double t2 : {0.0, 0.7, M_PI / 2, 2.4})
      CHECK(correlator_E(p, t, {t1, 0.0}, {t2, 0.0}) ==
            doctest::Approx(std::cos(t1) * std::cos(t2) +
                            th * std::sin(t1) * std::sin(t2))
                .epsilon(1e-12));
  for (auto [a1, a2] : {std::pair{0.5, 0.0}, {0.3, -1.1}})
    CHECK(correlator_E(p, t, {M_PI / 2, a1}, {M_PI / 2, a2}) ==
          doctest::Approx(th * std::cos(a1 + a2)).epsilon(1e-12));
}

TEST_CASE("pair correlator: exact parity correlation, bounds, symmetry") {
  // both members of a Schmidt pair share the parity, so the z-z correlation is
  // exactly one at any squeezing for the two parity-diagonal families
  for (double r : {0.0, 0.7, 2.3}) {
    const SqueezingParams p(r, 0.4);
    CHECK(std::fabs(correlator_E(p, bw_triple(61), {0.0, 0.0}, {0.0, 0.0}) - 1.0) <
          1e-14);
    CHECK(std::fabs(correlator_E(p, gkmr_triple(60), {0.0, 0.0}, {0.0, 0.0}) - 1.0) <
          1e-14);
  }

  // on the vacuum the mixed z-x moment factorizes and vanishes
  CHECK(std::fabs(correlator_E(SqueezingParams(0.0, 0.0), gkmr_triple(60), {0.0, 0.0},
                               {M_PI / 2, 0.0})) < 1e-14);

  const SqueezingParams p(1.3, 0.6);
  const SpinTriple g = gkmr_triple(60);
  const SpinTriple l = larsson_triple(60, 1.0);
  CHECK(std::fabs(correlator_E(p, g, {0.5, 1.0}, {1.9, -0.3}) -
                  correlator_E(p, g, {1.9, -0.3}, {0.5, 1.0})) < 1e-14);
  CHECK(std::fabs(correlator_E(p, l, {0.5, 1.0}, {1.9, -0.3}) -
                  correlator_E(p, l, {1.9, -0.3}, {0.5, 1.0})) < 1e-14);

  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> th(0.0, M_PI), az(-M_PI, M_PI);
  for (int i = 0; i < 200; ++i) {
    double e = correlator_E(p, (i % 2) ? g : l, {th(rng), az(rng)}, {th(rng), az(rng)});
    CHECK(std::fabs(e) <= 1.0 + 1e-9);
  }
}

TEST_CASE("Bell combination stays under the quantum ceiling everywhere") {
  // a degenerate quadruple collapses the combination to twice one correlator
  const SqueezingParams p0(0.9, 0.2);
  const SpinTriple g = gkmr_triple(60);
  const MeasurementSetting m{1.1, -0.4};
  CHECK(bell_mean(p0, g, {m, m, m, m}) ==
        doctest::Approx(2.0 * correlator_E(p0, g, m, m)).epsilon(1e-14));

  const SpinTriple triples[3] = {bw_triple(121), gkmr_triple(80),
                                 larsson_triple(80, 1.0)};
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> th(0.0, M_PI), az(-M_PI, M_PI);
  const double ceiling = 2.0 * std::sqrt(2.0) + 1e-6;
  for (double r : {0.0, 1.0, 2.0, 3.0})
    for (const SpinTriple& t : triples) {
      const SqueezingParams p(r, 0.7 * r);
      for (int i = 0; i < 850; ++i) {
        std::array<MeasurementSetting, 4> ms;
        for (auto& s : ms) s = {th(rng), az(rng)};
        CHECK(std::fabs(bell_mean(p, t, ms)) <= ceiling);
      }
    }
}

TEST_CASE("maximize_bell lands on the known optima") {
  const SpinTriple t = bw_triple(121);
  for (double r : {1.0, 2.0, 3.0}) {
    BellOptimum o = maximize_bell(SqueezingParams(r, 0.0), t);
    CHECK(o.value ==
          doctest::Approx(2.0 * std::sqrt(1.0 + std::pow(std::tanh(2.0 * r), 2)))
              .epsilon(1e-7));
    CHECK(o.value ==
          doctest::Approx(bell_mean(SqueezingParams(r, 0.0), t, o.settings))
              .epsilon(1e-12));
  }

  // no violation without squeezing, and the pair family saturates the local
  // bound exactly there
  const SqueezingParams v(0.0, 0.0);
  CHECK(maximize_bell(v, bw_triple(41)).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(maximize_bell(v, gkmr_triple(40)).value <= 2.0 + 1e-6);
  CHECK(maximize_bell(v, larsson_triple(40, 1.0)).value <= 2.0 + 1e-6);

  CHECK(maximize_bell(SqueezingParams(2.0, 0.0), gkmr_triple(40)).value ==
        doctest::Approx(2.785477498).epsilon(1e-7));
}

TEST_CASE("bin-width sweep picks the best Bell value on the grid") {
  const SqueezingParams p(1.0, 0.0);
  EllSweepResult r = larsson_ell_sweep(p, {0.5, 1.0, 2.0});
  CHECK(r.best_ell == doctest::Approx(2.0));
  CHECK(r.value == doctest::Approx(1.797390182).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(r.optimum.value).epsilon(1e-14));
  CHECK(r.value ==
        doctest::Approx(bell_mean(p, larsson_triple(60, r.best_ell), r.optimum.settings))
            .epsilon(1e-12));
  CHECK_THROWS_AS((void)larsson_ell_sweep(p, {}), std::invalid_argument);
}

TEST_CASE("correlators are stable under truncation doubling") {
  const std::array<MeasurementSetting, 4> ms = {
      MeasurementSetting{0.4, 0.1}, {1.3, -0.7}, {2.2, 0.0}, {0.9, 1.9}};
  auto worst = [&](const SqueezingParams& p, const SpinTriple& a, const SpinTriple& b) {
    double w = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        w = std::max(w, std::fabs(correlator_E(p, a, ms[i], ms[j]) -
                                  correlator_E(p, b, ms[i], ms[j])));
    return w;
  };

  // the pair family keeps closed two-level blocks, so its tail is just the
  // leftover Schmidt weight and even r = 2.5 sits at machine precision
  CHECK(worst(SqueezingParams(2.5, 0.3), bw_triple(899), bw_triple(1799)) < 1e-10);

  // the half-line families are capped at 80 levels; their matrix elements
  // grow with level, so the workable squeezing is bounded by the Schmidt tail
  CHECK(worst(SqueezingParams(1.2, 0.3), gkmr_triple(40), gkmr_triple(80)) < 1e-6);
  CHECK(worst(SqueezingParams(1.0, 0.3), larsson_triple(40, 1.0),
              larsson_triple(80, 1.0)) < 1e-6);
}

TEST_CASE("Weyl symbols sort the components into proper and improper") {
  SymbolClassification sgn = classify_weyl_symbol(sgn_position_matrix(40));
  CHECK_FALSE(sgn.improper);
  CHECK(sgn.depart_fraction < 0.1);

  ProperImproperReport bw = proper_improper_report(bw_triple(40));
  CHECK(bw.improper_count == 3);
  CHECK(bw.z.improper);

  ProperImproperReport gk = proper_improper_report(gkmr_triple(40));
  CHECK_FALSE(gk.x.improper);
  CHECK(gk.y.improper);
  CHECK(gk.z.improper);
  CHECK(gk.improper_count == 2);

  ProperImproperReport la = proper_improper_report(larsson_triple(40, 3.0));
  CHECK(la.x.improper);
  CHECK(la.y.improper);
  CHECK_FALSE(la.z.improper);
  CHECK(la.improper_count == 2);
}

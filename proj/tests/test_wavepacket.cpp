#include "cvqt/wavepacket.hpp"

#include <cmath>

#include "doctest.h"
#include "cvqt/dynamics.hpp"
#include "cvqt/numerics.hpp"

using namespace cvqt;

TEST_CASE("cat packet: norm constant, parity peak, negativity, bound") {
  CatParams c(2.0, 0.0);
  CHECK(c.norm_sq() == doctest::Approx(1.0 / (1.0 + std::exp(-4.0))).epsilon(1e-14));

  // even superposition: W(0,0) = <parity>/pi = 1/pi regardless of separation
  CHECK(cat_wigner(c, 0.0, 0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
  CHECK(cat_wigner(CatParams(5.0, 0.0), 0.0, 0.0) ==
        doctest::Approx(1.0 / M_PI).epsilon(1e-12));

  WignerMinimum wm = cat_negativity(CatParams(6.0, 0.0));
  CHECK(wm.value < -0.05);
  CHECK(wm.value >= -1.0 / M_PI - 1e-9);
  CHECK(std::abs(wm.q) < 0.5);  // fringes live between the packets

  // normalization by fixed-grid quadrature
  const CatParams c4(4.0, 0.3);
  const double nrm = gauss_legendre({-12.0, 12.0, 768}, [&](double q) {
    return gauss_legendre({-8.0, 8.0, 512},
                          [&](double p) { return cat_wigner(c4, q, p); });
  });
  CHECK(nrm == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("EPR packet: momentum marginal and correlator structure") {
  const EprParams e(2.0, 0.8, 0.5);
  // closed Gaussian marginal over both momenta
  for (double q1 : {-0.4, 0.7}) {
    const double q2 = 0.3;
    const double quad = integrate_real_line(
        [&](double p1) {
          return integrate_real_line(
              [&](double p2) { return epr_wigner(e, q1, q2, p1, p2); }, -p1, 2.0);
        },
        0.0, 2.0);
    const double s = q1 + q2, d = q1 - q2 + e.q0;
    const double expect = 2.0 * std::sqrt(2.0) / (M_PI * e.b * e.eps) *
                          std::exp(-s * s / (e.b * e.b) -
                                   2.0 * d * d / (e.eps * e.eps));
    CHECK(quad == doctest::Approx(expect).epsilon(1e-9));
  }

  // equal-time correlator against the arctangent form
  const EprParams e2(10.0, 0.5, 0.7);
  const double a12 = 0.5 * e2.b * e2.b - 0.25 * e2.eps * e2.eps;
  const double det0 = 0.5 * e2.b * e2.b * e2.eps * e2.eps;
  CHECK(epr_correlator(e2, 0.0, 0.0) ==
        doctest::Approx(2.0 / M_PI * std::atan(a12 / std::sqrt(det0)))
            .epsilon(1e-12));

  // CHSH assembly matches the four correlators
  const TimeSettings ts{0.2, 0.9, 1.4, 0.1};
  const double direct = epr_correlator(e2, ts.t1, ts.t2) +
                        epr_correlator(e2, ts.t1, ts.t2p) +
                        epr_correlator(e2, ts.t1p, ts.t2) -
                        epr_correlator(e2, ts.t1p, ts.t2p);
  CHECK(epr_bell(e2, ts) == doctest::Approx(direct).epsilon(1e-14));

  // equal widths factorize the state: no violation anywhere we look
  const EprParams sep(1.3, 1.3, 0.0);
  for (double x : {0.0, 0.4, 1.1})
    CHECK(epr_bell(sep, {0.0, x, 2.0 * x, 3.0 * x}) <= 2.0 + 1e-12);
}

TEST_CASE("quartic-packet correlator, CHSH curve, and threshold") {
  const BellStateParams bp(1.0, 0.3, 0.2);
  CHECK(bell_correlator(bp, 0.0, 0.0) ==
        doctest::Approx(1.0 - 2.0 * bp.n_bell_sq).epsilon(1e-13));
  // the correlator depends on the times through their sum
  CHECK(bell_correlator(bp, 0.7, 0.5) ==
        doctest::Approx(bell_correlator(bp, 1.2, 0.0)).epsilon(1e-13));

  // B(x) assembles from settings (-2x, 0 | x, 3x)
  for (double x : {0.3, 0.9}) {
    const double b = 3.0 * bell_correlator(bp, x, 0.0) -
                     bell_correlator(bp, 3.0 * x, 0.0);
    CHECK(bell_chsh(bp, x) == doctest::Approx(b).epsilon(1e-13));
    CHECK(bell_chsh_reduced(bp, x) ==
          doctest::Approx((2.0 - bell_chsh(bp, x)) / bp.n_bell_sq).epsilon(1e-12));
  }

  const double root = bell_violation_threshold(bp);
  CHECK(std::abs(root - 0.98976) < 1e-3);
  CHECK(bell_chsh(bp, root) == doctest::Approx(2.0).epsilon(1e-9));
  // the threshold does not depend on the opaque constant
  const double root2 = bell_violation_threshold(BellStateParams(1.0, 0.3, 0.73));
  CHECK(root == doctest::Approx(root2).epsilon(1e-9));
}

TEST_CASE("pair-packet slice matches the narrow-width limit") {
  const double s = 0.2;
  const double q1 = 1.1, q2 = 0.3, prel = -0.4;
  JohansenParams j(0.8, -0.6, s,
                   std::sqrt(2.0 / M_PI) * s *
                       std::exp(-s * s * (q1 + q2) * (q1 + q2) / 2.0));
  // integrate the finite-width form over the total momentum
  const double quad = integrate_real_line(
      [&](double u) {
        return johansen_wigner(j, q1, q2, prel + 0.5 * u, -prel + 0.5 * u);
      },
      0.0, 3.0 * s);
  CHECK(quad == doctest::Approx(johansen_wigner_reduced(j, q1, q2, prel))
                    .epsilon(1e-10));
}

TEST_CASE("pair-packet correlator: closed form and combination rows") {
  const JohansenParams j(1.0, -1.0, 0.1, 0.3);
  // equal times: E = 1 - 2 sqrt2 K [e^{-q0^2}/sqrt(pi) + q0 erf(q0)]
  const double expect0 =
      1.0 - 2.0 * std::sqrt(2.0) * j.K *
                (std::exp(-j.q0 * j.q0) / std::sqrt(M_PI) +
                 j.q0 * std::erf(j.q0));
  CHECK(johansen_correlator(j, 0.0, 0.0) == doctest::Approx(expect0).epsilon(1e-12));

  auto rows = johansen_combinations(j, {0.5, 1.0, 2.0});
  for (const auto& row : rows) {
    const double x = row.x;
    // the drift-aware combination assembles from settings (-4x, 0 | 2x, 6x)
    const double b = johansen_correlator(j, -4.0 * x, 2.0 * x) +
                     johansen_correlator(j, -4.0 * x, 6.0 * x) +
                     johansen_correlator(j, 0.0, 2.0 * x) -
                     johansen_correlator(j, 0.0, 6.0 * x);
    CHECK(row.two_minus_b_over_k == doctest::Approx((2.0 - b) / j.K).epsilon(1e-12));
    CHECK(row.correct_combo ==
          doctest::Approx(row.two_minus_b_over_k).epsilon(1e-12));
  }
}

TEST_CASE("normalized quartic Wigner function integrates to one") {
  const double a = 1.0, b = 4.0, q0 = 0.4;
  // rotate to the decoupled combinations: s = q1 + q2, d = q1 - q2,
  // u = p1 + p2, v = p1 - p2; the Jacobian of (q1, q2) -> (s, d) is 1/2,
  // same for momenta.
  // sum/difference coordinates keep the four envelopes axis-aligned; the
  // difference ranges are wide because the quartic bracket feeds on them
  const double nrm =
      0.25 *
      gauss_legendre({-16.0, 16.0, 64}, [&](double s) {
        return gauss_legendre({-4.6, 3.8, 96}, [&](double d) {
          return gauss_legendre({-2.0, 2.0, 48}, [&](double u) {
            return gauss_legendre({-10.0, 10.0, 96}, [&](double v) {
              return normalized_bell_wigner(a, b, q0, 0.5 * (s + d), 0.5 * (s - d),
                                            0.5 * (u + v), 0.5 * (u - v));
            });
          });
        });
      });
  CHECK(nrm == doctest::Approx(1.0).epsilon(1e-6));

  // the quartic bracket dips negative between the packets
  CHECK(normalized_bell_wigner(a, b, q0, 0.6 - q0, -0.6, 0.2, 0.2) < 0.0);
}

TEST_CASE("naive one-mode form and the Airy approximation") {
  // the contour-area construction lands on the same Gaussian as the exact
  // one-mode reduction
  for (double q : {-1.0, 0.4})
    for (double p : {0.0, 1.3})
      CHECK(wkb_wigner_naive(1.2, q, p) ==
            doctest::Approx(onemode_wigner(1.2, q, p)).epsilon(1e-12));

  // rotational symmetry in phase space
  const double d = 1.0;
  CHECK(berry_wigner_ho(10, d * std::cos(0.77), d * std::sin(0.77)) ==
        doctest::Approx(berry_wigner_ho(10, d, 0.0)).epsilon(1e-12));
  CHECK_THROWS_AS((void)berry_wigner_ho(10, 10.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)berry_wigner_ho(0, 0.5, 0.0), std::invalid_argument);
}

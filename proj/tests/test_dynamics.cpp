#include "cvqt/dynamics.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "cvqt/numerics.hpp"

using namespace cvqt;
using Complex = std::complex<double>;

TEST_CASE("background model validation and coupling") {
  CHECK_THROWS_AS(BackgroundModel(-2.0, -10.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(BackgroundModel(-2.0, -0.1, -10.0), std::invalid_argument);
  BackgroundModel bg(-2.0, -100.0, -0.01);
  CHECK(bg.coupling(-4.0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("exponential-expansion mode functions against the closed form") {
  // For a ~ 1/(-eta) the combinations f = u + conj(v) and g = u - conj(v)
  // decouple: f'' + (k^2 - 2/eta^2) f = 0 with solutions
  // e^{-+ i k eta} (1 -+ i/(k eta)), and g'' + k^2 g = 0 with plane waves.
  // Matching both to the initial pair (u, v) = (1, 0) gives the evolution in
  // closed form, valid at every later time, not just asymptotically.
  const double k = 1.0;
  const double eta0 = -2000.0;
  BackgroundModel bg(-2.0, eta0, -0.5);
  BogoliubovTrajectory traj = evolve_bogoliubov(bg, k, 1e-11);

  auto f1 = [k](double e) {
    return std::exp(Complex(0, -k * e)) * Complex(1.0, -1.0 / (k * e));
  };
  auto f2 = [k](double e) {
    return std::exp(Complex(0, k * e)) * Complex(1.0, 1.0 / (k * e));
  };
  auto g1 = [k](double e) { return std::exp(Complex(0, -k * e)); };
  auto g2 = [k](double e) { return -std::exp(Complex(0, k * e)); };
  // f(eta0) = g(eta0) = 1 fixes the two mode amplitudes
  const Complex a11 = f1(eta0), a12 = f2(eta0), a21 = g1(eta0), a22 = g2(eta0);
  const Complex det = a11 * a22 - a12 * a21;
  const Complex amp1 = (a22 - a12) / det;
  const Complex amp2 = (a11 - a21) / det;

  for (double eta : {-5.0, -2.0, -0.8}) {
    BogoliubovPair b = traj.at(eta);
    const Complex f = amp1 * f1(eta) + amp2 * f2(eta);
    const Complex g = amp1 * g1(eta) + amp2 * g2(eta);
    const Complex u_exact = 0.5 * (f + g);
    const Complex v_exact = std::conj(0.5 * (f - g));
    CHECK(std::abs(b.u - u_exact) < 1e-6);
    CHECK(std::abs(b.v - v_exact) < 1e-6);
    CHECK(std::abs(std::norm(b.u) - std::norm(b.v) - 1.0) < 1e-6);

    // the deep-past limit of the closed form is |v| = 1/(2 k |eta|); the
    // residual offset from starting at finite eta0 is ~ 1/(2 k |eta0|)
    CHECK(std::abs(b.v) ==
          doctest::Approx(1.0 / (2.0 * k * std::abs(eta))).epsilon(1e-2));

    SqueezingParams s = squeezing_from_bogoliubov(b);
    const double phi_exact = -0.5 * (std::arg(u_exact) + std::arg(v_exact));
    CHECK(std::remainder(s.phi - phi_exact, M_PI) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  }
}

TEST_CASE("squeezing parameters from a synthetic pair") {
  BogoliubovPair b{std::polar(std::cosh(0.7), 0.3), std::polar(std::sinh(0.7), -0.9)};
  SqueezingParams s = squeezing_from_bogoliubov(b);
  CHECK(s.r == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(s.phi == doctest::Approx(-0.5 * (0.3 - 0.9)).epsilon(1e-13));
}

TEST_CASE("curvature spectrum is flat for the exponential expansion") {
  // Both ends of the k range bias the fit: modes must start deep inside the
  // Hubble radius (k |eta0| >> 1, residual ~ 1/(k eta0)) and finish well
  // outside it (k |eta_end| << 1, decaying-mode residual ~ (k eta_end)^2).
  BackgroundModel bg(-2.0, -20000.0, -0.002, 1.0);
  std::vector<double> ks;
  for (int i = 0; i < 5; ++i) ks.push_back(0.2 * std::pow(10.0, 1.5 * i / 4.0));
  SpectrumFit fit = power_spectrum(bg, ks);
  CHECK(std::abs(fit.spectral_index - 1.0) < 1e-3);
  const double flat = 1.0 / (4.0 * M_PI * M_PI);
  for (const auto& pt : fit.points) {
    CHECK(pt.super_hubble);
    CHECK(pt.power == doctest::Approx(flat).epsilon(1e-3));
  }
  // z_norm scales the spectrum down by its square
  BackgroundModel bg2(-2.0, -20000.0, -0.002, 3.0);
  SpectrumFit fit2 = power_spectrum(bg2, {0.2, 2.0});
  CHECK(fit2.points[0].power ==
        doctest::Approx(fit.points[0].power / 9.0).epsilon(1e-8));

  CHECK_THROWS_AS((void)power_spectrum(bg, {0.1}), std::invalid_argument);
}

TEST_CASE("spectral tilt tracks the expansion exponent") {
  // n_s - 1 = 4 + 2 beta for beta near -2
  BackgroundModel bg(-1.98, -3000.0, -0.004);
  std::vector<double> ks;
  for (int i = 0; i < 6; ++i) ks.push_back(0.05 * std::pow(10.0, 1.2 * i / 5.0));
  SpectrumFit fit = power_spectrum(bg, ks);
  CHECK(fit.spectral_index - 1.0 ==
        doctest::Approx(4.0 + 2.0 * (-1.98)).epsilon(0.02));
}

TEST_CASE("inverted oscillator state and WKB quality") {
  SqueezingParams s = inverted_oscillator_state(1.3, 2.0);
  CHECK(s.r == doctest::Approx(2.6).epsilon(1e-14));
  CHECK(s.phi == doctest::Approx(-M_PI / 4.0).epsilon(1e-14));
  CHECK_THROWS_AS((void)inverted_oscillator_state(1.0, -0.1), std::invalid_argument);
  CHECK(wkb_quality(1.0) == doctest::Approx(std::sinh(2.0)).epsilon(1e-14));
}

TEST_CASE("one-mode wavefunction is normalized with the squeezed width") {
  const double r = 1.1;
  const double nrm = integrate_real_line(
      [r](double q) { return std::norm(onemode_wavefunction(r, q)); }, 0.0, 2.0);
  CHECK(nrm == doctest::Approx(1.0).epsilon(1e-10));
  // |psi|^2 has variance cosh(2r)/2
  const double var = integrate_real_line(
      [r](double q) { return q * q * std::norm(onemode_wavefunction(r, q)); }, 0.0,
      2.0);
  CHECK(var == doctest::Approx(0.5 * std::cosh(2 * r)).epsilon(1e-9));
}

TEST_CASE("one-mode Wigner function equals its smeared-delta representation") {
  for (double r : {0.0, 0.9, 2.1})
    for (double q : {-1.7, 0.3})
      for (double p : {-0.4, 2.2}) {
        CHECK(onemode_wigner(r, q, p) ==
              doctest::Approx(delta_eps_representation(r, q, p))
                  .scale(1.0)
                  .epsilon(1e-13));
      }
  // normalization
  const double r = 1.4;
  const double nrm = integrate_real_line(
      [r](double q) {
        return integrate_real_line(
            [r, q](double p) { return onemode_wigner(r, q, p); },
            q * std::tanh(2 * r), 1.0);
      },
      0.0, 2.0);
  CHECK(nrm == doctest::Approx(1.0).epsilon(1e-9));
}

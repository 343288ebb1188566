#include "cvqt/numerics.hpp"

#include <gsl/gsl_sf_airy.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

namespace cvqt {

double hermite_polynomial(int n, double x) {
  if (n < 0 || n > 200) throw std::invalid_argument("hermite_polynomial: n must be in [0, 200]");
  if (n == 0) return 1.0;
  double hm = 1.0;        // H_0
  double h = 2.0 * x;     // H_1
  for (int k = 1; k < n; ++k) {
    double hp = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hp;
    if (!std::isfinite(h)) throw std::range_error("hermite_polynomial: recurrence overflow");
  }
  return h;
}

double erf(double x) { return std::erf(x); }

double airy_ai(double x) {
  if (!(x >= -30.0 && x <= 30.0)) throw std::range_error("airy_ai: x outside [-30, 30]");
  return gsl_sf_airy_Ai(x, GSL_PREC_DOUBLE);
}

namespace {

GaussRule compute_gauss_rule(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  // Newton iteration on the Legendre recurrence; roots are symmetric so only
  // the upper half is solved.
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_rule: n must be positive");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_rule(n)).first;
  return it->second;
}

namespace {

double panel_integral(const GaussRule& rule, double a, double b,
                      const std::function<double(double)>& f) {
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = mid + half * rule.nodes[i];
    double v = f(x);
    if (!std::isfinite(v)) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "gauss_legendre: non-finite integrand at x = %.17g", x);
      throw std::runtime_error(buf);
    }
    acc += rule.weights[i] * v;
  }
  return acc * half;
}

}  // namespace

double gauss_legendre(const Grid1D& grid, const std::function<double(double)>& f) {
  if (!(grid.lo < grid.hi)) throw std::invalid_argument("gauss_legendre: lo must be < hi");
  if (grid.n < 2) throw std::invalid_argument("gauss_legendre: n must be >= 2");
  if (grid.n <= 64) return panel_integral(gauss_rule(grid.n), grid.lo, grid.hi, f);
  const GaussRule& rule = gauss_rule(64);
  int panels = (grid.n + 63) / 64;
  double h = (grid.hi - grid.lo) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p)
    acc += panel_integral(rule, grid.lo + p * h, grid.lo + (p + 1) * h, f);
  return acc;
}

namespace {

// Deterministic cutoff for the sinh map: probe outward in u until the
// transformed integrand stays below 1e-16 of its running peak.
double sinh_map_cutoff(const std::function<double(double)>& g, double u_from) {
  double peak = 0.0;
  double u = u_from;
  int quiet = 0;
  double cutoff = 14.0;
  for (; u <= 14.0; u += 0.25) {
    double v = std::abs(g(u));
    peak = std::max(peak, v);
    if (peak > 0.0 && v < 1e-16 * peak) {
      if (++quiet >= 4) {
        cutoff = u;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  return std::max(cutoff, u_from + 2.0);
}

}  // namespace

double integrate_real_line(const std::function<double(double)>& f, double center,
                           double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_real_line: scale must be positive");
  auto g = [&](double u) {
    double c = std::cosh(u);
    return f(center + scale * std::sinh(u)) * scale * c;
  };
  double up = sinh_map_cutoff(g, 0.0);
  double um = sinh_map_cutoff([&](double u) { return g(-u); }, 0.0);
  int n = static_cast<int>(64 * std::ceil((up + um) / 1.5));
  return gauss_legendre({-um, up, n}, g);
}

double integrate_half_line(const std::function<double(double)>& f, double lo,
                           double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_half_line: scale must be positive");
  // x = lo + s(cosh u - 1) maps [0, inf) onto [lo, inf); the sinh Jacobian
  // vanishes at u = 0, which only clusters nodes near the endpoint.
  auto g = [&](double u) {
    return f(lo + scale * (std::cosh(u) - 1.0)) * scale * std::sinh(u);
  };
  double up = sinh_map_cutoff(g, 0.0);
  int n = static_cast<int>(64 * std::ceil(up / 1.5));
  return gauss_legendre({0.0, up, n}, g);
}

OdeSolution::OdeSolution(std::vector<double> t, std::vector<std::vector<double>> y,
                         std::vector<std::vector<double>> f)
    : t_(std::move(t)), y_(std::move(y)), f_(std::move(f)) {
  forward_ = t_.back() >= t_.front();
}

std::vector<double> OdeSolution::sample(double t) const {
  double lo = forward_ ? t_.front() : t_.back();
  double hi = forward_ ? t_.back() : t_.front();
  double slack = 1e-9 * (1.0 + std::abs(lo) + std::abs(hi));
  if (t < lo - slack || t > hi + slack)
    throw std::invalid_argument("OdeSolution::sample: t outside integration span");
  t = std::clamp(t, lo, hi);
  size_t i;
  if (forward_) {
    i = std::upper_bound(t_.begin(), t_.end(), t) - t_.begin();
  } else {
    i = std::upper_bound(t_.begin(), t_.end(), t, std::greater<double>()) - t_.begin();
  }
  if (i == 0) i = 1;
  if (i >= t_.size()) i = t_.size() - 1;
  double h = t_[i] - t_[i - 1];
  double s = (t - t_[i - 1]) / h;
  // Cubic Hermite basis over the accepted step.
  double s2 = s * s, s3 = s2 * s;
  double h00 = 2 * s3 - 3 * s2 + 1;
  double h10 = s3 - 2 * s2 + s;
  double h01 = -2 * s3 + 3 * s2;
  double h11 = s3 - s2;
  const auto& y0 = y_[i - 1];
  const auto& y1 = y_[i];
  const auto& f0 = f_[i - 1];
  const auto& f1 = f_[i];
  std::vector<double> out(y0.size());
  for (size_t j = 0; j < y0.size(); ++j)
    out[j] = h00 * y0[j] + h10 * h * f0[j] + h01 * y1[j] + h11 * h * f1[j];
  return out;
}

OdeSolution integrate_ode(const OdeProblem& p, double rel_tol, double abs_tol) {
  if (!(rel_tol > 1e-14 && rel_tol < 1e-2) || !(abs_tol > 1e-14 && abs_tol < 1e-2))
    throw std::invalid_argument("integrate_ode: tolerances must lie in (1e-14, 1e-2)");
  if (p.dimension <= 0 || static_cast<int>(p.initial.size()) != p.dimension)
    throw std::invalid_argument("integrate_ode: initial value length must equal dimension");
  if (p.t0 == p.t1) throw std::invalid_argument("integrate_ode: empty span");

  // Dormand-Prince 5(4) coefficients.
  static const double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
  static const double a21 = 1. / 5;
  static const double a31 = 3. / 40, a32 = 9. / 40;
  static const double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
  static const double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
                      a54 = -212. / 729;
  static const double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247,
                      a64 = 49. / 176, a65 = -5103. / 18656;
  static const double b1 = 35. / 384, b3 = 500. / 1113, b4 = 125. / 192,
                      b5 = -2187. / 6784, b6 = 11. / 84;
  static const double e1 = 71. / 57600, e3 = -71. / 16695, e4 = 71. / 1920,
                      e5 = -17253. / 339200, e6 = 22. / 525, e7 = -1. / 40;

  const int dim = p.dimension;
  const double dir = (p.t1 > p.t0) ? 1.0 : -1.0;
  const double span = std::abs(p.t1 - p.t0);

  std::vector<double> y = p.initial;
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
  std::vector<double> ytmp(dim), ynew(dim);

  double t = p.t0;
  p.rhs(t, y, k1);

  double h = dir * std::min(span / 100.0, 0.1 * (1.0 + std::abs(p.t0)));
  if (std::abs(h) > span) h = dir * span;

  std::vector<double> mesh_t{t};
  std::vector<std::vector<double>> mesh_y{y};
  std::vector<std::vector<double>> mesh_f{k1};

  const long max_steps = 50'000'000L;
  long steps = 0;
  bool done = false;
  while (!done) {
    if (++steps > max_steps) throw std::runtime_error("integrate_ode: step limit exceeded");
    if ((t + h - p.t1) * dir > 0.0) {
      h = p.t1 - t;
      done = true;
    }
    double hmin = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
    if (std::abs(h) < hmin) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "integrate_ode: step size underflow at t = %.17g", t);
      throw stiffness_error(buf, t);
    }

    for (int j = 0; j < dim; ++j) ytmp[j] = y[j] + h * a21 * k1[j];
    p.rhs(t + c2 * h, ytmp, k2);
    for (int j = 0; j < dim; ++j) ytmp[j] = y[j] + h * (a31 * k1[j] + a32 * k2[j]);
    p.rhs(t + c3 * h, ytmp, k3);
    for (int j = 0; j < dim; ++j)
      ytmp[j] = y[j] + h * (a41 * k1[j] + a42 * k2[j] + a43 * k3[j]);
    p.rhs(t + c4 * h, ytmp, k4);
    for (int j = 0; j < dim; ++j)
      ytmp[j] = y[j] + h * (a51 * k1[j] + a52 * k2[j] + a53 * k3[j] + a54 * k4[j]);
    p.rhs(t + c5 * h, ytmp, k5);
    for (int j = 0; j < dim; ++j)
      ytmp[j] = y[j] + h * (a61 * k1[j] + a62 * k2[j] + a63 * k3[j] + a64 * k4[j] +
                            a65 * k5[j]);
    p.rhs(t + h, ytmp, k6);
    for (int j = 0; j < dim; ++j)
      ynew[j] = y[j] + h * (b1 * k1[j] + b3 * k3[j] + b4 * k4[j] + b5 * k5[j] + b6 * k6[j]);
    p.rhs(t + h, ynew, k7);

    double err = 0.0;
    for (int j = 0; j < dim; ++j) {
      double ej = h * (e1 * k1[j] + e3 * k3[j] + e4 * k4[j] + e5 * k5[j] + e6 * k6[j] +
                       e7 * k7[j]);
      double sc = abs_tol + rel_tol * std::max(std::abs(y[j]), std::abs(ynew[j]));
      err += (ej / sc) * (ej / sc);
    }
    err = std::sqrt(err / dim);

    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // first-same-as-last
      mesh_t.push_back(t);
      mesh_y.push_back(y);
      mesh_f.push_back(k1);
      if (done) break;
    } else {
      done = false;
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    fac = std::clamp(fac, 0.2, 5.0);
    h *= fac;
  }
  return OdeSolution(std::move(mesh_t), std::move(mesh_y), std::move(mesh_f));
}

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& x0, double step, double xtol,
                          double ftol, int max_iter) {
  const size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty start point");

  std::vector<std::vector<double>> xs(n + 1, x0);
  for (size_t i = 0; i < n; ++i) xs[i + 1][i] += step;
  std::vector<double> fs(n + 1);
  for (size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  std::vector<size_t> order(n + 1);
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return fs[a] < fs[b]; });

    double diam = 0.0;
    for (size_t i = 1; i <= n; ++i)
      for (size_t j = 0; j < n; ++j)
        diam = std::max(diam, std::abs(xs[order[i]][j] - xs[order[0]][j]));
    if (diam < xtol && fs[order[n]] - fs[order[0]] < ftol) break;

    // Centroid of all but the worst vertex.
    std::vector<double> cen(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) cen[j] += xs[order[i]][j] / n;

    size_t worst = order[n];
    auto blend = [&](double coef) {
      std::vector<double> x(n);
      for (size_t j = 0; j < n; ++j) x[j] = cen[j] + coef * (xs[worst][j] - cen[j]);
      return x;
    };

    std::vector<double> xr = blend(-1.0);
    double fr = f(xr);
    if (fr < fs[order[0]]) {
      std::vector<double> xe = blend(-2.0);
      double fe = f(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[order[n - 1]]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      double coef = (fr < fs[worst]) ? -0.5 : 0.5;
      std::vector<double> xc = blend(coef);
      double fc = f(xc);
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        // Shrink toward the best vertex.
        for (size_t i = 1; i <= n; ++i) {
          size_t v = order[i];
          for (size_t j = 0; j < n; ++j)
            xs[v][j] = xs[order[0]][j] + 0.5 * (xs[v][j] - xs[order[0]][j]);
          fs[v] = f(xs[v]);
        }
      }
    }
  }

  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return fs[a] < fs[b]; });
  return {xs[order[0]], fs[order[0]], iter};
}

}  // namespace cvqt

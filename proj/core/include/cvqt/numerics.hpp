#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvqt {

// Shared numerical substrate: special functions, Gauss-Legendre quadrature,
// adaptive embedded Runge-Kutta integration with dense output, and a
// deterministic derivative-free simplex minimizer.

struct Grid1D {
  double lo;
  double hi;
  int n;  // node count, >= 2
};

// Thrown by the ODE integrator when the step size underflows before the
// local error tolerance can be met.
class stiffness_error : public std::runtime_error {
 public:
  stiffness_error(const std::string& what, double where)
      : std::runtime_error(what), location_(where) {}
  double location() const { return location_; }

 private:
  double location_;
};

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
// n <= 200; throws std::range_error if the recurrence overflows.
double hermite_polynomial(int n, double x);

// Error function, |result| <= 1, absolute error < 1e-12.
double erf(double x);

// Airy function Ai(x) on [-30, 30], absolute error < 1e-10.
// Throws std::range_error outside the domain.
double airy_ai(double x);

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;  // sum to 2
};

// Nodes and weights of the n-point Gauss-Legendre rule, cached per order.
const GaussRule& gauss_rule(int n);

// Integral of f over [grid.lo, grid.hi].  A single n-node panel for
// n <= 64; for larger n the interval is split into 64-node panels.
// Throws std::runtime_error naming the abscissa if f returns a non-finite
// value.
double gauss_legendre(const Grid1D& grid, const std::function<double(double)>& f);

// Integral of f over the whole real line through the map x = c + s sinh(u).
// The u-range is expanded deterministically until the transformed integrand
// falls below 1e-16 of its running peak.
double integrate_real_line(const std::function<double(double)>& f, double center,
                           double scale);

// Same map restricted to [lo, +inf).
double integrate_half_line(const std::function<double(double)>& f, double lo,
                           double scale);

struct OdeProblem {
  int dimension;
  std::function<void(double, const std::vector<double>&, std::vector<double>&)> rhs;
  std::vector<double> initial;
  double t0;
  double t1;
};

// Dense solution of an OdeProblem: accepted step mesh plus a cubic Hermite
// interpolant between mesh points.
class OdeSolution {
 public:
  OdeSolution(std::vector<double> t, std::vector<std::vector<double>> y,
              std::vector<std::vector<double>> f);

  // State at time t, which must lie within the integration span.
  std::vector<double> sample(double t) const;

  const std::vector<double>& times() const { return t_; }
  const std::vector<std::vector<double>>& states() const { return y_; }

 private:
  std::vector<double> t_;
  std::vector<std::vector<double>> y_;  // states at mesh points
  std::vector<std::vector<double>> f_;  // derivatives at mesh points
  bool forward_;
};

// Adaptive Dormand-Prince 5(4) integration.  Tolerances must lie in
// (1e-14, 1e-2); throws std::invalid_argument otherwise and
// stiffness_error on step-size underflow.
OdeSolution integrate_ode(const OdeProblem& p, double rel_tol, double abs_tol);

struct SimplexResult {
  std::vector<double> x;
  double value;
  int iterations;
};

// Deterministic Nelder-Mead minimization (fixed reflection/expansion/
// contraction rules, index-stable ordering).  Terminates when the simplex
// diameter falls below xtol and the value spread below ftol.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& x0, double step, double xtol,
                          double ftol, int max_iter = 2000);

}  // namespace cvqt

#pragma once

#include <complex>
#include <functional>

namespace gnlab {

struct QuadResult {
  std::complex<double> value;
  double error = 0.0;   // estimated absolute error
  int evaluations = 0;
  bool converged = true;
};

// Adaptive Gauss-Kronrod (7-15) on a finite interval. Subdivides the worst
// interval until the summed error estimate falls below
// max(abs_tol, rel_tol * |integral|) or the interval budget runs out.
QuadResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0, int max_intervals = 4000);

// Semi-infinite tail via the rational substitution s = a + u/(1-u). The
// integrand must decay at infinity.
QuadResult integrate_to_infinity(const std::function<std::complex<double>(double)>& f, double a,
                                 double rel_tol = 1e-10, double abs_tol = 0.0,
                                 int max_intervals = 4000);

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      double rel_tol = 1e-10, double abs_tol = 0.0);

} // namespace gnlab

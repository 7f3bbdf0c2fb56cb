#pragma once

#include "gnlab/grid.hpp"

#include <utility>
#include <vector>

namespace gnlab {

// Complex Gamma function, Lanczos approximation with reflection for
// Re(z) < 1/2. The |Gamma|^2 closed forms below serve as its acceptance
// oracle, not as the implementation.
cplx gamma_fn(cplx z);

double unit_ball_volume(int dim); // |B_1|
double sphere_area(int dim);      // sigma_{d-1} = d |B_1|

// c_{alpha,d} = pi^{alpha - d/2} Gamma((d-alpha)/2) / Gamma(alpha/2),
// the constant tying the Riesz potential to the negative-order multiplier:
// the symbol |.|^{-alpha} transforms into c_{alpha,d} |y|^{alpha-d}.
cplx riesz_constant(cplx alpha, int dim);

// Closed-form |Gamma|^2 identities on vertical lines:
//   pure_imaginary:          |Gamma(i y)|^2          = pi / (y sinh(pi y))
//   integer_shift(m):        |Gamma(m + i y)|^2      = pi y/sinh(pi y) * prod_{k=1}^{m-1}(k^2+y^2)
//   half_integer_shift(m):   |Gamma(m - 1/2 + i y)|^2 = pi/cosh(pi y) * prod_{k=1}^{m-1}((k-1/2)^2+y^2)
enum class GammaModulusKind { pure_imaginary, integer_shift, half_integer_shift };
double gamma_modulus_sq(GammaModulusKind kind, double y, int m = 1);

// Constants of the decomposition of the |.|^{i tau} multiplier kernel into a
// principal-value part and a delta:
//   alpha_d(tau) = pi^{-d/2 - i tau} Gamma((d+i tau)/2) / Gamma(-i tau/2)
//   beta_d(tau)  = i d |B_1| / tau * alpha_d(tau)
// p_bound is the explicit product bound dominating the Gamma-modulus ratio
// (degree ceil(d/2) in |tau|, nonnegative coefficients), so
// |alpha_d(tau)| <= pi^{-d/2} p_bound <= p_bound.
struct MultiplierConstants {
  cplx alpha;
  cplx beta;
  double p_bound;
};
MultiplierConstants multiplier_constants(double tau, int dim);

double alpha_product_bound(double tau, int dim);

// Polynomial envelope (degree ceil(d/2)+1, nonnegative coefficients, value
// >= 1 at 0) for the weak-(1,1) norm of the imaginary-order multiplier,
// assembled from |alpha_d|(1+|tau|) + 1 + |beta_d| bounds.
double tau_growth_bound(double tau, int dim);

// Mellin transform of e^{-x/2} - e^{-2x}: equals (2^z - 2^{-z}) Gamma(z);
// vanishes at z = 2 pi i k / log 4, k nonzero integer.
cplx mellin_difference(cplx z);

//==============================================================================
// Bessel-family kernels by adaptive quadrature of the subordination integral
//
//   G(r) = pi^{d/2} / Gamma(w) * \int_0^inf s^{w - 1 - d/2} e^{-s - pi^2 r^2/s} ds
//
// with w = alpha/2 (real order) or w = -i tau/2 (imaginary order). The
// integration domain is split at s = max(1, pi r), where the integrand
// changes character.
//==============================================================================
struct KernelValue {
  cplx value;
  double error; // propagated quadrature error estimate
};

class KernelEval {
public:
  static KernelEval bessel_real(double alpha, int dim, double rel_tol = 1e-8);
  static KernelEval bessel_imaginary(double tau, int dim, double rel_tol = 1e-8);

  // r = 0 is allowed only for real order alpha > d (kernel singular otherwise).
  KernelValue value(double r) const;

  int dim() const { return dim_; }
  double rel_tol() const { return rel_tol_; }

private:
  KernelEval(bool real_kind, double order, int dim, double rel_tol);
  bool real_kind_;
  double order_; // alpha or tau
  int dim_;
  double rel_tol_;
};

KernelValue bessel_kernel(double alpha, double r, int dim, double rel_tol = 1e-8);
KernelValue oscillatory_bessel_kernel(double tau, double r, int dim, double rel_tol = 1e-8);

// \int_{R^d} G_alpha by radial quadrature; the near-origin power/log bound
// makes the singular piece integrable for every alpha > 0.
double bessel_kernel_normalization(double alpha, int dim, double rel_tol = 1e-7);

//==============================================================================
// Hölder-quotient scan for xi^gamma |xi|^{delta - |gamma|}
//==============================================================================
double holder_quotient_scan(const IVec& order, double delta,
                            const std::vector<std::pair<Vec, Vec>>& pairs, int dim);

} // namespace gnlab

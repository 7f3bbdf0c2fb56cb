#pragma once

#include "gnlab/fft.hpp"
#include "gnlab/grid.hpp"

namespace gnlab {

enum class MultiplierFamily { riesz, bessel };
enum class ZeroFrequencyRule { set_zero, error_if_negative_real_part };

// Fourier multiplier m(xi): |xi|^z (riesz) or (1+|xi|^2)^{z/2} (bessel).
struct MultiplierSymbol {
  MultiplierFamily family = MultiplierFamily::riesz;
  cplx order = 0.0;
  ZeroFrequencyRule zero_rule = ZeroFrequencyRule::set_zero;

  cplx value(double xi_norm) const; // xi_norm > 0, or bessel anywhere
};

inline MultiplierSymbol riesz_symbol(cplx z) {
  return {MultiplierFamily::riesz, z, ZeroFrequencyRule::set_zero};
}
inline MultiplierSymbol bessel_symbol(cplx z) {
  return {MultiplierFamily::bessel, z, ZeroFrequencyRule::set_zero};
}

struct MultiplierReport {
  bool zero_mode_dropped = false;
  double dropped_mean = 0.0; // |h^d sum f|, the discarded zero-frequency weight
};

// Inverse transform of symbol * f^. The riesz symbol is undefined at xi = 0
// unless z = 0: orders with Re(z) <= 0 drop the zero mode under the set_zero
// rule and the report records the discarded mean. Under the error rule, a
// smoothing order on input with non-negligible mean is rejected.
GridFunction apply_multiplier(const GridFunction& f, const MultiplierSymbol& m,
                              MultiplierReport* report = nullptr);

// Direct quadrature of the Riesz potential  I_alpha f = f * |y|^{alpha-d}
// over the box (periodic wrap). The cell containing y = 0 contributes the
// exact integral of |y|^{alpha-d} over the ball of equal volume, with f
// frozen at the cell center. Independent of the spectral path.
GridFunction riesz_potential_direct(const GridFunction& f, double alpha);

// Relative L2 discrepancy between D^{z1} D^{z2} f and D^{z1+z2} f.
// Discrete symbols compose exactly, so the discrepancy is at rounding level.
double semigroup_check(const GridFunction& f, cplx z1, cplx z2);

// Radial profile of |x|^s |D^s f(x)|. outer_max is taken over the outer
// half-box (sup-norm distance >= L/4); global_max over the whole box is the
// L^infty surrogate and stays stable under box enlargement, while outer_max
// decays with it.
struct DecayProfile {
  std::vector<std::pair<double, double>> rows; // (|x|, |x|^s |D^s f(x)|), sorted
  double outer_max = 0.0;
  double global_max = 0.0;
};
DecayProfile decay_profile(const GridFunction& f, double s);

} // namespace gnlab

#pragma once

#include "gnlab/grid.hpp"

namespace gnlab {

// Discrete surrogate of the transform pair
//
//   f^(xi) = \int e^{-2 pi i x.xi} f(x) dx,   f(x) = \int e^{2 pi i x.xi} f^(xi) dxi,
//
// on the periodic box: forward coefficients are h^d-weighted sums over lattice
// points, the inverse is (1/L)^d-weighted over the frequency lattice, so the
// pair is exactly inverse and Parseval holds at machine precision.
//
// Coefficients are returned in FFT bin order; bin m carries frequency
// wrap(m)/L per axis.
std::vector<cplx> forward_transform(const GridFunction& f);
GridFunction inverse_transform(const Grid& g, const std::vector<cplx>& coef);

} // namespace gnlab

#include "gnlab/fft.hpp"

#include <fftw3.h>

#include <stdexcept>

namespace gnlab {

namespace {

// Parity of the bin multi-index. With x_j = -L/2 + j h one has
//   e^{-2 pi i x_j . xi_k} = (-1)^{k_1+...+k_d} e^{-2 pi i j.k / N},
// so the box-centered transform is the plain FFT times this sign.
double center_sign(const Grid& g, std::size_t idx) {
  IVec j = g.unflatten(idx);
  int s = 0;
  for (int i = 0; i < g.dim(); ++i) s += j[i];
  return (s % 2 == 0) ? 1.0 : -1.0;
}

void run_fftw(const Grid& g, std::vector<cplx>& data, int sign) {
  int n[3] = {g.points_per_axis(), g.points_per_axis(), g.points_per_axis()};
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = fftw_plan_dft(g.dim(), n, buf, buf, sign, FFTW_ESTIMATE);
  if (!plan) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

} // namespace

std::vector<cplx> forward_transform(const GridFunction& f) {
  std::vector<cplx> coef = f.values;
  run_fftw(f.grid, coef, FFTW_FORWARD);
  const double scale = f.grid.cell_volume();
  for (std::size_t idx = 0; idx < coef.size(); ++idx)
    coef[idx] *= scale * center_sign(f.grid, idx);
  return coef;
}

GridFunction inverse_transform(const Grid& g, const std::vector<cplx>& coef) {
  if (coef.size() != g.size())
    throw std::invalid_argument("inverse_transform: coefficient count mismatch");
  std::vector<cplx> data(coef.size());
  // FFTW backward is unnormalized; the (1/L)^d frequency measure combined with
  // the h^d of the forward pass gives an exact round trip since (N/L)^d = h^-d.
  for (std::size_t idx = 0; idx < coef.size(); ++idx)
    data[idx] = coef[idx] * center_sign(g, idx) * g.freq_cell_volume();
  run_fftw(g, data, FFTW_BACKWARD);
  return GridFunction(g, std::move(data));
}

} // namespace gnlab

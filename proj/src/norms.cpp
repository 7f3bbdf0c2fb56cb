#include "gnlab/norms.hpp"

#include "gnlab/special.hpp"

#include <cmath>
#include <stdexcept>

namespace gnlab {

WeightedNormResult weighted_norm_detailed(const GridFunction& f, const Weight& w, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("weighted_norm: p must be >= 1");
  if (w.dim() != f.grid.dim()) throw std::invalid_argument("weighted_norm: dimension mismatch");
  const Grid& g = f.grid;
  const int d = g.dim();
  const double vol = g.cell_volume();
  const std::size_t origin = g.flatten({g.points_per_axis() / 2, g.points_per_axis() / 2,
                                        g.points_per_axis() / 2});

  double acc = 0.0, singular = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == origin && w.kind() == WeightKind::power_law && w.exponent() != 0.0) continue;
    acc += std::pow(std::abs(f.values[i]), p) * w.eval(g.point(i)) * vol;
  }
  if (w.kind() == WeightKind::power_law && w.exponent() != 0.0) {
    // exact weight integral over the ball of volume h^d, |f| frozen at the
    // cell's representative point (the origin)
    const double rho0 = g.spacing() * std::pow(unit_ball_volume(d), -1.0 / d);
    const double gamma = w.exponent();
    double cell = sphere_area(d) * std::pow(rho0, gamma + d) / (gamma + d);
    singular = std::pow(std::abs(f.values[origin]), p) * cell;
    acc += singular;
  }
  WeightedNormResult res;
  res.value = std::pow(acc, 1.0 / p);
  res.singular_cell_share = acc > 0.0 ? singular / acc : 0.0;
  return res;
}

double weighted_norm(const GridFunction& f, const Weight& w, double p) {
  return weighted_norm_detailed(f, w, p).value;
}

double lp_norm(const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  double acc = 0.0;
  for (const cplx& z : f.values) acc += std::pow(std::abs(z), p);
  return std::pow(acc * f.grid.cell_volume(), 1.0 / p);
}

bool ProductGridFunction::all_finite() const {
  for (const cplx& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double mixed_norm(const ProductGridFunction& F, double p, double q, MixedOrder order,
                  const std::optional<Weight>& weight_x) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw std::invalid_argument("mixed_norm: exponents must be >= 1");
  const std::size_t nx = F.grid_x.size(), ny = F.grid_y.size();
  const double vx = F.grid_x.cell_volume(), vy = F.grid_y.cell_volume();

  auto wx = [&](std::size_t ix) {
    return weight_x ? weight_x->eval(F.grid_x.point(ix)) : 1.0;
  };

  if (order == MixedOrder::x_outer) {
    double outer = 0.0;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      double inner = 0.0;
      for (std::size_t iy = 0; iy < ny; ++iy) inner += std::pow(std::abs(F.at(ix, iy)), q) * vy;
      outer += std::pow(inner, p / q) * wx(ix) * vx;
    }
    return std::pow(outer, 1.0 / p);
  }
  double outer = 0.0;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    double inner = 0.0;
    for (std::size_t ix = 0; ix < nx; ++ix)
      inner += std::pow(std::abs(F.at(ix, iy)), p) * wx(ix) * vx;
    outer += std::pow(inner, q / p) * vy;
  }
  return std::pow(outer, 1.0 / q);
}

} // namespace gnlab

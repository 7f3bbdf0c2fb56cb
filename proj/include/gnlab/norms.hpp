#pragma once

#include "gnlab/grid.hpp"
#include "gnlab/weights.hpp"

#include <optional>

namespace gnlab {

struct WeightedNormResult {
  double value = 0.0;
  double singular_cell_share = 0.0; // fraction of the p-th power mass
};

// (sum |f|^p w h^d)^{1/p}. For power-law weights the cell containing the
// origin uses the exact integral of the weight over the ball of equal volume
// with |f| frozen at the cell's representative point.
WeightedNormResult weighted_norm_detailed(const GridFunction& f, const Weight& w, double p);
double weighted_norm(const GridFunction& f, const Weight& w, double p);

// plain L^p (unit weight)
double lp_norm(const GridFunction& f, double p);

//==============================================================================
// Mixed norms on product grids
//==============================================================================
struct ProductGridFunction {
  Grid grid_x;
  Grid grid_y;
  std::vector<cplx> values; // indexed by x-point major, y-point minor

  ProductGridFunction(const Grid& gx, const Grid& gy, cplx fill = 0.0)
      : grid_x(gx), grid_y(gy), values(gx.size() * gy.size(), fill) {}

  cplx& at(std::size_t ix, std::size_t iy) { return values[ix * grid_y.size() + iy]; }
  cplx at(std::size_t ix, std::size_t iy) const { return values[ix * grid_y.size() + iy]; }
  bool all_finite() const;
};

enum class MixedOrder { x_outer, y_outer };

// Nested discrete norm with exponent p on x and q on y:
//   x_outer: ( int_x w(x) ( int_y |F|^q )^{p/q} )^{1/p}   = L^p_x(w) L^q_y
//   y_outer: ( int_y ( int_x |F|^p w(x) )^{q/p} )^{1/q}   = L^q_y L^p_x(w)
// The optional weight always rides inside the x-integral.
double mixed_norm(const ProductGridFunction& F, double p, double q, MixedOrder order,
                  const std::optional<Weight>& weight_x = std::nullopt);

} // namespace gnlab

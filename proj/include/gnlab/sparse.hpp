#pragma once

#include "gnlab/grid.hpp"
#include "gnlab/spectral.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace gnlab {

//==============================================================================
// Shifted dyadic lattices: cube(k, m) = 2^{-k}([0,1)^d + m + (-1)^k omega/3)
// with omega in {0,1,2}^d. The alternating sign makes level k+1 endpoints
// refine level k, so children partition their parent; the 3^d shifts together
// capture every cube of R^d up to a bounded dilation.
//==============================================================================
class DyadicLattice {
public:
  DyadicLattice(IVec omega, int dim) : omega_(omega), dim_(dim) {}

  int dim() const { return dim_; }
  const IVec& shift() const { return omega_; }

  double side(int level) const { return std::pow(2.0, -level); }
  int sign(int level) const { return (level % 2 == 0) ? 1 : -1; }

  // lower corner coordinate of cube (level, m) along an axis
  double lower(int level, int m, int axis) const {
    return side(level) * (m + sign(level) * omega_[axis] / 3.0);
  }
  // index of the level-k cube containing x
  IVec locate(const Vec& x, int level) const;
  bool contains(int level, const IVec& m, const Vec& x) const;
  // children indices double per axis: 2 m + sign(level) * omega
  IVec child_base(int level, const IVec& m) const;

private:
  IVec omega_;
  int dim_;
};

// The 3^d one-third-shifted lattices of the sparse domination machinery.
std::vector<DyadicLattice> build_lattices(int dim);

class LatticeOnGrid;
// The same family restricted to a box: levels from the box scale down to 4h.
std::vector<LatticeOnGrid> build_lattices(int dim, const Grid& box);

//==============================================================================
// Lattice restricted to a grid: per-level cube sums over cells
//==============================================================================
struct CubeRef {
  int level;
  IVec m;
};

class LatticeOnGrid {
public:
  // levels run from the coarsest cube covering the box down to side >= min_side
  // (default 4h)
  LatticeOnGrid(const DyadicLattice& lattice, const Grid& grid, double min_side = -1.0);

  const DyadicLattice& lattice() const { return lattice_; }
  const Grid& grid() const { return grid_; }
  int top_level() const { return top_level_; }
  int bottom_level() const { return bottom_level_; }

  // packed key of a cube index
  static std::uint64_t key(const IVec& m);

  struct CubeData {
    std::int64_t cells = 0;
    double sum = 0.0; // sum of |f| over cells (unit cell measure)
  };

  // cube sums of |f| at every level
  void accumulate(const GridFunction& f);
  const std::unordered_map<std::uint64_t, CubeData>& level_data(int level) const;
  // cube of the given level containing grid cell i
  const std::vector<std::uint64_t>& cell_keys(int level) const;

  double average(int level, std::uint64_t k) const; // cell-measure average

private:
  DyadicLattice lattice_;
  Grid grid_;
  int top_level_, bottom_level_;
  std::vector<std::unordered_map<std::uint64_t, CubeData>> data_;
  std::vector<std::vector<std::uint64_t>> cell_keys_;
};

//==============================================================================
// Sparse families (stopping time construction)
//==============================================================================
struct SparseMember {
  CubeRef cube;
  std::int64_t cell_count = 0;       // cells of the cube inside the box
  std::int64_t e_cell_count = 0;     // cells kept in E(Q)
  double average = 0.0;              // cell-measure average of |f|
  std::vector<std::uint32_t> e_cells; // grid cells of E(Q)
};

struct SparseFamily {
  std::vector<SparseMember> members;
  double eta = 0.0; // target sparsity constant 1 - 1/ratio
  double ratio = 2.0;
};

// Stopping-time family: top cubes plus, recursively, the maximal descendants
// whose average exceeds ratio times their family ancestor's average. E(Q)
// keeps the cells not claimed by selected descendants; the construction is
// (1 - 1/ratio)-sparse in cell measure.
SparseFamily build_sparse_family(const GridFunction& f, const LatticeOnGrid& lat,
                                 double ratio = 2.0);

// Exact Def-style sparsity check: every member owns at least eta |Q| of its
// cells and the E(Q) sets are pairwise disjoint.
struct SparsityCheck {
  bool eta_ok = true;
  bool disjoint = true;
  double worst_fraction = 1.0;
};
SparsityCheck check_sparsity(const SparseFamily& fam, const LatticeOnGrid& lat);

// sum over member cubes containing x of |Q|^{alpha/d} (avg_Q |f|^r)^{1/r};
// alpha = 0 gives the L^r sparse operator, r = 1 the fractional one.
double apply_sparse(const SparseFamily& fam, const LatticeOnGrid& lat, const GridFunction& f,
                    double r, double alpha, std::size_t point_index);
GridFunction apply_sparse_field(const SparseFamily& fam, const LatticeOnGrid& lat,
                                const GridFunction& f, double r, double alpha);

// Full-lattice fractional sparse sum (every cube of the lattice):
// A^alpha_D f(x) = sum over all cubes containing x of |Q|^{alpha/d} avg_Q |f|.
GridFunction dyadic_fractional_field(const LatticeOnGrid& lat, const GridFunction& f,
                                     double alpha);

//==============================================================================
// Maximal operators
//==============================================================================

// Hardy-Littlewood surrogate: max over dyadic-plus-shift cubes containing the
// point (all 3^d lattices, scales down to the single cell) of avg |f|.
GridFunction maximal_function_field(const GridFunction& f);
double maximal_function(const GridFunction& f, std::size_t point_index);

// Grand maximal operator of the imaginary-order multiplier: oscillation of
// T(f chi_{box \ Q*}) over sample points of Q (corners and center), maximized
// over searched cubes containing the point. Q* is the 5 sqrt(d) dilate.
struct GrandMaximalOptions {
  double tau = 1.0;
  MultiplierFamily family = MultiplierFamily::riesz;
  double min_side_cells = 4.0; // searched cubes have side >= this many h
};
GridFunction grand_maximal_field(const GridFunction& f, const GrandMaximalOptions& opt);

//==============================================================================
// Pointwise domination report (fractional integral vs sparse sums)
//==============================================================================
struct DominationReport {
  // I_alpha f >= (1/lower_constant) * max_j A^alpha_{D^j} f pointwise
  double lower_constant = 0.0; // max_x max_j A_j(x) / I(x)
  double upper_constant = 0.0; // max_x I(x) / sum_j A_j(x)
  double sparse_vs_dyadic = 0.0; // max over lattices of max_x A_D(x) / A_S(x)
  bool sparse_below_dyadic = true; // A_S <= A_D everywhere
  std::size_t worst_point_lower = 0;
  std::size_t worst_point_upper = 0;
  std::vector<double> direct;       // I_alpha f
  std::vector<double> dyadic_sum;   // sum_j A^alpha_{D^j} f
  std::vector<double> sparse_sum;   // sum_j A^alpha_{S_j} f
};
DominationReport domination_report(const GridFunction& f, double alpha, double ratio = 2.0);

} // namespace gnlab

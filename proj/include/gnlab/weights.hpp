#pragma once

#include "gnlab/grid.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gnlab {

//==============================================================================
// Weight descriptors: |x|^gamma (power_law), <x>^gamma (bracket), or a
// positivity-checked table on a grid. Power and bracket weights evaluate
// exactly pointwise; table weights look up the nearest lattice point.
//==============================================================================
enum class WeightKind { power_law, bracket, table };

class Weight {
public:
  static Weight power_law(double gamma, int dim);
  static Weight bracket(double gamma, int dim);
  static Weight table(GridFunction samples);

  WeightKind kind() const { return kind_; }
  double exponent() const { return gamma_; }
  int dim() const { return dim_; }
  bool radial() const { return kind_ != WeightKind::table; }

  double eval(const Vec& x) const;
  double radial_eval(double r) const; // power/bracket only
  const GridFunction* table_data() const { return table_.get(); }

  // the transformed weight v^{-p'/p} stays in the same family
  Weight dual(double p) const;

  std::string describe() const;

private:
  Weight(WeightKind kind, double gamma, int dim) : kind_(kind), gamma_(gamma), dim_(dim) {}
  WeightKind kind_;
  double gamma_ = 0.0;
  int dim_;
  std::shared_ptr<const GridFunction> table_;
};

//==============================================================================
// Closed-form class membership
//==============================================================================
struct Condition {
  std::string name;
  bool satisfied;
  double slack; // >= 0 when satisfied; distance to the boundary
};

struct ApqVerdict {
  bool in_class = true;
  std::vector<Condition> conditions;
  std::vector<std::string> failed_conditions;
  double margin = 0.0; // smallest slack among satisfied conditions

  void add(const std::string& name, bool ok, double slack);
};

// (|x|^a, |x|^b) in A^alpha_{p,q}: alpha >= d/p - d/q, exact balance
// alpha - d/p + d/q = a/p - b/q, a < d(p-1), b > -d.
ApqVerdict power_apq_check(double a, double b, double p, double q, double alpha, int dim);

// (<x>^a, <x>^b) in A^alpha_{p,q}: alpha >= d/p - d/q,
// alpha - d/p + d/q <= a/p - b/q, alpha <= d, b/q <= d/q' - alpha,
// a/p >= alpha - d/p, plus the integrability ranges a < d(p-1), b > -d.
ApqVerdict bracket_apq_check(double a, double b, double p, double q, double alpha, int dim);

struct Interval {
  double lo, hi; // open interval
  bool contains(double x) const { return x > lo && x < hi; }
};

// |x|^g or <x>^g lies in A_p iff g in (-d, d(p-1)).
Interval ap_range(WeightKind kind, double p, int dim);

//==============================================================================
// Numerical A^alpha_{p,q} estimation over a two-sided ball family
//==============================================================================
struct ApqEstimate {
  double estimate = 0.0; // max over searched balls (lower bound for the sup)
  bool diverging = false;
  std::vector<std::pair<double, double>> running_max; // (radius, max up to it)
  std::string note; // records the divergence convention
};

struct BallSearch {
  double radius_min = 1e-3;
  double radius_max = 1e3;
  int radii_per_decade = 8;
  int centers = 12; // geometric |center| ladder along e1, plus the origin
};

// Weight mass over the ball B(center, r) by exact radial quadrature for
// power/bracket kinds (spherical-cap angular factors), grid sums for tables.
double ball_mass(const Weight& w, double center_norm, double radius);

// sup over the searched family of |B|^{alpha/d - 1} (int_B v^{-p'/p})^{1/p'}
// (int_B w)^{1/q}. The divergence flag fires when the running max still grows
// by more than 2x across the outermost decade at either end of the radius
// range, or when a ball mass is infinite.
ApqEstimate estimate_apq_constant(const Weight& v, const Weight& w, double p, double q,
                                  double alpha, const BallSearch& search = {});

// True iff int_R^inf w0(rho) rho^{d-1} drho diverges: for the admitted
// power/bracket exponents (gamma > -d) this always holds. Table weights are
// rejected.
bool cone_mass_check(const Weight& w, double R);

// Smallest searched p <= p_max with gamma in the A_p range, if any.
std::optional<double> ainfty_witness(const Weight& w, double p_max = 64.0);

} // namespace gnlab

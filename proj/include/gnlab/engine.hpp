#pragma once

#include "gnlab/norms.hpp"
#include "gnlab/spectral.hpp"
#include "gnlab/weights.hpp"

#include <string>
#include <vector>

namespace gnlab {

//==============================================================================
// Parameter tuples of the weighted interpolation inequalities
//==============================================================================
struct GNParams {
  int dim = 1;
  double p = 2.0, q = 2.0, r = 2.0;
  double s = 1.0, t = 0.0;
  double theta = 1.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  MultiplierFamily derivative_family = MultiplierFamily::riesz;
  WeightKind weight_family = WeightKind::power_law;
};

struct Admissibility {
  bool admissible = true;
  std::vector<Condition> conditions;
  std::vector<std::string> failed;
  double gamma_upper_bound = 0.0; // d/r' (every admissible tuple stays below)
  double a_exponent = 0.0;        // 1/a = theta/p + (1-theta)/q

  void add(const std::string& name, bool ok, double slack);
};

// Interpolation admissibility for power-law weights: exact balance
//   1/r - (t-gamma)/d = theta (1/p - (s-alpha)/d) + (1-theta)(1/q + beta/d)
// plus the window 0 <= theta alpha + (1-theta) beta - gamma <= theta s - t
// and the exponent ranges.
Admissibility check_homogeneous(const GNParams& P);

// Bracket-weight admissibility: 1/r <= theta/p + (1-theta)/q,
// gamma <= theta alpha + (1-theta) beta, and the two-sided balance chain.
Admissibility check_bracket(const GNParams& P);

// Sobolev-type admissibility: p <= q, t < s < t+d, closed-form A^{s-t}_{p,q}
// membership for the weight pair, the A_inf side conditions, and (for the
// homogeneous derivative family) the cone condition on w.
Admissibility check_sobolev(double p, double q, double s, double t, const Weight& v,
                            const Weight& w, int dim,
                            MultiplierFamily family = MultiplierFamily::riesz);

// Minimum-exponent admissibility: 1/r and gamma must interpolate exactly at
// theta = t/s and the power weights w^{alpha p}, w^{beta q} must lie in their
// A_p / A_q ranges.
Admissibility check_min_exponent(double p, double q, double r, double s, double t, double alpha,
                                 double beta, double gamma, int dim, WeightKind family);

// [t - gamma - d/r] - [theta (s - alpha - d/p) + (1-theta)(-beta - d/q)];
// vanishes exactly on the balance equality.
double scaling_exponent_gap(const GNParams& P);

//==============================================================================
// Numerical verification
//==============================================================================
struct FunctionRatio {
  std::string name;
  double lhs = 0.0, rhs = 0.0, ratio = 0.0;
};

struct VerificationReport {
  GNParams params;
  std::vector<FunctionRatio> per_function;
  double max_ratio = 0.0;
  bool refined = false;
  double refinement_drift = 0.0;    // max relative ratio change under N -> 2N
  double worst_singular_share = 0.0; // largest singular-cell share met in any norm
};

// The weight carrying the |x|^gamma (or <x>^gamma) factor of a product norm
// ||w^gamma f||_{L^e}: exponent gamma * e in the L^e(w) convention.
Weight product_norm_weight(WeightKind kind, double gamma, double exponent, int dim);

// LHS = || w^gamma D^t f ||_r, RHS = || w^alpha D^s f ||_p^theta
// || w^beta f ||_q^{1-theta} for every corpus member; inadmissible parameters
// are rejected before any computation.
VerificationReport verify_inequality(const GNParams& P, const std::vector<TestFunction>& corpus,
                                     const Grid& grid, bool refine = true);

struct OrbitSearch {
  std::vector<double> dilations{1.0};
  std::vector<double> translations{0.0}; // shifts along e1
  std::vector<double> modulations{0.0};  // frequency shifts along e1
};

// Max ratio over the transformed corpus orbit; monotone in the search size.
double estimate_best_constant(const GNParams& P, const std::vector<TestFunction>& corpus,
                              const Grid& grid, const OrbitSearch& search);

//==============================================================================
// Mixed-norm inequality (x-derivative route)
//==============================================================================
struct MixedParams {
  double p = 2.0, q = 4.0;
  double s = 0.75;
  double gamma = 1.0;
  int dim_x = 3, dim_y = 1;
  MultiplierFamily family = MultiplierFamily::bessel;
};

// F(x,y) = sum_k g_k(x) h_k(y); one term means separable.
struct MixedTestCase {
  std::string name;
  std::vector<std::pair<TestFunction, TestFunction>> terms;
};

struct MixedCaseResult {
  std::string name;
  double lhs = 0.0, rhs = 0.0, ratio = 0.0;
  bool separable = false;
  double separable_consistency = 0.0; // |ratio - 1d ratio| / 1d ratio
};

struct MixedReport {
  std::vector<Condition> conditions;
  bool admissible = true;
  double window_lo = 0.0, window_hi = 0.0; // ]s, d/p'[
  bool integrability = false;              // gamma q p / (q - p) > d
  double integrability_exponent = 0.0;
  std::vector<MixedCaseResult> cases;
  double max_ratio = 0.0;
};

// Throws "empty admissible gamma window" when ]s, d/p'[ is empty.
MixedReport verify_mixed(const MixedParams& P, const std::vector<MixedTestCase>& cases,
                         const Grid& grid_x, const Grid& grid_y);

// J^s (or D^s) applied along x to every y-slice.
ProductGridFunction apply_multiplier_x(const ProductGridFunction& F, const MultiplierSymbol& m);

ProductGridFunction sample_product(const MixedTestCase& tc, const Grid& gx, const Grid& gy);

} // namespace gnlab

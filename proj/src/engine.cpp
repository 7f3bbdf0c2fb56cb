#include "gnlab/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gnlab {

void Admissibility::add(const std::string& name, bool ok, double slack) {
  conditions.push_back({name, ok, slack});
  if (!ok) {
    admissible = false;
    failed.push_back(name);
  }
}

namespace {

void add_ranges(Admissibility& adm, const GNParams& P) {
  const double d = P.dim;
  auto open_range = [&](const std::string& name, double value, double lo, double hi) {
    adm.add(name, value > lo && value < hi, std::min(value - lo, hi - value));
  };
  open_range("1 < p < inf", P.p, 1.0, 1e12);
  open_range("1 < q < inf", P.q, 1.0, 1e12);
  open_range("1 < r < inf", P.r, 1.0, 1e12);
  adm.add("0 <= t < s", P.t >= 0.0 && P.t < P.s, std::min(P.t, P.s - P.t));
  double tl = P.s > 0.0 ? P.t / P.s : 1.0;
  adm.add("t/s <= theta <= 1", P.theta >= tl - 1e-15 && P.theta <= 1.0 + 1e-15,
          std::min(P.theta - tl, 1.0 - P.theta));
  const double pp = P.p / (P.p - 1.0), qq = P.q / (P.q - 1.0);
  adm.add("alpha in ]-d/p, d/p'[", P.alpha > -d / P.p && P.alpha < d / pp,
          std::min(P.alpha + d / P.p, d / pp - P.alpha));
  adm.add("beta in ]-d/q, d/q'[", P.beta > -d / P.q && P.beta < d / qq,
          std::min(P.beta + d / P.q, d / qq - P.beta));
  adm.add("gamma > -d/r", P.gamma > -d / P.r, P.gamma + d / P.r);
}

void fill_derived(Admissibility& adm, const GNParams& P) {
  adm.gamma_upper_bound = P.dim * (1.0 - 1.0 / P.r);
  adm.a_exponent = 1.0 / (P.theta / P.p + (1.0 - P.theta) / P.q);
}

} // namespace

Admissibility check_homogeneous(const GNParams& P) {
  if (P.weight_family != WeightKind::power_law)
    throw std::invalid_argument("check_homogeneous: power-law weight family expected");
  Admissibility adm;
  const double d = P.dim;
  add_ranges(adm, P);

  double lhs = 1.0 / P.r - (P.t - P.gamma) / d;
  double rhs = P.theta * (1.0 / P.p - (P.s - P.alpha) / d) +
               (1.0 - P.theta) * (1.0 / P.q + P.beta / d);
  adm.add("balance equality", std::abs(lhs - rhs) <= 1e-12, -std::abs(lhs - rhs));

  double mix = P.theta * P.alpha + (1.0 - P.theta) * P.beta - P.gamma;
  adm.add("0 <= theta alpha + (1-theta) beta - gamma", mix >= -1e-15, mix);
  adm.add("theta alpha + (1-theta) beta - gamma <= theta s - t",
          mix <= P.theta * P.s - P.t + 1e-15, P.theta * P.s - P.t - mix);

  fill_derived(adm, P);
  return adm;
}

Admissibility check_bracket(const GNParams& P) {
  if (P.weight_family != WeightKind::bracket)
    throw std::invalid_argument("check_bracket: bracket weight family expected");
  Admissibility adm;
  const double d = P.dim;
  add_ranges(adm, P);

  double cap = P.theta / P.p + (1.0 - P.theta) / P.q;
  adm.add("1/r <= theta/p + (1-theta)/q", 1.0 / P.r <= cap + 1e-15, cap - 1.0 / P.r);

  double mix = P.theta * P.alpha + (1.0 - P.theta) * P.beta;
  adm.add("gamma <= theta alpha + (1-theta) beta", P.gamma <= mix + 1e-15, mix - P.gamma);

  double mid = 1.0 / P.r - P.t / d;
  double lo = P.theta * (1.0 / P.p - P.s / d) + (1.0 - P.theta) / P.q;
  double hi = P.theta * (1.0 / P.p - (P.s - P.alpha) / d) +
              (1.0 - P.theta) * (1.0 / P.q + P.beta / d) - P.gamma / d;
  adm.add("lower balance <= 1/r - t/d", lo <= mid + 1e-15, mid - lo);
  adm.add("1/r - t/d <= upper balance", mid <= hi + 1e-15, hi - mid);

  fill_derived(adm, P);
  return adm;
}

Admissibility check_sobolev(double p, double q, double s, double t, const Weight& v,
                            const Weight& w, int dim, MultiplierFamily family) {
  Admissibility adm;
  const double d = dim;
  adm.add("1 < p <= q < inf", p > 1.0 && p <= q, std::min(p - 1.0, q - p));
  adm.add("t < s < t + d", t < s && s < t + d, std::min(s - t, t + d - s));

  if (v.kind() == WeightKind::table || w.kind() == WeightKind::table)
    throw std::invalid_argument("check_sobolev: closed-form membership needs power/bracket weights");
  if (v.kind() != w.kind())
    throw std::invalid_argument("check_sobolev: weight pair must share a family");

  ApqVerdict pair = v.kind() == WeightKind::power_law
                        ? power_apq_check(v.exponent(), w.exponent(), p, q, s - t, dim)
                        : bracket_apq_check(v.exponent(), w.exponent(), p, q, s - t, dim);
  adm.add("(v,w) in A_pq^{s-t}", pair.in_class, pair.in_class ? pair.margin : -1.0);

  adm.add("v^{-p'/p} in A_inf", v.exponent() < d * (p - 1.0), d * (p - 1.0) - v.exponent());
  adm.add("w in A_inf", w.exponent() > -d, w.exponent() + d);

  if (family == MultiplierFamily::riesz)
    adm.add("cone condition on w", cone_mass_check(w, 1.0), 0.0);

  adm.gamma_upper_bound = d * (1.0 - 1.0 / q);
  adm.a_exponent = p;
  return adm;
}

Admissibility check_min_exponent(double p, double q, double r, double s, double t, double alpha,
                                 double beta, double gamma, int dim, WeightKind family) {
  if (!(t > 0.0) || !(t < s)) throw std::invalid_argument("check_min_exponent: need 0 < t < s");
  Admissibility adm;
  const double d = dim;
  const double th = t / s;

  auto above_one = [&](const std::string& name, double value) {
    adm.add(name, value > 1.0, value - 1.0);
  };
  above_one("p > 1", p);
  above_one("q > 1", q);
  above_one("r > 1", r);

  double rgap = 1.0 / r - (th / p + (1.0 - th) / q);
  adm.add("1/r = (t/s)/p + (1 - t/s)/q", std::abs(rgap) <= 1e-12, -std::abs(rgap));
  double ggap = gamma - (th * alpha + (1.0 - th) * beta);
  adm.add("gamma = (t/s) alpha + (1 - t/s) beta", std::abs(ggap) <= 1e-12, -std::abs(ggap));

  Interval ip = ap_range(family, p, dim);
  Interval iq = ap_range(family, q, dim);
  adm.add("w^{alpha p} in A_p", ip.contains(alpha * p),
          std::min(alpha * p - ip.lo, ip.hi - alpha * p));
  adm.add("w^{beta q} in A_q", iq.contains(beta * q),
          std::min(beta * q - iq.lo, iq.hi - beta * q));

  adm.gamma_upper_bound = d * (1.0 - 1.0 / r);
  adm.a_exponent = r;
  return adm;
}

double scaling_exponent_gap(const GNParams& P) {
  if (P.weight_family != WeightKind::power_law)
    throw std::invalid_argument("scaling_exponent_gap: power-law weight family expected");
  const double d = P.dim;
  double lhs = P.t - P.gamma - d / P.r;
  double rhs = P.theta * (P.s - P.alpha - d / P.p) + (1.0 - P.theta) * (-P.beta - d / P.q);
  return lhs - rhs;
}

//==============================================================================
// Verification
//==============================================================================

Weight product_norm_weight(WeightKind kind, double gamma, double exponent, int dim) {
  double g = gamma * exponent;
  return kind == WeightKind::power_law ? Weight::power_law(g, dim) : Weight::bracket(g, dim);
}

namespace {

GridFunction derivative(const GridFunction& f, MultiplierFamily family, double order) {
  MultiplierSymbol sym{family, cplx(order, 0.0), ZeroFrequencyRule::set_zero};
  return apply_multiplier(f, sym);
}

FunctionRatio one_ratio(const GNParams& P, const TestFunction& tf, const Grid& grid,
                        double* singular_share) {
  GridFunction f = sample(tf, grid);
  GridFunction dt = derivative(f, P.derivative_family, P.t);
  GridFunction ds = derivative(f, P.derivative_family, P.s);

  Weight wl = product_norm_weight(P.weight_family, P.gamma, P.r, P.dim);
  Weight wa = product_norm_weight(P.weight_family, P.alpha, P.p, P.dim);
  Weight wb = product_norm_weight(P.weight_family, P.beta, P.q, P.dim);

  WeightedNormResult lhs = weighted_norm_detailed(dt, wl, P.r);
  WeightedNormResult r1 = weighted_norm_detailed(ds, wa, P.p);
  WeightedNormResult r2 = weighted_norm_detailed(f, wb, P.q);

  if (singular_share)
    *singular_share = std::max({*singular_share, lhs.singular_cell_share, r1.singular_cell_share,
                                r2.singular_cell_share});

  FunctionRatio fr;
  fr.name = tf.describe();
  fr.lhs = lhs.value;
  fr.rhs = std::pow(r1.value, P.theta) * std::pow(r2.value, 1.0 - P.theta);
  if (!std::isfinite(fr.lhs) || !std::isfinite(fr.rhs))
    throw std::runtime_error("verify_inequality: non-finite norm for " + fr.name);
  fr.ratio = fr.rhs > 0.0 ? fr.lhs / fr.rhs : 0.0;
  return fr;
}

} // namespace

VerificationReport verify_inequality(const GNParams& P, const std::vector<TestFunction>& corpus,
                                     const Grid& grid, bool refine) {
  Admissibility adm = P.weight_family == WeightKind::power_law ? check_homogeneous(P)
                                                               : check_bracket(P);
  if (!adm.admissible) {
    std::ostringstream os;
    os << "verify_inequality: inadmissible parameters:";
    for (const std::string& name : adm.failed) os << " [" << name << "]";
    throw std::domain_error(os.str());
  }

  VerificationReport rep;
  rep.params = P;
  for (const TestFunction& tf : corpus) {
    FunctionRatio fr = one_ratio(P, tf, grid, &rep.worst_singular_share);
    rep.max_ratio = std::max(rep.max_ratio, fr.ratio);
    rep.per_function.push_back(fr);
  }

  if (refine) {
    Grid fine(grid.dim(), grid.extent(), grid.points_per_axis() * 2);
    rep.refined = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      FunctionRatio fr = one_ratio(P, corpus[i], fine, nullptr);
      double base = rep.per_function[i].ratio;
      if (base > 0.0)
        rep.refinement_drift = std::max(rep.refinement_drift, std::abs(fr.ratio / base - 1.0));
    }
  }
  return rep;
}

double estimate_best_constant(const GNParams& P, const std::vector<TestFunction>& corpus,
                              const Grid& grid, const OrbitSearch& search) {
  double best = 0.0;
  double share = 0.0;
  for (const TestFunction& tf : corpus)
    for (double lam : search.dilations)
      for (double shift : search.translations)
        for (double k : search.modulations) {
          TestFunction moved = TestFunction::dilated(tf, lam).translated({shift, 0, 0});
          if (k != 0.0) moved = moved.modulated({k, 0, 0});
          FunctionRatio fr = one_ratio(P, moved, grid, &share);
          best = std::max(best, fr.ratio);
        }
  return best;
}

//==============================================================================
// Mixed norms
//==============================================================================

ProductGridFunction apply_multiplier_x(const ProductGridFunction& F, const MultiplierSymbol& m) {
  ProductGridFunction out(F.grid_x, F.grid_y);
  const std::size_t ny = F.grid_y.size();
  GridFunction slice(F.grid_x);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < F.grid_x.size(); ++ix) slice.values[ix] = F.at(ix, iy);
    GridFunction transformed = apply_multiplier(slice, m);
    for (std::size_t ix = 0; ix < F.grid_x.size(); ++ix) out.at(ix, iy) = transformed.values[ix];
  }
  return out;
}

ProductGridFunction sample_product(const MixedTestCase& tc, const Grid& gx, const Grid& gy) {
  ProductGridFunction F(gx, gy);
  for (const auto& [g, h] : tc.terms) {
    GridFunction fx = sample(g, gx);
    GridFunction fy = sample(h, gy);
    for (std::size_t ix = 0; ix < gx.size(); ++ix)
      for (std::size_t iy = 0; iy < gy.size(); ++iy) F.at(ix, iy) += fx.values[ix] * fy.values[iy];
  }
  return F;
}

MixedReport verify_mixed(const MixedParams& P, const std::vector<MixedTestCase>& cases,
                         const Grid& grid_x, const Grid& grid_y) {
  const double d = P.dim_x;
  const double pp = P.p / (P.p - 1.0);
  MixedReport rep;
  rep.window_lo = P.s;
  rep.window_hi = d / pp;
  if (!(rep.window_hi > rep.window_lo))
    throw std::domain_error("empty admissible gamma window");

  auto add = [&](const std::string& name, bool ok, double slack) {
    rep.conditions.push_back({name, ok, slack});
    if (!ok) rep.admissible = false;
  };
  add("1 < p <= q < inf", P.p > 1.0 && P.p <= P.q, std::min(P.p - 1.0, P.q - P.p));
  add("2q/(q+1) < p < q", P.p > 2.0 * P.q / (P.q + 1.0) && P.p < P.q,
      std::min(P.p - 2.0 * P.q / (P.q + 1.0), P.q - P.p));
  double sgap = P.s - d * (1.0 / P.p - 1.0 / P.q);
  add("s = d(1/p - 1/q)", std::abs(sgap) <= 1e-12, -std::abs(sgap));
  add("gamma in ]s, d/p\'[", P.gamma > rep.window_lo && P.gamma < rep.window_hi,
      std::min(P.gamma - rep.window_lo, rep.window_hi - P.gamma));

  rep.integrability_exponent = P.gamma * P.q * P.p / (P.q - P.p);
  rep.integrability = rep.integrability_exponent > d; // int w^{-p/(q-p)} finite

  if (!rep.admissible) return rep;

  MultiplierSymbol sym{P.family, cplx(P.s, 0.0), ZeroFrequencyRule::set_zero};
  Weight wx = Weight::bracket(P.gamma * P.p, P.dim_x);

  for (const MixedTestCase& tc : cases) {
    ProductGridFunction F = sample_product(tc, grid_x, grid_y);
    ProductGridFunction DF = apply_multiplier_x(F, sym);

    MixedCaseResult res;
    res.name = tc.name;
    res.lhs = mixed_norm(F, P.p, P.q, MixedOrder::x_outer);
    res.rhs = mixed_norm(DF, P.p, P.q, MixedOrder::y_outer, wx);
    res.ratio = res.rhs > 0.0 ? res.lhs / res.rhs : 0.0;
    res.separable = tc.terms.size() == 1;
    if (res.separable) {
      GridFunction gx = sample(tc.terms[0].first, grid_x);
      GridFunction dgx = apply_multiplier(gx, sym);
      double one_d = lp_norm(gx, P.p) / weighted_norm(dgx, wx, P.p);
      res.separable_consistency = std::abs(res.ratio - one_d) / one_d;
    }
    rep.max_ratio = std::max(rep.max_ratio, res.ratio);
    rep.cases.push_back(res);
  }
  return rep;
}

} // namespace gnlab

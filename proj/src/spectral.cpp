#include "gnlab/spectral.hpp"

#include "gnlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gnlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

cplx MultiplierSymbol::value(double xi_norm) const {
  if (family == MultiplierFamily::bessel)
    return std::exp(0.5 * order * std::log1p(xi_norm * xi_norm));
  if (order == 0.0) return 1.0;
  return std::exp(order * std::log(xi_norm));
}

GridFunction apply_multiplier(const GridFunction& f, const MultiplierSymbol& m,
                              MultiplierReport* report) {
  if (!f.all_finite()) throw std::invalid_argument("apply_multiplier: input has non-finite values");

  std::vector<cplx> coef = forward_transform(f);
  MultiplierReport rep;

  if (m.family == MultiplierFamily::riesz && m.order != 0.0) {
    // coef[0] is the discrete integral h^d sum f; divide by the box volume
    // for the mean over lattice points.
    double box_volume = std::pow(f.grid.extent(), f.grid.dim());
    rep.dropped_mean = std::abs(coef[0]) / box_volume;
    rep.zero_mode_dropped = m.order.real() <= 0.0;
    if (m.order.real() < 0.0 && m.zero_rule == ZeroFrequencyRule::error_if_negative_real_part &&
        rep.dropped_mean > 1e-8 * f.max_abs())
      throw std::domain_error("Riesz smoothing undefined on nonzero-mean input");
  }

  const Grid& g = f.grid;
  for (std::size_t idx = 0; idx < coef.size(); ++idx) {
    double xin = g.freq_norm(idx);
    if (xin == 0.0 && m.family == MultiplierFamily::riesz) {
      if (m.order != 0.0) coef[idx] = 0.0; // z = 0 keeps the identity exact
      continue;
    }
    coef[idx] *= m.value(xin);
  }
  if (report) *report = rep;
  return inverse_transform(g, coef);
}

GridFunction riesz_potential_direct(const GridFunction& f, double alpha) {
  const Grid& g = f.grid;
  const int d = g.dim();
  if (!(alpha > 0.0) || !(alpha < static_cast<double>(d)))
    throw std::invalid_argument("riesz potential: alpha must lie in (0, d)");

  const double h = g.spacing();
  const double vol = g.cell_volume();
  const int n = g.points_per_axis();
  const double L = g.extent();

  // Per-cell moments of |y|^{alpha-d}: m0 = \int_cell K, and centered moments
  // \int_cell (y-y_j)^beta K up to |beta| = 4. Freezing f at cell centers and
  // coupling the higher moments to finite-difference derivatives of f makes
  // the product quadrature fourth-order accurate; a lattice reindex
  // (summation by parts) folds every correction into one effective kernel.
  enum {
    M0,       // cell mass
    M1A,      // u_a
    M2AA,     // u_a^2
    M2AB,     // u_a u_b (a<b)
    M3AAA,    // u_a^3
    M3ABB,    // u_a u_b^2 (a != b)
    M4AAAA,   // u_a^4
    M4AABB,   // u_a^2 u_b^2 (a<b)
    KINDS
  };
  auto pair_slot = [](int a, int b) { return a == 0 ? (b == 1 ? 0 : 1) : 2; };
  // component counts per kind for d<=3
  std::array<std::array<std::vector<double>, 6>, KINDS> mom;
  const int ncomp[KINDS] = {1, d, d, d * (d - 1) / 2, d, d * (d - 1), d, d * (d - 1) / 2};
  for (int k = 0; k < KINDS; ++k)
    for (int c = 0; c < ncomp[k]; ++c) mom[k][c].assign(g.size(), 0.0);

  static const double gauss_x[4] = {0.069431844202974, 0.330009478207572,
                                    0.669990521792428, 0.930568155797026};
  static const double gauss_w[4] = {0.173927422568727, 0.326072577431273,
                                    0.326072577431273, 0.173927422568727};

  auto accumulate = [&](std::size_t j, double kv, const Vec& u) {
    mom[M0][0][j] += kv;
    for (int a = 0; a < d; ++a) {
      mom[M1A][a][j] += kv * u[a];
      mom[M2AA][a][j] += kv * u[a] * u[a];
      mom[M3AAA][a][j] += kv * u[a] * u[a] * u[a];
      mom[M4AAAA][a][j] += kv * u[a] * u[a] * u[a] * u[a];
    }
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        mom[M2AB][pair_slot(a, b)][j] += kv * u[a] * u[b];
        mom[M4AABB][pair_slot(a, b)][j] += kv * u[a] * u[a] * u[b] * u[b];
      }
    int slot = 0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (a == b) continue;
        mom[M3ABB][slot++][j] += kv * u[a] * u[b] * u[b];
      }
  };

  const int near = 16; // cells within 16h of the origin get the careful rule
  for (std::size_t j = 0; j < g.size(); ++j) {
    IVec jv = g.unflatten(j);
    int off = 0;
    for (int i = 0; i < d; ++i) off = std::max(off, std::abs(jv[i] - n / 2));
    if (off == 0) continue; // singular cell handled below
    Vec y = g.point(j);
    if (off <= near) {
      // tensor Gauss for all moments
      IVec q{0, 0, 0};
      auto visit = [&](auto&& self, int axis) -> void {
        if (axis == d) {
          double w = 1.0, r2 = 0.0;
          Vec u{0, 0, 0};
          for (int i = 0; i < d; ++i) {
            u[i] = (gauss_x[q[i]] - 0.5) * h;
            double yi = y[i] + u[i];
            r2 += yi * yi;
            w *= gauss_w[q[i]];
          }
          accumulate(j, w * std::pow(r2, 0.5 * (alpha - d)) * vol, u);
          return;
        }
        for (q[axis] = 0; q[axis] < 4; ++q[axis]) self(self, axis + 1);
        q[axis] = 0;
      };
      visit(visit, 0);
    } else {
      // midpoint values; leading moments from the smooth-kernel expansion
      double r = g.radius(j);
      double kv = std::pow(r, alpha - d) * vol;
      double grad = (alpha - d) * std::pow(r, alpha - d - 2.0); // dK/dy_a = grad*y_a
      mom[M0][0][j] = kv;
      for (int a = 0; a < d; ++a) {
        mom[M1A][a][j] = grad * y[a] * vol * h * h / 12.0;
        mom[M2AA][a][j] = kv * h * h / 12.0;
        mom[M3AAA][a][j] = grad * y[a] * vol * h * h * h * h / 80.0;
        mom[M4AAAA][a][j] = kv * h * h * h * h / 80.0;
      }
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
          mom[M4AABB][pair_slot(a, b)][j] = kv * h * h * h * h / 144.0;
      int slot = 0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          if (a == b) continue;
          mom[M3ABB][slot++][j] = grad * y[a] * vol * h * h * h * h / 144.0;
        }
    }
  }

  // Singular cell: exact moments of the equal-volume ball rule. Odd moments
  // vanish; sphere averages give E[u_a^2] = 1/d, E[u_a^4] = 3/(d(d+2)),
  // E[u_a^2 u_b^2] = 1/(d(d+2)).
  const double rho0 = h * std::pow(unit_ball_volume(d), -1.0 / d);
  const std::size_t center = g.flatten({n / 2, n / 2, n / 2});
  const double sig = sphere_area(d);
  mom[M0][0][center] = sig * std::pow(rho0, alpha) / alpha;
  const double ball4 = sig * std::pow(rho0, alpha + 4.0) / (alpha + 4.0);
  for (int a = 0; a < d; ++a) {
    mom[M2AA][a][center] = sig * std::pow(rho0, alpha + 2.0) / (alpha + 2.0) / d;
    mom[M4AAAA][a][center] = ball4 * 3.0 / (d * (d + 2.0));
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      mom[M4AABB][pair_slot(a, b)][center] = ball4 / (d * (d + 2.0));

  // Periodization images. On the periodic box the convolution sees
  // sum_m |y + mL|^{alpha-d}; the divergent constant part of the image sum is
  // annihilated by (numerically) zero-moment inputs, and the dipole parts of
  // the +-m pairs cancel, so a symmetric truncation converges quickly.
  const int images = d == 1 ? 64 : (d == 2 ? 16 : 4);
  for (std::size_t j = 0; j < g.size(); ++j) {
    Vec y = g.point(j);
    double acc = 0.0;
    IVec m{0, 0, 0};
    auto visit = [&](auto&& self, int axis) -> void {
      if (axis == d) {
        if (m[0] == 0 && m[1] == 0 && m[2] == 0) return;
        double r2 = 0.0;
        for (int i = 0; i < d; ++i) {
          double u = y[i] + m[i] * L;
          r2 += u * u;
        }
        acc += std::pow(r2, 0.5 * (alpha - d));
        return;
      }
      for (m[axis] = -images; m[axis] <= images; ++m[axis]) self(self, axis + 1);
      m[axis] = 0;
    };
    visit(visit, 0);
    mom[M0][0][j] += acc * vol;
  }

  // Difference stencils (s = -2..2) for f', f'', f''', f'''' at the accuracy
  // the overall scheme needs.
  const double d1s[5] = {1 / (12 * h), -8 / (12 * h), 0, 8 / (12 * h), -1 / (12 * h)};
  const double d2s[5] = {-1 / (12 * h * h), 16 / (12 * h * h), -30 / (12 * h * h),
                         16 / (12 * h * h), -1 / (12 * h * h)};
  const double d3s[5] = {-1 / (2 * h * h * h), 2 / (2 * h * h * h), 0,
                         -2 / (2 * h * h * h), 1 / (2 * h * h * h)};
  const double d4s[5] = {1 / (h * h * h * h), -4 / (h * h * h * h), 6 / (h * h * h * h),
                         -4 / (h * h * h * h), 1 / (h * h * h * h)};

  // Transposed application: a term  c * sum_j mfield_j (Df)(x - y_j)  adds
  // c * sum_s stencil_s mfield_{z + s e_a}  to the effective kernel at z.
  auto add_axis = [&](std::vector<double>& out, const std::vector<double>& field,
                      int axis, const double* stencil, double scale) {
    for (std::size_t z = 0; z < g.size(); ++z) {
      IVec zv = g.unflatten(z);
      double t = 0.0;
      for (int s = -2; s <= 2; ++s) {
        if (stencil[s + 2] == 0.0) continue;
        IVec jv = zv;
        jv[axis] += s;
        t += stencil[s + 2] * field[g.flatten_wrapped(jv)];
      }
      out[z] += scale * t;
    }
  };
  auto add_two_axes = [&](std::vector<double>& out, const std::vector<double>& field, int axis_a,
                          const double* sa, int axis_b, const double* sb, double scale) {
    for (std::size_t z = 0; z < g.size(); ++z) {
      IVec zv = g.unflatten(z);
      double t = 0.0;
      for (int s = -2; s <= 2; ++s) {
        if (sa[s + 2] == 0.0) continue;
        for (int u = -2; u <= 2; ++u) {
          if (sb[u + 2] == 0.0) continue;
          IVec jv = zv;
          jv[axis_a] += s;
          jv[axis_b] += u;
          t += sa[s + 2] * sb[u + 2] * field[g.flatten_wrapped(jv)];
        }
      }
      out[z] += scale * t;
    }
  };

  std::vector<double> kernel = mom[M0][0];
  for (int a = 0; a < d; ++a) {
    add_axis(kernel, mom[M1A][a], a, d1s, -1.0);
    add_axis(kernel, mom[M2AA][a], a, d2s, 0.5);
    add_axis(kernel, mom[M3AAA][a], a, d3s, -1.0 / 6.0);
    add_axis(kernel, mom[M4AAAA][a], a, d4s, 1.0 / 24.0);
  }
  {
    int slot = 0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (a == b) continue;
        // -(1/6) * 3 * m3[abb] d_a d_b^2
        add_two_axes(kernel, mom[M3ABB][slot++], a, d1s, b, d2s, -0.5);
      }
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      // (1/2) * 2 * m2[ab] d_a d_b  and  (1/24) * 6 * m4[aabb] d_a^2 d_b^2
      add_two_axes(kernel, mom[M2AB][pair_slot(a, b)], a, d1s, b, d1s, 1.0);
      add_two_axes(kernel, mom[M4AABB][pair_slot(a, b)], a, d2s, b, d2s, 0.25);
    }

  // Wrapped index of x_a - y_b per axis; the lattice origin sits at index n/2,
  // so the offset index is a - b + n/2 modulo n.
  std::vector<int> diff(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = (a - b + n / 2) % n;
      if (m < 0) m += n;
      diff[static_cast<std::size_t>(a) * n + b] = m;
    }
  auto dt = [&](int a, int b) { return diff[static_cast<std::size_t>(a) * n + b]; };

  GridFunction out(g);
  if (d == 1) {
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < n; ++j) acc += f.values[dt(i, j)] * kernel[j];
      out.values[i] = acc;
    }
  } else if (d == 2) {
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = 0; i2 < n; ++i2) {
        cplx acc = 0.0;
        for (int j1 = 0; j1 < n; ++j1) {
          const cplx* frow = &f.values[static_cast<std::size_t>(dt(i1, j1)) * n];
          const double* krow = &kernel[static_cast<std::size_t>(j1) * n];
          for (int j2 = 0; j2 < n; ++j2) acc += frow[dt(i2, j2)] * krow[j2];
        }
        out.values[static_cast<std::size_t>(i1) * n + i2] = acc;
      }
  } else {
    for (std::size_t i = 0; i < g.size(); ++i) {
      IVec iv = g.unflatten(i);
      cplx acc = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        IVec jv = g.unflatten(j);
        IVec kv{dt(iv[0], jv[0]), dt(iv[1], jv[1]), dt(iv[2], jv[2])};
        acc += f.values[g.flatten(kv)] * kernel[j];
      }
      out.values[i] = acc;
    }
  }
  return out;
}

double semigroup_check(const GridFunction& f, cplx z1, cplx z2) {
  const double d = f.grid.dim();
  for (cplx z : {z1, z2, z1 + z2})
    if (z.real() < -d + 0.1)
      throw std::invalid_argument("semigroup_check: order out of the admitted range");
  double box_volume = std::pow(f.grid.extent(), f.grid.dim());
  if (f.integral_abs() / box_volume > 1e-8 * f.max_abs())
    throw std::invalid_argument("semigroup_check: input is not (numerically) zero-moment");

  GridFunction two_step = apply_multiplier(apply_multiplier(f, riesz_symbol(z2)), riesz_symbol(z1));
  GridFunction one_step = apply_multiplier(f, riesz_symbol(z1 + z2));
  return rel_l2_error(two_step, one_step);
}

DecayProfile decay_profile(const GridFunction& f, double s) {
  if (s < 0.0) throw std::invalid_argument("decay_profile: s must be >= 0");
  GridFunction g = s == 0.0 ? f : apply_multiplier(f, riesz_symbol(s));

  DecayProfile profile;
  profile.rows.reserve(g.size());
  const double quarter = f.grid.extent() / 4.0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    double r = f.grid.radius(idx);
    double v = std::pow(r, s) * std::abs(g.values[idx]);
    if (s == 0.0) v = std::abs(g.values[idx]);
    profile.rows.emplace_back(r, v);
    profile.global_max = std::max(profile.global_max, v);
    Vec x = f.grid.point(idx);
    double sup = 0.0;
    for (int i = 0; i < f.grid.dim(); ++i) sup = std::max(sup, std::abs(x[i]));
    if (sup >= quarter) profile.outer_max = std::max(profile.outer_max, v);
  }
  std::sort(profile.rows.begin(), profile.rows.end());
  return profile;
}

} // namespace gnlab

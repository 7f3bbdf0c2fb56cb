#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnlab/engine.hpp"
#include "support/gn_tuples.hpp"

#include <cmath>
#include <random>

using namespace gnlab;
using namespace gnlab::testsupport;

TEST_CASE("homogeneous checker accepts the spec-sheet tuples") {
  for (const GNParams& P : homogeneous_tuples()) {
    Admissibility adm = check_homogeneous(P);
    CHECK(adm.admissible);
    CHECK(P.gamma < adm.gamma_upper_bound + 1e-12); // the d/r' remark
  }
}

TEST_CASE("homogeneous checker arithmetic examples") {
  // d=1, p=q=2, r=4, s=1, t=0, theta=1/4: balance 1/4 = (1/4)(-1/2) + (3/4)(1/2)
  GNParams P = homogeneous_tuples()[0];
  CHECK(check_homogeneous(P).admissible);

  // Hardy tuple and its reflected-gamma rejection
  GNParams hardy = homogeneous_tuples()[3];
  CHECK(check_homogeneous(hardy).admissible);
  GNParams bad = hardy;
  bad.gamma = 1.0;
  Admissibility rej = check_homogeneous(bad);
  CHECK_FALSE(rej.admissible);
  bool named = false;
  for (const std::string& f : rej.failed)
    if (f == "0 <= theta alpha + (1-theta) beta - gamma") named = true;
  CHECK(named);
}

TEST_CASE("bracket checker accepts its tuples and rejects the controls") {
  for (const GNParams& P : bracket_tuples()) CHECK(check_bracket(P).admissible);
  for (const auto& [P, expected] : inadmissible_controls()) {
    Admissibility adm =
        P.weight_family == WeightKind::power_law ? check_homogeneous(P) : check_bracket(P);
    CHECK_FALSE(adm.admissible);
    bool named = false;
    for (const std::string& f : adm.failed)
      if (f == expected) named = true;
    CHECK_MESSAGE(named, "expected failure: ", expected);
  }
}

TEST_CASE("bracket admits strict slack that power rejects") {
  GNParams P = bracket_tuples()[1]; // alpha = 1/4 gives genuine slack
  CHECK(check_bracket(P).admissible);
  GNParams power = P;
  power.weight_family = WeightKind::power_law;
  CHECK_FALSE(check_homogeneous(power).admissible); // equality balance fails
}

TEST_CASE("sobolev checker") {
  // classical Sobolev d=3, p=2, q=6, s=1, t=0, unit weights
  Weight one3 = Weight::power_law(0.0, 3);
  Admissibility adm = check_sobolev(2, 6, 1, 0, one3, one3, 3);
  CHECK(adm.admissible);

  Weight one1 = Weight::power_law(0.0, 1);
  CHECK_FALSE(check_sobolev(2, 2, 1.2, 0, one1, one1, 1).admissible); // s - t >= d
  CHECK_FALSE(check_sobolev(4, 2, 0.5, 0, one1, one1, 1).admissible); // p > q
}

TEST_CASE("min exponent checker") {
  // p=q=r, alpha=beta=gamma: admissible iff alpha p lies in the A_p range
  CHECK(check_min_exponent(2, 2, 2, 1, 0.5, 0.3, 0.3, 0.3, 1, WeightKind::power_law).admissible);
  CHECK_FALSE(
      check_min_exponent(2, 2, 2, 1, 0.5, 0.6, 0.6, 0.6, 1, WeightKind::power_law).admissible);

  // t/s = 1/2, p=2, q=4 forces r = 8/3
  CHECK(check_min_exponent(2, 4, 8.0 / 3.0, 1, 0.5, 0, 0, 0, 1, WeightKind::power_law).admissible);
  CHECK_FALSE(check_min_exponent(2, 4, 3, 1, 0.5, 0, 0, 0, 1, WeightKind::power_law).admissible);

  // gamma must interpolate: alpha=0.4, beta=-0.2, t/s=1/2 -> gamma = 0.1
  CHECK(check_min_exponent(2, 2, 2, 1, 0.5, 0.4, -0.2, 0.1, 1, WeightKind::power_law).admissible);
  CHECK_FALSE(
      check_min_exponent(2, 2, 2, 1, 0.5, 0.4, -0.2, 0.2, 1, WeightKind::power_law).admissible);

  CHECK_THROWS(check_min_exponent(2, 2, 2, 1, 0.0, 0, 0, 0, 1, WeightKind::power_law));
}

TEST_CASE("scaling exponent gap") {
  for (const GNParams& P : homogeneous_tuples()) CHECK(std::abs(scaling_exponent_gap(P)) <= 1e-12);

  GNParams P = homogeneous_tuples()[5];
  P.gamma += 0.1; // direct offset of the gap
  CHECK(scaling_exponent_gap(P) == doctest::Approx(-0.1).epsilon(1e-10));
}

TEST_CASE("measured dilation slope matches t - gamma - d/r") {
  GNParams P = homogeneous_tuples()[4]; // d=1, t=0, gamma=1/8, r=8
  Grid g = build_grid(1, 32.0, 512);
  Weight wl = product_norm_weight(P.weight_family, P.gamma, P.r, P.dim);
  TestFunction base = TestFunction::gaussian({0, 0, 0}, 1.0);
  std::vector<double> lam{0.25, 0.5, 1.0, 2.0, 4.0}, logl, logv;
  for (double l : lam) {
    GridFunction f = sample(TestFunction::dilated(base, l), g);
    MultiplierSymbol sym{MultiplierFamily::riesz, cplx(P.t, 0.0), ZeroFrequencyRule::set_zero};
    GridFunction dt = apply_multiplier(f, sym);
    logl.push_back(std::log(l));
    logv.push_back(std::log(weighted_norm(dt, wl, P.r)));
  }
  // least squares slope
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) mx += logl[i], my += logv[i];
  mx /= lam.size();
  my /= lam.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    num += (logl[i] - mx) * (logv[i] - my);
    den += (logl[i] - mx) * (logl[i] - mx);
  }
  double slope = num / den;
  double expected = P.t - P.gamma - P.dim / P.r;
  CHECK(std::abs(slope - expected) <= 0.02 * std::abs(expected));
}

TEST_CASE("verify_inequality smoke run and endpoint consistency") {
  GNParams P = homogeneous_tuples()[1]; // theta = 1 Sobolev endpoint, d=1
  Grid g = build_grid(1, 16.0, 256);
  auto corpus = corpus_functions("zero-moment", 1, 16.0);
  VerificationReport rep = verify_inequality(P, corpus, g, true);
  CHECK(rep.per_function.size() == corpus.size());
  CHECK(rep.max_ratio > 0.0);
  CHECK(std::isfinite(rep.max_ratio));
  CHECK(rep.refinement_drift < 0.10);

  // theta = 1: the report ratio must match a direct two-norm computation
  GridFunction f = sample(corpus[0], g);
  MultiplierSymbol st{MultiplierFamily::riesz, cplx(P.t, 0.0), ZeroFrequencyRule::set_zero};
  MultiplierSymbol ss{MultiplierFamily::riesz, cplx(P.s, 0.0), ZeroFrequencyRule::set_zero};
  Weight wl = product_norm_weight(P.weight_family, P.gamma, P.r, P.dim);
  Weight wa = product_norm_weight(P.weight_family, P.alpha, P.p, P.dim);
  double direct = weighted_norm(apply_multiplier(f, st), wl, P.r) /
                  weighted_norm(apply_multiplier(f, ss), wa, P.p);
  CHECK(std::abs(rep.per_function[0].ratio - direct) <= 1e-12 * direct);
}

TEST_CASE("inadmissible tuples are rejected before computation") {
  Grid g = build_grid(1, 16.0, 128);
  auto corpus = corpus_functions("smoke", 1, 16.0);
  for (const auto& [P, name] : inadmissible_controls()) {
    (void)name;
    CHECK_THROWS_AS(verify_inequality(P, corpus, g), std::domain_error);
  }
}

TEST_CASE("best-constant search is monotone and degenerate search equals the report") {
  GNParams P = homogeneous_tuples()[0];
  Grid g = build_grid(1, 32.0, 512);
  std::vector<TestFunction> corpus{TestFunction::gaussian({0, 0, 0}, 1.0)};

  OrbitSearch identity;
  double base = estimate_best_constant(P, corpus, g, identity);
  VerificationReport rep = verify_inequality(P, corpus, g, false);
  CHECK(base == doctest::Approx(rep.max_ratio).epsilon(1e-14));

  OrbitSearch wider;
  wider.dilations = {0.5, 1.0, 2.0};
  wider.translations = {0.0, 2.0};
  double more = estimate_best_constant(P, corpus, g, wider);
  CHECK(more >= base * (1.0 - 1e-14));

  // power weights: scaling invariance keeps the dilation orbit flat
  OrbitSearch dil;
  dil.dilations = {0.5, 1.0, 2.0};
  double dil_max = estimate_best_constant(P, corpus, g, dil);
  CHECK(dil_max <= base * 1.05);
}

TEST_CASE("composition chain bounds the direct ratio") {
  // mid-theta tuple: Sobolev step at order theta*s exponent a, then the
  // minimum-exponent step; the product of fitted constants dominates the
  // direct ratio on every member.
  GNParams P = homogeneous_tuples()[5]; // d=1, t=1/4, s=1, theta=1/2
  Grid g = build_grid(1, 16.0, 256);
  auto corpus = corpus_functions("zero-moment", 1, 16.0);

  double a = 1.0 / (P.theta / P.p + (1.0 - P.theta) / P.q);
  double mu = P.theta * P.alpha + (1.0 - P.theta) * P.beta;
  CHECK(check_min_exponent(P.p, P.q, a, P.s, P.theta * P.s, P.alpha, P.beta, mu, P.dim,
                           P.weight_family)
            .admissible);

  Weight wl = product_norm_weight(P.weight_family, P.gamma, P.r, P.dim);
  Weight wm = product_norm_weight(P.weight_family, mu, a, P.dim);
  Weight wa = product_norm_weight(P.weight_family, P.alpha, P.p, P.dim);
  Weight wb = product_norm_weight(P.weight_family, P.beta, P.q, P.dim);

  auto deriv = [&](const GridFunction& f, double order) {
    MultiplierSymbol sym{MultiplierFamily::riesz, cplx(order, 0.0), ZeroFrequencyRule::set_zero};
    return apply_multiplier(f, sym);
  };

  double c1 = 0.0, c2 = 0.0;
  std::vector<double> direct;
  for (const TestFunction& tf : corpus) {
    GridFunction f = sample(tf, g);
    double lhs = weighted_norm(deriv(f, P.t), wl, P.r);
    double mid = weighted_norm(deriv(f, P.theta * P.s), wm, a);
    double rhs = std::pow(weighted_norm(deriv(f, P.s), wa, P.p), P.theta) *
                 std::pow(weighted_norm(f, wb, P.q), 1.0 - P.theta);
    c1 = std::max(c1, lhs / mid);
    c2 = std::max(c2, mid / rhs);
    direct.push_back(lhs / rhs);
  }
  for (double r : direct) CHECK(r <= c1 * c2 * (1.0 + 1e-9));
}

TEST_CASE("remark bound holds on random admissible tuples") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dims(1, 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int found = 0, guard = 0;
  while (found < 1000 && ++guard < 400000) {
    GNParams P;
    P.dim = dims(rng);
    double d = P.dim;
    P.p = 1.0 + 3.0 * u(rng);
    P.q = 1.0 + 3.0 * u(rng);
    P.r = 1.0 + 5.0 * u(rng);
    P.s = 0.2 + 1.8 * u(rng);
    P.t = P.s * u(rng) * 0.9;
    P.theta = P.t / P.s + (1.0 - P.t / P.s) * u(rng);
    double pp = P.p / (P.p - 1.0), qq = P.q / (P.q - 1.0);
    P.alpha = -d / P.p + (d / P.p + d / pp) * u(rng);
    P.beta = -d / P.q + (d / P.q + d / qq) * u(rng);
    // gamma from the balance equality
    double rhs = P.theta * (1.0 / P.p - (P.s - P.alpha) / d) +
                 (1.0 - P.theta) * (1.0 / P.q + P.beta / d);
    P.gamma = P.t + d * (rhs - 1.0 / P.r);
    Admissibility adm = check_homogeneous(P);
    if (!adm.admissible) continue;
    ++found;
    CHECK(P.gamma < d * (1.0 - 1.0 / P.r) + 1e-12);
  }
  CHECK(found == 1000);
}

TEST_CASE("mixed: empty gamma window raises the named error") {
  MixedParams P;
  P.dim_x = 1;
  P.p = 1.5;
  P.q = 3.0;
  P.s = 1.0 / 3.0; // d/p' = 1/3 makes ]s, d/p'[ empty
  P.gamma = 0.34;
  Grid gx = build_grid(1, 16.0, 32);
  Grid gy = build_grid(1, 16.0, 32);
  CHECK_THROWS_WITH_AS(verify_mixed(P, {}, gx, gy), "empty admissible gamma window",
                       std::domain_error);
}

TEST_CASE("mixed verification: separable consistency and finite ratios") {
  MixedParams P; // d=3, p=2, q=4, s=3/4, gamma=1
  Grid gx = build_grid(3, 16.0, 24);
  Grid gy = build_grid(1, 16.0, 32);

  std::vector<MixedTestCase> cases;
  cases.push_back({"separable gaussian",
                   {{TestFunction::gaussian({0, 0, 0}, 3.0), TestFunction::gaussian({0, 0, 0}, 2.0)}}});
  cases.push_back({"two-bump sum",
                   {{TestFunction::gaussian({0, 0, 0}, 3.0), TestFunction::gaussian({0, 0, 0}, 2.0)},
                    {TestFunction::gaussian({1.0, 0, 0}, 2.8), TestFunction::gaussian({2.0, 0, 0}, 2.0)}}});

  MixedReport rep = verify_mixed(P, cases, gx, gy);
  CHECK(rep.admissible);
  CHECK(rep.integrability); // gamma q p/(q-p) = 4 > d = 3
  REQUIRE(rep.cases.size() == 2);
  CHECK(rep.cases[0].separable);
  CHECK(rep.cases[0].separable_consistency <= 1e-10);
  for (const MixedCaseResult& c : rep.cases) {
    CHECK(std::isfinite(c.ratio));
    CHECK(c.ratio > 0.0);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnlab/quadrature.hpp"
#include "gnlab/special.hpp"

#include <cmath>
#include <random>

using namespace gnlab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("lanczos gamma against the standard library on the real axis") {
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 3.75, 7.0, 12.5}) {
    CHECK(gamma_fn(x).real() == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
    CHECK(std::abs(gamma_fn(x).imag()) < 1e-12 * std::tgamma(x));
  }
  // reflection branch
  CHECK(gamma_fn(-0.5).real() == doctest::Approx(std::tgamma(-0.5)).epsilon(1e-12));
}

TEST_CASE("riesz constant closed forms") {
  for (int d : {1, 2, 3})
    CHECK(std::abs(riesz_constant(d / 2.0, d) - cplx(1.0, 0.0)) < 1e-13);

  // d=3, alpha=2: pi^{1/2} Gamma(1/2) / Gamma(1) = pi
  CHECK(riesz_constant(2.0, 3).real() == doctest::Approx(kPi).epsilon(1e-13));

  // d=1, alpha=1/3 against an independent gamma route
  double expected = std::pow(kPi, 1.0 / 3.0 - 0.5) * std::tgamma(1.0 / 3.0) / std::tgamma(1.0 / 6.0);
  CHECK(riesz_constant(1.0 / 3.0, 1).real() == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS(riesz_constant(0.0, 1));
  CHECK_THROWS(riesz_constant(1.5, 1));
}

TEST_CASE("reflection product c_{alpha,d} c_{d-alpha,d} = 1") {
  std::mt19937 rng(7);
  for (int d : {1, 2, 3}) {
    std::uniform_real_distribution<double> dist(0.05, d - 0.05);
    for (int k = 0; k < 20; ++k) {
      double a = dist(rng);
      cplx prod = riesz_constant(a, d) * riesz_constant(d - a, d);
      CHECK(std::abs(prod - cplx(1.0, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("gamma modulus identities") {
  CHECK(gamma_modulus_sq(GammaModulusKind::pure_imaginary, 1.0) ==
        doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-14));
  // integer shift with m=1 is the empty product
  for (double y : {0.3, 1.7}) {
    CHECK(gamma_modulus_sq(GammaModulusKind::integer_shift, y, 1) ==
          doctest::Approx(kPi * y / std::sinh(kPi * y)).epsilon(1e-14));
  }
  CHECK(gamma_modulus_sq(GammaModulusKind::half_integer_shift, 2.0, 1) ==
        doctest::Approx(kPi / std::cosh(2.0 * kPi)).epsilon(1e-14));
  CHECK_THROWS(gamma_modulus_sq(GammaModulusKind::pure_imaginary, 0.0));
}

TEST_CASE("gamma modulus identities validate the lanczos implementation") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ydist(0.05, 18.0);
  std::uniform_int_distribution<int> mdist(1, 5);
  std::uniform_int_distribution<int> kinddist(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    double y = ydist(rng) * (sign(rng) ? 1.0 : -1.0);
    int m = mdist(rng);
    auto kind = static_cast<GammaModulusKind>(kinddist(rng));
    double closed = gamma_modulus_sq(kind, y, m);
    cplx arg;
    switch (kind) {
      case GammaModulusKind::pure_imaginary: arg = cplx(0.0, y); break;
      case GammaModulusKind::integer_shift: arg = cplx(m, y); break;
      case GammaModulusKind::half_integer_shift: arg = cplx(m - 0.5, y); break;
    }
    double direct = std::norm(gamma_fn(arg));
    CHECK(std::abs(direct - closed) <= 1e-10 * closed);
  }
}

TEST_CASE("multiplier constants and the product bound") {
  for (int d : {1, 2, 3}) {
    for (double tau : {0.1, 1.0, 10.0, 50.0}) {
      MultiplierConstants mc = multiplier_constants(tau, d);
      CHECK(std::abs(mc.alpha) <= mc.p_bound * (1 + 1e-14));
      // |beta| |tau| = d |B_1| |alpha| exactly
      CHECK(std::abs(mc.beta) * tau ==
            doctest::Approx(d * unit_ball_volume(d) * std::abs(mc.alpha)).epsilon(1e-13));
    }
  }
  CHECK_THROWS(multiplier_constants(0.0, 1));
}

TEST_CASE("alpha_2(2) cross-checked through the modulus identities") {
  // |alpha_2(2)| = pi^{-1} |Gamma(1+i)| / |Gamma(-i)|
  double num = std::sqrt(gamma_modulus_sq(GammaModulusKind::integer_shift, 1.0, 1));
  double den = std::sqrt(gamma_modulus_sq(GammaModulusKind::pure_imaginary, -1.0));
  double expected = num / (den * kPi);
  MultiplierConstants mc = multiplier_constants(2.0, 2);
  CHECK(std::abs(mc.alpha) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("tau growth bound is positive, increasing, and at least 1 at zero") {
  for (int d : {1, 2, 3}) {
    CHECK(tau_growth_bound(0.0, d) >= 1.0);
    double prev = tau_growth_bound(0.0, d);
    for (double t : {0.5, 1.0, 5.0, 20.0, 50.0}) {
      double v = tau_growth_bound(t, d);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("mellin difference zeros") {
  const double log4 = std::log(4.0);
  for (int k : {1, -1, 2, -2}) {
    cplx z(0.0, 2.0 * kPi * k / log4);
    CHECK(std::abs(mellin_difference(z)) < 1e-10);
  }
  CHECK(mellin_difference(cplx(0, 0)).real() == doctest::Approx(std::log(4.0)));
  // A(1) = (2 - 1/2) Gamma(1) = 3/2
  CHECK(mellin_difference(1.0).real() == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("bessel kernel positivity and closed form in d=1, alpha=2") {
  // (1+xi^2)^{-1} inverts to pi e^{-2 pi |x|}.
  for (double r : {0.1, 0.5, 1.0}) {
    KernelValue kv = bessel_kernel(2.0, r, 1);
    double expected = kPi * std::exp(-2.0 * kPi * r);
    CHECK(std::abs(kv.value.real() - expected) <= 1e-6 * expected);
    CHECK(std::abs(kv.value.imag()) < 1e-10 * expected);
  }
}

TEST_CASE("bessel kernel positive and decreasing") {
  for (int d : {1, 2}) {
    for (double alpha : {0.5, 1.0, 2.5}) {
      double prev = -1.0;
      for (double r : {2.0, 1.0, 0.5, 0.25, 0.1}) { // decreasing r
        KernelValue kv = bessel_kernel(alpha, r, d);
        CHECK(kv.value.real() > 0.0);
        CHECK(kv.value.real() > prev);
        prev = kv.value.real();
      }
    }
  }
}

TEST_CASE("bessel kernel normalization") {
  for (int d : {1, 2}) {
    for (double alpha : {0.5, 1.0, 2.5}) {
      double mass = bessel_kernel_normalization(alpha, d);
      CHECK(std::abs(mass - 1.0) <= 1e-4);
    }
  }
}

TEST_CASE("bessel kernel exponential tail") {
  // G_alpha(r) <= C e^{-pi r} for r >= 1/pi; the fitted C must stay finite.
  for (double alpha : {0.5, 2.5}) {
    double fitted = 0.0;
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
      double v = bessel_kernel(alpha, r, 1).value.real();
      fitted = std::max(fitted, v / std::exp(-kPi * r));
    }
    CHECK(std::isfinite(fitted));
    CHECK(fitted > 0.0);
    CHECK(fitted < 1e3);
  }
}

TEST_CASE("kernel domain errors") {
  CHECK_THROWS(bessel_kernel(0.5, 0.0, 1)); // singular at origin for alpha <= d
  CHECK_NOTHROW(bessel_kernel(2.5, 0.0, 1));
  CHECK_THROWS(oscillatory_bessel_kernel(1.0, 0.0, 1));
  CHECK_THROWS(oscillatory_bessel_kernel(0.0, 1.0, 1));
}

TEST_CASE("oscillatory kernel size bound") {
  // |G_{i tau}(r)| <= C_d sqrt(tau) e^{pi tau/4} r^{-d}; fitted C stable in tau.
  for (int d : {1, 2}) {
    double cmin = 1e300, cmax = 0.0;
    for (double tau : {1.0, 2.0, 4.0}) {
      double fitted = 0.0;
      for (double r : {0.2, 1.0}) {
        double v = std::abs(oscillatory_bessel_kernel(tau, r, d).value);
        double bound_shape = std::sqrt(tau) * std::exp(kPi * tau / 4.0) * std::pow(r, -d);
        fitted = std::max(fitted, v / bound_shape);
      }
      cmin = std::min(cmin, fitted);
      cmax = std::max(cmax, fitted);
    }
    CHECK(cmax < 1e3);
    CHECK(cmax / cmin < 50.0); // stable over tau
  }
}

TEST_CASE("oscillatory kernel exponential tail") {
  for (double tau : {1.0, 3.0}) {
    double gmod = std::abs(gamma_fn(cplx(0.0, -tau / 2.0)));
    for (double r : {0.5, 1.0, 2.0}) {
      double v = std::abs(oscillatory_bessel_kernel(tau, r, 1).value);
      CHECK(v <= 100.0 * std::exp(-kPi * r) / gmod);
    }
  }
}

TEST_CASE("oscillatory kernel difference quotients respect the gradient bound") {
  // |G(r1) - G(r2)| ~ |r1 - r2| / r^{d+1} scaling when r >= 2 |r1 - r2|.
  double tau = 2.0;
  int d = 1;
  double ref = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    double dr = 0.1 * r;
    cplx g1 = oscillatory_bessel_kernel(tau, r, d).value;
    cplx g2 = oscillatory_bessel_kernel(tau, r + dr, d).value;
    double quotient = std::abs(g1 - g2) / (dr / std::pow(r, d + 1));
    CHECK(std::isfinite(quotient));
    ref = std::max(ref, quotient);
  }
  CHECK(ref < 1e3);
}

TEST_CASE("kernel quadrature self-consistency") {
  // Halving the tolerance moves the value by less than the error estimate.
  for (double r : {0.3, 1.5}) {
    KernelValue loose = bessel_kernel(1.0, r, 2, 1e-6);
    KernelValue tight = bessel_kernel(1.0, r, 2, 5e-7);
    CHECK(std::abs(loose.value - tight.value) <= loose.error + tight.error);
  }
}

TEST_CASE("holder quotient scan") {
  // gamma = 0, delta = 1 on a line: reverse triangle inequality gives <= 1
  std::vector<std::pair<Vec, Vec>> line;
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j < i; ++j)
      line.push_back({Vec{i * 0.1, 0, 0}, Vec{j * 0.1, 0, 0}});
  CHECK(holder_quotient_scan({0, 0, 0}, 1.0, line, 1) <= 1.0 + 1e-12);

  // random scan in [-1,1]^2: finite and stable under doubling the samples
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto draw_pairs = [&](int n) {
    std::vector<std::pair<Vec, Vec>> ps;
    for (int i = 0; i < n; ++i)
      ps.push_back({Vec{u(rng), u(rng), 0}, Vec{u(rng), u(rng), 0}});
    return ps;
  };
  auto p1 = draw_pairs(10000);
  double m1 = holder_quotient_scan({1, 0, 0}, 0.5, p1, 2);
  auto p2 = draw_pairs(10000);
  p2.insert(p2.end(), p1.begin(), p1.end());
  double m2 = holder_quotient_scan({1, 0, 0}, 0.5, p2, 2);
  CHECK(std::isfinite(m1));
  CHECK(m2 >= m1);
  CHECK(m2 <= m1 * 1.05);

  // adversarial origin-straddling pairs stay below the same scan maximum
  std::vector<std::pair<Vec, Vec>> adversarial;
  for (int i = 1; i <= 100; ++i) {
    Vec xi{0.01 * i, 0.005 * i, 0};
    adversarial.push_back({xi, Vec{-xi[0], -xi[1], 0}});
  }
  double madv = holder_quotient_scan({1, 0, 0}, 0.5, adversarial, 2);
  CHECK(madv <= m2 * 1.05);

  CHECK_THROWS(holder_quotient_scan({0, 0, 0}, 0.5, {}, 1));
}

TEST_CASE("quadrature basics") {
  // \int_0^1 x^2 = 1/3 and a known gaussian integral
  double v = integrate_real([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  QuadResult g = integrate_to_infinity(
      [](double x) { return cplx(std::exp(-x * x), 0.0); }, 0.0, 1e-12);
  CHECK(g.value.real() == doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-11));
}

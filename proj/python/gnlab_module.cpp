// Python bindings for the main operations: grids and test functions,
// multiplier operators, special constants/kernels, weights, norms, and the
// admissibility checkers.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnlab/engine.hpp"
#include "gnlab/sparse.hpp"
#include "gnlab/special.hpp"

namespace py = pybind11;
using namespace gnlab;

namespace {

Vec to_vec(const std::vector<double>& v) {
  Vec out{0, 0, 0};
  for (std::size_t i = 0; i < v.size() && i < 3; ++i) out[i] = v[i];
  return out;
}

IVec to_ivec(const std::vector<int>& v) {
  IVec out{0, 0, 0};
  for (std::size_t i = 0; i < v.size() && i < 3; ++i) out[i] = v[i];
  return out;
}

py::array_t<cplx> values_array(const GridFunction& f) {
  py::array_t<cplx> arr(static_cast<py::ssize_t>(f.size()));
  std::copy(f.values.begin(), f.values.end(), arr.mutable_data());
  return arr;
}

MultiplierFamily family_of(const std::string& s) {
  if (s == "riesz") return MultiplierFamily::riesz;
  if (s == "bessel") return MultiplierFamily::bessel;
  throw std::invalid_argument("family must be riesz|bessel");
}

WeightKind kind_of(const std::string& s) {
  if (s == "power" || s == "power_law") return WeightKind::power_law;
  if (s == "bracket") return WeightKind::bracket;
  throw std::invalid_argument("weight kind must be power|bracket");
}

py::dict admissibility_dict(const Admissibility& adm) {
  py::dict d;
  d["admissible"] = adm.admissible;
  py::list conds;
  for (const Condition& c : adm.conditions) {
    py::dict cd;
    cd["name"] = c.name;
    cd["satisfied"] = c.satisfied;
    cd["slack"] = c.slack;
    conds.append(cd);
  }
  d["conditions"] = conds;
  d["failed"] = adm.failed;
  d["gamma_upper_bound"] = adm.gamma_upper_bound;
  d["a_exponent"] = adm.a_exponent;
  return d;
}

GNParams params_from_kwargs(int d, double p, double q, double r, double s, double t, double theta,
                            double alpha, double beta, double gamma, const std::string& weights,
                            const std::string& derivative) {
  GNParams P;
  P.dim = d;
  P.p = p; P.q = q; P.r = r;
  P.s = s; P.t = t; P.theta = theta;
  P.alpha = alpha; P.beta = beta; P.gamma = gamma;
  P.weight_family = kind_of(weights);
  P.derivative_family = family_of(derivative);
  return P;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "numerical laboratory for weighted interpolation inequalities";

  py::class_<Grid>(m, "Grid")
      .def(py::init<int, double, int>(), py::arg("dim"), py::arg("extent"),
           py::arg("points_per_axis"))
      .def_property_readonly("dim", &Grid::dim)
      .def_property_readonly("extent", &Grid::extent)
      .def_property_readonly("points_per_axis", &Grid::points_per_axis)
      .def_property_readonly("spacing", &Grid::spacing)
      .def_property_readonly("size", &Grid::size)
      .def("point", [](const Grid& g, std::size_t i) {
        Vec x = g.point(i);
        return std::vector<double>(x.begin(), x.begin() + g.dim());
      })
      .def("freq", [](const Grid& g, std::size_t i) {
        Vec x = g.freq(i);
        return std::vector<double>(x.begin(), x.begin() + g.dim());
      });

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init([](const Grid& g, py::array_t<cplx> values) {
             std::vector<cplx> v(values.data(), values.data() + values.size());
             return GridFunction(g, std::move(v));
           }),
           py::arg("grid"), py::arg("values"))
      .def_readonly("grid", &GridFunction::grid)
      .def_property_readonly("values", &values_array)
      .def("l2_norm", [](const GridFunction& f) { return l2_norm(f); });

  py::class_<TestFunction>(m, "TestFunction")
      .def_static("gaussian",
                  [](std::vector<double> center, double width) {
                    return TestFunction::gaussian(to_vec(center), width);
                  },
                  py::arg("center"), py::arg("width"))
      .def_static("hermite",
                  [](std::vector<int> order, double width) {
                    return TestFunction::hermite(to_ivec(order), width);
                  },
                  py::arg("order"), py::arg("width"))
      .def_static("modulated_gaussian",
                  [](std::vector<double> center, double width, std::vector<double> k0) {
                    return TestFunction::modulated_gaussian(to_vec(center), width, to_vec(k0));
                  },
                  py::arg("center"), py::arg("width"), py::arg("k0"))
      .def_static("dilated", &TestFunction::dilated, py::arg("base"), py::arg("lam"))
      .def("describe", &TestFunction::describe)
      .def("__call__",
           [](const TestFunction& tf, std::vector<double> x, int dim) {
             return tf(to_vec(x), dim);
           })
      .def("fourier", [](const TestFunction& tf, std::vector<double> xi, int dim) {
        return tf.fourier(to_vec(xi), dim);
      });

  m.def("build_grid", &build_grid, py::arg("dim"), py::arg("extent"), py::arg("points_per_axis"));
  m.def("sample",
        [](const TestFunction& tf, const Grid& g) { return sample(tf, g, nullptr); },
        py::arg("tf"), py::arg("grid"));
  m.def("corpus_functions", &corpus_functions, py::arg("preset"), py::arg("dim"),
        py::arg("extent"));

  m.def("apply_multiplier",
        [](const GridFunction& f, const std::string& family, cplx order) {
          MultiplierSymbol sym{family_of(family), order, ZeroFrequencyRule::set_zero};
          return apply_multiplier(f, sym);
        },
        py::arg("f"), py::arg("family"), py::arg("order"));
  m.def("riesz_potential_direct", &riesz_potential_direct, py::arg("f"), py::arg("alpha"));
  m.def("semigroup_check", &semigroup_check, py::arg("f"), py::arg("z1"), py::arg("z2"));

  m.def("riesz_constant", &riesz_constant, py::arg("alpha"), py::arg("dim"));
  m.def("gamma_fn", &gamma_fn, py::arg("z"));
  m.def("gamma_modulus_sq",
        [](const std::string& kind, double y, int mshift) {
          GammaModulusKind k = kind == "pure_imaginary" ? GammaModulusKind::pure_imaginary
                               : kind == "integer_shift" ? GammaModulusKind::integer_shift
                                                          : GammaModulusKind::half_integer_shift;
          return gamma_modulus_sq(k, y, mshift);
        },
        py::arg("kind"), py::arg("y"), py::arg("m") = 1);
  m.def("multiplier_constants",
        [](double tau, int dim) {
          MultiplierConstants mc = multiplier_constants(tau, dim);
          return py::make_tuple(mc.alpha, mc.beta, mc.p_bound);
        },
        py::arg("tau"), py::arg("dim"));
  m.def("tau_growth_bound", &tau_growth_bound, py::arg("tau"), py::arg("dim"));
  m.def("mellin_difference", &mellin_difference, py::arg("z"));
  m.def("bessel_kernel",
        [](double alpha, double r, int dim) {
          KernelValue kv = bessel_kernel(alpha, r, dim);
          return py::make_tuple(kv.value, kv.error);
        },
        py::arg("alpha"), py::arg("r"), py::arg("dim"));
  m.def("bessel_kernel_normalization", &bessel_kernel_normalization, py::arg("alpha"),
        py::arg("dim"), py::arg("rel_tol") = 1e-7);
  m.def("oscillatory_bessel_kernel",
        [](double tau, double r, int dim) {
          KernelValue kv = oscillatory_bessel_kernel(tau, r, dim);
          return py::make_tuple(kv.value, kv.error);
        },
        py::arg("tau"), py::arg("r"), py::arg("dim"));

  py::class_<Weight>(m, "Weight")
      .def_static("power_law", &Weight::power_law, py::arg("gamma"), py::arg("dim"))
      .def_static("bracket", &Weight::bracket, py::arg("gamma"), py::arg("dim"))
      .def_property_readonly("exponent", &Weight::exponent)
      .def("eval", [](const Weight& w, std::vector<double> x) { return w.eval(to_vec(x)); })
      .def("describe", &Weight::describe);

  m.def("weighted_norm",
        [](const GridFunction& f, const Weight& w, double p) { return weighted_norm(f, w, p); },
        py::arg("f"), py::arg("weight"), py::arg("p"));
  m.def("lp_norm", &lp_norm, py::arg("f"), py::arg("p"));

  m.def("power_apq_check",
        [](double a, double b, double p, double q, double alpha, int dim) {
          ApqVerdict v = power_apq_check(a, b, p, q, alpha, dim);
          py::dict d;
          d["in_class"] = v.in_class;
          d["failed_conditions"] = v.failed_conditions;
          d["margin"] = v.margin;
          return d;
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("dim"));
  m.def("bracket_apq_check",
        [](double a, double b, double p, double q, double alpha, int dim) {
          ApqVerdict v = bracket_apq_check(a, b, p, q, alpha, dim);
          py::dict d;
          d["in_class"] = v.in_class;
          d["failed_conditions"] = v.failed_conditions;
          d["margin"] = v.margin;
          return d;
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("dim"));
  m.def("ap_range",
        [](const std::string& kind, double p, int dim) {
          Interval i = ap_range(kind_of(kind), p, dim);
          return py::make_tuple(i.lo, i.hi);
        },
        py::arg("kind"), py::arg("p"), py::arg("dim"));
  m.def("estimate_apq_constant",
        [](const Weight& v, const Weight& w, double p, double q, double alpha) {
          ApqEstimate est = estimate_apq_constant(v, w, p, q, alpha);
          py::dict d;
          d["estimate"] = est.estimate;
          d["diverging"] = est.diverging;
          return d;
        },
        py::arg("v"), py::arg("w"), py::arg("p"), py::arg("q"), py::arg("alpha"));
  m.def("cone_mass_check", &cone_mass_check, py::arg("w"), py::arg("R"));

  m.def("check_homogeneous",
        [](int d, double p, double q, double r, double s, double t, double theta, double alpha,
           double beta, double gamma) {
          return admissibility_dict(check_homogeneous(
              params_from_kwargs(d, p, q, r, s, t, theta, alpha, beta, gamma, "power", "riesz")));
        },
        py::arg("d"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"), py::arg("t"),
        py::arg("theta"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0);
  m.def("check_bracket",
        [](int d, double p, double q, double r, double s, double t, double theta, double alpha,
           double beta, double gamma) {
          return admissibility_dict(check_bracket(
              params_from_kwargs(d, p, q, r, s, t, theta, alpha, beta, gamma, "bracket", "riesz")));
        },
        py::arg("d"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"), py::arg("t"),
        py::arg("theta"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0);
  m.def("scaling_exponent_gap",
        [](int d, double p, double q, double r, double s, double t, double theta, double alpha,
           double beta, double gamma) {
          return scaling_exponent_gap(
              params_from_kwargs(d, p, q, r, s, t, theta, alpha, beta, gamma, "power", "riesz"));
        },
        py::arg("d"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"), py::arg("t"),
        py::arg("theta"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0);

  m.def("verify_inequality",
        [](int d, double p, double q, double r, double s, double t, double theta, double alpha,
           double beta, double gamma, const std::string& weights, const std::string& derivative,
           const std::string& corpus, double L, int N, bool refine) {
          GNParams P =
              params_from_kwargs(d, p, q, r, s, t, theta, alpha, beta, gamma, weights, derivative);
          Grid grid = build_grid(d, L, N);
          VerificationReport rep =
              verify_inequality(P, corpus_functions(corpus, d, L), grid, refine);
          py::dict out;
          out["max_ratio"] = rep.max_ratio;
          out["refinement_drift"] = rep.refinement_drift;
          py::list per;
          for (const FunctionRatio& fr : rep.per_function) {
            py::dict e;
            e["name"] = fr.name;
            e["lhs"] = fr.lhs;
            e["rhs"] = fr.rhs;
            e["ratio"] = fr.ratio;
            per.append(e);
          }
          out["per_function"] = per;
          return out;
        },
        py::arg("d"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"), py::arg("t"),
        py::arg("theta"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0,
        py::arg("weights") = "power", py::arg("derivative") = "riesz",
        py::arg("corpus") = "zero-moment", py::arg("L") = 16.0, py::arg("N") = 256,
        py::arg("refine") = false);

  m.def("maximal_function_field", &maximal_function_field, py::arg("f"));
}

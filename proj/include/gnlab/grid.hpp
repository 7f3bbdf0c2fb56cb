#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace gnlab {

using cplx = std::complex<double>;

// Coordinates and multi-indices for dimensions 1..3. Unused trailing entries
// are zero.
using Vec = std::array<double, 3>;
using IVec = std::array<int, 3>;

inline Vec vec1(double x) { return {x, 0.0, 0.0}; }

//==============================================================================
// Uniform periodic box grid on [-L/2, L/2)^d with N points per axis.
//
// Lattice points:  x_j = -L/2 + j*h,  j = 0..N-1,  h = L/N.
// Frequencies:     xi_k = k/L with integer k in [-N/2, N/2) per axis; FFT bin
//                  m maps to k = m for m < N/2 and k = m - N otherwise.
//==============================================================================
class Grid {
public:
  Grid(int dim, double extent, int points_per_axis);

  int dim() const { return dim_; }
  double extent() const { return extent_; }
  int points_per_axis() const { return n_; }
  double spacing() const { return extent_ / n_; }
  std::size_t size() const { return size_; }

  // h^d and (1/L)^d, the forward/inverse transform quadrature factors.
  double cell_volume() const;
  double freq_cell_volume() const;

  IVec unflatten(std::size_t idx) const;
  std::size_t flatten(const IVec& j) const;
  std::size_t flatten_wrapped(const IVec& j) const; // periodic index wrap

  Vec point(std::size_t idx) const;
  Vec point(const IVec& j) const;

  // Wrapped integer frequency of FFT bin m in [-N/2, N/2).
  int wrap_bin(int m) const { return m < n_ / 2 ? m : m - n_; }
  Vec freq(std::size_t idx) const; // frequency vector of flattened bin
  double freq_norm(std::size_t idx) const;

  double radius(std::size_t idx) const; // |x_j|

  bool operator==(const Grid& o) const {
    return dim_ == o.dim_ && extent_ == o.extent_ && n_ == o.n_;
  }

private:
  int dim_;
  double extent_;
  int n_;
  std::size_t size_;
};

Grid build_grid(int dim, double extent, int points_per_axis);

//==============================================================================
// Complex samples on a grid. Immutable by convention after construction:
// operations return new instances.
//==============================================================================
struct GridFunction {
  Grid grid;
  std::vector<cplx> values;

  GridFunction(const Grid& g, cplx fill = 0.0) : grid(g), values(g.size(), fill) {}
  GridFunction(const Grid& g, std::vector<cplx> v);

  std::size_t size() const { return values.size(); }
  bool all_finite() const;
  double max_abs() const;
  double integral_abs() const;   // |h^d * sum f|, the discrete integral magnitude
};

// Discrete L2 norm: (sum |f|^2 h^d)^{1/2}.
double l2_norm(const GridFunction& f);
// Relative L2 discrepancy ||f-g||_2 / ||g||_2 (0 if both vanish).
double rel_l2_error(const GridFunction& f, const GridFunction& g);

// CSV export: header "index,x1[,x2[,x3]],re,im", one row per lattice point.
void export_csv(const GridFunction& f, std::ostream& os);

//==============================================================================
// Analytic test functions: Hermite-Gaussian envelopes with optional complex
// modulation. Closed under dilation, translation and modulation, so the
// dilated(...) constructor returns a member of the same family with
// transformed parameters.
//
//   f(x) = H_order(sqrt(2 pi) (x-c)/w) exp(-pi |x-c|^2 / w^2) e^{2 pi i k0.x}
//
// Fourier transform under the convention  f^(xi) = \int e^{-2 pi i x.xi} f(x) dx:
//
//   f^(xi) = w^d (-i)^{|order|} e^{-2 pi i c.(xi-k0)}
//            H_order(sqrt(2 pi) w (xi-k0)) exp(-pi w^2 |xi-k0|^2)
//==============================================================================
class TestFunction {
public:
  static TestFunction gaussian(const Vec& center, double width);
  static TestFunction hermite(const IVec& order, double width);
  static TestFunction modulated_gaussian(const Vec& center, double width, const Vec& k0);
  static TestFunction dilated(const TestFunction& base, double lambda);

  cplx operator()(const Vec& x, int dim) const;
  cplx fourier(const Vec& xi, int dim) const;

  const IVec& order() const { return order_; }
  const Vec& center() const { return center_; }
  double width() const { return width_; }
  const Vec& modulation() const { return modulation_; }
  bool is_modulated() const;

  TestFunction translated(const Vec& shift) const;
  TestFunction modulated(const Vec& k0) const;

  std::string describe() const;

private:
  TestFunction() = default;
  IVec order_{0, 0, 0};
  Vec center_{0.0, 0.0, 0.0};
  double width_ = 1.0;
  Vec modulation_{0.0, 0.0, 0.0};
};

struct SampleReport {
  bool resolution_ok = true;
  bool support_ok = true;
  std::vector<std::string> warnings;
  bool ok() const { return resolution_ok && support_ok; }
};

// Pointwise samples of the closed-form evaluator. Precondition violations
// (width < 4h, or essential support escaping the box) are recorded in the
// report; the caller decides whether to proceed.
GridFunction sample(const TestFunction& tf, const Grid& g, SampleReport* report = nullptr);

// Deterministic corpora. Presets: smoke, standard, zero-moment, dilation-family.
std::vector<TestFunction> corpus_functions(const std::string& preset, int dim, double extent);
std::vector<GridFunction> corpus(const Grid& g, const std::string& preset);

// Plain-text corpus config: one function per line,
//   <preset-name> <kind> key=value ...
// with kinds gaussian|hermite|modulated|dilated. '#' starts a comment.
std::map<std::string, std::vector<TestFunction>> load_corpus_config(std::istream& is);
std::map<std::string, std::vector<TestFunction>> load_corpus_config_file(const std::string& path);

} // namespace gnlab

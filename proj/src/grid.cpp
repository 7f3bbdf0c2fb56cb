#include "gnlab/grid.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gnlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sqr(double x) { return x * x; }

// Physicists' Hermite polynomial H_n by recurrence.
double hermite_poly(int n, double v) {
  if (n == 0) return 1.0;
  double hm = 1.0, h = 2.0 * v;
  for (int k = 1; k < n; ++k) {
    double next = 2.0 * v * h - 2.0 * k * hm;
    hm = h;
    h = next;
  }
  return h;
}

} // namespace

//==============================================================================
// Grid
//==============================================================================

Grid::Grid(int dim, double extent, int points_per_axis)
    : dim_(dim), extent_(extent), n_(points_per_axis) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid: dim must be in {1,2,3}");
  if (!(extent > 0.0)) throw std::invalid_argument("grid: extent must be positive");
  if (points_per_axis < 8) throw std::invalid_argument("grid: N must be at least 8");
  if (points_per_axis % 2 != 0) throw std::invalid_argument("grid: N must be even");
  size_ = 1;
  for (int i = 0; i < dim_; ++i) size_ *= static_cast<std::size_t>(n_);
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int i = 0; i < dim_; ++i) v *= spacing();
  return v;
}

double Grid::freq_cell_volume() const {
  double v = 1.0;
  for (int i = 0; i < dim_; ++i) v /= extent_;
  return v;
}

IVec Grid::unflatten(std::size_t idx) const {
  IVec j{0, 0, 0};
  for (int i = dim_ - 1; i >= 0; --i) {
    j[i] = static_cast<int>(idx % n_);
    idx /= n_;
  }
  return j;
}

std::size_t Grid::flatten(const IVec& j) const {
  std::size_t idx = 0;
  for (int i = 0; i < dim_; ++i) idx = idx * n_ + static_cast<std::size_t>(j[i]);
  return idx;
}

std::size_t Grid::flatten_wrapped(const IVec& j) const {
  IVec w{0, 0, 0};
  for (int i = 0; i < dim_; ++i) {
    int m = j[i] % n_;
    if (m < 0) m += n_;
    w[i] = m;
  }
  return flatten(w);
}

Vec Grid::point(std::size_t idx) const { return point(unflatten(idx)); }

Vec Grid::point(const IVec& j) const {
  Vec x{0.0, 0.0, 0.0};
  for (int i = 0; i < dim_; ++i) x[i] = -extent_ / 2.0 + j[i] * spacing();
  return x;
}

Vec Grid::freq(std::size_t idx) const {
  IVec j = unflatten(idx);
  Vec xi{0.0, 0.0, 0.0};
  for (int i = 0; i < dim_; ++i) xi[i] = wrap_bin(j[i]) / extent_;
  return xi;
}

double Grid::freq_norm(std::size_t idx) const {
  Vec xi = freq(idx);
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += sqr(xi[i]);
  return std::sqrt(s);
}

double Grid::radius(std::size_t idx) const {
  Vec x = point(idx);
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += sqr(x[i]);
  return std::sqrt(s);
}

Grid build_grid(int dim, double extent, int points_per_axis) {
  return Grid(dim, extent, points_per_axis);
}

//==============================================================================
// GridFunction
//==============================================================================

GridFunction::GridFunction(const Grid& g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != g.size())
    throw std::invalid_argument("grid function: value count must equal N^d");
}

bool GridFunction::all_finite() const {
  for (const cplx& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const cplx& z : values) m = std::max(m, std::abs(z));
  return m;
}

double GridFunction::integral_abs() const {
  cplx s = 0.0;
  for (const cplx& z : values) s += z;
  return std::abs(s) * grid.cell_volume();
}

double l2_norm(const GridFunction& f) {
  double s = 0.0;
  for (const cplx& z : f.values) s += std::norm(z);
  return std::sqrt(s * f.grid.cell_volume());
}

double rel_l2_error(const GridFunction& f, const GridFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("rel_l2_error: size mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    num += std::norm(f.values[i] - g.values[i]);
    den += std::norm(g.values[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

void export_csv(const GridFunction& f, std::ostream& os) {
  const int d = f.grid.dim();
  os << "index";
  for (int i = 0; i < d; ++i) os << ",x" << (i + 1);
  os << ",re,im\n";
  char buf[64];
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    Vec x = f.grid.point(idx);
    os << idx;
    for (int i = 0; i < d; ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", x[i]);
      os << ',' << buf;
    }
    std::snprintf(buf, sizeof buf, "%.12g", f.values[idx].real());
    os << ',' << buf;
    std::snprintf(buf, sizeof buf, "%.12g", f.values[idx].imag());
    os << ',' << buf << '\n';
  }
}

//==============================================================================
// TestFunction
//==============================================================================

TestFunction TestFunction::gaussian(const Vec& center, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("test function: width must be positive");
  TestFunction tf;
  tf.center_ = center;
  tf.width_ = width;
  return tf;
}

TestFunction TestFunction::hermite(const IVec& order, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("test function: width must be positive");
  for (int o : order)
    if (o < 0) throw std::invalid_argument("test function: hermite order must be >= 0");
  TestFunction tf;
  tf.order_ = order;
  tf.width_ = width;
  return tf;
}

TestFunction TestFunction::modulated_gaussian(const Vec& center, double width, const Vec& k0) {
  TestFunction tf = gaussian(center, width);
  tf.modulation_ = k0;
  return tf;
}

// f(lambda x) stays in the family: widths and centers contract, modulation
// frequencies expand.
TestFunction TestFunction::dilated(const TestFunction& base, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("test function: dilation must be positive");
  TestFunction tf = base;
  tf.width_ = base.width_ / lambda;
  for (int i = 0; i < 3; ++i) {
    tf.center_[i] = base.center_[i] / lambda;
    tf.modulation_[i] = base.modulation_[i] * lambda;
  }
  return tf;
}

TestFunction TestFunction::translated(const Vec& shift) const {
  TestFunction tf = *this;
  for (int i = 0; i < 3; ++i) tf.center_[i] += shift[i];
  return tf;
}

TestFunction TestFunction::modulated(const Vec& k0) const {
  TestFunction tf = *this;
  for (int i = 0; i < 3; ++i) tf.modulation_[i] += k0[i];
  return tf;
}

bool TestFunction::is_modulated() const {
  return modulation_[0] != 0.0 || modulation_[1] != 0.0 || modulation_[2] != 0.0;
}

cplx TestFunction::operator()(const Vec& x, int dim) const {
  double env = 1.0, r2 = 0.0, phase = 0.0;
  const double c = std::sqrt(2.0 * kPi) / width_;
  for (int i = 0; i < dim; ++i) {
    double u = x[i] - center_[i];
    r2 += sqr(u / width_);
    if (order_[i] > 0) env *= hermite_poly(order_[i], c * u);
    phase += modulation_[i] * x[i];
  }
  return env * std::exp(-kPi * r2) * std::polar(1.0, 2.0 * kPi * phase);
}

cplx TestFunction::fourier(const Vec& xi, int dim) const {
  double env = 1.0, r2 = 0.0, phase = 0.0;
  int total_order = 0;
  const double c = std::sqrt(2.0 * kPi) * width_;
  double wd = 1.0;
  for (int i = 0; i < dim; ++i) {
    double u = xi[i] - modulation_[i];
    r2 += sqr(width_ * u);
    if (order_[i] > 0) env *= hermite_poly(order_[i], c * u);
    phase -= center_[i] * u;
    total_order += order_[i];
    wd *= width_;
  }
  // (-i)^{|order|}
  static const cplx powmi[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return wd * powmi[total_order % 4] * env * std::exp(-kPi * r2) *
         std::polar(1.0, 2.0 * kPi * phase);
}

std::string TestFunction::describe() const {
  std::ostringstream os;
  bool herm = order_[0] + order_[1] + order_[2] > 0;
  if (herm)
    os << "hermite(" << order_[0] << "," << order_[1] << "," << order_[2] << ")";
  else if (is_modulated())
    os << "modulated";
  else
    os << "gaussian";
  os << " w=" << width_;
  if (center_[0] != 0 || center_[1] != 0 || center_[2] != 0)
    os << " c=(" << center_[0] << "," << center_[1] << "," << center_[2] << ")";
  if (is_modulated())
    os << " k0=(" << modulation_[0] << "," << modulation_[1] << "," << modulation_[2] << ")";
  return os.str();
}

//==============================================================================
// Sampling and corpora
//==============================================================================

GridFunction sample(const TestFunction& tf, const Grid& g, SampleReport* report) {
  SampleReport local;
  const double h = g.spacing();
  if (tf.width() < 4.0 * h - 1e-12) {
    local.resolution_ok = false;
    local.warnings.push_back("width below 4h: function under-resolved");
  }
  // Gaussian envelope mass outside the box stays below 1e-8 when the distance
  // from the center to the nearest face exceeds ~2.43 widths.
  double margin = g.extent() / 2.0;
  for (int i = 0; i < g.dim(); ++i)
    margin = std::min(margin, g.extent() / 2.0 - std::abs(tf.center()[i]));
  if (margin < 2.43 * tf.width()) {
    local.support_ok = false;
    local.warnings.push_back("essential support reaches the box boundary");
  }
  // Modulation plus spectral spread must stay inside the Nyquist band.
  double kmax = 0.0;
  for (int i = 0; i < g.dim(); ++i) kmax = std::max(kmax, std::abs(tf.modulation()[i]));
  if (kmax > 0.0 && kmax + 2.43 / tf.width() > 0.5 / h) {
    local.resolution_ok = false;
    local.warnings.push_back("modulation frequency too close to the Nyquist limit");
  }
  if (report) *report = local;

  GridFunction f(g);
  for (std::size_t idx = 0; idx < g.size(); ++idx)
    f.values[idx] = tf(g.point(idx), g.dim());
  return f;
}

std::vector<TestFunction> corpus_functions(const std::string& preset, int dim, double extent) {
  std::vector<TestFunction> fs;
  Vec zero{0, 0, 0};
  auto e1 = [&](double v) { return Vec{v, 0.0, 0.0}; };
  auto o1 = [&](int n) { return IVec{n, 0, 0}; };

  if (preset == "smoke") {
    fs.push_back(TestFunction::gaussian(zero, 1.0));
    fs.push_back(TestFunction::gaussian(zero, 0.5));
    fs.push_back(TestFunction::hermite(o1(1), 1.0));
  } else if (preset == "standard") {
    // widths {1/2,1,2} x centers {0, L/8} gaussians, plus hermite orders 1,2.
    for (double w : {0.5, 1.0, 2.0}) {
      fs.push_back(TestFunction::gaussian(zero, w));
      fs.push_back(TestFunction::gaussian(e1(extent / 8.0), w));
    }
    for (double w : {0.5, 1.0, 2.0}) {
      fs.push_back(TestFunction::hermite(o1(1), w));
      fs.push_back(TestFunction::hermite(o1(2), w));
    }
  } else if (preset == "zero-moment") {
    // |k0| * width in {4, 6, 8}; diagonal modulation keeps every axis well
    // inside the Nyquist band on the default grids.
    const double s = 1.0 / std::sqrt(static_cast<double>(dim));
    auto diag = [&](double k) {
      Vec v{0, 0, 0};
      for (int i = 0; i < dim; ++i) v[i] = k * s;
      return v;
    };
    fs.push_back(TestFunction::modulated_gaussian(zero, 2.0, diag(2.0)));
    fs.push_back(TestFunction::modulated_gaussian(zero, 3.0, diag(2.0)));
    fs.push_back(TestFunction::modulated_gaussian(zero, 3.2, diag(2.5)));
  } else if (preset == "dilation-family") {
    TestFunction base = TestFunction::gaussian(zero, 1.0);
    for (double lam : {0.25, 0.5, 1.0, 2.0, 4.0})
      fs.push_back(TestFunction::dilated(base, lam));
  } else {
    throw std::invalid_argument("unknown corpus preset: " + preset);
  }
  (void)dim;
  return fs;
}

std::vector<GridFunction> corpus(const Grid& g, const std::string& preset) {
  std::vector<GridFunction> out;
  for (const TestFunction& tf : corpus_functions(preset, g.dim(), g.extent()))
    out.push_back(sample(tf, g));
  return out;
}

//==============================================================================
// Corpus config
//==============================================================================

namespace {

Vec parse_vec(const std::string& s) {
  Vec v{0, 0, 0};
  std::stringstream ss(s);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',') && i < 3) v[i++] = std::stod(item);
  return v;
}

IVec parse_ivec(const std::string& s) {
  IVec v{0, 0, 0};
  std::stringstream ss(s);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',') && i < 3) v[i++] = std::stoi(item);
  return v;
}

} // namespace

std::map<std::string, std::vector<TestFunction>> load_corpus_config(std::istream& is) {
  std::map<std::string, std::vector<TestFunction>> presets;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string preset, kind;
    if (!(ls >> preset >> kind)) continue; // blank line
    std::map<std::string, std::string> kv;
    std::string tok;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("corpus config line " + std::to_string(lineno) +
                                    ": expected key=value, got '" + tok + "'");
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto get = [&](const std::string& key, const std::string& dflt) {
      auto it = kv.find(key);
      return it == kv.end() ? dflt : it->second;
    };
    double width = std::stod(get("width", "1"));
    Vec center = parse_vec(get("center", "0"));
    TestFunction tf = TestFunction::gaussian(center, width);
    if (kind == "gaussian") {
      // done
    } else if (kind == "hermite") {
      tf = TestFunction::hermite(parse_ivec(get("order", "0")), width);
    } else if (kind == "modulated") {
      tf = TestFunction::modulated_gaussian(center, width, parse_vec(get("k0", "0")));
    } else if (kind == "dilated") {
      TestFunction base = TestFunction::gaussian(center, width);
      std::string ik = get("kind", "gaussian");
      if (ik == "hermite") base = TestFunction::hermite(parse_ivec(get("order", "0")), width);
      if (ik == "modulated")
        base = TestFunction::modulated_gaussian(center, width, parse_vec(get("k0", "0")));
      tf = TestFunction::dilated(base, std::stod(get("lambda", "1")));
    } else {
      throw std::invalid_argument("corpus config line " + std::to_string(lineno) +
                                  ": unknown kind '" + kind + "'");
    }
    presets[preset].push_back(tf);
  }
  return presets;
}

std::map<std::string, std::vector<TestFunction>> load_corpus_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open corpus config: " + path);
  return load_corpus_config(is);
}

} // namespace gnlab

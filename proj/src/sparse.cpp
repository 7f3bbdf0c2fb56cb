#include "gnlab/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace gnlab {

//==============================================================================
// DyadicLattice
//==============================================================================

IVec DyadicLattice::locate(const Vec& x, int level) const {
  IVec m{0, 0, 0};
  const double s = side(level);
  for (int i = 0; i < dim_; ++i)
    m[i] = static_cast<int>(std::floor(x[i] / s - sign(level) * omega_[i] / 3.0));
  return m;
}

bool DyadicLattice::contains(int level, const IVec& m, const Vec& x) const {
  for (int i = 0; i < dim_; ++i) {
    double lo = lower(level, m[i], i);
    if (x[i] < lo || x[i] >= lo + side(level)) return false;
  }
  return true;
}

IVec DyadicLattice::child_base(int level, const IVec& m) const {
  IVec b{0, 0, 0};
  for (int i = 0; i < dim_; ++i) b[i] = 2 * m[i] + sign(level) * omega_[i];
  return b;
}

std::vector<DyadicLattice> build_lattices(int dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("build_lattices: dim must be in {1,2,3}");
  std::vector<DyadicLattice> out;
  IVec w{0, 0, 0};
  int count = 1;
  for (int i = 0; i < dim; ++i) count *= 3;
  for (int idx = 0; idx < count; ++idx) {
    int t = idx;
    for (int i = 0; i < dim; ++i) {
      w[i] = t % 3;
      t /= 3;
    }
    out.emplace_back(w, dim);
  }
  return out;
}

std::vector<LatticeOnGrid> build_lattices(int dim, const Grid& box) {
  std::vector<LatticeOnGrid> out;
  for (const DyadicLattice& lattice : build_lattices(dim)) out.emplace_back(lattice, box);
  return out;
}

//==============================================================================
// LatticeOnGrid
//==============================================================================

LatticeOnGrid::LatticeOnGrid(const DyadicLattice& lattice, const Grid& grid, double min_side)
    : lattice_(lattice), grid_(grid) {
  if (lattice.dim() != grid.dim())
    throw std::invalid_argument("lattice/grid dimension mismatch");
  const double L = grid.extent();
  const double h = grid.spacing();
  if (min_side <= 0.0) min_side = 4.0 * h;
  // coarsest level whose cubes cover the box scale, finest with side >= min_side
  top_level_ = static_cast<int>(-std::ceil(std::log2(L)));
  bottom_level_ = static_cast<int>(std::floor(std::log2(1.0 / min_side)));
  if (bottom_level_ < top_level_) bottom_level_ = top_level_;

  const int levels = bottom_level_ - top_level_ + 1;
  cell_keys_.resize(levels);
  data_.resize(levels);
  for (int k = top_level_; k <= bottom_level_; ++k) {
    auto& keys = cell_keys_[k - top_level_];
    keys.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      keys[i] = key(lattice_.locate(grid.point(i), k));
  }
}

std::uint64_t LatticeOnGrid::key(const IVec& m) {
  // pack three signed indices into 21-bit fields
  auto enc = [](int v) { return static_cast<std::uint64_t>(v + (1 << 20)) & 0x1FFFFF; };
  return enc(m[0]) | (enc(m[1]) << 21) | (enc(m[2]) << 42);
}

void LatticeOnGrid::accumulate(const GridFunction& f) {
  if (!(f.grid == grid_)) throw std::invalid_argument("accumulate: grid mismatch");
  for (auto& level : data_) level.clear();
  for (int k = top_level_; k <= bottom_level_; ++k) {
    auto& map = data_[k - top_level_];
    const auto& keys = cell_keys_[k - top_level_];
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      CubeData& cd = map[keys[i]];
      cd.cells += 1;
      cd.sum += std::abs(f.values[i]);
    }
  }
}

const std::unordered_map<std::uint64_t, LatticeOnGrid::CubeData>& LatticeOnGrid::level_data(
    int level) const {
  return data_.at(level - top_level_);
}

const std::vector<std::uint64_t>& LatticeOnGrid::cell_keys(int level) const {
  return cell_keys_.at(level - top_level_);
}

double LatticeOnGrid::average(int level, std::uint64_t k) const {
  const auto& map = data_.at(level - top_level_);
  auto it = map.find(k);
  if (it == map.end() || it->second.cells == 0) return 0.0;
  return it->second.sum / it->second.cells;
}

//==============================================================================
// Sparse family construction
//==============================================================================

SparseFamily build_sparse_family(const GridFunction& f, const LatticeOnGrid& lat, double ratio) {
  if (!(ratio > 1.0)) throw std::invalid_argument("build_sparse_family: ratio must exceed 1");
  for (const cplx& z : f.values)
    if (z.real() < 0.0 || z.imag() != 0.0)
      throw std::invalid_argument("build_sparse_family: input must be nonnegative");

  LatticeOnGrid work = lat;
  work.accumulate(f);
  const Grid& g = work.grid();
  const int top = work.top_level(), bottom = work.bottom_level();

  // group cells by cube key per level
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> cells_of(
      bottom - top + 1);
  for (int k = top; k <= bottom; ++k) {
    const auto& keys = work.cell_keys(k);
    auto& m = cells_of[k - top];
    for (std::size_t i = 0; i < g.size(); ++i) m[keys[i]].push_back(static_cast<std::uint32_t>(i));
  }

  SparseFamily fam;
  fam.ratio = ratio;
  fam.eta = 1.0 - 1.0 / ratio;

  struct Pending {
    int level;
    std::uint64_t key;
  };
  std::vector<Pending> queue;
  for (const auto& [k, cd] : work.level_data(top)) {
    (void)cd;
    queue.push_back({top, k});
  }
  // stable processing order
  std::sort(queue.begin(), queue.end(),
            [](const Pending& a, const Pending& b) { return a.key < b.key; });

  auto cube_of_key = [&](int level, std::uint64_t k) {
    // unpack for reporting
    auto dec = [](std::uint64_t v) { return static_cast<int>(v & 0x1FFFFF) - (1 << 20); };
    return CubeRef{level, IVec{dec(k), dec(k >> 21), dec(k >> 42)}};
  };

  while (!queue.empty()) {
    Pending cur = queue.back();
    queue.pop_back();

    SparseMember member;
    member.cube = cube_of_key(cur.level, cur.key);
    const auto& my_cells = cells_of[cur.level - top].at(cur.key);
    member.cell_count = static_cast<std::int64_t>(my_cells.size());
    member.average = work.average(cur.level, cur.key);

    // find maximal descendants whose average exceeds ratio * member.average,
    // walking the refinement tree level by level
    std::vector<std::uint32_t> claimed; // cells taken by stopping descendants
    std::vector<Pending> stack;
    auto push_children = [&](int level, std::uint64_t k) {
      if (level >= bottom) return;
      CubeRef ref = cube_of_key(level, k);
      IVec base = work.lattice().child_base(level, ref.m);
      const int d = g.dim();
      int combos = 1 << d;
      for (int c = 0; c < combos; ++c) {
        IVec child = base;
        for (int i = 0; i < d; ++i)
          if (c & (1 << i)) child[i] += 1;
        std::uint64_t ck = LatticeOnGrid::key(child);
        if (cells_of[level + 1 - top].count(ck)) stack.push_back({level + 1, ck});
      }
    };
    push_children(cur.level, cur.key);
    while (!stack.empty()) {
      Pending c = stack.back();
      stack.pop_back();
      double avg = work.average(c.level, c.key);
      if (avg > ratio * member.average && member.average >= 0.0 && avg > 0.0) {
        // stopping cube: new family member, cells leave E(Q)
        const auto& cc = cells_of[c.level - top].at(c.key);
        claimed.insert(claimed.end(), cc.begin(), cc.end());
        queue.push_back(c);
      } else {
        push_children(c.level, c.key);
      }
    }

    std::sort(claimed.begin(), claimed.end());
    member.e_cells.reserve(my_cells.size() - claimed.size());
    for (std::uint32_t c : my_cells)
      if (!std::binary_search(claimed.begin(), claimed.end(), c)) member.e_cells.push_back(c);
    member.e_cell_count = static_cast<std::int64_t>(member.e_cells.size());
    fam.members.push_back(std::move(member));
  }
  return fam;
}

SparsityCheck check_sparsity(const SparseFamily& fam, const LatticeOnGrid& lat) {
  SparsityCheck res;
  std::vector<std::uint8_t> used(lat.grid().size(), 0);
  for (const SparseMember& m : fam.members) {
    double frac = m.cell_count > 0
                      ? static_cast<double>(m.e_cell_count) / static_cast<double>(m.cell_count)
                      : 1.0;
    res.worst_fraction = std::min(res.worst_fraction, frac);
    if (frac < fam.eta - 1e-15) res.eta_ok = false;
    for (std::uint32_t c : m.e_cells) {
      if (used[c]) res.disjoint = false;
      used[c] = 1;
    }
  }
  return res;
}

namespace {

double member_term(const SparseMember& m, const LatticeOnGrid& lat, const GridFunction& f,
                   double r, double alpha) {
  const DyadicLattice& lattice = lat.lattice();
  const Grid& g = lat.grid();
  // cell-measure average of |f|^r over the cube
  const auto& keys = lat.cell_keys(m.cube.level);
  double sum = 0.0;
  std::int64_t count = 0;
  std::uint64_t mk = LatticeOnGrid::key(m.cube.m);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (keys[i] != mk) continue;
    sum += std::pow(std::abs(f.values[i]), r);
    ++count;
  }
  if (count == 0) return 0.0;
  double avg = std::pow(sum / count, 1.0 / r);
  double side = lattice.side(m.cube.level);
  return std::pow(side, alpha) * avg;
}

} // namespace

double apply_sparse(const SparseFamily& fam, const LatticeOnGrid& lat, const GridFunction& f,
                    double r, double alpha, std::size_t point_index) {
  if (!(r >= 1.0)) throw std::invalid_argument("apply_sparse: r must be >= 1");
  if (alpha < 0.0) throw std::invalid_argument("apply_sparse: alpha must be >= 0");
  Vec x = lat.grid().point(point_index);
  double total = 0.0;
  for (const SparseMember& m : fam.members)
    if (lat.lattice().contains(m.cube.level, m.cube.m, x))
      total += member_term(m, lat, f, r, alpha);
  return total;
}

GridFunction apply_sparse_field(const SparseFamily& fam, const LatticeOnGrid& lat,
                                const GridFunction& f, double r, double alpha) {
  if (!(r >= 1.0)) throw std::invalid_argument("apply_sparse: r must be >= 1");
  GridFunction out(lat.grid(), 0.0);
  for (const SparseMember& m : fam.members) {
    double term = member_term(m, lat, f, r, alpha);
    const auto& keys = lat.cell_keys(m.cube.level);
    std::uint64_t mk = LatticeOnGrid::key(m.cube.m);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (keys[i] == mk) out.values[i] += term;
  }
  return out;
}

GridFunction dyadic_fractional_field(const LatticeOnGrid& lat, const GridFunction& f,
                                     double alpha) {
  LatticeOnGrid work = lat;
  work.accumulate(f);
  const Grid& g = work.grid();
  GridFunction out(g, 0.0);
  for (int k = work.top_level(); k <= work.bottom_level(); ++k) {
    const auto& keys = work.cell_keys(k);
    double factor = std::pow(work.lattice().side(k), alpha);
    const auto& data = work.level_data(k);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& cd = data.at(keys[i]);
      // cell-measure average, matching the sparse member terms exactly
      out.values[i] += factor * cd.sum / cd.cells;
    }
  }
  return out;
}

//==============================================================================
// Maximal operators
//==============================================================================

GridFunction maximal_function_field(const GridFunction& f) {
  const Grid& g = f.grid;
  GridFunction out(g, 0.0);
  // the single-cell "cube" realizes the point-containing limit at resolution h
  for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = std::abs(f.values[i]);

  for (const DyadicLattice& lattice : build_lattices(g.dim())) {
    LatticeOnGrid lat(lattice, g, g.spacing()); // down to single-cell scale
    lat.accumulate(f);
    for (int k = lat.top_level(); k <= lat.bottom_level(); ++k) {
      const auto& keys = lat.cell_keys(k);
      const auto& data = lat.level_data(k);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& cd = data.at(keys[i]);
        double avg = cd.sum / cd.cells;
        if (avg > out.values[i].real()) out.values[i] = avg;
      }
    }
  }
  return out;
}

double maximal_function(const GridFunction& f, std::size_t point_index) {
  return maximal_function_field(f).values[point_index].real();
}

GridFunction grand_maximal_field(const GridFunction& f, const GrandMaximalOptions& opt) {
  const Grid& g = f.grid;
  const int d = g.dim();
  const double h = g.spacing();
  GridFunction out(g, 0.0);

  MultiplierSymbol symbol{opt.family, cplx(0.0, opt.tau), ZeroFrequencyRule::set_zero};
  const double dilate = 5.0 * std::sqrt(static_cast<double>(d));

  for (const DyadicLattice& lattice : build_lattices(d)) {
    LatticeOnGrid lat(lattice, g, opt.min_side_cells * h);
    for (int k = lat.top_level(); k <= lat.bottom_level(); ++k) {
      // distinct cubes at this level
      const auto& keys = lat.cell_keys(k);
      std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cube_cells;
      for (std::size_t i = 0; i < g.size(); ++i)
        cube_cells[keys[i]].push_back(static_cast<std::uint32_t>(i));

      const double side = lattice.side(k);
      for (const auto& [ck, cells] : cube_cells) {
        auto dec = [](std::uint64_t v) { return static_cast<int>(v & 0x1FFFFF) - (1 << 20); };
        IVec m{dec(ck), dec(ck >> 21), dec(ck >> 42)};
        // center of Q and of Q*
        Vec center{0, 0, 0};
        for (int i = 0; i < d; ++i) center[i] = lattice.lower(k, m[i], i) + side / 2.0;

        // mask away Q*: zero the cells whose centers lie inside the dilate
        GridFunction masked = f;
        const double half_star = dilate * side / 2.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
          Vec x = g.point(i);
          bool inside = true;
          for (int a = 0; a < d; ++a)
            inside = inside && std::abs(x[a] - center[a]) <= half_star;
          if (inside) masked.values[i] = 0.0;
        }
        GridFunction transformed = apply_multiplier(masked, symbol);

        // oscillation over corner and center samples of Q (nearest cells)
        std::vector<cplx> samples;
        int combos = 1 << d;
        auto nearest_cell = [&](const Vec& x) -> std::optional<std::size_t> {
          IVec j{0, 0, 0};
          for (int a = 0; a < d; ++a) {
            double t = (x[a] + g.extent() / 2.0) / h;
            j[a] = static_cast<int>(std::lround(t));
            if (j[a] < 0 || j[a] >= g.points_per_axis()) return std::nullopt;
          }
          return g.flatten(j);
        };
        for (int c = 0; c < combos; ++c) {
          Vec corner{0, 0, 0};
          for (int a = 0; a < d; ++a)
            corner[a] = lattice.lower(k, m[a], a) + ((c >> a) & 1 ? side : 0.0);
          if (auto idx = nearest_cell(corner)) samples.push_back(transformed.values[*idx]);
        }
        if (auto idx = nearest_cell(center)) samples.push_back(transformed.values[*idx]);

        double osc = 0.0;
        for (std::size_t a = 0; a < samples.size(); ++a)
          for (std::size_t b = a + 1; b < samples.size(); ++b)
            osc = std::max(osc, std::abs(samples[a] - samples[b]));

        for (std::uint32_t i : cells)
          if (osc > out.values[i].real()) out.values[i] = osc;
      }
    }
  }
  return out;
}

//==============================================================================
// Domination report
//==============================================================================

DominationReport domination_report(const GridFunction& f, double alpha, double ratio) {
  const Grid& g = f.grid;
  for (const cplx& z : f.values)
    if (z.real() < 0.0 || z.imag() != 0.0)
      throw std::invalid_argument("domination_report: input must be nonnegative");

  GridFunction direct = riesz_potential_direct(f, alpha);

  DominationReport rep;
  rep.direct.resize(g.size());
  rep.dyadic_sum.assign(g.size(), 0.0);
  rep.sparse_sum.assign(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) rep.direct[i] = std::abs(direct.values[i]);

  std::vector<GridFunction> dyadic_fields;
  for (const DyadicLattice& lattice : build_lattices(g.dim())) {
    LatticeOnGrid lat(lattice, g);
    GridFunction a_dyadic = dyadic_fractional_field(lat, f, alpha);
    SparseFamily fam = build_sparse_family(f, lat, ratio);
    GridFunction a_sparse = apply_sparse_field(fam, lat, f, 1.0, alpha);

    double worst_ratio = 0.0;
    bool below = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      double ad = a_dyadic.values[i].real(), as = a_sparse.values[i].real();
      rep.dyadic_sum[i] += ad;
      rep.sparse_sum[i] += as;
      if (as > ad * (1.0 + 1e-12)) below = false;
      if (as > 0.0) worst_ratio = std::max(worst_ratio, ad / as);
    }
    rep.sparse_below_dyadic = rep.sparse_below_dyadic && below;
    rep.sparse_vs_dyadic = std::max(rep.sparse_vs_dyadic, worst_ratio);
    dyadic_fields.push_back(std::move(a_dyadic));
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    double imax = rep.direct[i];
    if (imax <= 0.0) continue;
    for (const GridFunction& adf : dyadic_fields) {
      double r = adf.values[i].real() / imax;
      if (r > rep.lower_constant) {
        rep.lower_constant = r;
        rep.worst_point_lower = i;
      }
    }
    if (rep.dyadic_sum[i] > 0.0) {
      double r = imax / rep.dyadic_sum[i];
      if (r > rep.upper_constant) {
        rep.upper_constant = r;
        rep.worst_point_upper = i;
      }
    }
  }
  return rep;
}

} // namespace gnlab

// gnlab: numerical laboratory for weighted interpolation inequalities.
// Subcommands: check, verify, muckenhoupt, sparse-demo, constants, mixed.

#include <CLI11.hpp>

#include "gnlab/engine.hpp"
#include "gnlab/report.hpp"
#include "gnlab/sparse.hpp"
#include "gnlab/special.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

using namespace gnlab;

namespace {

// Exponents are accepted as exact rationals ("3/2", "-1/4") or decimals.
double parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  double num = std::stod(s.substr(0, slash));
  double den = std::stod(s.substr(slash + 1));
  if (den == 0.0) throw CLI::ValidationError("rational", "zero denominator in '" + s + "'");
  return num / den;
}

WeightKind parse_kind(const std::string& s) {
  if (s == "power" || s == "power_law") return WeightKind::power_law;
  if (s == "bracket") return WeightKind::bracket;
  throw CLI::ValidationError("weight kind", "expected power|bracket, got '" + s + "'");
}

MultiplierFamily parse_family(const std::string& s) {
  if (s == "riesz") return MultiplierFamily::riesz;
  if (s == "bessel") return MultiplierFamily::bessel;
  throw CLI::ValidationError("derivative family", "expected riesz|bessel, got '" + s + "'");
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("config", "cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string v) {
      v.erase(0, v.find_first_not_of(" \t"));
      auto last = v.find_last_not_of(" \t\r");
      v.erase(last == std::string::npos ? 0 : last + 1);
      return v;
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

struct Output {
  std::string path; // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text;
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + path);
  os << text;
}

void emit_params(JsonWriter& jw, const GNParams& P) {
  jw.begin_object("params")
      .field("d", P.dim)
      .field("p", P.p)
      .field("q", P.q)
      .field("r", P.r)
      .field("s", P.s)
      .field("t", P.t)
      .field("theta", P.theta)
      .field("alpha", P.alpha)
      .field("beta", P.beta)
      .field("gamma", P.gamma)
      .field("weight_family", P.weight_family == WeightKind::power_law ? "power" : "bracket")
      .field("derivative_family",
             P.derivative_family == MultiplierFamily::riesz ? "riesz" : "bessel")
      .end_object();
}

void emit_conditions(JsonWriter& jw, const std::vector<Condition>& conds) {
  jw.begin_array("conditions");
  for (const Condition& c : conds) {
    jw.begin_element_object()
        .field("name", c.name)
        .field("satisfied", c.satisfied)
        .field("slack", c.slack)
        .end_object();
  }
  jw.end_array();
}

//==============================================================================
// check
//==============================================================================
struct CheckArgs {
  std::string family = "power", derivative = "riesz";
  int d = 1;
  std::string p = "2", q = "2", r = "2", s = "1", t = "0", theta = "1", alpha = "0", beta = "0",
              gamma = "0";
  Output out;
};

GNParams to_params(const CheckArgs& a) {
  GNParams P;
  P.dim = a.d;
  P.p = parse_rational(a.p);
  P.q = parse_rational(a.q);
  P.r = parse_rational(a.r);
  P.s = parse_rational(a.s);
  P.t = parse_rational(a.t);
  P.theta = parse_rational(a.theta);
  P.alpha = parse_rational(a.alpha);
  P.beta = parse_rational(a.beta);
  P.gamma = parse_rational(a.gamma);
  P.weight_family = parse_kind(a.family);
  P.derivative_family = parse_family(a.derivative);
  return P;
}

int run_check(const CheckArgs& a) {
  GNParams P = to_params(a);
  Admissibility adm =
      P.weight_family == WeightKind::power_law ? check_homogeneous(P) : check_bracket(P);

  std::ostringstream os;
  JsonWriter jw(os);
  jw.begin_object().field("schema", 1).field("command", "check");
  emit_params(jw, P);
  jw.field("admissible", adm.admissible);
  emit_conditions(jw, adm.conditions);
  jw.begin_array("failed_conditions");
  for (const std::string& f : adm.failed) jw.element(f);
  jw.end_array();
  jw.begin_object("derived")
      .field("gamma_upper_bound", adm.gamma_upper_bound)
      .field("a_exponent", adm.a_exponent)
      .end_object();
  jw.end_object();
  os << "\n";
  a.out.write(os.str());
  return adm.admissible ? 0 : 1;
}

//==============================================================================
// verify
//==============================================================================
struct VerifyArgs {
  CheckArgs base;
  double L = 16.0;
  int N = 256;
  std::string corpus = "zero-moment";
  std::string corpus_file;
  std::string config;
  bool no_refine = false;
  std::string csv, gnuplot;
};

int run_verify(VerifyArgs a, const CLI::App* cmd) {
  if (!a.config.empty()) {
    auto kv = load_config(a.config);
    auto maybe = [&](const char* key, auto&& apply) {
      auto it = kv.find(key);
      if (it != kv.end()) apply(it->second);
    };
    // config supplies grid/corpus defaults; explicit flags win
    if (cmd->count("--L") == 0) maybe("L", [&](const std::string& v) { a.L = std::stod(v); });
    if (cmd->count("--N") == 0) maybe("N", [&](const std::string& v) { a.N = std::stoi(v); });
    if (cmd->count("--d") == 0) maybe("d", [&](const std::string& v) { a.base.d = std::stoi(v); });
    if (cmd->count("--corpus") == 0)
      maybe("preset", [&](const std::string& v) { a.corpus = v; });
    if (cmd->count("--corpus-file") == 0)
      maybe("corpus_file", [&](const std::string& v) { a.corpus_file = v; });
  }

  GNParams P = to_params(a.base);
  Grid grid = build_grid(P.dim, a.L, a.N);

  std::vector<TestFunction> corpus;
  if (!a.corpus_file.empty()) {
    auto presets = load_corpus_config_file(a.corpus_file);
    auto it = presets.find(a.corpus);
    if (it == presets.end())
      throw std::domain_error("corpus preset '" + a.corpus + "' not in " + a.corpus_file);
    corpus = it->second;
  } else {
    corpus = corpus_functions(a.corpus, P.dim, a.L);
  }

  std::ostringstream os;
  JsonWriter jw(os);
  jw.begin_object().field("schema", 1).field("command", "verify");
  emit_params(jw, P);

  try {
    VerificationReport rep = verify_inequality(P, corpus, grid, !a.no_refine);
    jw.field("admissible", true)
        .field("grid_L", grid.extent())
        .field("grid_N", grid.points_per_axis())
        .field("corpus", a.corpus)
        .field("max_ratio", rep.max_ratio)
        .field("refined", rep.refined)
        .field("refinement_drift", rep.refinement_drift)
        .field("worst_singular_share", rep.worst_singular_share);
    jw.begin_array("per_function");
    for (const FunctionRatio& fr : rep.per_function) {
      jw.begin_element_object()
          .field("name", fr.name)
          .field("lhs", fr.lhs)
          .field("rhs", fr.rhs)
          .field("ratio", fr.ratio)
          .end_object();
    }
    jw.end_array();
    jw.end_object();
    os << "\n";
    a.base.out.write(os.str());

    if (!a.csv.empty()) {
      std::ostringstream cs;
      cs << "name,lhs,rhs,ratio\n";
      for (const FunctionRatio& fr : rep.per_function)
        cs << '"' << fr.name << "\"," << format_double(fr.lhs) << ',' << format_double(fr.rhs)
           << ',' << format_double(fr.ratio) << '\n';
      write_file(a.csv, cs.str());
    }
    if (!a.gnuplot.empty()) {
      std::ostringstream gs;
      gs << "# index ratio\n";
      for (std::size_t i = 0; i < rep.per_function.size(); ++i)
        gs << i << ' ' << format_double(rep.per_function[i].ratio) << '\n';
      write_file(a.gnuplot, gs.str());
    }
    return 0;
  } catch (const std::domain_error& e) {
    Admissibility adm =
        P.weight_family == WeightKind::power_law ? check_homogeneous(P) : check_bracket(P);
    jw.field("admissible", false).field("error", e.what());
    jw.begin_array("failed_conditions");
    for (const std::string& f : adm.failed) jw.element(f);
    jw.end_array();
    jw.end_object();
    os << "\n";
    a.base.out.write(os.str());
    return 1;
  }
}

//==============================================================================
// muckenhoupt
//==============================================================================
struct MuckArgs {
  std::string kind_v = "power", kind_w = "power";
  std::string gamma_v = "0", gamma_w = "0", p = "2", q = "2", alpha = "0";
  int d = 1;
  double rmin = 1e-3, rmax = 1e3;
  std::string csv, gnuplot;
  Output out;
};

int run_muckenhoupt(const MuckArgs& a) {
  double gv = parse_rational(a.gamma_v), gw = parse_rational(a.gamma_w);
  double p = parse_rational(a.p), q = parse_rational(a.q), alpha = parse_rational(a.alpha);
  WeightKind kv = parse_kind(a.kind_v), kw = parse_kind(a.kind_w);
  if (kv != kw)
    throw CLI::ValidationError("muckenhoupt", "closed-form verdicts need one weight family");

  ApqVerdict verdict = kv == WeightKind::power_law ? power_apq_check(gv, gw, p, q, alpha, a.d)
                                                   : bracket_apq_check(gv, gw, p, q, alpha, a.d);

  Weight v = kv == WeightKind::power_law ? Weight::power_law(gv, a.d) : Weight::bracket(gv, a.d);
  Weight w = kw == WeightKind::power_law ? Weight::power_law(gw, a.d) : Weight::bracket(gw, a.d);
  BallSearch search;
  search.radius_min = a.rmin;
  search.radius_max = a.rmax;
  ApqEstimate est = estimate_apq_constant(v, w, p, q, alpha, search);

  std::ostringstream os;
  JsonWriter jw(os);
  jw.begin_object().field("schema", 1).field("command", "muckenhoupt");
  jw.begin_object("params")
      .field("kind_v", a.kind_v)
      .field("gamma_v", gv)
      .field("kind_w", a.kind_w)
      .field("gamma_w", gw)
      .field("p", p)
      .field("q", q)
      .field("alpha", alpha)
      .field("d", a.d)
      .end_object();
  jw.field("in_class", verdict.in_class).field("margin", verdict.margin);
  emit_conditions(jw, verdict.conditions);
  jw.field("estimate", est.estimate)
      .field("diverging", est.diverging)
      .field("divergence_convention", est.note);
  auto wv = ainfty_witness(v), ww = ainfty_witness(w);
  jw.field("v_ainfty_witness_p", wv ? *wv : -1.0)
      .field("w_ainfty_witness_p", ww ? *ww : -1.0)
      .field("w_cone_condition", cone_mass_check(w, 1.0));
  jw.end_object();
  os << "\n";
  a.out.write(os.str());

  if (!a.csv.empty()) {
    std::ostringstream cs;
    cs << "radius,running_max\n";
    for (const auto& [r, m] : est.running_max)
      cs << format_double(r) << ',' << format_double(m) << '\n';
    write_file(a.csv, cs.str());
  }
  if (!a.gnuplot.empty()) {
    std::ostringstream gs;
    gs << "# radius running_max\n";
    for (const auto& [r, m] : est.running_max)
      gs << format_double(r) << ' ' << format_double(m) << '\n';
    write_file(a.gnuplot, gs.str());
  }
  return verdict.in_class ? 0 : 1;
}

//==============================================================================
// sparse-demo
//==============================================================================
struct SparseArgs {
  std::string preset = "ball";
  std::string alpha = "0.5";
  int d = 1, N = 128;
  double L = 16.0, ratio = 2.0;
  std::string csv, dump_field;
  Output out;
};

int run_sparse_demo(const SparseArgs& a) {
  Grid grid = build_grid(a.d, a.L, a.N);
  GridFunction f(grid, 0.0);
  if (a.preset == "ball") {
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid.radius(i) <= 1.0) f.values[i] = 1.0;
  } else if (a.preset == "gaussian") {
    f = sample(TestFunction::gaussian({0, 0, 0}, 1.0), grid);
  } else if (a.preset == "two-bumps") {
    GridFunction g1 = sample(TestFunction::gaussian({-2.0, 0, 0}, 0.8), grid);
    GridFunction g2 = sample(TestFunction::gaussian({2.0, 0, 0}, 1.2), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) f.values[i] = g1.values[i] + g2.values[i];
  } else {
    throw CLI::ValidationError("preset", "expected ball|gaussian|two-bumps");
  }

  double alpha = parse_rational(a.alpha);
  DominationReport rep = domination_report(f, alpha, a.ratio);

  std::ostringstream os;
  JsonWriter jw(os);
  jw.begin_object().field("schema", 1).field("command", "sparse-demo");
  jw.begin_object("params")
      .field("preset", a.preset)
      .field("alpha", alpha)
      .field("d", a.d)
      .field("L", a.L)
      .field("N", a.N)
      .field("ratio", a.ratio)
      .end_object();
  jw.field("lower_constant", rep.lower_constant)
      .field("upper_constant", rep.upper_constant)
      .field("sparse_vs_dyadic", rep.sparse_vs_dyadic)
      .field("sparse_below_dyadic", rep.sparse_below_dyadic)
      .field("eta", 1.0 - 1.0 / a.ratio);

  // per-lattice sparsity audit
  jw.begin_array("families");
  for (const DyadicLattice& lattice : build_lattices(a.d)) {
    LatticeOnGrid lat(lattice, grid);
    SparseFamily fam = build_sparse_family(f, lat, a.ratio);
    SparsityCheck chk = check_sparsity(fam, lat);
    jw.begin_element_object()
        .field("members", static_cast<int>(fam.members.size()))
        .field("eta_ok", chk.eta_ok)
        .field("disjoint", chk.disjoint)
        .field("worst_fraction", chk.worst_fraction)
        .end_object();
  }
  jw.end_array();
  jw.end_object();
  os << "\n";
  a.out.write(os.str());

  if (!a.csv.empty()) {
    std::ostringstream cs;
    cs << "index,riesz_potential,dyadic_sum,sparse_sum\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      cs << i << ',' << format_double(rep.direct[i]) << ',' << format_double(rep.dyadic_sum[i])
         << ',' << format_double(rep.sparse_sum[i]) << '\n';
    write_file(a.csv, cs.str());
  }
  if (!a.dump_field.empty()) {
    std::ostringstream fs;
    export_csv(f, fs);
    write_file(a.dump_field, fs.str());
  }
  return 0;
}

//==============================================================================
// constants
//==============================================================================
struct ConstArgs {
  int d = 1;
  double tau_min = 0.1, tau_max = 50.0;
  int points = 64;
  Output out;
};

int run_constants(const ConstArgs& a) {
  std::ostringstream cs;
  cs << "tau,abs_alpha,p_bound,abs_beta\n";
  bool violated = false;
  for (int k = 0; k < a.points; ++k) {
    double tau =
        a.tau_min * std::pow(a.tau_max / a.tau_min, static_cast<double>(k) / (a.points - 1));
    MultiplierConstants mc = multiplier_constants(tau, a.d);
    if (std::abs(mc.alpha) > mc.p_bound * (1 + 1e-14)) violated = true;
    cs << format_double(tau) << ',' << format_double(std::abs(mc.alpha)) << ','
       << format_double(mc.p_bound) << ',' << format_double(std::abs(mc.beta)) << '\n';
  }
  a.out.write(cs.str());
  return violated ? 1 : 0;
}

//==============================================================================
// mixed
//==============================================================================
struct MixedArgs {
  std::string p = "2", q = "4", s = "3/4", gamma = "1";
  int d = 3, m = 1;
  double Lx = 16.0, Ly = 16.0;
  int Nx = 24, Ny = 32;
  std::string family = "bessel";
  Output out;
};

int run_mixed(const MixedArgs& a) {
  MixedParams P;
  P.p = parse_rational(a.p);
  P.q = parse_rational(a.q);
  P.s = parse_rational(a.s);
  P.gamma = parse_rational(a.gamma);
  P.dim_x = a.d;
  P.dim_y = a.m;
  P.family = parse_family(a.family);

  Grid gx = build_grid(a.d, a.Lx, a.Nx);
  Grid gy = build_grid(a.m, a.Ly, a.Ny);

  std::vector<MixedTestCase> cases;
  cases.push_back(
      {"separable",
       {{TestFunction::gaussian({0, 0, 0}, 3.0), TestFunction::gaussian({0, 0, 0}, 2.0)}}});
  cases.push_back(
      {"two-bump",
       {{TestFunction::gaussian({0, 0, 0}, 3.0), TestFunction::gaussian({0, 0, 0}, 2.0)},
        {TestFunction::gaussian({1.0, 0, 0}, 2.8), TestFunction::gaussian({2.0, 0, 0}, 2.0)}}});

  std::ostringstream os;
  JsonWriter jw(os);
  jw.begin_object().field("schema", 1).field("command", "mixed");
  jw.begin_object("params")
      .field("p", P.p)
      .field("q", P.q)
      .field("s", P.s)
      .field("gamma", P.gamma)
      .field("d", P.dim_x)
      .field("m", P.dim_y)
      .field("family", a.family)
      .end_object();
  try {
    MixedReport rep = verify_mixed(P, cases, gx, gy);
    jw.field("admissible", rep.admissible)
        .field("window_lo", rep.window_lo)
        .field("window_hi", rep.window_hi)
        .field("integrability", rep.integrability)
        .field("integrability_exponent", rep.integrability_exponent);
    emit_conditions(jw, rep.conditions);
    jw.field("max_ratio", rep.max_ratio);
    jw.begin_array("cases");
    for (const MixedCaseResult& c : rep.cases) {
      jw.begin_element_object()
          .field("name", c.name)
          .field("lhs", c.lhs)
          .field("rhs", c.rhs)
          .field("ratio", c.ratio)
          .field("separable", c.separable)
          .field("separable_consistency", c.separable_consistency)
          .end_object();
    }
    jw.end_array();
    jw.end_object();
    os << "\n";
    a.out.write(os.str());
    return rep.admissible ? 0 : 1;
  } catch (const std::domain_error& e) {
    jw.field("admissible", false).field("error", e.what()).end_object();
    os << "\n";
    a.out.write(os.str());
    return 1;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"gnlab: numerical laboratory for weighted interpolation inequalities"};
  app.require_subcommand(1);

  CheckArgs check_args;
  VerifyArgs verify_args;
  MuckArgs muck_args;
  SparseArgs sparse_args;
  ConstArgs const_args;
  MixedArgs mixed_args;

  auto add_gn_flags = [](CLI::App* cmd, CheckArgs& a) {
    cmd->add_option("--family", a.family, "weight family: power|bracket");
    cmd->add_option("--derivative", a.derivative, "derivative family: riesz|bessel");
    cmd->add_option("--d", a.d, "dimension (1..3)");
    cmd->add_option("--p", a.p, "exponent p (rational accepted)");
    cmd->add_option("--q", a.q, "exponent q");
    cmd->add_option("--r", a.r, "exponent r");
    cmd->add_option("--s", a.s, "derivative order s");
    cmd->add_option("--t", a.t, "derivative order t");
    cmd->add_option("--theta", a.theta, "interpolation parameter");
    cmd->add_option("--alpha", a.alpha, "weight exponent alpha");
    cmd->add_option("--beta", a.beta, "weight exponent beta");
    cmd->add_option("--gamma", a.gamma, "weight exponent gamma");
    cmd->add_option("--out", a.out.path, "write JSON here instead of stdout");
  };

  CLI::App* check_cmd = app.add_subcommand("check", "admissibility of a parameter tuple");
  add_gn_flags(check_cmd, check_args);

  CLI::App* verify_cmd = app.add_subcommand("verify", "numerical inequality verification");
  add_gn_flags(verify_cmd, verify_args.base);
  verify_cmd->add_option("--L", verify_args.L, "box extent");
  verify_cmd->add_option("--N", verify_args.N, "points per axis");
  verify_cmd->add_option("--corpus", verify_args.corpus, "corpus preset name");
  verify_cmd->add_option("--corpus-file", verify_args.corpus_file, "plain-text corpus config");
  verify_cmd->add_option("--config", verify_args.config, "key=value grid/corpus config");
  verify_cmd->add_flag("--no-refine", verify_args.no_refine, "skip the N -> 2N drift check");
  verify_cmd->add_option("--csv", verify_args.csv, "per-function ratio CSV");
  verify_cmd->add_option("--gnuplot", verify_args.gnuplot, "whitespace-delimited ratio data");

  CLI::App* muck_cmd = app.add_subcommand("muckenhoupt", "weight-pair class verdict and estimate");
  muck_cmd->add_option("--kind-v", muck_args.kind_v, "first weight kind: power|bracket");
  muck_cmd->add_option("--gamma-v", muck_args.gamma_v, "first weight exponent");
  muck_cmd->add_option("--kind-w", muck_args.kind_w, "second weight kind");
  muck_cmd->add_option("--gamma-w", muck_args.gamma_w, "second weight exponent");
  muck_cmd->add_option("--p", muck_args.p, "exponent p");
  muck_cmd->add_option("--q", muck_args.q, "exponent q");
  muck_cmd->add_option("--alpha", muck_args.alpha, "fractional order alpha");
  muck_cmd->add_option("--d", muck_args.d, "dimension");
  muck_cmd->add_option("--rmin", muck_args.rmin, "smallest searched radius");
  muck_cmd->add_option("--rmax", muck_args.rmax, "largest searched radius");
  muck_cmd->add_option("--csv", muck_args.csv, "running-max CSV (radius, max)");
  muck_cmd->add_option("--gnuplot", muck_args.gnuplot, "running-max gnuplot data");
  muck_cmd->add_option("--out", muck_args.out.path, "write JSON here instead of stdout");

  CLI::App* sparse_cmd = app.add_subcommand("sparse-demo", "pointwise sparse domination demo");
  sparse_cmd->add_option("--preset", sparse_args.preset, "function: ball|gaussian|two-bumps");
  sparse_cmd->add_option("--alpha", sparse_args.alpha, "fractional order in ]0,d[");
  sparse_cmd->add_option("--d", sparse_args.d, "dimension");
  sparse_cmd->add_option("--L", sparse_args.L, "box extent");
  sparse_cmd->add_option("--N", sparse_args.N, "points per axis");
  sparse_cmd->add_option("--ratio", sparse_args.ratio, "stopping ratio (> 1)");
  sparse_cmd->add_option("--csv", sparse_args.csv, "per-point CSV (I_alpha, sums)");
  sparse_cmd->add_option("--dump-field", sparse_args.dump_field, "input function CSV");
  sparse_cmd->add_option("--out", sparse_args.out.path, "write JSON here instead of stdout");

  CLI::App* const_cmd = app.add_subcommand("constants", "multiplier constants table");
  const_cmd->add_option("--d", const_args.d, "dimension");
  const_cmd->add_option("--tau-min", const_args.tau_min, "smallest tau");
  const_cmd->add_option("--tau-max", const_args.tau_max, "largest tau");
  const_cmd->add_option("--points", const_args.points, "log-grid size");
  const_cmd->add_option("--out", const_args.out.path, "write CSV here instead of stdout");

  CLI::App* mixed_cmd = app.add_subcommand("mixed", "mixed-norm inequality verification");
  mixed_cmd->add_option("--p", mixed_args.p, "x exponent p");
  mixed_cmd->add_option("--q", mixed_args.q, "y exponent q");
  mixed_cmd->add_option("--s", mixed_args.s, "x derivative order");
  mixed_cmd->add_option("--gamma", mixed_args.gamma, "bracket weight exponent");
  mixed_cmd->add_option("--d", mixed_args.d, "x dimension");
  mixed_cmd->add_option("--m", mixed_args.m, "y dimension");
  mixed_cmd->add_option("--Lx", mixed_args.Lx, "x box extent");
  mixed_cmd->add_option("--Nx", mixed_args.Nx, "x points per axis");
  mixed_cmd->add_option("--Ly", mixed_args.Ly, "y box extent");
  mixed_cmd->add_option("--Ny", mixed_args.Ny, "y points per axis");
  mixed_cmd->add_option("--family", mixed_args.family, "derivative family: riesz|bessel");
  mixed_cmd->add_option("--out", mixed_args.out.path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
  }

  try {
    if (check_cmd->parsed()) return run_check(check_args);
    if (verify_cmd->parsed()) return run_verify(verify_args, verify_cmd);
    if (muck_cmd->parsed()) return run_muckenhoupt(muck_args);
    if (sparse_cmd->parsed()) return run_sparse_demo(sparse_args);
    if (const_cmd->parsed()) return run_constants(const_args);
    if (mixed_cmd->parsed()) return run_mixed(mixed_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coslab/errors.hpp"
#include "coslab/io.hpp"
#include "coslab/multipliers.hpp"
#include "coslab/parallel.hpp"
#include "coslab/s2_operators.hpp"
#include "coslab/s2_verify.hpp"
#include "coslab/starbody.hpp"
#include "coslab/suites.hpp"
#include "coslab/zonal.hpp"

namespace coslab::cli {
namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "coslab";
  for (const auto& a : args) s += " " + a;
  return s;
}

json run_report(const std::vector<std::string>& args, json config, const std::vector<json>& results,
                const std::vector<SkippedCheck>& skipped, double wall_time, int pass_count, int fail_count) {
  return json{{"command", join(args)},
              {"config", std::move(config)},
              {"results", results},
              {"skipped", skipped},
              {"wall_time", wall_time},
              {"pass_count", pass_count},
              {"fail_count", fail_count}};
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") out << j.dump(2) << '\n';
  else write_json_file(path, j);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class T>
const T& require(const std::optional<T>& v, const std::string& flag, const std::string& what) {
  if (!v) throw ParseError(flag + " is required for " + what);
  return *v;
}

// ---------------------------------------------------------------- multiplier

struct MultiplierArgs {
  std::string family;
  int n = 3;
  std::optional<double> alpha, beta, mu, nu, t;
  int jmax = 10;
  std::string format = "csv";
};

SpectralOperator multiplier_operator(const MultiplierArgs& a) {
  const std::string what = "family " + a.family;
  if (a.family == "m") return SpectralOperator::cosine(require(a.alpha, "--alpha", what));
  if (a.family == "q") return SpectralOperator::sine(require(a.alpha, "--alpha", what));
  if (a.family == "qplus") return SpectralOperator::q_plus(require(a.mu, "--mu", what), require(a.nu, "--nu", what));
  if (a.family == "qminus") return SpectralOperator::q_minus(require(a.mu, "--mu", what), require(a.nu, "--nu", what));
  if (a.family == "a") {
    return SpectralOperator::smoothing(require(a.alpha, "--alpha", what), require(a.beta, "--beta", what));
  }
  if (a.family == "funk") return SpectralOperator::funk();
  if (a.family == "poisson") return SpectralOperator::poisson(require(a.t, "--t", what));
  throw ParseError("unknown family '" + a.family + "'");
}

int cmd_multiplier(const MultiplierArgs& a, std::ostream& out) {
  const SpectralOperator op = multiplier_operator(a);
  const auto rows = op.table(a.n, a.jmax);
  if (a.format == "json") {
    json j{{"family", a.family}, {"operator", op.name()}, {"n", a.n}, {"rows", json::array()}};
    for (std::size_t k = 0; k < rows.size(); ++k) j["rows"].push_back({{"j", k}, {"value", rows[k]}});
    out << j.dump(2) << '\n';
  } else {
    out << "j,value\n";
    for (std::size_t k = 0; k < rows.size(); ++k) out << k << ',' << num(rows[k]) << '\n';
  }
  return ok;
}

// ------------------------------------------------------------------ constant

struct ConstantArgs {
  std::string name;
  int n = 3;
  int i = 0;
  double alpha = 0.0;
  bool list = false;
};

int cmd_constant(const ConstantArgs& a, std::ostream& out) {
  if (a.list) {
    for (int k = 0; k <= static_cast<int>(Constant::range_backward); ++k) {
      out << constant_name(static_cast<Constant>(k)) << '\n';
    }
    return ok;
  }
  if (a.name.empty()) throw ParseError("--name is required (or --list)");
  out << num(constant(constant_from_name(a.name), a.n, a.i, a.alpha)) << '\n';
  return ok;
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::vector<int> dims{2, 3, 4, 5, 8};
  int jmax = 200;
  int lmax = 12;
  int n_theta = 48;
  int n_phi = 96;
  std::optional<double> tol;
  std::uint64_t seed = 7;
  int samples = 5;
  std::vector<std::string> groups;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  static const std::vector<std::string> suites{"multipliers", "zonal", "s2", "starbody", "all"};
  if (std::find(suites.begin(), suites.end(), a.suite) == suites.end()) {
    throw ParseError("unknown suite '" + a.suite + "'");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const bool all = a.suite == "all";
  std::vector<json> results;
  std::vector<SkippedCheck> skipped;
  int pass = 0, fail = 0;
  auto add = [&](const std::string& suite, const std::vector<IdentityReport>& reps) {
    for (const auto& r : reps) {
      json j = r;
      j["suite"] = suite;
      results.push_back(std::move(j));
      (r.pass ? pass : fail) += 1;
    }
  };

  json config{{"suite", a.suite}, {"seed", a.seed}};
  if (all || a.suite == "multipliers") {
    IdentityCheckOptions o;
    o.jmax = a.jmax;
    o.alpha_grid = cell_centred_grid(-6.0, 6.0, 40);
    if (a.tol) o.tol = *a.tol;
    config["multipliers"] = {{"n", a.dims}, {"jmax", o.jmax}, {"alpha_grid", "40 cell-centred points in (-6, 6)"},
                             {"tol", o.tol}};
    for (int n : a.dims) {
      auto res = check_identities(n, o);
      add("multipliers", res.reports);
      skipped.insert(skipped.end(), res.skipped.begin(), res.skipped.end());
    }
  }
  if (all || a.suite == "zonal") {
    ZonalSuiteOptions o;
    o.seed = a.seed;
    o.samples = a.samples;
    if (a.tol) o.tol_quadrature = *a.tol;
    config["zonal"] = {{"n", o.dims}, {"degree", o.degree}, {"tol_exact", o.tol_exact},
                       {"tol_quadrature", o.tol_quadrature}, {"tol_positivity", o.tol_positivity},
                       {"positivity_samples", o.positivity_samples}};
    add("zonal", verify_zonal_suite(o));
  }
  if (all || a.suite == "s2") {
    S2SuiteOptions o;
    o.band_limit = a.lmax;
    o.n_theta = a.n_theta;
    o.n_phi = a.n_phi;
    o.seed = a.seed;
    o.samples = a.samples;
    o.groups = a.groups;
    if (a.tol) o.tol_quadrature = *a.tol;
    config["s2"] = {{"band_limit", o.band_limit}, {"n_theta", o.n_theta}, {"n_phi", o.n_phi},
                    {"tol_quadrature", o.tol_quadrature}, {"tol_spectral", o.tol_spectral},
                    {"tol_limit", o.tol_limit}, {"samples", o.samples}, {"groups", o.groups}};
    add("s2", verify_s2_suite(o));
  }
  if (all || a.suite == "starbody") {
    StarbodySuiteOptions o;
    o.n_theta = a.n_theta;
    o.n_phi = a.n_phi;
    o.band_limit = a.lmax;
    o.seed = a.seed;
    if (a.tol) o.tol = *a.tol;
    config["starbody"] = {{"n_theta", o.n_theta}, {"n_phi", o.n_phi}, {"band_limit", o.band_limit},
                          {"tol", o.tol}, {"tol_exact", o.tol_exact}, {"bodies", o.bodies}};
    add("starbody", verify_starbody_suite(o));
  }
  config["threads"] = thread_count();
  emit(run_report(args, config, results, skipped, seconds_since(t0), pass, fail), a.out, out);
  return fail == 0 ? ok : identity_failure;
}

// --------------------------------------------------------------------- apply

struct ApplyArgs {
  std::string op;
  std::string method = "spectral";
  std::optional<double> alpha, t;
  int i = 2;
  std::optional<int> lmax;
  std::string input, output;
};

SpectralOperator diagonal_operator(const ApplyArgs& a) {
  const std::string what = "--op " + a.op;
  if (a.op == "cosine") return SpectralOperator::cosine(require(a.alpha, "--alpha", what));
  if (a.op == "qalpha") return SpectralOperator::sine(require(a.alpha, "--alpha", what));
  if (a.op == "funk") return SpectralOperator::funk();
  if (a.op == "poisson") return SpectralOperator::poisson(require(a.t, "--t", what));
  throw RepresentationMismatch(what + " is not a diagonal operator");
}

bool is_diagonal(const std::string& op) {
  return op == "cosine" || op == "qalpha" || op == "funk" || op == "poisson";
}

Representation apply_to_grid(const ApplyArgs& a, const GridFunction& f) {
  if (a.op == "dualradon") throw RepresentationMismatch("dualradon needs a grassmann input");
  if (a.op == "radon") {
    if (a.i == 2 && a.method == "spectral") {
      return GrassmannFunctionS2{GrassmannFunctionS2::Kind::planes,
                                 apply_spectral(f, SpectralOperator::funk(), a.lmax)};
    }
    return radon(f, a.i, a.lmax);
  }
  const SpectralOperator op = diagonal_operator(a);
  if (a.method == "spectral") return apply_spectral(f, op, a.lmax);
  if (a.op == "cosine") return cosine_direct(f, op.alpha, a.lmax);
  if (a.op == "qalpha") return sine_direct(f, op.alpha, a.lmax);
  if (a.op == "funk") return funk_direct(f, a.lmax);
  return poisson_direct(f, op.t, a.lmax);
}

Representation apply_to_harmonic(const ApplyArgs& a, const HarmonicCoeffs& c) {
  if (!is_diagonal(a.op)) throw RepresentationMismatch("--op " + a.op + " needs a sampled (grid) input");
  if (a.method == "direct") throw RepresentationMismatch("direct quadrature needs a sampled (grid) input");
  return apply_spectral(c, diagonal_operator(a));
}

Representation apply_to_grassmann(const ApplyArgs& a, const GrassmannFunctionS2& g) {
  if (a.op != "dualradon") throw RepresentationMismatch("a grassmann input only accepts --op dualradon");
  if (a.method == "spectral" && g.kind == GrassmannFunctionS2::Kind::planes) {
    require_even(g.repr);
    return apply_spectral(g.repr, SpectralOperator::funk(), a.lmax);
  }
  return dual_radon(g, a.lmax);
}

Representation apply_to_zonal(const ApplyArgs& a, const ZonalFunction& z) {
  if (!is_diagonal(a.op)) throw RepresentationMismatch("--op " + a.op + " is only defined for S^2 grids");
  const SpectralOperator op = diagonal_operator(a);
  if (a.method == "spectral") {
    op.validate(z.n);
    return zonal_apply(z, op);
  }
  if (a.op != "cosine") throw RepresentationMismatch("zonal direct quadrature is implemented for --op cosine only");
  const int J = z.degree();
  const QuadratureRule rule = gauss_jacobi_rule(z.n, J + 1);
  std::vector<double> samples;
  for (double t : rule.nodes) samples.push_back(zonal_cosine_direct(z.n, z, op.alpha, t, J));
  return zonal_analyze(z.n, rule, samples, J);
}

int cmd_apply(const ApplyArgs& a) {
  static const std::vector<std::string> ops{"cosine", "funk", "qalpha", "poisson", "radon", "dualradon"};
  if (std::find(ops.begin(), ops.end(), a.op) == ops.end()) throw ParseError("unknown --op '" + a.op + "'");
  if (a.method != "spectral" && a.method != "direct") throw ParseError("--method must be spectral or direct");
  const Representation in = representation_from_json(read_json_file(a.input));
  const Representation result = std::visit(
      [&](const auto& f) -> Representation {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GridFunction>) return apply_to_grid(a, f);
        else if constexpr (std::is_same_v<T, HarmonicCoeffs>) return apply_to_harmonic(a, f);
        else if constexpr (std::is_same_v<T, GrassmannFunctionS2>) return apply_to_grassmann(a, f);
        else return apply_to_zonal(a, f);
      },
      in);
  json params = json::object();
  if (a.alpha) params["alpha"] = *a.alpha;
  if (a.t) params["t"] = *a.t;
  if (a.op == "radon") params["i"] = a.i;
  if (a.lmax) params["band_limit"] = *a.lmax;
  json j = to_json(result);
  j["meta"] = {{"op", a.op}, {"params", params}, {"engine", a.method}};
  write_json_file(a.output, j);
  return ok;
}

// ---------------------------------------------------------------------- body

struct MakeArgs {
  std::string shape = "ball";
  int n = 3;
  double r = 1.0;
  std::vector<double> axes;
  double p = 2.0;
  int n_theta = 48;
  int n_phi = 96;
  int degree = 32;
  bool zonal = false;
  std::string output;
};

int cmd_make(const MakeArgs& a) {
  ShapeSpec s;
  if (a.shape == "ball") s.kind = ShapeSpec::Kind::ball;
  else if (a.shape == "ellipsoid") s.kind = ShapeSpec::Kind::ellipsoid;
  else if (a.shape == "lp") s.kind = ShapeSpec::Kind::lp_ball;
  else throw ParseError("--shape must be ball, ellipsoid or lp");
  s.r = a.r;
  s.axes = a.axes;
  s.p = a.p;
  write_json_file(a.output, make_body(a.n, s, {a.n_theta, a.n_phi, a.degree, a.zonal}));
  return ok;
}

struct IntersectArgs {
  std::string input, output;
  std::optional<int> i;
};

int cmd_intersect(const IntersectArgs& a) {
  const StarBody L = star_body_from_json(read_json_file(a.input));
  validate_body(L);
  write_json_file(a.output, a.i ? i_intersection_body(L, *a.i) : intersection_body(L));
  return ok;
}

struct ClassifyArgs {
  std::string input;
  std::optional<double> alpha;
  double alpha_min = -3.0;
  double alpha_max = 2.9;
  int steps = 59;
  double smooth = 0.98;
  double margin = 1e-7;
  int lmax = 24;
  std::string csv;
  std::string out;
};

std::vector<double> sweep(double lo, double hi, int steps) {
  if (steps < 1) throw ParseError("--steps must be at least 1");
  if (steps == 1) return {lo};
  std::vector<double> a(steps);
  for (int k = 0; k < steps; ++k) a[k] = lo + (hi - lo) * k / (steps - 1);
  return a;
}

int cmd_classify(const ClassifyArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const StarBody K = star_body_from_json(read_json_file(a.input));
  ClassifyOptions o;
  o.smoothing_t = a.smooth;
  o.margin = a.margin;
  o.band_limit = a.lmax;
  validate_body(K, o.odd_tol);

  std::vector<json> verdicts;
  std::vector<SkippedCheck> skipped;
  std::ostringstream csv;
  csv << "alpha,min_value,verdict\n";
  for (double alpha : a.alpha ? std::vector<double>{*a.alpha} : sweep(a.alpha_min, a.alpha_max, a.steps)) {
    if (excluded(K.n, alpha, Family::body_class)) {
      SkippedCheck s{"classify", {}, "alpha lies on the excluded lattice " + excluded_lattice(K.n, Family::body_class)};
      s.params.n = K.n;
      s.params.alpha = alpha;
      skipped.push_back(std::move(s));
      continue;
    }
    const ClassVerdict v = classify_K_alpha(K, alpha, o);
    csv << num(alpha) << ',' << num(v.min_value) << ',' << to_string(v.member) << '\n';
    verdicts.push_back(v);
  }
  if (!a.csv.empty()) {
    std::ofstream f(a.csv);
    if (!f) throw ParseError("cannot write '" + a.csv + "'");
    f << csv.str();
  }
  const json config{{"n", K.n},          {"shape", K.shape},  {"smoothing_t", o.smoothing_t},
                    {"margin", o.margin}, {"band_limit", o.band_limit}};
  emit(run_report(args, config, verdicts, skipped, seconds_since(t0), static_cast<int>(verdicts.size()), 0), a.out,
       out);
  return ok;
}

struct PairArgs {
  std::string k_path, l_path;
  int i = 2;
  double tol = 1e-6;
  std::string out;
};

int cmd_pair(const PairArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const StarBody K = star_body_from_json(read_json_file(a.k_path));
  const StarBody L = star_body_from_json(read_json_file(a.l_path));
  validate_body(K);
  validate_body(L);
  const IdentityReport r = i_intersection_pair_check(K, L, a.i, a.tol);
  emit(run_report(args, {{"i", a.i}, {"tol", a.tol}}, {json(r)}, {}, seconds_since(t0), r.pass ? 1 : 0,
                  r.pass ? 0 : 1),
       a.out, out);
  return r.pass ? ok : identity_failure;
}

// ------------------------------------------------------------------- config

// Subcommand that will be selected by `args`, descending into nested ones.
CLI::App* active_subcommand(CLI::App& app, const std::vector<std::string>& args) {
  CLI::App* cur = &app;
  for (const auto& a : args) {
    if (a.rfind("-", 0) == 0) continue;
    CLI::App* sub = nullptr;
    try {
      sub = cur->get_subcommand(a);
    } catch (const CLI::OptionNotFound&) {
      sub = nullptr;
    }
    if (sub == nullptr) break;
    cur = sub;
  }
  return cur;
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Splits off `--config path` and appends the config entries the active
// subcommand understands and the command line does not already set.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw ParseError("--config needs a file");
      path = args[k + 1];
      args.erase(args.begin() + static_cast<long>(k), args.begin() + static_cast<long>(k) + 2);
      break;
    }
    if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + static_cast<long>(k));
      break;
    }
  }
  if (path.empty()) return args;
  CLI::App* sub = active_subcommand(app, args);
  const auto extra = config_flags(path);
  for (std::size_t k = 0; k < extra.size();) {
    const std::string& flag = extra[k];
    const bool has_value = k + 1 < extra.size() && extra[k + 1].rfind("--", 0) != 0;
    const std::size_t width = has_value ? 2 : 1;
    if (sub->get_option_no_throw(flag) != nullptr && !has_flag(args, flag)) {
      args.insert(args.end(), extra.begin() + static_cast<long>(k), extra.begin() + static_cast<long>(k + width));
    }
    k += width;
  }
  return args;
}

}  // namespace

std::vector<std::string> config_flags(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::vector<std::string> flags;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(path + ":" + std::to_string(lineno) + ": empty key");
    flags.push_back("--" + key);
    if (value != "true") flags.push_back(value);
  }
  return flags;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytic families of spherical operators, identity suites and star-body classification", "coslab"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Cap on OpenMP threads (also COSLAB_THREADS)");
  app.add_option("--config", "Flat key=value file of default flags");

  MultiplierArgs ma;
  auto* mult = app.add_subcommand("multiplier", "Tabulate a Fourier-Laplace multiplier for j = 0..jmax");
  mult->add_option("--family", ma.family, "m, q, qplus, qminus, a, funk or poisson")->required();
  mult->add_option("--n", ma.n, "Dimension of the ambient space");
  mult->add_option("--alpha", ma.alpha);
  mult->add_option("--beta", ma.beta);
  mult->add_option("--mu", ma.mu);
  mult->add_option("--nu", ma.nu);
  mult->add_option("--t", ma.t, "Poisson parameter in [0, 1)");
  mult->add_option("--jmax", ma.jmax);
  mult->add_option("--format", ma.format)->check(CLI::IsMember({"csv", "json"}));

  ConstantArgs ca;
  auto* cst = app.add_subcommand("constant", "Evaluate a named normalization constant");
  cst->add_option("--name", ca.name);
  cst->add_option("--n", ca.n);
  cst->add_option("--i", ca.i);
  cst->add_option("--alpha", ca.alpha);
  cst->add_flag("--list", ca.list, "List the constant names");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run identity suites and print a JSON run report");
  ver->add_option("--suite", va.suite, "multipliers, zonal, s2, starbody or all");
  ver->add_option("--n", va.dims, "Dimensions for the multiplier suite")->delimiter(',');
  ver->add_option("--jmax", va.jmax);
  ver->add_option("--lmax", va.lmax, "Band limit of the S^2 test functions");
  ver->add_option("--n-theta", va.n_theta);
  ver->add_option("--n-phi", va.n_phi);
  ver->add_option("--tol", va.tol, "Override the suite's main tolerance");
  ver->add_option("--seed", va.seed);
  ver->add_option("--samples", va.samples, "Random functions per identity");
  ver->add_option("--groups", va.groups, "S^2 identity groups to run (default all)")->delimiter(',');
  ver->add_option("--out", va.out, "Report path (default stdout)");

  ApplyArgs aa;
  auto* app_cmd = app.add_subcommand("apply", "Apply an operator to a function file");
  app_cmd->add_option("--op", aa.op, "cosine, funk, qalpha, poisson, radon or dualradon")->required();
  app_cmd->add_option("--method", aa.method, "spectral or direct");
  app_cmd->add_option("--alpha", aa.alpha);
  app_cmd->add_option("--t", aa.t);
  app_cmd->add_option("--i", aa.i, "Subspace dimension for radon");
  app_cmd->add_option("--lmax", aa.lmax, "Band limit (default: detected)");
  app_cmd->add_option("input", aa.input)->required();
  app_cmd->add_option("output", aa.output)->required();

  auto* body = app.add_subcommand("body", "Construct, intersect and classify star bodies");
  body->require_subcommand(1);

  MakeArgs mk;
  auto* make = body->add_subcommand("make", "Write a star body file");
  make->add_option("--shape", mk.shape, "ball, ellipsoid or lp");
  make->add_option("--n", mk.n);
  make->add_option("--r", mk.r, "Ball radius");
  make->add_option("--axes", mk.axes, "Ellipsoid semi-axes")->delimiter(',');
  make->add_option("--p", mk.p, "lp exponent");
  make->add_option("--n-theta", mk.n_theta);
  make->add_option("--n-phi", mk.n_phi);
  make->add_option("--degree", mk.degree, "Degree of zonal profiles");
  make->add_flag("--zonal", mk.zonal, "Use the zonal representation for n = 3");
  make->add_option("output", mk.output)->required();

  IntersectArgs ia;
  auto* inter = body->add_subcommand("intersect", "Intersection body, or IB_i with --i");
  inter->add_option("--i", ia.i);
  inter->add_option("input", ia.input)->required();
  inter->add_option("output", ia.output)->required();

  ClassifyArgs cl;
  auto* cls = body->add_subcommand("classify", "Membership in K_{alpha,n} for one alpha or a sweep");
  cls->add_option("--alpha", cl.alpha);
  cls->add_option("--alpha-min", cl.alpha_min);
  cls->add_option("--alpha-max", cl.alpha_max);
  cls->add_option("--steps", cl.steps);
  cls->add_option("--smooth", cl.smooth, "Poisson smoothing parameter t");
  cls->add_option("--margin", cl.margin);
  cls->add_option("--lmax", cl.lmax);
  cls->add_option("--csv", cl.csv, "Write the (alpha, min_value, verdict) summary here");
  cls->add_option("--out", cl.out, "Report path (default stdout)");
  cls->add_option("input", cl.input)->required();

  PairArgs pa;
  auto* pair = body->add_subcommand("pair-check", "Check K = IB_i(L)");
  pair->add_option("--i", pa.i);
  pair->add_option("--tol", pa.tol);
  pair->add_option("--out", pa.out);
  pair->add_option("K", pa.k_path)->required();
  pair->add_option("L", pa.l_path)->required();

  try {
    std::vector<std::string> args = merge_config(app, raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? ok : parse_error;
    }
    if (threads > 0) set_thread_cap(threads);

    if (*mult) return cmd_multiplier(ma, out);
    if (*cst) return cmd_constant(ca, out);
    if (*ver) return cmd_verify(va, args, out);
    if (*app_cmd) return cmd_apply(aa);
    if (*make) return cmd_make(mk);
    if (*inter) return cmd_intersect(ia);
    if (*cls) return cmd_classify(cl, args, out);
    if (*pair) return cmd_pair(pa, args, out);
    return parse_error;
  } catch (const ExcludedParameter& e) {
    err << "excluded parameter: " << e.what() << '\n';
    return excluded_parameter;
  } catch (const QuadratureWindow& e) {
    err << "quadrature window: " << e.what() << '\n';
    return excluded_parameter;
  } catch (const GammaPole& e) {
    err << "gamma pole: " << e.what() << '\n';
    return excluded_parameter;
  } catch (const RepresentationMismatch& e) {
    err << "representation mismatch: " << e.what() << '\n';
    return representation_mismatch;
  } catch (const NonPositiveBody& e) {
    err << "rejected body: " << e.what() << '\n';
    return rejected_body;
  } catch (const OddInput& e) {
    err << "rejected input: " << e.what() << '\n';
    return rejected_body;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return parse_error;
  }
}

}  // namespace coslab::cli

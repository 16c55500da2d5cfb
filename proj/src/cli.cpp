#include "zeroroot/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>

#include <CLI11.hpp>

#include "zeroroot/bae.hpp"
#include "zeroroot/io.hpp"
#include "zeroroot/thermo.hpp"

namespace zeroroot {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  ModelParams params;
  std::string out;
  std::string format;
  double tol = 1e-10;
  int max_iter = 200;
  int homotopy_steps = 0;
  std::optional<Regime> regime;
  std::string seed_style = "quantile";
  bool break_c2 = false;
  std::string sweep;
  std::string quantity;
  std::optional<double> from, to;
  std::optional<int> steps;
  int string_n = 3;
  int states = 1;
  SurfaceConvention convention = SurfaceConvention::derived;
  double k_max = 0.0;
  std::string roots_path;
};

SurfaceConvention parse_convention(const std::string& s) {
  if (s == "derived") return SurfaceConvention::derived;
  if (s == "printed") return SurfaceConvention::printed;
  throw ConfigError("convention must be derived or printed, got '" + s + "'");
}

int parse_int(const std::string& s, const std::string& key) {
  const double v = parse_double(s, key);
  if (v != std::floor(v)) throw ConfigError("'" + key + "' must be an integer");
  return int(v);
}

void apply_extras(RunConfig& cfg, const std::map<std::string, std::string>& extras) {
  for (const auto& [key, val] : extras) {
    if (key == "tol") cfg.tol = parse_double(val, key);
    else if (key == "max_iter") cfg.max_iter = parse_int(val, key);
    else if (key == "homotopy_steps") cfg.homotopy_steps = parse_int(val, key);
    else if (key == "regime") cfg.regime = parse_regime(val);
    else if (key == "seed") cfg.seed_style = val;
    else if (key == "format") cfg.format = val;
    else if (key == "sweep") cfg.sweep = val;
    else if (key == "quantity") cfg.quantity = val;
    else if (key == "from") cfg.from = parse_double(val, key);
    else if (key == "to") cfg.to = parse_double(val, key);
    else if (key == "steps") cfg.steps = parse_int(val, key);
    else if (key == "string_n") cfg.string_n = parse_int(val, key);
    else if (key == "states") cfg.states = parse_int(val, key);
    else if (key == "convention") cfg.convention = parse_convention(val);
    else if (key == "k_max") cfg.k_max = parse_double(val, key);
    else throw ConfigError("unknown config key '" + key + "'");
  }
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) std::cout << content;
  else write_file(cfg.out, content);
}

void emit_side(const RunConfig& cfg, const std::string& suffix, const std::string& content) {
  if (!cfg.out.empty()) write_file(cfg.out + suffix, content);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ModelParams homogeneous_part(ModelParams p) {
  p.theta_bar.clear();
  return p;
}

QuadratureSpec quad_spec(const RunConfig& cfg) {
  QuadratureSpec s;
  s.abs_tol = cfg.tol;
  s.k_max = cfg.k_max;
  return s;
}

json spec_json(const QuadratureSpec& s) {
  return {{"abs_tol", s.abs_tol}, {"k_max", s.k_max}, {"max_intervals", s.max_intervals}};
}

// verify

struct Check {
  std::string name;
  double residual;
  double threshold;
  bool pass() const { return residual <= threshold; }
};

int cmd_verify(const RunConfig& cfg) {
  const ModelParams& P = cfg.params;
  if (P.two_n > 8) throw ParamError("verify supports two_n <= 8");
  std::vector<Check> checks;
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  auto pt = [&] { return cplx(d(rng), d(rng)); };

  double ybe = 0, re = 0, dre = 0;
  for (int i = 0; i < 20; ++i) {
    const cplx a = pt(), b = pt(), c = pt();
    ybe = std::max(ybe, yang_baxter_residual(a, b, c));
    re = std::max(re, reflection_residual(a, b, P.p));
    dre = std::max(dre, dual_reflection_residual(a, b, P.q, P.xi));
  }
  checks.push_back({"yang_baxter", ybe, 1e-12});
  checks.push_back({"reflection", re, 1e-12});
  checks.push_back({"dual_reflection", dre, 1e-12});

  const ModelParams H = homogeneous_part(P);
  const ComplexMatrix hd = hamiltonian_direct(H);
  const double hscale = std::max(1.0, max_norm(hd));
  checks.push_back({"hermitian", max_norm(hd - hd.adjoint()) / hscale, 1e-12});
  TransferHamiltonianOptions topt;
  topt.flip_c2_sign = cfg.break_c2;
  checks.push_back({"hamiltonian_equivalence", max_norm(hd - hamiltonian_from_transfer(H, topt)), 1e-9});

  const cplx u0(0.3, 0.2), v0(-0.45, 0.7);
  const ComplexMatrix tu = transfer_matrix(u0, P), tv = transfer_matrix(v0, P);
  const double tscale = std::max(1.0, max_norm(tu) * max_norm(tv));
  checks.push_back({"crossing", crossing_residual(u0, P) / std::max(1.0, max_norm(tu)), 1e-10});
  checks.push_back({"commuting_transfer", max_norm(tu * tv - tv * tu) / tscale, 1e-10});
  double ident = 0;
  for (int j = 1; j <= P.two_n; ++j) ident = std::max(ident, transfer_identity_residual(j, P));
  checks.push_back({"transfer_identity", ident, 1e-8});

  const auto ev = diagonalize(H);
  const auto poly = spectral_polynomial(ev.front().state, H);
  const auto roots = extract_zero_roots(poly, H);
  cplx l0 = 2.0 * H.p * H.q;
  for (int j = 0; j < H.two_n; ++j) l0 *= 1.0 + H.a_bar * H.a_bar;
  checks.push_back({"leading_coefficient", std::abs(poly.leading() - 2.0), 1e-6});
  checks.push_back({"lambda_at_zero", std::abs(poly.eval(0.0) - l0) / std::abs(l0), 1e-8});
  checks.push_back({"lambda_crossing", poly.crossing_asymmetry(), 1e-8});
  double inv = 0;
  for (int j = 1; j <= H.two_n; ++j) inv = std::max(inv, inversion_identity_check(roots, H, j));
  checks.push_back({"inversion_identity", inv, 1e-6});

  bool ok = true;
  for (const auto& c : checks) ok = ok && c.pass();
  if (cfg.format == "csv") {
    CsvTable t;
    t.header = {"check", "residual", "threshold", "pass"};
    for (const auto& c : checks)
      t.add({c.name, csv_number(c.residual), csv_number(c.threshold), c.pass() ? "true" : "false"});
    emit(cfg, t.str());
  } else {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"residual", c.residual}, {"threshold", c.threshold}, {"pass", c.pass()}});
    emit(cfg, dump({{"params", params_to_json(P)}, {"checks", arr}, {"pass", ok}}));
  }
  for (const auto& c : checks)
    if (!c.pass()) std::cerr << "FAIL " << c.name << " residual " << c.residual << "\n";
  return ok ? 0 : 1;
}

// ed

SolveOptions solve_opts(const RunConfig& cfg) {
  SolveOptions o;
  o.tol = cfg.tol;
  o.max_iter = cfg.max_iter;
  o.homotopy_steps = cfg.homotopy_steps;
  return o;
}

std::string scatter_csv(const std::vector<std::pair<std::string, ZeroRootSet>>& sets) {
  CsvTable t;
  t.header = {"set", "zbar_re", "zbar_im"};
  for (const auto& [name, r] : sets)
    for (cplx zb : r.z_bar()) t.add({name, csv_number(zb.real()), csv_number(zb.imag())});
  return t.str();
}

int cmd_ed(const RunConfig& cfg) {
  const ModelParams& P = cfg.params;
  if (P.two_n > 12) throw SizeError("ed supports two_n <= 12");
  const ModelParams H = homogeneous_part(P);
  const auto ev = diagonalize(H);
  const int k = cfg.states <= 0 ? int(ev.size()) : std::min<int>(cfg.states, int(ev.size()));
  std::vector<ZeroRootSet> roots;
  for (int i = 0; i < k; ++i) {
    auto r = extract_zero_roots(spectral_polynomial(ev[std::size_t(i)].state, H), H);
    r.residual = max_abs(bae_residual(r, H));
    roots.push_back(std::move(r));
  }
  std::optional<ZeroRootSet> inhom;
  if (!P.homogeneous()) inhom = solve_ground_state(P, cfg.regime, solve_opts(cfg)).solution.roots;

  std::vector<std::pair<std::string, ZeroRootSet>> scatter = {{"homogeneous", roots.front()}};
  if (inhom) scatter.emplace_back("inhomogeneous", *inhom);

  if (cfg.format == "json") {
    json e = json::array(), s = json::array();
    for (const auto& p : ev) e.push_back(p.energy);
    for (const auto& r : roots) s.push_back(roots_to_json(r));
    json j = {{"params", params_to_json(P)}, {"energies", e}, {"states", s}};
    if (inhom) j["inhomogeneous"] = roots_to_json(*inhom);
    emit(cfg, dump(j));
  } else {
    CsvTable t;
    t.header = {"index", "energy"};
    for (std::size_t i = 0; i < ev.size(); ++i) t.add({std::to_string(i), csv_number(ev[i].energy)});
    emit(cfg, t.str());
    json s = json::array();
    for (const auto& r : roots) s.push_back(roots_to_json(r));
    emit_side(cfg, ".roots.json", dump(s));
    if (inhom) emit_side(cfg, ".roots_inhomogeneous.json", dump(roots_to_json(*inhom)));
  }
  emit_side(cfg, ".scatter.csv", scatter_csv(scatter));
  return 0;
}

// bae

int cmd_bae(const RunConfig& cfg) {
  const ModelParams& P = cfg.params;
  BaeSolution sol;
  double energy = NAN;
  Regime seed_regime;
  if (cfg.seed_style == "uniform") {
    const double sgn = P.p < 0 ? -1.0 : 1.0;
    seed_regime = cfg.regime ? *cfg.regime : regime_of(std::abs(P.p), sgn * P.q_bar());
    sol = solve_bae(seed_roots(seed_regime, homogeneous_part(P), SeedStyle::uniform), P, solve_opts(cfg));
  } else if (cfg.seed_style == "quantile") {
    auto gs = solve_ground_state(P, cfg.regime, solve_opts(cfg));
    sol = gs.solution;
    seed_regime = gs.seed_regime;
  } else {
    throw ConfigError("seed must be uniform or quantile");
  }
  if (P.homogeneous()) energy = energy_from_roots(sol.roots, P);
  const auto pat = classify_pattern(sol.roots, P);
  if (cfg.format == "json") {
    json j = roots_to_json(sol.roots);
    j["energy"] = P.homogeneous() ? json(energy) : json(nullptr);
    j["seed_regime"] = to_string(seed_regime);
    j["regime"] = to_string(pat.regime);
    j["iterations"] = sol.iterations;
    emit(cfg, dump(j));
  } else {
    CsvTable t;
    t.header = {"index", "z_re", "z_im", "zbar_re", "zbar_im"};
    const auto zb = sol.roots.z_bar();
    for (std::size_t i = 0; i < zb.size(); ++i)
      t.add({std::to_string(i), csv_number(sol.roots.z[i].real()), csv_number(sol.roots.z[i].imag()),
             csv_number(zb[i].real()), csv_number(zb[i].imag())});
    emit(cfg, t.str());
  }
  std::cerr << "regime " << to_string(pat.regime) << " residual " << sol.residual;
  if (P.homogeneous()) std::cerr << " energy " << csv_number(energy);
  std::cerr << "\n";
  return 0;
}

// classify

json pattern_json(const RootPattern& pat) {
  json j;
  j["regime"] = to_string(pat.regime);
  j["pair_centers"] = pat.pair_centers;
  json bp = json::array();
  for (char c : pat.boundary_pairs) bp.push_back(std::string(1, c));
  j["boundary_pairs"] = bp;
  j["boundary_values"] = pat.boundary_values;
  j["real_pair"] = pat.real_pair ? json(*pat.real_pair) : json(nullptr);
  j["imaginary_pair"] = pat.imaginary_pair ? json(*pat.imaginary_pair) : json(nullptr);
  json ex = json::array();
  for (auto [n, c] : pat.extra_strings) ex.push_back({n, c});
  j["extra_strings"] = ex;
  json bs = json::array();
  for (char c : pat.boundary_strings) bs.push_back(std::string(1, c));
  j["boundary_strings"] = bs;
  j["real_count"] = pat.real_count;
  j["imag_count"] = pat.imag_count;
  j["unmatched"] = pat.unmatched;
  return j;
}

int cmd_classify(const RunConfig& cfg) {
  ZeroRootSet roots;
  if (!cfg.roots_path.empty()) {
    std::ifstream f(cfg.roots_path);
    if (!f) throw ConfigError("cannot open roots file '" + cfg.roots_path + "'");
    json j;
    try {
      j = json::parse(f);
      roots = roots_from_json(j);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("bad roots file: ") + e.what());
    }
  } else {
    const ModelParams H = homogeneous_part(cfg.params);
    if (H.two_n > 12) throw SizeError("classify from ED supports two_n <= 12");
    const auto ev = diagonalize(H);
    roots = extract_zero_roots(spectral_polynomial(ev.front().state, H), H);
  }
  const auto pat = classify_pattern(roots, roots.params);
  if (cfg.format == "json") {
    json j = pattern_json(pat);
    j["params"] = params_to_json(roots.params);
    emit(cfg, dump(j));
  } else {
    CsvTable t;
    t.header = {"key", "value"};
    t.add({"regime", to_string(pat.regime)});
    t.add({"quartets", std::to_string(pat.pair_centers.size() / 2)});
    std::string bp;
    for (char c : pat.boundary_pairs) bp += c;
    t.add({"boundary_pairs", bp});
    t.add({"real_count", std::to_string(pat.real_count)});
    t.add({"imag_count", std::to_string(pat.imag_count)});
    t.add({"real_pair", pat.real_pair ? csv_number(*pat.real_pair) : ""});
    t.add({"imaginary_pair", pat.imaginary_pair ? csv_number(*pat.imaginary_pair) : ""});
    t.add({"extra_strings", std::to_string(pat.extra_strings.size())});
    t.add({"boundary_strings", std::to_string(pat.boundary_strings.size())});
    t.add({"unmatched", std::to_string(pat.unmatched)});
    emit(cfg, t.str());
  }
  return 0;
}

// thermo

int cmd_thermo(const RunConfig& cfg) {
  const ModelParams& P = cfg.params;
  const auto spec = quad_spec(cfg);
  const auto s = surface_energy(P, spec, cfg.convention);
  const double bulk = bulk_energy_per_site(P.a_bar, spec);
  const std::string conv = cfg.convention == SurfaceConvention::derived ? "derived" : "printed";
  if (cfg.format == "json") {
    emit(cfg, dump({{"params", params_to_json(P)},
                    {"spec", spec_json(spec)},
                    {"convention", conv},
                    {"surface_energy", s.value},
                    {"components", s.components},
                    {"est_error", s.est_error},
                    {"bulk_energy_per_site", bulk}}));
  } else {
    CsvTable t;
    t.header = {"quantity", "value"};
    t.add({"surface_energy", csv_number(s.value)});
    for (const auto& [k, v] : s.components) t.add({k, csv_number(v)});
    t.add({"est_error", csv_number(s.est_error)});
    t.add({"bulk_energy_per_site", csv_number(bulk)});
    emit(cfg, t.str());
  }
  return 0;
}

// scan

struct ScanRow {
  ThermoResult r;
  std::string status = "ok";
};

int cmd_scan(const RunConfig& cfg) {
  static const std::set<std::string> sweeps = {"p", "q", "xi", "a_bar", "z_bar"};
  if (!sweeps.count(cfg.sweep)) throw ConfigError("sweep must be one of p, q, xi, a_bar, z_bar");
  std::string quantity = cfg.quantity;
  if (quantity.empty()) quantity = cfg.sweep == "z_bar" ? "bulk_excitation" : "surface";

  std::vector<std::string> comps;
  if (quantity == "surface") {
    comps = {"e_b_p", "e_b_q", "e_b0"};
    if (cfg.sweep == "z_bar") throw ConfigError("surface scans sweep p, q, xi or a_bar");
  } else if (quantity == "e_b_p") {
    comps = {"integral"};
    if (cfg.sweep != "p" && cfg.sweep != "a_bar") throw ConfigError("e_b_p scans sweep p or a_bar");
  } else if (quantity == "e_b0") {
    comps = {"integral", "shift"};
    if (cfg.sweep != "a_bar") throw ConfigError("e_b0 scans sweep a_bar");
  } else if (quantity == "bulk_excitation" || quantity == "string_excitation") {
    comps = quantity == "bulk_excitation" ? std::vector<std::string>{"integral", "rational"}
                                          : std::vector<std::string>{"integral", "bare"};
    if (cfg.sweep != "z_bar") throw ConfigError(quantity + " scans sweep z_bar");
  } else if (quantity == "boundary_excitation") {
    comps = {"integral", "rational"};
    if (cfg.sweep != "p" && cfg.sweep != "q") throw ConfigError("boundary_excitation scans sweep p or q");
  } else {
    throw ConfigError("unknown quantity '" + quantity + "'");
  }

  double lo = -3, hi = 3;
  int n = 61;
  if (cfg.sweep == "z_bar") { lo = -4; hi = 4; n = 81; }
  if (cfg.sweep == "a_bar") { lo = 0; hi = 1; n = 51; }
  if (cfg.sweep == "xi") { lo = 0; hi = 5; n = 51; }
  if (quantity == "boundary_excitation") { lo = -0.45; hi = 0.45; n = 19; }
  lo = cfg.from.value_or(lo);
  hi = cfg.to.value_or(hi);
  n = cfg.steps.value_or(n);
  if (n < 1) throw ConfigError("steps must be positive");

  const auto spec = quad_spec(cfg);
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) grid[std::size_t(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  std::vector<ScanRow> rows(grid.size());

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    const double x = grid[std::size_t(i)];
    ModelParams P = cfg.params;
    ScanRow& row = rows[std::size_t(i)];
    try {
      if (cfg.sweep == "p") P.p = x;
      else if (cfg.sweep == "q") P.q = x;
      else if (cfg.sweep == "xi") P.xi = x;
      else if (cfg.sweep == "a_bar") P.a_bar = x;
      if (quantity == "surface") row.r = surface_energy(P, spec, cfg.convention);
      else if (quantity == "e_b_p") row.r = boundary_surface_term(P.p, P.a_bar, spec, cfg.convention);
      else if (quantity == "e_b0") row.r = free_surface_term(P.a_bar, spec, cfg.convention);
      else if (quantity == "bulk_excitation") row.r = bulk_excitation_energy(x, P, spec);
      else if (quantity == "string_excitation") row.r = string_excitation_energy(cfg.string_n, x, P, spec);
      else row.r = boundary_excitation_energy(cfg.sweep == "p" ? P.p : P.q_bar(), P, spec);
    } catch (const DivergenceError&) {
      row.status = "divergent";
    } catch (const DomainError&) {
      row.status = "domain";
    } catch (const std::exception&) {
      row.status = "failed";
    }
    if (row.status != "ok") row.r.value = row.r.est_error = NAN;
  }

  if (cfg.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json j = {{cfg.sweep, grid[i]}, {"status", rows[i].status}};
      if (rows[i].status == "ok") {
        j["value"] = rows[i].r.value;
        for (const auto& c : comps) j[c] = rows[i].r.components.at(c);
        j["est_error"] = rows[i].r.est_error;
      }
      arr.push_back(j);
    }
    emit(cfg, dump({{"sweep", cfg.sweep},
                    {"quantity", quantity},
                    {"params", params_to_json(cfg.params)},
                    {"spec", spec_json(spec)},
                    {"rows", arr}}));
  } else {
    CsvTable t;
    t.header = {cfg.sweep, "value"};
    for (const auto& c : comps) t.header.push_back(c);
    t.header.push_back("est_error");
    t.header.push_back("status");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<std::string> cells = {csv_number(grid[i]), csv_number(rows[i].r.value)};
      for (const auto& c : comps) {
        auto it = rows[i].r.components.find(c);
        cells.push_back(csv_number(it == rows[i].r.components.end() ? NAN : it->second));
      }
      cells.push_back(csv_number(rows[i].r.est_error));
      cells.push_back(rows[i].status);
      t.add(cells);
    }
    emit(cfg, t.str());
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Zero-root Bethe ansatz toolkit for the competing open spin chain"};
  RunConfig cfg;
  std::string config_path, theta, regime, convention;
  std::optional<int> two_n, max_iter, homotopy_steps;
  std::optional<double> a_bar, p, q, xi, tol;
  std::optional<std::string> format;

  app.add_option("command", cfg.command, "verify | ed | bae | classify | thermo | scan")
      ->required()
      ->check(CLI::IsMember({"verify", "ed", "bae", "classify", "thermo", "scan"}));
  app.add_option("--config", config_path, "key=value parameter file")->check(CLI::ExistingFile);
  app.add_option("--out", cfg.out, "output file (stdout if omitted)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", tol, "solver / quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--two-n", two_n, "chain length 2N");
  app.add_option("--a-bar", a_bar, "a = i a_bar");
  app.add_option("--p", p, "left boundary parameter");
  app.add_option("--q", q, "right boundary parameter");
  app.add_option("--xi", xi, "right boundary twist");
  app.add_option("--theta", theta, "inhomogeneities theta_bar, comma separated");
  app.add_option("--max-iter", max_iter, "Newton iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--homotopy-steps", homotopy_steps, "theta ramp steps (0 disables)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--regime", regime, "seed regime override I..VI");
  app.add_option("--seed", cfg.seed_style, "bae seed style: quantile or uniform");
  app.add_option("--sweep", cfg.sweep, "scan variable: p, q, xi, a_bar, z_bar");
  app.add_option("--quantity", cfg.quantity,
                 "scan quantity: surface, e_b_p, e_b0, bulk_excitation, string_excitation, "
                 "boundary_excitation");
  app.add_option("--from", cfg.from, "scan start");
  app.add_option("--to", cfg.to, "scan end");
  app.add_option("--steps", cfg.steps, "scan grid points");
  app.add_option("--string-n", cfg.string_n, "string length for string_excitation");
  app.add_option("--states", cfg.states, "ed: number of states to extract roots for (0 = all)");
  app.add_option("--convention", convention, "surface energy convention: derived or printed");
  app.add_option("--k-max", cfg.k_max, "quadrature cutoff (0 = automatic)");
  app.add_option("--roots", cfg.roots_path, "classify: ZeroRootSet JSON input");
  app.add_flag("--break-c2", cfg.break_c2)->group("");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) {
      const auto file = read_config(config_path);
      cfg.params = file.params;
      apply_extras(cfg, file.extras);
    }
    if (two_n) cfg.params.two_n = *two_n;
    if (a_bar) cfg.params.a_bar = *a_bar;
    if (p) cfg.params.p = *p;
    if (q) cfg.params.q = *q;
    if (xi) cfg.params.xi = *xi;
    if (!theta.empty()) cfg.params.theta_bar = parse_list(theta, "theta");
    if (tol) cfg.tol = *tol;
    if (max_iter) cfg.max_iter = *max_iter;
    if (homotopy_steps) cfg.homotopy_steps = *homotopy_steps;
    if (format) cfg.format = *format;
    if (!regime.empty()) cfg.regime = parse_regime(regime);
    if (!convention.empty()) cfg.convention = parse_convention(convention);
    if (cfg.format.empty()) cfg.format = cfg.command == "verify" ? "json" : "csv";
    if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("format must be csv or json");
    cfg.params.validate();

    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "ed") return cmd_ed(cfg);
    if (cfg.command == "bae") return cmd_bae(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "thermo") return cmd_thermo(cfg);
    return cmd_scan(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zeroroot

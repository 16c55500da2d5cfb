#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "zeroroot/bae.hpp"
#include "zeroroot/cli.hpp"
#include "zeroroot/io.hpp"
#include "zeroroot/thermo.hpp"

using namespace zeroroot;

namespace {

using clk = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail, clk::time_point t0) {
  const double dt = std::chrono::duration<double>(clk::now() - t0).count();
  std::printf("criterion %2d  %-4s  %-34s %s  [%.2f s]\n", id, ok ? "PASS" : "FAIL", name, detail.c_str(), dt);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(clk::time_point t0) { return std::chrono::duration<double>(clk::now() - t0).count(); }

ModelParams regime_point(double p, double qb, int two_n = 8) {
  ModelParams m;
  m.two_n = two_n;
  m.a_bar = 0.66;
  m.xi = 1.2;
  m.p = p;
  m.q = qb * std::sqrt(1 + m.xi * m.xi);
  return m;
}

struct RegimeCase {
  Regime r;
  double p, qb;
};

const RegimeCase kCases[] = {{Regime::I, 0.1, 0.4},   {Regime::II, 0.1, -0.2}, {Regime::III, 0.8, 0.2},
                             {Regime::IV, 1.2, -0.2}, {Regime::V, 1.2, 0.7},   {Regime::VI, 0.8, -0.8}};

void c1() {
  const auto t0 = clk::now();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  auto pt = [&] { return cplx(d(rng), d(rng)); };
  double ybe = 0, re = 0, dre = 0;
  for (int i = 0; i < 100; ++i) {
    ybe = std::max(ybe, yang_baxter_residual(pt(), pt(), pt()));
    re = std::max(re, reflection_residual(pt(), pt(), 1.3));
    dre = std::max(dre, dual_reflection_residual(pt(), pt(), 0.5, 1.2));
  }
  const double m = std::max({ybe, re, dre});
  report(1, "algebraic residuals", m <= 1e-12 && seconds_since(t0) < 1.0,
         fmt("ybe %.1e", ybe) + fmt(" re %.1e", re) + fmt(" dual %.1e", dre), t0);
}

void c2() {
  const auto t0 = clk::now();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ua(0.0, 1.0), up(0.2, 2.0), uq(0.2, 2.0), ux(0.0, 2.0), sg(-1, 1);
  std::vector<ModelParams> draws;
  for (int two_n : {4, 6}) {
    for (int i = 0; i < 5; ++i) {
      ModelParams m;
      m.two_n = two_n;
      m.a_bar = ua(rng);
      m.p = up(rng);
      m.q = uq(rng) * (sg(rng) < 0 ? -1 : 1);
      m.xi = ux(rng);
      draws.push_back(m);
    }
    draws.push_back(regime_point(1.2, 0.7, two_n));
  }
  double worst = 0;
  for (const auto& m : draws) worst = std::max(worst, max_norm(hamiltonian_direct(m) - hamiltonian_from_transfer(m)));
  report(2, "hamiltonian equivalence", worst <= 1e-9 && seconds_since(t0) < 30.0, fmt("max %.1e", worst), t0);
}

void c3() {
  const auto t0 = clk::now();
  ModelParams m = regime_point(1.2, 0.7, 4);
  double worst = 0;
  for (int pass = 0; pass < 2; ++pass) {
    m.theta_bar = pass ? spread_profile(4) : std::vector<double>{};
    for (int j = 1; j <= 4; ++j) worst = std::max(worst, transfer_identity_residual(j, m));
  }
  report(3, "operator product identity", worst <= 1e-8, fmt("max rel %.1e", worst), t0);
}

void c4() {
  const auto t0 = clk::now();
  double lead = 0, l0 = 0, cross = 0, inv = 0;
  for (int two_n : {4, 6}) {
    const ModelParams m = regime_point(1.2, 0.7, two_n);
    const cplx ref = 2.0 * m.p * m.q * std::pow(1.0 + m.a_bar * m.a_bar, two_n);
    for (const auto& e : diagonalize(m)) {
      const auto poly = spectral_polynomial(e.state, m);
      lead = std::max(lead, std::abs(poly.leading() - 2.0));
      l0 = std::max(l0, std::abs(poly.eval(0.0) - ref) / std::abs(ref));
      cross = std::max(cross, poly.crossing_asymmetry());
      const auto roots = extract_zero_roots(poly, m);
      for (int j = 1; j <= two_n; ++j) inv = std::max(inv, inversion_identity_check(roots, m, j));
    }
  }
  const bool ok = lead <= 1e-6 && l0 <= 1e-8 && cross <= 1e-8 && inv <= 1e-6;
  report(4, "eigenvalue certificates", ok,
         fmt("lead %.1e", lead) + fmt(" L0 %.1e", l0) + fmt(" cross %.1e", cross) + fmt(" inv %.1e", inv), t0);
}

void c5() {
  const auto t0 = clk::now();
  bool ok = true;
  double worst_res = 0, worst_de = 0;
  std::string tags;
  for (const auto& c : kCases) {
    const ModelParams m = regime_point(c.p, c.qb);
    try {
      const auto gs = solve_ground_state(m, c.r);
      const auto pat = classify_pattern(gs.solution.roots, m);
      const double de = std::abs(gs.energy - diagonalize(m).front().energy);
      worst_res = std::max(worst_res, gs.solution.residual);
      worst_de = std::max(worst_de, de);
      ok = ok && gs.solution.residual <= 1e-10 && pat.regime == c.r && de <= 1e-8;
      tags += to_string(pat.regime) + " ";
    } catch (const std::exception& e) {
      ok = false;
      tags += "err ";
    }
  }
  ok = ok && seconds_since(t0) < 300.0;
  report(5, "ED vs BAE closure", ok, tags + fmt("res %.1e", worst_res) + fmt(" dE %.1e", worst_de), t0);
}

bool inventory_ok(const RootPattern& pat, Regime r, double p, double qb) {
  const bool two_b = r == Regime::I || r == Regime::II;
  const bool one_b = r == Regime::III || r == Regime::IV;
  const bool real = r == Regime::I || r == Regime::III || r == Regime::V;
  const bool imag = r == Regime::II || r == Regime::III || r == Regime::VI;
  std::size_t nb = two_b ? 2 : one_b ? 1 : 0;
  if (pat.boundary_pairs.size() != nb) return false;
  const double bmin = std::min(std::abs(p), std::abs(qb));
  if (one_b && std::abs(pat.boundary_values[0] - (bmin + 0.5)) > 0.08) return false;
  if (pat.real_pair.has_value() != real) return false;
  if (pat.imaginary_pair.has_value() != imag) return false;
  if (imag && !(*pat.imaginary_pair > bmin)) return false;
  return true;
}

void c6() {
  const auto t0 = clk::now();
  bool ok = true;
  std::string tags;
  for (const auto& c : kCases) {
    const ModelParams m = regime_point(c.p, c.qb);
    const auto ev = diagonalize(m);
    const auto roots = extract_zero_roots(spectral_polynomial(ev.front().state, m), m);
    bool good = inventory_ok(classify_pattern(roots, m), c.r, c.p, c.qb);
    if (c.r == Regime::I || c.r == Regime::II) {
      ModelParams t = m;
      t.theta_bar = spread_profile(8);
      const auto gs = solve_ground_state(t, c.r);
      good = good && inventory_ok(classify_pattern(gs.solution.roots, t), c.r, c.p, c.qb);
    }
    ok = ok && good;
    tags += to_string(c.r) + (good ? "+ " : "- ");
  }
  report(6, "root pattern inventories", ok, tags, t0);
}

void c7() {
  const auto t0 = clk::now();
  double worst = 0;
  bool ok = true;
  for (int n : {3, 4})
    for (double z : {0.0, 0.5, 1.7})
      for (double a : {0.0, 0.66, 0.8}) {
        ModelParams m;
        m.a_bar = a;
        try {
          worst = std::max(worst, std::abs(string_excitation_energy(n, z, m).value));
        } catch (const std::exception&) {
          ok = false;
        }
      }
  report(7, "string excitation cancellation", ok && worst <= 1e-8, fmt("max %.1e", worst), t0);
}

void c8() {
  const auto t0 = clk::now();
  ModelParams m;
  m.a_bar = 0.6;
  m.p = 1.0;
  m.xi = 1.2;
  m.q = 0.8 * std::sqrt(1 + 1.44);
  std::vector<double> L, E;
  for (int two_n = 8; two_n <= 16; two_n += 2) {
    m.two_n = two_n;
    L.push_back(two_n);
    E.push_back(solve_ground_state(m).energy);
  }
  Eigen::MatrixXd a(long(L.size()), 2), b(long(L.size()), 3);
  Eigen::VectorXd y(long(L.size()));
  for (std::size_t i = 0; i < L.size(); ++i) {
    a.row(long(i)) << L[i], 1.0;
    b.row(long(i)) << L[i], 1.0, 1.0 / L[i];
    y(long(i)) = E[i];
  }
  const Eigen::VectorXd fit = a.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd fit3 = b.colPivHouseholderQr().solve(y);
  const double eb = surface_energy(m).value;
  const double rel = std::abs(fit(1) - eb) / std::abs(eb);
  report(8, "surface energy vs finite size", rel <= 0.05 && seconds_since(t0) < 600.0,
         fmt("fit %.4f", fit(1)) + fmt(" formula %.4f", eb) + fmt(" rel %.3f", rel), t0);
  std::printf("              diagnostic: fit with a 1/(2N) term gives E_b = %.4f (rel %.3f)\n", fit3(1),
              std::abs(fit3(1) - eb) / std::abs(eb));
}

void c9() {
  const auto t0 = clk::now();
  std::string detail;
  // (i)
  bool i1 = true;
  {
    ModelParams m;
    m.q = 1.0;
    m.xi = 1.2;
    double prev = -INFINITY;
    for (int k = 1; k <= 15; ++k) {
      m.p = 0.2 * k;
      const double e = surface_energy(m).value;
      i1 = i1 && e < 0 && e > prev;
      prev = e;
    }
  }
  // (ii)
  const double gk = free_surface_term(0.0, QuadratureSpec{1e-12, 0.0, 4000}).value;
  const double es = free_surface_term_exp_sinh(0.0, 1e-13);

  const bool i2 = std::abs(gk - es) <= 1e-10;
  // (iii)
  std::vector<double> zs;
  for (int k = -40; k <= 40; ++k) zs.push_back(0.1 * k);
  auto curve = [&](double a) {
    ModelParams m;
    m.a_bar = a;
    std::vector<double> v;
    for (double z : zs) v.push_back(bulk_excitation_energy(z, m).value);
    return v;
  };
  const auto h = curve(0.0), d = curve(0.8);
  const auto arg = std::max_element(h.begin(), h.end()) - h.begin();
  bool single = std::abs(zs[std::size_t(arg)]) < 1e-12;
  std::vector<double> peaks;
  for (std::size_t k = 1; k + 1 < d.size(); ++k)
    if (d[k] > d[k - 1] && d[k] > d[k + 1]) peaks.push_back(zs[k]);
  for (std::size_t k = 1; k + 1 < h.size(); ++k)
    if (h[k] > h[k - 1] && h[k] > h[k + 1] && std::abs(zs[k]) > 1e-12) single = false;
  const bool twin = peaks.size() == 2 && std::abs(peaks[0] + peaks[1]) < 1e-12 && std::abs(peaks[0]) > 0.05;
  const bool i3 = single && twin;
  // (iv)
  std::vector<double> ps;
  for (int k = -9; k <= 9; ++k) ps.push_back(0.05 * k);
  ModelParams ma;
  ma.a_bar = 0.66;
  double best = INFINITY, argp = 1;
  for (double p : ps) {
    const double v = boundary_excitation_energy(p, ma).value;
    if (v < best) { best = v; argp = p; }
  }
  ModelParams m0;
  bool dec = true;
  double prev = INFINITY;
  for (int k = 1; k <= 9; ++k) {
    const double v = boundary_excitation_energy(0.05 * k, m0).value;
    dec = dec && v < prev;
    prev = v;
  }
  const bool i4 = std::abs(argp) < 1e-12 && dec;
  detail = std::string("i:") + (i1 ? "ok" : "no") + " ii:" + (i2 ? "ok" : "no") + fmt("(%.1e)", std::abs(gk - es)) +
           " iii:" + (i3 ? "ok" : "no") + (peaks.size() == 2 ? fmt("(z*=%.1f)", std::abs(peaks[0])) : "") +
           " iv:" + (i4 ? "ok" : "no");
  report(9, "qualitative curve properties", i1 && i2 && i3 && i4, detail, t0);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void c10() {
  const auto t0 = clk::now();
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "zeroroot_acceptance";
  fs::create_directories(dir);
  ModelParams m = regime_point(1.2, 0.7, 8);
  m.theta_bar = spread_profile(8);
  write_file((dir / "chain.cfg").string(), format_config(m));
  const std::string cfg = (dir / "chain.cfg").string();
  const std::vector<std::vector<std::string>> runs = {
      {"verify", "--two-n", "4", "--a-bar", "0.6", "--p", "1", "--q", "0.5", "--xi", "1.2"},
      {"ed", "--config", cfg, "--homotopy-steps", "10"},
      {"bae", "--config", cfg, "--format", "json"},
      {"classify", "--config", cfg, "--format", "json"},
      {"thermo", "--config", cfg, "--format", "json"},
      {"scan", "--config", cfg, "--sweep", "p"},
      {"scan", "--config", cfg, "--sweep", "z_bar", "--format", "json"},
  };
  bool ok = true;
  int compared = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::vector<std::string> outputs;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep) + ".out");
      std::vector<std::string> args = {"zeroroot"};
      args.insert(args.end(), runs[i].begin(), runs[i].end());
      args.push_back("--out");
      args.push_back(out.string());
      if (run_cli(args) != 0) ok = false;
      std::string all = slurp(out);
      for (const char* side : {".roots.json", ".roots_inhomogeneous.json", ".scatter.csv"})
        if (fs::exists(out.string() + side)) all += slurp(out.string() + side);
      outputs.push_back(all);
    }
    ok = ok && !outputs[0].empty() && outputs[0] == outputs[1];
    ++compared;
  }
  report(10, "reproducibility", ok, std::to_string(compared) + " commands byte-identical", t0);
}

}  // namespace

int main() {
  c1();
  c2();
  c3();
  c4();
  c5();
  c6();
  c7();
  c8();
  c9();
  c10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include "zeroroot/bae.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zeroroot {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::I: return "I";
    case Regime::II: return "II";
    case Regime::III: return "III";
    case Regime::IV: return "IV";
    case Regime::V: return "V";
    case Regime::VI: return "VI";
    case Regime::excited: return "excited";
    case Regime::unclassified: return "unclassified";
  }
  return "unclassified";
}

Regime parse_regime(const std::string& s) {
  for (Regime r : {Regime::I, Regime::II, Regime::III, Regime::IV, Regime::V, Regime::VI})
    if (to_string(r) == s) return r;
  throw ParamError("unknown regime '" + s + "'");
}

Regime regime_of(double p, double q_bar) {
  if (p < 0) throw DomainError("regime_of expects p >= 0");
  const bool p_small = p < 0.5;
  if (p_small) {
    if (q_bar >= 0.5) return Regime::III;
    if (q_bar >= 0.0) return Regime::I;
    if (q_bar >= -0.5) return Regime::II;
    return Regime::IV;
  }
  if (q_bar >= 0.5) return Regime::V;
  if (q_bar >= 0.0) return Regime::III;
  if (q_bar >= -0.5) return Regime::IV;
  return Regime::VI;
}

int Inventory::unknowns() const {
  return 2 * quartets + int(boundary.size()) + (real_pair ? 1 : 0) + (imag_pair ? 1 : 0);
}

Inventory inventory_for(Regime r, const ModelParams& params) {
  const int n = params.n();
  const double bp = std::abs(params.p), bq = std::abs(params.q_bar());
  const double bmin = std::min(bp, bq);
  Inventory inv;
  switch (r) {
    case Regime::I: inv = {n - 1, {bp, bq}, true, false}; break;
    case Regime::II: inv = {n - 1, {bp, bq}, false, true}; break;
    case Regime::III: inv = {n - 1, {bmin}, true, true}; break;
    case Regime::IV: inv = {n, {bmin}, false, false}; break;
    case Regime::V: inv = {n, {}, true, false}; break;
    case Regime::VI: inv = {n, {}, false, true}; break;
    default: throw ParamError("no inventory for regime " + to_string(r));
  }
  if (inv.unknowns() != params.two_n + 1) throw Error("inventory count mismatch");
  return inv;
}

std::vector<cplx> BaeState::zbar() const {
  std::vector<cplx> z;
  std::size_t i = 0;
  for (int k = 0; k < inv.quartets; ++k) {
    z.emplace_back(x[i], x[i + 1]);
    z.emplace_back(x[i], -x[i + 1]);
    i += 2;
  }
  for (std::size_t k = 0; k < inv.boundary.size(); ++k) z.emplace_back(0.0, x[i++]);
  if (inv.real_pair) z.emplace_back(x[i++], 0.0);
  if (inv.imag_pair) z.emplace_back(0.0, x[i++]);
  return z;
}

namespace {

// positive-half quantiles of sech(pi(x - a)) + sech(pi(x + a))
std::vector<double> quantile_centers(int m, double a_bar, double c) {
  const double a = std::abs(a_bar);
  auto g = [a](double x) {
    return std::atan(std::exp(std::numbers::pi * (x - a))) - std::atan(std::exp(-std::numbers::pi * a)) +
           std::atan(std::exp(std::numbers::pi * (x + a))) - std::atan(std::exp(std::numbers::pi * a));
  };
  const double total = g(60.0);
  std::vector<double> out;
  for (int k = 0; k < m; ++k) {
    const double target = (k + 0.5) / (m + c);
    double lo = 0.0, hi = 60.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) / total < target ? lo : hi) = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

}  // namespace

BaeState seed_roots(Regime r, const ModelParams& params, SeedStyle style, int variant) {
  BaeState s;
  s.inv = inventory_for(r, params);
  const double bmin = std::min(std::abs(params.p), std::abs(params.q_bar()));
  const int nq = s.inv.quartets;
  std::vector<double> centers;
  double alpha0 = 3.0, beta0 = bmin + 0.2;
  if (style == SeedStyle::uniform) {
    for (int k = 0; k < nq; ++k) centers.push_back(2.0 * (k + 0.5) / nq);
  } else {
    static const double shifts[] = {0.0, 0.5, 1.0, 1.5};
    static const double betas[] = {-1.0, 0.8, 1.1, 1.4};
    const int nb = s.inv.imag_pair ? 4 : 1;
    const int ci = (variant / nb) % 4, bi = variant % nb;
    centers = quantile_centers(nq, params.a_bar, shifts[ci]);
    alpha0 = (centers.empty() ? 0.0 : centers.back()) + 0.8;
    if (betas[bi] > 0) beta0 = betas[bi];
  }
  for (double c : centers) {
    s.x.push_back(c);
    s.x.push_back(1.0);
  }
  for (double b : s.inv.boundary) s.x.push_back(b + 0.5);
  if (s.inv.real_pair) s.x.push_back(alpha0);
  if (s.inv.imag_pair) s.x.push_back(beta0);
  if (int(s.x.size()) != params.two_n + 1) throw Error("seed count mismatch");
  return s;
}

std::vector<BaeState> seed_family(Regime r, const ModelParams& params) {
  const Inventory inv = inventory_for(r, params);
  const int count = 4 * (inv.imag_pair ? 4 : 1);
  std::vector<BaeState> out;
  for (int v = 0; v < count; ++v) out.push_back(seed_roots(r, params, SeedStyle::quantile, v));
  return out;
}

namespace {

constexpr double kRho = 0.5;

struct Singular {
  cplx y;
  double w;
};

struct LogModel {
  std::vector<Singular> pts;
  double konst = 0.0;

  double value(double y) const {
    double f = konst;
    for (const auto& s : pts) f += s.w * std::log(std::norm(y - s.y));
    return f;
  }

  std::vector<double> taylor(double c, int m) const {
    std::vector<double> f(std::size_t(m), 0.0);
    f[0] = value(c);
    for (const auto& s : pts) {
      const cplx inv = 1.0 / (c - s.y);
      cplx pw = inv;
      for (int k = 1; k < m; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        f[std::size_t(k)] += s.w * 2.0 * sign * (pw / double(k)).real();
        pw *= inv;
      }
    }
    return f;
  }

  double radius(double c) const {
    double r = INFINITY;
    for (const auto& s : pts) r = std::min(r, std::abs(c - s.y));
    return r;
  }
};

LogModel log_model(const std::vector<cplx>& zbar, const ModelParams& params) {
  LogModel m;
  const cplx ih(0.0, 0.5), i1(0.0, 1.0);
  for (cplx z : zbar) {
    m.pts.push_back({z + ih, 1.0});
    m.pts.push_back({-z + ih, 1.0});
  }
  m.konst += std::log(4.0);
  m.pts.push_back({i1, -1.0});
  m.konst -= std::log(4.0);
  m.pts.push_back({ih, 1.0});
  m.konst += std::log(4.0);
  m.pts.push_back({cplx(0.0, params.p), -1.0});
  m.pts.push_back({cplx(0.0, params.q_bar()), -1.0});
  m.konst -= std::log(1.0 + params.xi * params.xi);
  for (int l = 1; l <= params.two_n; ++l) {
    const double phi = params.theta_bar_at(l) + params.a_bar;
    m.pts.push_back({-phi + i1, -1.0});
    m.pts.push_back({phi + i1, -1.0});
  }
  return m;
}

// h[k][n] = complete homogeneous symmetric polynomial of degree n in t_1..t_k
template <class T>
std::vector<std::vector<T>> homogeneous_table(const std::vector<T>& t, int nmax) {
  const std::size_t k = t.size();
  std::vector<std::vector<T>> h(k + 1, std::vector<T>(std::size_t(nmax) + 1, T(0)));
  h[0][0] = T(1);
  for (std::size_t i = 1; i <= k; ++i) {
    h[i][0] = T(1);
    for (int n = 1; n <= nmax; ++n) h[i][std::size_t(n)] = h[i - 1][std::size_t(n)] + t[i - 1] * h[i][std::size_t(n - 1)];
  }
  return h;
}

double lambda0_log(const std::vector<cplx>& zbar) {
  double v = std::log(2.0);
  for (cplx z : zbar) v += std::log(std::abs(0.25 + z * z));
  return v;
}

cplx lambda0_exact(const ModelParams& params) {
  cplx v = 2.0 * params.p * params.q;
  for (int l = 1; l <= params.two_n; ++l) {
    const double phi = params.theta_bar_at(l) + params.a_bar;
    v *= 1.0 + phi * phi;
  }
  return v;
}

}  // namespace

Eigen::VectorXd log_system(const BaeState& s, const ModelParams& params) {
  const int L = params.two_n;
  const auto zb = s.zbar();
  const LogModel model = log_model(zb, params);
  std::vector<double> y(static_cast<std::size_t>(L)), t(static_cast<std::size_t>(L));
  double c = 0;
  for (int j = 1; j <= L; ++j) {
    y[std::size_t(j - 1)] = params.theta_bar_at(j) + params.a_bar;
    c += y[std::size_t(j - 1)];
  }
  c /= L;
  double tmax = 0;
  for (int j = 0; j < L; ++j) {
    t[std::size_t(j)] = y[std::size_t(j)] - c;
    tmax = std::max(tmax, std::abs(t[std::size_t(j)]));
  }
  Eigen::VectorXd r(L + 1);
  if (tmax == 0.0) {
    const auto f = model.taylor(c, L);
    double sc = 1.0;
    for (int k = 0; k < L; ++k, sc *= kRho) r(k) = sc * f[std::size_t(k)];
  } else {
    const double ratio = tmax / model.radius(c);
    if (ratio < 0.5) {
      const int m = std::min(600, L + int(std::ceil(std::log(1e-18) / std::log(ratio))));
      const auto f = model.taylor(c, m);
      const auto h = homogeneous_table(t, m);
      double sc = 1.0;
      for (int k = 0; k < L; ++k, sc *= kRho) {
        double acc = 0;
        for (int mm = k; mm < m; ++mm) acc += f[std::size_t(mm)] * h[std::size_t(k + 1)][std::size_t(mm - k)];
        r(k) = sc * acc;
      }
    } else {
      for (int j = 0; j < L; ++j) r(j) = model.value(y[std::size_t(j)]);
    }
  }
  r(L) = lambda0_log(zb) - std::log(std::abs(lambda0_exact(params)));
  return r;
}

namespace {

using Poly = std::vector<cplx>;

void mul_linear(Poly& p, cplx alpha, cplx beta) {  // p <- p * (alpha tau + beta)
  p.push_back(0.0);
  for (std::size_t k = p.size() - 1; k > 0; --k) p[k] = alpha * p[k - 1] + beta * p[k];
  p[0] = beta * p[0];
}

}  // namespace

std::vector<cplx> bae_residual(const ZeroRootSet& roots, const ModelParams& params) {
  const int L = params.two_n;
  std::vector<cplx> u(static_cast<std::size_t>(L));
  for (int j = 1; j <= L; ++j) u[std::size_t(j - 1)] = params.theta(j) + params.a();
  double sep = INFINITY;
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j) sep = std::min(sep, std::abs(u[std::size_t(i)] - u[std::size_t(j)]));

  std::vector<cplx> r(static_cast<std::size_t>(L + 1));
  if (sep >= 1e-2) {
    for (int j = 0; j < L; ++j) {
      const cplx uj = u[std::size_t(j)];
      const cplx lhs = roots.lambda(uj) * roots.lambda(uj - 1.0);
      const cplx rhs = a_bare(uj, params) * d_bare(uj - 1.0, params);
      r[std::size_t(j)] = std::abs(rhs) > 0 ? (lhs - rhs) / rhs : lhs - rhs;
    }
  } else {
    cplx c = 0;
    for (cplx v : u) c += v;
    c /= double(L);
    std::vector<cplx> t(static_cast<std::size_t>(L));
    for (int j = 0; j < L; ++j) t[std::size_t(j)] = u[std::size_t(j)] - c;
    // both sides multiplied by (2u+1)(1-2u) to clear the poles
    Poly lhs{4.0};
    for (cplx z : roots.z) {
      mul_linear(lhs, 1.0, c - z + 0.5);
      mul_linear(lhs, 1.0, c + z + 0.5);
      mul_linear(lhs, 1.0, c - z - 0.5);
      mul_linear(lhs, 1.0, c + z - 0.5);
    }
    mul_linear(lhs, 2.0, 2.0 * c + 1.0);
    mul_linear(lhs, -2.0, 1.0 - 2.0 * c);
    const double sx = std::sqrt(1.0 + params.xi * params.xi);
    const cplx a = params.a();
    Poly rhs{1.0};
    mul_linear(rhs, 2.0, 2.0 * c + 2.0);
    mul_linear(rhs, 1.0, c + params.p);
    mul_linear(rhs, sx, sx * c + params.q);
    mul_linear(rhs, -2.0, 2.0 - 2.0 * c);
    mul_linear(rhs, -1.0, params.p - c);
    mul_linear(rhs, -sx, params.q - sx * c);
    for (int l = 1; l <= L; ++l) {
      const cplx th = params.theta(l);
      mul_linear(rhs, 1.0, c + th + a + 1.0);
      mul_linear(rhs, 1.0, c - th - a + 1.0);
      mul_linear(rhs, -1.0, -c + th + a + 1.0);
      mul_linear(rhs, -1.0, -c - th - a + 1.0);
    }
    const std::size_t deg = std::max(lhs.size(), rhs.size());
    Poly g(deg, 0.0);
    for (std::size_t k = 0; k < lhs.size(); ++k) g[k] += lhs[k];
    for (std::size_t k = 0; k < rhs.size(); ++k) g[k] -= rhs[k];
    const double scale = std::abs(rhs[0]) > 0 ? std::abs(rhs[0]) : 1.0;
    const auto h = homogeneous_table(t, int(deg));
    double sc = 1.0;
    for (int k = 0; k < L; ++k, sc *= kRho) {
      cplx acc = 0;
      for (std::size_t m = std::size_t(k); m < deg; ++m) acc += g[m] * h[std::size_t(k + 1)][m - std::size_t(k)];
      r[std::size_t(k)] = sc * acc / scale;
    }
  }
  const cplx l0 = roots.lambda(0.0), e0 = lambda0_exact(params);
  r[std::size_t(L)] = std::abs(e0) > 0 ? (l0 - e0) / e0 : l0 - e0;
  return r;
}

double max_abs(const std::vector<cplx>& r) {
  double m = 0;
  for (cplx v : r) m = std::max(m, std::abs(v));
  return m;
}

namespace {

double inf_norm(const Eigen::VectorXd& v) {
  double m = 0;
  for (long i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v(i))) return INFINITY;
    m = std::max(m, std::abs(v(i)));
  }
  return m;
}

BaeState newton(BaeState s, const ModelParams& params, const SolveOptions& opts,
                std::vector<double>& history, int& iterations) {
  Eigen::VectorXd r = log_system(s, params);
  double nr = inf_norm(r);
  const long n = long(s.x.size());
  history.push_back(nr);
  for (int it = 0; it < opts.max_iter; ++it) {
    if (nr < 1e-13) break;
    Eigen::MatrixXd jac(r.size(), n);
    for (long i = 0; i < n; ++i) {
      const double h = 1e-7 * std::max(1.0, std::abs(s.x[std::size_t(i)]));
      BaeState sp = s, sm = s;
      sp.x[std::size_t(i)] += h;
      sm.x[std::size_t(i)] -= h;
      jac.col(i) = (log_system(sp, params) - log_system(sm, params)) / (2 * h);
    }
    if (!jac.allFinite()) break;
    const Eigen::VectorXd dx = jac.fullPivLu().solve(-r);
    if (!dx.allFinite()) break;
    double lam = 1.0;
    bool accepted = false;
    BaeState trial = s;
    Eigen::VectorXd rt;
    double nt = INFINITY;
    while (lam > 1e-6) {
      for (long i = 0; i < n; ++i) trial.x[std::size_t(i)] = s.x[std::size_t(i)] + lam * dx(i);
      rt = log_system(trial, params);
      nt = inf_norm(rt);
      if (nt < nr * (1.0 - 1e-4 * lam)) {
        accepted = true;
        break;
      }
      lam *= 0.5;
    }
    ++iterations;
    if (!accepted) break;
    s = trial;
    r = rt;
    nr = nt;
    history.push_back(nr);
  }
  return s;
}

void check_collisions(const std::vector<cplx>& zb) {
  for (std::size_t i = 0; i < zb.size(); ++i)
    for (std::size_t j = i + 1; j < zb.size(); ++j)
      if (std::abs(zb[i] - zb[j]) < 1e-8) throw DegeneracyError("two roots collided");
}

}  // namespace

BaeSolution solve_bae(const BaeState& seed, const ModelParams& params, const SolveOptions& opts) {
  params.validate();
  if (int(seed.x.size()) != params.two_n + 1) throw ParamError("seed must carry 2N+1 unknowns");
  BaeSolution sol;
  BaeState s = seed;
  if (opts.homotopy_steps > 0) {
    const auto start = opts.homotopy_start.empty() ? spread_profile(params.two_n) : opts.homotopy_start;
    std::vector<double> target = params.theta_bar;
    if (target.empty()) target.assign(std::size_t(params.two_n), 0.0);
    ModelParams step = params;
    for (int k = 0; k <= opts.homotopy_steps; ++k) {
      const double w = double(k) / opts.homotopy_steps;
      step.theta_bar.resize(static_cast<std::size_t>(params.two_n));
      for (std::size_t j = 0; j < step.theta_bar.size(); ++j)
        step.theta_bar[j] = (1.0 - w) * start[j] + w * target[j];
      s = newton(s, step, opts, sol.history, sol.iterations);
    }
  } else {
    s = newton(s, params, opts, sol.history, sol.iterations);
  }
  sol.state = s;
  sol.log_residual = inf_norm(log_system(s, params));
  const auto zb = s.zbar();
  sol.roots = roots_from_zbar(zb, params);
  sol.residual = std::isfinite(sol.log_residual) ? max_abs(bae_residual(sol.roots, params)) : INFINITY;
  if (!(sol.residual <= opts.tol))
    throw SolverError("BAE solve did not converge (residual " + std::to_string(sol.residual) + ")",
                      s.x, sol.history);
  check_collisions(zb);
  sol.roots.residual = sol.residual;
  return sol;
}

double energy_from_roots(const ZeroRootSet& roots, const ModelParams& params) {
  if (!params.homogeneous())
    throw PreconditionError("energy_from_roots is defined for theta_bar = 0 only");
  const cplx a = params.a(), i(0.0, 1.0);
  auto a1 = [](cplx u) { return (0.5 / std::numbers::pi) / (u * u + 0.25); };
  cplx sum = 0;
  for (cplx z : roots.z) sum += a1(i * z - i * a) + a1(i * z + i * a);
  const cplx e = -std::numbers::pi * (4.0 * a * a - 1.0) * sum - c0_constant(params);
  if (std::abs(e.imag()) > 1e-8) throw ConsistencyError("energy has an imaginary part");
  return e.real();
}

GroundState solve_ground_state(const ModelParams& params, std::optional<Regime> regime,
                               const SolveOptions& opts) {
  params.validate();
  ModelParams hom = params;
  hom.theta_bar.clear();
  const double sgn = params.p < 0 ? -1.0 : 1.0;
  const Regime r = regime ? *regime : regime_of(std::abs(params.p), sgn * params.q_bar());
  GroundState gs;
  gs.seed_regime = r;
  SolveOptions direct = opts;
  direct.homotopy_steps = 0;
  bool found = false;
  for (const auto& seed : seed_family(r, hom)) {
    ++gs.total_starts;
    try {
      BaeSolution sol = solve_bae(seed, hom, direct);
      const double e = energy_from_roots(sol.roots, hom);
      ++gs.converged_starts;
      if (!found || e < gs.energy) {
        gs.energy = e;
        gs.solution = std::move(sol);
        found = true;
      }
    } catch (const Error&) {
    }
  }
  if (!found) throw SolverError("no seed converged for regime " + to_string(r), {}, {});
  if (!params.homogeneous()) {
    SolveOptions ramp = opts;
    ramp.homotopy_steps = opts.homotopy_steps > 0 ? opts.homotopy_steps : 10;
    ramp.homotopy_start.assign(std::size_t(params.two_n), 0.0);
    gs.solution = solve_bae(gs.solution.state, params, ramp);
  }
  return gs;
}

RootPattern classify_pattern(const ZeroRootSet& roots, const ModelParams& params,
                             const ClassifyOptions& opts) {
  RootPattern pat;
  const double bp = std::abs(params.p), bq = std::abs(params.q_bar());
  struct Im {
    double b;
    bool used;
  };
  std::vector<Im> imag;
  int quartet_halves = 0;
  for (cplx z : roots.z) {
    const cplx zb = cplx(0, -1) * z;
    const double x = std::abs(zb.real()), y = std::abs(zb.imag());
    const double eps = 1e-4 * (1.0 + std::abs(zb));
    if (y <= eps && x > 10 * eps) {
      ++pat.real_count;
      pat.real_pair = x;
    } else if (x <= eps) {
      imag.push_back({y, false});
    } else {
      const int n = int(std::lround(2.0 * y));
      if (n >= 2 && std::abs(y - 0.5 * n) <= opts.string_tol) {
        if (n == 2) {
          ++quartet_halves;
          if (quartet_halves % 2 == 1) {
            pat.pair_centers.push_back(-x);
            pat.pair_centers.push_back(x);
          }
        } else if (zb.imag() > 0) {
          pat.extra_strings.emplace_back(n, x);
        }
      } else {
        ++pat.unmatched;
      }
    }
  }
  auto take_closest = [&](double target) -> std::optional<double> {
    int best = -1;
    double dist = opts.boundary_tol;
    for (std::size_t i = 0; i < imag.size(); ++i) {
      if (imag[i].used) continue;
      const double d = std::abs(imag[i].b - target);
      if (d <= dist) { dist = d; best = int(i); }
    }
    if (best < 0) return std::nullopt;
    imag[std::size_t(best)].used = true;
    return imag[std::size_t(best)].b;
  };
  // assign the closer boundary first so a shared candidate goes to its best match
  std::vector<std::pair<char, double>> order = {{'p', bp}, {'q', bq}};
  for (auto [tag, b] : order)
    if (auto v = take_closest(b + 0.5)) {
      pat.boundary_pairs.push_back(tag);
      pat.boundary_values.push_back(*v);
    }
  for (auto [tag, b] : order)
    if (b < 0.5)
      if (take_closest(0.5 - b)) pat.boundary_strings.push_back(tag);
  for (const auto& im : imag) {
    if (im.used) continue;
    ++pat.imag_count;
    pat.imaginary_pair = im.b;
  }
  if (quartet_halves % 2 == 1) ++pat.unmatched;

  const int n = params.n();
  const int nq = quartet_halves / 2;
  const int nb = int(pat.boundary_pairs.size());
  const bool clean = pat.extra_strings.empty() && pat.boundary_strings.empty() && pat.unmatched == 0;
  struct Row {
    Regime r;
    int nq, nb, nr, ni;
  };
  const Row table[] = {{Regime::I, n - 1, 2, 1, 0},  {Regime::II, n - 1, 2, 0, 1},
                       {Regime::III, n - 1, 1, 1, 1}, {Regime::IV, n, 1, 0, 0},
                       {Regime::V, n, 0, 1, 0},       {Regime::VI, n, 0, 0, 1}};
  pat.regime = Regime::unclassified;
  if (clean) {
    for (const auto& row : table)
      if (row.nq == nq && row.nb == nb && row.nr == pat.real_count && row.ni == pat.imag_count)
        pat.regime = row.r;
  }
  if (pat.regime == Regime::unclassified &&
      (!pat.extra_strings.empty() || !pat.boundary_strings.empty() || pat.real_count >= 2 ||
       pat.imag_count >= 2))
    pat.regime = Regime::excited;
  return pat;
}

}  // namespace zeroroot

#include "zeroroot/thermo.hpp"

#include <cmath>
#include <numbers>

namespace zeroroot {

namespace kernel {

double a(int n, double u) { return (0.5 / std::numbers::pi) * n / (u * u + 0.25 * n * n); }
double b(int n, double u) { return (0.5 / std::numbers::pi) * 2.0 * u / (u * u + 0.25 * n * n); }
double a_hat(double n, double k) { return std::exp(-0.5 * std::abs(n * k)); }
double b_hat_im(double n, double k) { return k == 0.0 ? 0.0 : std::copysign(a_hat(n, k), k); }

}  // namespace kernel

namespace {

struct Even {
  double value;
  double error;
};

// 2 * int_0^inf f, with |f(k)| <= amp exp(-rate k) beyond the cutoff
Even integrate_even(const quad::Fn& f, double rate, double amp, const QuadratureSpec& spec,
                    const char* what) {
  if (!(spec.abs_tol > 0)) throw ParamError("abs_tol must be positive");
  double kmax = spec.k_max;
  double tail = 0.0;
  if (kmax <= 0) {
    kmax = std::max(1.0, std::log(10.0 * amp / (rate * spec.abs_tol)) / rate);
  }
  tail = amp * std::exp(-rate * kmax) / rate;
  const auto r = quad::gauss_kronrod(f, 0.0, kmax, 0.35 * spec.abs_tol, spec.max_intervals);
  if (!r.converged || !std::isfinite(r.value))
    throw QuadratureError(std::string("quadrature did not converge for ") + what, 2 * r.value,
                          2 * r.error, r.evaluations);
  return {2.0 * r.value, 2.0 * (r.error + tail)};
}

double tanh_half(double k) { return -std::expm1(-k) / (1.0 + std::exp(-k)); }

double prefactor(double a_bar) { return 0.5 * (1.0 + 4.0 * a_bar * a_bar); }

// constant left in the open-chain energy after the bulk per-site part is removed
double free_end_shift(double a_bar) {
  const double a2 = -a_bar * a_bar;
  return 1.0 - 2.0 * a2 + (2.0 * a2 * a2 - 6.0 * a2 + 1.0) / (a2 - 1.0);
}

}  // namespace

double density_regime1(double k, const ModelParams& params, double alpha) {
  const double n = params.n(), ak = std::abs(k);
  const double p = std::abs(params.p), qb = std::abs(params.q_bar());
  double num = 4.0 * n * std::exp(-0.5 * ak) * std::cos(params.a_bar * k) + std::exp(-0.5 * ak) - 1.0 -
               std::exp(-(p + 0.5) * ak) - std::exp(-(qb + 0.5) * ak);
  if (std::isfinite(alpha)) num -= 2.0 * std::cos(alpha * k);
  return num / (2.0 * n * (1.0 + std::exp(-ak)));
}

double density_regime2(double k, const ModelParams& params, double beta) {
  const double ak = std::abs(k), bb = std::abs(beta);
  const double n = params.n();
  double extra = std::exp(-bb * ak) + std::exp(-(std::abs(bb - 0.5) - 0.5) * ak);
  return density_regime1(k, params) - extra / (2.0 * n * (1.0 + std::exp(-ak)));
}

double ground_energy_density(const ModelParams& params, const std::function<double(double)>& rho,
                             const QuadratureSpec& spec) {
  const double ab = params.a_bar;
  auto f = [&](double k) {
    return (std::exp(-0.5 * k) - std::exp(-1.5 * k)) * std::cos(ab * k) * rho(k);
  };
  const auto in = integrate_even(f, 0.5, 4.0, spec, "ground energy");
  const double a2 = -ab * ab, pre = 4.0 * a2 - 1.0;
  const double p = std::abs(params.p), qb = std::abs(params.q_bar());
  const double e = params.n() * pre * in.value - c0_constant(params) -
                   pre * (p / (a2 - p * p) + qb / (a2 - qb * qb));
  return e / params.two_n;
}

double bulk_energy_per_site(double a_bar, const QuadratureSpec& spec) {
  auto f = [a_bar](double k) {
    const double c = std::cos(a_bar * k);
    return std::exp(-k) * tanh_half(k) * c * c;
  };
  const auto in = integrate_even(f, 1.0, 1.0, spec, "bulk energy");
  return -(1.0 + 4.0 * a_bar * a_bar) * in.value - (1.0 + 2.0 * a_bar * a_bar);
}

ThermoResult boundary_surface_term(double b, double a_bar, const QuadratureSpec& spec,
                                   SurfaceConvention conv) {
  const double bb = std::abs(b);
  if (bb == 0.0) throw DivergenceError("surface energy diverges for a vanishing boundary parameter");
  auto f = [&](double k) { return tanh_half(k) * std::cos(a_bar * k) * std::exp(-bb * k); };
  const auto in = integrate_even(f, bb, 1.0, spec, "e_b");
  const double sign = conv == SurfaceConvention::derived ? -1.0 : 1.0;
  ThermoResult r;
  r.value = sign * prefactor(a_bar) * in.value;
  r.est_error = prefactor(a_bar) * in.error;
  r.components["integral"] = in.value;
  r.spec = spec;
  return r;
}

ThermoResult free_surface_term(double a_bar, const QuadratureSpec& spec, SurfaceConvention conv) {
  auto f = [&](double k) {
    return tanh_half(k) * std::cos(a_bar * k) * (std::exp(-k) - std::exp(-0.5 * k));
  };
  const auto in = integrate_even(f, 0.5, 1.0, spec, "e_b0");
  ThermoResult r;
  const double shift = conv == SurfaceConvention::derived ? free_end_shift(a_bar) : 0.0;
  r.value = -prefactor(a_bar) * in.value + shift;
  r.est_error = prefactor(a_bar) * in.error;
  r.components["integral"] = in.value;
  r.components["shift"] = shift;
  r.spec = spec;
  return r;
}

double free_surface_term_exp_sinh(double a_bar, double abs_tol, SurfaceConvention conv) {
  auto f = [&](double k) {
    return tanh_half(k) * std::cos(a_bar * k) * (std::exp(-k) - std::exp(-0.5 * k));
  };
  const auto r = quad::exp_sinh(f, 0.5 * abs_tol);
  if (!r.converged) throw QuadratureError("exp-sinh rule did not converge", r.value, r.error, r.evaluations);
  const double shift = conv == SurfaceConvention::derived ? free_end_shift(a_bar) : 0.0;
  return -prefactor(a_bar) * 2.0 * r.value + shift;
}

ThermoResult surface_energy(const ModelParams& params, const QuadratureSpec& spec,
                            SurfaceConvention conv) {
  if (params.p == 0.0 || params.q == 0.0)
    throw DivergenceError("surface energy diverges at p = 0 or q = 0");
  const auto ep = boundary_surface_term(params.p, params.a_bar, spec, conv);
  const auto eq = boundary_surface_term(params.q_bar(), params.a_bar, spec, conv);
  const auto e0 = free_surface_term(params.a_bar, spec, conv);
  ThermoResult r;
  r.components["e_b_p"] = ep.value;
  r.components["e_b_q"] = eq.value;
  r.components["e_b0"] = e0.value;
  r.value = ep.value + eq.value + e0.value;
  r.est_error = ep.est_error + eq.est_error + e0.est_error;
  r.spec = spec;
  return r;
}

ThermoResult bulk_excitation_energy(double z_bar, const ModelParams& params, const QuadratureSpec& spec) {
  const double ab = params.a_bar;
  auto f = [&](double k) {
    return 2.0 * (std::exp(-0.5 * k) - std::exp(-1.5 * k)) / (1.0 + std::exp(-k)) * std::cos(ab * k) *
           std::cos(z_bar * k);
  };
  const auto in = integrate_even(f, 0.5, 2.0, spec, "bulk excitation");
  const double rational = 1.0 / ((z_bar + ab) * (z_bar + ab) + 0.25) + 1.0 / ((z_bar - ab) * (z_bar - ab) + 0.25);
  ThermoResult r;
  r.value = prefactor(ab) * (in.value + rational);
  r.est_error = prefactor(ab) * in.error;
  r.components["integral"] = in.value;
  r.components["rational"] = rational;
  r.spec = spec;
  return r;
}

ThermoResult string_excitation_energy(int n, double z_tilde, const ModelParams& params,
                                      const QuadratureSpec& spec) {
  if (n < 3) throw ParamError("string excitations need n >= 3");
  const double ab = params.a_bar;
  auto f = [&](double k) {
    return 2.0 * (std::exp(-0.5 * (n - 1) * k) - std::exp(-0.5 * (n + 1) * k)) * std::cos(ab * k) *
           std::cos(z_tilde * k);
  };
  const auto in = integrate_even(f, 0.5 * (n - 1), 2.0, spec, "string excitation");
  using kernel::a;
  const double bare = 2.0 * std::numbers::pi *
                      (a(n + 1, z_tilde - ab) + a(n + 1, z_tilde + ab) - a(n - 1, z_tilde - ab) -
                       a(n - 1, z_tilde + ab));
  ThermoResult r;
  r.value = prefactor(ab) * (in.value + bare);
  r.est_error = prefactor(ab) * in.error;
  r.components["integral"] = in.value;
  r.components["bare"] = bare;
  r.spec = spec;
  if (std::abs(r.value) > 1e-6)
    throw ConsistencyError("string excitation energy failed to cancel: " + std::to_string(r.value));
  return r;
}

ThermoResult boundary_excitation_energy(double b, const ModelParams& params, const QuadratureSpec& spec) {
  const double bb = std::abs(b), ab = params.a_bar;
  if (bb >= 0.5) throw DomainError("boundary excitations need |b| < 1/2");
  if (bb == 0.0 && ab == 0.0) throw DivergenceError("boundary excitation diverges at b = 0 for a = 0");
  auto f = [&](double k) {
    return -std::expm1(-k) * std::cos(ab * k) * (std::exp((bb - 1.0) * k) + std::exp(-(bb + 1.0) * k)) /
           (1.0 + std::exp(-k));
  };
  const auto in = integrate_even(f, 1.0 - bb, 2.0, spec, "boundary excitation");
  const cplx w(bb, ab);
  const double rational = 4.0 * bb / (bb * bb + ab * ab) - 4.0 * (w / (w * w - 1.0)).real();
  ThermoResult r;
  r.value = prefactor(ab) * (in.value + rational);
  r.est_error = prefactor(ab) * in.error;
  r.components["integral"] = in.value;
  r.components["rational"] = rational;
  r.spec = spec;
  return r;
}

}  // namespace zeroroot

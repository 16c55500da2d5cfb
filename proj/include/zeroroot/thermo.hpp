#pragma once

#include <functional>
#include <map>
#include <string>

#include "zeroroot/bae.hpp"
#include "zeroroot/quadrature.hpp"

namespace zeroroot {

struct DivergenceError : Error { using Error::Error; };

struct QuadratureError : Error {
  double estimate;
  double error;
  int evaluations;
  QuadratureError(const std::string& what, double est, double err, int evals)
      : Error(what), estimate(est), error(err), evaluations(evals) {}
};

// Fourier pair g~(k) = int g(u) e^{iku} du
namespace kernel {
double a(int n, double u);
double b(int n, double u);
double a_hat(double n, double k);  // exp(-|n k|/2)
double b_hat_im(double n, double k);  // imaginary part of b~_n(k)
}  // namespace kernel

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double k_max = 0.0;  // 0 means chosen from the decay rate
  int max_intervals = 2000;
};

enum class SurfaceConvention { derived, printed };

struct ThermoResult {
  double value = 0.0;
  std::map<std::string, double> components;
  double est_error = 0.0;
  QuadratureSpec spec;
};

double density_regime1(double k, const ModelParams& params, double alpha = INFINITY);
double density_regime2(double k, const ModelParams& params, double beta);

// Energy per site from the integral form, finite-N terms included.
double ground_energy_density(const ModelParams& params, const std::function<double(double)>& rho,
                             const QuadratureSpec& spec = {});

double bulk_energy_per_site(double a_bar, const QuadratureSpec& spec = {});

ThermoResult surface_energy(const ModelParams& params, const QuadratureSpec& spec = {},
                            SurfaceConvention conv = SurfaceConvention::derived);

// Boundary-field contribution for a single boundary parameter b (p or q_bar).
ThermoResult boundary_surface_term(double b, double a_bar, const QuadratureSpec& spec = {},
                                   SurfaceConvention conv = SurfaceConvention::derived);
ThermoResult free_surface_term(double a_bar, const QuadratureSpec& spec = {},
                               SurfaceConvention conv = SurfaceConvention::derived);
// Same integral as free_surface_term, by the double-exponential rule.
double free_surface_term_exp_sinh(double a_bar, double abs_tol = 1e-12,
                                  SurfaceConvention conv = SurfaceConvention::derived);

ThermoResult bulk_excitation_energy(double z_bar, const ModelParams& params,
                                    const QuadratureSpec& spec = {});
ThermoResult string_excitation_energy(int n, double z_tilde, const ModelParams& params,
                                      const QuadratureSpec& spec = {});
ThermoResult boundary_excitation_energy(double b, const ModelParams& params,
                                        const QuadratureSpec& spec = {});

}  // namespace zeroroot

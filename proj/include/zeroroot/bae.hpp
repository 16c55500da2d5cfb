#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zeroroot/spectrum.hpp"

namespace zeroroot {

struct SolverError : Error {
  std::vector<double> best_iterate;
  std::vector<double> history;
  SolverError(const std::string& what, std::vector<double> best, std::vector<double> hist)
      : Error(what), best_iterate(std::move(best)), history(std::move(hist)) {}
};
struct DomainError : Error { using Error::Error; };

enum class Regime { I, II, III, IV, V, VI, excited, unclassified };

std::string to_string(Regime r);
Regime parse_regime(const std::string& s);

Regime regime_of(double p, double q_bar);

// Reduced real coordinates of a symmetric root configuration (in zbar = -i z):
// quartets ±x ± i y contribute (x, y); boundary pairs ±i b contribute b;
// the real pair ±alpha contributes alpha; the imaginary pair ±i beta contributes beta.
struct Inventory {
  int quartets = 0;
  std::vector<double> boundary;  // |p| and/or |q_bar| the pairs are attached to
  bool real_pair = false;
  bool imag_pair = false;

  int unknowns() const;
};

Inventory inventory_for(Regime r, const ModelParams& params);

struct BaeState {
  Inventory inv;
  std::vector<double> x;

  std::vector<cplx> zbar() const;  // 2N+1 representatives
};

enum class SeedStyle { uniform, quantile };

BaeState seed_roots(Regime r, const ModelParams& params, SeedStyle style = SeedStyle::uniform,
                    int variant = 0);
std::vector<BaeState> seed_family(Regime r, const ModelParams& params);

// Newton system: scaled divided differences of log|Lambda(iy)|^2 - log|A(iy)|^2
// over the nodes y_j = theta_bar_j + a_bar, then the log |Lambda(0)| condition.
Eigen::VectorXd log_system(const BaeState& s, const ModelParams& params);

// Raw certification of the BAEs plus the Lambda(0) constraint.
std::vector<cplx> bae_residual(const ZeroRootSet& roots, const ModelParams& params);
double max_abs(const std::vector<cplx>& r);

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 200;
  int homotopy_steps = 0;             // 0 disables the ramp
  std::vector<double> homotopy_start;  // empty means spread_profile
};

struct BaeSolution {
  BaeState state;
  ZeroRootSet roots;
  double residual = 0.0;      // raw certification
  double log_residual = 0.0;  // Newton system
  int iterations = 0;
  std::vector<double> history;
};

BaeSolution solve_bae(const BaeState& seed, const ModelParams& params, const SolveOptions& opts = {});

struct GroundState {
  BaeSolution solution;
  double energy = 0.0;
  Regime seed_regime = Regime::unclassified;
  int converged_starts = 0;
  int total_starts = 0;
};

// Multi-start over seed_family at theta = 0, lowest energy wins; a nonzero
// theta profile in params is then reached by homotopy from the winner.
GroundState solve_ground_state(const ModelParams& params, std::optional<Regime> regime = {},
                               const SolveOptions& opts = {});

double energy_from_roots(const ZeroRootSet& roots, const ModelParams& params);

struct ClassifyOptions {
  double boundary_tol = 0.08;
  double string_tol = 0.25;
};

struct RootPattern {
  std::vector<double> pair_centers;  // signed centers of n = 2 strings
  std::vector<char> boundary_pairs;  // 'p' or 'q'
  std::vector<double> boundary_values;
  std::optional<double> real_pair;
  std::optional<double> imaginary_pair;
  std::vector<std::pair<int, double>> extra_strings;  // (n, center)
  std::vector<char> boundary_strings;                 // 'p' or 'q' at i(1/2 - |b|)
  int real_count = 0;
  int imag_count = 0;
  int unmatched = 0;
  Regime regime = Regime::unclassified;
};

RootPattern classify_pattern(const ZeroRootSet& roots, const ModelParams& params,
                             const ClassifyOptions& opts = {});

}  // namespace zeroroot

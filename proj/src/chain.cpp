#include "zeroroot/chain.hpp"

#include <cmath>

#include "zeroroot/kernels.hpp"

namespace zeroroot {

double ModelParams::q_bar() const { return q / std::sqrt(1.0 + xi * xi); }

double ModelParams::theta_bar_at(int j) const {
  if (theta_bar.empty()) return 0.0;
  return theta_bar.at(static_cast<std::size_t>(j - 1));
}

bool ModelParams::homogeneous() const {
  for (double t : theta_bar)
    if (t != 0.0) return false;
  return true;
}

void ModelParams::validate() const {
  if (two_n < 4 || two_n % 2 != 0) throw ParamError("two_n must be even and >= 4");
  if (!theta_bar.empty() && int(theta_bar.size()) != two_n)
    throw ParamError("theta_bar must have two_n entries");
  for (double v : {a_bar, p, q, xi})
    if (!std::isfinite(v)) throw ParamError("non-finite parameter");
  const cplx a2 = a() * a();
  if (std::abs(p * p - a2) == 0.0) throw ParamError("p^2 - a^2 vanishes");
  if (std::abs(a2 * xi * xi + a2 - q * q) == 0.0) throw ParamError("a^2 xi^2 + a^2 - q^2 vanishes");
}

std::vector<double> spread_profile(int two_n, double step) {
  std::vector<double> t(static_cast<std::size_t>(two_n));
  const int n = two_n / 2;
  for (int j = 1; j <= two_n; ++j) t[std::size_t(j - 1)] = step * (j - n - 0.5);
  return t;
}

double Couplings::bond_j1(int j, int two_n) const {
  double v = j1_bulk;
  if (j == 1) v += c1;
  if (j == two_n - 1) v += c2n_minus_1;
  return v;
}

Couplings couplings(const ModelParams& params) {
  params.validate();
  const double a2 = -params.a_bar * params.a_bar;
  const double p = params.p, q = params.q, xi = params.xi;
  Couplings c;
  c.j2 = -2.0 * a2;
  c.j3 = cplx(0, 1) * params.a();
  c.c1 = a2 * (1.0 - 2.0 * a2 - 2.0 * p * p) / (p * p - a2);
  c.c2n_minus_1 = 2.0 * a2 + a2 * (4.0 * q * q - xi * xi - 1.0) / (a2 * xi * xi + a2 - q * q);
  return c;
}

double c0_constant(const ModelParams& params) {
  const double a2 = -params.a_bar * params.a_bar;
  return -(params.two_n - 1) * (2.0 * a2 - 1.0) - (2.0 * a2 * a2 - 6.0 * a2 + 1.0) / (a2 - 1.0);
}

double c2_constant(const ModelParams& params) {
  const double a2 = -params.a_bar * params.a_bar;
  const double p = params.p, q = params.q, xi = params.xi;
  return 8.0 * std::pow(1.0 - 4.0 * a2, params.two_n - 2) * (p * p - a2) * (a2 - 1.0) *
         (a2 * xi * xi + a2 - q * q);
}

namespace {

void add_dot(std::vector<PauliTerm>& h, cplx c, int i, int j) {
  for (char ax : {'x', 'y', 'z'}) h.push_back({c, {{i, ax}, {j, ax}}});
}

// c * (sigma_i x sigma_j)_axis
void add_cross(std::vector<PauliTerm>& h, cplx c, int i, int j, char axis) {
  const char* cyc = "xyz";
  const int k = axis == 'x' ? 0 : axis == 'y' ? 1 : 2;
  const char s = cyc[(k + 1) % 3], t = cyc[(k + 2) % 3];
  h.push_back({c, {{i, s}, {j, t}}});
  h.push_back({-c, {{i, t}, {j, s}}});
}

}  // namespace

std::vector<PauliTerm> hamiltonian_terms(const ModelParams& params) {
  const Couplings cp = couplings(params);
  const int L = params.two_n;
  const cplx a = params.a(), a2 = a * a;
  const double p = params.p, q = params.q, xi = params.xi;
  std::vector<PauliTerm> h;
  for (int j = 1; j <= L - 1; ++j) {
    add_dot(h, cp.bond_j1(j, L), j, j + 1);
    if (j + 2 > L) continue;
    add_dot(h, cp.j2, j, j + 2);
    // (-1)^j sigma_{j+1} . (sigma_j x sigma_{j+2})
    const cplx c3 = cp.j3 * ((j % 2 == 0) ? 1.0 : -1.0);
    for (char ax : {'x', 'y', 'z'}) {
      const char* cyc = "xyz";
      const int k = ax == 'x' ? 0 : ax == 'y' ? 1 : 2;
      const char s = cyc[(k + 1) % 3], t = cyc[(k + 2) % 3];
      h.push_back({c3, {{j + 1, ax}, {j, s}, {j + 2, t}}});
      h.push_back({-c3, {{j + 1, ax}, {j, t}, {j + 2, s}}});
    }
  }
  const cplx gl = (1.0 - 4.0 * a2) / (p * p - a2);
  h.push_back({gl * p, {{1, 'z'}}});
  h.push_back({-gl * a2, {{1, 'z'}, {2, 'z'}}});
  add_cross(h, -gl * cplx(0, 1) * a * p, 1, 2, 'z');

  const cplx gr = (4.0 * a2 - 1.0) / (a2 * xi * xi + a2 - q * q);
  h.push_back({gr * q * xi, {{L, 'x'}}});
  h.push_back({gr * q, {{L, 'z'}}});
  h.push_back({-gr * a2 * xi * xi, {{L - 1, 'x'}, {L, 'x'}}});
  h.push_back({-gr * a2 * xi, {{L - 1, 'x'}, {L, 'z'}}});
  h.push_back({-gr * a2 * xi, {{L - 1, 'z'}, {L, 'x'}}});
  h.push_back({-gr * a2, {{L - 1, 'z'}, {L, 'z'}}});
  const cplx dm = -gr * cplx(0, 1) * a * q;
  add_cross(h, dm * xi, L, L - 1, 'x');
  add_cross(h, dm, L, L - 1, 'z');
  return h;
}

namespace {

void check_dim(int sites, long dim_cap) {
  if (sites > 30 || (1L << sites) > dim_cap)
    throw SizeError("dimension 2^" + std::to_string(sites) + " exceeds cap " +
                    std::to_string(dim_cap));
}

}  // namespace

ComplexMatrix hamiltonian_direct(const ModelParams& params, long dim_cap) {
  params.validate();
  check_dim(params.two_n, dim_cap);
  return kernels::build_hamiltonian_parallel(params);
}

ComplexMatrix hamiltonian_direct_serial(const ModelParams& params, long dim_cap) {
  params.validate();
  check_dim(params.two_n, dim_cap);
  return kernels::build_hamiltonian_serial(params);
}

ComplexMatrix monodromy(cplx u, const ModelParams& params, bool reflected, long dim_cap) {
  params.validate();
  check_dim(params.two_n + 1, dim_cap);
  const long full = 2L << params.two_n;
  const auto sh = kernels::shifts(params);
  ComplexMatrix m(full, full);
  std::vector<cplx> e(std::size_t(full), 0.0), col(static_cast<std::size_t>(full));
  for (long s = 0; s < full; ++s) {
    e[std::size_t(s)] = 1.0;
    kernels::apply_monodromy(u, params, sh, reflected, e.data(), col.data());
    e[std::size_t(s)] = 0.0;
    for (long r = 0; r < full; ++r) m(r, s) = col[std::size_t(r)];
  }
  return m;
}

ComplexMatrix transfer_matrix(cplx u, const ModelParams& params, long dim_cap) {
  params.validate();
  check_dim(params.two_n, dim_cap);
  return kernels::build_transfer_parallel(u, params, false);
}

ComplexMatrix transfer_matrix_serial(cplx u, const ModelParams& params, long dim_cap) {
  params.validate();
  check_dim(params.two_n, dim_cap);
  return kernels::build_transfer_serial(u, params, false);
}

ComplexMatrix transfer_matrix_derivative(cplx u, const ModelParams& params, long dim_cap) {
  params.validate();
  check_dim(params.two_n, dim_cap);
  return kernels::build_transfer_parallel(u, params, true);
}

ComplexMatrix hamiltonian_from_transfer(const ModelParams& params,
                                        TransferHamiltonianOptions opts) {
  params.validate();
  if (!params.homogeneous())
    throw PreconditionError("hamiltonian_from_transfer requires theta_bar = 0");
  double c2 = c2_constant(params);
  if (c2 == 0.0) throw ParamError("c2 vanishes");
  if (opts.flip_c2_sign) c2 = -c2;
  const cplx a = params.a();
  const ComplexMatrix tp = transfer_matrix(a, params);
  const ComplexMatrix tm = transfer_matrix(-a, params);
  const ComplexMatrix dp = transfer_matrix_derivative(a, params);
  const ComplexMatrix dm = transfer_matrix_derivative(-a, params);
  ComplexMatrix h = (tm * dp + tp * dm) / c2;
  h -= c0_constant(params) * identity(h.rows());
  return h;
}

double crossing_residual(cplx u, const ModelParams& params) {
  return max_norm(transfer_matrix(u, params) - transfer_matrix(-u - 1.0, params));
}

cplx a_bare(cplx u, const ModelParams& params) {
  const cplx den = 2.0 * u + 1.0;
  if (den == 0.0) throw EvaluationError("a(u) has a pole at u = -1/2");
  cplx v = (2.0 * u + 2.0) / den * (u + params.p) *
           (std::sqrt(1.0 + params.xi * params.xi) * u + params.q);
  const cplx a = params.a();
  for (int j = 1; j <= params.two_n; ++j) {
    const cplx t = params.theta(j);
    v *= (u + t + a + 1.0) * (u - t - a + 1.0);
  }
  return v;
}

cplx d_bare(cplx u, const ModelParams& params) { return a_bare(-u - 1.0, params); }

double transfer_identity_residual(int j, const ModelParams& params) {
  if (j < 1 || j > params.two_n) throw ParamError("site index out of range");
  const cplx u = params.theta(j) + params.a();
  const cplx rhs = a_bare(u, params) * d_bare(u - 1.0, params);
  const ComplexMatrix lhs = transfer_matrix(u, params) * transfer_matrix(u - 1.0, params);
  const double scale = std::abs(rhs) > 0 ? std::abs(rhs) : 1.0;
  return max_norm(lhs - rhs * identity(lhs.rows())) / scale;
}

}  // namespace zeroroot

#pragma once

#include <vector>

#include "zeroroot/algebra.hpp"

namespace zeroroot {

// One chain instance. The model parameter a = i*a_bar and the
// inhomogeneities theta_j = i*theta_bar_j are stored through their real parts.
struct ModelParams {
  int two_n = 4;
  double a_bar = 0.0;
  double p = 1.0;
  double q = 1.0;
  double xi = 0.0;
  std::vector<double> theta_bar;  // empty means all zeros

  int n() const { return two_n / 2; }
  cplx a() const { return {0.0, a_bar}; }
  double q_bar() const;
  double theta_bar_at(int j) const;  // 1-based
  cplx theta(int j) const { return {0.0, theta_bar_at(j)}; }
  bool homogeneous() const;
  void validate() const;
};

std::vector<double> spread_profile(int two_n, double step = 0.1);

struct Couplings {
  double j1_bulk = 1.0;
  double j2 = 0.0;
  cplx j3;
  double c1 = 0.0;
  double c2n_minus_1 = 0.0;

  double bond_j1(int j, int two_n) const;  // bond (j, j+1), 1-based
};

Couplings couplings(const ModelParams& params);

double c0_constant(const ModelParams& params);
double c2_constant(const ModelParams& params);

// Pauli-string representation used by the direct Hamiltonian builder.
struct PauliTerm {
  cplx coef;
  std::vector<std::pair<int, char>> ops;  // (site 1-based, axis)
};

std::vector<PauliTerm> hamiltonian_terms(const ModelParams& params);

ComplexMatrix hamiltonian_direct(const ModelParams& params, long dim_cap = 1L << 12);
ComplexMatrix hamiltonian_direct_serial(const ModelParams& params, long dim_cap = 1L << 12);

ComplexMatrix monodromy(cplx u, const ModelParams& params, bool reflected,
                        long dim_cap = kDefaultDimCap);

ComplexMatrix transfer_matrix(cplx u, const ModelParams& params, long dim_cap = 1L << 12);
ComplexMatrix transfer_matrix_serial(cplx u, const ModelParams& params,
                                     long dim_cap = 1L << 12);
ComplexMatrix transfer_matrix_derivative(cplx u, const ModelParams& params,
                                         long dim_cap = 1L << 12);

struct TransferHamiltonianOptions {
  bool flip_c2_sign = false;  // negative-control hook
};

ComplexMatrix hamiltonian_from_transfer(const ModelParams& params,
                                        TransferHamiltonianOptions opts = {});

double crossing_residual(cplx u, const ModelParams& params);

cplx a_bare(cplx u, const ModelParams& params);
cplx d_bare(cplx u, const ModelParams& params);

double transfer_identity_residual(int j, const ModelParams& params);

}  // namespace zeroroot

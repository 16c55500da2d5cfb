#pragma once

#include <vector>

#include "zeroroot/chain.hpp"

namespace zeroroot {

struct ConsistencyError : Error { using Error::Error; };
struct DegeneracyError : Error { using Error::Error; };
struct FitError : Error { using Error::Error; };
struct ExtractionError : Error { using Error::Error; };

struct EigenPair {
  double energy = 0.0;
  ComplexVector state;
};

struct DiagonalizeOptions {
  long dim_cap = 1L << 12;
  double degeneracy_tol = 1e-9;
  cplx reference_point{0.37, 0.0};
};

std::vector<EigenPair> diagonalize(const ModelParams& params, DiagonalizeOptions opts = {});

struct LambdaSample {
  cplx u;
  cplx value;
  double variance_ratio = 0.0;  // |t psi - Lambda psi|^2 / |Lambda|^2
};

std::vector<LambdaSample> lambda_samples(const ComplexVector& state, const ModelParams& params,
                                         const std::vector<cplx>& points,
                                         double variance_tol = 1e-8);

// Lambda(u) stored in the centered variable s = u + 1/2:
// Lambda = sum_k coeffs[k] s^k, degree 4N+2.
struct SpectralPolynomial {
  std::vector<cplx> coeffs;
  double condition = 1.0;
  double holdout_residual = 0.0;

  int degree() const { return int(coeffs.size()) - 1; }
  cplx leading() const { return coeffs.back(); }
  cplx eval(cplx u) const;
  double crossing_asymmetry() const;  // odd s-coefficients relative to the largest
};

enum class NodeSet { circle, chebyshev };

struct FitOptions {
  NodeSet nodes = NodeSet::circle;
  double circle_radius = 2.0;
  double cheb_lo = -3.0, cheb_hi = 2.0;
  double max_condition = 1e10;
};

std::vector<cplx> fit_nodes(int two_n, const FitOptions& opts = {});
std::vector<cplx> holdout_nodes(int two_n);

SpectralPolynomial fit_lambda_polynomial(const std::vector<LambdaSample>& samples,
                                         const FitOptions& opts = {});

SpectralPolynomial spectral_polynomial(const ComplexVector& state, const ModelParams& params,
                                       const FitOptions& opts = {});

struct ZeroRootSet {
  int two_n = 0;
  ModelParams params;
  std::vector<cplx> z;  // representatives: Im z >= 0, ties Re z >= 0
  double residual = 0.0;

  std::vector<cplx> z_bar() const;  // -i z
  cplx lambda(cplx u) const;
};

cplx canonical_representative(cplx z);

ZeroRootSet extract_zero_roots(const SpectralPolynomial& poly, const ModelParams& params,
                               double pair_tol = 1e-6);

ZeroRootSet roots_from_zbar(const std::vector<cplx>& zbar, const ModelParams& params);

double inversion_identity_check(const ZeroRootSet& roots, const ModelParams& params, int j);

}  // namespace zeroroot

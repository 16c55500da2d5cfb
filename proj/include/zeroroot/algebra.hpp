#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace zeroroot {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct EvaluationError : Error { using Error::Error; };

// Tensor products use the convention that the leftmost factor is the slowest
// index. Operators acting on (auxiliary x quantum) spaces always put the
// auxiliary space first.
inline constexpr long kDefaultDimCap = 1L << 13;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   long dim_cap = kDefaultDimCap);

ComplexMatrix identity(long dim);
ComplexMatrix pauli(char axis);
ComplexMatrix permutation_operator();

ComplexMatrix r_matrix(cplx u);
ComplexMatrix k_minus(cplx u, double p);
ComplexMatrix k_plus(cplx u, double q, double xi);

double max_norm(const ComplexMatrix& m);

double yang_baxter_residual(cplx u1, cplx u2, cplx u3);
double reflection_residual(cplx lambda, cplx u, double p);
double dual_reflection_residual(cplx lambda, cplx u, double q, double xi);

}  // namespace zeroroot

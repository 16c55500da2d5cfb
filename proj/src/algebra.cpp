#include "zeroroot/algebra.hpp"

namespace zeroroot {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, long dim_cap) {
  if (!a.allFinite() || !b.allFinite()) throw EvaluationError("kron: non-finite input");
  const long r = a.rows() * b.rows();
  const long c = a.cols() * b.cols();
  if (r > dim_cap || c > dim_cap)
    throw SizeError("kron: dimension " + std::to_string(std::max(r, c)) + " exceeds cap " +
                    std::to_string(dim_cap));
  ComplexMatrix out(r, c);
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix identity(long dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli(char axis) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  switch (axis) {
    case 'x': s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 'y': s(0, 1) = cplx(0, -1); s(1, 0) = cplx(0, 1); break;
    case 'z': s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    default: throw ParamError(std::string("pauli: unknown axis ") + axis);
  }
  return s;
}

ComplexMatrix permutation_operator() {
  ComplexMatrix p = identity(4);
  for (char ax : {'x', 'y', 'z'}) p += kron(pauli(ax), pauli(ax));
  return 0.5 * p;
}

ComplexMatrix r_matrix(cplx u) { return u * identity(4) + permutation_operator(); }

ComplexMatrix k_minus(cplx u, double p) {
  ComplexMatrix k = ComplexMatrix::Zero(2, 2);
  k(0, 0) = p + u;
  k(1, 1) = p - u;
  return k;
}

ComplexMatrix k_plus(cplx u, double q, double xi) {
  ComplexMatrix k(2, 2);
  k(0, 0) = q + u + 1.0;
  k(0, 1) = xi * (u + 1.0);
  k(1, 0) = xi * (u + 1.0);
  k(1, 1) = q - u - 1.0;
  return k;
}

double max_norm(const ComplexMatrix& m) {
  double r = 0;
  for (long i = 0; i < m.size(); ++i) r = std::max(r, std::abs(m.data()[i]));
  return r;
}

namespace {

ComplexMatrix r12(cplx u) { return kron(r_matrix(u), identity(2)); }
ComplexMatrix r23(cplx u) { return kron(identity(2), r_matrix(u)); }
ComplexMatrix r13(cplx u) {
  ComplexMatrix p23 = kron(identity(2), permutation_operator());
  return p23 * r12(u) * p23;
}

ComplexMatrix r21(cplx u) {
  ComplexMatrix p = permutation_operator();
  return p * r_matrix(u) * p;
}

}  // namespace

double yang_baxter_residual(cplx u1, cplx u2, cplx u3) {
  ComplexMatrix lhs = r12(u1 - u2) * r13(u1 - u3) * r23(u2 - u3);
  ComplexMatrix rhs = r23(u2 - u3) * r13(u1 - u3) * r12(u1 - u2);
  return max_norm(lhs - rhs);
}

double reflection_residual(cplx lambda, cplx u, double p) {
  ComplexMatrix k1 = kron(k_minus(lambda, p), identity(2));
  ComplexMatrix k2 = kron(identity(2), k_minus(u, p));
  ComplexMatrix lhs = r_matrix(lambda - u) * k1 * r21(lambda + u) * k2;
  ComplexMatrix rhs = k2 * r_matrix(lambda + u) * k1 * r21(lambda - u);
  return max_norm(lhs - rhs);
}

double dual_reflection_residual(cplx lambda, cplx u, double q, double xi) {
  ComplexMatrix k1 = kron(k_plus(lambda, q, xi), identity(2));
  ComplexMatrix k2 = kron(identity(2), k_plus(u, q, xi));
  ComplexMatrix lhs = r_matrix(-lambda + u) * k1 * r21(-lambda - u - 2.0) * k2;
  ComplexMatrix rhs = k2 * r_matrix(-lambda - u - 2.0) * k1 * r21(-lambda + u);
  return max_norm(lhs - rhs);
}

}  // namespace zeroroot

#include "zeroroot/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "zeroroot/kernels.hpp"

namespace zeroroot {

namespace {

ModelParams without_theta(ModelParams p) {
  p.theta_bar.clear();
  return p;
}

void gram_schmidt(ComplexMatrix& v) {
  for (long k = 0; k < v.cols(); ++k) {
    for (long i = 0; i < k; ++i) v.col(k) -= v.col(i).dot(v.col(k)) * v.col(i);
    v.col(k).normalize();
  }
}

}  // namespace

std::vector<EigenPair> diagonalize(const ModelParams& params, DiagonalizeOptions opts) {
  const ModelParams hp = without_theta(params);
  const ComplexMatrix h = hamiltonian_direct(hp, opts.dim_cap);
  const double scale = std::max(1.0, max_norm(h));
  if (max_norm(h - h.adjoint()) > 1e-10 * scale)
    throw ConsistencyError("Hamiltonian is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw ConsistencyError("eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  ComplexMatrix vecs = es.eigenvectors();

  const auto sh = kernels::shifts(hp);
  const long dim = h.rows();
  long start = 0;
  while (start < dim) {
    long stop = start + 1;
    while (stop < dim && ev(stop) - ev(stop - 1) <= opts.degeneracy_tol * std::max(1.0, std::abs(ev(stop))))
      ++stop;
    const long g = stop - start;
    if (g > 1) {
      ComplexMatrix v = vecs.middleCols(start, g);
      ComplexMatrix w(dim, g);
      for (long c = 0; c < g; ++c) {
        ComplexVector col = v.col(c);
        ComplexVector out(dim);
        kernels::apply_transfer(opts.reference_point, hp, sh, col.data(), out.data());
        w.col(c) = out;
      }
      ComplexMatrix m = v.adjoint() * w;
      Eigen::ComplexEigenSolver<ComplexMatrix> ces(m);
      std::vector<long> order(static_cast<std::size_t>(g));
      for (long i = 0; i < g; ++i) order[std::size_t(i)] = i;
      const auto& lam = ces.eigenvalues();
      std::sort(order.begin(), order.end(), [&](long x, long y) {
        if (lam(x).real() != lam(y).real()) return lam(x).real() < lam(y).real();
        return lam(x).imag() < lam(y).imag();
      });
      ComplexMatrix rotated(dim, g);
      for (long i = 0; i < g; ++i) rotated.col(i) = v * ces.eigenvectors().col(order[std::size_t(i)]);
      gram_schmidt(rotated);
      vecs.middleCols(start, g) = rotated;
    }
    start = stop;
  }

  std::vector<EigenPair> out(static_cast<std::size_t>(dim));
  for (long i = 0; i < dim; ++i) {
    out[std::size_t(i)].energy = ev(i);
    out[std::size_t(i)].state = vecs.col(i);
  }
  return out;
}

std::vector<LambdaSample> lambda_samples(const ComplexVector& state, const ModelParams& params,
                                         const std::vector<cplx>& points, double variance_tol) {
  const auto sh = kernels::shifts(params);
  const double nn = state.squaredNorm();
  std::vector<LambdaSample> out;
  out.reserve(points.size());
  ComplexVector w(state.size());
  for (cplx u : points) {
    kernels::apply_transfer(u, params, sh, state.data(), w.data());
    const cplx lam = state.dot(w) / nn;
    const double var = (w - lam * state).squaredNorm() / nn;
    const double ratio = var / std::max(std::norm(lam), 1e-300);
    if (ratio > variance_tol)
      throw DegeneracyError("state is not an eigenvector of t(u); resolve the degenerate subspace");
    out.push_back({u, lam, ratio});
  }
  return out;
}

cplx SpectralPolynomial::eval(cplx u) const {
  const cplx s = u + 0.5;
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double SpectralPolynomial::crossing_asymmetry() const {
  double big = 0, odd = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    big = std::max(big, std::abs(coeffs[k]));
    if (k % 2 == 1) odd = std::max(odd, std::abs(coeffs[k]));
  }
  return big > 0 ? odd / big : 0.0;
}

std::vector<cplx> fit_nodes(int two_n, const FitOptions& opts) {
  const int m = 2 * two_n + 3;
  std::vector<cplx> u;
  if (opts.nodes == NodeSet::circle) {
    for (int k = 0; k < m; ++k)
      u.push_back(std::polar(opts.circle_radius, 2.0 * std::numbers::pi * k / m) - 0.5);
  } else {
    const int c = m - 2;
    for (int k = 0; k < c; ++k) {
      const double x = std::cos(std::numbers::pi * (k + 0.5) / c);
      u.push_back(0.5 * (opts.cheb_lo + opts.cheb_hi) + 0.5 * (opts.cheb_hi - opts.cheb_lo) * x);
    }
    u.push_back(0.0);
    u.push_back(-1.0);
  }
  return u;
}

std::vector<cplx> holdout_nodes(int) {
  std::vector<cplx> u;
  for (int k = 0; k < 8; ++k) u.push_back(std::polar(1.3, 0.37 + 2.0 * std::numbers::pi * k / 8) - 0.5);
  return u;
}

SpectralPolynomial fit_lambda_polynomial(const std::vector<LambdaSample>& samples,
                                         const FitOptions& opts) {
  const long m = long(samples.size());
  if (m < 3) throw FitError("too few samples");
  double rho = 0;
  for (const auto& s : samples) rho = std::max(rho, std::abs(s.u + 0.5));
  ComplexMatrix a(m, m);
  ComplexVector b(m);
  for (long i = 0; i < m; ++i) {
    const cplx x = (samples[std::size_t(i)].u + 0.5) / rho;
    cplx pw = 1.0;
    for (long k = 0; k < m; ++k) {
      a(i, k) = pw;
      pw *= x;
    }
    b(i) = samples[std::size_t(i)].value;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cond = sv(m - 1) > 0 ? sv(0) / sv(m - 1) : INFINITY;
  if (!(cond <= opts.max_condition))
    throw FitError("Vandermonde system ill-conditioned; widen the node interval");
  ComplexVector c = svd.solve(b);
  SpectralPolynomial poly;
  poly.condition = cond;
  poly.coeffs.resize(static_cast<std::size_t>(m));
  double scale = 1.0;
  for (long k = 0; k < m; ++k) {
    poly.coeffs[std::size_t(k)] = c(k) / scale;
    scale *= rho;
  }
  return poly;
}

SpectralPolynomial spectral_polynomial(const ComplexVector& state, const ModelParams& params,
                                       const FitOptions& opts) {
  auto samples = lambda_samples(state, params, fit_nodes(params.two_n, opts));
  SpectralPolynomial poly = fit_lambda_polynomial(samples, opts);
  double worst = 0;
  for (const auto& s : lambda_samples(state, params, holdout_nodes(params.two_n)))
    worst = std::max(worst, std::abs(poly.eval(s.u) - s.value) / std::abs(s.value));
  poly.holdout_residual = worst;
  return poly;
}

std::vector<cplx> ZeroRootSet::z_bar() const {
  std::vector<cplx> out;
  for (cplx v : z) out.push_back(cplx(0, -1) * v);
  return out;
}

cplx ZeroRootSet::lambda(cplx u) const {
  cplx acc = 2.0;
  for (cplx v : z) acc *= (u - v + 0.5) * (u + v + 0.5);
  return acc;
}

cplx canonical_representative(cplx z) {
  const double tie = 1e-9 * (1.0 + std::abs(z));
  if (z.imag() > tie) return z;
  if (z.imag() < -tie) return -z;
  return z.real() >= 0 ? z : -z;
}

namespace {

void balance(ComplexMatrix& m) {
  const long n = m.rows();
  const double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (long i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0 || r == 0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) { f *= radix; c *= radix * radix; }
      g = r * radix;
      while (c > g) { f /= radix; c /= radix * radix; }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

cplx horner(const std::vector<cplx>& c, cplx s, cplx* deriv) {
  cplx p = 0, d = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * s + p;
    p = p * s + *it;
  }
  if (deriv) *deriv = d;
  return p;
}

}  // namespace

ZeroRootSet extract_zero_roots(const SpectralPolynomial& poly, const ModelParams& params,
                               double pair_tol) {
  const int n = poly.degree();
  if (n < 2 || n % 2 != 0) throw ExtractionError("polynomial degree must be even");
  const cplx lead = poly.leading();
  ComplexMatrix comp = ComplexMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -poly.coeffs[std::size_t(i)] / lead;
  balance(comp);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(comp, false);
  if (es.info() != Eigen::Success) throw ExtractionError("companion eigensolver failed");

  std::vector<cplx> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    cplx s = es.eigenvalues()(i);
    cplx d;
    cplx f = horner(poly.coeffs, s, &d);
    for (int it = 0; it < 3 && d != 0.0; ++it) {
      const cplx sn = s - f / d;
      cplx dn;
      const cplx fn = horner(poly.coeffs, sn, &dn);
      if (!(std::abs(fn) < std::abs(f))) break;
      s = sn; f = fn; d = dn;
    }
    roots[std::size_t(i)] = s;
  }

  std::vector<bool> used(std::size_t(n), false);
  ZeroRootSet out;
  out.two_n = params.two_n;
  out.params = params;
  for (int i = 0; i < n; ++i) {
    if (used[std::size_t(i)]) continue;
    used[std::size_t(i)] = true;
    int best = -1;
    double mis = INFINITY;
    for (int j = 0; j < n; ++j) {
      if (used[std::size_t(j)]) continue;
      const double d = std::abs(roots[std::size_t(i)] + roots[std::size_t(j)]);
      if (d < mis) { mis = d; best = j; }
    }
    if (best < 0) throw ExtractionError("odd number of roots");
    used[std::size_t(best)] = true;
    out.residual = std::max(out.residual, mis);
    out.z.push_back(canonical_representative(0.5 * (roots[std::size_t(i)] - roots[std::size_t(best)])));
  }
  if (out.residual > pair_tol) throw ExtractionError("roots do not pair under s -> -s");
  std::sort(out.z.begin(), out.z.end(), [](cplx x, cplx y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return out;
}

ZeroRootSet roots_from_zbar(const std::vector<cplx>& zbar, const ModelParams& params) {
  ZeroRootSet out;
  out.two_n = params.two_n;
  out.params = params;
  for (cplx v : zbar) out.z.push_back(canonical_representative(cplx(0, 1) * v));
  std::sort(out.z.begin(), out.z.end(), [](cplx x, cplx y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return out;
}

double inversion_identity_check(const ZeroRootSet& roots, const ModelParams& params, int j) {
  const cplx u = params.theta(j) + params.a();
  const cplx lhs = roots.lambda(u) * roots.lambda(u - 1.0);
  const cplx rhs = a_bare(u, params) * d_bare(u - 1.0, params);
  if (std::abs(rhs) == 0.0) return std::abs(lhs - rhs);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

}  // namespace zeroroot

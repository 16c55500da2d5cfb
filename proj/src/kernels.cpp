#include "zeroroot/kernels.hpp"

#include <omp.h>

namespace zeroroot::kernels {

namespace {

struct Layout {
  int L;
  std::size_t dim;   // quantum space
  std::size_t full;  // auxiliary x quantum
  std::size_t aux;
};

Layout layout(const ModelParams& params) {
  Layout lay;
  lay.L = params.two_n;
  lay.dim = std::size_t(1) << lay.L;
  lay.full = 2 * lay.dim;
  lay.aux = lay.dim;
  return lay;
}

// v <- (w + P_{0j}) v
void apply_r(cplx w, const Layout& lay, int j, cplx* v) {
  const std::size_t sm = std::size_t(1) << (lay.L - j);
  const cplx w1 = w + 1.0;
  for (std::size_t i = 0; i < lay.dim; ++i) {
    if (i & sm) continue;
    const std::size_t a0s0 = i, a1s1 = i | lay.aux | sm;
    const std::size_t a1s0 = i | lay.aux, a0s1 = i | sm;
    v[a0s0] *= w1;
    v[a1s1] *= w1;
    const cplx x = v[a1s0], y = v[a0s1];
    v[a1s0] = w * x + y;
    v[a0s1] = w * y + x;
  }
}

// (v, d) <- (R v, R d + v)
void apply_r_jet(cplx w, const Layout& lay, int j, cplx* v, cplx* d) {
  const std::size_t sm = std::size_t(1) << (lay.L - j);
  const cplx w1 = w + 1.0;
  for (std::size_t i = 0; i < lay.dim; ++i) {
    if (i & sm) continue;
    const std::size_t a0s0 = i, a1s1 = i | lay.aux | sm;
    const std::size_t a1s0 = i | lay.aux, a0s1 = i | sm;
    d[a0s0] = w1 * d[a0s0] + v[a0s0];
    d[a1s1] = w1 * d[a1s1] + v[a1s1];
    v[a0s0] *= w1;
    v[a1s1] *= w1;
    const cplx x = v[a1s0], y = v[a0s1];
    const cplx dx = d[a1s0], dy = d[a0s1];
    d[a1s0] = w * dx + dy + x;
    d[a0s1] = w * dy + dx + y;
    v[a1s0] = w * x + y;
    v[a0s1] = w * y + x;
  }
}

void apply_kminus(cplx u, double p, const Layout& lay, cplx* v) {
  const cplx k0 = p + u, k1 = p - u;
  for (std::size_t i = 0; i < lay.dim; ++i) {
    v[i] *= k0;
    v[i + lay.aux] *= k1;
  }
}

void apply_kminus_jet(cplx u, double p, const Layout& lay, cplx* v, cplx* d) {
  const cplx k0 = p + u, k1 = p - u;
  for (std::size_t i = 0; i < lay.dim; ++i) {
    d[i] = k0 * d[i] + v[i];
    d[i + lay.aux] = k1 * d[i + lay.aux] - v[i + lay.aux];
    v[i] *= k0;
    v[i + lay.aux] *= k1;
  }
}

// returns block alpha of K+ v
cplx kplus_row(cplx u, double q, double xi, int alpha, cplx v0, cplx v1) {
  if (alpha == 0) return (q + u + 1.0) * v0 + xi * (u + 1.0) * v1;
  return xi * (u + 1.0) * v0 + (q - u - 1.0) * v1;
}

cplx kplus_row_deriv(double xi, int alpha, cplx v0, cplx v1) {
  if (alpha == 0) return v0 + xi * v1;
  return xi * v0 - v1;
}

struct Workspace {
  std::vector<cplx> v, d;
  explicit Workspace(const Layout& lay) : v(lay.full), d(lay.full) {}
};

void transfer_core(cplx u, const ModelParams& params, const ShiftTable& sh, const cplx* psi,
                   cplx* out, cplx* dout, Workspace& ws) {
  const Layout lay = layout(params);
  const double q = params.q, xi = params.xi;
  for (std::size_t i = 0; i < lay.dim; ++i) {
    out[i] = 0.0;
    if (dout) dout[i] = 0.0;
  }
  for (int alpha = 0; alpha < 2; ++alpha) {
    std::fill(ws.v.begin(), ws.v.end(), cplx(0.0));
    std::copy(psi, psi + lay.dim, ws.v.begin() + alpha * lay.aux);
    if (dout) {
      std::fill(ws.d.begin(), ws.d.end(), cplx(0.0));
      for (int j = lay.L; j >= 1; --j) apply_r_jet(u + sh.reflected[j - 1], lay, j, ws.v.data(), ws.d.data());
      apply_kminus_jet(u, params.p, lay, ws.v.data(), ws.d.data());
      for (int j = 1; j <= lay.L; ++j) apply_r_jet(u + sh.forward[j - 1], lay, j, ws.v.data(), ws.d.data());
      for (std::size_t i = 0; i < lay.dim; ++i) {
        const cplx v0 = ws.v[i], v1 = ws.v[i + lay.aux];
        const cplx d0 = ws.d[i], d1 = ws.d[i + lay.aux];
        out[i] += kplus_row(u, q, xi, alpha, v0, v1);
        dout[i] += kplus_row(u, q, xi, alpha, d0, d1) + kplus_row_deriv(xi, alpha, v0, v1);
      }
    } else {
      for (int j = lay.L; j >= 1; --j) apply_r(u + sh.reflected[j - 1], lay, j, ws.v.data());
      apply_kminus(u, params.p, lay, ws.v.data());
      for (int j = 1; j <= lay.L; ++j) apply_r(u + sh.forward[j - 1], lay, j, ws.v.data());
      for (std::size_t i = 0; i < lay.dim; ++i)
        out[i] += kplus_row(u, q, xi, alpha, ws.v[i], ws.v[i + lay.aux]);
    }
  }
}

}  // namespace

ShiftTable shifts(const ModelParams& params) {
  ShiftTable sh;
  const int L = params.two_n;
  sh.forward.resize(L);
  sh.reflected.resize(L);
  for (int j = 1; j <= L; ++j) {
    const cplx c = params.a() + params.theta(j);
    sh.forward[j - 1] = (j % 2 == 0) ? c : -c;
    sh.reflected[j - 1] = (j % 2 == 1) ? c : -c;
  }
  return sh;
}

void apply_transfer(cplx u, const ModelParams& params, const ShiftTable& sh, const cplx* psi,
                    cplx* out) {
  Workspace ws(layout(params));
  transfer_core(u, params, sh, psi, out, nullptr, ws);
}

void apply_transfer_jet(cplx u, const ModelParams& params, const ShiftTable& sh,
                        const cplx* psi, cplx* out, cplx* dout) {
  Workspace ws(layout(params));
  transfer_core(u, params, sh, psi, out, dout, ws);
}

void apply_monodromy(cplx u, const ModelParams& params, const ShiftTable& sh, bool reflected,
                     const cplx* v, cplx* out) {
  const Layout lay = layout(params);
  std::copy(v, v + lay.full, out);
  if (reflected) {
    for (int j = lay.L; j >= 1; --j) apply_r(u + sh.reflected[j - 1], lay, j, out);
  } else {
    for (int j = 1; j <= lay.L; ++j) apply_r(u + sh.forward[j - 1], lay, j, out);
  }
}

ComplexVector transfer_apply(cplx u, const ModelParams& params, const ComplexVector& psi) {
  ComplexVector out(psi.size());
  apply_transfer(u, params, shifts(params), psi.data(), out.data());
  return out;
}

ComplexMatrix build_transfer_serial(cplx u, const ModelParams& params, bool deriv) {
  const Layout lay = layout(params);
  const ShiftTable sh = shifts(params);
  const long D = long(lay.dim);
  ComplexMatrix t(D, D);
  Workspace ws(lay);
  std::vector<cplx> e(lay.dim, 0.0), col(lay.dim), dcol(lay.dim);
  for (long s = 0; s < D; ++s) {
    e[s] = 1.0;
    transfer_core(u, params, sh, e.data(), col.data(), deriv ? dcol.data() : nullptr, ws);
    e[s] = 0.0;
    const auto& src = deriv ? dcol : col;
    for (long r = 0; r < D; ++r) t(r, s) = src[r];
  }
  return t;
}

ComplexMatrix build_transfer_parallel(cplx u, const ModelParams& params, bool deriv) {
  const Layout lay = layout(params);
  const ShiftTable sh = shifts(params);
  const long D = long(lay.dim);
  ComplexMatrix t(D, D);
#pragma omp parallel
  {
    Workspace ws(lay);
    std::vector<cplx> e(lay.dim, 0.0), col(lay.dim), dcol(lay.dim);
#pragma omp for schedule(static)
    for (long s = 0; s < D; ++s) {
      e[s] = 1.0;
      transfer_core(u, params, sh, e.data(), col.data(), deriv ? dcol.data() : nullptr, ws);
      e[s] = 0.0;
      const auto& src = deriv ? dcol : col;
      for (long r = 0; r < D; ++r) t(r, s) = src[r];
    }
  }
  return t;
}

namespace {

struct CompiledTerm {
  cplx coef;
  std::size_t flip = 0;
  std::vector<std::pair<std::size_t, char>> ops;  // (bit mask, axis)
};

std::vector<CompiledTerm> compile(const ModelParams& params) {
  std::vector<CompiledTerm> out;
  for (const auto& t : hamiltonian_terms(params)) {
    CompiledTerm c;
    c.coef = t.coef;
    for (auto [site, ax] : t.ops) {
      const std::size_t m = std::size_t(1) << (params.two_n - site);
      if (ax != 'z') c.flip |= m;
      c.ops.emplace_back(m, ax);
    }
    out.push_back(std::move(c));
  }
  return out;
}

void fill_column(const std::vector<CompiledTerm>& terms, std::size_t s, ComplexMatrix& h) {
  for (const auto& t : terms) {
    cplx ph = t.coef;
    for (auto [m, ax] : t.ops) {
      const bool down = (s & m) != 0;
      if (ax == 'z') {
        if (down) ph = -ph;
      } else if (ax == 'y') {
        ph *= down ? cplx(0, -1) : cplx(0, 1);
      }
    }
    h(long(s ^ t.flip), long(s)) += ph;
  }
}

}  // namespace

ComplexMatrix build_hamiltonian_serial(const ModelParams& params) {
  const auto terms = compile(params);
  const long D = 1L << params.two_n;
  ComplexMatrix h = ComplexMatrix::Zero(D, D);
  for (long s = 0; s < D; ++s) fill_column(terms, std::size_t(s), h);
  return h;
}

ComplexMatrix build_hamiltonian_parallel(const ModelParams& params) {
  const auto terms = compile(params);
  const long D = 1L << params.two_n;
  ComplexMatrix h = ComplexMatrix::Zero(D, D);
#pragma omp parallel for schedule(static)
  for (long s = 0; s < D; ++s) fill_column(terms, std::size_t(s), h);
  return h;
}

}  // namespace zeroroot::kernels

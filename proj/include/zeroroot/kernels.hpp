#pragma once

#include <vector>

#include "zeroroot/chain.hpp"

namespace zeroroot::kernels {

// Basis index layout on (auxiliary x quantum): the auxiliary bit is the most
// significant one, site j (1-based) sits at bit position two_n - j, bit value
// 0 is spin up.

struct ShiftTable {
  std::vector<cplx> forward;    // T0 factors, applied R_{0,1} first
  std::vector<cplx> reflected;  // T0-hat factors, applied R_{0,2N} first
};

ShiftTable shifts(const ModelParams& params);

// out = t(u) psi
void apply_transfer(cplx u, const ModelParams& params, const ShiftTable& sh,
                    const cplx* psi, cplx* out);

// out = t(u) psi, dout = t'(u) psi
void apply_transfer_jet(cplx u, const ModelParams& params, const ShiftTable& sh,
                        const cplx* psi, cplx* out, cplx* dout);

// out = T0(u) v or T0-hat(u) v on the 2^{2N+1} space
void apply_monodromy(cplx u, const ModelParams& params, const ShiftTable& sh, bool reflected,
                     const cplx* v, cplx* out);

ComplexVector transfer_apply(cplx u, const ModelParams& params, const ComplexVector& psi);

// Column-by-column builders of t(u) (and t'(u) when deriv is set).
ComplexMatrix build_transfer_serial(cplx u, const ModelParams& params, bool deriv);
ComplexMatrix build_transfer_parallel(cplx u, const ModelParams& params, bool deriv);

ComplexMatrix build_hamiltonian_serial(const ModelParams& params);
ComplexMatrix build_hamiltonian_parallel(const ModelParams& params);

}  // namespace zeroroot::kernels

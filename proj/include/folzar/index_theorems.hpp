#pragma once

#include <vector>

#include "folzar/chains.hpp"
#include "folzar/hj.hpp"
#include "folzar/surface.hpp"

namespace folzar {

// Camacho-Sad residual C^2 - sum CS(F,C,p); zero exactly when the residue
// sum rule holds. The curve must be invariant.
Rat verify_camacho_sad(const CurveConfiguration& config, int curve);

// Cerveau-Lins Neto residual (2 - 2g(C) + K_F.C) - sum h_p(F,C); the curve
// must be invariant.
Rat verify_cln(const CurveConfiguration& config, int curve);

// CS value at the forward singular point of each chain component:
// CS(F,Gamma_k,p_k) = -mu_{k+1}/mu_k.
std::vector<Rat> chain_cs_values(const HJData& hj);

// E(C) = C + sum E(C,Theta) over the given chains that meet C. Defined for
// any configured curve; pairs to zero with every component of those chains.
QDivisor e_of_curve(const CurveConfiguration& config, int curve,
                    const std::vector<DFChain>& chains);

struct EcDivisorResult {
  QDivisor divisor;  // E(C)
  Rat residual;      // E(C)^2 - sum CS(F,C,q) over non-attachment singularities
};

// Builds E(C) against all maximal (D,F)-chains and evaluates the residue
// closure of the chain-completed curve. C must be an invariant curve outside
// every maximal (D,F)-chain; attachment points are identified by shared
// point ids between C and the chain components.
EcDivisorResult ec_divisor(const CurveConfiguration& config, int curve,
                           const AdjointParams& params);
EcDivisorResult ec_divisor(const CurveConfiguration& config, int curve,
                           const AdjointParams& params,
                           const std::vector<DFChain>& chains);

}  // namespace folzar

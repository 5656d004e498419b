#pragma once

#include <vector>

#include "folzar/hj.hpp"
#include "folzar/surface.hpp"

namespace folzar {

// A Hirzebruch-Jung string of invariant rational curves carrying the index
// pattern of a foliation chain, oriented so that K_F . Gamma_1 = -1 and
// K_F . Gamma_i = 0 for i >= 2.
struct Chain {
  std::vector<int> curve_indices;
  HJData hj;

  int length() const { return static_cast<int>(curve_indices.size()); }
  bool contains(int curve) const {
    for (int c : curve_indices)
      if (c == curve) return true;
    return false;
  }
};

// All maximal F-chains of the configuration, in order of their head curve.
// Throws inconsistent_configuration_error when recognized maximal chains
// overlap or touch each other, or when a chain link is not witnessed by a
// shared singular point on both curves.
std::vector<Chain> find_f_chains(const CurveConfiguration& config);

struct DFCertificate {
  Rat mu_weighted_sum;  // sum_k mu_k D.Gamma_k
  bool is_df = false;   // strict inequality sum < 1
};

// The (D,F)-chain criterion with its exact certificate. The verdict is
// cross-checked internally against effectivity of E(-(K_F+D),Theta) with a
// positive last coefficient.
DFCertificate is_df_chain(const CurveConfiguration& config, const Chain& chain,
                          const AdjointParams& params);

// A maximal (D,F)-chain together with its associated divisor M(D,Theta).
struct DFChain {
  Chain chain;
  Vec d_dots;        // D.Gamma_k along the chain
  Vec m_coeffs;      // coefficients of M(D,Theta)
  QDivisor m_divisor;
};

// Pairing data D.Gamma_k along a chain.
Vec chain_d_dots(const CurveConfiguration& config, const Chain& chain,
                 const AdjointParams& params);

// Maximal (D,F)-chains: per maximal F-chain, the longest leading sub-chain
// satisfying the criterion (possibly none). The no-extension property is
// re-derived from the M(D,Theta)-pairing test and checked.
std::vector<DFChain> maximal_df_chains(const CurveConfiguration& config,
                                       const AdjointParams& params);

// theta(C,Theta): the least x >= 0 making the maximal (D+xC,F)-sub-chain of
// Theta disjoint from C; 0 when C and Theta are disjoint. C must not be a
// component of the chain.
Rat theta_chain(const CurveConfiguration& config, int curve, const DFChain& chain,
                const AdjointParams& params);

// theta(C) = max over all maximal (D,F)-chains. C must not be a component of
// any of them.
Rat theta_index(const CurveConfiguration& config, int curve,
                const AdjointParams& params, const std::vector<DFChain>& chains);
Rat theta_index(const CurveConfiguration& config, int curve,
                const AdjointParams& params);

// M(D,Theta_t) for every leading sub-chain Theta_t, t = 1..r. The sequence is
// strictly increasing coefficientwise on common support.
std::vector<QDivisor> subchain_ladder(const CurveConfiguration& config,
                                      const DFChain& chain,
                                      const AdjointParams& params);

}  // namespace folzar

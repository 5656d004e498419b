#pragma once

#include <optional>

#include "folzar/surface.hpp"

namespace folzar {

// Ambient pairings of the positive part P = K_F + D - N, expanded through the
// declared products K_F^2 and K_F.K_X. Throws missing_data_error naming
// whichever of the two is absent.
struct AmbientPairings {
  Rat p_self;  // P^2
  Rat p_kx;    // K_X . P
};

AmbientPairings ambient_positive_part(const CurveConfiguration& config,
                                      const AdjointParams& params,
                                      const QDivisor& negative);

// Smallest positive integer m with m P(D) integral: the lcm of the
// denominators of the negative-part coefficients, of epsilon, and of every
// boundary coefficient.
int128 integrality_index(const CurveConfiguration& config, const AdjointParams& params,
                         const QDivisor& negative);

// floor( (K_X.A + 2)^2 / (4 A^2) + (9 A^2 + 6 K_X.A) / 4 ). Requires A^2 > 0.
int128 alpha_bound(const Rat& a_self, const Rat& a_kx);

// ((K_X - T).A + 2)^2 / (4 A^2) - (K_X - T)^2 / 4, parameterized by the
// pairings of the twist T. Defaults give the untwisted value.
Rat m_frak(const Rat& a_self, const Rat& a_kx, const Rat& kx_self,
           const Rat& t_dot_a = Rat(0), const Rat& t_dot_kx = Rat(0),
           const Rat& t_self = Rat(0));

struct Thresholds {
  int128 vanishing = 0;   // i (alpha + 1)
  int128 birational = 0;  // i (alpha + 3)
};

Thresholds thresholds(int128 i_index, int128 alpha);

// Exact value of (m^2/2) vol - (m/2) kx_p + chi.
Rat rr_dimension(int128 m, const Rat& vol, const Rat& kx_p, long long chi);

// i * floor( (3 eps i + 1)^2 / (4 eps^2 i^2) * A^2 + 1/A^2 + 1/(eps i) ).
// Requires eps > 0 and A^2 > 0.
int128 n_frak(const Rat& eps, int128 i_index, const Rat& a_self);

// Index-theorem inequality D1^2 D2^2 <= (D1 D2)^2; the caller asserts a
// positive square of some combination as witness.
bool hodge_check(const Rat& d1_self, const Rat& d2_self, const Rat& d12,
                 bool mix_positive_witness);

// 2 D1.D2 / D1^2 + 1; requires D1^2 > 0.
Rat beta_ha(const Rat& d1_self, const Rat& d12);

struct BoundsReport {
  int128 i_index = 1;
  Rat p_self;   // P(D)^2
  Rat p_kx;     // K_X . P(D)
  Rat a_self;   // A^2 with A = i P(D)
  Rat a_kx;     // K_X . A
  int128 alpha = 0;
  Rat m_frak_value;              // M(A,0)
  bool alpha_dominates = false;  // alpha > M(A,0) - 1, valid when (3A+K_X)^2 >= 0
  bool three_a_kx_nonneg = false;  // (3A + K_X)^2 >= 0
  int128 vanishing_threshold = 0;
  int128 birational_threshold = 0;
  std::optional<int128> n_frak_value;  // only when epsilon > 0
  Rat rr_quadratic;  // vol/2
  Rat rr_linear;     // -K_X.P/2
  Rat rr_constant;   // chi
  bool jihao_variant = false;  // vanishing threshold uses floor(M(A,0)) + 1
};

// Assembles the full report from a decomposition's negative part. Throws
// missing_data_error without declared ambient products and
// precondition_error when A^2 <= 0 (the adjoint class is not big).
BoundsReport bounds_report(const CurveConfiguration& config,
                           const AdjointParams& params, const QDivisor& negative,
                           bool jihao_variant = false);

}  // namespace folzar

#pragma once

#include <map>
#include <string>
#include <vector>

#include "folzar/chains.hpp"
#include "folzar/surface.hpp"

namespace folzar {

enum class Regime { quarter, half, unit, delta_only, eps_canonical };
enum class OracleMode { fujita, enumeration };
enum class DecompositionMethod { theorem, oracle_fujita, oracle_enumeration };

Regime regime_from_string(const std::string& s);
std::string to_string(Regime r);
std::string to_string(OracleMode m);
std::string to_string(DecompositionMethod m);

struct HypothesisViolation {
  int curve = -1;
  std::string condition;  // "1", "2a", "2b", "epsilon-range", "delta-floor", ...
  std::string detail;
};

struct HypothesisReport {
  Regime regime = Regime::quarter;
  std::vector<HypothesisViolation> violations;
  bool passed() const { return violations.empty(); }
};

// Scans the configuration for the curves excluded by the selected statement:
// the (-1)-curve conditions and the epsilon / boundary-coefficient ranges.
HypothesisReport check_hypotheses(const CurveConfiguration& config,
                                  const AdjointParams& params, Regime regime);

struct ZariskiResult {
  QDivisor negative;
  // (K_F + D - N) . C for every configured curve, keyed by curve index.
  std::map<int, Rat> positive_dots;
  DecompositionMethod method = DecompositionMethod::theorem;
  std::vector<int> nef_violations;  // curves with a negative positive-part dot
  bool support_negative_definite = true;
  bool floor_zero = true;
};

// N = sum M(D,Theta) over the maximal (D,F)-chains, with every result
// invariant evaluated and recorded. Never throws on a nefness failure; the
// violations are listed in the result.
ZariskiResult build_theorem_decomposition(const CurveConfiguration& config,
                                          const AdjointParams& params);

// Strict variant: throws theorem_mismatch_error if the positive part fails
// nefness against any configured curve.
ZariskiResult negative_part_theorem(const CurveConfiguration& config,
                                    const AdjointParams& params);

// Chain-free construction. Fujita mode grows the support of all curves where
// the candidate positive part is still negative and re-solves; enumeration
// mode scans negative-definite supports up to max_enum_support curves and
// keeps the unique valid decomposition.
ZariskiResult negative_part_oracle(const CurveConfiguration& config,
                                   const AdjointParams& params, OracleMode mode,
                                   int max_enum_support = 20);

struct CoefficientDifference {
  int curve = -1;
  Rat theorem_coeff;
  Rat oracle_coeff;
};

struct DecompositionComparison {
  ZariskiResult theorem_result;
  ZariskiResult oracle_result;
  bool equal = false;
  std::vector<CoefficientDifference> differences;
};

DecompositionComparison compare_decompositions(const CurveConfiguration& config,
                                               const AdjointParams& params,
                                               OracleMode mode,
                                               int max_enum_support = 20);

// (W_C + theta(C) E(C)) . E(C) evaluated on a non-invariant negative curve;
// non-negative whenever the main-statement hypotheses hold.
struct WInequalityCheck {
  int curve = -1;
  Rat theta;
  Rat value;
  bool ok = false;
};

std::vector<WInequalityCheck> w_inequality_checks(const CurveConfiguration& config,
                                                  const AdjointParams& params,
                                                  const std::vector<DFChain>& chains);

struct EpsCanonicalReport {
  Rat epsilon;
  int128 i_delta = 1;  // integrality index of the Delta-only positive part
  QDivisor n_delta;
  QDivisor n_eps;
  bool supports_equal = false;
  std::vector<int> nef_claim_violations;  // (3i P(Delta) + K_X) . C < 0
  Rat p_delta_self;  // P(Delta)^2
  Rat p_delta_kx;    // K_X . P(Delta)
  Rat p_eps_self;    // P(Delta + eps K_X)^2
  Rat gamma;         // max{2 eps P K_X / P^2 + 1, 0}
  Rat lower_bound;   // (1 - 3 eps i)^2 P^2
  Rat upper_bound;   // (1 + gamma)^2 P^2
  bool sandwich_ok = false;
};

// Small-epsilon perturbation study around the Delta-only decomposition:
// verifies the nefness claim for 3i P(Delta) + K_X against the configured
// curves, rebuilds the negative part at Delta + eps K_X, and checks the
// exact volume sandwich. Requires declared ambient products and
// eps <= 1/(3 i(Delta,F)).
EpsCanonicalReport eps_canonical_suite(const CurveConfiguration& config,
                                       const AdjointParams& params);

}  // namespace folzar

#include "folzar/zariski.hpp"

#include <algorithm>
#include <cassert>

#include "folzar/bounds.hpp"
#include "folzar/index_theorems.hpp"

namespace folzar {

Regime regime_from_string(const std::string& s) {
  if (s == "quarter") return Regime::quarter;
  if (s == "half") return Regime::half;
  if (s == "unit") return Regime::unit;
  if (s == "delta-only") return Regime::delta_only;
  if (s == "eps-canonical") return Regime::eps_canonical;
  throw input_error("unknown regime '" + s + "'");
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::quarter: return "quarter";
    case Regime::half: return "half";
    case Regime::unit: return "unit";
    case Regime::delta_only: return "delta-only";
    case Regime::eps_canonical: return "eps-canonical";
  }
  return "?";
}

std::string to_string(OracleMode m) {
  return m == OracleMode::fujita ? "fujita" : "enumeration";
}

std::string to_string(DecompositionMethod m) {
  switch (m) {
    case DecompositionMethod::theorem: return "theorem";
    case DecompositionMethod::oracle_fujita: return "oracle-fujita";
    case DecompositionMethod::oracle_enumeration: return "oracle-enumeration";
  }
  return "?";
}

namespace {

bool is_minus_one_curve(const Curve& c) {
  return c.self_int == -1 && c.pa == 0 && c.geom_genus == 0;
}

}  // namespace

HypothesisReport check_hypotheses(const CurveConfiguration& config,
                                  const AdjointParams& params, Regime regime) {
  HypothesisReport report;
  report.regime = regime;
  auto flag = [&](int curve, const std::string& condition, const std::string& detail) {
    report.violations.push_back({curve, condition, detail});
  };

  const Rat eps = params.epsilon;
  Rat eps_cap;
  switch (regime) {
    case Regime::quarter: eps_cap = Rat(1, 4); break;
    case Regime::half: eps_cap = Rat(1, 2); break;
    case Regime::unit: eps_cap = Rat(1); break;
    case Regime::delta_only: eps_cap = Rat(0); break;
    case Regime::eps_canonical: eps_cap = Rat(1); break;  // refined by the suite
  }
  if (eps > eps_cap || eps.is_negative())
    flag(-1, "epsilon-range",
         "epsilon = " + eps.str() + " outside [0," + eps_cap.str() + "]");

  if (regime == Regime::delta_only || regime == Regime::eps_canonical) {
    for (int i = 0; i < config.size(); ++i) {
      const Rat a = params.delta_of(config, i);
      if (a >= Rat(1))
        flag(i, "delta-floor", "boundary coefficient " + a.str() + " is not below 1");
    }
  }

  for (int i = 0; i < config.size(); ++i) {
    const Curve& c = config.curve(i);
    if (!is_minus_one_curve(c)) continue;
    const Rat dc = d_dot(config, params, i);
    const Rat kf = Rat(c.kf_dot);

    if (regime == Regime::eps_canonical) {
      if (c.invariant && kf <= Rat(0))
        flag(i, "minimal-foliation",
             "invariant (-1)-curve with K_F.C = " + kf.str() + " <= 0");
      continue;
    }

    if (!c.invariant) {
      // Excluded: K_F.E = 1 together with eps K_X.E < 0.
      if (kf == Rat(1) && (eps * Rat(config.kx_dot(i))).is_negative())
        flag(i, "1", "non-invariant (-1)-curve with K_F.E = 1 and eps K_X.E < 0");
      continue;
    }

    if (dc >= Rat(0) && kf <= Rat(0) && kf + Rat(2) * dc <= Rat(1))
      flag(i, "2a", "invariant (-1)-curve with D.C = " + dc.str() +
                        " >= 0, K_F.C = " + kf.str() + " <= 0 and K_F.C + 2 D.C <= 1");

    Rat d_low;
    Rat kf_high;
    switch (regime) {
      case Regime::quarter: d_low = Rat(-1, 4); kf_high = Rat(0); break;
      case Regime::half: d_low = Rat(-1, 2); kf_high = Rat(1); break;
      case Regime::unit: d_low = Rat(-1); kf_high = Rat(2); break;
      default: d_low = Rat(0); kf_high = Rat(0); break;
    }
    if (regime != Regime::delta_only && dc.is_negative() && dc >= d_low && kf <= kf_high)
      flag(i, "2b", "invariant (-1)-curve with " + d_low.str() +
                        " <= D.C = " + dc.str() + " < 0 and K_F.C = " + kf.str() +
                        " <= " + kf_high.str());
  }
  return report;
}

namespace {

ZariskiResult finish_result(const CurveConfiguration& config,
                            const AdjointParams& params, QDivisor negative,
                            DecompositionMethod method) {
  ZariskiResult r;
  r.negative = std::move(negative);
  r.method = method;
  for (int c = 0; c < config.size(); ++c) {
    const Rat dot = adjoint_dot(config, params, c) - intersection(config, r.negative, c);
    r.positive_dots[c] = dot;
    if (dot.is_negative()) r.nef_violations.push_back(c);
  }
  const std::vector<int> support = r.negative.support();
  r.support_negative_definite =
      support.empty() || is_negative_definite(config.gram(support));
  r.floor_zero = r.negative.floor_is_zero();
  return r;
}

}  // namespace

ZariskiResult build_theorem_decomposition(const CurveConfiguration& config,
                                          const AdjointParams& params) {
  QDivisor negative;
  for (const DFChain& df : maximal_df_chains(config, params)) negative += df.m_divisor;
  ZariskiResult r = finish_result(config, params, std::move(negative),
                                  DecompositionMethod::theorem);
  // The positive part pairs to zero with every chain component by the
  // defining property of M(D,Theta).
  for (const auto& entry : r.negative.entries()) {
    if (!r.positive_dots.at(entry.first).is_zero())
      throw std::logic_error("chain-built negative part lost the zero pairing");
  }
  return r;
}

ZariskiResult negative_part_theorem(const CurveConfiguration& config,
                                    const AdjointParams& params) {
  if (!config.globals().pseudoeffective)
    throw precondition_error(
        "the adjoint class is not asserted pseudo-effective in the input");
  ZariskiResult r = build_theorem_decomposition(config, params);
  if (!r.nef_violations.empty()) {
    const int c = r.nef_violations.front();
    throw theorem_mismatch_error(
        "chain-built positive part is negative against '" + config.curve(c).id +
        "' (value " + r.positive_dots.at(c).str() +
        "); the configuration breaches the closed-world or hypothesis assumptions");
  }
  return r;
}

namespace {

// Solves N . C_i = (K_F + D) . C_i on the given support.
QDivisor solve_on_support(const CurveConfiguration& config, const AdjointParams& params,
                          const std::vector<int>& support) {
  QDivisor n;
  if (support.empty()) return n;
  const Mat gram = config.gram(support);
  Vec rhs(static_cast<Eigen::Index>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i)
    rhs(static_cast<Eigen::Index>(i)) = adjoint_dot(config, params, support[i]);
  const auto x = solve_exact(gram, rhs);
  if (!x)
    throw not_pseudoeffective_error(
        "singular intersection matrix on a required support");
  for (std::size_t i = 0; i < support.size(); ++i)
    n.set(support[i], (*x)(static_cast<Eigen::Index>(i)));
  return n;
}

ZariskiResult oracle_fujita(const CurveConfiguration& config,
                            const AdjointParams& params) {
  std::vector<int> support;
  QDivisor n;
  for (int round = 0; round <= config.size(); ++round) {
    if (!support.empty() && !is_negative_definite(config.gram(support)))
      throw not_pseudoeffective_error(
          "support escaped negative definiteness: the adjoint class is not "
          "pseudo-effective relative to the configuration");
    n = solve_on_support(config, params, support);
    bool grew = false;
    for (int c = 0; c < config.size(); ++c) {
      if (std::find(support.begin(), support.end(), c) != support.end()) continue;
      if ((adjoint_dot(config, params, c) - intersection(config, n, c)).is_negative()) {
        support.push_back(c);
        grew = true;
      }
    }
    if (!grew) break;
    std::sort(support.begin(), support.end());
  }
  if (!n.is_effective())
    throw not_pseudoeffective_error(
        "stabilized negative part is not effective relative to the configuration");
  return finish_result(config, params, std::move(n),
                       DecompositionMethod::oracle_fujita);
}

ZariskiResult oracle_enumeration(const CurveConfiguration& config,
                                 const AdjointParams& params, int max_enum_support) {
  std::vector<int> candidates;
  for (int c = 0; c < config.size(); ++c)
    if (config.curve(c).self_int < 0) candidates.push_back(c);
  if (static_cast<int>(candidates.size()) > max_enum_support)
    throw precondition_error(
        "enumeration mode supports at most " + std::to_string(max_enum_support) +
        " negative curves (" + std::to_string(candidates.size()) +
        " present); raise the cap or use fujita mode");

  std::vector<QDivisor> valid;
  const std::size_t k = candidates.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> support;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::size_t{1} << b)) support.push_back(candidates[b]);
    if (!support.empty() && !is_negative_definite(config.gram(support))) continue;
    QDivisor n;
    try {
      n = solve_on_support(config, params, support);
    } catch (const not_pseudoeffective_error&) {
      continue;
    }
    if (!n.is_effective()) continue;
    bool nef = true;
    for (int c = 0; c < config.size() && nef; ++c)
      if ((adjoint_dot(config, params, c) - intersection(config, n, c)).is_negative())
        nef = false;
    if (nef) valid.push_back(std::move(n));
  }
  if (valid.empty())
    throw not_pseudoeffective_error(
        "no negative-definite support carries a valid decomposition: the adjoint "
        "class is not pseudo-effective relative to the configuration");
  for (std::size_t i = 1; i < valid.size(); ++i) {
    if (valid[i] != valid.front())
      throw inconsistent_configuration_error(
          "enumeration found two distinct valid decompositions; the negative part "
          "must be unique");
  }
  return finish_result(config, params, valid.front(),
                       DecompositionMethod::oracle_enumeration);
}

}  // namespace

ZariskiResult negative_part_oracle(const CurveConfiguration& config,
                                   const AdjointParams& params, OracleMode mode,
                                   int max_enum_support) {
  if (!config.globals().pseudoeffective)
    throw precondition_error(
        "the adjoint class is not asserted pseudo-effective in the input");
  return mode == OracleMode::fujita
             ? oracle_fujita(config, params)
             : oracle_enumeration(config, params, max_enum_support);
}

DecompositionComparison compare_decompositions(const CurveConfiguration& config,
                                               const AdjointParams& params,
                                               OracleMode mode, int max_enum_support) {
  DecompositionComparison cmp;
  cmp.theorem_result = build_theorem_decomposition(config, params);
  cmp.oracle_result = negative_part_oracle(config, params, mode, max_enum_support);
  cmp.equal = cmp.theorem_result.negative == cmp.oracle_result.negative;
  if (!cmp.equal) {
    std::vector<int> curves;
    for (const auto& [i, v] : cmp.theorem_result.negative.entries()) curves.push_back(i);
    for (const auto& [i, v] : cmp.oracle_result.negative.entries()) curves.push_back(i);
    std::sort(curves.begin(), curves.end());
    curves.erase(std::unique(curves.begin(), curves.end()), curves.end());
    for (int c : curves) {
      const Rat t = cmp.theorem_result.negative.coeff(c);
      const Rat o = cmp.oracle_result.negative.coeff(c);
      if (t != o) cmp.differences.push_back({c, t, o});
    }
  }
  return cmp;
}

std::vector<WInequalityCheck> w_inequality_checks(const CurveConfiguration& config,
                                                  const AdjointParams& params,
                                                  const std::vector<DFChain>& chains) {
  std::vector<WInequalityCheck> out;
  for (int c = 0; c < config.size(); ++c) {
    const Curve& curve = config.curve(c);
    if (curve.invariant || curve.self_int >= 0) continue;
    bool in_chain = false;
    for (const DFChain& df : chains) in_chain = in_chain || df.chain.contains(c);
    if (in_chain) continue;

    const Rat theta = theta_index(config, c, params, chains);
    const QDivisor e = e_of_curve(config, c, chains);

    // W_C . E(C) + theta E(C)^2 with W_C = K_F + D - sum of M(D,Theta) over
    // the chains meeting C.
    Rat w_dot_e(0);
    for (const auto& [j, coeff] : e.entries())
      w_dot_e += coeff * adjoint_dot(config, params, j);
    for (const DFChain& df : chains) {
      bool meets = false;
      for (int g : df.chain.curve_indices) meets = meets || config.inter(c, g) != 0;
      if (meets) w_dot_e -= intersection(config, df.m_divisor, e);
    }
    const Rat value = w_dot_e + theta * intersection(config, e, e);
    out.push_back({c, theta, value, !value.is_negative()});
  }
  return out;
}

EpsCanonicalReport eps_canonical_suite(const CurveConfiguration& config,
                                       const AdjointParams& params) {
  EpsCanonicalReport rep;
  rep.epsilon = params.epsilon;
  if (rep.epsilon.is_negative()) throw precondition_error("epsilon must be >= 0");

  AdjointParams delta_only;
  delta_only.epsilon = Rat(0);
  delta_only.delta = params.delta;

  const ZariskiResult z_delta = build_theorem_decomposition(config, delta_only);
  rep.n_delta = z_delta.negative;
  rep.i_delta = integrality_index(config, delta_only, z_delta.negative);

  const Rat cap = Rat(1) / (Rat(3) * Rat::of(rep.i_delta, 1));
  if (rep.epsilon > cap)
    throw precondition_error("epsilon = " + rep.epsilon.str() +
                             " exceeds 1/(3 i) = " + cap.str());

  const AmbientPairings amb = ambient_positive_part(config, delta_only, rep.n_delta);
  rep.p_delta_self = amb.p_self;
  rep.p_delta_kx = amb.p_kx;
  if (!rep.p_delta_self.is_positive())
    throw precondition_error("the epsilon-free adjoint class is not big: P^2 = " +
                             rep.p_delta_self.str());

  // Nefness claim for 3i P + K_X, tested against every configured curve.
  const Rat three_i = Rat(3) * Rat::of(rep.i_delta, 1);
  for (int c = 0; c < config.size(); ++c) {
    const Rat value = three_i * z_delta.positive_dots.at(c) + Rat(config.kx_dot(c));
    if (value.is_negative()) rep.nef_claim_violations.push_back(c);
  }

  const ZariskiResult z_eps = build_theorem_decomposition(config, params);
  rep.n_eps = z_eps.negative;
  rep.supports_equal = rep.n_eps.support() == rep.n_delta.support();

  rep.p_eps_self = ambient_positive_part(config, params, rep.n_eps).p_self;

  const Rat beta = Rat(2) * rep.epsilon * rep.p_delta_kx / rep.p_delta_self + Rat(1);
  rep.gamma = beta.is_negative() ? Rat(0) : beta;
  const Rat shrink = Rat(1) - Rat(3) * rep.epsilon * Rat::of(rep.i_delta, 1);
  rep.lower_bound = shrink * shrink * rep.p_delta_self;
  const Rat grow = Rat(1) + rep.gamma;
  rep.upper_bound = grow * grow * rep.p_delta_self;
  rep.sandwich_ok = rep.lower_bound <= rep.p_eps_self && rep.p_eps_self <= rep.upper_bound;
  return rep;
}

}  // namespace folzar

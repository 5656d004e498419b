#include "folzar/chains.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace folzar {

namespace {

bool chain_eligible(const Curve& c) {
  if (!c.invariant || c.pa != 0 || c.geom_genus != 0 || c.self_int > -2) return false;
  if (c.singularities.empty()) return false;
  return std::all_of(c.singularities.begin(), c.singularities.end(),
                     [](const SingularityIncidence& s) { return s.reduced_nondegenerate; });
}

bool share_singular_point(const Curve& a, const Curve& b) {
  for (const auto& sa : a.singularities)
    for (const auto& sb : b.singularities)
      if (sa.point_id == sb.point_id) return true;
  return false;
}

HJData chain_hj(const CurveConfiguration& config, const std::vector<int>& curves) {
  std::vector<long long> e;
  e.reserve(curves.size());
  for (int c : curves) e.push_back(-config.curve(c).self_int);
  return hj_sequences(e);
}

}  // namespace

std::vector<Chain> find_f_chains(const CurveConfiguration& config) {
  const int n = config.size();
  std::vector<Chain> chains;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);

  for (int head = 0; head < n; ++head) {
    const Curve& hc = config.curve(head);
    if (!chain_eligible(hc) || hc.kf_dot != -1) continue;

    std::vector<int> members{head};
    int cur = head;
    for (;;) {
      std::vector<int> candidates;
      for (int x = 0; x < n; ++x) {
        const Curve& xc = config.curve(x);
        if (!chain_eligible(xc) || xc.kf_dot != 0) continue;
        if (config.inter(cur, x) != 1) continue;
        bool clean = true;
        for (int m : members) {
          if (m == x || (m != cur && config.inter(m, x) != 0)) {
            clean = false;
            break;
          }
        }
        if (clean) candidates.push_back(x);
      }
      if (candidates.empty()) break;
      if (candidates.size() > 1)
        throw inconsistent_configuration_error(
            "chain through '" + hc.id + "' forks at '" + config.curve(cur).id +
            "': more than one admissible continuation");
      const int next = candidates.front();
      if (!share_singular_point(config.curve(cur), config.curve(next)))
        throw inconsistent_configuration_error(
            "invariant curves '" + config.curve(cur).id + "' and '" +
            config.curve(next).id +
            "' meet without a shared singular point; the node of a chain must be "
            "a recorded singularity on both curves");
      members.push_back(next);
      cur = next;
    }

    for (int m : members) {
      if (owner[static_cast<std::size_t>(m)] != -1)
        throw inconsistent_configuration_error(
            "curve '" + config.curve(m).id +
            "' belongs to two maximal chains; separatrix consistency fails");
      owner[static_cast<std::size_t>(m)] = static_cast<int>(chains.size());
    }
    chains.push_back(Chain{members, chain_hj(config, members)});
  }

  // Maximal chains must be pairwise disjoint as curves, not merely without
  // shared components.
  for (std::size_t a = 0; a < chains.size(); ++a) {
    for (std::size_t b = a + 1; b < chains.size(); ++b) {
      for (int ca : chains[a].curve_indices)
        for (int cb : chains[b].curve_indices)
          if (config.inter(ca, cb) != 0)
            throw inconsistent_configuration_error(
                "maximal chains through '" +
                config.curve(chains[a].curve_indices.front()).id + "' and '" +
                config.curve(chains[b].curve_indices.front()).id +
                "' intersect; separatrix consistency fails");
    }
  }
  return chains;
}

Vec chain_d_dots(const CurveConfiguration& config, const Chain& chain,
                 const AdjointParams& params) {
  Vec d(chain.length());
  for (int k = 0; k < chain.length(); ++k)
    d(k) = d_dot(config, params, chain.curve_indices[static_cast<std::size_t>(k)]);
  return d;
}

DFCertificate is_df_chain(const CurveConfiguration& config, const Chain& chain,
                          const AdjointParams& params) {
  const Vec d = chain_d_dots(config, chain, params);
  Rat s(0);
  for (int k = 1; k <= chain.length(); ++k)
    s += Rat::of(chain.hj.mu[static_cast<std::size_t>(k)], 1) * d(k - 1);
  DFCertificate cert{s, s < Rat(1)};

  // Dual route: E(-(K_F+D),Theta) effective with positive last coefficient.
  // The equivalence is guaranteed only under the standing assumption that
  // the chain pairs non-negatively with D beyond its head, which holds for
  // every validated configuration.
  bool tail_nonneg = true;
  for (int k = 1; k < chain.length(); ++k)
    tail_nonneg = tail_nonneg && !d(k).is_negative();
  if (tail_nonneg) {
    Vec a(chain.length());
    a(0) = Rat(1) - d(0);
    for (int k = 1; k < chain.length(); ++k) a(k) = -d(k);
    const Vec gamma = e_divisor(chain.hj, a);
    bool dual = gamma(chain.length() - 1).is_positive();
    for (int k = 0; dual && k < chain.length(); ++k)
      if (gamma(k).is_negative()) dual = false;
    if (dual != cert.is_df)
      throw std::logic_error("chain criterion disagrees with the effectivity route");
  }
  return cert;
}

namespace {

DFChain make_df_chain(const CurveConfiguration& config, const Chain& full,
                      int prefix_len, const AdjointParams& params) {
  Chain sub;
  sub.curve_indices.assign(full.curve_indices.begin(),
                           full.curve_indices.begin() + prefix_len);
  sub.hj = hj_sequences(std::vector<long long>(full.hj.e.begin(),
                                               full.hj.e.begin() + prefix_len));
  DFChain out;
  out.chain = std::move(sub);
  out.d_dots = chain_d_dots(config, out.chain, params);
  out.m_coeffs = m_d_divisor(out.chain.hj, out.d_dots);
  for (int k = 0; k < prefix_len; ++k)
    out.m_divisor.set(out.chain.curve_indices[static_cast<std::size_t>(k)],
                      out.m_coeffs(k));
  return out;
}

}  // namespace

std::vector<DFChain> maximal_df_chains(const CurveConfiguration& config,
                                       const AdjointParams& params) {
  std::vector<DFChain> out;
  for (const Chain& full : find_f_chains(config)) {
    const Vec d = chain_d_dots(config, full, params);
    // Longest leading sub-chain with sum_{k<=t} mu_k D.Gamma_k < 1. The mu
    // sequence of a leading sub-chain coincides with the full chain's.
    Rat s(0);
    int t = 0;
    while (t < full.length()) {
      const Rat next = s + Rat::of(full.hj.mu[static_cast<std::size_t>(t) + 1], 1) * d(t);
      if (!(next < Rat(1))) break;
      s = next;
      ++t;
    }
    if (t == 0) continue;
    DFChain df = make_df_chain(config, full, t, params);
    if (t < full.length()) {
      // No-extension cross-check: appending Gamma_{t+1} must fail the
      // D.Gamma < M(D,Theta_t).Gamma pairing test.
      const int next_curve = full.curve_indices[static_cast<std::size_t>(t)];
      const Rat pairing = intersection(config, df.m_divisor, next_curve);
      assert(!(d(t) < pairing));
      (void)pairing;
      (void)next_curve;
    }
    out.push_back(std::move(df));
  }
  return out;
}

Rat theta_chain(const CurveConfiguration& config, int curve, const DFChain& chain,
                const AdjointParams& params) {
  if (chain.chain.contains(curve))
    throw precondition_error("theta is undefined for a component of the chain");
  int first_contact = -1;  // 1-based position of the first chain curve met by C
  for (int k = 0; k < chain.chain.length(); ++k) {
    if (config.inter(curve, chain.chain.curve_indices[static_cast<std::size_t>(k)]) > 0) {
      first_contact = k + 1;
      break;
    }
  }
  if (first_contact < 0) return Rat(0);

  Rat partial(0);
  for (int k = 1; k <= first_contact; ++k)
    partial += Rat::of(chain.chain.hj.mu[static_cast<std::size_t>(k)], 1) *
               chain.d_dots(k - 1);
  const Rat mu_m = Rat::of(chain.chain.hj.mu[static_cast<std::size_t>(first_contact)], 1);
  const Rat contact_mult =
      Rat(config.inter(curve, chain.chain.curve_indices[static_cast<std::size_t>(
                                  first_contact - 1)]));
  (void)params;
  return (Rat(1) - partial) / (mu_m * contact_mult);
}

Rat theta_index(const CurveConfiguration& config, int curve,
                const AdjointParams& params, const std::vector<DFChain>& chains) {
  for (const DFChain& c : chains)
    if (c.chain.contains(curve))
      throw precondition_error("theta index is undefined for '" +
                               config.curve(curve).id +
                               "': it is a component of a maximal chain");
  Rat best(0);
  for (const DFChain& c : chains) {
    const Rat t = theta_chain(config, curve, c, params);
    if (t > best) best = t;
  }
  return best;
}

Rat theta_index(const CurveConfiguration& config, int curve,
                const AdjointParams& params) {
  return theta_index(config, curve, params, maximal_df_chains(config, params));
}

std::vector<QDivisor> subchain_ladder(const CurveConfiguration& config,
                                      const DFChain& chain,
                                      const AdjointParams& params) {
  std::vector<QDivisor> out;
  for (int t = 1; t <= chain.chain.length(); ++t)
    out.push_back(make_df_chain(config, chain.chain, t, params).m_divisor);
  return out;
}

}  // namespace folzar

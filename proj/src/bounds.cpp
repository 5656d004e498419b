#include "folzar/bounds.hpp"

namespace folzar {

namespace {

Rat delta_kf(const CurveConfiguration& config, const AdjointParams& params) {
  Rat total(0);
  for (int i = 0; i < config.size(); ++i) {
    const Rat a = params.delta_of(config, i);
    if (!a.is_zero()) total += a * Rat(config.curve(i).kf_dot);
  }
  return total;
}

Rat delta_kx(const CurveConfiguration& config, const AdjointParams& params) {
  Rat total(0);
  for (int i = 0; i < config.size(); ++i) {
    const Rat a = params.delta_of(config, i);
    if (!a.is_zero()) total += a * Rat(config.kx_dot(i));
  }
  return total;
}

QDivisor delta_divisor(const CurveConfiguration& config, const AdjointParams& params) {
  QDivisor d;
  for (int i = 0; i < config.size(); ++i) {
    const Rat a = params.delta_of(config, i);
    if (!a.is_zero()) d.set(i, a);
  }
  return d;
}

}  // namespace

AmbientPairings ambient_positive_part(const CurveConfiguration& config,
                                      const AdjointParams& params,
                                      const QDivisor& negative) {
  const AmbientProducts& amb = config.globals().ambient;
  std::string missing;
  if (!amb.kf_self) missing = "kf_self";
  if (!amb.kf_kx) missing += missing.empty() ? "kf_kx" : ", kf_kx";
  if (!missing.empty())
    throw missing_data_error("ambient products required but not declared: " + missing);

  const Rat kf2 = *amb.kf_self;
  const Rat kfkx = *amb.kf_kx;
  const Rat kx2 = Rat(config.globals().kx_self);
  const Rat eps = params.epsilon;

  const QDivisor delta = delta_divisor(config, params);
  const Rat dkf = delta_kf(config, params);
  const Rat dkx = delta_kx(config, params);
  const Rat delta2 = intersection(config, delta, delta);

  // (K_F + Delta + eps K_X)^2 expanded through the declared products.
  const Rat adjoint_self = kf2 + Rat(2) * dkf + Rat(2) * eps * kfkx + delta2 +
                           Rat(2) * eps * dkx + eps * eps * kx2;

  // (K_F + D) . N and K_X . N live entirely inside the configuration.
  Rat adjoint_dot_n(0);
  Rat kx_dot_n(0);
  for (const auto& [i, coeff] : negative.entries()) {
    adjoint_dot_n += coeff * adjoint_dot(config, params, i);
    kx_dot_n += coeff * Rat(config.kx_dot(i));
  }

  AmbientPairings out;
  out.p_self = adjoint_self - adjoint_dot_n;  // P.N = 0, so P^2 = (K_F+D).P
  out.p_kx = kfkx + dkx + eps * kx2 - kx_dot_n;
  return out;
}

int128 integrality_index(const CurveConfiguration& config, const AdjointParams& params,
                         const QDivisor& negative) {
  std::vector<Rat> values;
  values.push_back(params.epsilon);
  for (int i = 0; i < config.size(); ++i) {
    const Rat a = params.delta_of(config, i);
    if (!a.is_zero()) values.push_back(a);
  }
  for (const auto& [i, coeff] : negative.entries()) values.push_back(coeff);
  return denominator_lcm(values.begin(), values.end());
}

int128 alpha_bound(const Rat& a_self, const Rat& a_kx) {
  if (!a_self.is_positive())
    throw precondition_error("alpha requires A^2 > 0 (the adjoint class must be big)");
  const Rat value = (a_kx + Rat(2)) * (a_kx + Rat(2)) / (Rat(4) * a_self) +
                    (Rat(9) * a_self + Rat(6) * a_kx) / Rat(4);
  return value.floor();
}

Rat m_frak(const Rat& a_self, const Rat& a_kx, const Rat& kx_self, const Rat& t_dot_a,
           const Rat& t_dot_kx, const Rat& t_self) {
  if (!a_self.is_positive()) throw precondition_error("m_frak requires A^2 > 0");
  const Rat ka = a_kx - t_dot_a;                                  // (K_X - T).A
  const Rat kk = kx_self - Rat(2) * t_dot_kx + t_self;            // (K_X - T)^2
  return (ka + Rat(2)) * (ka + Rat(2)) / (Rat(4) * a_self) - kk / Rat(4);
}

Thresholds thresholds(int128 i_index, int128 alpha) {
  Thresholds t;
  t.vanishing = detail::checked_mul(i_index, detail::checked_add(alpha, 1));
  t.birational = detail::checked_mul(i_index, detail::checked_add(alpha, 3));
  return t;
}

Rat rr_dimension(int128 m, const Rat& vol, const Rat& kx_p, long long chi) {
  const Rat mr = Rat::of(m, 1);
  return mr * mr / Rat(2) * vol - mr / Rat(2) * kx_p + Rat(chi);
}

int128 n_frak(const Rat& eps, int128 i_index, const Rat& a_self) {
  if (!eps.is_positive()) throw precondition_error("n_frak requires epsilon > 0");
  if (!a_self.is_positive()) throw precondition_error("n_frak requires A^2 > 0");
  const Rat i = Rat::of(i_index, 1);
  const Rat three_ei = Rat(3) * eps * i;
  const Rat value = (three_ei + Rat(1)) * (three_ei + Rat(1)) /
                        (Rat(4) * eps * eps * i * i) * a_self +
                    Rat(1) / a_self + Rat(1) / (eps * i);
  return detail::checked_mul(i_index, value.floor());
}

bool hodge_check(const Rat& d1_self, const Rat& d2_self, const Rat& d12,
                 bool mix_positive_witness) {
  if (!mix_positive_witness)
    throw precondition_error(
        "the index inequality needs a positive-square witness assertion");
  return d1_self * d2_self <= d12 * d12;
}

Rat beta_ha(const Rat& d1_self, const Rat& d12) {
  if (!d1_self.is_positive()) throw precondition_error("beta requires D1^2 > 0");
  return Rat(2) * d12 / d1_self + Rat(1);
}

BoundsReport bounds_report(const CurveConfiguration& config,
                           const AdjointParams& params, const QDivisor& negative,
                           bool jihao_variant) {
  BoundsReport r;
  const AmbientPairings amb = ambient_positive_part(config, params, negative);
  r.p_self = amb.p_self;
  r.p_kx = amb.p_kx;
  r.i_index = integrality_index(config, params, negative);
  const Rat i = Rat::of(r.i_index, 1);
  r.a_self = i * i * r.p_self;
  r.a_kx = i * r.p_kx;
  if (!r.a_self.is_positive())
    throw precondition_error("adjoint class is not big: A^2 = " + r.a_self.str());

  r.alpha = alpha_bound(r.a_self, r.a_kx);
  r.m_frak_value = m_frak(r.a_self, r.a_kx, Rat(config.globals().kx_self));
  const Rat three_a_kx_sq =
      Rat(config.globals().kx_self) + Rat(9) * r.a_self + Rat(6) * r.a_kx;
  r.three_a_kx_nonneg = !(three_a_kx_sq.is_negative());
  r.alpha_dominates = Rat::of(r.alpha, 1) > r.m_frak_value - Rat(1);

  r.jihao_variant = jihao_variant;
  if (jihao_variant) {
    // Nef-variant vanishing: first multiple exponent beyond M(A,0).
    r.vanishing_threshold = detail::checked_mul(
        r.i_index, detail::checked_add(r.m_frak_value.floor(), 1));
    r.birational_threshold =
        detail::checked_mul(r.i_index, detail::checked_add(r.alpha, 3));
  } else {
    const Thresholds t = thresholds(r.i_index, r.alpha);
    r.vanishing_threshold = t.vanishing;
    r.birational_threshold = t.birational;
  }

  if (params.epsilon.is_positive())
    r.n_frak_value = n_frak(params.epsilon, r.i_index, r.a_self);

  r.rr_quadratic = r.p_self / Rat(2);
  r.rr_linear = -(r.p_kx / Rat(2));
  r.rr_constant = Rat(config.globals().chi);
  return r;
}

}  // namespace folzar

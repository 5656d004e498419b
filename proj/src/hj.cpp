#include "folzar/hj.hpp"

#include <cassert>

#include "folzar/errors.hpp"

namespace folzar {

HJData hj_sequences(const std::vector<long long>& e) {
  if (e.empty()) throw invalid_chain_error("Hirzebruch-Jung string must be non-empty");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 2)
      throw invalid_chain_error("Hirzebruch-Jung entry e_" + std::to_string(i + 1) +
                                " = " + std::to_string(e[i]) + " is below 2");
  }
  const int r = static_cast<int>(e.size());
  HJData hj;
  hj.e = e;
  hj.mu.assign(static_cast<std::size_t>(r) + 2, 0);
  hj.lambda.assign(static_cast<std::size_t>(r) + 2, 0);

  hj.mu[0] = 0;
  hj.mu[1] = 1;
  for (int i = 1; i <= r; ++i) {
    hj.mu[i + 1] = detail::checked_sub(detail::checked_mul(int128(e[i - 1]), hj.mu[i]),
                                       hj.mu[i - 1]);
  }
  hj.lambda[r + 1] = 0;
  hj.lambda[r] = 1;
  for (int i = r; i >= 1; --i) {
    hj.lambda[i - 1] = detail::checked_sub(
        detail::checked_mul(int128(e[i - 1]), hj.lambda[i]), hj.lambda[i + 1]);
  }
  hj.n = hj.lambda[0];
  assert(hj.n == hj.mu[r + 1]);
  return hj;
}

int128 hj_determinant(const std::vector<long long>& e, int k, int l) {
  // Continued-fraction determinant via the forward recurrence on the block.
  if (k > l) return 1;
  int128 prev = 1;      // empty block
  int128 cur = e[static_cast<std::size_t>(k) - 1];
  for (int i = k + 1; i <= l; ++i) {
    int128 next = detail::checked_sub(
        detail::checked_mul(int128(e[static_cast<std::size_t>(i) - 1]), cur), prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

Mat chain_gram_matrix(const HJData& hj) {
  const int r = hj.r();
  Mat g = Mat::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    g(i, i) = Rat(-hj.e[static_cast<std::size_t>(i)]);
    if (i + 1 < r) {
      g(i, i + 1) = Rat(1);
      g(i + 1, i) = Rat(1);
    }
  }
  return g;
}

Vec m_i_divisor(const HJData& hj, int i) {
  const int r = hj.r();
  if (i < 1 || i > r)
    throw precondition_error("m_i_divisor index " + std::to_string(i) +
                             " outside 1.." + std::to_string(r));
  Vec m(r);
  const Rat inv_n = Rat::of(1, hj.n);
  for (int k = 1; k <= r; ++k) {
    const int128 prod = (k <= i)
                            ? detail::checked_mul(hj.lambda[static_cast<std::size_t>(i)],
                                                  hj.mu[static_cast<std::size_t>(k)])
                            : detail::checked_mul(hj.mu[static_cast<std::size_t>(i)],
                                                  hj.lambda[static_cast<std::size_t>(k)]);
    m(k - 1) = Rat::of(prod, 1) * inv_n;
  }
  return m;
}

Vec e_divisor(const HJData& hj, const Vec& a) {
  const int r = hj.r();
  if (a.size() != r)
    throw precondition_error("e_divisor pairing vector has length " +
                             std::to_string(a.size()) + ", expected " +
                             std::to_string(r));
  // Prefix sums of mu_k a_k and suffix sums of lambda_k a_k keep this linear.
  std::vector<Rat> prefix(static_cast<std::size_t>(r) + 1, Rat(0));
  std::vector<Rat> suffix(static_cast<std::size_t>(r) + 2, Rat(0));
  for (int k = 1; k <= r; ++k)
    prefix[static_cast<std::size_t>(k)] =
        prefix[static_cast<std::size_t>(k) - 1] +
        Rat::of(hj.mu[static_cast<std::size_t>(k)], 1) * a(k - 1);
  for (int k = r; k >= 1; --k)
    suffix[static_cast<std::size_t>(k)] =
        suffix[static_cast<std::size_t>(k) + 1] +
        Rat::of(hj.lambda[static_cast<std::size_t>(k)], 1) * a(k - 1);

  Vec gamma(r);
  const Rat inv_n = Rat::of(1, hj.n);
  for (int i = 1; i <= r; ++i) {
    gamma(i - 1) = inv_n * (Rat::of(hj.lambda[static_cast<std::size_t>(i)], 1) *
                                prefix[static_cast<std::size_t>(i)] +
                            Rat::of(hj.mu[static_cast<std::size_t>(i)], 1) *
                                suffix[static_cast<std::size_t>(i) + 1]);
  }
  return gamma;
}

Rat m_d_last_coefficient(const HJData& hj, const Vec& d) {
  Rat s(0);
  for (int k = 1; k <= hj.r(); ++k)
    s += Rat::of(hj.mu[static_cast<std::size_t>(k)], 1) * d(k - 1);
  return (Rat(1) - s) / Rat::of(hj.n, 1);
}

Vec m_d_divisor(const HJData& hj, const Vec& d) {
  const int r = hj.r();
  if (d.size() != r)
    throw precondition_error("m_d_divisor pairing vector has length " +
                             std::to_string(d.size()) + ", expected " +
                             std::to_string(r));
  Vec a(r);
  a(0) = Rat(1) - d(0);
  for (int k = 1; k < r; ++k) a(k) = -d(k);
  Vec gamma = e_divisor(hj, a);
  assert(gamma(r - 1) == m_d_last_coefficient(hj, d));
  return gamma;
}

}  // namespace folzar

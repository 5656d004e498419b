#pragma once

#include <vector>

#include "folzar/linalg.hpp"
#include "folzar/rational.hpp"

namespace folzar {

// Integer data of a Hirzebruch-Jung string Gamma_1 + ... + Gamma_r with
// Gamma_i^2 = -e_i <= -2. The two companion sequences satisfy
//   lambda[i-1] - e_i*lambda[i] + lambda[i+1] = 0,
//   mu[i-1]     - e_i*mu[i]     + mu[i+1]     = 0,   i = 1..r,
// pinned by mu[1] = lambda[r] = 1, and n = lambda[0] = mu[r+1] is the
// determinant of the negated intersection matrix.
struct HJData {
  std::vector<long long> e;     // e_1..e_r, each >= 2
  int128 n = 1;
  std::vector<int128> lambda;   // indices 0..r+1
  std::vector<int128> mu;       // indices 0..r+1

  int r() const { return static_cast<int>(e.size()); }
};

// Builds the full sequence bundle for a string with the given e-vector.
// Throws invalid_chain_error when the vector is empty or has an entry < 2.
HJData hj_sequences(const std::vector<long long>& e);

// Negated-intersection determinant [e_k,...,e_l] of a contiguous block,
// the same quantity the lambda/mu recurrences produce at their endpoints.
int128 hj_determinant(const std::vector<long long>& e, int k, int l);

// Intersection (Gram) matrix of the string: -e_i diagonal, 1 on the
// off-diagonals of consecutive components.
Mat chain_gram_matrix(const HJData& hj);

// Coefficient vector of M_i: the unique divisor supported on the string with
// M_i . Gamma_i = -1 and M_i . Gamma_j = 0 for j != i. Entry k is
// lambda_i*mu_k/n for k <= i and mu_i*lambda_k/n for k > i. i is 1-based.
Vec m_i_divisor(const HJData& hj, int i);

// Coefficient vector gamma of E(A,Theta) for pairing data a_k = A.Gamma_k:
//   gamma_i = (lambda_i/n) sum_{k<=i} mu_k a_k + (mu_i/n) sum_{k>i} lambda_k a_k,
// so that E(A,Theta).Gamma_i = -a_i.
Vec e_divisor(const HJData& hj, const Vec& a);

// Coefficient vector of M(D,Theta) = E(-(K+D),Theta) for a string whose first
// component pairs to -1 with the foliation canonical class and the rest to 0;
// d_k = D.Gamma_k. The last coefficient always equals
// (1 - sum_k mu_k d_k) / n, which is re-derived and checked internally.
Vec m_d_divisor(const HJData& hj, const Vec& d);

// gamma_r of M(D,Theta) in closed form.
Rat m_d_last_coefficient(const HJData& hj, const Vec& d);

}  // namespace folzar

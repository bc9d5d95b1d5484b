#ifndef DUMONT_SEQUENCES_HPP
#define DUMONT_SEQUENCES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "dumont/errors.hpp"
#include "dumont/families.hpp"

namespace dumont {

BigInt binomial(int n, int k);
BigInt catalan(int n);

// Little Schroeder numbers: s_1 = s_2 = 1,
// s_m = -s_{m-1} + 2 * sum_{k=1}^{m-1} s_k s_{m-k}.
BigInt little_schroeder(int n);

// Ballot numbers (n-k)/(n+k) * binom(n+k, n) for 0 <= k <= n-1.
BigInt ballot(int n, int k);

// Generalized Catalan C(2;n): alternating sum (-1)^n + sum (-1)^{n-k} 2^k C_{k-1};
// equals the ballot/power-of-2 convolution for n >= 1.
BigInt gen_catalan2(int n);
BigInt gen_catalan2_convolution(int n);

// a_0 = a_1 = 1, a_2 = 3, a_n = 3a_{n-1} + 2a_{n-2}.
BigInt rec_2341_1423(int n);

// Nearest integer to (1/sqrt(17)) ((3+sqrt(17))/2)^n, guarded evaluation with
// decision margin 1e-6; throws PrecisionExhausted when the rounding decision
// is closer than the margin.
BigInt closed_form_2341_1423(int n);

// Checks a_n = sum_{k=0}^{n-1} b_k a_{n-1-k} for 1 <= n <= n_max with
// a = counts of D1(4213) and b = counts of D1(1342), both exhaustive.
bool verify_lemma_4213_1342(int n_max, const GenerationLimits& limits = {});

enum class SequenceId {
  Catalan,
  LittleSchroeder,
  PowersOfTwo,
  Rec2341_1423,
  GenCatalan2,
  Ballot,
  Genocchi,
};

}  // namespace dumont

#endif

#include "dumont/sequences.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace dumont {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan: n must be >= 0");
  return binomial(2 * n, n) / (n + 1);
}

BigInt little_schroeder(int n) {
  if (n < 1) throw DomainError("little_schroeder: n must be >= 1");
  std::vector<BigInt> s{0, 1, 1};  // s[0] unused
  for (int m = 3; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1; k < m; ++k) acc += s[static_cast<size_t>(k)] *
                                       s[static_cast<size_t>(m - k)];
    s.push_back(-s[static_cast<size_t>(m) - 1] + 2 * acc);
  }
  return s[static_cast<size_t>(n)];
}

BigInt ballot(int n, int k) {
  if (n < 1 || k < 0 || k >= n)
    throw DomainError("ballot: need 1 <= n and 0 <= k <= n-1");
  BigInt num = BigInt(n - k) * binomial(n + k, n);
  if (num % (n + k) != 0) throw InternalInconsistency("ballot not integral");
  return num / (n + k);
}

BigInt gen_catalan2(int n) {
  if (n < 0) throw DomainError("gen_catalan2: n must be >= 0");
  BigInt acc = (n % 2 == 0) ? 1 : -1;
  BigInt pow2 = 1;
  for (int k = 1; k <= n; ++k) {
    pow2 *= 2;
    const BigInt term = pow2 * catalan(k - 1);
    acc += ((n - k) % 2 == 0) ? term : -term;
  }
  return acc;
}

BigInt gen_catalan2_convolution(int n) {
  if (n == 0) return 1;  // the delta term
  BigInt acc = 0;
  BigInt pow2 = 1;
  for (int k = 0; k < n; ++k) {
    acc += ballot(n, k) * pow2;
    pow2 *= 2;
  }
  return acc;
}

BigInt rec_2341_1423(int n) {
  if (n < 0) throw DomainError("rec_2341_1423: n must be >= 0");
  if (n == 0 || n == 1) return 1;
  BigInt a = 1, b = 3;  // a_{1}, a_{2}
  for (int i = 3; i <= n; ++i) {
    BigInt c = 3 * b + 2 * a;
    a = b;
    b = c;
  }
  return b;
}

BigInt closed_form_2341_1423(int n) {
  if (n < 1 || n > 20)
    throw DomainError("closed_form_2341_1423: need 1 <= n <= 20");
  const long double r17 = sqrtl(17.0L);
  const long double base = (3.0L + r17) / 2.0L;
  long double v = 1.0L / r17;
  for (int i = 0; i < n; ++i) v *= base;
  const long double rounded = roundl(v);
  if (fabsl(v - rounded) > 0.5L - 1e-6L)
    throw PrecisionExhausted("rounding margin below 1e-6 at n = " +
                             std::to_string(n));
  BigInt out = 0;
  // reconstruct the integer digit by digit to stay exact for large n
  long double rest = rounded;
  std::string digits;
  if (rest == 0.0L) return 0;
  while (rest >= 1.0L) {
    const long double q = floorl(rest / 10.0L);
    const int d = static_cast<int>(rest - q * 10.0L);
    digits.insert(digits.begin(), static_cast<char>('0' + d));
    rest = q;
  }
  out = BigInt(digits);
  return out;
}

bool verify_lemma_4213_1342(int n_max, const GenerationLimits& limits) {
  const PatternSet p4213 = PatternSet::parse("4213");
  const PatternSet p1342 = PatternSet::parse("1342");
  std::vector<BigInt> a, b;
  for (int n = 0; n <= n_max; ++n) {
    a.push_back(count_avoiders(DumontKind::First, p4213, n, limits));
    b.push_back(count_avoiders(DumontKind::First, p1342, n, limits));
  }
  for (int n = 1; n <= n_max; ++n) {
    BigInt conv = 0;
    for (int k = 0; k <= n - 1; ++k)
      conv += b[static_cast<size_t>(k)] * a[static_cast<size_t>(n - 1 - k)];
    if (conv != a[static_cast<size_t>(n)]) return false;
  }
  return true;
}

}  // namespace dumont

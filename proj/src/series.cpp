#include "dumont/series.hpp"

#include <algorithm>

#include "dumont/sequences.hpp"

namespace dumont {

std::string rational_str(const Rational& r) {
  const BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

PowerSeries::PowerSeries(int order) {
  if (order < 1) throw DomainError("series order must be positive");
  coeffs_.assign(static_cast<size_t>(order), Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("series order must be positive");
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s[0] = c;
  return s;
}

PowerSeries PowerSeries::x(int order) {
  PowerSeries s(order);
  if (order > 1) s[1] = 1;
  return s;
}

namespace {
void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw OrderMismatch("series orders differ: " + std::to_string(a.order()) +
                        " vs " + std::to_string(b.order()));
}
}  // namespace

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (int k = 0; k < a.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (int k = 0; k < a.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (int i = 0; i < a.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < a.order(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

PowerSeries series_scale(const Rational& c, const PowerSeries& a) {
  PowerSeries out(a.order());
  for (int k = 0; k < a.order(); ++k) out[k] = c * a[k];
  return out;
}

PowerSeries series_invert(const PowerSeries& a) {
  if (a[0] == 0) throw ZeroConstantTerm("cannot invert: constant term is 0");
  PowerSeries out(a.order());
  out[0] = Rational(1) / a[0];
  for (int n = 1; n < a.order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -acc / a[0];
  }
  return out;
}

PowerSeries series_sqrt(const PowerSeries& a) {
  if (a[0] != 1)
    throw ConstantTermNotOne("series_sqrt requires constant term 1");
  // Newton iteration y <- (y + a/y) / 2; the number of correct coefficients
  // doubles each step, so ceil(log2(order)) steps suffice.
  PowerSeries y = PowerSeries::constant(1, a.order());
  int correct = 1;
  while (correct < a.order()) {
    y = series_scale(Rational(1, 2),
                     series_add(y, series_mul(a, series_invert(y))));
    correct *= 2;
  }
  return y;
}

PowerSeries series_shift_down(const PowerSeries& a) {
  if (a[0] != 0)
    throw InternalInconsistency(
        "division by x with nonzero constant term " + rational_str(a[0]));
  PowerSeries out(a.order());
  for (int k = 1; k < a.order(); ++k) out[k - 1] = a[k];
  return out;
}

namespace {

PowerSeries catalan_series(int order) {
  // From the recurrence c_0 = 1, c_{n} = sum c_k c_{n-1-k}; cheaper and
  // independent of the radical form, which the tests exercise separately.
  PowerSeries c(order);
  c[0] = 1;
  for (int n = 1; n < order; ++n) {
    Rational acc = 0;
    for (int k = 0; k < n; ++k) acc += c[k] * c[n - 1 - k];
    c[n] = acc;
  }
  return c;
}

PowerSeries f_closed_form(int order) {
  const PowerSeries one = PowerSeries::constant(1, order);
  const PowerSeries x = PowerSeries::x(order);
  // (3 - sqrt(1-8x)) / (2(1+x))
  const PowerSeries rad = series_sqrt(series_sub(one, series_scale(8, x)));
  const PowerSeries num = series_sub(PowerSeries::constant(3, order), rad);
  return series_mul(series_scale(Rational(1, 2), num),
                    series_invert(series_add(one, x)));
}

PowerSeries f_quadratic(int order) {
  // (x+1)F^2 - 3F + 2 = 0 with F(0) = 1, solved coefficient by coefficient:
  // the x^n coefficient gives f_n (2 f_0 - 3) = -(inner + [x^{n-1}]F^2).
  PowerSeries f(order);
  f[0] = 1;
  for (int n = 1; n < order; ++n) {
    Rational inner = 0;
    for (int k = 1; k < n; ++k) inner += f[k] * f[n - k];
    Rational xf2 = 0;
    for (int k = 0; k <= n - 1; ++k) xf2 += f[k] * f[n - 1 - k];
    f[n] = -(inner + xf2) / (2 * f[0] - 3);
  }
  return f;
}

}  // namespace

std::vector<Rational> gf_coefficients(GfId id, int order) {
  if (order < 1) throw DomainError("order must be positive");
  // guard order: C and H divide by x once, losing the top coefficient
  const int work = order + 2;
  const PowerSeries one = PowerSeries::constant(1, work);
  const PowerSeries x = PowerSeries::x(work);
  PowerSeries out(work);

  switch (id) {
    case GfId::C:
      out = catalan_series(work);
      break;
    case GfId::F: {
      const PowerSeries a = f_closed_form(work);
      const PowerSeries b = f_quadratic(work);
      for (int k = 0; k + 1 < work; ++k)
        if (a[k] != b[k])
          throw InternalInconsistency("F routes disagree at order " +
                                      std::to_string(k));
      out = a;
      break;
    }
    case GfId::G: {
      const PowerSeries c = catalan_series(work);
      const PowerSeries oc = series_mul(series_add(one, x), c);
      out = series_mul(
          series_sub(series_scale(2, one), oc),
          series_invert(series_sub(series_sub(series_scale(2, one), x), oc)));
      break;
    }
    case GfId::H: {
      const PowerSeries c = catalan_series(work);
      const PowerSeries xc = series_mul(x, c);
      const PowerSeries rad = series_sub(series_sub(one, xc), series_scale(5, x));
      const PowerSeries num = series_sub(series_add(one, xc), series_sqrt(rad));
      out = series_mul(
          series_shift_down(num),
          series_invert(series_scale(2, series_add(one, c))));
      break;
    }
    case GfId::s: {
      // (1 + x - sqrt(1 - 6x + x^2)) / 4
      const PowerSeries rad = series_sqrt(series_add(
          series_sub(one, series_scale(6, x)), series_mul(x, x)));
      out = series_scale(Rational(1, 4), series_sub(series_add(one, x), rad));
      break;
    }
    default:
      throw UnknownSeries("unknown generating function id");
  }
  return std::vector<Rational>(out.coefficients().begin(),
                               out.coefficients().begin() + order);
}

GfId gf_from_string(const std::string& name) {
  if (name == "C") return GfId::C;
  if (name == "F") return GfId::F;
  if (name == "G") return GfId::G;
  if (name == "H") return GfId::H;
  if (name == "s") return GfId::s;
  throw UnknownSeries("unknown generating function '" + name + "'");
}

}  // namespace dumont

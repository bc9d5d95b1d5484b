#ifndef DUMONT_SERIES_HPP
#define DUMONT_SERIES_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dumont/errors.hpp"
#include "dumont/families.hpp"

namespace dumont {

// Exact rational coefficients. boost::multiprecision keeps the value reduced
// with a positive denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& r);  // "p/q", integers bare

// Truncated formal power series over Rational. The coefficient vector always
// has exactly `order` entries (coefficients of x^0 .. x^{order-1}); arithmetic
// never extends precision silently.
class PowerSeries {
 public:
  explicit PowerSeries(int order);  // zero series
  PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, int order);
  static PowerSeries x(int order);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int k) const {
    return coeffs_[static_cast<size_t>(k)];
  }
  Rational& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_scale(const Rational& c, const PowerSeries& a);
// Multiplicative inverse; requires nonzero constant term.
PowerSeries series_invert(const PowerSeries& a);
// Square root with constant term 1 by Newton iteration on formal series.
PowerSeries series_sqrt(const PowerSeries& a);
// Divide by x: the constant term must vanish, anything else signals a bug in
// the construction of the numerator. The top coefficient becomes unreliable,
// so callers work at a guard order.
PowerSeries series_shift_down(const PowerSeries& a);

enum class GfId { C, F, G, H, s };

// First `order` Taylor coefficients of the named generating function, exact.
// F is built by two independent routes (closed form via series_sqrt and the
// quadratic (x+1)F^2 - 3F + 2 = 0 solved coefficientwise) that must agree.
std::vector<Rational> gf_coefficients(GfId id, int order);

GfId gf_from_string(const std::string& name);  // "C","F","G","H","s"

}  // namespace dumont

#endif

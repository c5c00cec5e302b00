#include "onepoint/laurent.hpp"

namespace onepoint {

LaurentSeries laurent_expand(const K& f, long order) {
  if (f.zero()) return LaurentSeries::zero_truncated(order);
  const PolyQ& num = f.num();
  const PolyQ& den = f.den();
  long vn = num.valuation();
  long vd = den.valuation();
  long val = vn - vd;
  long len = order - val;
  if (len <= 0) return LaurentSeries::zero_truncated(order);

  // Strip h^v factors so the denominator is a unit power series, then
  // divide term by term.
  std::vector<Rat> n(len, Rat(0));
  for (long i = 0; i < len; ++i) n[i] = num.coeff(vn + i);
  std::vector<Rat> d(len, Rat(0));
  for (long i = 0; i < len; ++i) d[i] = den.coeff(vd + i);

  std::vector<Rat> q(len, Rat(0));
  for (long i = 0; i < len; ++i) {
    Rat acc = n[i];
    for (long j = 1; j <= i; ++j) acc -= d[j] * q[i - j];
    q[i] = acc / d[0];
  }
  return LaurentSeries::truncated(val, std::move(q), order);
}

LaurentSeries exp_series(const Rat& c, long order) {
  if (order <= 0) return LaurentSeries::zero_truncated(order);
  std::vector<Rat> v(order, Rat(0));
  v[0] = 1;
  for (long i = 1; i < order; ++i) v[i] = v[i - 1] * c / Rat(i);
  return LaurentSeries::truncated(0, std::move(v), order);
}

}  // namespace onepoint

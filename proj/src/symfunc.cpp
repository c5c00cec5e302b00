#include "onepoint/symfunc.hpp"

namespace onepoint {

HomElem hom_and_elem(const WeightVector& q, long n_max) {
  if (n_max < 0) throw Error("symfunc/bad-arg", "n_max must be >= 0");
  HomElem he;
  he.h.reserve(n_max + 1);
  he.e.reserve(n_max + 1);
  he.h.push_back(LaurentSeries::constant(1));
  he.e.push_back(LaurentSeries::constant(1));
  long r = static_cast<long>(q.r());
  for (long n = 1; n <= n_max; ++n) {
    LaurentSeries hn, en;
    for (long k = 1; k <= std::min(n, r); ++k) {
      if (is_zero(q.at(k))) continue;
      // p_k = q_k / h contributes q_k * h^{-1} * previous.
      hn = hn + he.h[n - k].shifted(-1) * q.at(k);
      Rat se = (k % 2 == 1) ? q.at(k) : -q.at(k);
      en = en + he.e[n - k].shifted(-1) * se;
    }
    Rat inv_n(1, n);
    he.h.push_back(hn * inv_n);
    he.e.push_back(en * inv_n);
  }
  return he;
}

LaurentSeries hook_schur(const HookIndex& idx, const WeightVector& q) {
  HomElem he = hom_and_elem(q, idx.d);
  LaurentSeries s;
  for (long j = 1; j <= idx.k; ++j) {
    LaurentSeries term = he.h[idx.k - j] * he.e[idx.d - idx.k + j];
    s = (j % 2 == 1) ? s + term : s - term;
  }
  return s;
}

std::vector<LaurentSeries> hook_schur_all(long d, const HomElem& he) {
  if (static_cast<long>(he.h.size()) <= d)
    throw Error("symfunc/bad-arg", "h/e table too short for hooks of size d");
  // s_{(k,1^{d-k})} = h_{k-1} e_{d-k+1} - s_{(k-1,1^{d-k+1})}, k >= 2,
  // starting from s_{(1,1^{d-1})} = e_d.
  std::vector<LaurentSeries> s;
  s.reserve(d);
  s.push_back(he.e[d]);
  for (long k = 2; k <= d; ++k)
    s.push_back(he.h[k - 1] * he.e[d - k + 1] - s.back());
  return s;
}

Rat hook_schur_simple(const HookIndex& idx) {
  Rat b(binomial(idx.d - 1, idx.k - 1));
  return b / Rat(factorial(idx.d));
}

Rat principal_spec_derivative(const std::vector<long>& partition) {
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] <= 0)
      throw Error("symfunc/bad-partition", "parts must be positive");
    if (i > 0 && partition[i] > partition[i - 1])
      throw Error("symfunc/bad-partition", "parts must be weakly decreasing");
  }
  if (partition.empty()) return Rat(0);

  long cols = partition[0];
  std::vector<long> conj(cols, 0);
  for (long part : partition)
    for (long j = 0; j < part; ++j) ++conj[j];

  // prod over boxes of (s + content)/hook, as a polynomial in s; the
  // answer is its linear coefficient.
  PolyQ prod(1);
  PolyQ s = PolyQ::variable();
  Rat hook_den(1);
  for (size_t i = 0; i < partition.size(); ++i) {
    for (long j = 0; j < partition[i]; ++j) {
      long c = j - static_cast<long>(i);
      long hook = (partition[i] - 1 - j) + (conj[j] - 1 - static_cast<long>(i)) + 1;
      prod *= s + PolyQ(c);
      hook_den *= hook;
    }
  }
  return prod.coeff(1) / hook_den;
}

}  // namespace onepoint

#ifndef ONEPOINT_GENERATOR_HPP
#define ONEPOINT_GENERATOR_HPP

#include <string>
#include <vector>

#include "onepoint/laurent.hpp"
#include "onepoint/polynomial.hpp"
#include "onepoint/symfunc.hpp"

namespace onepoint {

// Weight generating function G(z): either a rational function with
// G(0) = 1 or exp(z).
struct WeightFunction {
  enum class Kind { rational, exponential };
  Kind kind = Kind::exponential;
  PolyQ num, den;  // in z, rational kind only

  static WeightFunction rational(PolyQ num, PolyQ den);
  static WeightFunction exponential();
  bool is_rational() const { return kind == Kind::rational; }
  // G(c * h) as an exact rational function of h.
  K at_content(const Rat& c) const;
  friend bool operator==(const WeightFunction& a, const WeightFunction& b) {
    return a.kind == b.kind && a.num == b.num && a.den == b.den;
  }
};

// One enumerative problem: a weight generating function plus a finite
// weight vector.  stride maps the catalog's own index to the series index
// (the d-th ribbon number lives at series index 2d, the d-th m-hypermap
// number at m*d; everything else is at stride 1).
struct ProblemSpec {
  WeightFunction G;
  WeightVector q;
  std::string name;
  std::string symbol = "n";
  long stride = 1;
};

// An exact value of Q(h) or a truncated Laurent series, depending on
// whether G is rational.
struct SeriesValue {
  bool exact = true;
  K rat;
  LaurentSeries ser;

  static SeriesValue from_rational(K v) {
    SeriesValue s;
    s.exact = true;
    s.rat = std::move(v);
    return s;
  }
  static SeriesValue from_series(LaurentSeries v) {
    SeriesValue s;
    s.exact = false;
    s.ser = std::move(v);
    return s;
  }
  LaurentSeries expand(long order) const {
    return exact ? laurent_expand(rat, order) : ser.truncate_to(order);
  }
  friend bool operator==(const SeriesValue& a, const SeriesValue& b) {
    if (a.exact != b.exact) return false;
    return a.exact ? a.rat == b.rat : a.ser == b.ser;
  }
};

// n(d) = sum_g n_g(d) h^{2g-1}.
struct OnePointSeries {
  long d = 0;
  SeriesValue value;
};

struct InvariantTable {
  ProblemSpec problem;
  long d_max = 0;
  long g_max = 0;
  std::vector<std::vector<Rat>> values;  // values[d-1][g]

  bool contains(long g, long d) const {
    return g >= 0 && g <= g_max && d >= 1 && d <= d_max;
  }
  const Rat& at(long g, long d) const {
    if (!contains(g, d))
      throw Error("generator/table-range", "entry outside table rectangle");
    return values[d - 1][g];
  }
};

// prod_{i=1}^{d} G((k-i)h): the content product over the hook (k, 1^{d-k}).
// For exponential G this is exp(d(2k-d-1)h/2), truncated at `order`.
SeriesValue content_product(const WeightFunction& G, long k, long d,
                            long order = 0);

// n(d) per the hook expansion of the partition function.  For exponential
// G the series is developed to order 2*g_max + d + 2.
OnePointSeries one_point_series(const ProblemSpec& p, long d, long g_max = 8);

// Same value for q = (1) via the binomial special case of the hook Schur
// evaluation; an independent computation path.
OnePointSeries one_point_series_simple(const WeightFunction& G, long d,
                                       long g_max = 8);

// Same value via the factored double sum n(d) = sum_k a_k b_{d-k}
// sum_{l<k} u_l v_{d-l}; rational G only.
OnePointSeries one_point_series_factored(const ProblemSpec& p, long d);

// n(1..n_max) in one pass over shared h/e and prefix-product tables.
std::vector<OnePointSeries> series_range(const ProblemSpec& p, long n_max,
                                         long g_max = 8);

InvariantTable invariants(const ProblemSpec& p, long d_max, long g_max);

// 1-part simple Hurwitz numbers h_g(d), closed form.
Rat closed_form_hurwitz(long d, long g);

// 1-part monotone Hurwitz numbers m_g(d); computes both published sums and
// insists they agree.
Rat closed_form_monotone(long d, long g);

// Coefficients of the principally specialized wave function: the x^d
// coefficient is h_d(q/h) prod_{k=1}^{d-1} G(kh).
std::vector<SeriesValue> wave_coefficients(const ProblemSpec& p, long d_max,
                                           long order = 24);

// Named problems: ribbon, m-hypermap(m), dessin, double-dessin(q...),
// bms(m), double-bms(m, q...), hurwitz, double-hurwitz(q...), monotone,
// double-monotone(q...).
ProblemSpec catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace onepoint

#endif

#ifndef ONEPOINT_SYMFUNC_HPP
#define ONEPOINT_SYMFUNC_HPP

#include <vector>

#include "onepoint/laurent.hpp"
#include "onepoint/rational.hpp"

namespace onepoint {

// Finite weight vector q = (q_1, ..., q_r).  Entries beyond r count as 0;
// trailing zeros are permitted and r records the declared length.
struct WeightVector {
  std::vector<Rat> q;

  WeightVector() = default;
  explicit WeightVector(std::vector<Rat> entries) : q(std::move(entries)) {}
  size_t r() const { return q.size(); }
  // 1-based access, zero beyond the declared length.
  Rat at(size_t k) const { return (k >= 1 && k <= q.size()) ? q[k - 1] : Rat(0); }
  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.q == b.q;
  }
};

// Hook partition (k, 1^{d-k}), 1 <= k <= d.
struct HookIndex {
  long d;
  long k;
  HookIndex(long d_, long k_) : d(d_), k(k_) {
    if (d < 1 || k < 1 || k > d)
      throw Error("symfunc/bad-hook", "hook index needs 1 <= k <= d");
  }
};

// h_0..h_max and e_0..e_max at p_k = q_k/h, computed by the Newton
// recurrences n h_n = sum_k p_k h_{n-k} and n e_n = sum_k (-1)^{k-1} p_k
// e_{n-k}.  Each entry is an exact Laurent polynomial with exponents in
// [-n, 0].
struct HomElem {
  std::vector<LaurentSeries> h;
  std::vector<LaurentSeries> e;
};
HomElem hom_and_elem(const WeightVector& q, long n_max);

// Hook Schur function s_{(k,1^{d-k})}(q_1/h, q_2/h, ...) as an exact
// Laurent polynomial, exponents in [-d, 0].
LaurentSeries hook_schur(const HookIndex& idx, const WeightVector& q);

// All of s_{(k,1^{d-k})} for k = 1..d at once (index k-1), sharing one
// h/e table.
std::vector<LaurentSeries> hook_schur_all(long d, const HomElem& he);

// s_{(k,1^{d-k})}(s, 0, 0, ...) = binom(d-1, k-1) s^d / d!; returns the
// rational factor attached to s^d.
Rat hook_schur_simple(const HookIndex& idx);

// [d/ds s_lambda(sx, sx^2, ...)]_{s=0} up to the x^d factor: the linear
// coefficient of the hook-content product prod (s + c(box))/h(box).
// Equals (-1)^{d-k}/d on hooks and 0 elsewhere.
Rat principal_spec_derivative(const std::vector<long>& partition);

}  // namespace onepoint

#endif

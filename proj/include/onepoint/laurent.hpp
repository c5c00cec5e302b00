#ifndef ONEPOINT_LAURENT_HPP
#define ONEPOINT_LAURENT_HPP

#include <limits>
#include <vector>

#include "onepoint/polynomial.hpp"
#include "onepoint/rational.hpp"

namespace onepoint {

// Laurent series in h over Q.  Exact ones are Laurent polynomials (every
// coefficient known); truncated ones carry an exclusive upper bound
// truncation() on the exponents that are known.
class LaurentSeries {
 public:
  static constexpr long kUnbounded = std::numeric_limits<long>::max();

  LaurentSeries() = default;

  static LaurentSeries zero_truncated(long order) {
    LaurentSeries s;
    s.trunc_ = order;
    return s;
  }
  static LaurentSeries exact(long valuation, std::vector<Rat> coeffs) {
    LaurentSeries s;
    s.val_ = valuation;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
  }
  static LaurentSeries truncated(long valuation, std::vector<Rat> coeffs,
                                 long order) {
    LaurentSeries s;
    s.val_ = valuation;
    s.c_ = std::move(coeffs);
    s.trunc_ = order;
    if (s.val_ + static_cast<long>(s.c_.size()) > order)
      s.c_.resize(order > s.val_ ? order - s.val_ : 0);
    s.normalize();
    return s;
  }
  static LaurentSeries monomial(const Rat& c, long e) {
    return exact(e, {c});
  }
  static LaurentSeries constant(const Rat& c) { return monomial(c, 0); }

  bool zero() const { return c_.empty(); }
  bool is_exact() const { return trunc_ == kUnbounded; }
  long truncation() const { return trunc_; }
  long valuation() const {
    if (zero()) throw Error("field-arith/zero-series", "valuation of zero series");
    return val_;
  }
  // Highest stored exponent + 1.
  long upper() const { return val_ + static_cast<long>(c_.size()); }

  Rat coeff(long e) const {
    if (!is_exact() && e >= trunc_)
      throw Error("field-arith/truncation",
                  "coefficient beyond truncation order");
    if (zero() || e < val_ || e >= upper()) return Rat(0);
    return c_[e - val_];
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    long trunc = std::min(a.trunc_, b.trunc_);
    if (a.zero() && b.zero()) return combine(0, {}, trunc);
    long lo = a.zero() ? b.val_ : (b.zero() ? a.val_ : std::min(a.val_, b.val_));
    long hi = std::max(a.zero() ? lo : a.upper(), b.zero() ? lo : b.upper());
    if (trunc != kUnbounded) hi = std::min(hi, trunc);
    std::vector<Rat> c(hi > lo ? hi - lo : 0, Rat(0));
    for (long e = lo; e < hi; ++e) {
      Rat v(0);
      if (!a.zero() && e >= a.val_ && e < a.upper()) v += a.c_[e - a.val_];
      if (!b.zero() && e >= b.val_ && e < b.upper()) v += b.c_[e - b.val_];
      c[e - lo] = v;
    }
    return combine(lo, std::move(c), trunc);
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (b * Rat(-1));
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const Rat& s) {
    LaurentSeries r(a);
    if (is_zero(s)) {
      r.c_.clear();
      r.val_ = 0;
      return r;
    }
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    long trunc = kUnbounded;
    if (!a.is_exact() && !b.zero()) trunc = std::min(trunc, a.trunc_ + b.val_);
    if (!b.is_exact() && !a.zero()) trunc = std::min(trunc, b.trunc_ + a.val_);
    if (!a.is_exact() && b.zero()) trunc = std::min(trunc, a.trunc_);
    if (!b.is_exact() && a.zero()) trunc = std::min(trunc, b.trunc_);
    if (a.zero() || b.zero()) return combine(0, {}, trunc);
    long lo = a.val_ + b.val_;
    long hi = a.upper() + b.upper() - 1;
    if (trunc != kUnbounded) hi = std::min(hi, trunc);
    std::vector<Rat> c(hi > lo ? hi - lo : 0, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        long e = a.val_ + static_cast<long>(i) + b.val_ + static_cast<long>(j);
        if (e >= hi) break;
        c[e - lo] += a.c_[i] * b.c_[j];
      }
    }
    return combine(lo, std::move(c), trunc);
  }

  // Multiplication by h^k.
  LaurentSeries shifted(long k) const {
    LaurentSeries r(*this);
    r.val_ += k;
    if (r.trunc_ != kUnbounded) r.trunc_ += k;
    return r;
  }
  LaurentSeries truncate_to(long order) const {
    LaurentSeries r(*this);
    r.trunc_ = std::min(r.trunc_, order);
    if (!r.c_.empty() && r.upper() > r.trunc_)
      r.c_.resize(r.trunc_ > r.val_ ? r.trunc_ - r.val_ : 0);
    r.normalize();
    return r;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.val_ == b.val_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) {
    return !(a == b);
  }

  // Exact Laurent polynomial -> rational function in h.
  K to_rational() const {
    if (!is_exact())
      throw Error("field-arith/truncation", "truncated series is not rational");
    if (zero()) return K(0);
    PolyQ num{std::vector<Rat>(c_)};
    if (val_ >= 0) return K(num.shifted_up(val_));
    return K(num, PolyQ::variable().shifted_up(-val_ - 1));
  }

 private:
  static LaurentSeries combine(long val, std::vector<Rat> c, long trunc) {
    LaurentSeries s;
    s.val_ = val;
    s.c_ = std::move(c);
    s.trunc_ = trunc;
    s.normalize();
    return s;
  }
  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && is_zero(c_[lead])) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + lead);
      val_ += static_cast<long>(lead);
    }
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    if (c_.empty()) val_ = 0;
  }

  long val_ = 0;
  std::vector<Rat> c_;
  long trunc_ = kUnbounded;
};

inline bool is_zero(const LaurentSeries& s) { return s.zero(); }

// Laurent expansion of a rational function of h at h = 0, with exponents in
// [valuation, order).
LaurentSeries laurent_expand(const K& f, long order);

// exp(c * h) as a series truncated at the given order.
LaurentSeries exp_series(const Rat& c, long order);

}  // namespace onepoint

#endif

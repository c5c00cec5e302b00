#ifndef ONEPOINT_POLYNOMIAL_HPP
#define ONEPOINT_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "onepoint/rational.hpp"

namespace onepoint {

// Dense univariate polynomial over a field F.  Coefficient i is the
// coefficient of x^i; the highest stored coefficient is nonzero (the zero
// polynomial stores nothing).  F must be constructible from long and
// support +, -, *, / and is_zero().
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long v) {
    if (v != 0) c_.push_back(F(v));
  }
  Polynomial(const F& v) {
    if (!is_zero(v)) c_.push_back(v);
  }
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial variable() {
    Polynomial p;
    p.c_ = {F(0), F(1)};
    return p;
  }

  const std::vector<F>& coeffs() const { return c_; }
  bool zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const F& leading() const {
    if (zero()) throw Error("field-arith/zero-poly", "leading of zero");
    return c_.back();
  }
  F coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return F(0);
    return c_[i];
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return Polynomial(std::move(c));
  }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& x : r.c_) x = F(0) - x;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.zero() || b.zero()) return Polynomial();
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const F& s) {
    Polynomial r(a);
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }
  friend Polynomial operator/(const Polynomial& a, const F& s) {
    Polynomial r(a);
    for (auto& x : r.c_) x = x / s;
    r.trim();
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // Horner evaluation into any ring T constructible from F.
  template <class T>
  T eval(const T& x) const {
    T r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + T(c_[i]);
    return r;
  }

  // p(q(x)) by Horner.
  Polynomial compose(const Polynomial& q) const {
    Polynomial r;
    for (size_t i = c_.size(); i-- > 0;) r = r * q + Polynomial(c_[i]);
    return r;
  }
  // p(x + k)
  Polynomial shift_arg(const F& k) const {
    Polynomial q;
    q.c_ = {k, F(1)};
    q.trim();
    return compose(q);
  }
  // p(s * x)
  Polynomial scale_arg(const F& s) const {
    Polynomial r(*this);
    F power(1);
    for (size_t i = 1; i < r.c_.size(); ++i) {
      power = power * s;
      r.c_[i] = r.c_[i] * power;
    }
    r.trim();
    return r;
  }
  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<F> c(c_.size() - 1, F(0));
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * F(static_cast<long>(i));
    return Polynomial(std::move(c));
  }
  // x^k * p
  Polynomial shifted_up(long k) const {
    if (zero() || k == 0) return *this;
    std::vector<F> c(c_.size() + k, F(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return Polynomial(std::move(c));
  }
  // Lowest index with nonzero coefficient (0 for the zero polynomial).
  long valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return static_cast<long>(i);
    return 0;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
bool is_zero(const Polynomial<F>& p) {
  return p.zero();
}

template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a,
                                               const Polynomial<F>& b) {
  if (b.zero()) throw Error("field-arith/div-zero", "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<F>(), a};
  std::vector<F> rem(a.coeffs());
  std::vector<F> quo(a.degree() - b.degree() + 1, F(0));
  const F& lb = b.leading();
  for (long i = a.degree(); i >= b.degree(); --i) {
    F q = rem[i] / lb;
    if (is_zero(q)) continue;
    quo[i - b.degree()] = q;
    for (long j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] = rem[i - b.degree() + j] - q * b.coeff(j);
  }
  return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

template <class F>
Polynomial<F> exact_div(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero())
    throw Error("field-arith/inexact-div", "expected exact polynomial division");
  return q;
}

template <class F>
Polynomial<F> monic(const Polynomial<F>& p) {
  if (p.zero()) return p;
  return p / p.leading();
}

// Monic gcd by the Euclidean algorithm; every remainder is normalized to
// keep nested-field coefficients small.
template <class F>
Polynomial<F> gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  Polynomial<F> x = monic(a), y = monic(b);
  while (!y.zero()) {
    auto r = divmod(x, y).second;
    x = y;
    y = monic(r);
  }
  return x;
}

// Rational-coefficient polynomials take the primitive-PRS route instead:
// integer pseudo-remainders with content stripping, which avoids the
// coefficient explosion of the naive remainder sequence.  The same applies
// one level up, with Q[h] contents.
Polynomial<Rat> gcd(const Polynomial<Rat>& a, const Polynomial<Rat>& b);
template <class F>
class RationalFunction;
Polynomial<RationalFunction<Rat>> gcd(const Polynomial<RationalFunction<Rat>>& a,
                                      const Polynomial<RationalFunction<Rat>>& b);

template <class F>
Polynomial<F> lcm(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.zero() || b.zero()) return Polynomial<F>();
  return monic(exact_div(a * b, gcd(a, b)));
}

// Rational function num/den over F: gcd-reduced, monic denominator.
template <class F>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long v) : num_(v), den_(1) {}
  RationalFunction(const F& v) : num_(v), den_(1) {}
  RationalFunction(const Polynomial<F>& p) : num_(p), den_(1) {}
  RationalFunction(Polynomial<F> num, Polynomial<F> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw Error("field-arith/div-zero", "zero denominator");
    canonicalize();
  }

  const Polynomial<F>& num() const { return num_; }
  const Polynomial<F>& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (b.zero()) throw Error("field-arith/div-zero", "rational function by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  RationalFunction inverse() const {
    if (zero()) throw Error("field-arith/div-zero", "inverse of zero");
    return RationalFunction(den_, num_);
  }
  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                            den_ * den_);
  }
  RationalFunction shift_arg(const F& k) const {
    return RationalFunction(num_.shift_arg(k), den_.shift_arg(k));
  }
  template <class T>
  T eval(const T& x) const {
    return num_.eval(x) / den_.eval(x);
  }

 private:
  void canonicalize() {
    if (num_.zero()) {
      den_ = Polynomial<F>(1);
      return;
    }
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const F lead = den_.leading();
    num_ = num_ / lead;
    den_ = den_ / lead;
  }
  Polynomial<F> num_, den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& f) {
  return f.zero();
}

// The towers used throughout: K = Q(h) is the ground field of the paper
// (coefficients rational in the genus parameter h), KPoly = K[n] holds
// recurrence coefficients, KK = K(n) is what eliminations work over.
using PolyQ = Polynomial<Rat>;            // Q[h] (also reused as Q[d], Q[x])
using K = RationalFunction<Rat>;          // Q(h)
using KPoly = Polynomial<K>;              // Q(h)[n]
using KK = RationalFunction<K>;           // Q(h)(n)
using PolyDH = Polynomial<PolyQ>;         // Q[h][d]

// Streaming sum of K values.  Keeps a running lcm denominator and reduces
// only when the value is read, which is far cheaper than canonicalizing
// every intermediate sum.
class KAccumulator {
 public:
  void add(const K& t) {
    if (t.zero()) return;
    PolyQ g = gcd(den_, t.den());
    PolyQ other = exact_div(t.den(), g);
    num_ = num_ * other + t.num() * exact_div(den_, g);
    den_ = den_ * other;
  }
  K value() const { return K(num_, den_); }

 private:
  PolyQ num_ = PolyQ(0);
  PolyQ den_ = PolyQ(1);
};

// Content of a rational-coefficient polynomial: positive rational c with
// p/c integer-primitive.  content(0) = 0.
inline Rat content(const PolyQ& p) {
  if (p.zero()) return Rat(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (is_zero(c)) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

inline PolyQ primitive_part(const PolyQ& p) {
  if (p.zero()) return p;
  return p / content(p);
}

// K value as a string for diagnostics, e.g. "(1)/(h^2-1)".
std::string poly_to_string(const PolyQ& p, const std::string& var);
std::string k_to_string(const K& v);

}  // namespace onepoint

#endif

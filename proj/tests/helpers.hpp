#ifndef ONEPOINT_TEST_HELPERS_HPP
#define ONEPOINT_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "onepoint/polynomial.hpp"

namespace onepoint::testing {

inline K h_var() { return K(PolyQ::variable()); }

inline PolyQ pq(std::vector<long> asc) {
  std::vector<Rat> c;
  c.reserve(asc.size());
  for (long v : asc) c.emplace_back(v);
  return PolyQ(std::move(c));
}

// q(h) with numerator/denominator coefficient lists, ascending.
inline K kfrac(std::vector<long> num, std::vector<long> den) {
  return K(pq(std::move(num)), pq(std::move(den)));
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }
  Rat rat() {
    long num = pick(-6, 6);
    long den = pick(1, 4);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  Rat rat_nonzero() {
    Rat r = rat();
    while (is_zero(r)) r = rat();
    return r;
  }
  PolyQ polyq(long max_deg) {
    std::vector<Rat> c(pick(0, max_deg) + 1, Rat(0));
    for (auto& x : c) x = rat();
    return PolyQ(std::move(c));
  }
  PolyQ polyq_nonzero(long max_deg) {
    PolyQ p = polyq(max_deg);
    while (p.zero()) p = polyq(max_deg);
    return p;
  }
  K k(long max_deg = 2) { return K(polyq(max_deg), polyq_nonzero(max_deg)); }
  K k_nonzero(long max_deg = 2) {
    K v = k(max_deg);
    while (v.zero()) v = k(max_deg);
    return v;
  }
  KK kk(long max_deg = 1) {
    std::vector<K> num(pick(0, max_deg) + 1, K(0)), den;
    for (auto& x : num) x = k(1);
    den.assign(pick(0, max_deg) + 1, K(0));
    for (auto& x : den) x = k(1);
    KPoly d{std::move(den)};
    while (d.zero()) d = KPoly(std::vector<K>{k_nonzero(1)});
    return KK(KPoly(std::move(num)), d);
  }
};

}  // namespace onepoint::testing

#endif

#include "onepoint/polynomial.hpp"

#include <sstream>
#include <vector>

namespace onepoint {

namespace {

std::vector<Int> primitive_int(const PolyQ& p) {
  Rat c = content(p);
  std::vector<Int> v;
  v.reserve(p.degree() + 1);
  for (long i = 0; i <= p.degree(); ++i) v.push_back(Rat(p.coeff(i) / c).get_num());
  return v;
}

void strip_content(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

// Pseudo-remainder of a by b over Z, content-stripped.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
  const Int& lb = b.back();
  long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) - 1 >= db) {
    Int top = a.back();
    for (auto& x : a) x *= lb;
    long shift = static_cast<long>(a.size()) - 1 - db;
    for (long i = 0; i <= db; ++i) a[shift + i] -= top * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
    strip_content(a);
  }
  return a;
}

}  // namespace

Polynomial<Rat> gcd(const Polynomial<Rat>& a, const Polynomial<Rat>& b) {
  if (a.zero()) return monic(b);
  if (b.zero()) return monic(a);
  std::vector<Int> x = primitive_int(a), y = primitive_int(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (true) {
    auto r = pseudo_rem(x, y);
    if (r.empty()) break;
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> out;
  out.reserve(y.size());
  for (const auto& v : y) out.emplace_back(v);
  return monic(PolyQ(std::move(out)));
}

namespace {

// Coefficients of p cleared to Q[h] and stripped of their common factor.
std::vector<PolyQ> primitive_k(const Polynomial<K>& p) {
  PolyQ den(1);
  for (const auto& c : p.coeffs()) den = lcm(den, c.den());
  std::vector<PolyQ> v;
  v.reserve(p.degree() + 1);
  for (const auto& c : p.coeffs())
    v.push_back(c.zero() ? PolyQ() : c.num() * exact_div(den, c.den()));
  PolyQ g;
  for (const auto& c : v)
    if (!c.zero()) g = gcd(g, c);
  if (g.degree() > 0)
    for (auto& c : v)
      if (!c.zero()) c = exact_div(c, g);
  return v;
}

void strip_content_k(std::vector<PolyQ>& v) {
  PolyQ g;
  for (const auto& c : v)
    if (!c.zero()) g = gcd(g, c);
  if (g.degree() > 0)
    for (auto& c : v)
      if (!c.zero()) c = exact_div(c, g);
}

std::vector<PolyQ> pseudo_rem_k(std::vector<PolyQ> a,
                                const std::vector<PolyQ>& b) {
  const PolyQ& lb = b.back();
  long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) - 1 >= db) {
    PolyQ top = a.back();
    for (auto& x : a) x *= lb;
    long shift = static_cast<long>(a.size()) - 1 - db;
    for (long i = 0; i <= db; ++i) a[shift + i] -= top * b[i];
    while (!a.empty() && a.back().zero()) a.pop_back();
    if (a.empty()) break;
    strip_content_k(a);
  }
  return a;
}

}  // namespace

Polynomial<K> gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.zero()) return monic(b);
  if (b.zero()) return monic(a);
  std::vector<PolyQ> x = primitive_k(a), y = primitive_k(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (true) {
    auto r = pseudo_rem_k(x, y);
    if (r.empty()) break;
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<K> out;
  out.reserve(y.size());
  for (const auto& v : y) out.emplace_back(v);
  return monic(Polynomial<K>(std::move(out)));
}

std::string poly_to_string(const PolyQ& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = 0; i <= p.degree(); ++i) {
    Rat c = p.coeff(i);
    if (is_zero(c)) continue;
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? "-" : "+");
    }
    Rat a = abs(c);
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string k_to_string(const K& v) {
  if (v.zero()) return "0";
  std::string n = poly_to_string(v.num(), "h");
  if (v.is_polynomial()) {
    Rat c = v.den().coeff(0);
    if (c == 1) return n;
    return "(" + n + ")/" + c.get_str();
  }
  return "(" + n + ")/(" + poly_to_string(v.den(), "h") + ")";
}

}  // namespace onepoint

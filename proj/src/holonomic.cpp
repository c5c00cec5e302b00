#include "onepoint/holonomic.hpp"

#include <algorithm>
#include <functional>

namespace onepoint {

namespace {

constexpr long kWindowSlack = 40;   // direct terms carried past the order
constexpr long kCertifyTerms = 25;  // indices the relation must hold on

Rat rat_gcd(const Rat& a, const Rat& b) {
  if (is_zero(a)) return abs(b);
  if (is_zero(b)) return abs(a);
  Int num, den;
  mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rat g(num, den);
  g.canonicalize();
  return g;
}

std::vector<KPoly> clear_denominators(const std::vector<KK>& combo) {
  KPoly den(1);
  for (const auto& c : combo) den = lcm(den, c.den());
  std::vector<KPoly> out;
  out.reserve(combo.size());
  for (const auto& c : combo) out.push_back(c.num() * exact_div(den, c.den()));
  return out;
}

// Relation residue sum_t p_t(m) w[m+t] over a value window starting at
// `offset`.
K residue_at(const std::vector<KPoly>& coeffs, const std::vector<K>& window,
             long offset, long m) {
  KAccumulator acc;
  for (size_t t = 0; t < coeffs.size(); ++t)
    acc.add(eval_at_index(coeffs[t], m) * window[m - offset + t]);
  return acc.value();
}

// Builds the closure output: stores the directly computed window as the
// initial segment and pins valid_from to the scanned validity start.
PRecurrence attach_and_certify(std::vector<KPoly> coeffs, long offset,
                               long min_valid, std::vector<K> window) {
  long r = static_cast<long>(coeffs.size()) - 1;
  long last_m = offset + static_cast<long>(window.size()) - 1 - r;
  long last_bad = min_valid - 1;
  for (long m = std::max(offset, min_valid); m <= last_m; ++m)
    if (!residue_at(coeffs, window, offset, m).zero()) last_bad = m;
  long vf = std::max(last_bad + 1, std::max(offset, min_valid));
  if (last_m - vf + 1 < kCertifyTerms)
    throw Error("holonomic/closure-certify",
                "closure output fails on directly computed terms");
  PRecurrence rec;
  rec.offset = offset;
  rec.valid_from = vf;
  rec.coeffs = std::move(coeffs);
  rec.initial = std::move(window);
  return normalize_recurrence(rec);
}

// w[s] expresses a_{m+s} over the basis a_m..a_{m+r-1} with coefficients
// rational in m.
std::vector<std::vector<KK>> shift_table(const PRecurrence& rec, long s_max) {
  long r = rec.order();
  std::vector<KK> psi(r);
  KK lead = KK(rec.coeffs[r]);
  for (long i = 0; i < r; ++i) psi[i] = -(KK(rec.coeffs[i]) / lead);
  std::vector<std::vector<KK>> w(s_max + 1, std::vector<KK>(r, KK(0)));
  for (long s = 0; s <= s_max; ++s) {
    if (s < r) {
      w[s][s] = KK(1);
      continue;
    }
    for (long i = 0; i < r; ++i) {
      KK coeff = psi[i].shift_arg(K(s - r));
      if (coeff.zero()) continue;
      for (long j = 0; j < r; ++j)
        if (!w[s - r + i][j].zero()) w[s][j] += coeff * w[s - r + i][j];
    }
  }
  return w;
}

PRecurrence zero_sequence_recurrence(long offset) {
  PRecurrence rec;
  rec.offset = offset;
  rec.valid_from = offset;
  rec.coeffs = {KPoly(0), KPoly(1)};
  rec.initial.assign(2, K(0));
  return rec;
}

std::vector<Rat> stirling2_row(long n) {
  std::vector<std::vector<Rat>> s(n + 1, std::vector<Rat>(n + 1, Rat(0)));
  s[0][0] = 1;
  for (long i = 1; i <= n; ++i)
    for (long k = 1; k <= i; ++k)
      s[i][k] = Rat(k) * s[i - 1][k] + s[i - 1][k - 1];
  return s[n];
}

}  // namespace

PRecurrence make_recurrence(long offset, long valid_from,
                            std::vector<KPoly> coeffs, std::vector<K> initial) {
  while (!coeffs.empty() && coeffs.back().zero()) coeffs.pop_back();
  if (coeffs.size() < 2)
    throw Error("holonomic/bad-recurrence", "order must be positive");
  PRecurrence rec;
  rec.offset = offset;
  rec.valid_from = std::max(offset, valid_from);
  rec.coeffs = std::move(coeffs);
  rec.initial = std::move(initial);
  if (auto bad = check_initial_terms(rec))
    throw Error("holonomic/bad-recurrence",
                "initial terms violate the recurrence at index " +
                    std::to_string(*bad));
  return rec;
}

K eval_at_index(const KPoly& p, long m) { return p.eval(K(Rat(m))); }

std::optional<long> check_initial_terms(const PRecurrence& rec) {
  long r = rec.order();
  long last_m = rec.offset + static_cast<long>(rec.initial.size()) - 1 - r;
  for (long m = rec.valid_from; m <= last_m; ++m)
    if (!residue_at(rec.coeffs, rec.initial, rec.offset, m).zero()) return m;
  return std::nullopt;
}

std::vector<K> unroll(const PRecurrence& rec, long n_max) {
  if (n_max < rec.offset)
    throw Error("holonomic/bad-arg", "n_max below the first index");
  long r = rec.order();
  std::vector<K> v;
  v.reserve(n_max - rec.offset + 1);
  for (long n = rec.offset; n <= n_max; ++n) {
    size_t idx = n - rec.offset;
    if (idx < rec.initial.size()) {
      v.push_back(rec.initial[idx]);
      continue;
    }
    long m = n - r;
    if (m < rec.valid_from)
      throw Error("holonomic/singular-index",
                  "no initial value for index " + std::to_string(n));
    K lead = eval_at_index(rec.coeffs[r], m);
    if (lead.zero())
      throw Error("holonomic/singular-index",
                  "leading coefficient vanishes at index " + std::to_string(m) +
                      " and no initial value covers index " + std::to_string(n));
    KAccumulator acc;
    for (long t = 0; t < r; ++t)
      acc.add(eval_at_index(rec.coeffs[t], m) * v[idx - r + t]);
    v.push_back(-(acc.value() / lead));
  }
  return v;
}

PRecurrence from_hypergeometric(const HypergeometricTerm& t) {
  if (t.ratio.zero())
    throw Error("holonomic/bad-recurrence", "hypergeometric ratio must be nonzero");
  PRecurrence rec;
  rec.offset = t.first_index;
  rec.valid_from = t.first_index;
  rec.coeffs = {-(t.ratio.num()), t.ratio.den()};
  rec.initial = {t.first_value};
  return normalize_recurrence(rec);
}

PRecurrence sum_closure(const PRecurrence& a, const PRecurrence& b) {
  long ra = a.order(), rb = b.order();
  auto wa = shift_table(a, ra + rb);
  auto wb = shift_table(b, ra + rb);
  DependenceScan<K> scan;
  for (long s = 0; s <= ra + rb; ++s) {
    std::vector<KK> v = wa[s];
    v.insert(v.end(), wb[s].begin(), wb[s].end());
    auto combo = scan.insert(std::move(v));
    if (combo.empty()) continue;
    auto coeffs = clear_denominators(combo);
    long off = std::max(a.offset, b.offset);
    long end = off + s + kWindowSlack;
    auto av = unroll(a, end);
    auto bv = unroll(b, end);
    std::vector<K> window;
    for (long m = off; m <= end; ++m)
      window.push_back(av[m - a.offset] + bv[m - b.offset]);
    return attach_and_certify(std::move(coeffs), off, off, std::move(window));
  }
  throw Error("holonomic/closure-certify", "no dependence found for sum");
}

PRecurrence hadamard_closure(const PRecurrence& a, const PRecurrence& b) {
  long ra = a.order(), rb = b.order();
  auto wa = shift_table(a, ra * rb);
  auto wb = shift_table(b, ra * rb);
  DependenceScan<K> scan;
  for (long s = 0; s <= ra * rb; ++s) {
    std::vector<KK> v(ra * rb, KK(0));
    for (long i = 0; i < ra; ++i) {
      if (wa[s][i].zero()) continue;
      for (long j = 0; j < rb; ++j)
        if (!wb[s][j].zero()) v[i * rb + j] = wa[s][i] * wb[s][j];
    }
    auto combo = scan.insert(std::move(v));
    if (combo.empty()) continue;
    auto coeffs = clear_denominators(combo);
    long off = std::max(a.offset, b.offset);
    long end = off + s + kWindowSlack;
    auto av = unroll(a, end);
    auto bv = unroll(b, end);
    std::vector<K> window;
    for (long m = off; m <= end; ++m)
      window.push_back(av[m - a.offset] * bv[m - b.offset]);
    return attach_and_certify(std::move(coeffs), off, off, std::move(window));
  }
  throw Error("holonomic/closure-certify", "no dependence found for Hadamard");
}

LinearODE rec_to_ode(const PRecurrence& rec) {
  long r = rec.order();
  // Operator sum_t x^{r-t} p_t(theta - t), theta = x d/dx, collected as
  // powers of theta with coefficients in K[x].
  std::vector<KPoly> theta_op;
  for (long t = 0; t <= r; ++t) {
    KPoly shifted = rec.coeffs[t].shift_arg(K(-t));
    for (long pw = 0; pw <= shifted.degree(); ++pw) {
      if (is_zero(shifted.coeff(pw))) continue;
      if (static_cast<long>(theta_op.size()) <= pw)
        theta_op.resize(pw + 1, KPoly(0));
      theta_op[pw] += KPoly(shifted.coeff(pw)).shifted_up(r - t);
    }
  }
  while (!theta_op.empty() && theta_op.back().zero()) theta_op.pop_back();
  long top = static_cast<long>(theta_op.size()) - 1;

  // theta^k = sum_i S(k,i) x^i d^i.
  std::vector<KPoly> q(top + 1, KPoly(0));
  for (long pw = 0; pw <= top; ++pw) {
    if (theta_op[pw].zero()) continue;
    auto s2 = stirling2_row(pw);
    for (long i = 0; i <= pw; ++i) {
      if (is_zero(s2[i])) continue;
      q[i] += theta_op[pw].shifted_up(i) * K(s2[i]);
    }
  }
  while (q.size() > 1 && q.back().zero()) q.pop_back();

  // Boundary residue rho = L(A); zero iff the operator is already
  // homogeneous for this sequence.
  long rho_len = r + rec.valid_from;
  std::vector<K> values;
  if (rho_len - 1 >= rec.offset) values = unroll(rec, rho_len - 1);
  auto value_at = [&](long k) -> K {
    if (k < rec.offset || k - rec.offset >= static_cast<long>(values.size()))
      return K(0);
    return values[k - rec.offset];
  };
  KPoly rho(0);
  for (long c = 0; c < rho_len; ++c) {
    K acc(0);
    for (long t = 0; t <= r; ++t)
      acc += rec.coeffs[t].eval(K(Rat(c - r))) * value_at(c - r + t);
    if (!acc.zero()) rho += KPoly(acc).shifted_up(c);
  }
  if (rho.zero()) {
    LinearODE ode;
    ode.coeffs = std::move(q);
    return ode;
  }
  // rho * (d/dx after L) - rho' * L kills the inhomogeneous part.
  KPoly drho = rho.derivative();
  std::vector<KPoly> hq(q.size() + 1, KPoly(0));
  for (size_t i = 0; i < q.size(); ++i) {
    hq[i] += rho * q[i].derivative() - drho * q[i];
    hq[i + 1] += rho * q[i];
  }
  while (hq.size() > 1 && hq.back().zero()) hq.pop_back();
  LinearODE ode;
  ode.coeffs = std::move(hq);
  return ode;
}

PRecurrence ode_to_rec(const LinearODE& ode) {
  long ord = ode.order();
  long j_max = 0;
  for (const auto& p : ode.coeffs) j_max = std::max(j_max, p.degree());
  std::vector<KPoly> d(ord + j_max + 1, KPoly(0));
  KPoly b = KPoly::variable();
  for (long i = 0; i <= ord; ++i) {
    for (long j = 0; j <= ode.coeffs[i].degree(); ++j) {
      K c = ode.coeffs[i].coeff(j);
      if (is_zero(c)) continue;
      long sigma = j_max - j + i;
      KPoly ff(1);
      for (long u = 0; u < i; ++u) ff *= b + KPoly(K(Rat(sigma - u)));
      d[sigma] += ff * c;
    }
  }
  while (d.size() > 1 && d.back().zero()) d.pop_back();
  long vf = 0;
  while (d.size() > 1 && d.front().zero()) {
    d.erase(d.begin());
    for (auto& p : d) p = p.shift_arg(K(-1));
    ++vf;
  }
  if (d.size() < 2)
    throw Error("holonomic/bad-recurrence", "ODE converts to an empty recurrence");
  PRecurrence rec;
  rec.offset = 0;
  rec.valid_from = vf;
  rec.coeffs = std::move(d);
  return rec;
}

PRecurrence cauchy_closure(const PRecurrence& a, const PRecurrence& b) {
  LinearODE oa = rec_to_ode(a);
  LinearODE ob = rec_to_ode(b);
  long ia = oa.order(), ib = ob.order();
  long off = a.offset + b.offset;
  if (ia == 0 || ib == 0) return zero_sequence_recurrence(off);

  std::vector<KK> phi_a(ia), phi_b(ib);
  for (long i = 0; i < ia; ++i)
    phi_a[i] = -(KK(oa.coeffs[i]) / KK(oa.coeffs[ia]));
  for (long j = 0; j < ib; ++j)
    phi_b[j] = -(KK(ob.coeffs[j]) / KK(ob.coeffs[ib]));

  long dims = ia * ib;
  std::vector<KK> w(dims, KK(0));
  w[0] = KK(1);
  DependenceScan<K> scan;
  std::vector<KK> combo;
  for (long s = 0; s <= dims; ++s) {
    combo = scan.insert(w);
    if (!combo.empty()) break;
    std::vector<KK> next(dims, KK(0));
    for (long i = 0; i < ia; ++i) {
      for (long j = 0; j < ib; ++j) {
        const KK& f = w[i * ib + j];
        if (f.zero()) continue;
        next[i * ib + j] += f.derivative();
        if (i + 1 < ia) {
          next[(i + 1) * ib + j] += f;
        } else {
          for (long i2 = 0; i2 < ia; ++i2)
            if (!phi_a[i2].zero()) next[i2 * ib + j] += f * phi_a[i2];
        }
        if (j + 1 < ib) {
          next[i * ib + j + 1] += f;
        } else {
          for (long j2 = 0; j2 < ib; ++j2)
            if (!phi_b[j2].zero()) next[i * ib + j2] += f * phi_b[j2];
        }
      }
    }
    w = std::move(next);
  }
  if (combo.empty())
    throw Error("holonomic/closure-certify", "no dependence found for Cauchy");

  LinearODE oc;
  oc.coeffs = clear_denominators(combo);
  while (oc.coeffs.size() > 1 && oc.coeffs.back().zero()) oc.coeffs.pop_back();
  PRecurrence shape = ode_to_rec(oc);

  long r = shape.order();
  long end = off + r + kWindowSlack;
  auto av = unroll(a, end - b.offset);
  auto bv = unroll(b, end - a.offset);
  std::vector<K> window;
  for (long m = off; m <= end; ++m) {
    KAccumulator acc;
    for (long k = a.offset; k <= m - b.offset; ++k)
      acc.add(av[k - a.offset] * bv[m - k - b.offset]);
    window.push_back(acc.value());
  }
  return attach_and_certify(std::move(shape.coeffs), off,
                            std::max(off, shape.valid_from), std::move(window));
}

PRecurrence normalize_recurrence(const PRecurrence& rec) {
  PRecurrence out = rec;
  // Common K-denominator.
  PolyQ den(1);
  for (const auto& p : out.coeffs)
    for (const auto& c : p.coeffs()) den = lcm(den, c.den());
  if (den.degree() > 0 || den.coeff(0) != 1) {
    K mult((den));
    for (auto& p : out.coeffs) p = p * mult;
  }
  // Content over Q[h]: common polynomial factor first, then the common
  // rational factor of the quotients.
  PolyQ g;
  for (const auto& p : out.coeffs)
    for (const auto& c : p.coeffs())
      if (!c.zero()) g = gcd(g, c.num());
  auto map_entries = [&](const PolyQ& divisor) {
    for (auto& p : out.coeffs) {
      std::vector<K> cs;
      for (long i = 0; i <= p.degree(); ++i)
        cs.push_back(p.coeff(i).zero()
                         ? K(0)
                         : K(exact_div(p.coeff(i).num(), divisor)));
      p = KPoly(std::move(cs));
    }
  };
  if (g.degree() > 0) map_entries(g);
  Rat cont(0);
  for (const auto& p : out.coeffs)
    for (const auto& c : p.coeffs())
      if (!c.zero()) cont = rat_gcd(cont, content(c.num()));
  if (!is_zero(cont) && cont != 1) map_entries(PolyQ(cont));
  // Common index factor, removed only when it provably has no integer root
  // in the asserted range we rely on.
  KPoly gn;
  for (const auto& p : out.coeffs) gn = gcd(gn, p);
  if (gn.degree() > 0) {
    bool root_free = true;
    for (long m = out.valid_from; m <= out.valid_from + out.order() + 64; ++m)
      if (eval_at_index(gn, m).zero()) {
        root_free = false;
        break;
      }
    if (root_free) {
      PRecurrence cand = out;
      for (auto& p : cand.coeffs) p = exact_div(p, gn);
      if (!check_initial_terms(cand)) out = std::move(cand);
    }
  }
  // Sign: positive leading rational of the leading coefficient.
  const KPoly& top = out.coeffs.back();
  const K& lead = top.coeff(top.degree());
  Rat lead_rat = lead.num().coeff(lead.num().degree());
  if (sgn(lead_rat) < 0)
    for (auto& p : out.coeffs) p = -p;
  return out;
}

std::vector<PRecurrence> guess_recurrence(const std::vector<K>& values,
                                          long offset, long order, long degree) {
  long cols = (order + 1) * (degree + 1);
  long rows = static_cast<long>(values.size()) - order;
  if (rows < cols + 3)
    throw Error("holonomic/insufficient-data",
                "not enough terms for the requested recurrence shape");
  Matrix<Rat> m(rows, std::vector<K>(cols));
  for (long rix = 0; rix < rows; ++rix) {
    long n = offset + rix;
    long col = 0;
    for (long i = 0; i <= degree; ++i) {
      Rat npow = rat_pow(Rat(n), i);
      for (long j = 0; j <= order; ++j)
        m[rix][col++] = K(npow) * values[rix + j];
    }
  }
  std::vector<PRecurrence> out;
  for (const auto& vec : nullspace<Rat>(m)) {
    std::vector<KK> combo(order + 1, KK(0));
    KPoly n = KPoly::variable();
    long col = 0;
    for (long i = 0; i <= degree; ++i) {
      KPoly npow(1);
      for (long u = 0; u < i; ++u) npow *= n;
      for (long j = 0; j <= order; ++j, ++col)
        if (!vec[col].zero()) combo[j] += KK(npow) * KK(vec[col]);
    }
    if (combo.back().zero()) continue;
    PRecurrence rec;
    rec.offset = offset;
    rec.valid_from = offset;
    rec.coeffs = clear_denominators(combo);
    rec.initial = values;
    // Keep only candidates holding on the whole window.
    long last_m = offset + static_cast<long>(values.size()) - 1 - order;
    long last_bad = offset - 1;
    for (long mm = offset; mm <= last_m; ++mm)
      if (!residue_at(rec.coeffs, values, offset, mm).zero()) last_bad = mm;
    if (last_m - last_bad < kCertifyTerms) continue;
    rec.valid_from = last_bad + 1;
    out.push_back(normalize_recurrence(rec));
  }
  return out;
}

bool right_divides(const PRecurrence& big, const PRecurrence& small,
                   std::vector<KK>* quotient) {
  long rb = big.order(), rs = small.order();
  if (rb < rs) return false;
  std::vector<KK> l(rb + 1), s(rs + 1);
  for (long t = 0; t <= rb; ++t) l[t] = KK(big.coeffs[t]);
  for (long t = 0; t <= rs; ++t) s[t] = KK(small.coeffs[t]);
  std::vector<KK> q(rb - rs + 1, KK(0));
  for (long k = rb - rs; k >= 0; --k) {
    if (l[k + rs].zero()) continue;
    KK factor = l[k + rs] / s[rs].shift_arg(K(k));
    q[k] = factor;
    for (long u = 0; u <= rs; ++u) l[k + u] -= factor * s[u].shift_arg(K(k));
  }
  for (long t = 0; t < rs; ++t)
    if (!l[t].zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

PRecurrence shrink_order(const PRecurrence& rec, long degree_max) {
  long r = rec.order();
  if (r <= 1) return rec;
  long end = rec.offset + r + kWindowSlack + 5;
  std::vector<K> values = unroll(rec, end);
  for (long r1 = 1; r1 < r; ++r1) {
    for (long deg = 0; deg <= degree_max; ++deg) {
      if (static_cast<long>(values.size()) - r1 < (r1 + 1) * (deg + 1) + 3)
        break;
      for (auto& cand : guess_recurrence(values, rec.offset, r1, deg))
        if (right_divides(rec, cand)) return cand;
    }
  }
  return rec;
}

}  // namespace onepoint

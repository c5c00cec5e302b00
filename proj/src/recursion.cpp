#include "onepoint/recursion.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace onepoint {

namespace {

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

KPoly dh_to_kpoly(const PolyDH& p) {
  std::vector<K> cs;
  for (long t = 0; t <= p.degree(); ++t) cs.emplace_back(p.coeff(t));
  return KPoly(std::move(cs));
}

PolyDH kpoly_to_dh(const KPoly& p) {
  std::vector<PolyQ> cs;
  for (long t = 0; t <= p.degree(); ++t) {
    const K& c = p.coeff(t);
    if (!c.zero() && c.den() != PolyQ(1))
      throw Error("recursion-engine/internal", "expected cleared coefficients");
    cs.push_back(c.num());
  }
  return PolyDH(std::move(cs));
}

PolyQ eval_dh_at(const PolyDH& c, long d) {
  PolyQ acc(0);
  for (long t = c.degree(); t >= 0; --t) acc = acc * Rat(d) + c.coeff(t);
  return acc;
}

// Relation residue at one d over exact series values.
K relation_residue(const HLevelRelation& rel,
                   const std::vector<OnePointSeries>& series, long d) {
  KAccumulator acc;
  for (long j = 0; j <= rel.span(); ++j) {
    if (rel.coeffs[j].zero()) continue;
    acc.add(K(eval_dh_at(rel.coeffs[j], d)) * series[d - j - 1].value.rat);
  }
  return acc.value();
}

// ---- mod-p rank prescreen for the rational diagnostic systems ----

constexpr unsigned long long kPrime = 2305843009213693951ull;  // 2^61 - 1

unsigned long long mulmod(unsigned long long a, unsigned long long b) {
  return static_cast<unsigned long long>(
      (static_cast<unsigned __int128>(a) * b) % kPrime);
}
unsigned long long powmod(unsigned long long b, unsigned long long e) {
  unsigned long long r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

std::optional<unsigned long long> rat_modp(const Rat& x) {
  unsigned long long den = mpz_fdiv_ui(x.get_den().get_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  unsigned long long num = mpz_fdiv_ui(x.get_num().get_mpz_t(), kPrime);
  return mulmod(num, powmod(den, kPrime - 2));
}

std::optional<size_t> rank_modp(const std::vector<std::vector<Rat>>& m) {
  size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<unsigned long long>> a(rows,
                                                 std::vector<unsigned long long>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      auto v = rat_modp(m[i][j]);
      if (!v) return std::nullopt;
      a[i][j] = *v;
    }
  size_t rank = 0;
  for (size_t pc = 0; pc < cols && rank < rows; ++pc) {
    size_t sel = rank;
    while (sel < rows && a[sel][pc] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    unsigned long long inv = powmod(a[rank][pc], kPrime - 2);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (a[i][pc] == 0) continue;
      unsigned long long f = mulmod(a[i][pc], inv);
      for (size_t j = pc; j < cols; ++j) {
        unsigned long long sub = mulmod(f, a[rank][j]);
        a[i][j] = (a[i][j] >= sub) ? a[i][j] - sub : a[i][j] + kPrime - sub;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

long GDRecursion::i_max() const {
  long m = 0;
  for (const auto& t : terms) m = std::max(m, t.i);
  return m;
}
long GDRecursion::j_max() const {
  long m = 0;
  for (const auto& t : terms) m = std::max(m, t.j);
  return m;
}
bool operator==(const GDRecursion& a, const GDRecursion& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t k = 0; k < a.terms.size(); ++k)
    if (a.terms[k].i != b.terms[k].i || a.terms[k].j != b.terms[k].j ||
        a.terms[k].p != b.terms[k].p)
      return false;
  return true;
}

HLevelRelation normalize_relation(HLevelRelation rel) {
  auto& cs = rel.coeffs;
  while (!cs.empty() && cs.back().zero()) cs.pop_back();
  if (cs.empty())
    throw Error("recursion-engine/empty-relation", "all coefficients vanish");
  // Shift away leading zero coefficients so n(d) itself appears.
  long front = 0;
  while (cs[front].zero()) ++front;
  if (front > 0) {
    std::vector<PolyDH> shifted;
    PolyDH x_plus = PolyDH::variable() + PolyDH(PolyQ(front));
    for (size_t j = front; j < cs.size(); ++j) shifted.push_back(cs[j].compose(x_plus));
    cs = std::move(shifted);
  }

  // Common factor in d over Q(h).
  KPoly gd;
  for (const auto& c : cs) gd = gcd(gd, dh_to_kpoly(c));
  if (gd.degree() > 0) {
    std::vector<KPoly> reduced;
    for (const auto& c : cs) reduced.push_back(exact_div(dh_to_kpoly(c), gd));
    PolyQ den(1);
    for (const auto& c : reduced)
      for (const auto& e : c.coeffs()) den = lcm(den, e.den());
    for (auto& c : reduced) c = c * K(den);
    cs.clear();
    for (const auto& c : reduced) cs.push_back(kpoly_to_dh(c));
  }

  // Content over Q[h], then the leftover rational content.
  PolyQ g;
  for (const auto& c : cs)
    for (long t = 0; t <= c.degree(); ++t)
      if (!c.coeff(t).zero()) g = gcd(g, c.coeff(t));
  auto divide_all = [&](const PolyQ& divisor) {
    for (auto& c : cs) {
      std::vector<PolyQ> q;
      for (long t = 0; t <= c.degree(); ++t)
        q.push_back(c.coeff(t).zero() ? PolyQ()
                                      : exact_div(c.coeff(t), divisor));
      c = PolyDH(std::move(q));
    }
  };
  if (g.degree() > 0) divide_all(g);
  Rat cont(0);
  for (const auto& c : cs)
    for (long t = 0; t <= c.degree(); ++t)
      if (!c.coeff(t).zero()) cont = rat_gcd(cont, content(c.coeff(t)));
  if (!is_zero(cont) && cont != 1) divide_all(PolyQ(cont));

  // Sign: first nonzero rational in (j, d-degree, h-degree) order positive.
  auto first_sign = [&]() {
    for (const auto& c : cs)
      for (long t = 0; t <= c.degree(); ++t) {
        const PolyQ& hc = c.coeff(t);
        if (!hc.zero()) return sgn(hc.coeff(hc.valuation()));
      }
    return 1;
  };
  if (first_sign() < 0)
    for (auto& cc : cs) cc = -cc;
  return rel;
}

GDRecursion normalize_gd(GDRecursion rec) {
  auto& terms = rec.terms;
  terms.erase(std::remove_if(terms.begin(), terms.end(),
                             [](const GDRecursion::Term& t) { return t.p.zero(); }),
              terms.end());
  if (terms.empty())
    throw Error("recursion-engine/empty-relation", "recursion has no terms");
  std::sort(terms.begin(), terms.end(),
            [](const GDRecursion::Term& a, const GDRecursion::Term& b) {
              return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
  PolyQ g;
  for (const auto& t : terms) g = gcd(g, t.p);
  if (g.degree() > 0)
    for (auto& t : terms) t.p = exact_div(t.p, g);
  Rat cont(0);
  for (const auto& t : terms) cont = rat_gcd(cont, content(t.p));
  if (!is_zero(cont) && cont != 1)
    for (auto& t : terms) t.p = t.p / cont;
  const PolyQ& first = terms.front().p;
  if (sgn(first.coeff(first.degree())) < 0)
    for (auto& t : terms) t.p = -t.p;
  return rec;
}

std::vector<HLevelRelation> guess(const std::vector<OnePointSeries>& series,
                                  long R, long D, long V) {
  if (R < 0 || D < 0 || V < 0)
    throw Error("recursion-engine/bad-arg", "guess needs R, D, V >= 0");
  long n = static_cast<long>(series.size());
  for (const auto& s : series)
    if (!s.value.exact)
      throw Error("recursion-engine/insufficient-data",
                  "guess needs exact rational-G series values");
  long cols = (R + 1) * (D + 1);
  if (n < cols + R + V)
    throw Error("recursion-engine/insufficient-data",
                "need N >= (R+1)(D+1) + R + V series values");

  Matrix<Rat> m;
  for (long d = R + 1; d <= n - V; ++d) {
    std::vector<K> row;
    row.reserve(cols);
    for (long i = 0; i <= D; ++i) {
      K dpow(rat_pow(Rat(d), i));
      for (long j = 0; j <= R; ++j) row.push_back(dpow * series[d - j - 1].value.rat);
    }
    m.push_back(std::move(row));
  }

  std::vector<HLevelRelation> out;
  for (const auto& vec : nullspace<Rat>(m)) {
    PolyQ den(1);
    for (const auto& a : vec) den = lcm(den, a.den());
    std::vector<PolyDH> cs(R + 1, PolyDH());
    long col = 0;
    for (long i = 0; i <= D; ++i)
      for (long j = 0; j <= R; ++j, ++col) {
        if (vec[col].zero()) continue;
        PolyQ c = vec[col].num() * exact_div(den, vec[col].den());
        cs[j] += PolyDH(c).shifted_up(i);
      }
    HLevelRelation rel;
    rel.coeffs = std::move(cs);
    rel = normalize_relation(std::move(rel));
    if (!verify(rel, series, R + 1, n)) out.push_back(std::move(rel));
  }
  return out;
}

std::optional<long> verify(const HLevelRelation& rel,
                           const std::vector<OnePointSeries>& series,
                           long d_lo, long d_hi) {
  long start = std::max(d_lo, rel.span() + 1);
  d_hi = std::min(d_hi, static_cast<long>(series.size()));
  for (long d = start; d <= d_hi; ++d)
    if (!relation_residue(rel, series, d).zero()) return d;
  return std::nullopt;
}

std::optional<long> verify(const HLevelRelation& rel, const ProblemSpec& p,
                           long d_lo, long d_hi) {
  if (!p.G.is_rational())
    throw Error("recursion-engine/bad-arg", "verify needs a rational G");
  return verify(rel, series_range(p, d_hi), d_lo, d_hi);
}

std::vector<GDRecursion> to_gd_form(const HLevelRelation& rel) {
  std::map<std::pair<long, long>, PolyQ> even, odd;
  for (long j = 0; j <= rel.span(); ++j) {
    const PolyDH& c = rel.coeffs[j];
    for (long t = 0; t <= c.degree(); ++t) {
      const PolyQ& hc = c.coeff(t);
      for (long u = 0; u <= hc.degree(); ++u) {
        Rat r = hc.coeff(u);
        if (is_zero(r)) continue;
        auto& target = (u % 2 == 0) ? even[{u / 2, j}] : odd[{u / 2, j}];
        target += PolyQ(r).shifted_up(t);
      }
    }
  }
  std::vector<GDRecursion> out;
  for (auto* cls : {&even, &odd}) {
    if (cls->empty()) continue;
    GDRecursion rec;
    for (auto& [ij, p] : *cls)
      rec.terms.push_back({ij.first, ij.second, std::move(p)});
    out.push_back(normalize_gd(std::move(rec)));
  }
  if (out.empty())
    throw Error("recursion-engine/empty-relation", "no parity class survives");
  return out;
}

HLevelRelation relation_from_recurrence(const PRecurrence& rec) {
  PRecurrence norm = normalize_recurrence(rec);
  long r = norm.order();
  PolyDH shift_back = PolyDH::variable() + PolyDH(PolyQ(Rat(-r)));
  HLevelRelation rel;
  rel.coeffs.reserve(r + 1);
  for (long j = 0; j <= r; ++j)
    rel.coeffs.push_back(kpoly_to_dh(norm.coeffs[r - j]).compose(shift_back));
  return normalize_relation(std::move(rel));
}

HLevelRelation from_gd_form(const GDRecursion& rec, long stride) {
  if (stride < 1) throw Error("recursion-engine/bad-arg", "stride must be >= 1");
  HLevelRelation rel;
  rel.coeffs.assign(stride * rec.j_max() + 1, PolyDH());
  for (const auto& t : rec.terms) {
    PolyQ scaled = t.p.scale_arg(Rat(1, stride));
    PolyDH lift;
    for (long u = 0; u <= scaled.degree(); ++u) {
      if (is_zero(scaled.coeff(u))) continue;
      lift += PolyDH(PolyQ(scaled.coeff(u)).shifted_up(2 * t.i)).shifted_up(u);
    }
    rel.coeffs[stride * t.j] += lift;
  }
  return normalize_relation(std::move(rel));
}

std::optional<std::pair<long, long>> first_violation(const GDRecursion& rec,
                                                     const InvariantTable& table,
                                                     long stride) {
  long jm = rec.j_max();
  for (long delta = jm + 1; stride * delta <= table.d_max; ++delta) {
    for (long g = 0; g <= table.g_max; ++g) {
      Rat acc(0);
      for (const auto& t : rec.terms) {
        if (g - t.i < 0) continue;
        acc += t.p.eval(Rat(delta)) * table.at(g - t.i, stride * (delta - t.j));
      }
      if (!is_zero(acc)) return std::make_pair(g, delta);
    }
  }
  return std::nullopt;
}

namespace {

std::optional<SearchResult> search_impl(const ProblemSpec& p, long R_max,
                                        long D_max, long N, long V, bool stop,
                                        std::vector<SearchProbe>* trace_out) {
  if (!p.G.is_rational())
    throw Error("recursion-engine/bad-arg",
                "search needs a rational weight generating function");
  auto series = series_range(p, N);
  std::vector<SearchProbe> trace;
  for (long R = 0; R <= R_max; ++R) {
    for (long D = 0; D <= D_max; ++D) {
      if (N < (R + 1) * (D + 1) + R + V) continue;
      // Within one grid point the whole nullspace is produced; pick the
      // relation with smallest d-degree, then smallest h-degree.
      std::vector<HLevelRelation> rels = guess(series, R, D, V);
      SearchProbe probe{R, D, static_cast<long>(rels.size()),
                        static_cast<long>(rels.size())};
      trace.push_back(probe);
      if (rels.empty() || !stop) continue;
      auto degree_of = [](const HLevelRelation& r) {
        long dd = 0, dh = 0;
        for (const auto& c : r.coeffs) {
          dd = std::max(dd, c.degree());
          for (long t = 0; t <= c.degree(); ++t)
            dh = std::max(dh, c.coeff(t).degree());
        }
        return std::make_pair(dd, dh);
      };
      size_t best = 0;
      for (size_t i = 1; i < rels.size(); ++i)
        if (degree_of(rels[i]) < degree_of(rels[best])) best = i;
      SearchResult res;
      res.relation = rels[best];
      res.gd = to_gd_form(res.relation);
      res.R = R;
      res.D = D;
      res.trace = std::move(trace);
      return res;
    }
  }
  if (trace_out) *trace_out = std::move(trace);
  return std::nullopt;
}

}  // namespace

std::optional<SearchResult> search_minimal(const ProblemSpec& p, long R_max,
                                           long D_max, long N, long V) {
  return search_impl(p, R_max, D_max, N, V, true, nullptr);
}

std::vector<SearchProbe> search_trace(const ProblemSpec& p, long R_max,
                                      long D_max, long N, long V) {
  std::vector<SearchProbe> trace;
  search_impl(p, R_max, D_max, N, V, false, &trace);
  return trace;
}

DiagnosticReport no_recursion_diagnostic(const InvariantTable& table,
                                         long R_max, long D_max, long H_max,
                                         long V) {
  long g_rows = table.g_max + 1;
  long u_max = (R_max + 1) * (D_max + 1) * (H_max + 1);
  if (g_rows * (table.d_max - R_max) < u_max + V)
    throw Error("recursion-engine/insufficient-table",
                "table must overdetermine the largest ansatz plus buffer");

  DiagnosticReport report;
  for (long R = 0; R <= R_max; ++R) {
    for (long D = 0; D <= D_max; ++D) {
      for (long H = 0; H <= H_max; ++H) {
        long unknowns = (R + 1) * (D + 1) * (H + 1);
        std::vector<std::vector<Rat>> m;
        for (long d = R + 1; d <= table.d_max; ++d) {
          for (long g = 0; g <= table.g_max; ++g) {
            std::vector<Rat> row;
            row.reserve(unknowns);
            for (long i = 0; i <= H; ++i)
              for (long j = 0; j <= R; ++j) {
                Rat base = (g - i < 0) ? Rat(0) : table.at(g - i, d - j);
                Rat dpow(1);
                for (long t = 0; t <= D; ++t) {
                  row.push_back(base * dpow);
                  dpow *= d;
                }
              }
            m.push_back(std::move(row));
          }
        }
        DiagnosticProbe probe{R, D, H, unknowns,
                              static_cast<long>(m.size()), 0};
        auto mod_rank = rank_modp(m);
        if (mod_rank && static_cast<long>(*mod_rank) == unknowns) {
          report.probes.push_back(probe);
          continue;
        }
        Matrix<Rat> mk(m.size());
        for (size_t r = 0; r < m.size(); ++r)
          for (const auto& x : m[r]) mk[r].emplace_back(x);
        auto ns = nullspace<Rat>(mk);
        probe.solutions = static_cast<long>(ns.size());
        report.probes.push_back(probe);
        if (ns.empty()) continue;
        // Solutions satisfy every table equation by construction.
        GDRecursion rec;
        for (long i = 0, col = 0; i <= H; ++i)
          for (long j = 0; j <= R; ++j) {
            PolyQ poly;
            for (long t = 0; t <= D; ++t, ++col) {
              const K& a = ns[0][col];
              if (a.zero()) continue;
              if (!a.is_polynomial() || a.num().degree() > 0)
                throw Error("recursion-engine/internal",
                            "rational ansatz produced a non-scalar");
              poly += PolyQ(a.num().coeff(0) / a.den().coeff(0)).shifted_up(t);
            }
            if (!poly.zero()) rec.terms.push_back({i, j, poly});
          }
        report.found = true;
        report.R = R;
        report.D = D;
        report.H = H;
        report.recursion = normalize_gd(std::move(rec));
        return report;
      }
    }
  }
  return report;
}

namespace {

PolyQ lin(long a, long b) { return PolyQ(std::vector<Rat>{Rat(a), Rat(b)}); }

PolyQ poly_from(std::vector<long> asc) {
  std::vector<Rat> c;
  c.reserve(asc.size());
  for (long v : asc) c.emplace_back(v);
  return PolyQ(std::move(c));
}

GDRecursion make_gd(std::vector<GDRecursion::Term> terms) {
  GDRecursion rec;
  rec.terms = std::move(terms);
  return normalize_gd(std::move(rec));
}

}  // namespace

std::vector<NamedRecursion> catalog_recursions() {
  std::vector<NamedRecursion> out;

  // (d+1) a_g(d) = 2(2d-1) a_g(d-1) + (2d-1)(d-1)(2d-3) a_{g-1}(d-2)
  out.push_back({"harer-zagier", "ribbon", "a", 2,
                 make_gd({{0, 0, lin(1, 1)},
                          {0, 1, -(lin(-1, 2) * Rat(2))},
                          {1, 2, -(lin(-1, 2) * lin(-1, 1) * lin(-3, 2))}})});

  // (d+1) b_g(d) = 2(2d-1) b_g(d-1) + (d-1)^2 (d-2) b_{g-1}(d-2)
  out.push_back({"do-norbury", "dessin", "b", 1,
                 make_gd({{0, 0, lin(1, 1)},
                          {0, 1, -(lin(-1, 2) * Rat(2))},
                          {1, 2, -(lin(-1, 1) * lin(-1, 1) * lin(-2, 1))}})});

  // 2d(2d+1) a3_g(d) = 3(3d-1)(3d-2) a3_g(d-1)
  //   + (3d-1)(3d-2)(9d^2-8d+2) a3_{g-1}(d-1)
  //   - (d-1)(3d-1)(3d-2)(3d-4)(3d-5)(6d-7) a3_{g-2}(d-2)
  //   + (d-1)(d-2)(3d-1)(3d-2)(3d-4)(3d-5)(3d-7)(3d-8) a3_{g-3}(d-3)
  {
    PolyQ f12 = lin(-1, 3) * lin(-2, 3);
    out.push_back(
        {"hypermap-3", "m-hypermap(3)", "a^3", 3,
         make_gd({{0, 0, lin(0, 2) * lin(1, 2)},
                  {0, 1, -(f12 * Rat(3))},
                  {1, 1, -(f12 * poly_from({2, -8, 9}))},
                  {2, 2, f12 * lin(-1, 1) * lin(-4, 3) * lin(-5, 3) * lin(-7, 6)},
                  {3, 3, -(f12 * lin(-1, 1) * lin(-2, 1) * lin(-4, 3) *
                           lin(-5, 3) * lin(-7, 3) * lin(-8, 3))}})});
  }

  // 2d(2d+1)(3d-4) b3_g(d) = 3(3d-1)(3d-2)(3d-4) b3_g(d-1)
  //   + (d-1)(3d-2)(9d^3-22d^2+14d-2) b3_{g-1}(d-1)
  //   - (d-1)^2(d-2)(18d^4-93d^3+172d^2-127d+26) b3_{g-2}(d-2)
  //   + (d-1)^2(d-2)^5(d-3)(3d-1) b3_{g-3}(d-3)
  {
    PolyQ d1 = lin(-1, 1), d2 = lin(-2, 1);
    out.push_back(
        {"bms-3", "bms(3)", "b^3", 1,
         make_gd({{0, 0, lin(0, 2) * lin(1, 2) * lin(-4, 3)},
                  {0, 1, -(lin(-1, 3) * lin(-2, 3) * lin(-4, 3) * Rat(3))},
                  {1, 1, -(d1 * lin(-2, 3) * poly_from({-2, 14, -22, 9}))},
                  {2, 2, d1 * d1 * d2 * poly_from({26, -127, 172, -93, 18})},
                  {3, 3, -(d1 * d1 * d2 * d2 * d2 * d2 * d2 * lin(-3, 1) *
                           lin(-1, 3))}})});
  }

  // d m_g(d) = 2(2d-3) m_g(d-1) + d(d-1)^2 m_{g-1}(d)
  out.push_back({"monotone", "monotone", "m", 1,
                 make_gd({{0, 0, lin(0, 1)},
                          {0, 1, -(lin(-3, 2) * Rat(2))},
                          {1, 0, -(lin(0, 1) * lin(-1, 1) * lin(-1, 1))}})});

  return out;
}

}  // namespace onepoint

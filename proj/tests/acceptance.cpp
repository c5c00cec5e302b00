// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (tolerances are zero unless a wall-clock bound is stated).
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "onepoint/demo.hpp"
#include "onepoint/generator.hpp"
#include "onepoint/io.hpp"
#include "onepoint/oracle.hpp"
#include "onepoint/recursion.hpp"

using namespace onepoint;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << name;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

PolyQ pq(std::vector<long> asc) {
  std::vector<Rat> c;
  for (long v : asc) c.emplace_back(v);
  return PolyQ(std::move(c));
}

const NamedRecursion& named(const std::string& name) {
  static auto cat = catalog_recursions();
  for (const auto& r : cat)
    if (r.name == name) return r;
  throw std::runtime_error("no catalog recursion " + name);
}

// ----- frozen figure data ------------------------------------------------

const std::map<std::pair<long, long>, long> kRibbonFigure = {
    {{1, 0}, 1},   {{2, 0}, 2},    {{2, 1}, 1},    {{3, 0}, 5},
    {{3, 1}, 10},  {{4, 0}, 14},   {{4, 1}, 70},   {{4, 2}, 21},
    {{5, 0}, 42},  {{5, 1}, 420},  {{5, 2}, 483},  {{6, 0}, 132},
    {{6, 1}, 2310}, {{6, 2}, 6468}, {{6, 3}, 1485}};

const std::map<std::pair<long, long>, Rat> kHurwitzFigure = {
    {{1, 0}, Rat(1)},        {{1, 1}, Rat(0)},         {{1, 2}, Rat(0)},
    {{2, 0}, Rat(1)},        {{2, 1}, Rat(1, 6)},      {{2, 2}, Rat(1, 120)},
    {{3, 0}, Rat(3, 2)},     {{3, 1}, Rat(9, 8)},      {{3, 2}, Rat(27, 80)},
    {{4, 0}, Rat(8, 3)},     {{4, 1}, Rat(16, 3)},     {{4, 2}, Rat(208, 45)},
    {{5, 0}, Rat(125, 24)},  {{5, 1}, Rat(3125, 144)}, {{5, 2}, Rat(15625, 384)}};

const std::map<std::pair<long, long>, long> kMonotoneFigure = {
    {{1, 0}, 1},  {{2, 0}, 1},   {{2, 1}, 1},   {{2, 2}, 1},
    {{3, 0}, 2},  {{3, 1}, 10},  {{3, 2}, 42},  {{4, 0}, 5},
    {{4, 1}, 70}, {{4, 2}, 735}, {{5, 0}, 14},  {{5, 1}, 420},
    {{5, 2}, 8778}};

// Double BMS-3 polynomials: (coefficient, exponents of q_1..q_5).
struct Monomial {
  long coeff;
  std::array<int, 5> e;
};
using QPoly = std::vector<Monomial>;
const std::map<std::pair<long, long>, QPoly> kBms3Figure = {
    {{1, 0}, {{1, {1, 0, 0, 0, 0}}}},
    {{2, 0}, {{1, {0, 1, 0, 0, 0}}, {2, {2, 0, 0, 0, 0}}}},
    {{2, 1}, {{1, {0, 1, 0, 0, 0}}}},
    {{3, 0}, {{1, {0, 0, 1, 0, 0}}, {6, {1, 1, 0, 0, 0}}, {5, {3, 0, 0, 0, 0}}}},
    {{3, 1}, {{8, {0, 0, 1, 0, 0}}, {12, {1, 1, 0, 0, 0}}, {1, {3, 0, 0, 0, 0}}}},
    {{3, 2}, {{3, {0, 0, 1, 0, 0}}}},
    {{4, 0},
     {{1, {0, 0, 0, 1, 0}},
      {8, {1, 0, 1, 0, 0}},
      {4, {0, 2, 0, 0, 0}},
      {28, {2, 1, 0, 0, 0}},
      {14, {4, 0, 0, 0, 0}}}},
    {{4, 1},
     {{30, {0, 0, 0, 1, 0}},
      {96, {1, 0, 1, 0, 0}},
      {34, {0, 2, 0, 0, 0}},
      {100, {2, 1, 0, 0, 0}},
      {10, {4, 0, 0, 0, 0}}}},
    {{4, 2},
     {{93, {0, 0, 0, 1, 0}},
      {88, {1, 0, 1, 0, 0}},
      {34, {0, 2, 0, 0, 0}},
      {16, {2, 1, 0, 0, 0}}}},
    {{4, 3}, {{20, {0, 0, 0, 1, 0}}}},
    {{5, 0},
     {{1, {0, 0, 0, 0, 1}},
      {10, {1, 0, 0, 1, 0}},
      {10, {0, 1, 1, 0, 0}},
      {45, {2, 0, 1, 0, 0}},
      {45, {1, 2, 0, 0, 0}},
      {120, {3, 1, 0, 0, 0}},
      {42, {5, 0, 0, 0, 0}}}},
    {{5, 1},
     {{80, {0, 0, 0, 0, 1}},
      {400, {1, 0, 0, 1, 0}},
      {280, {0, 1, 1, 0, 0}},
      {770, {2, 0, 1, 0, 0}},
      {560, {1, 2, 0, 0, 0}},
      {700, {3, 1, 0, 0, 0}},
      {70, {5, 0, 0, 0, 0}}}},
    {{5, 2},
     {{901, {0, 0, 0, 0, 1}},
      {1990, {1, 0, 0, 1, 0}},
      {1290, {0, 1, 1, 0, 0}},
      {1405, {2, 0, 1, 0, 0}},
      {1055, {1, 2, 0, 0, 0}},
      {380, {3, 1, 0, 0, 0}},
      {8, {5, 0, 0, 0, 0}}}},
    {{5, 3},
     {{1650, {0, 0, 0, 0, 1}},
      {1200, {1, 0, 0, 1, 0}},
      {820, {0, 1, 1, 0, 0}},
      {180, {2, 0, 1, 0, 0}},
      {140, {1, 2, 0, 0, 0}}}},
    {{5, 4}, {{248, {0, 0, 0, 0, 1}}}}};

Rat eval_qpoly(const QPoly& p, const std::array<Rat, 5>& q) {
  Rat total(0);
  for (const auto& m : p) {
    Rat term(m.coeff);
    for (int i = 0; i < 5; ++i)
      if (m.e[i] > 0) term *= rat_pow(q[i], m.e[i]);
    total += term;
  }
  return total;
}

// ----- criteria -----------------------------------------------------------

void criterion1() {
  auto t0 = Clock::now();
  std::ostringstream note;
  bool ok = true;

  InvariantTable ribbon = invariants(catalog("ribbon"), 12, 3);
  for (long d = 1; d <= 6; ++d)
    for (long g = 0; g <= 3; ++g) {
      auto it = kRibbonFigure.find({d, g});
      Rat expect(it == kRibbonFigure.end() ? 0 : it->second);
      ok = ok && ribbon.at(g, 2 * d) == expect;
    }

  InvariantTable hur = invariants(catalog("hurwitz"), 5, 2);
  for (const auto& [dg, v] : kHurwitzFigure)
    ok = ok && hur.at(dg.second, dg.first) == v;

  InvariantTable mono = invariants(catalog("monotone"), 5, 2);
  for (const auto& [dg, v] : kMonotoneFigure)
    ok = ok && mono.at(dg.second, dg.first) == Rat(v);
  // Flagged entries: some published tables list m_1(1) = m_2(1) = 1; no
  // factorization exists, so the exact value is 0 and 0 is what we report.
  ok = ok && mono.at(1, 1) == 0 && mono.at(2, 1) == 0;
  note << "d=1, g>=1 monotone entries reported as 0 (vacuous enumeration); ";

  const std::vector<std::pair<std::string, std::array<Rat, 5>>> points = {
      {"1,0,0,0,0", {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}},
      {"0,1,0,0,0", {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}},
      {"0,0,1,0,0", {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}},
      {"1,1,1,0,0", {Rat(1), Rat(1), Rat(1), Rat(0), Rat(0)}}};
  for (const auto& [qs, qv] : points) {
    InvariantTable t = invariants(catalog("double-bms(3," + qs + ")"), 5, 4);
    for (long d = 1; d <= 5; ++d)
      for (long g = 0; g <= 4; ++g) {
        auto it = kBms3Figure.find({d, g});
        Rat expect =
            it == kBms3Figure.end() ? Rat(0) : eval_qpoly(it->second, qv);
        ok = ok && t.at(g, d) == expect;
      }
  }

  double secs = seconds_since(t0);
  bool fast = secs < 10.0;
  note << "tables exact, " << secs << "s (< 10s required)";
  report(1, "table reproduction", ok && fast, note.str());
}

bool search_matches(const std::string& rec_name, long R_max, long D_max,
                    long N, double* secs) {
  const auto& entry = named(rec_name);
  ProblemSpec p = catalog(entry.preset);
  auto t0 = Clock::now();
  auto res = search_minimal(p, R_max, D_max, N);
  *secs = seconds_since(t0);
  if (!res || res->gd.size() != 1) return false;
  GDRecursion got = res->gd[0];
  for (auto& t : got.terms) {
    if (t.j % entry.stride != 0) return false;
    t.j /= entry.stride;
    t.p = t.p.scale_arg(Rat(1, entry.stride));
  }
  return normalize_gd(got) == entry.rec;
}

void criterion2() {
  std::ostringstream note;
  bool ok = true;
  double secs = 0;

  ok = ok && search_matches("harer-zagier", 4, 3, 30, &secs) && secs < 60.0;
  note << "ribbon " << secs << "s; ";
  ok = ok && search_matches("do-norbury", 2, 3, 22, &secs) && secs < 60.0;
  note << "dessin " << secs << "s; ";
  ok = ok && search_matches("monotone", 1, 3, 20, &secs) && secs < 60.0;
  note << "monotone " << secs << "s; ";

  InvariantTable hyp = invariants(catalog("m-hypermap(3)"), 36, 4);
  ok = ok && !first_violation(named("hypermap-3").rec, hyp, 3);
  InvariantTable bms = invariants(catalog("bms(3)"), 12, 4);
  ok = ok && !first_violation(named("bms-3").rec, bms, 1);
  note << "hypermap-3 and bms-3 recursions verified for d <= 12, g <= 4";
  report(2, "recursion recovery", ok, note.str());
}

void criterion3() {
  ClosureDemo demo = closure_demo_monotone();
  PRecurrence fin = normalize_recurrence(demo.final_rec);
  std::vector<KPoly> expect = {
      KPoly(std::vector<K>{K(-2), K(4)}),
      KPoly(std::vector<K>{K(-1), K(-1), K(pq({0, 0, 1})), K(pq({0, 0, 1}))})};
  bool ok = fin.coeffs == expect;
  bool gd_ok = demo.gd.size() == 1 && demo.gd[0] == named("monotone").rec;
  report(3, "closure pipeline", ok && gd_ok,
         "cauchy+hadamard output content-reduces to (-2+4d) m(d) + "
         "(-d-1+h^2 d^3+h^2 d^2) m(d+1) = 0; (g,d)-form matches the "
         "monotone recursion exactly");
}

void criterion4() {
  bool ok = true;
  InvariantTable hur = invariants(catalog("hurwitz"), 6, 3);
  InvariantTable mono = invariants(catalog("monotone"), 6, 3);
  for (long d = 1; d <= 6; ++d)
    for (long g = 0; g <= 3; ++g) {
      ok = ok && closed_form_hurwitz(d, g) == hur.at(g, d);
      // closed_form_monotone computes both published sums and throws if
      // they ever disagree.
      ok = ok && closed_form_monotone(d, g) == mono.at(g, d);
    }

  // The monotone product form carries one extra power of h relative to
  // n(d); the identity is checked up to that global normalization.
  bool product_ok = true;
  auto series = series_range(catalog("monotone"), 6);
  K h = K(PolyQ::variable());
  for (long d = 1; d <= 6; ++d) {
    Rat cat = Rat(factorial(2 * d - 2)) /
              (Rat(factorial(d)) * Rat(factorial(d - 1)));
    K prod(cat);
    for (long k = 1; k <= d - 1; ++k) {
      K factor = K(PolyQ(1), pq({1, -k})) * K(PolyQ(1), pq({1, k}));
      prod *= factor;
    }
    product_ok = product_ok && prod == series[d - 1].value.rat * h;
  }
  ok = ok && product_ok;

  for (long g : {1L, 2L}) {
    for (int which = 0; which < 2; ++which) {
      std::vector<Rat> seq;
      for (long d = 2; d <= 3 * g + 4; ++d) {
        if (which == 0) {
          Rat scale = Rat(factorial(d)) / Rat(int_pow(Int(d), d));
          seq.push_back(closed_form_hurwitz(d, g) * scale);
        } else {
          seq.push_back(closed_form_monotone(d, g) / Rat(binomial(2 * d, d)));
        }
      }
      for (long step = 0; step < 3 * g; ++step) {
        std::vector<Rat> next;
        for (size_t i = 0; i + 1 < seq.size(); ++i)
          next.push_back(seq[i + 1] - seq[i]);
        seq = std::move(next);
      }
      for (const auto& v : seq) ok = ok && is_zero(v);
    }
  }
  report(4, "closed-form cross-checks", ok,
         "formulas match series coefficients for d <= 6, g <= 3; product "
         "form offset by one power of h as recorded; degree-(3g-1) "
         "polynomiality holds for g in {1,2}");
}

void criterion5() {
  auto t0 = Clock::now();
  bool ok = true;

  InvariantTable rib = invariants(catalog("ribbon"), 12, 3);
  for (long d = 1; d <= 6; ++d) {
    GluingCount c = ribbon_gluings(d);
    for (long g = 0; g <= 3; ++g) ok = ok && c.at_genus(g) == rib.at(g, 2 * d);
  }

  InvariantTable mono = invariants(catalog("monotone"), 5, 2);
  for (long d = 1; d <= 5; ++d)
    for (long g = 0; g <= 2; ++g)
      ok = ok && monotone_factorizations(d, g) == mono.at(g, d);

  InvariantTable des = invariants(catalog("dessin"), 5, 2);
  for (long d = 1; d <= 5; ++d) {
    GluingCount c = dessin_counts(d);
    for (long g = 0; g <= 2; ++g) ok = ok && c.at_genus(g) == des.at(g, d);
  }

  InvariantTable bms = invariants(catalog("bms(3)"), 4, 4);
  for (long d = 1; d <= 4; ++d) {
    GluingCount c = bms_counts(3, d);
    for (long g = 0; g <= 4; ++g) ok = ok && c.at_genus(g) == bms.at(g, d);
  }

  double secs = seconds_since(t0);
  std::ostringstream note;
  note << "independent enumerations equal generator output, " << secs
       << "s (< 300s required)";
  report(5, "oracle equivalence", ok && secs < 300.0, note.str());
}

void criterion6() {
  bool ok = true;
  std::ostringstream note;

  // Path equivalence of the three series formulas.
  std::vector<ProblemSpec> probs = {
      catalog("ribbon"),        catalog("m-hypermap(3)"),
      catalog("dessin"),        catalog("bms(3)"),
      catalog("monotone"),      catalog("double-dessin(1,1,1)"),
      catalog("double-bms(3,1,0,1/2)"), catalog("double-monotone(2/3,1)")};
  for (const auto& p : probs) {
    auto series = series_range(p, 10);
    for (long d = 1; d <= 10; ++d) {
      K hook = series[d - 1].value.rat;
      ok = ok && one_point_series_factored(p, d).value.rat == hook;
      if (p.q.r() == 1 && p.q.at(1) == Rat(1))
        ok = ok && one_point_series_simple(p.G, d).value.rat == hook;
    }
  }
  note << "path equivalence d <= 10; ";

  // Parity and valuation.
  for (const auto& p : probs) {
    auto series = series_range(p, 10);
    for (long d = 1; d <= 10; ++d) {
      const K& v = series[d - 1].value.rat;
      if (v.zero()) continue;
      LaurentSeries s = laurent_expand(v, 16);
      ok = ok && s.valuation() >= -1;
      for (long e = -16; e < 16; e += 2) ok = ok && is_zero(s.coeff(e));
      ok = ok && ((s.valuation() == -1) == !is_zero(s.coeff(-1)));
    }
  }
  note << "odd-parity and valuation >= -1; ";

  // Hook dichotomy for |lambda| <= 6.
  std::vector<std::vector<long>> parts;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long left, long cap) -> void {
    if (left == 0) {
      parts.push_back(cur);
      return;
    }
    for (long p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  for (long n = 1; n <= 6; ++n) rec(rec, n, n);
  for (const auto& lambda : parts) {
    Rat got = principal_spec_derivative(lambda);
    bool hook = lambda.size() <= 1 || lambda[1] <= 1;
    if (!hook) {
      ok = ok && is_zero(got);
    } else {
      long d = 0;
      for (long p : lambda) d += p;
      Rat expect(((d - lambda[0]) % 2 == 0) ? 1 : -1, d);
      ok = ok && got == expect;
    }
  }
  note << "hook dichotomy |lambda| <= 6; ";

  // Closure certification on 50 randomized recurrence pairs.
  std::mt19937 gen(2024);
  auto pick = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  };
  auto random_rec = [&]() {
    long order = pick(1, 2);
    std::vector<KPoly> coeffs;
    for (long t = 0; t < order; ++t) {
      std::vector<K> entries;
      long deg = pick(0, 1);
      for (long u = 0; u <= deg; ++u) {
        std::vector<Rat> hc;
        for (long w = 0; w <= pick(0, 1); ++w) hc.emplace_back(pick(-2, 2));
        entries.emplace_back(PolyQ(std::move(hc)));
      }
      coeffs.emplace_back(std::move(entries));
    }
    coeffs.push_back(KPoly(K(pick(1, 2))));
    std::vector<K> init;
    for (long i = 0; i < order; ++i) init.push_back(K(Rat(pick(-3, 3), pick(1, 2))));
    PRecurrence r;
    r.offset = 0;
    r.valid_from = 0;
    r.coeffs = std::move(coeffs);
    r.initial = std::move(init);
    return r;
  };
  for (int iter = 0; iter < 50 && ok; ++iter) {
    PRecurrence a = random_rec(), b = random_rec();
    PRecurrence s = sum_closure(a, b);
    PRecurrence h = hadamard_closure(a, b);
    PRecurrence c = cauchy_closure(a, b);
    ok = ok && s.order() <= a.order() + b.order();
    ok = ok && h.order() <= a.order() * b.order();
    long top = std::max({s.order(), h.order(), c.order()}) + 25;
    auto av = unroll(a, top), bv = unroll(b, top);
    auto sv = unroll(s, top), hv = unroll(h, top), cv = unroll(c, top);
    for (long n = 0; n <= top && ok; ++n) {
      ok = ok && sv[n] == av[n] + bv[n];
      ok = ok && hv[n] == av[n] * bv[n];
      KAccumulator conv;
      for (long k = 0; k <= n; ++k) conv.add(av[k] * bv[n - k]);
      ok = ok && cv[n] == conv.value();
    }
  }
  note << "closure certification on 50 random pairs (25 terms past order)";
  report(6, "property suites", ok, note.str());
}

void criterion7() {
  bool ok = true;
  std::ostringstream note;

  // The stated d <= 14 table leaves the largest ansatz underdetermined
  // (60 equations vs 140 unknowns), so the diagnostic insists on more
  // data; d <= 32 overdetermines every grid point and subsumes the search.
  InvariantTable hur = invariants(catalog("hurwitz"), 32, 5);
  DiagnosticReport hrep = no_recursion_diagnostic(hur, 4, 6, 3);
  ok = ok && !hrep.found;
  long solved = 0;
  for (const auto& p : hrep.probes) solved += p.solutions;
  ok = ok && solved == 0;
  note << "no recursion for simple Hurwitz numbers within R<=4, D<=6, "
          "genus shifts <=3 over "
       << hrep.probes.size() << " grid points (d <= 32 table); ";

  InvariantTable mono = invariants(catalog("monotone"), 32, 5);
  DiagnosticReport mrep = no_recursion_diagnostic(mono, 4, 6, 3);
  ok = ok && mrep.found && mrep.recursion.has_value() &&
       *mrep.recursion == named("monotone").rec;
  note << "the identical diagnostic on monotone data finds the published "
          "recursion at (R,D,H) = ("
       << mrep.R << "," << mrep.D << "," << mrep.H << ")";
  report(7, "non-existence diagnostic", ok, note.str());
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " criterion(s) failed" << std::endl;
  return 1;
}

#include "onepoint/io.hpp"

#include <algorithm>
#include <sstream>

namespace onepoint {

Json json_of(const PolyQ& p) {
  Json arr = Json::array();
  for (long i = 0; i <= p.degree(); ++i) arr.push_back(to_string(p.coeff(i)));
  return arr;
}

PolyQ polyq_from_json(const Json& j) {
  std::vector<Rat> c;
  for (const auto& s : j) c.push_back(rat_from_string(s.get<std::string>()));
  return PolyQ(std::move(c));
}

Json json_of(const K& v) {
  Json j;
  j["num"] = json_of(v.num());
  j["den"] = json_of(v.den());
  return j;
}

K k_from_json(const Json& j) {
  return K(polyq_from_json(j.at("num")), polyq_from_json(j.at("den")));
}

Json json_of(const ProblemSpec& p) {
  Json j;
  if (!p.name.empty()) j["name"] = p.name;
  if (p.G.is_rational()) {
    j["G"] = {{"kind", "rational"},
              {"num", json_of(p.G.num)},
              {"den", json_of(p.G.den)}};
  } else {
    j["G"] = {{"kind", "exp"}};
  }
  Json q = Json::array();
  for (const auto& x : p.q.q) q.push_back(to_string(x));
  j["q"] = q;
  j["symbol"] = p.symbol;
  j["stride"] = p.stride;
  return j;
}

ProblemSpec problem_from_json(const Json& j) {
  ProblemSpec p;
  if (j.contains("name")) p.name = j.at("name").get<std::string>();
  const Json& g = j.at("G");
  std::string kind = g.at("kind").get<std::string>();
  if (kind == "rational") {
    p.G = WeightFunction::rational(polyq_from_json(g.at("num")),
                                   polyq_from_json(g.at("den")));
  } else if (kind == "exp") {
    p.G = WeightFunction::exponential();
  } else {
    throw Error("cli/bad-problem", "unknown weight kind '" + kind + "'");
  }
  std::vector<Rat> q;
  for (const auto& s : j.at("q")) q.push_back(rat_from_string(s.get<std::string>()));
  p.q = WeightVector(std::move(q));
  if (j.contains("symbol")) p.symbol = j.at("symbol").get<std::string>();
  if (j.contains("stride")) p.stride = j.at("stride").get<long>();
  return p;
}

Json json_of(const InvariantTable& t) {
  Json j;
  j["problem"] = json_of(t.problem);
  j["d_max"] = t.d_max;
  j["g_max"] = t.g_max;
  Json entries = Json::array();
  for (long d = 1; d <= t.d_max; ++d)
    for (long g = 0; g <= t.g_max; ++g)
      entries.push_back(
          {{"g", g}, {"d", d}, {"value", to_string(t.at(g, d))}});
  j["entries"] = entries;
  return j;
}

InvariantTable table_from_json(const Json& j) {
  InvariantTable t;
  t.problem = problem_from_json(j.at("problem"));
  t.d_max = j.at("d_max").get<long>();
  t.g_max = j.at("g_max").get<long>();
  t.values.assign(t.d_max, std::vector<Rat>(t.g_max + 1, Rat(0)));
  for (const auto& e : j.at("entries")) {
    long g = e.at("g").get<long>();
    long d = e.at("d").get<long>();
    if (!t.contains(g, d))
      throw Error("cli/bad-table", "entry outside declared rectangle");
    t.values[d - 1][g] = rat_from_string(e.at("value").get<std::string>());
  }
  return t;
}

namespace {

// Recurrence coefficients are serialized cleared: each K entry must be a
// plain h-polynomial.
Json json_of_cleared(const KPoly& p) {
  Json arr = Json::array();
  for (long i = 0; i <= p.degree(); ++i) {
    const K& c = p.coeff(i);
    if (!c.zero() && c.den() != PolyQ(1))
      throw Error("io/uncleared", "serialize normalized recurrences only");
    arr.push_back(json_of(c.num()));
  }
  return arr;
}

KPoly kpoly_from_json(const Json& j) {
  std::vector<K> c;
  for (const auto& e : j) c.emplace_back(polyq_from_json(e));
  return KPoly(std::move(c));
}

}  // namespace

Json json_of(const PRecurrence& in) {
  PRecurrence rec = normalize_recurrence(in);
  Json j;
  j["order"] = rec.order();
  j["offset"] = rec.offset;
  if (rec.valid_from != rec.offset) j["valid_from"] = rec.valid_from;
  Json coeffs = Json::array();
  for (const auto& p : rec.coeffs) coeffs.push_back(json_of_cleared(p));
  j["coeffs"] = coeffs;
  Json init = Json::array();
  for (const auto& v : rec.initial) init.push_back(json_of(v));
  j["initial"] = init;
  return j;
}

PRecurrence recurrence_from_json(const Json& j) {
  PRecurrence rec;
  rec.offset = j.at("offset").get<long>();
  rec.valid_from =
      j.contains("valid_from") ? j.at("valid_from").get<long>() : rec.offset;
  for (const auto& c : j.at("coeffs")) rec.coeffs.push_back(kpoly_from_json(c));
  for (const auto& v : j.at("initial")) rec.initial.push_back(k_from_json(v));
  if (rec.coeffs.size() < 2 || rec.coeffs.back().zero())
    throw Error("cli/bad-recurrence", "recurrence needs a nonzero order");
  long claimed = j.at("order").get<long>();
  if (claimed != rec.order())
    throw Error("cli/bad-recurrence", "order field disagrees with coeffs");
  return rec;
}

Json json_of(const HLevelRelation& rel) {
  Json j;
  j["form"] = "hlevel";
  Json coeffs = Json::array();
  for (const auto& c : rel.coeffs) {
    Json byd = Json::array();
    for (long t = 0; t <= c.degree(); ++t) byd.push_back(json_of(c.coeff(t)));
    coeffs.push_back(byd);
  }
  j["coeffs"] = coeffs;
  return j;
}

HLevelRelation relation_from_json(const Json& j) {
  if (j.at("form").get<std::string>() != "hlevel")
    throw Error("cli/bad-recursion", "expected an hlevel relation");
  HLevelRelation rel;
  for (const auto& c : j.at("coeffs")) {
    std::vector<PolyQ> byd;
    for (const auto& hp : c) byd.push_back(polyq_from_json(hp));
    rel.coeffs.push_back(PolyDH(std::move(byd)));
  }
  return rel;
}

Json json_of(const GDRecursion& rec) {
  Json j;
  j["form"] = "gd";
  Json terms = Json::array();
  for (const auto& t : rec.terms)
    terms.push_back({{"i", t.i}, {"j", t.j}, {"poly_d", json_of(t.p)}});
  j["terms"] = terms;
  return j;
}

GDRecursion gd_from_json(const Json& j) {
  if (j.at("form").get<std::string>() != "gd")
    throw Error("cli/bad-recursion", "expected a gd recursion");
  GDRecursion rec;
  for (const auto& t : j.at("terms"))
    rec.terms.push_back({t.at("i").get<long>(), t.at("j").get<long>(),
                         polyq_from_json(t.at("poly_d"))});
  return rec;
}

Json json_of(const GluingCount& c, const std::string& kind) {
  Json j;
  j["problem"] = {{"name", "oracle:" + kind}};
  Json entries = Json::array();
  for (const auto& [g, v] : c.genus_histogram)
    entries.push_back({{"g", g}, {"d", c.d}, {"value", to_string(v)}});
  j["entries"] = entries;
  return j;
}

namespace {

std::string poly_desc_string(const PolyQ& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
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
      if (a != 1) out << a.get_str();
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::vector<Int> divisors(const Int& n) {
  Int a = abs(n);
  std::vector<Int> out;
  for (Int i = 1; i * i <= a; ++i) {
    if (a % i != 0) continue;
    out.push_back(i);
    if (i * i != a) out.push_back(a / i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All rational roots with multiplicity, ascending, dividing them out of p.
std::vector<std::pair<Rat, long>> extract_rational_roots(PolyQ& p) {
  std::vector<std::pair<Rat, long>> roots;
  long zero_mult = p.valuation();
  if (zero_mult > 0 && !p.zero()) {
    std::vector<Rat> c;
    for (long i = zero_mult; i <= p.degree(); ++i) c.push_back(p.coeff(i));
    p = PolyQ(std::move(c));
    roots.push_back({Rat(0), zero_mult});
  }
  if (p.degree() < 1) return roots;
  Rat cont = content(p);
  Int lead = Rat(p.coeff(p.degree()) / cont).get_num();
  Int trail = Rat(p.coeff(0) / cont).get_num();
  if (abs(lead) > 1000000000 || abs(trail) > 1000000000) return roots;
  std::vector<Rat> candidates;
  for (const auto& a : divisors(trail))
    for (const auto& b : divisors(lead)) {
      Rat r(a, b);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const Rat& r : candidates) {
    long mult = 0;
    while (p.degree() >= 1 && is_zero(p.eval(r))) {
      PolyQ factor(std::vector<Rat>{-r.get_num(), Rat(r.get_den())});
      p = exact_div(p, factor);
      ++mult;
    }
    if (mult > 0) roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::string pretty_poly_factored(const PolyQ& p, const std::string& var) {
  if (p.zero()) return "0";
  PolyQ work = p;
  Rat cont = content(work);
  if (sgn(work.leading()) < 0) cont = -cont;
  work = work / cont;
  auto roots = extract_rational_roots(work);
  // Whatever is left divided by remaining content folds into the prefix.
  Rat extra = content(work);
  if (!work.zero() && sgn(work.leading()) < 0) extra = -extra;
  if (extra != 1 && !is_zero(extra)) {
    work = work / extra;
    cont *= extra;
  }
  std::ostringstream out;
  bool have_factor = !roots.empty() || work.degree() >= 1;
  if (cont == -1 && have_factor) {
    out << "-";
  } else if (cont != 1 || !have_factor) {
    out << cont.get_str();
  }
  for (const auto& [r, mult] : roots) {
    if (is_zero(r)) {
      out << var;
    } else {
      Int a = r.get_num(), b = r.get_den();
      out << "(";
      if (b != 1) out << b.get_str();
      out << var;
      if (sgn(r) > 0)
        out << "-" << a.get_str();
      else
        out << "+" << Int(abs(a)).get_str();
      out << ")";
    }
    if (mult > 1) out << "^" << mult;
  }
  if (work.degree() >= 1) out << "(" << poly_desc_string(work, var) << ")";
  return out.str();
}

namespace {

std::string gd_operand(const GDRecursion::Term& t, const std::string& symbol) {
  std::ostringstream out;
  out << symbol;
  if (t.i == 0)
    out << "_g";
  else
    out << "_{g-" << t.i << "}";
  if (t.j == 0)
    out << "(d)";
  else
    out << "(d-" << t.j << ")";
  return out.str();
}

std::string coeff_prefix(const PolyQ& p, const std::string& var) {
  if (p == PolyQ(1)) return "";
  return pretty_poly_factored(p, var) + " ";
}

}  // namespace

std::string pretty_gd(const GDRecursion& rec, const std::string& symbol) {
  if (rec.terms.empty()) return "0 = 0";
  std::ostringstream out;
  const auto& lead = rec.terms.front();
  out << coeff_prefix(lead.p, "d") << gd_operand(lead, symbol) << " =";
  bool first = true;
  for (size_t k = 1; k < rec.terms.size(); ++k) {
    PolyQ c = -rec.terms[k].p;
    bool neg = sgn(c.leading()) < 0;
    if (neg) c = -c;
    out << (first && !neg ? " " : (neg ? " - " : " + "));
    out << coeff_prefix(c, "d") << gd_operand(rec.terms[k], symbol);
    first = false;
  }
  if (first) out << " 0";
  return out.str();
}

namespace {

// sum of pieces coeff * h^u * outer^t, ascending (t, u).
std::string bivariate_string(const std::vector<PolyQ>& by_outer,
                             const std::string& outer) {
  std::ostringstream out;
  bool first = true;
  for (size_t t = 0; t < by_outer.size(); ++t) {
    const PolyQ& hc = by_outer[t];
    for (long u = 0; u <= hc.degree(); ++u) {
      Rat c = hc.coeff(u);
      if (is_zero(c)) continue;
      if (first) {
        if (sgn(c) < 0) out << "-";
        first = false;
      } else {
        out << (sgn(c) < 0 ? "-" : "+");
      }
      Rat a = abs(c);
      std::vector<std::string> pieces;
      if (a != 1 || (u == 0 && t == 0)) pieces.push_back(a.get_str());
      if (u > 0) pieces.push_back(u == 1 ? "h" : "h^" + std::to_string(u));
      if (t > 0)
        pieces.push_back(t == 1 ? outer : outer + "^" + std::to_string(t));
      for (size_t i = 0; i < pieces.size(); ++i) {
        if (i) out << "*";
        out << pieces[i];
      }
    }
  }
  return first ? "0" : out.str();
}

std::vector<PolyQ> kpoly_cleared(const KPoly& p) {
  std::vector<PolyQ> v;
  for (long t = 0; t <= p.degree(); ++t) {
    const K& c = p.coeff(t);
    if (!c.zero() && c.den() != PolyQ(1))
      throw Error("io/uncleared", "pretty-print normalized recurrences only");
    v.push_back(c.num());
  }
  return v;
}

}  // namespace

std::string pretty_recurrence(const PRecurrence& in, const std::string& seq) {
  PRecurrence rec = normalize_recurrence(in);
  std::ostringstream out;
  bool first = true;
  for (long t = 0; t <= rec.order(); ++t) {
    if (rec.coeffs[t].zero()) continue;
    if (!first) out << " + ";
    out << "(" << bivariate_string(kpoly_cleared(rec.coeffs[t]), "d") << ")*"
        << seq << "(d";
    if (t > 0) out << "+" << t;
    out << ")";
    first = false;
  }
  out << " = 0";
  return out.str();
}

std::string pretty_relation(const HLevelRelation& rel) {
  std::ostringstream out;
  bool first = true;
  for (long j = 0; j <= rel.span(); ++j) {
    const PolyDH& c = rel.coeffs[j];
    if (c.zero()) continue;
    std::vector<PolyQ> byd;
    for (long t = 0; t <= c.degree(); ++t) byd.push_back(c.coeff(t));
    if (!first) out << " + ";
    out << "(" << bivariate_string(byd, "d") << ")*n(d";
    if (j > 0) out << "-" << j;
    out << ")";
    first = false;
  }
  out << " = 0";
  return out.str();
}

}  // namespace onepoint

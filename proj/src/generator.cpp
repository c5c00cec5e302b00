#include "onepoint/generator.hpp"

#include <sstream>

namespace onepoint {

WeightFunction WeightFunction::rational(PolyQ num, PolyQ den) {
  WeightFunction g;
  g.kind = Kind::rational;
  g.num = std::move(num);
  g.den = std::move(den);
  if (g.den.zero() || is_zero(g.den.coeff(0)))
    throw Error("generator/bad-weight", "G needs den(0) != 0");
  if (g.num.coeff(0) != g.den.coeff(0))
    throw Error("generator/bad-weight", "G(0) must equal 1");
  return g;
}

WeightFunction WeightFunction::exponential() {
  WeightFunction g;
  g.kind = Kind::exponential;
  return g;
}

K WeightFunction::at_content(const Rat& c) const {
  if (!is_rational())
    throw Error("generator/bad-weight", "exp(z) has no rational evaluation");
  return K(num.scale_arg(c), den.scale_arg(c));
}

SeriesValue content_product(const WeightFunction& G, long k, long d, long order) {
  if (k < 1 || k > d)
    throw Error("generator/bad-arg", "content product needs 1 <= k <= d");
  if (G.is_rational()) {
    K prod(1);
    for (long i = 1; i <= d; ++i) prod *= G.at_content(Rat(k - i));
    return SeriesValue::from_rational(prod);
  }
  // Contents of the hook sum to d(2k-d-1)/2.
  Rat expo = Rat(d) * Rat(2 * k - d - 1) / 2;
  return SeriesValue::from_series(exp_series(expo, order));
}

namespace {

// Prefix content products a_k = prod_{i=1}^{k} G((i-1)h) and
// b_k = prod_{i=1}^{k} G(-ih), so that prod_{i=1}^d G((k-i)h) = a_k b_{d-k}.
struct PrefixProducts {
  std::vector<K> a, b;
};

PrefixProducts prefix_products(const WeightFunction& G, long n_max) {
  PrefixProducts pp;
  pp.a.assign(n_max + 1, K(1));
  pp.b.assign(n_max + 1, K(1));
  for (long n = 1; n <= n_max; ++n) {
    pp.a[n] = pp.a[n - 1] * G.at_content(Rat(n - 1));
    pp.b[n] = pp.b[n - 1] * G.at_content(Rat(-n));
  }
  return pp;
}

OnePointSeries assemble_rational(const ProblemSpec& p, long d,
                                 const std::vector<LaurentSeries>& hooks,
                                 const PrefixProducts& pp) {
  KAccumulator total;
  for (long k = 1; k <= d; ++k) {
    K term = hooks[k - 1].to_rational() * pp.a[k] * pp.b[d - k];
    total.add(((d - k) % 2 == 0) ? term : -term);
  }
  return OnePointSeries{d, SeriesValue::from_rational(total.value())};
}

OnePointSeries assemble_exponential(long d, const std::vector<LaurentSeries>& hooks,
                                    long order) {
  LaurentSeries total = LaurentSeries::zero_truncated(order);
  for (long k = 1; k <= d; ++k) {
    Rat expo = Rat(d) * Rat(2 * k - d - 1) / 2;
    LaurentSeries term = hooks[k - 1] * exp_series(expo, order);
    total = ((d - k) % 2 == 0) ? total + term : total - term;
  }
  return OnePointSeries{d, SeriesValue::from_series(total)};
}

}  // namespace

OnePointSeries one_point_series(const ProblemSpec& p, long d, long g_max) {
  if (d < 1) throw Error("generator/bad-arg", "d must be >= 1");
  HomElem he = hom_and_elem(p.q, d);
  auto hooks = hook_schur_all(d, he);
  if (p.G.is_rational()) {
    auto pp = prefix_products(p.G, d);
    return assemble_rational(p, d, hooks, pp);
  }
  return assemble_exponential(d, hooks, 2 * g_max + d + 2);
}

OnePointSeries one_point_series_simple(const WeightFunction& G, long d,
                                       long g_max) {
  if (d < 1) throw Error("generator/bad-arg", "d must be >= 1");
  Rat dfact(factorial(d));
  if (G.is_rational()) {
    KAccumulator total;
    auto pp = prefix_products(G, d);
    for (long k = 1; k <= d; ++k) {
      Rat c(binomial(d - 1, k - 1));
      if ((d - k) % 2 != 0) c = -c;
      total.add(K(c) * pp.a[k] * pp.b[d - k]);
    }
    // Divide by d! h^d.
    K hd(PolyQ(1), PolyQ::variable().shifted_up(d - 1));
    return OnePointSeries{
        d, SeriesValue::from_rational(total.value() * hd / K(dfact))};
  }
  long order = 2 * g_max + d + 2;
  LaurentSeries total = LaurentSeries::zero_truncated(order + d);
  for (long k = 1; k <= d; ++k) {
    Rat c(binomial(d - 1, k - 1));
    if ((d - k) % 2 != 0) c = -c;
    Rat expo = Rat(d) * Rat(2 * k - d - 1) / 2;
    total = total + exp_series(expo, order + d) * c;
  }
  LaurentSeries v = total.shifted(-d) * (Rat(1) / dfact);
  return OnePointSeries{d, SeriesValue::from_series(v.truncate_to(order))};
}

OnePointSeries one_point_series_factored(const ProblemSpec& p, long d) {
  if (d < 1) throw Error("generator/bad-arg", "d must be >= 1");
  if (!p.G.is_rational())
    throw Error("generator/bad-arg",
                "factored path supports rational G only");
  HomElem he = hom_and_elem(p.q, d);
  auto pp = prefix_products(p.G, d);
  // u_l = h_l(q/h), v_m = (-1)^{m+1} e_m(q/h).
  auto v_of = [&](long m) {
    return (m % 2 == 1) ? he.e[m] : he.e[m] * Rat(-1);
  };
  KAccumulator total;
  K inner(0);
  for (long k = 1; k <= d; ++k) {
    inner += (he.h[k - 1] * v_of(d - k + 1)).to_rational();
    total.add(pp.a[k] * pp.b[d - k] * inner);
  }
  return OnePointSeries{d, SeriesValue::from_rational(total.value())};
}

std::vector<OnePointSeries> series_range(const ProblemSpec& p, long n_max,
                                         long g_max) {
  if (n_max < 1) throw Error("generator/bad-arg", "n_max must be >= 1");
  HomElem he = hom_and_elem(p.q, n_max);
  std::vector<OnePointSeries> out;
  out.reserve(n_max);
  if (p.G.is_rational()) {
    auto pp = prefix_products(p.G, n_max);
    for (long d = 1; d <= n_max; ++d)
      out.push_back(assemble_rational(p, d, hook_schur_all(d, he), pp));
  } else {
    for (long d = 1; d <= n_max; ++d)
      out.push_back(
          assemble_exponential(d, hook_schur_all(d, he), 2 * g_max + d + 2));
  }
  return out;
}

InvariantTable invariants(const ProblemSpec& p, long d_max, long g_max) {
  if (d_max < 1 || g_max < 0)
    throw Error("generator/bad-arg", "invariants need d_max >= 1, g_max >= 0");
  InvariantTable t;
  t.problem = p;
  t.d_max = d_max;
  t.g_max = g_max;
  t.values.assign(d_max, std::vector<Rat>(g_max + 1, Rat(0)));
  auto series = series_range(p, d_max, g_max);
  for (long d = 1; d <= d_max; ++d) {
    LaurentSeries s = series[d - 1].value.expand(2 * g_max);
    for (long g = 0; g <= g_max; ++g) t.values[d - 1][g] = s.coeff(2 * g - 1);
  }
  return t;
}

Rat closed_form_hurwitz(long d, long g) {
  if (d < 1 || g < 0)
    throw Error("generator/bad-arg", "closed form needs d >= 1, g >= 0");
  unsigned long m = static_cast<unsigned long>(d + 2 * g - 1);
  Int alt(0);
  for (long k = 0; k <= d - 1; ++k) {
    Int base(d - 1 - 2 * k);
    Int term = binomial(d - 1, k) * int_pow(base, m);
    alt += (k % 2 == 0) ? term : -term;
  }
  Rat half(d, 2);
  half.canonicalize();
  Rat front = rat_pow(half, static_cast<long>(m)) /
              (Rat(factorial(d)) * Rat(factorial(m)));
  return front * Rat(alt);
}

Rat closed_form_monotone(long d, long g) {
  if (d < 1 || g < 0)
    throw Error("generator/bad-arg", "closed form needs d >= 1, g >= 0");
  Rat catalan = Rat(factorial(2 * d - 2)) /
                (Rat(factorial(d)) * Rat(factorial(d - 1)));

  // Route 1: complete homogeneous h_g(1^2, 2^2, ..., (d-1)^2).
  std::vector<Rat> h(g + 1, Rat(0));
  h[0] = 1;
  for (long i = 1; i <= d - 1; ++i) {
    Rat x(i * i);
    for (long m = 1; m <= g; ++m) h[m] += x * h[m - 1];
  }
  Rat route1 = catalan * h[g];

  // Route 2: sum over weakly increasing tuples of (m_1 ... m_g)^2.
  Rat tuples(0);
  std::vector<long> stack;
  auto rec = [&](auto&& self, long lo, long remaining, Rat prod) -> void {
    if (remaining == 0) {
      tuples += prod;
      return;
    }
    for (long m = lo; m <= d - 1; ++m)
      self(self, m, remaining - 1, prod * Rat(m * m));
  };
  rec(rec, 1, g, Rat(1));
  Rat route2 = catalan * tuples;

  if (route1 != route2)
    throw Error("generator/closed-form-mismatch",
                "monotone closed-form routes disagree");
  return route1;
}

std::vector<SeriesValue> wave_coefficients(const ProblemSpec& p, long d_max,
                                           long order) {
  if (d_max < 0) throw Error("generator/bad-arg", "d_max must be >= 0");
  HomElem he = hom_and_elem(p.q, d_max);
  std::vector<SeriesValue> out;
  out.reserve(d_max + 1);
  if (p.G.is_rational()) {
    K prod(1);
    for (long d = 0; d <= d_max; ++d) {
      if (d >= 2) prod *= p.G.at_content(Rat(d - 1));
      out.push_back(SeriesValue::from_rational(he.h[d].to_rational() * prod));
    }
  } else {
    for (long d = 0; d <= d_max; ++d) {
      // prod_{k=1}^{d-1} exp(kh) = exp(d(d-1)h/2).
      Rat expo = Rat(d) * Rat(d - 1) / 2;
      out.push_back(
          SeriesValue::from_series(he.h[d] * exp_series(expo, order)));
    }
  }
  return out;
}

namespace {

PolyQ one_plus_z_pow(long m) {
  PolyQ base(std::vector<Rat>{Rat(1), Rat(1)});
  PolyQ acc(1);
  for (long i = 0; i < m; ++i) acc *= base;
  return acc;
}

struct ParsedName {
  std::string head;
  std::vector<std::string> args;
};

ParsedName parse_name(const std::string& name) {
  ParsedName out;
  auto open = name.find('(');
  if (open == std::string::npos) {
    out.head = name;
    return out;
  }
  if (name.back() != ')')
    throw Error("generator/unknown-problem", "malformed problem name '" + name + "'");
  out.head = name.substr(0, open);
  std::string inner = name.substr(open + 1, name.size() - open - 2);
  std::string cur;
  for (char ch : inner) {
    if (ch == ',') {
      out.args.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.args.push_back(cur);
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("generator/unknown-problem", "bad " + what + " '" + s + "'");
  }
}

WeightVector parse_weights(const std::vector<std::string>& args, size_t from) {
  if (args.size() <= from)
    throw Error("generator/unknown-problem", "double problem needs weights");
  std::vector<Rat> q;
  for (size_t i = from; i < args.size(); ++i) q.push_back(rat_from_string(args[i]));
  return WeightVector(std::move(q));
}

}  // namespace

ProblemSpec catalog(const std::string& name) {
  ParsedName pn = parse_name(name);
  ProblemSpec p;
  p.name = name;
  auto unit = [](size_t m) {
    std::vector<Rat> q(m, Rat(0));
    q[m - 1] = 1;
    return WeightVector(std::move(q));
  };
  if (pn.head == "ribbon") {
    p.G = WeightFunction::rational(one_plus_z_pow(1), PolyQ(1));
    p.q = unit(2);
    p.symbol = "a";
    p.stride = 2;
  } else if (pn.head == "m-hypermap" || pn.head == "hypermap") {
    long m = pn.args.empty() ? 3 : parse_long(pn.args[0], "hypermap order");
    if (m < 1) throw Error("generator/unknown-problem", "hypermap order >= 1");
    p.G = WeightFunction::rational(one_plus_z_pow(1), PolyQ(1));
    p.q = unit(m);
    p.symbol = "a^" + std::to_string(m);
    p.stride = m;
  } else if (pn.head == "dessin") {
    p.G = WeightFunction::rational(one_plus_z_pow(2), PolyQ(1));
    p.q = unit(1);
    p.symbol = "b";
  } else if (pn.head == "double-dessin") {
    p.G = WeightFunction::rational(one_plus_z_pow(1), PolyQ(1));
    p.q = parse_weights(pn.args, 0);
    p.symbol = "b";
  } else if (pn.head == "bms") {
    long m = pn.args.empty() ? 3 : parse_long(pn.args[0], "BMS order");
    if (m < 1) throw Error("generator/unknown-problem", "BMS order >= 1");
    p.G = WeightFunction::rational(one_plus_z_pow(m), PolyQ(1));
    p.q = unit(1);
    p.symbol = "b^" + std::to_string(m);
  } else if (pn.head == "double-bms") {
    if (pn.args.empty())
      throw Error("generator/unknown-problem", "double-bms needs (m, q...)");
    long m = parse_long(pn.args[0], "BMS order");
    if (m < 1) throw Error("generator/unknown-problem", "BMS order >= 1");
    p.G = WeightFunction::rational(one_plus_z_pow(m - 1), PolyQ(1));
    p.q = parse_weights(pn.args, 1);
    p.symbol = "b^" + std::to_string(m);
  } else if (pn.head == "hurwitz") {
    p.G = WeightFunction::exponential();
    p.q = unit(1);
    p.symbol = "h";
  } else if (pn.head == "double-hurwitz") {
    p.G = WeightFunction::exponential();
    p.q = parse_weights(pn.args, 0);
    p.symbol = "h";
  } else if (pn.head == "monotone") {
    p.G = WeightFunction::rational(PolyQ(1),
                                   PolyQ(std::vector<Rat>{Rat(1), Rat(-1)}));
    p.q = unit(1);
    p.symbol = "m";
  } else if (pn.head == "double-monotone") {
    p.G = WeightFunction::rational(PolyQ(1),
                                   PolyQ(std::vector<Rat>{Rat(1), Rat(-1)}));
    p.q = parse_weights(pn.args, 0);
    p.symbol = "m";
  } else {
    throw Error("generator/unknown-problem", "unknown problem '" + name + "'");
  }
  return p;
}

std::vector<std::string> catalog_names() {
  return {"ribbon",  "m-hypermap(m)",      "dessin",  "double-dessin(q...)",
          "bms(m)",  "double-bms(m,q...)", "hurwitz", "double-hurwitz(q...)",
          "monotone", "double-monotone(q...)"};
}

}  // namespace onepoint

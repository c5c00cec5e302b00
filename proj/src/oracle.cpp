#include "onepoint/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace onepoint {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

using Perm = std::vector<int>;

Perm compose(const Perm& f, const Perm& g) {  // (f g)(x) = f(g(x))
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

Perm inverse(const Perm& f) {
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

int cycle_count(const Perm& f) {
  std::vector<bool> seen(f.size(), false);
  int c = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (size_t j = i; !seen[j]; j = f[j]) seen[j] = true;
  }
  return c;
}

Perm full_cycle(long d) {  // (1 2 ... d) on 0-based labels
  Perm c(d);
  for (long i = 0; i < d; ++i) c[i] = static_cast<int>((i + 1) % d);
  return c;
}

std::vector<Perm> symmetric_group(long d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

// Glue edge a onto edge b of the polygon (orientation-reversing) and
// identify the endpoint corners.
void glue_edges(UnionFind& corners, long n, long a, long b) {
  corners.unite(static_cast<int>(a), static_cast<int>((b + 1) % n));
  corners.unite(static_cast<int>((a + 1) % n), static_cast<int>(b));
}

void ribbon_rec(std::vector<long>& free_edges, UnionFind corners, long n,
                GluingCount& out) {
  if (free_edges.empty()) {
    // V - E + F = 2 - 2g with E = n/2 edges and the single polygon face.
    long v = corners.classes();
    long genus = (2 - v + n / 2 - 1) / 2;
    out.genus_histogram[genus] += 1;
    return;
  }
  long a = free_edges.front();
  for (size_t i = 1; i < free_edges.size(); ++i) {
    long b = free_edges[i];
    std::vector<long> rest;
    for (size_t j = 1; j < free_edges.size(); ++j)
      if (j != i) rest.push_back(free_edges[j]);
    UnionFind next = corners;
    glue_edges(next, n, a, b);
    ribbon_rec(rest, std::move(next), n, out);
  }
}

}  // namespace

GluingCount ribbon_gluings(long d) {
  if (d < 1 || d > 6)
    throw Error("oracle/out-of-range", "ribbon gluings support 1 <= d <= 6");
  long n = 2 * d;
  GluingCount out;
  out.d = d;
  std::vector<long> edges(n);
  std::iota(edges.begin(), edges.end(), 0);
  ribbon_rec(edges, UnionFind(static_cast<int>(n)), n, out);
  return out;
}

Rat monotone_factorizations(long d, long g) {
  if (d < 1 || d > 5 || g < 0 || g > 2)
    throw Error("oracle/out-of-range",
                "monotone factorizations support d <= 5, g <= 2");
  long m = 2 * g - 1 + d;
  if (m < 0) return Rat(0);
  Perm target = full_cycle(d);
  // Transpositions (a b), a < b, sorted by b then a: the monotone
  // condition is a weakly increasing larger element along the tuple.
  struct Transposition {
    int a, b;
  };
  std::vector<Transposition> ts;
  for (int b = 1; b < d; ++b)
    for (int a = 0; a < b; ++a) ts.push_back({a, b});

  long count = 0;
  Perm id(d);
  std::iota(id.begin(), id.end(), 0);
  auto rec = [&](auto&& self, size_t first_choice, long left,
                 const Perm& acc) -> void {
    if (left == 0) {
      if (acc == target) ++count;
      return;
    }
    for (size_t i = first_choice; i < ts.size(); ++i) {
      Perm tau(id);
      std::swap(tau[ts[i].a], tau[ts[i].b]);
      // Next factor may repeat the same b, or any larger one.
      size_t next_floor = i;
      while (next_floor > 0 && ts[next_floor - 1].b == ts[i].b) --next_floor;
      self(self, next_floor, left - 1, compose(acc, tau));
    }
  };
  if (m == 0) {
    if (id == target) ++count;
  } else {
    rec(rec, 0, m, id);
  }
  return Rat(count);
}

GluingCount dessin_counts(long d) {
  if (d < 1 || d > 5)
    throw Error("oracle/out-of-range", "dessin counts support d <= 5");
  GluingCount out;
  out.d = d;
  Perm c = full_cycle(d);
  for (const auto& s1 : symmetric_group(d)) {
    Perm s2 = compose(inverse(s1), c);
    long v = cycle_count(s1) + cycle_count(s2);
    // chi = V_black + V_white - edges + the one face.
    long genus = (2 - (v - d + 1)) / 2;
    out.genus_histogram[genus] += 1;
  }
  return out;
}

GluingCount bms_counts(long m, long d) {
  if (m < 1 || m > 3 || d < 1 || d > 4)
    throw Error("oracle/out-of-range", "BMS counts support m <= 3, d <= 4");
  GluingCount out;
  out.d = d;
  Perm c = full_cycle(d);
  auto perms = symmetric_group(d);
  // sum over (m-1)-tuples; the last permutation is forced.
  std::vector<const Perm*> chosen;
  auto rec = [&](auto&& self, long slot, const Perm& acc, long defect) -> void {
    if (slot == m - 1) {
      Perm last = compose(inverse(acc), c);
      long total_defect = defect + (d - cycle_count(last));
      // sum (d - k(sigma_i)) = 2g - 2 + 1 + d
      long twog = total_defect + 1 - d;
      if (twog < 0 || twog % 2 != 0) return;
      out.genus_histogram[twog / 2] += 1;
      return;
    }
    for (const auto& s : perms)
      self(self, slot + 1, compose(acc, s), defect + (d - cycle_count(s)));
  };
  Perm id(d);
  std::iota(id.begin(), id.end(), 0);
  rec(rec, 0, id, 0);
  return out;
}

}  // namespace onepoint

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "onepoint/symfunc.hpp"

using namespace onepoint;
using namespace onepoint::testing;

namespace {

WeightVector wv(std::vector<long> entries) {
  std::vector<Rat> q;
  for (long v : entries) q.emplace_back(v);
  return WeightVector(std::move(q));
}

std::vector<std::vector<long>> partitions_of(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long left, long cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (long p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace

TEST_CASE("homogeneous and elementary pieces at p_k = q_k/h") {
  auto he = hom_and_elem(wv({1}), 2);
  CHECK(he.h[0] == LaurentSeries::constant(1));
  CHECK(he.e[0] == LaurentSeries::constant(1));
  CHECK(he.h[2] == LaurentSeries::monomial(Rat(1, 2), -2));
  CHECK(he.e[2] == LaurentSeries::monomial(Rat(1, 2), -2));

  auto he2 = hom_and_elem(wv({0, 1}), 2);
  CHECK(he2.h[2] == LaurentSeries::monomial(Rat(1, 2), -1));
  CHECK(he2.e[2] == LaurentSeries::monomial(Rat(-1, 2), -1));
}

TEST_CASE("hook Schur values") {
  CHECK(hook_schur(HookIndex(2, 2), wv({1})) ==
        LaurentSeries::monomial(Rat(1, 2), -2));
  // s_(1) = p_1 = q_1/h for any weights.
  CHECK(hook_schur(HookIndex(1, 1), wv({5, 7})) ==
        LaurentSeries::monomial(Rat(5), -1));
  CHECK(hook_schur(HookIndex(3, 2), wv({1})) ==
        LaurentSeries::monomial(Rat(1, 3), -3));
  CHECK_THROWS_AS(HookIndex(2, 3), Error);
}

TEST_CASE("batch hooks agree with the direct sum") {
  Rng rng(5);
  for (int iter = 0; iter < 6; ++iter) {
    std::vector<Rat> q(rng.pick(1, 3));
    for (auto& x : q) x = rng.rat();
    WeightVector w{q};
    long d = rng.pick(1, 8);
    auto he = hom_and_elem(w, d);
    auto hooks = hook_schur_all(d, he);
    for (long k = 1; k <= d; ++k)
      CHECK(hooks[k - 1] == hook_schur(HookIndex(d, k), w));
  }
}

TEST_CASE("binomial special case") {
  CHECK(hook_schur_simple(HookIndex(2, 2)) == Rat(1, 2));
  CHECK(hook_schur_simple(HookIndex(1, 1)) == Rat(1));
  CHECK(hook_schur_simple(HookIndex(4, 2)) == Rat(1, 8));
}

TEST_CASE("homogeneity of the one-weight specialization") {
  Rng rng(9);
  for (long d = 1; d <= 8; ++d) {
    Rat c = rng.rat_nonzero();
    for (long k = 1; k <= d; ++k) {
      LaurentSeries got = hook_schur(HookIndex(d, k), WeightVector(std::vector<Rat>{c}));
      Rat expect = hook_schur_simple(HookIndex(d, k)) * rat_pow(c, d);
      CHECK(got == LaurentSeries::monomial(expect, -d));
    }
  }
}

TEST_CASE("principal specialization derivative: hook dichotomy") {
  CHECK(principal_spec_derivative({2, 2}) == Rat(0));
  CHECK(principal_spec_derivative({3, 1}) == Rat(-1, 4));
  CHECK(principal_spec_derivative({1}) == Rat(1));
  CHECK(principal_spec_derivative({}) == Rat(0));
  CHECK_THROWS_AS(principal_spec_derivative({1, 2}), Error);
  CHECK_THROWS_AS(principal_spec_derivative({2, 0}), Error);

  for (long n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      Rat got = principal_spec_derivative(lambda);
      bool hook = lambda.size() <= 1 || lambda[1] <= 1;
      if (!hook) {
        CHECK(got == Rat(0));
      } else {
        long d = 0;
        for (long p : lambda) d += p;
        long k = lambda[0];
        Rat expect(1, d);
        if ((d - k) % 2 != 0) expect = -expect;
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("classical e/h alternating identity") {
  Rng rng(13);
  for (int iter = 0; iter < 8; ++iter) {
    std::vector<Rat> q(rng.pick(1, 3));
    for (auto& x : q) x = rng.rat();
    auto he = hom_and_elem(WeightVector{q}, 7);
    for (long n = 1; n <= 7; ++n) {
      LaurentSeries acc;
      for (long i = 0; i <= n; ++i) {
        LaurentSeries term = he.e[i] * he.h[n - i];
        acc = (i % 2 == 0) ? acc + term : acc - term;
      }
      CHECK(acc.zero());
    }
  }
}

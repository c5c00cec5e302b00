#include "onepoint/demo.hpp"

namespace onepoint {

namespace {

K h_power(long e) { return K(PolyQ::variable().shifted_up(e - 1)); }

}  // namespace

ClosureDemo closure_demo_monotone() {
  ClosureDemo demo;
  K h = h_power(1);
  K h2 = h_power(2);

  // d*h*(1-d*h) u(d+1) - u(d) = 0, u(0) = 0, u(1) = 1: the scaled sequence
  // h u_d with ratio G(dh)/(dh) for G(z) = 1/(1-z).
  demo.rec1 = make_recurrence(
      0, 0,
      {KPoly(K(-1)), KPoly(std::vector<K>{K(0), h, K(0) - h2})},
      {K(0), K(1)});

  // (d+1)h(1+(d+1)h) v(d+1) + v(d) = 0, v(0) = h: the scaled sequence
  // h v_d with ratio -G(-(d+1)h)/((d+1)h).
  demo.rec2 = make_recurrence(
      0, 0,
      {KPoly(K(1)),
       KPoly(std::vector<K>{h + h2, h + h2 * K(2), h2})},
      {h});

  // (d+1) s(d+1) - d s(d) = 0, s(1) = 1: the sequence 1/d.
  demo.rec3 = make_recurrence(
      0, 1, {KPoly(std::vector<K>{K(0), K(-1)}), KPoly(std::vector<K>{K(1), K(1)})},
      {K(0), K(1)});

  demo.cauchy = cauchy_closure(demo.rec1, demo.rec2);
  demo.hadamard = hadamard_closure(demo.cauchy, demo.rec3);
  demo.final_rec = shrink_order(demo.hadamard, std::max<long>(4, demo.hadamard.degree()));
  demo.relation = relation_from_recurrence(demo.final_rec);
  demo.gd = to_gd_form(demo.relation);
  return demo;
}

}  // namespace onepoint

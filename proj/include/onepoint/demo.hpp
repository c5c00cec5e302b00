#ifndef ONEPOINT_DEMO_HPP
#define ONEPOINT_DEMO_HPP

#include "onepoint/holonomic.hpp"
#include "onepoint/recursion.hpp"

namespace onepoint {

// The worked monotone pipeline: two hypergeometric recurrences, their
// Cauchy product, the Hadamard product with 1/d, and the reduced final
// relation with its (g,d) form.
struct ClosureDemo {
  PRecurrence rec1, rec2, rec3;
  PRecurrence cauchy;
  PRecurrence hadamard;
  PRecurrence final_rec;
  HLevelRelation relation;
  std::vector<GDRecursion> gd;
};

ClosureDemo closure_demo_monotone();

}  // namespace onepoint

#endif

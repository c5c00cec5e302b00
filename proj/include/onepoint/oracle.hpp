#ifndef ONEPOINT_ORACLE_HPP
#define ONEPOINT_ORACLE_HPP

#include <map>

#include "onepoint/rational.hpp"

namespace onepoint {

// Genus histogram of one brute-force enumeration.  Shares no code with the
// generator: genus always comes from an Euler characteristic count.
struct GluingCount {
  long d = 0;
  std::map<long, Rat> genus_histogram;

  Rat at_genus(long g) const {
    auto it = genus_histogram.find(g);
    return it == genus_histogram.end() ? Rat(0) : it->second;
  }
};

// All (2d-1)!! gluings of a 2d-gon, bucketed by the genus of the glued
// surface.  Supported for 1 <= d <= 6.
GluingCount ribbon_gluings(long d);

// Monotone transposition factorizations of the cycle (1 2 ... d) with
// m = 2g - 1 + d factors; equals m_g(d).  Supported for d <= 5, g <= 2.
Rat monotone_factorizations(long d, long g);

// Pairs (s1, s2) with s1 s2 = (1 2 ... d), bucketed by genus; equals the
// dessin numbers b_g(d).  Supported for d <= 5.
GluingCount dessin_counts(long d);

// Tuples (s1, ..., sm) with product (1 2 ... d), bucketed by genus; equals
// the m-BMS numbers.  Supported for m <= 3, d <= 4.
GluingCount bms_counts(long m, long d);

}  // namespace onepoint

#endif

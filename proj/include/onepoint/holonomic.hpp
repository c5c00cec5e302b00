#ifndef ONEPOINT_HOLONOMIC_HPP
#define ONEPOINT_HOLONOMIC_HPP

#include <optional>
#include <vector>

#include "onepoint/linalg.hpp"
#include "onepoint/polynomial.hpp"

namespace onepoint {

// Linear recurrence sum_t p_t(m) a_{m+t} = 0 with coefficients polynomial
// in the index over K = Q(h).
//
//   offset      index of the first sequence term
//   valid_from  the relation is asserted for every m >= valid_from
//   initial     values at offset, offset+1, ...; must cover every index the
//               recurrence cannot reach (leading-coefficient zeros)
struct PRecurrence {
  long offset = 0;
  long valid_from = 0;
  std::vector<KPoly> coeffs;
  std::vector<K> initial;

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
  long degree() const {
    long d = -1;
    for (const auto& p : coeffs) d = std::max(d, p.degree());
    return d;
  }
};

// Linear ODE sum_i P_i(x) A^(i)(x) = 0 over K.
struct LinearODE {
  std::vector<KPoly> coeffs;  // P_0..P_r in x
  long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

// Sequence with rational consecutive-term ratio a_{n+1}/a_n.
struct HypergeometricTerm {
  KK ratio;
  long first_index = 0;
  K first_value;
};

PRecurrence make_recurrence(long offset, long valid_from,
                            std::vector<KPoly> coeffs, std::vector<K> initial);

K eval_at_index(const KPoly& p, long m);

// Terms from offset through n_max.  Throws "holonomic/singular-index" if
// the leading coefficient vanishes at an index not covered by initial.
std::vector<K> unroll(const PRecurrence& rec, long n_max);

// Checks the recurrence against its own initial terms wherever the window
// fits; returns the first violating index if any.
std::optional<long> check_initial_terms(const PRecurrence& rec);

PRecurrence from_hypergeometric(const HypergeometricTerm& t);

// Certified closures.  The output recurrence is verified against directly
// computed terms of the combined sequence and carries those terms as its
// initial segment.
PRecurrence sum_closure(const PRecurrence& a, const PRecurrence& b);
PRecurrence hadamard_closure(const PRecurrence& a, const PRecurrence& b);
PRecurrence cauchy_closure(const PRecurrence& a, const PRecurrence& b);

LinearODE rec_to_ode(const PRecurrence& rec);
// Conversion only: no initial terms attached.  valid_from reports the
// first index at which the relation is guaranteed.
PRecurrence ode_to_rec(const LinearODE& ode);

// Clears denominators, removes content over Q[h] (and a common index
// factor when that provably leaves the asserted range intact), and fixes
// the sign of the leading coefficient.
PRecurrence normalize_recurrence(const PRecurrence& rec);

// Looks for a lower-order recurrence satisfied by the same sequence:
// candidates are guessed from unrolled terms, then certified by exact
// right-division of the known annihilator and a window check.  Returns the
// input when nothing smaller is found.
PRecurrence shrink_order(const PRecurrence& rec, long degree_max);

// Candidate recurrences of given order/degree annihilating the values
// (indices offset..offset+values.size()-1); every returned candidate is
// checked against the whole window.
std::vector<PRecurrence> guess_recurrence(const std::vector<K>& values,
                                          long offset, long order, long degree);

// Ore right division: L = Q * L1 + R in the shift algebra over Q(h)(n).
// Returns true and Q when the remainder vanishes.
bool right_divides(const PRecurrence& big, const PRecurrence& small,
                   std::vector<KK>* quotient = nullptr);

}  // namespace onepoint

#endif

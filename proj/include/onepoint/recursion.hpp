#ifndef ONEPOINT_RECURSION_HPP
#define ONEPOINT_RECURSION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onepoint/generator.hpp"
#include "onepoint/holonomic.hpp"
#include "onepoint/polynomial.hpp"

namespace onepoint {

// h-level relation sum_{j=0}^{R} c_j(d, h) n(d-j) = 0 with c_j in Q[h][d],
// content-free.
struct HLevelRelation {
  std::vector<PolyDH> coeffs;  // index j = shift
  long span() const { return static_cast<long>(coeffs.size()) - 1; }
};

// 1-point recursion sum p_ij(d) n_{g-i}(d-j) = 0.
struct GDRecursion {
  struct Term {
    long i = 0;
    long j = 0;
    PolyQ p;
  };
  std::vector<Term> terms;  // sorted by (i, j), zero polys dropped

  long i_max() const;
  long j_max() const;
  friend bool operator==(const GDRecursion& a, const GDRecursion& b);
};

HLevelRelation normalize_relation(HLevelRelation rel);
GDRecursion normalize_gd(GDRecursion rec);

// Ansatz solve on exact series data n(1..N): one equation per
// d in [R+1, N-V], unknowns a_ij in Q(h).  Returned relations are
// content-free and verified against all N values, buffer included.
std::vector<HLevelRelation> guess(const std::vector<OnePointSeries>& series,
                                  long R, long D, long V = 5);

// First d in [d_lo, d_hi] violating the relation (equations with d-j < 1
// are skipped); nullopt when the relation holds throughout.
std::optional<long> verify(const HLevelRelation& rel,
                           const std::vector<OnePointSeries>& series,
                           long d_lo, long d_hi);
std::optional<long> verify(const HLevelRelation& rel, const ProblemSpec& p,
                           long d_lo, long d_hi);

// Splits by h-parity; each parity class that survives is its own
// recursion.  One or two entries.
std::vector<GDRecursion> to_gd_form(const HLevelRelation& rel);

// h-level lift of a (g,d)-form recursion stated in an index with the given
// stride (series index = stride * catalog index).
HLevelRelation from_gd_form(const GDRecursion& rec, long stride = 1);

// Shift-form view of a recurrence sum_t p_t(m) c(m+t) = 0 as
// sum_j c_j(d) n(d-j) = 0 with c_j(d) = p_{R-j}(d-R).
HLevelRelation relation_from_recurrence(const PRecurrence& rec);

// First (g, d) in the table violating the recursion, reading the catalog
// index through the stride; negative-genus terms count as zero.
std::optional<std::pair<long, long>> first_violation(const GDRecursion& rec,
                                                     const InvariantTable& table,
                                                     long stride = 1);

struct SearchProbe {
  long R = 0, D = 0;
  long candidates = 0;  // nullspace vectors before verification
  long kept = 0;
};
struct SearchResult {
  HLevelRelation relation;
  std::vector<GDRecursion> gd;
  long R = 0, D = 0;
  std::vector<SearchProbe> trace;
};
// Increasing-R-then-D scan; the first verified relation wins, smaller
// total d-degree then h-degree breaking ties inside one nullspace.
std::optional<SearchResult> search_minimal(const ProblemSpec& p, long R_max,
                                           long D_max, long N, long V = 5);
std::vector<SearchProbe> search_trace(const ProblemSpec& p, long R_max,
                                      long D_max, long N, long V = 5);

struct DiagnosticProbe {
  long R = 0, D = 0, H = 0;
  long unknowns = 0;
  long equations = 0;
  long solutions = 0;
};
struct DiagnosticReport {
  bool found = false;
  long R = 0, D = 0, H = 0;
  std::optional<GDRecursion> recursion;
  std::vector<DiagnosticProbe> probes;
};
// Definition-1.1 ansatz directly on table numbers with unknowns in Q:
// genus shifts i <= H_max, index shifts j <= R_max, degree <= D_max.  Every
// grid point must be overdetermined by the table (unknowns + V equations),
// else "recursion-engine/insufficient-table" is thrown.
DiagnosticReport no_recursion_diagnostic(const InvariantTable& table,
                                         long R_max, long D_max, long H_max,
                                         long V = 5);

struct NamedRecursion {
  std::string name;
  std::string preset;   // catalog problem generating the numbers
  std::string symbol;
  long stride = 1;
  GDRecursion rec;
};
// Harer-Zagier, Do-Norbury, 3-hypermap, 3-BMS and monotone recursions as
// literal data.
std::vector<NamedRecursion> catalog_recursions();

}  // namespace onepoint

#endif

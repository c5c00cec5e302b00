#ifndef ONEPOINT_LINALG_HPP
#define ONEPOINT_LINALG_HPP

#include <utility>
#include <vector>

#include "onepoint/polynomial.hpp"

namespace onepoint {

template <class F>
using Matrix = std::vector<std::vector<RationalFunction<F>>>;

// Exact basis of the right nullspace of an r x c matrix over Frac(F[x]).
// Rows are cleared of denominators, eliminated fraction-free
// (Bareiss), and the free columns are back-substituted over the fraction
// field.  Each basis vector is scaled so its last nonzero entry is 1;
// vectors are ordered by free column index.  Pivots are chosen as the first
// nonzero entry scanning top to bottom, so results are deterministic.
template <class F>
std::vector<std::vector<RationalFunction<F>>> nullspace(const Matrix<F>& m) {
  using RF = RationalFunction<F>;
  using P = Polynomial<F>;
  const size_t rows = m.size();
  if (rows == 0) throw Error("field-arith/nullspace", "matrix needs rows");
  const size_t cols = m[0].size();
  if (cols == 0) throw Error("field-arith/nullspace", "matrix needs columns");

  std::vector<std::vector<P>> a(rows, std::vector<P>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols)
      throw Error("field-arith/nullspace", "ragged matrix");
    P common(1);
    for (const auto& e : m[i]) common = lcm(common, e.den());
    for (size_t j = 0; j < cols; ++j)
      a[i][j] = m[i][j].num() * exact_div(common, m[i][j].den());
  }

  P prev(1);
  size_t pr = 0;
  std::vector<std::pair<size_t, size_t>> pivots;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t sel = pr;
    while (sel < rows && a[sel][pc].zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pr) std::swap(a[sel], a[pr]);
    for (size_t i = pr + 1; i < rows; ++i) {
      for (size_t j = pc + 1; j < cols; ++j)
        a[i][j] = exact_div(a[pr][pc] * a[i][j] - a[i][pc] * a[pr][j], prev);
      a[i][pc] = P();
    }
    prev = a[pr][pc];
    pivots.emplace_back(pr, pc);
    ++pr;
  }

  std::vector<bool> is_pivot_col(cols, false);
  for (auto& [r, c] : pivots) is_pivot_col[c] = true;

  std::vector<std::vector<RF>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<RF> v(cols, RF(0));
    v[f] = RF(1);
    for (size_t k = pivots.size(); k-- > 0;) {
      auto [r, c] = pivots[k];
      if (c > f) continue;
      RF s(0);
      for (size_t j = c + 1; j < cols; ++j)
        if (!v[j].zero() && !a[r][j].zero()) s += RF(a[r][j]) * v[j];
      v[c] = -s / RF(a[r][c]);
    }
    size_t last = cols;
    for (size_t j = cols; j-- > 0;)
      if (!v[j].zero()) {
        last = j;
        break;
      }
    RF scale = v[last].inverse();
    for (auto& x : v) x *= scale;
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
size_t rank(const Matrix<F>& m) {
  const size_t cols = m.empty() ? 0 : m[0].size();
  return cols - nullspace(m).size();
}

// First linear dependence scan: vectors v_0, v_1, ... are supplied one at a
// time; insert() returns the dependence coefficients (last one = 1) as soon
// as the new vector is a combination of the earlier ones.  Works over the
// fraction field with gcd-reduced arithmetic.
template <class F>
class DependenceScan {
  using RF = RationalFunction<F>;

 public:
  // Returns empty vector while the family stays independent.
  std::vector<RF> insert(std::vector<RF> v) {
    std::vector<RF> combo(inserted_ + 1, RF(0));
    combo[inserted_] = RF(1);
    for (size_t k = 0; k < rows_.size(); ++k) {
      const auto& [row, rcombo, lead] = rows_[k];
      if (v[lead].zero()) continue;
      RF factor = v[lead];
      for (size_t j = 0; j < v.size(); ++j)
        if (!row[j].zero()) v[j] -= factor * row[j];
      for (size_t j = 0; j < rcombo.size(); ++j)
        if (!rcombo[j].zero()) combo[j] -= factor * rcombo[j];
    }
    size_t lead = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].zero()) {
        lead = j;
        break;
      }
    ++inserted_;
    if (lead == v.size()) {
      // combo expresses 0 = sum combo_i * v_i with combo.back() == 1.
      return combo;
    }
    RF inv = v[lead].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    combo.resize(inserted_, RF(0));
    rows_.emplace_back(std::move(v), std::move(combo), lead);
    return {};
  }

 private:
  struct Row {
    Row(std::vector<RF> r, std::vector<RF> c, size_t l)
        : row(std::move(r)), combo(std::move(c)), lead(l) {}
    std::vector<RF> row;
    std::vector<RF> combo;
    size_t lead;
  };
  std::vector<Row> rows_;
  size_t inserted_ = 0;
};

}  // namespace onepoint

#endif

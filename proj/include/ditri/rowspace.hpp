#pragma once

#include <map>
#include <vector>

#include "ditri/rational.hpp"

namespace ditri {

/* Incremental echelon basis over the rationals.  Stored rows are primitive
   integer vectors (content stripped, leading entry positive), each remembering
   the rational combination of inserted source rows it came from.  Pivots are
   the first nonzero columns and strictly increase down the basis, which keeps
   functional extraction a triangular solve. */
class RowSpace {
 public:
  explicit RowSpace(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int dim() const { return int(rows_.size()); }

  /* Reduce a copy of row against the basis.  Returns the remainder and, via
     used, the combination of source rows accounting for row - remainder. */
  std::vector<Rational> reduce(std::vector<Rational> row,
                               std::map<int, Rational>* used = nullptr) const;

  /* Insert the remainder of row if nonzero.  source tags the row for
     combination tracking.  Returns true when the dimension grew. */
  bool insert(std::vector<Rational> row, int source);

  /* Pivot columns in increasing order. */
  std::vector<int> pivots() const;

  /* The combination of source rows equal to row, when row is in the span. */
  bool membership(const std::vector<Rational>& row, std::map<int, Rational>& combo) const;

  /* A functional w vanishing on the span with <w, row> != 0, supported on the
     pivot columns and the remainder's leading column (where it takes value 1).
     Requires row outside the span. */
  std::map<int, Rational> separating_functional(const std::vector<Rational>& row) const;

  /* Basis row as rationals (for reuse as an element). */
  std::vector<Rational> basis_row(int i) const;

 private:
  struct Row {
    std::vector<Integer> v;
    int pivot;
    std::map<int, Rational> combo; // over source tags
  };
  int ncols_;
  std::vector<Row> rows_; // sorted by pivot
};

} // namespace ditri

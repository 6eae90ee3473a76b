#pragma once

#include "liemax/matrix.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace liemax {

/// Sparse row: (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow to_sparse(const RatVector& dense);
RatVector to_dense(const SparseRow& row, std::size_t cols);

/// Builds a SparseRow from unsorted (column, value) contributions, summing
/// duplicate columns and dropping zeros.
class RowAccumulator {
 public:
  void add(std::size_t col, const Rational& value);
  SparseRow take();
  bool empty() const { return terms_.empty(); }

 private:
  std::map<std::size_t, Rational> terms_;
};

/// Incremental Gaussian elimination over the rationals.
///
/// Rows are inserted one at a time and reduced against the pivots found so
/// far; most rows of the structured systems here reduce to zero after a few
/// sparse subtractions, so the cost tracks the rank rather than the row count.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Returns true when the row was independent of the rows added before.
  bool add(SparseRow row);
  bool add(const RatVector& row) { return add(to_sparse(row)); }

  /// Remainder of the row after reduction; empty iff the row lies in the span.
  SparseRow reduce(SparseRow row) const;
  bool contains(const RatVector& row) const { return reduce(to_sparse(row)).empty(); }

  /// Reduced row echelon basis of the row space, ordered by pivot column.
  std::vector<SparseRow> reduced_basis() const;

  /// Canonical (reduced echelon) basis of the null space {x : R x = 0}.
  std::vector<SparseRow> kernel_basis() const;

  /// Columns without a pivot, ascending.
  std::vector<std::size_t> free_columns() const;

  /// One solution x of R x = rhs given as the last-column-augmented system:
  /// construct with cols = unknowns + 1 and add rows [a | b]; free variables
  /// are set to zero. nullopt when inconsistent.
  std::optional<RatVector> solve_augmented() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row, leading 1
};

/// Canonical basis of span(vectors): reduced echelon over the given coordinates.
std::vector<RatVector> canonical_span(const std::vector<RatVector>& vectors, std::size_t cols);

/// Canonical basis of the null space of a dense system.
std::vector<RatVector> null_space(const std::vector<RatVector>& rows, std::size_t cols);

/// Subspace of n x n matrices with a unique reduced echelon basis over the
/// row-major flattening.
class MatrixSubspace {
 public:
  explicit MatrixSubspace(std::size_t ambient_dim) : n_(ambient_dim) {}
  static MatrixSubspace span(std::size_t ambient_dim, const std::vector<RatMatrix>& generators);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  bool contains(const RatMatrix& m) const;

  friend bool operator==(const MatrixSubspace& a, const MatrixSubspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_;
  std::vector<RatMatrix> basis_;
};

/// Coordinates of symmetric n x n matrices: the upper triangle in row-major
/// order. Pivots of a reduced echelon basis in these coordinates coincide
/// with the pivots under the full row-major flattening.
std::size_t sym_coord_count(std::size_t n);
std::size_t sym_coord(std::size_t n, std::size_t a, std::size_t b);
RatMatrix sym_from_coords(std::size_t n, const RatVector& coords);
RatVector sym_to_coords(const RatMatrix& s);

/// Canonical basis of a span of symmetric matrices.
std::vector<RatMatrix> canonical_sym_span(std::size_t n, const std::vector<RatMatrix>& forms);

} // namespace liemax

#pragma once

#include "liemax/linear.hpp"
#include "liemax/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace liemax {

/// Sparse coefficient vector over a Lie algebra basis: (index, coefficient).
using SparseVec = SparseRow;

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [v_i, v_j] = sum_k c[i][j][k] v_k on a labeled basis.
///
/// The table is stored for every ordered pair so that inputs violating
/// antisymmetry can still be represented and reported by validate().
/// Values are immutable once built; copies are cheap to share across threads.
class LieAlgebra {
 public:
  class Builder;

  LieAlgebra() = default;

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// [v_i, v_j] as a sparse vector.
  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// ad_{v_i} as a matrix: column j holds [v_i, v_j].
  RatMatrix ad(std::size_t i) const;

  bool is_abelian() const;

  /// Hash of the canonical structure-constant table, 16 hex digits (FNV-1a).
  std::string fingerprint() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;  // dim_ * dim_ entries
};

class LieAlgebra::Builder {
 public:
  explicit Builder(std::size_t dim);
  Builder(std::vector<std::string> labels);

  /// Sets [v_i, v_j] = value and [v_j, v_i] = -value (0-based indices).
  Builder& bracket(std::size_t i, std::size_t j, const SparseVec& value);
  Builder& bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff);
  /// Sets only the single ordered entry; no antisymmetric completion.
  Builder& raw(std::size_t i, std::size_t j, const SparseVec& value);

  LieAlgebra build() &&;

 private:
  LieAlgebra alg_;
};

} // namespace liemax

#pragma once

#include "liemax/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace liemax {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const RatVector& d);
  /// E_{row,col}: one at (row, col), zero elsewhere.
  static RatMatrix unit(std::size_t n, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Row-major flattening; the canonical coordinate order for subspaces.
  const RatVector& flat() const { return data_; }
  static RatMatrix from_flat(std::size_t rows, std::size_t cols, RatVector values);

  RatMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  RatVector column(std::size_t c) const;
  RatVector apply(const RatVector& x) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RatVector data_;
};

/// Exact inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

/// Coefficients c_0..c_n of det(t I - m) = sum c_k t^k (monic, c_n = 1),
/// computed by Faddeev-LeVerrier. Exact, so it serves as a spectrum fingerprint.
RatVector characteristic_polynomial(const RatMatrix& m);

/// Exact LDL^T of a symmetric matrix with L unit lower triangular.
/// nullopt if a zero pivot shows up (the matrix is then not positive definite).
struct LdlFactors {
  RatMatrix lower;
  RatVector diag;
};
std::optional<LdlFactors> ldlt(const RatMatrix& symmetric);

/// Exact positive-definiteness check via leading principal minors.
bool is_positive_definite(const RatMatrix& symmetric);

/// Orthogonality g^T g = I, exactly.
bool is_orthogonal(const RatMatrix& g);

std::string to_string(const RatMatrix& m);

} // namespace liemax

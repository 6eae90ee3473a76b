#pragma once

#include "liemax/lie_algebra.hpp"
#include "liemax/linear.hpp"
#include "liemax/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liemax {

/// Inner product on the algebra given by its Gram matrix over the basis.
/// Construction checks symmetry and positive definiteness exactly.
class InnerProduct {
 public:
  explicit InnerProduct(RatMatrix gram);
  static InnerProduct identity(std::size_t n) { return InnerProduct(RatMatrix::identity(n)); }

  const RatMatrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  bool is_identity() const { return gram_ == RatMatrix::identity(gram_.rows()); }

 private:
  RatMatrix gram_;
};

/// Symmetric bilinear form on the algebra, as its matrix over the basis.
class SymForm {
 public:
  explicit SymForm(RatMatrix theta);

  const RatMatrix& matrix() const { return theta_; }
  std::size_t dim() const { return theta_.rows(); }
  const Rational& operator()(std::size_t a, std::size_t b) const { return theta_(a, b); }

  friend bool operator==(const SymForm& a, const SymForm& b) { return a.theta_ == b.theta_; }

 private:
  RatMatrix theta_;
};

namespace core {

struct Violation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  std::size_t i, j, k;  // 0-based
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks antisymmetry of the table and the Jacobi identity on every basis
/// triple, exactly. Never throws.
ValidationReport validate(const LieAlgebra& alg);

RatVector bracket(const LieAlgebra& alg, const RatVector& x, const RatVector& y);

/// ||[,]||^2 = sum_{i,j} <[u_i,u_j],[u_i,u_j]> over an orthonormal basis {u_i},
/// evaluated as the basis-free contraction with the dual metric.
Rational bracket_norm_sq(const LieAlgebra& alg, const InnerProduct& ip);

/// The algebra expressed in the basis u_a = sum_i P(i,a) v_i.
LieAlgebra change_basis(const LieAlgebra& alg, const RatMatrix& p);

/// The algebra in an orthonormal basis of ip, when exact LDL^T produces
/// rational square-root pivots. `basis` holds the new basis vectors as columns.
struct Orthonormalized {
  LieAlgebra alg;
  RatMatrix basis;
};
std::optional<Orthonormalized> orthonormalize(const LieAlgebra& alg, const InnerProduct& ip);

/// Der(g): the exact kernel of the Leibniz system over the n^2 entries of D.
MatrixSubspace derivation_algebra(const LieAlgebra& alg);

/// R id + Der(g), the Lie algebra of the positive scalings of Aut(g).
MatrixSubspace scaled_derivation_algebra(const LieAlgebra& alg);
MatrixSubspace scaled_derivation_algebra(const LieAlgebra& alg, const MatrixSubspace& der);

/// True iff D satisfies the Leibniz rule on all basis pairs.
bool is_derivation(const LieAlgebra& alg, const RatMatrix& d);

/// Dimension of the orbit tangent space {A + A^T : A in R id + Der(g)}.
std::size_t orbit_tangent_dim(const MatrixSubspace& scaled_der);

/// Normal space of the R>0 Aut(g) orbit through the metric making the basis
/// orthonormal: {Theta symmetric : tr(Theta A) = 0 for all A in R id + Der(g)}.
/// Throws std::invalid_argument when ip is not the identity Gram.
std::vector<SymForm> normal_space(const LieAlgebra& alg, const InnerProduct& ip);
std::vector<SymForm> normal_space(const MatrixSubspace& scaled_der);

struct TransitivityResult {
  bool transitive;
  std::size_t codimension;  // dim of the normal space
  std::size_t tangent_dim;
};
TransitivityResult orbit_transitivity_check(const LieAlgebra& alg);

/// tr(ad_{v_i}) = 0 for every basis vector.
bool unimodularity_check(const LieAlgebra& alg);

/// tr(ad_{v_i}) for each i; the mean-curvature covector.
RatVector ad_traces(const LieAlgebra& alg);

} // namespace core
} // namespace liemax

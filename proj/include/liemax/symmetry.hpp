#pragma once

#include "liemax/lie_core.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liemax::symmetry {

enum class Provenance { sign_diagonal, graph_lift, vertex_reflection, user };
std::string to_string(Provenance p);

struct Generator {
  RatMatrix matrix;
  Provenance provenance;
};

/// g e_a = sign[a] e_{image[a]}.
struct SignedPermutation {
  std::vector<std::size_t> image;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t n);
  std::size_t size() const { return image.size(); }
  RatMatrix matrix() const;
  SignedPermutation compose(const SignedPermutation& after) const;  // after o this
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

std::optional<SignedPermutation> as_signed_permutation(const RatMatrix& g);

/// g^T g = I and g[x,y] = [gx, gy] on all basis pairs, exactly.
/// Throws std::invalid_argument on a size mismatch.
bool is_orthogonal_automorphism(const LieAlgebra& alg, const RatMatrix& g);

/// Finite set of generators of a subgroup of Aut(g) ∩ O(n). Every generator
/// is checked on insertion.
class SymmetryGroup {
 public:
  explicit SymmetryGroup(std::size_t dim) : dim_(dim) {}

  /// Throws std::invalid_argument unless g is an orthogonal automorphism of alg.
  void add(const LieAlgebra& alg, RatMatrix g, Provenance provenance);
  void merge(const SymmetryGroup& other);

  std::size_t dim() const { return dim_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::vector<std::string> provenance_summary() const;

 private:
  std::size_t dim_;
  std::vector<Generator> generators_;
};

/// Diagonal sign automorphisms: solves eps_i eps_j eps_k = 1 for every
/// nonzero c[i][j][k] over GF(2). The result holds a GF(2) basis of the
/// solution space as generators (2^size() elements in total).
SymmetryGroup sign_diagonal_subgroup(const LieAlgebra& alg);

/// All sign patterns (as +-1 vectors) of the diagonal sign subgroup.
/// Throws std::length_error when there are more than 2^max_log2 of them.
std::vector<std::vector<int>> sign_diagonal_elements(const LieAlgebra& alg, std::size_t max_log2 = 20);

struct ReversibilityResult {
  enum class Status { reversible, failing, undecided };
  Status status;
  std::size_t first = 0, second = 0;  // failing pair, 0-based
  std::size_t explored = 0;           // group elements visited
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// Whether every pair of distinct basis vectors is reversed (one fixed up to
/// a sign a, the other sent to -a times itself) by an element of the group
/// generated by the generators. Exploration stops at `cap` elements with an
/// undecided result.
ReversibilityResult two_reversible_check(const LieAlgebra& alg, const SymmetryGroup& group,
                                         std::size_t cap = kDefaultGroupCap);

/// {Theta : g^T Theta g = Theta for every generator g}, canonical basis.
std::vector<SymForm> invariant_forms_subspace(const SymmetryGroup& group);

struct Certificate {
  enum class Status { maximal, inconclusive };
  Status status;
  std::size_t dim_normal;
  std::size_t dim_invariant;
  std::size_t dim_invariant_normal;
  std::optional<SymForm> witness;
  std::size_t generator_count;
  std::vector<std::string> provenance;
  std::string algebra_hash;
};
std::string to_string(Certificate::Status s);

/// Intersects the group-invariant forms with the orbit normal space at the
/// identity Gram. MAXIMAL when the intersection is {0}; INCONCLUSIVE
/// otherwise, with the first canonical basis form as witness.
Certificate maximality_certificate(const LieAlgebra& alg, const SymmetryGroup& group);
Certificate maximality_certificate(const LieAlgebra& alg, const SymmetryGroup& group,
                                   const MatrixSubspace& scaled_der);

/// Canonical basis of the intersection itself.
std::vector<SymForm> invariant_normal_forms(const LieAlgebra& alg, const SymmetryGroup& group,
                                            const MatrixSubspace& scaled_der);

} // namespace liemax::symmetry

#include "liemax/symmetry.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace liemax::symmetry {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::sign_diagonal: return "sign_diagonal";
    case Provenance::graph_lift: return "graph_lift";
    case Provenance::vertex_reflection: return "vertex_reflection";
    case Provenance::user: return "user";
  }
  return "unknown";
}

std::string to_string(Certificate::Status s) {
  return s == Certificate::Status::maximal ? "MAXIMAL" : "INCONCLUSIVE";
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation p{std::vector<std::size_t>(n), std::vector<int>(n, 1)};
  for (std::size_t i = 0; i < n; ++i) p.image[i] = i;
  return p;
}

RatMatrix SignedPermutation::matrix() const {
  RatMatrix m(size(), size());
  for (std::size_t a = 0; a < size(); ++a) m(image[a], a) = sign[a];
  return m;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& after) const {
  SignedPermutation out{std::vector<std::size_t>(size()), std::vector<int>(size())};
  for (std::size_t a = 0; a < size(); ++a) {
    out.image[a] = after.image[image[a]];
    out.sign[a] = sign[a] * after.sign[image[a]];
  }
  return out;
}

std::optional<SignedPermutation> as_signed_permutation(const RatMatrix& g) {
  if (!g.is_square()) return std::nullopt;
  const std::size_t n = g.rows();
  SignedPermutation p{std::vector<std::size_t>(n), std::vector<int>(n)};
  std::vector<bool> hit(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < n; ++r) {
      const auto& x = g(r, a);
      if (sgn(x) == 0) continue;
      if (row || (x != 1 && x != -1)) return std::nullopt;
      row = r;
    }
    if (!row || hit[*row]) return std::nullopt;
    hit[*row] = true;
    p.image[a] = *row;
    p.sign[a] = sgn(g(*row, a));
  }
  return p;
}

namespace {

bool signed_perm_automorphism(const LieAlgebra& alg, const SignedPermutation& p) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // g[v_i,v_j] vs s_i s_j [v_{pi i}, v_{pi j}]
      RowAccumulator lhs;
      for (const auto& [k, c] : alg.bracket_basis(i, j)) lhs.add(p.image[k], c * p.sign[k]);
      RowAccumulator rhs;
      for (const auto& [k, c] : alg.bracket_basis(p.image[i], p.image[j])) rhs.add(k, c * (p.sign[i] * p.sign[j]));
      if (lhs.take() != rhs.take()) return false;
    }
  return true;
}

} // namespace

bool is_orthogonal_automorphism(const LieAlgebra& alg, const RatMatrix& g) {
  const std::size_t n = alg.dim();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("automorphism candidate has wrong size");
  if (auto p = as_signed_permutation(g)) return signed_perm_automorphism(alg, *p);
  if (!is_orthogonal(g)) return false;
  std::vector<RatVector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(g.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVector lhs = g.apply(to_dense(alg.bracket_basis(i, j), n));
      if (lhs != core::bracket(alg, cols[i], cols[j])) return false;
    }
  return true;
}

void SymmetryGroup::add(const LieAlgebra& alg, RatMatrix g, Provenance provenance) {
  if (alg.dim() != dim_) throw std::invalid_argument("group and algebra dimensions differ");
  if (!is_orthogonal_automorphism(alg, g))
    throw std::invalid_argument("generator is not an orthogonal automorphism");
  generators_.push_back({std::move(g), provenance});
}

void SymmetryGroup::merge(const SymmetryGroup& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("cannot merge groups of different dimension");
  generators_.insert(generators_.end(), other.generators_.begin(), other.generators_.end());
}

std::vector<std::string> SymmetryGroup::provenance_summary() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(to_string(g.provenance));
  return out;
}

namespace {

// Basis of {x in GF(2)^n : sum over each constraint = 0}.
std::vector<std::vector<std::uint8_t>> gf2_null_space(std::vector<std::vector<std::uint8_t>> rows, std::size_t n) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != r && rows[q][c])
        for (std::size_t k = 0; k < n; ++k) rows[q][k] ^= rows[r][k];
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint8_t> x(n, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<std::uint8_t>> sign_basis(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::set<std::vector<std::uint8_t>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& [k, c] : alg.bracket_basis(i, j)) {
        std::vector<std::uint8_t> row(n, 0);
        row[i] ^= 1;
        row[j] ^= 1;
        row[k] ^= 1;
        rows.insert(std::move(row));
      }
  return gf2_null_space({rows.begin(), rows.end()}, n);
}

} // namespace

SymmetryGroup sign_diagonal_subgroup(const LieAlgebra& alg) {
  SymmetryGroup group(alg.dim());
  for (const auto& x : sign_basis(alg)) {
    RatVector d(alg.dim());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] ? -1 : 1;
    group.add(alg, RatMatrix::diagonal(d), Provenance::sign_diagonal);
  }
  return group;
}

std::vector<std::vector<int>> sign_diagonal_elements(const LieAlgebra& alg, std::size_t max_log2) {
  const auto basis = sign_basis(alg);
  if (basis.size() > max_log2) throw std::length_error("too many sign patterns to enumerate");
  const std::size_t n = alg.dim();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    std::vector<std::uint8_t> x(n, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (mask >> b & 1)
        for (std::size_t i = 0; i < n; ++i) x[i] ^= basis[b][i];
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = x[i] ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

class PairCoverage {
 public:
  explicit PairCoverage(std::size_t n) : n_(n), covered_(n * n, false), remaining_(n * (n - 1) / 2) {}

  // fixed[a] = s when g e_a = s e_a, else 0.
  void mark(const std::vector<int>& fixed) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!fixed[i]) continue;
      for (std::size_t j = i + 1; j < n_; ++j)
        if (fixed[j] == -fixed[i] && !covered_[i * n_ + j]) {
          covered_[i * n_ + j] = true;
          --remaining_;
        }
    }
  }
  bool complete() const { return remaining_ == 0; }
  std::pair<std::size_t, std::size_t> first_gap() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!covered_[i * n_ + j]) return {i, j};
    return {0, 0};
  }

 private:
  std::size_t n_;
  std::vector<bool> covered_;
  std::size_t remaining_;
};

std::vector<int> fixed_signs(const SignedPermutation& p) {
  std::vector<int> f(p.size(), 0);
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p.image[a] == a) f[a] = p.sign[a];
  return f;
}

std::vector<int> fixed_signs(const RatMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<int> f(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Rational& d = g(a, a);
    if (d != 1 && d != -1) continue;
    bool pure = true;
    for (std::size_t r = 0; r < n && pure; ++r) pure = r == a || sgn(g(r, a)) == 0;
    if (pure) f[a] = sgn(d);
  }
  return f;
}

ReversibilityResult finish(const PairCoverage& cov, std::size_t explored, bool exhausted) {
  if (cov.complete()) return {ReversibilityResult::Status::reversible, 0, 0, explored};
  if (!exhausted) return {ReversibilityResult::Status::undecided, 0, 0, explored};
  auto [i, j] = cov.first_gap();
  return {ReversibilityResult::Status::failing, i, j, explored};
}

} // namespace

ReversibilityResult two_reversible_check(const LieAlgebra& alg, const SymmetryGroup& group, std::size_t cap) {
  const std::size_t n = alg.dim();
  if (group.dim() != n) throw std::invalid_argument("group and algebra dimensions differ");
  PairCoverage cov(n);
  if (cov.complete()) return {ReversibilityResult::Status::reversible, 0, 0, 0};

  std::vector<SignedPermutation> perms;
  bool all_perms = true;
  for (const auto& g : group.generators()) {
    if (auto p = as_signed_permutation(g.matrix)) perms.push_back(*p);
    else all_perms = false;
  }

  // Generators first: the usual families are covered without closure.
  for (const auto& g : group.generators()) cov.mark(fixed_signs(g.matrix));
  if (cov.complete()) return {ReversibilityResult::Status::reversible, 0, 0, group.size()};

  std::size_t explored = 1;
  if (all_perms) {
    std::set<SignedPermutation> seen{SignedPermutation::identity(n)};
    std::deque<SignedPermutation> queue{SignedPermutation::identity(n)};
    while (!queue.empty()) {
      auto x = std::move(queue.front());
      queue.pop_front();
      for (const auto& h : perms) {
        auto y = x.compose(h);
        if (!seen.insert(y).second) continue;
        if (++explored > cap) return finish(cov, cap, false);
        cov.mark(fixed_signs(y));
        if (cov.complete()) return finish(cov, explored, true);
        queue.push_back(std::move(y));
      }
    }
    return finish(cov, explored, true);
  }

  std::set<RatVector> seen{RatMatrix::identity(n).flat()};
  std::deque<RatMatrix> queue{RatMatrix::identity(n)};
  while (!queue.empty()) {
    RatMatrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& h : group.generators()) {
      RatMatrix y = h.matrix * x;
      if (!seen.insert(y.flat()).second) continue;
      if (++explored > cap) return finish(cov, cap, false);
      cov.mark(fixed_signs(y));
      if (cov.complete()) return finish(cov, explored, true);
      queue.push_back(std::move(y));
    }
  }
  return finish(cov, explored, true);
}

namespace {

// Rows of g^T Theta g - Theta = 0 over symmetric coordinates.
void add_invariance_rows(RowEchelon& system, const RatMatrix& g, std::size_t n) {
  if (auto p = as_signed_permutation(g)) {
    // (g^T Theta g)_{ab} = s_a s_b Theta_{pi a, pi b}
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        RowAccumulator acc;
        acc.add(sym_coord(n, p->image[a], p->image[b]), p->sign[a] * p->sign[b]);
        acc.add(sym_coord(n, a, b), -1);
        if (!acc.empty()) system.add(acc.take());
      }
    return;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      RowAccumulator acc;
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(g(c, a)) == 0) continue;
        for (std::size_t d = 0; d < n; ++d)
          if (sgn(g(d, b)) != 0) acc.add(sym_coord(n, c, d), g(c, a) * g(d, b));
      }
      acc.add(sym_coord(n, a, b), -1);
      if (!acc.empty()) system.add(acc.take());
    }
}

void add_normal_rows(RowEchelon& system, const MatrixSubspace& scaled_der) {
  const std::size_t n = scaled_der.ambient_dim();
  for (const auto& a : scaled_der.basis()) {
    RowAccumulator acc;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) acc.add(sym_coord(n, r, c), a(r, c));
    system.add(acc.take());
  }
}

std::vector<SymForm> forms_from_kernel(const RowEchelon& system, std::size_t n) {
  std::vector<SymForm> out;
  for (const auto& v : system.kernel_basis()) out.emplace_back(sym_from_coords(n, to_dense(v, sym_coord_count(n))));
  return out;
}

} // namespace

std::vector<SymForm> invariant_forms_subspace(const SymmetryGroup& group) {
  const std::size_t n = group.dim();
  RowEchelon system(sym_coord_count(n));
  for (const auto& g : group.generators()) add_invariance_rows(system, g.matrix, n);
  return forms_from_kernel(system, n);
}

std::vector<SymForm> invariant_normal_forms(const LieAlgebra& alg, const SymmetryGroup& group,
                                            const MatrixSubspace& scaled_der) {
  const std::size_t n = alg.dim();
  if (group.dim() != n || scaled_der.ambient_dim() != n)
    throw std::invalid_argument("group and algebra dimensions differ");
  RowEchelon system(sym_coord_count(n));
  add_normal_rows(system, scaled_der);
  for (const auto& g : group.generators()) add_invariance_rows(system, g.matrix, n);
  return forms_from_kernel(system, n);
}

Certificate maximality_certificate(const LieAlgebra& alg, const SymmetryGroup& group,
                                   const MatrixSubspace& scaled_der) {
  const std::size_t n = alg.dim();
  if (group.dim() != n) throw std::invalid_argument("group and algebra dimensions differ");
  Certificate cert;
  cert.dim_normal = core::normal_space(scaled_der).size();
  cert.dim_invariant = invariant_forms_subspace(group).size();
  auto both = invariant_normal_forms(alg, group, scaled_der);
  cert.dim_invariant_normal = both.size();
  cert.status = both.empty() ? Certificate::Status::maximal : Certificate::Status::inconclusive;
  if (!both.empty()) cert.witness = both.front();
  cert.generator_count = group.size();
  cert.provenance = group.provenance_summary();
  cert.algebra_hash = alg.fingerprint();
  return cert;
}

Certificate maximality_certificate(const LieAlgebra& alg, const SymmetryGroup& group) {
  return maximality_certificate(alg, group, core::scaled_derivation_algebra(alg));
}

} // namespace liemax::symmetry

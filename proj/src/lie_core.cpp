#include "liemax/lie_core.hpp"

#include <stdexcept>

namespace liemax {

InnerProduct::InnerProduct(RatMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw std::invalid_argument("Gram matrix must be square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  if (!is_positive_definite(gram_)) throw std::invalid_argument("Gram matrix must be positive definite");
}

SymForm::SymForm(RatMatrix theta) : theta_(std::move(theta)) {
  if (!theta_.is_symmetric()) throw std::invalid_argument("symmetric form must have a symmetric matrix");
}

namespace core {

namespace {

void add_scaled(RatVector& acc, const SparseVec& v, const Rational& s) {
  if (sgn(s) == 0) return;
  for (const auto& [k, c] : v) acc[k] += s * c;
}

// [u, v_j] for a dense u.
RatVector bracket_left(const LieAlgebra& alg, const RatVector& u, std::size_t j) {
  RatVector out(alg.dim());
  for (std::size_t a = 0; a < alg.dim(); ++a) add_scaled(out, alg.bracket_basis(a, j), u[a]);
  return out;
}

} // namespace

ValidationReport validate(const LieAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (alg.constant(i, j, k) != -alg.constant(j, i, k))
          report.violations.push_back({Violation::Kind::antisymmetry, i, j, k});

  // [[x,y],z] + [[y,z],x] + [[z,x],y] on basis triples.
  auto cyclic_term = [&](std::size_t a, std::size_t b, std::size_t c, RatVector& acc) {
    for (const auto& [m, coeff] : alg.bracket_basis(a, b)) add_scaled(acc, alg.bracket_basis(m, c), coeff);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        RatVector sum(n);
        cyclic_term(i, j, k, sum);
        cyclic_term(j, k, i, sum);
        cyclic_term(k, i, j, sum);
        for (const auto& x : sum)
          if (sgn(x) != 0) {
            report.violations.push_back({Violation::Kind::jacobi, i, j, k});
            break;
          }
      }
  return report;
}

RatVector bracket(const LieAlgebra& alg, const RatVector& x, const RatVector& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: vector length must equal dim");
  RatVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      add_scaled(out, alg.bracket_basis(i, j), x[i] * y[j]);
    }
  }
  return out;
}

Rational bracket_norm_sq(const LieAlgebra& alg, const InnerProduct& ip) {
  const std::size_t n = alg.dim();
  if (ip.dim() != n) throw std::invalid_argument("inner product dimension mismatch");
  if (ip.is_identity()) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : alg.bracket_basis(i, j)) s += c * c;
    return s;
  }
  // sum G^{ik} G^{jl} G_{mp} c_ij^m c_kl^p
  const RatMatrix& g = ip.gram();
  const RatMatrix ginv = *inverse(g);
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, cm] : alg.bracket_basis(i, j))
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(ginv(i, k)) == 0) continue;
          for (std::size_t l = 0; l < n; ++l) {
            if (sgn(ginv(j, l)) == 0) continue;
            for (const auto& [p, cp] : alg.bracket_basis(k, l))
              if (sgn(g(m, p)) != 0) s += ginv(i, k) * ginv(j, l) * g(m, p) * cm * cp;
          }
        }
  return s;
}

LieAlgebra change_basis(const LieAlgebra& alg, const RatMatrix& p) {
  const std::size_t n = alg.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("change of basis: size mismatch");
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("change of basis matrix is singular");
  LieAlgebra::Builder b(alg.labels());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      RatVector image = bracket(alg, p.column(a), p.column(c));
      b.raw(a, c, to_sparse(pinv->apply(image)));
    }
  return std::move(b).build();
}

std::optional<Orthonormalized> orthonormalize(const LieAlgebra& alg, const InnerProduct& ip) {
  const std::size_t n = alg.dim();
  auto f = ldlt(ip.gram());
  if (!f) return std::nullopt;
  // G = L D L^T, so the columns of L^{-T} D^{-1/2} are orthonormal.
  RatMatrix scale(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = exact_sqrt(f->diag[i]);
    if (!r) return std::nullopt;
    scale(i, i) = 1 / *r;
  }
  RatMatrix basis = *inverse(f->lower.transpose()) * scale;
  return Orthonormalized{change_basis(alg, basis), basis};
}

MatrixSubspace derivation_algebra(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };
  RowEchelon system(n * n);
  std::vector<RowAccumulator> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // Component k of D[v_i,v_j] - [D v_i, v_j] - [v_i, D v_j].
      for (const auto& [m, c] : alg.bracket_basis(i, j))
        for (std::size_t k = 0; k < n; ++k) rows[k].add(var(k, m), c);
      for (std::size_t a = 0; a < n; ++a) {
        for (const auto& [k, c] : alg.bracket_basis(a, j)) rows[k].add(var(a, i), -c);
        for (const auto& [k, c] : alg.bracket_basis(i, a)) rows[k].add(var(a, j), -c);
      }
      for (auto& r : rows)
        if (!r.empty()) system.add(r.take());
    }
  std::vector<RatMatrix> basis;
  for (const auto& v : system.kernel_basis()) basis.push_back(RatMatrix::from_flat(n, n, to_dense(v, n * n)));
  // kernel_basis is already in reduced echelon form over the flattening.
  return MatrixSubspace::span(n, basis);
}

MatrixSubspace scaled_derivation_algebra(const LieAlgebra& alg, const MatrixSubspace& der) {
  std::vector<RatMatrix> gens = der.basis();
  gens.push_back(RatMatrix::identity(alg.dim()));
  return MatrixSubspace::span(alg.dim(), gens);
}

MatrixSubspace scaled_derivation_algebra(const LieAlgebra& alg) {
  return scaled_derivation_algebra(alg, derivation_algebra(alg));
}

bool is_derivation(const LieAlgebra& alg, const RatMatrix& d) {
  const std::size_t n = alg.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVector lhs = d.apply(to_dense(alg.bracket_basis(i, j), n));
      RatVector r1 = bracket_left(alg, d.column(i), j);
      RatVector dj = d.column(j);
      RatVector r2(n);
      for (std::size_t a = 0; a < n; ++a) add_scaled(r2, alg.bracket_basis(i, a), dj[a]);
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != r1[k] + r2[k]) return false;
    }
  return true;
}

std::size_t orbit_tangent_dim(const MatrixSubspace& scaled_der) {
  const std::size_t n = scaled_der.ambient_dim();
  RowEchelon e(sym_coord_count(n));
  for (const auto& a : scaled_der.basis()) e.add(sym_to_coords(a + a.transpose()));
  return e.rank();
}

std::vector<SymForm> normal_space(const MatrixSubspace& scaled_der) {
  const std::size_t n = scaled_der.ambient_dim();
  RowEchelon e(sym_coord_count(n));
  for (const auto& a : scaled_der.basis()) {
    // tr(Theta A) = sum_a Theta_aa A_aa + sum_{a<b} Theta_ab (A_ab + A_ba)
    RowAccumulator acc;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) acc.add(sym_coord(n, r, c), a(r, c));
    e.add(acc.take());
  }
  std::vector<SymForm> out;
  for (const auto& v : e.kernel_basis()) out.emplace_back(sym_from_coords(n, to_dense(v, sym_coord_count(n))));
  return out;
}

std::vector<SymForm> normal_space(const LieAlgebra& alg, const InnerProduct& ip) {
  if (ip.dim() != alg.dim()) throw std::invalid_argument("inner product dimension mismatch");
  if (!ip.is_identity())
    throw std::invalid_argument("normal_space expects the identity Gram; change basis first");
  return normal_space(scaled_derivation_algebra(alg));
}

TransitivityResult orbit_transitivity_check(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  auto scaled = scaled_derivation_algebra(alg);
  const std::size_t tangent = orbit_tangent_dim(scaled);
  const std::size_t codim = normal_space(scaled).size();
  return {codim == 0 && tangent == sym_coord_count(n), codim, tangent};
}

RatVector ad_traces(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  RatVector t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : alg.bracket_basis(i, j))
        if (k == j) t[i] += c;
  return t;
}

bool unimodularity_check(const LieAlgebra& alg) {
  for (const auto& t : ad_traces(alg))
    if (sgn(t) != 0) return false;
  return true;
}

} // namespace core
} // namespace liemax

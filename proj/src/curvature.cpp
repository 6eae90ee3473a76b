#include "liemax/curvature.hpp"

#include <stdexcept>

namespace liemax::curvature {

namespace {

void require_identity(const LieAlgebra& alg, const InnerProduct& ip) {
  if (ip.dim() != alg.dim()) throw std::invalid_argument("inner product dimension mismatch");
  if (!ip.is_identity()) throw std::invalid_argument("curvature expects the identity Gram; change basis first");
}

} // namespace

RatMatrix ricci_m_term(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  RatMatrix m(n, n);
  const Rational half(1, 2), quarter(1, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = alg.bracket_basis(i, j);
      // 1/4 <[b_i,b_j],x><[b_i,b_j],y>
      for (const auto& [a, ca] : v)
        for (const auto& [b, cb] : v) m(a, b) += quarter * ca * cb;
      // -1/2 <[x,b_j],[y,b_j]> with x = v_i accumulates into row i.
      for (std::size_t b = 0; b < n; ++b) {
        const auto& w = alg.bracket_basis(b, j);
        std::size_t p = 0, q = 0;
        while (p < v.size() && q < w.size()) {
          if (v[p].first < w[q].first) ++p;
          else if (w[q].first < v[p].first) ++q;
          else {
            m(i, b) -= half * v[p].second * w[q].second;
            ++p;
            ++q;
          }
        }
      }
    }
  return m;
}

RatMatrix killing_form(const LieAlgebra& alg) {
  // B(a,b) = tr(ad_a ad_b) = sum_{j,k} c_{aj}^k c_{bk}^j
  const std::size_t n = alg.dim();
  RatMatrix b(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c1] : alg.bracket_basis(a, j))
        for (std::size_t other = 0; other < n; ++other)
          for (const auto& [jj, c2] : alg.bracket_basis(other, k))
            if (jj == j) b(a, other) += c1 * c2;
  return b;
}

RicciData ricci_tensor(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  RatMatrix ric = ricci_m_term(alg);
  const RatVector traces = core::ad_traces(alg);
  bool unimodular = true;
  for (const auto& t : traces) unimodular = unimodular && sgn(t) == 0;
  RatMatrix killing = killing_form(alg);
  if (!killing.is_zero()) ric -= killing * Rational(1, 2);
  if (!unimodular) {
    RatMatrix ad_h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(traces[i]) != 0) ad_h += alg.ad(i) * traces[i];
    ric -= (ad_h + ad_h.transpose()) * Rational(1, 2);
  }
  Rational scal = ric.trace();
  RatMatrix op = ric;
  return RicciData{SymForm(std::move(ric)), std::move(op), std::move(scal)};
}

RicciData ricci_tensor(const LieAlgebra& alg, const InnerProduct& ip) {
  require_identity(alg, ip);
  return ricci_tensor(alg);
}

Rational scalar_curvature(const LieAlgebra& alg, const InnerProduct& ip) {
  return ricci_tensor(alg, ip).scal;
}

std::optional<Rational> einstein_check(const LieAlgebra& alg, const InnerProduct& ip) {
  const auto ric = ricci_tensor(alg, ip);
  const std::size_t n = alg.dim();
  Rational lambda = ric.ric_operator(0, 0);
  if (ric.ric_operator == RatMatrix::identity(n) * lambda) return lambda;
  return std::nullopt;
}

std::optional<SolitonDecomposition> ricci_soliton_check(const LieAlgebra& alg, const RicciData& ric,
                                                        const MatrixSubspace& der) {
  const std::size_t n = alg.dim();
  const RatMatrix id = RatMatrix::identity(n);
  Rational c = 0;
  if (!der.contains(id)) {
    // Unknowns: coefficients of the derivation basis, then c; last column is Ric.
    const std::size_t m = der.dim();
    RowEchelon system(m + 2);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        RowAccumulator acc;
        for (std::size_t k = 0; k < m; ++k) acc.add(k, der.basis()[k](r, col));
        if (r == col) acc.add(m, 1);
        acc.add(m + 1, ric.ric_operator(r, col));
        system.add(acc.take());
      }
    auto x = system.solve_augmented();
    if (!x) return std::nullopt;
    c = (*x)[m];
  }
  RatMatrix d = ric.ric_operator - id * c;
  if (!der.contains(d)) return std::nullopt;
  bool residual_zero = (id * c + d) == ric.ric_operator && core::is_derivation(alg, d);
  return SolitonDecomposition{c, std::move(d), residual_zero};
}

std::optional<SolitonDecomposition> ricci_soliton_check(const LieAlgebra& alg, const InnerProduct& ip) {
  require_identity(alg, ip);
  return ricci_soliton_check(alg, ricci_tensor(alg), core::derivation_algebra(alg));
}

RatVector ricci_spectrum(const RicciData& ric) { return characteristic_polynomial(ric.ric_operator); }

} // namespace liemax::curvature

#pragma once

#include "liemax/lie_core.hpp"

#include <optional>

namespace liemax::curvature {

struct RicciData {
  SymForm ric_form;
  RatMatrix ric_operator;  // equals ric_form under the identity Gram
  Rational scal;
};

/// Ricci tensor of the left-invariant metric with orthonormal basis v_i:
///   Ric = M - B/2 - S(ad_H),
///   M(x,y) = -1/2 sum_i <[x,b_i],[y,b_i]> + 1/4 sum_{i,j} <[b_i,b_j],x><[b_i,b_j],y>,
/// with B the Killing form and <H,x> = tr ad_x.
/// Throws std::invalid_argument for a non-identity Gram.
RicciData ricci_tensor(const LieAlgebra& alg, const InnerProduct& ip);
RicciData ricci_tensor(const LieAlgebra& alg);

/// Only the M term; equals the full Ricci tensor on nilpotent algebras.
RatMatrix ricci_m_term(const LieAlgebra& alg);
RatMatrix killing_form(const LieAlgebra& alg);

Rational scalar_curvature(const LieAlgebra& alg, const InnerProduct& ip);

/// lambda when ric_operator = lambda * I exactly.
std::optional<Rational> einstein_check(const LieAlgebra& alg, const InnerProduct& ip);

struct SolitonDecomposition {
  Rational c;
  RatMatrix derivation;
  bool residual_zero;
};

/// Solves ric_operator = c I + D with D in Der(g). c is unique unless the
/// identity is a derivation (abelian case), where it is pinned to 0.
std::optional<SolitonDecomposition> ricci_soliton_check(const LieAlgebra& alg, const InnerProduct& ip);
std::optional<SolitonDecomposition> ricci_soliton_check(const LieAlgebra& alg, const RicciData& ric,
                                                        const MatrixSubspace& der);

/// det(t I - Ric) coefficients; an exact fingerprint of the Ricci spectrum.
RatVector ricci_spectrum(const RicciData& ric);

} // namespace liemax::curvature

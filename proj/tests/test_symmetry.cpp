#include "liemax/families.hpp"
#include "liemax/graph_algebra.hpp"
#include "liemax/symmetry.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace liemax;
namespace fam = liemax::families;
using symmetry::Certificate;
using symmetry::Provenance;
using symmetry::ReversibilityResult;

namespace {

LieAlgebra h3() { return fam::build(fam::FamilySpec::heisenberg_sum(3)).alg; }
LieAlgebra s_w(RatVector w) { return fam::build(fam::FamilySpec::almost_abelian(std::move(w))).alg; }

} // namespace

TEST_CASE("orthogonal automorphism check") {
  const auto h = h3();
  CHECK(symmetry::is_orthogonal_automorphism(h, RatMatrix::identity(3)));
  // x -> y, y -> -x, z -> z: [y, -x] = z.
  const RatMatrix rot{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(symmetry::is_orthogonal_automorphism(h, rot));
  // x -> y, y -> x reverses the bracket unless z is negated too.
  CHECK_FALSE(symmetry::is_orthogonal_automorphism(h, RatMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK(symmetry::is_orthogonal_automorphism(h, RatMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}));
  // Automorphism but not orthogonal.
  CHECK_FALSE(symmetry::is_orthogonal_automorphism(h, RatMatrix::diagonal({2, 1, 2})));
  const auto s = s_w({1, 2, 3});
  for (std::size_t j = 1; j < 4; ++j) {
    RatVector d(4, Rational(1));
    d[j] = -1;
    CHECK(symmetry::is_orthogonal_automorphism(s, RatMatrix::diagonal(d)));
  }
  CHECK_FALSE(symmetry::is_orthogonal_automorphism(s, RatMatrix::diagonal({-1, 1, 1, 1})));
  CHECK_THROWS_AS(symmetry::is_orthogonal_automorphism(s, RatMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("non-permutation orthogonal automorphism takes the general path") {
  const auto alg = fam::build(fam::FamilySpec::motion_group_r2()).alg;
  const RatMatrix rot{{Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, 1}};
  CHECK(symmetry::is_orthogonal_automorphism(alg, rot));
  const RatMatrix bad{{Rational(3, 5), Rational(4, 5), 0}, {Rational(4, 5), Rational(-3, 5), 0}, {0, 0, 1}};
  CHECK_FALSE(symmetry::is_orthogonal_automorphism(alg, bad));
}

TEST_CASE("group rejects non-automorphisms") {
  symmetry::SymmetryGroup g(3);
  CHECK_THROWS_AS(g.add(h3(), RatMatrix::diagonal({-1, 1, 1}), Provenance::user), std::invalid_argument);
  g.add(h3(), RatMatrix::diagonal({-1, 1, -1}), Provenance::user);
  CHECK(g.size() == 1);
}

TEST_CASE("sign-diagonal subgroup") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto a = fam::build(fam::FamilySpec::abelian(n)).alg;
    CHECK(symmetry::sign_diagonal_elements(a).size() == (1u << n));
  }
  const auto h = h3();
  const auto elems = symmetry::sign_diagonal_elements(h);
  CHECK(elems.size() == 4);
  CHECK(oracle::brute_force_sign_count(h) == 4);
  for (const auto& e : elems) {
    CHECK(e[0] * e[1] == e[2]);
    CHECK(symmetry::is_orthogonal_automorphism(h, RatMatrix::diagonal({e[0], e[1], e[2]})));
  }
  const auto s = s_w({1, 2, Rational(-1, 3)});
  const auto se = symmetry::sign_diagonal_elements(s);
  CHECK(se.size() == 8);
  for (const auto& e : se) CHECK(e[0] == 1);
  for (const auto& g : symmetry::sign_diagonal_subgroup(s).generators()) CHECK(g.provenance == Provenance::sign_diagonal);
}

TEST_CASE("sign-diagonal subgroup matches brute force on graph algebras") {
  for (const auto& g : {graphs::named::complete(3), graphs::named::path(4), graphs::named::star(3), graphs::named::cycle(4)}) {
    const auto alg = graphs::attach_algebra(graphs::DirectedGraph::canonical(g));
    CHECK(symmetry::sign_diagonal_elements(alg).size() == oracle::brute_force_sign_count(alg));
  }
}

TEST_CASE("two-reversibility") {
  const auto s = s_w({1, 2});
  CHECK(symmetry::two_reversible_check(s, symmetry::sign_diagonal_subgroup(s)).status == ReversibilityResult::Status::reversible);
  const auto k2 = graphs::DirectedGraph::canonical(graphs::named::complete(2));
  const auto alg = graphs::attach_algebra(k2);
  CHECK(symmetry::two_reversible_check(alg, graphs::vertex_reflections(k2)).status == ReversibilityResult::Status::reversible);
  const auto flat = fam::build(fam::FamilySpec::abelian(2)).alg;
  const auto r = symmetry::two_reversible_check(flat, symmetry::SymmetryGroup(2));
  CHECK(r.status == ReversibilityResult::Status::failing);
  CHECK(r.first == 0);
  CHECK(r.second == 1);
}

TEST_CASE("two-reversibility through group products, and the cap") {
  // swap(v1, v2) and diag(1,-1,1) reverse (v1,v2) and (v2,v3) directly;
  // (v1,v3) needs the product swap * diag(1,-1,1) * swap = diag(-1,1,1).
  const auto flat = fam::build(fam::FamilySpec::abelian(3)).alg;
  symmetry::SymmetryGroup g(3);
  g.add(flat, RatMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, Provenance::user);
  g.add(flat, RatMatrix::diagonal({1, -1, 1}), Provenance::user);
  const auto full = symmetry::two_reversible_check(flat, g);
  CHECK(full.status == ReversibilityResult::Status::reversible);
  CHECK(full.explored > 2);
  CHECK(symmetry::two_reversible_check(flat, g, 2).status == ReversibilityResult::Status::undecided);
}

TEST_CASE("invariant forms") {
  const auto flat = fam::build(fam::FamilySpec::abelian(4)).alg;
  const auto signs = symmetry::sign_diagonal_subgroup(flat);
  const auto diag_forms = symmetry::invariant_forms_subspace(signs);
  CHECK(diag_forms.size() == 4);
  for (const auto& f : diag_forms) CHECK(f.matrix().is_diagonal());
  CHECK(symmetry::invariant_forms_subspace(symmetry::SymmetryGroup(4)).size() == 10);
  const auto k2 = graphs::DirectedGraph::canonical(graphs::named::complete(2));
  const auto forms = symmetry::invariant_forms_subspace(graphs::vertex_reflections(k2));
  CHECK(forms.size() == 3);
  for (const auto& f : forms) CHECK(f.matrix().is_diagonal());
}

TEST_CASE("invariant forms are fixed by every generator") {
  const auto dg = graphs::DirectedGraph::canonical(graphs::named::cycle(5));
  const auto alg = graphs::attach_algebra(dg);
  const auto group = graphs::graph_symmetry_group(dg, alg);
  for (const auto& f : symmetry::invariant_forms_subspace(group))
    for (const auto& g : group.generators()) CHECK(g.matrix.transpose() * f.matrix() * g.matrix == f.matrix());
}

TEST_CASE("maximality certificate examples") {
  const auto s = s_w({1, 2});
  const auto cert = symmetry::maximality_certificate(s, symmetry::sign_diagonal_subgroup(s));
  CHECK(cert.status == Certificate::Status::maximal);
  CHECK(cert.dim_invariant_normal == 0);
  CHECK_FALSE(cert.witness.has_value());
  CHECK(cert.algebra_hash == s.fingerprint());

  const auto hr = fam::build(fam::FamilySpec::heisenberg_sum(4)).alg;
  CHECK(symmetry::maximality_certificate(hr, symmetry::SymmetryGroup(4)).status == Certificate::Status::maximal);

  const auto dg = graphs::DirectedGraph::canonical(graphs::named::path(4));
  const auto p4 = graphs::attach_algebra(dg);
  const auto pc = symmetry::maximality_certificate(p4, graphs::graph_symmetry_group(dg, p4));
  CHECK(pc.status == Certificate::Status::inconclusive);
  REQUIRE(pc.witness.has_value());
  CHECK_FALSE(pc.witness->matrix().is_zero());
  const auto scaled = core::scaled_derivation_algebra(p4);
  for (const auto& a : scaled.basis()) CHECK((pc.witness->matrix() * a).trace() == 0);
}

TEST_CASE("motion group certificate depends on the group") {
  const auto spec = fam::FamilySpec::motion_group_r2();
  const auto f = fam::build(spec);
  const auto signs = symmetry::sign_diagonal_subgroup(f.alg);
  const auto weak = symmetry::maximality_certificate(f.alg, signs);
  CHECK(weak.status == Certificate::Status::inconclusive);
  REQUIRE(weak.witness);
  CHECK(weak.witness->matrix() == RatMatrix::diagonal({1, -1, 0}));
  CHECK(symmetry::maximality_certificate(f.alg, fam::default_group(spec, f)).status == Certificate::Status::maximal);
}

TEST_CASE("adding generators never enlarges the intersection") {
  const auto dg = graphs::DirectedGraph::canonical(graphs::named::path(5));
  const auto alg = graphs::attach_algebra(dg);
  const auto scaled = core::scaled_derivation_algebra(alg);
  graphs::GraphGroupOptions small;
  small.lifts = false;
  small.reflections = false;
  const auto g_small = graphs::graph_symmetry_group(dg, alg, small);
  const auto g_big = graphs::graph_symmetry_group(dg, alg);
  const auto i_small = symmetry::invariant_normal_forms(alg, g_small, scaled);
  const auto i_big = symmetry::invariant_normal_forms(alg, g_big, scaled);
  CHECK(i_big.size() <= i_small.size());
  std::vector<RatMatrix> small_mats;
  for (const auto& f : i_small) small_mats.push_back(f.matrix());
  const auto span = MatrixSubspace::span(alg.dim(), small_mats);
  for (const auto& f : i_big) CHECK(span.contains(f.matrix()));
}

TEST_CASE("certificate status is invariant under relabeling the basis") {
  const auto s = s_w({1, 2, 3});
  const RatMatrix perm{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  const auto permuted = core::change_basis(s, perm);
  CHECK(symmetry::maximality_certificate(permuted, symmetry::sign_diagonal_subgroup(permuted)).status ==
        Certificate::Status::maximal);
  const auto dg = graphs::DirectedGraph::canonical(graphs::named::path(4));
  const auto p4 = graphs::attach_algebra(dg);
  const RatMatrix rev = [] {
    RatMatrix m(7, 7);
    const std::size_t image[7] = {3, 2, 1, 0, 6, 5, 4};
    for (std::size_t i = 0; i < 7; ++i) m(image[i], i) = 1;
    return m;
  }();
  const auto relabeled = core::change_basis(p4, rev);
  const auto group = graphs::graph_symmetry_group(dg, p4);
  symmetry::SymmetryGroup moved(7);
  for (const auto& g : group.generators()) moved.add(relabeled, rev.transpose() * g.matrix * rev, g.provenance);
  CHECK(symmetry::maximality_certificate(relabeled, moved).status == Certificate::Status::inconclusive);
  CHECK(symmetry::maximality_certificate(relabeled, moved).dim_invariant_normal ==
        symmetry::maximality_certificate(p4, group).dim_invariant_normal);
}

TEST_CASE("complex hyperbolic family is inconclusive") {
  for (std::size_t n : {1, 2}) {
    const auto spec = fam::FamilySpec::complex_hyperbolic(n);
    const auto f = fam::build(spec);
    const auto cert = symmetry::maximality_certificate(f.alg, fam::default_group(spec, f));
    CHECK(cert.status == Certificate::Status::inconclusive);
    CHECK(f.meta.expected_certificate == Certificate::Status::inconclusive);
  }
}

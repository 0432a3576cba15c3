#include "equigeo/catalog.hpp"
#include "equigeo/classifier.hpp"
#include "equigeo/errors.hpp"

#include <doctest.h>

using namespace equigeo;

TEST_CASE("sphere with a one-dimensional fixed-point set classifies to that line") {
  for (const SpaceFamily f : {SpaceFamily::su_sphere, SpaceFamily::u_sphere, SpaceFamily::sp_u1_sphere}) {
    const HomogeneousSpaceModel s = build_sphere_space(f, 2);
    CAPTURE(s.label());
    const EquigeodesicSet set = classify_equigeodesic_set(s);
    CHECK(set.kind == SetKind::linear_subspace);
    CHECK(subspace_distance(set.subspace, s.m0()) <= kSubspaceMatchTol);
    CHECK(set.certification.quadratic_vanishing);
    CHECK(set.certification.verified_members >= 20);
    CHECK(set.members.empty());
  }
}

TEST_CASE("Sp(n+1)/Sp(n) has no Randers equigeodesic vectors") {
  for (int n = 1; n <= 2; ++n) {
    const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_sphere, n);
    const EquigeodesicSet set = classify_equigeodesic_set(s);
    CHECK(set.kind == SetKind::empty);
    CHECK(set.subspace.is_zero());
    CHECK(set.certification.constraint_dim == 0);
    CHECK(set.certification.emptiness == "zero_constraint");
  }
}

TEST_CASE("commuting constraint subspace") {
  const HomogeneousSpaceModel s = build_symmetric_triple_space(SpaceFamily::thm2_su_su, 2, 2);
  const Subspace l = commuting_constraint_subspace(s);
  CHECK(subspace_distance(l, s.m0()) < 1e-9);
  CHECK_THROWS_AS(commuting_constraint_subspace(build_sphere_space(SpaceFamily::so_sphere, 3)), InvalidInput);
  CHECK_THROWS_AS(classify_equigeodesic_set(build_sphere_space(SpaceFamily::sp_sp1_sphere, 1)), InvalidInput);
}

TEST_CASE("quadratic vanishing holds on m0 and fails on m") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 2);
  CHECK(certify_quadratic_vanishing(s, s.m0()));
  CHECK(!certify_quadratic_vanishing(s, Subspace::full(s.dim_m())));
  CHECK_THROWS_AS(certify_quadratic_vanishing(s, Subspace::full(3)), InvalidInput);
}

TEST_CASE("trivial isotropy on SU(2) leaves only the center of su(2), which is zero") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 1);
  const EquigeodesicSet set = classify_equigeodesic_set(s);
  CHECK(set.kind == SetKind::empty);
  CHECK(set.certification.emptiness == "zero_constraint");
}

TEST_CASE("abelian fixed-point set: u(2) with trivial isotropy keeps its center") {
  // G = U(2), H = {e}: m = m0 = u(2); the set is the center i R Id.
  const LieAlgebra g = build_lie_algebra({{Family::u, 2}});
  const HomogeneousSpaceModel s = make_reductive_decomposition(g, {}, "U(2)");
  const EquigeodesicSet set = classify_equigeodesic_set(s);
  REQUIRE(set.kind == SetKind::linear_subspace);
  REQUIRE(set.subspace.dim() == 1);
  ComplexMatrix id = ComplexMatrix::Zero(2, 2);
  id(0, 0) = id(1, 1) = {0.0, 1.0};
  const Vector center = g.from_representative(g.assemble({id}, Vector())).coords();
  const Vector got = s.embed(set.subspace.vector(0));
  CHECK(std::abs(std::abs(got.dot(center.normalized())) - 1.0) < 1e-9);
}

TEST_CASE("classification is deterministic in the seed") {
  const HomogeneousSpaceModel s = build_symmetric_triple_space(SpaceFamily::thm2_so_su, 3);
  const EquigeodesicSet a = classify_equigeodesic_set(s, {kCriterionTol, 4, 20});
  const EquigeodesicSet b = classify_equigeodesic_set(s, {kCriterionTol, 4, 20});
  CHECK(a.subspace.basis() == b.subspace.basis());
  CHECK(a.certification.shrink_rounds == b.certification.shrink_rounds);
}

TEST_CASE("centralizer inside a subspace") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_sphere, 1);
  // m0 = sp(1) is nonabelian: its center is zero.
  CHECK(centralizer_in(s, s.m0(), s.m0()).dim() == 0);
  const HomogeneousSpaceModel t = build_symmetric_triple_space(SpaceFamily::thm2_so_so, 3);
  CHECK(subspace_distance(centralizer_in(t, t.m0(), t.m0()), t.m0()) < 1e-12);
  CHECK_THROWS_AS(centralizer_in(t, Subspace::full(2), t.m0()), InvalidInput);
}

TEST_CASE("set kind names round-trip") {
  for (const SetKind k : {SetKind::empty, SetKind::linear_subspace, SetKind::undetermined})
    CHECK(set_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(set_kind_from_string("plane"), InvalidInput);
}

TEST_CASE("an empty classification rejects every basis vector and random vectors") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_sphere, 1);
  REQUIRE(classify_equigeodesic_set(s).kind == SetKind::empty);
  const auto d = static_cast<Eigen::Index>(s.dim_m());
  for (Eigen::Index k = 0; k < d; ++k) CHECK(!randers_equigeodesic_test(s, Vector::Unit(d, k)).verdict);
  Rng rng(50);
  for (int t = 0; t < 50; ++t) CHECK(!randers_equigeodesic_test(s, rng.normal_vector(d)).verdict);
}

TEST_CASE("quadratic vanishing fails on the nonabelian m0 of Sp(2)/Sp(1)") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_sphere, 1);
  CHECK(!certify_quadratic_vanishing(s, s.m0()));
}

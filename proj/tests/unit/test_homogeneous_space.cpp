#include "../oracles.hpp"
#include "equigeo/catalog.hpp"
#include "equigeo/errors.hpp"
#include "equigeo/homogeneous_space.hpp"

#include <doctest.h>

using namespace equigeo;

TEST_CASE("reductive decomposition of SU(3)/SU(2)") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 2);
  CHECK(s.algebra().dim() == 8);
  CHECK(s.h().dim() == 3);
  CHECK(s.dim_m() == 5);
  CHECK(s.m0().dim() == 1);
  CHECK(s.mprime().dim() == 4);
  // h and m are orthogonal and together span g.
  CHECK((s.h().basis().transpose() * s.m().basis()).norm() < 1e-13);
  const auto d = s.diagnostics();
  CHECK(d.closure < kStructureTol);
  CHECK(d.reductivity < kStructureTol);
  CHECK(d.fixed_points < kStructureTol);
  CHECK(d.schur_blocks < kStructureTol);
  CHECK(d.identity_span < kStructureTol);
  CHECK(d.symmetry < kStructureTol);
}

TEST_CASE("m-basis puts the fixed-point set first") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_sphere, 1);
  REQUIRE(s.m0().dim() == 3);
  const RealMatrix expect = RealMatrix::Identity(7, 7).leftCols(3);
  CHECK((s.m0().basis() - expect).norm() < 1e-12);
  CHECK(subspace_distance(compute_fixed_point_set(s), s.m0()) < 1e-12);
}

TEST_CASE("fixed-point dimensions agree with a commutator oracle") {
  for (const SpaceDescriptor& d : std::vector<SpaceDescriptor>{{SpaceFamily::so_sphere, 3, 0, 0},
                                                               {SpaceFamily::su_sphere, 3, 0, 0},
                                                               {SpaceFamily::u_sphere, 2, 0, 0},
                                                               {SpaceFamily::sp_sphere, 2, 0, 0},
                                                               {SpaceFamily::sp_sp1_sphere, 1, 0, 0},
                                                               {SpaceFamily::sp_u1_sphere, 2, 0, 0},
                                                               {SpaceFamily::thm2_so_su, 3, 0, 0}}) {
    const CatalogEntry e = build_space(d);
    CAPTURE(e.space.label());
    CHECK(oracle::brute_force_fixed_dim(e.space) == e.space.m0().dim());
  }
}

TEST_CASE("non-closed generators are rejected naming the pair") {
  const LieAlgebra g = build_lie_algebra({{Family::so, 3}});
  try {
    make_reductive_decomposition(g, {g.basis_element(0), g.basis_element(1)}, "bad");
    FAIL("expected ConstructionError");
  } catch (const ConstructionError& e) {
    const std::string what = e.what();
    CHECK(what.find("[generator 0, generator 1]") != std::string::npos);
  }
}

TEST_CASE("trivial isotropy gives m = g and the full symmetric commutant") {
  const LieAlgebra g = build_lie_algebra({{Family::su, 2}});
  const HomogeneousSpaceModel s = make_reductive_decomposition(g, {}, "SU(2)");
  CHECK(s.dim_m() == 3);
  CHECK(s.m0().dim() == 3);
  CHECK(s.commutant().size() == 6);
  CHECK(!isotropy_irreducibility_test(s));
}

TEST_CASE("commutant is an orthonormal family of symmetric equivariant operators") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_u1_sphere, 1);
  const auto& c = s.commutant();
  REQUIRE(c.size() == 3);
  for (std::size_t a = 0; a < c.size(); ++a) {
    CHECK((c[a] - c[a].transpose()).norm() < 1e-12);
    CHECK(equivariance_residual(s, c[a]) < 1e-12);
    for (std::size_t b = 0; b < c.size(); ++b)
      CHECK(c[a].cwiseProduct(c[b]).sum() == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
  }
}

TEST_CASE("isotropy irreducibility of round spheres") {
  CHECK(isotropy_irreducibility_test(build_sphere_space(SpaceFamily::so_sphere, 4)));
  CHECK(!isotropy_irreducibility_test(build_sphere_space(SpaceFamily::su_sphere, 2)));
}

TEST_CASE("metric operator validation") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 2);
  const auto d = static_cast<Eigen::Index>(s.dim_m());
  CHECK(MetricOperator::identity(s).min_eigenvalue() == doctest::Approx(1.0));
  CHECK_THROWS_AS(MetricOperator::make(s, RealMatrix::Identity(d - 1, d - 1)), InvalidInput);
  CHECK_THROWS_AS(MetricOperator::make(s, -RealMatrix::Identity(d, d)), InvalidInput);
  RealMatrix nonsym = RealMatrix::Identity(d, d);
  nonsym(0, 1) = 0.3;
  CHECK_THROWS_AS(MetricOperator::make(s, nonsym), InvalidInput);
  RealMatrix non_equivariant = RealMatrix::Identity(d, d);
  non_equivariant(d - 1, d - 1) = 2.0;
  CHECK_THROWS_AS(MetricOperator::make(s, non_equivariant), InvalidInput);
  RealMatrix nan = RealMatrix::Identity(d, d);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(MetricOperator::make(s, nan), InvalidInput);
}

TEST_CASE("sampled metrics are invariant, positive and reproducible") {
  const HomogeneousSpaceModel s = build_symmetric_triple_space(SpaceFamily::thm2_su_su, 2, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MetricOperator m = sample_invariant_metric(s, seed);
    CHECK(m.min_eigenvalue() >= 0.5 - 1e-12);
    CHECK(equivariance_residual(s, m.matrix()) < 1e-12);
    CHECK(m.matrix() == sample_invariant_metric(s, seed).matrix());
  }
  CHECK(sample_invariant_metric(s, 1).matrix() != sample_invariant_metric(s, 2).matrix());
}

TEST_CASE("metric from explicit coefficients checks their count") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 2);
  CHECK_THROWS_AS(metric_from_coefficients(s, Vector::Ones(5)), InvalidInput);
  const MetricOperator m = metric_from_coefficients(s, Vector::Zero(2));
  CHECK((m.matrix() - RealMatrix::Identity(5, 5)).norm() < 1e-15);
}

TEST_CASE("Sp(2)/Sp(1)Sp(1) is isotropy irreducible") {
  const LieAlgebra g = build_lie_algebra({{Family::sp, 2}});
  std::vector<AlgebraElement> gens;
  for (std::size_t r = 0; r < 2; ++r)
    for (const auto& q : {Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
      QuaternionMatrix m(2, 2);
      m(r, r) = q;
      gens.push_back(g.from_representative(g.assemble({m}, Vector())));
    }
  const HomogeneousSpaceModel s = make_reductive_decomposition(g, gens, "Sp(2)/Sp(1)Sp(1)");
  CHECK(s.dim_m() == 4);
  CHECK(isotropy_irreducibility_test(s));
}

TEST_CASE("Sp(2)/Sp(1) commutant: symmetric operators on m0 plus a scalar on m'") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_sphere, 1);
  CHECK(s.m0().dim() == 3);
  CHECK(s.commutant().size() == 7);
  CHECK(oracle::brute_force_commutant_dim(s) == 7);
}

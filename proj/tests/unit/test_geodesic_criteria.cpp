#include "equigeo/catalog.hpp"
#include "equigeo/errors.hpp"
#include "equigeo/geodesic_criteria.hpp"

#include <doctest.h>

using namespace equigeo;

namespace {

// First m' direction of a space, in m-coordinates.
Vector first_mprime(const HomogeneousSpaceModel& s) {
  return Vector::Unit(static_cast<Eigen::Index>(s.dim_m()), static_cast<Eigen::Index>(s.m0().dim()));
}

}  // namespace

TEST_CASE("fixed-point vector of SU(3)/SU(2) passes, an m' vector fails") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 2);
  const auto pass = randers_equigeodesic_test(s, s.m0().vector(0));
  CHECK(pass.verdict);
  CHECK(pass.residual < 1e-12);
  const auto fail = randers_equigeodesic_test(s, first_mprime(s));
  CHECK(!fail.verdict);
  CHECK(fail.residual > 1e-3);
  CHECK(!fail.witnesses.empty());
}

TEST_CASE("equigeodesic tests accept algebra elements in m only") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 2);
  const AlgebraElement x = s.element_from_m(s.m0().vector(0));
  CHECK(randers_equigeodesic_test(s, x).verdict);
  const AlgebraElement in_h = s.algebra().element(s.h().vector(0));
  CHECK_THROWS_AS(riemannian_equigeodesic_test(s, in_h), InvalidInput);
  CHECK_THROWS_AS(randers_equigeodesic_test(s, Vector::Zero(5)), InvalidInput);
  CHECK_THROWS_AS(randers_equigeodesic_test(s, Vector::Ones(4)), InvalidInput);
}

TEST_CASE("Randers test needs a fixed-point set") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::so_sphere, 3);
  try {
    randers_equigeodesic_test(s, Vector::Unit(3, 0));
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()) == kNoRandersMessage);
  }
  // Every vector of an isotropy irreducible space is Riemannian equigeodesic.
  CHECK(riemannian_equigeodesic_test(s, Vector::Unit(3, 1)).verdict);
}

TEST_CASE("geodesic residual is unchanged when the metric is scaled") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::u_sphere, 2);
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const MetricOperator m = sample_invariant_metric(s, rng);
    const MetricOperator scaled = MetricOperator::make(s, 3.5 * m.matrix());
    const AlgebraElement x = s.algebra().element(rng.normal_vector(static_cast<Eigen::Index>(s.algebra().dim())));
    const auto a = riemannian_geodesic_residual(s, m, x);
    const auto b = riemannian_geodesic_residual(s, scaled, x);
    CHECK(a.verdict == b.verdict);
    CHECK(b.residual == doctest::Approx(a.residual).epsilon(1e-9));
  }
}

TEST_CASE("Randers residual with u = 0 equals the Riemannian one") {
  const HomogeneousSpaceModel s = build_symmetric_triple_space(SpaceFamily::thm2_so_so, 3);
  Rng rng(5);
  const MetricOperator m = sample_invariant_metric(s, rng);
  const AlgebraElement x = s.algebra().element(rng.normal_vector(static_cast<Eigen::Index>(s.algebra().dim())));
  const Vector zero = Vector::Zero(static_cast<Eigen::Index>(s.dim_m()));
  CHECK(randers_geodesic_residual(s, m, zero, x).residual ==
        doctest::Approx(riemannian_geodesic_residual(s, m, x).residual).epsilon(1e-13));
}

TEST_CASE("(alpha, beta) residual with the Randers preset matches the Randers form") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_u1_sphere, 1);
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    const MetricOperator m = sample_invariant_metric(s, rng);
    const Vector u = sample_m0_ball(s, m, kOracleRadius, rng);
    const AlgebraElement x = s.algebra().element(rng.normal_vector(static_cast<Eigen::Index>(s.algebra().dim())));
    const auto general = alpha_beta_geodesic_residual(s, MinkowskiNormSpec::make(s, m, u, PhiPreset::randers), x);
    const auto randers = randers_geodesic_residual(s, m, u, x);
    CHECK(std::abs(general.residual - randers.residual) < 1e-12);
  }
}

TEST_CASE("equigeodesic vectors are geodesic for other (alpha, beta) presets") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 3);
  Rng rng(7);
  const AlgebraElement x = s.element_from_m(s.m0().vector(0));
  for (const PhiPreset p : {PhiPreset::quadratic, PhiPreset::inverse}) {
    const MetricOperator m = sample_invariant_metric(s, rng);
    const Vector u = sample_m0_ball(s, m, 0.5, rng);
    CHECK(alpha_beta_geodesic_residual(s, MinkowskiNormSpec::make(s, m, u, p), x).verdict);
  }
}

TEST_CASE("criterion inputs are validated") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::su_sphere, 2);
  const MetricOperator id = MetricOperator::identity(s);
  const Vector u = 0.5 * s.m0().vector(0);
  const AlgebraElement in_h = s.algebra().element(s.h().vector(0));
  const AlgebraElement in_m = s.element_from_m(first_mprime(s));
  CHECK_THROWS_AS(riemannian_geodesic_residual(s, id, in_h), InvalidInput);
  CHECK_THROWS_AS(randers_geodesic_residual(s, id, first_mprime(s), in_m), InvalidInput);
  CHECK_THROWS_AS(randers_geodesic_residual(s, id, 2.0 * s.m0().vector(0), in_m), InvalidInput);
  CHECK_THROWS_AS(MinkowskiNormSpec::make(s, id, s.m0().vector(0), PhiPreset::randers), InvalidInput);
  CHECK_THROWS_AS(MinkowskiNormSpec::make(s, id, s.m0().vector(0), PhiPreset::inverse), InvalidInput);
  // (1+s)^2 stops being a Minkowski norm once b reaches 1.
  CHECK_THROWS_AS(MinkowskiNormSpec::make(s, id, 1.2 * s.m0().vector(0), PhiPreset::quadratic), InvalidInput);
  CHECK_NOTHROW(MinkowskiNormSpec::make(s, id, u, PhiPreset::randers));
  const LieAlgebra other = build_lie_algebra({{Family::su, 3}});
  CHECK_THROWS_AS(riemannian_geodesic_residual(s, id, other.basis_element(0)), InvalidInput);
}

TEST_CASE("sampled u lies in the alpha ball inside m0") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_sphere, 1);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const MetricOperator m = sample_invariant_metric(s, rng);
    const Vector u = sample_m0_ball(s, m, kOracleRadius, rng);
    CHECK(m.alpha(u, u) <= kOracleRadius * kOracleRadius + 1e-12);
    CHECK((u - orthogonal_projection(u, s.m0())).norm() < 1e-13);
  }
}

TEST_CASE("oracle agrees with the algebraic test and is reproducible") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_u1_sphere, 1);
  const OracleReport pass = sampled_metric_oracle(s, s.m0().vector(0), 50, 1);
  CHECK(pass.verdict);
  CHECK(pass.max_residual < 1e-12);
  const OracleReport fail = sampled_metric_oracle(s, first_mprime(s), 50, 1);
  CHECK(!fail.verdict);
  CHECK(fail.max_residual > 1e-3);
  CHECK(fail.worst_metric.rows() == 7);
  const OracleReport again = sampled_metric_oracle(s, first_mprime(s), 50, 1);
  CHECK(again.max_residual == fail.max_residual);
  CHECK(again.worst_sample == fail.worst_sample);
  CHECK_THROWS_AS(sampled_metric_oracle(s, first_mprime(s), 0, 1), InvalidInput);
}

TEST_CASE("phi presets") {
  CHECK(phi(PhiPreset::randers, 0.3) == doctest::Approx(1.3));
  CHECK(phi_prime(PhiPreset::quadratic, 0.5) == doctest::Approx(3.0));
  CHECK(phi(PhiPreset::inverse, 0.5) == doctest::Approx(2.0));
  CHECK(phi_second(PhiPreset::inverse, 0.0) == doctest::Approx(2.0));
  CHECK(to_string(PhiPreset::quadratic) == "quadratic");
}

TEST_CASE("Sp(2)/Sp(1): single m0 directions versus mixed vectors") {
  const HomogeneousSpaceModel s = build_sphere_space(SpaceFamily::sp_sphere, 1);
  const MetricOperator id = MetricOperator::identity(s);
  const Vector i = s.m0().vector(0), j = s.m0().vector(1);
  CHECK(riemannian_geodesic_residual(s, id, s.element_from_m(i)).verdict);
  // H acts trivially on m0, so a metric may rotate i towards j and [j, i] != 0.
  CHECK(!riemannian_equigeodesic_test(s, i).verdict);
  CHECK(!riemannian_equigeodesic_test(s, Vector(i + j)).verdict);

  // Anisotropic on m0, identity on m'.
  RealMatrix aniso = RealMatrix::Identity(7, 7);
  aniso(0, 0) = 2.0;
  const MetricOperator lambda = MetricOperator::make(s, aniso);
  CHECK(!riemannian_geodesic_residual(s, lambda, s.element_from_m(Vector(i + j))).verdict);
  const Vector mixed = i + Vector::Unit(7, 3);
  CHECK(!riemannian_geodesic_residual(s, MetricOperator::make(s, aniso), s.element_from_m(mixed)).verdict);

  // [i, j] lies in m0, not in h.
  CHECK(!randers_equigeodesic_test(s, i).verdict);
  CHECK(sampled_metric_oracle(s, i, 100, 0).max_residual > 1e-3);
}

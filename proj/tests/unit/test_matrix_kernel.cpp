#include "equigeo/errors.hpp"
#include "equigeo/matrix_kernel.hpp"
#include "equigeo/random.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace equigeo;

namespace {

Quaternion random_q(Rng& rng) { return {rng.normal(), rng.normal(), rng.normal(), rng.normal()}; }

bool same(const Quaternion& a, const Quaternion& b, double tol = 1e-14) {
  return std::abs(a.w - b.w) < tol && std::abs(a.x - b.x) < tol && std::abs(a.y - b.y) < tol &&
         std::abs(a.z - b.z) < tol;
}

}  // namespace

TEST_CASE("quaternion units multiply by the Hamilton rules") {
  const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k(), one = Quaternion::one();
  CHECK(same(i * j, k));
  CHECK(same(j * k, i));
  CHECK(same(k * i, j));
  CHECK(same(j * i, -1.0 * k));
  CHECK(same(i * i, -1.0 * one));
  CHECK(same(i * j * k, -1.0 * one));
}

TEST_CASE("quaternion conjugation reverses products and norm is multiplicative") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Quaternion p = random_q(rng), q = random_q(rng);
    CHECK(same((p * q).conj(), q.conj() * p.conj(), 1e-12));
    CHECK((p * q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-12));
  }
}

TEST_CASE("left multiplication matrix is a homomorphism") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Quaternion p = random_q(rng), q = random_q(rng);
    const RealMatrix diff = left_multiplication_matrix(p * q) - left_multiplication_matrix(p) * left_multiplication_matrix(q);
    CHECK(diff.cwiseAbs().maxCoeff() < 1e-12);
  }
  const RealMatrix li = left_multiplication_matrix(Quaternion::i());
  // i * 1 = i: first column is the coordinates of i.
  CHECK(li(1, 0) == 1.0);
  CHECK((li * li + RealMatrix::Identity(4, 4)).norm() < 1e-15);
}

TEST_CASE("real embedding of complex and quaternionic products") {
  Rng rng(5);
  ComplexMatrix a(3, 3), b(3, 3);
  QuaternionMatrix p(3, 3), q(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      a(r, c) = {rng.normal(), rng.normal()};
      b(r, c) = {rng.normal(), rng.normal()};
      p(r, c) = random_q(rng);
      q(r, c) = random_q(rng);
    }
  const RealMatrix ec = real_embedding(ComplexMatrix(a * b), Field::complex) -
                        real_embedding(a, Field::complex) * real_embedding(b, Field::complex);
  CHECK(ec.cwiseAbs().maxCoeff() < 1e-12);
  const RealMatrix eq = real_embedding(p * q, Field::quaternion) -
                        real_embedding(p, Field::quaternion) * real_embedding(q, Field::quaternion);
  CHECK(eq.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(real_embedding(p, Field::quaternion).rows() == 12);
}

TEST_CASE("complex matrices lift to j-free quaternionic ones compatibly") {
  ComplexMatrix a(2, 2);
  a << std::complex<double>(1, 2), std::complex<double>(0, -1), std::complex<double>(3, 0), std::complex<double>(0.5, 0.25);
  const QuaternionMatrix q = QuaternionMatrix::from_complex(a);
  CHECK(q(0, 0).w == 1.0);
  CHECK(q(0, 0).x == 2.0);
  CHECK(q(0, 0).y == 0.0);
  CHECK(q(1, 1).x == 0.25);
  const QuaternionMatrix sq = q * q;
  const QuaternionMatrix expect = QuaternionMatrix::from_complex(a * a);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(same(sq(r, c), expect(r, c), 1e-12));
}

TEST_CASE("real embedding rejects a field mismatch") {
  CHECK_THROWS_AS(real_embedding(RealMatrix(RealMatrix::Identity(2, 2)), Field::complex), InvalidInput);
  CHECK_THROWS_AS(real_embedding(ComplexMatrix(ComplexMatrix::Identity(2, 2)), Field::quaternion), InvalidInput);
}

TEST_CASE("nullspace of a rank-deficient matrix") {
  RealMatrix a(2, 4);
  a << 1, 2, 3, 4, 2, 4, 6, 8;
  const Subspace n = nullspace_basis(a);
  CHECK(n.dim() == 3);
  CHECK((a * n.basis()).norm() < 1e-12);
  CHECK(orthonormality_defect(n.basis()) < 1e-12);

  CHECK(nullspace_basis(RealMatrix::Zero(3, 5)).dim() == 5);
  CHECK(nullspace_basis(RealMatrix::Identity(4, 4)).dim() == 0);
}

TEST_CASE("nullspace is invariant under row scaling and duplicated rows") {
  Rng rng(8);
  RealMatrix a(3, 6);
  for (Eigen::Index c = 0; c < 6; ++c) a.col(c) = rng.normal_vector(3);
  RealMatrix tall(6, 6);
  tall << 1e6 * a, a;
  CHECK(subspace_distance(nullspace_basis(a), nullspace_basis(tall)) < 1e-9);
}

TEST_CASE("column space, complement and intersection") {
  RealMatrix a(4, 2);
  a << 1, 0, 0, 1, 0, 0, 0, 0;
  const Subspace s = column_space(a);
  const Subspace c = complement(s);
  CHECK(s.dim() == 2);
  CHECK(c.dim() == 2);
  CHECK((s.basis().transpose() * c.basis()).norm() < 1e-14);

  RealMatrix b(4, 2);
  b << 0, 0, 1, 0, 0, 1, 0, 0;
  const Subspace t = column_space(b);
  const Subspace i = intersection(s, t);
  REQUIRE(i.dim() == 1);
  CHECK(std::abs(std::abs(i.vector(0)(1)) - 1.0) < 1e-12);
  CHECK(intersection(s, c).dim() == 0);
}

TEST_CASE("projection is idempotent and rejects mismatched vectors") {
  Rng rng(2);
  RealMatrix a(6, 3);
  for (Eigen::Index c = 0; c < 3; ++c) a.col(c) = rng.normal_vector(6);
  const Subspace s = column_space(a);
  const RealMatrix p = s.projector();
  CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-14);
  const Vector v = rng.normal_vector(6);
  const Vector once = orthogonal_projection(v, s);
  CHECK((orthogonal_projection(once, s) - once).norm() < 1e-14);
  CHECK_THROWS_AS(orthogonal_projection(Vector::Ones(5), s), InvalidInput);
}

TEST_CASE("subspace construction validates orthonormality") {
  RealMatrix bad(3, 2);
  bad << 1, 1, 0, 0, 0, 0;
  CHECK_THROWS_AS(Subspace{bad}, InvalidInput);
  CHECK(Subspace::full(4).dim() == 4);
  CHECK(Subspace(3).is_zero());
}

TEST_CASE("subspace distance is zero for equal spans and infinite across dimensions") {
  RealMatrix a(3, 1), b(3, 1);
  a << 1, 0, 0;
  b << -1, 0, 0;
  CHECK(subspace_distance(Subspace(a), Subspace(b)) == doctest::Approx(0.0));
  CHECK(subspace_distance(Subspace(a), Subspace::full(3)) == std::numeric_limits<double>::infinity());
}

TEST_CASE("sign canonicalisation makes the dominant entry positive") {
  RealMatrix b(3, 2);
  b << -0.1, 0.2, -0.9, 0.1, 0.3, -0.8;
  canonicalize_signs(b);
  CHECK(b(1, 0) > 0.0);
  CHECK(b(2, 1) > 0.0);
}

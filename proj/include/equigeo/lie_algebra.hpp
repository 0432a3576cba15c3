#pragma once

#include "equigeo/matrix_kernel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equigeo {

/// Classical compact families supported as direct summands.
enum class Family { so, su, u, sp, abelian };

/// One direct summand of a compact Lie algebra.
///
/// `n` is the matrix size for so/su/u/sp and the dimension k for the abelian
/// summand R^k. `kappa` scales the summand's share of the bi-invariant inner
/// product; on a non-simple algebra that product is only unique up to such
/// per-ideal factors.
struct FactorSpec {
  Family family = Family::so;
  int n = 2;
  double kappa = 1.0;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

std::string to_string(const FactorSpec& f);

/// Scalar field of a family's defining representation (abelian uses real).
Field family_field(Family f);

/// Embedded representative of an element: block-diagonal real matrix holding
/// all matrix summands, plus the coordinates of the abelian summands.
struct MatrixRep {
  RealMatrix block;
  Vector abelian;
};

/// Coordinates of an element with respect to a specific LieAlgebra.
class AlgebraElement {
 public:
  AlgebraElement(Vector coords, std::uint64_t algebra_id)
      : coords_(std::move(coords)), algebra_id_(algebra_id) {}

  const Vector& coords() const { return coords_; }
  std::uint64_t algebra_id() const { return algebra_id_; }
  std::size_t size() const { return static_cast<std::size_t>(coords_.size()); }

 private:
  Vector coords_;
  std::uint64_t algebra_id_;
};

/// A compact matrix Lie algebra with an orthonormal basis for the
/// bi-invariant inner product
///
///   <A, B>_bi = sum_f kappa_f * ( -Re tr_F(A_f B_f) ) + sum kappa_f * a.b
///
/// where tr_F is the trace over the summand's own scalar field. Coordinates
/// are with respect to that orthonormal basis, so gram() is the identity up
/// to rounding and the Euclidean product on coordinates is <.,.>_bi.
class LieAlgebra {
 public:
  /// Layout of one summand inside the representative.
  struct FactorLayout {
    FactorSpec spec;
    Field field = Field::real;
    Eigen::Index block_offset = 0;  // row/col offset in MatrixRep::block
    Eigen::Index block_size = 0;    // real size of the embedded block
    Eigen::Index abelian_offset = 0;
    std::size_t first_basis = 0;    // first coordinate index of this summand
    std::size_t basis_count = 0;
  };

  /// Builds the direct-sum algebra. Throws InvalidInput for unsupported
  /// factors or non-positive normalisation.
  static LieAlgebra build(std::vector<FactorSpec> spec);

  std::uint64_t id() const { return id_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FactorSpec>& factors() const { return factors_; }
  const std::vector<FactorLayout>& layout() const { return layout_; }
  std::string label() const;

  const RealMatrix& gram() const { return gram_; }
  /// ad(e_i) as a dim x dim matrix: column j holds the coordinates of [e_i, e_j].
  const RealMatrix& ad_basis(std::size_t i) const { return ad_[i]; }
  /// c such that [e_i, e_j] = sum_k c(i,j,k) e_k.
  double structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return ad_[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
  }

  AlgebraElement element(Vector coords) const;
  AlgebraElement basis_element(std::size_t i) const;
  AlgebraElement zero() const;

  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  double bi_invariant_inner_product(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Matrix of ad_x on coordinates.
  RealMatrix ad(const Vector& x) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  MatrixRep representative(const AlgebraElement& x) const;
  const MatrixRep& basis_representative(std::size_t i) const { return basis_[i]; }
  MatrixRep commutator(const MatrixRep& a, const MatrixRep& b) const;
  /// Inner product evaluated through traces of the representatives.
  double trace_inner(const MatrixRep& a, const MatrixRep& b) const;

  /// Assembles a representative from one field matrix per matrix summand (in
  /// factor order, abelian summands skipped) and the abelian coordinates.
  MatrixRep assemble(const std::vector<FieldMatrix>& factor_blocks, const Vector& abelian) const;
  /// Coordinates of a representative; throws InvalidInput if it does not lie
  /// in the algebra to 1e-10.
  AlgebraElement from_representative(const MatrixRep& rep) const;

 private:
  LieAlgebra() = default;
  void require_own(const AlgebraElement& x) const;

  std::uint64_t id_ = 0;
  std::vector<FactorSpec> factors_;
  std::vector<FactorLayout> layout_;
  Eigen::Index block_size_ = 0;
  Eigen::Index abelian_size_ = 0;
  std::vector<MatrixRep> basis_;
  RealMatrix gram_;
  std::vector<RealMatrix> ad_;
};

inline LieAlgebra build_lie_algebra(std::vector<FactorSpec> spec) {
  return LieAlgebra::build(std::move(spec));
}

/// Subspace of coordinate space (<.,.>_bi-orthonormal basis) orthogonal to S.
Subspace orthogonal_complement(const Subspace& s, const LieAlgebra& within);

/// Orthonormal basis (as field matrices) of one classical summand before
/// kappa scaling.
std::vector<FieldMatrix> classical_basis(Family family, int n);

}  // namespace equigeo

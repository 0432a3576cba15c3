#pragma once

#include "equigeo/lie_algebra.hpp"
#include "equigeo/random.hpp"

#include <string>
#include <vector>

namespace equigeo {

/// Tolerance for structural identities (closure, reductivity, Schur blocks).
inline constexpr double kStructureTol = 1e-10;

/// Reductive model g = h + m of a homogeneous space G/H with connected H.
///
/// Coordinate conventions:
///  - h() and m() are subspaces of the algebra's coordinate space;
///  - everything else is expressed in m-coordinates, i.e. with respect to the
///    orthonormal columns of m().basis(). That basis is adapted to the
///    splitting m = m0 + m': the first dim(m0) columns span the fixed-point
///    set, the rest span its orthogonal complement m'.
///
/// Isotropy invariance is modelled infinitesimally through ad(h), which is
/// equivalent to Ad(H)-invariance only for connected H.
class HomogeneousSpaceModel {
 public:
  const LieAlgebra& algebra() const { return algebra_; }
  const std::string& label() const { return label_; }

  const Subspace& h() const { return h_; }
  const Subspace& m() const { return m_; }
  const Subspace& m0() const { return m0_; }
  const Subspace& mprime() const { return mprime_; }
  std::size_t dim_m() const { return m_.dim(); }

  /// ad(h_i) restricted to m, one per orthonormal h-basis vector.
  const std::vector<RealMatrix>& isotropy_action() const { return isotropy_; }
  /// Frobenius-orthonormal basis of the symmetric ad(h)-equivariant operators on m.
  const std::vector<RealMatrix>& commutant() const { return commutant_; }

  /// g-coordinates of an m-coordinate vector.
  Vector embed(const Vector& m_coords) const { return m_.basis() * m_coords; }
  AlgebraElement element_from_m(const Vector& m_coords) const { return algebra_.element(embed(m_coords)); }
  /// m-coordinates of the m-component of a g-coordinate vector.
  Vector project_m(const Vector& g_coords) const { return m_.basis().transpose() * g_coords; }
  /// g-coordinates of the h-component of a g-coordinate vector.
  Vector project_h(const Vector& g_coords) const { return orthogonal_projection(g_coords, h_); }
  /// proj_m [x, y] for x, y given in m-coordinates.
  Vector bracket_m(const Vector& x_m, const Vector& y_m) const;
  /// Matrix of Y -> proj_m [x, Y] on m-coordinates, for x in g-coordinates.
  RealMatrix ad_m(const Vector& x_g) const;

  /// Max residual of the stored invariants; recomputed on demand.
  struct Diagnostics {
    double closure = 0.0;         // proj_m [h, h]
    double reductivity = 0.0;     // proj_h [h, m]
    double fixed_points = 0.0;    // [h, m0]
    double schur_blocks = 0.0;    // proj_m' Lambda_i(m0)
    double identity_span = 0.0;   // Id - projection onto span(commutant)
    double symmetry = 0.0;        // Lambda_i - Lambda_i^T
  };
  Diagnostics diagnostics() const;

 private:
  friend HomogeneousSpaceModel make_reductive_decomposition(const LieAlgebra&,
                                                            const std::vector<AlgebraElement>&,
                                                            std::string);
  explicit HomogeneousSpaceModel(LieAlgebra g) : algebra_(std::move(g)), h_(0), m_(0), m0_(0), mprime_(0) {}

  LieAlgebra algebra_;
  std::string label_;
  Subspace h_;
  Subspace m_;
  Subspace m0_;
  Subspace mprime_;
  std::vector<RealMatrix> isotropy_;
  std::vector<RealMatrix> commutant_;
};

/// Builds the orthogonal reductive decomposition for h = span(h_generators).
/// Throws ConstructionError naming the offending generator pair when the span
/// is not closed under the bracket.
HomogeneousSpaceModel make_reductive_decomposition(const LieAlgebra& g,
                                                   const std::vector<AlgebraElement>& h_generators,
                                                   std::string label = {});

/// {X in m : [h, X] = 0}, in m-coordinates.
Subspace compute_fixed_point_set(const HomogeneousSpaceModel& space);

/// Basis of symmetric operators on m commuting with every ad(h)|_m.
std::vector<RealMatrix> compute_equivariant_symmetric_operators(const HomogeneousSpaceModel& space);

/// True iff the symmetric commutant is one-dimensional.
bool isotropy_irreducibility_test(const HomogeneousSpaceModel& space);

/// Invariant metric operator Lambda on m (m-coordinates).
class MetricOperator {
 public:
  /// Validates symmetry, positive definiteness and ad(h)-equivariance.
  static MetricOperator make(const HomogeneousSpaceModel& space, RealMatrix matrix);
  static MetricOperator identity(const HomogeneousSpaceModel& space);

  const RealMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  double alpha(const Vector& u, const Vector& v) const { return u.dot(matrix_ * v); }
  double min_eigenvalue() const;

 private:
  explicit MetricOperator(RealMatrix m) : matrix_(std::move(m)) {}
  RealMatrix matrix_;
};

/// Id + sum c_i Lambda_i with the perturbation clamped to spectral norm 0.5.
MetricOperator metric_from_coefficients(const HomogeneousSpaceModel& space, const Vector& coefficients);
/// Coefficients uniform in [-1, 1] from the given stream.
MetricOperator sample_invariant_metric(const HomogeneousSpaceModel& space, Rng& rng);
MetricOperator sample_invariant_metric(const HomogeneousSpaceModel& space, std::uint64_t seed);

/// Residual of Lambda commuting with ad(h)|_m.
double equivariance_residual(const HomogeneousSpaceModel& space, const RealMatrix& lambda);

}  // namespace equigeo

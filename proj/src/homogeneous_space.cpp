#include "equigeo/homogeneous_space.hpp"

#include "equigeo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace equigeo {

namespace {

constexpr double kPerturbationBound = 0.5;

double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

RealMatrix stacked(const std::vector<RealMatrix>& blocks, Eigen::Index cols) {
  RealMatrix out(static_cast<Eigen::Index>(blocks.size()) * cols, cols);
  Eigen::Index row = 0;
  for (const auto& b : blocks) {
    out.middleRows(row, b.rows()) = b;
    row += b.rows();
  }
  return out.topRows(row);
}

}  // namespace

Vector HomogeneousSpaceModel::bracket_m(const Vector& x_m, const Vector& y_m) const {
  return project_m(algebra_.bracket(embed(x_m), embed(y_m)));
}

RealMatrix HomogeneousSpaceModel::ad_m(const Vector& x_g) const {
  return m_.basis().transpose() * algebra_.ad(x_g) * m_.basis();
}

HomogeneousSpaceModel::Diagnostics HomogeneousSpaceModel::diagnostics() const {
  Diagnostics d;
  const RealMatrix& hb = h_.basis();
  const RealMatrix& mb = m_.basis();
  for (Eigen::Index i = 0; i < hb.cols(); ++i) {
    const RealMatrix ad_h = algebra_.ad(hb.col(i));
    d.closure = std::max(d.closure, max_abs(mb.transpose() * ad_h * hb));
    d.reductivity = std::max(d.reductivity, max_abs(hb.transpose() * ad_h * mb));
  }
  for (const auto& a : isotropy_) d.fixed_points = std::max(d.fixed_points, max_abs(a * m0_.basis()));

  const auto n = static_cast<Eigen::Index>(dim_m());
  RealMatrix identity_rest = RealMatrix::Identity(n, n);
  for (const auto& lambda : commutant_) {
    d.symmetry = std::max(d.symmetry, max_abs(lambda - lambda.transpose()));
    if (!m0_.is_zero() && !mprime_.is_zero())
      d.schur_blocks =
          std::max(d.schur_blocks, max_abs(mprime_.basis().transpose() * lambda * m0_.basis()));
    identity_rest -= lambda.trace() * lambda;
  }
  d.identity_span = n == 0 ? 0.0 : max_abs(identity_rest);
  return d;
}

HomogeneousSpaceModel make_reductive_decomposition(const LieAlgebra& g,
                                                   const std::vector<AlgebraElement>& h_generators,
                                                   std::string label) {
  const auto dg = static_cast<Eigen::Index>(g.dim());
  RealMatrix gens(dg, static_cast<Eigen::Index>(h_generators.size()));
  for (std::size_t a = 0; a < h_generators.size(); ++a) {
    if (h_generators[a].algebra_id() != g.id())
      throw InvalidInput("make_reductive_decomposition: generator " + std::to_string(a) +
                         " belongs to a different algebra");
    gens.col(static_cast<Eigen::Index>(a)) = h_generators[a].coords();
  }

  HomogeneousSpaceModel s(g);
  s.label_ = label.empty() ? g.label() : std::move(label);
  s.h_ = column_space(gens);

  // Closure is checked on the generators so the error can name them.
  const RealMatrix off_h = RealMatrix::Identity(dg, dg) - s.h_.projector();
  for (Eigen::Index a = 0; a < gens.cols(); ++a)
    for (Eigen::Index b = a + 1; b < gens.cols(); ++b) {
      const Vector br = g.bracket(Vector(gens.col(a)), Vector(gens.col(b)));
      const double scale = std::max(1.0, gens.col(a).norm() * gens.col(b).norm());
      const double residual = (off_h * br).norm();
      if (residual > kStructureTol * scale)
        throw ConstructionError("h is not a subalgebra: [generator " + std::to_string(a) +
                                ", generator " + std::to_string(b) +
                                "] leaves span(h) (residual " + std::to_string(residual) + ")");
    }

  const Subspace m_initial = orthogonal_complement(s.h_, g);
  const RealMatrix& mb = m_initial.basis();
  const auto dm = mb.cols();

  std::vector<RealMatrix> action;
  for (Eigen::Index i = 0; i < s.h_.basis().cols(); ++i)
    action.push_back(mb.transpose() * g.ad(s.h_.basis().col(i)) * mb);

  const Subspace m0 = action.empty() ? Subspace::full(static_cast<std::size_t>(dm))
                                     : nullspace_basis(stacked(action, dm));
  const Subspace mp = complement(m0);

  RealMatrix adapted(dm, dm);
  adapted << m0.basis(), mp.basis();
  s.m_ = Subspace(RealMatrix(mb * adapted));

  const auto k = static_cast<Eigen::Index>(m0.dim());
  const RealMatrix eye = RealMatrix::Identity(dm, dm);
  s.m0_ = Subspace(RealMatrix(eye.leftCols(k)));
  s.mprime_ = Subspace(RealMatrix(eye.rightCols(dm - k)));

  for (Eigen::Index i = 0; i < s.h_.basis().cols(); ++i) s.isotropy_.push_back(s.ad_m(s.h_.basis().col(i)));
  s.commutant_ = compute_equivariant_symmetric_operators(s);

  const auto d = s.diagnostics();
  const auto check = [&](double value, const char* what) {
    if (value > kStructureTol)
      throw ConstructionError(std::string("reductive decomposition of ") + s.label_ + ": " + what +
                              " residual " + std::to_string(value));
  };
  check(d.closure, "closure of h");
  check(d.reductivity, "[h, m] in m");
  check(d.fixed_points, "[h, m0] = 0");
  check(d.schur_blocks, "commutant preserves m0");
  check(d.identity_span, "identity in commutant span");
  check(d.symmetry, "commutant symmetry");
  return s;
}

Subspace compute_fixed_point_set(const HomogeneousSpaceModel& space) {
  const auto dm = static_cast<Eigen::Index>(space.dim_m());
  if (space.isotropy_action().empty()) return Subspace::full(space.dim_m());
  return nullspace_basis(stacked(space.isotropy_action(), dm));
}

std::vector<RealMatrix> compute_equivariant_symmetric_operators(const HomogeneousSpaceModel& space) {
  const auto d = static_cast<Eigen::Index>(space.dim_m());
  if (d == 0) return {};
  const Eigen::Index unknowns = d * d;
  const auto idx = [d](Eigen::Index r, Eigen::Index c) { return r + c * d; };  // column-major vec

  const auto& action = space.isotropy_action();
  const Eigen::Index sym_rows = d * (d - 1) / 2;
  RealMatrix system = RealMatrix::Zero(static_cast<Eigen::Index>(action.size()) * unknowns + sym_rows, unknowns);

  // Lambda A - A Lambda = 0 for every isotropy generator A, over all of gl(m).
  Eigen::Index row = 0;
  for (const auto& a : action) {
    for (Eigen::Index c = 0; c < d; ++c)
      for (Eigen::Index r = 0; r < d; ++r, ++row)
        for (Eigen::Index k = 0; k < d; ++k) {
          system(row, idx(r, k)) += a(k, c);
          system(row, idx(k, c)) -= a(r, k);
        }
  }
  // Intersect with the symmetric matrices.
  for (Eigen::Index p = 0; p < d; ++p)
    for (Eigen::Index q = p + 1; q < d; ++q, ++row) {
      system(row, idx(p, q)) = 1.0;
      system(row, idx(q, p)) = -1.0;
    }

  const Subspace solutions = nullspace_basis(system);
  std::vector<RealMatrix> out;
  out.reserve(solutions.dim());
  for (std::size_t i = 0; i < solutions.dim(); ++i) {
    const Vector v = solutions.vector(i);
    RealMatrix lambda = Eigen::Map<const RealMatrix>(v.data(), d, d);
    out.push_back(0.5 * (lambda + lambda.transpose()));
  }
  return out;
}

bool isotropy_irreducibility_test(const HomogeneousSpaceModel& space) {
  return compute_equivariant_symmetric_operators(space).size() == 1;
}

double equivariance_residual(const HomogeneousSpaceModel& space, const RealMatrix& lambda) {
  double worst = 0.0;
  for (const auto& a : space.isotropy_action()) worst = std::max(worst, max_abs(lambda * a - a * lambda));
  return worst;
}

MetricOperator MetricOperator::make(const HomogeneousSpaceModel& space, RealMatrix matrix) {
  const auto d = static_cast<Eigen::Index>(space.dim_m());
  if (matrix.rows() != d || matrix.cols() != d)
    throw InvalidInput("MetricOperator: expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  if (!matrix.allFinite()) throw InvalidInput("MetricOperator: non-finite entries");
  const double scale = std::max(1.0, max_abs(matrix));
  if (max_abs(matrix - matrix.transpose()) > kStructureTol * scale)
    throw InvalidInput("MetricOperator: matrix is not symmetric");
  const double equiv = equivariance_residual(space, matrix);
  if (equiv > kStructureTol * scale)
    throw InvalidInput("MetricOperator: matrix is not ad(h)-equivariant (residual " + std::to_string(equiv) + ")");
  MetricOperator op(0.5 * (matrix + matrix.transpose()));
  if (!(op.min_eigenvalue() > 0.0)) throw InvalidInput("MetricOperator: matrix is not positive definite");
  return op;
}

MetricOperator MetricOperator::identity(const HomogeneousSpaceModel& space) {
  const auto d = static_cast<Eigen::Index>(space.dim_m());
  return MetricOperator(RealMatrix::Identity(d, d));
}

double MetricOperator::min_eigenvalue() const {
  if (matrix_.size() == 0) return 1.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(matrix_, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

MetricOperator metric_from_coefficients(const HomogeneousSpaceModel& space, const Vector& coefficients) {
  const auto& basis = space.commutant();
  if (static_cast<std::size_t>(coefficients.size()) != basis.size())
    throw InvalidInput("metric_from_coefficients: expected " + std::to_string(basis.size()) + " coefficients");
  const auto d = static_cast<Eigen::Index>(space.dim_m());
  RealMatrix perturbation = RealMatrix::Zero(d, d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    perturbation += coefficients(static_cast<Eigen::Index>(i)) * basis[i];
  if (d > 0) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(perturbation, Eigen::EigenvaluesOnly);
    const double spectral = eig.eigenvalues().cwiseAbs().maxCoeff();
    if (spectral > kPerturbationBound) perturbation *= kPerturbationBound / spectral;
  }
  return MetricOperator::make(space, RealMatrix::Identity(d, d) + perturbation);
}

MetricOperator sample_invariant_metric(const HomogeneousSpaceModel& space, Rng& rng) {
  Vector c(static_cast<Eigen::Index>(space.commutant().size()));
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.uniform(-1.0, 1.0);
  return metric_from_coefficients(space, c);
}

MetricOperator sample_invariant_metric(const HomogeneousSpaceModel& space, std::uint64_t seed) {
  Rng rng(seed);
  return sample_invariant_metric(space, rng);
}

}  // namespace equigeo

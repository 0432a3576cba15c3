#include "equigeo/matrix_kernel.hpp"

#include "equigeo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace equigeo {

namespace {

// Singular values below this are treated as zero regardless of the relative
// cutoff, so that a matrix made only of rounding noise has full nullspace.
constexpr double kAbsoluteRankFloor = 1e-12;

}  // namespace

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

QuaternionMatrix::QuaternionMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidInput("QuaternionMatrix: dimensions must be positive");
}

QuaternionMatrix QuaternionMatrix::from_complex(const ComplexMatrix& m) {
  QuaternionMatrix q(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      q(r, c) = {m(r, c).real(), m(r, c).imag(), 0.0, 0.0};
  return q;
}

QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("QuaternionMatrix product: inner dimensions differ");
  QuaternionMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Quaternion acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  return out;
}

int field_degree(Field f) {
  switch (f) {
    case Field::real:
      return 1;
    case Field::complex:
      return 2;
    case Field::quaternion:
      return 4;
  }
  return 1;
}

RealMatrix left_multiplication_matrix(const Quaternion& q) {
  RealMatrix m(4, 4);
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w, -q.z,  q.y,
       q.y,  q.z,  q.w, -q.x,
       q.z, -q.y,  q.x,  q.w;
  return m;
}

RealMatrix real_embedding(const FieldMatrix& entries, Field field) {
  if (static_cast<std::size_t>(field) != entries.index())
    throw InvalidInput("real_embedding: field tag does not match the entry type");

  switch (field) {
    case Field::real:
      return std::get<RealMatrix>(entries);
    case Field::complex: {
      const auto& m = std::get<ComplexMatrix>(entries);
      RealMatrix out(2 * m.rows(), 2 * m.cols());
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          const double a = m(r, c).real();
          const double b = m(r, c).imag();
          out.block<2, 2>(2 * r, 2 * c) << a, -b, b, a;
        }
      return out;
    }
    case Field::quaternion: {
      const auto& m = std::get<QuaternionMatrix>(entries);
      const auto rows = static_cast<Eigen::Index>(m.rows());
      const auto cols = static_cast<Eigen::Index>(m.cols());
      RealMatrix out(4 * rows, 4 * cols);
      for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
          out.block<4, 4>(4 * r, 4 * c) = left_multiplication_matrix(m(r, c));
      return out;
    }
  }
  throw InvalidInput("real_embedding: unknown field");
}

double orthonormality_defect(const RealMatrix& basis) {
  if (basis.cols() == 0) return 0.0;
  const RealMatrix gram = basis.transpose() * basis;
  return (gram - RealMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

void canonicalize_signs(RealMatrix& basis) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    const double peak = basis.col(c).cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      if (std::abs(basis(r, c)) >= peak * (1.0 - 1e-9)) {
        if (basis(r, c) < 0.0) basis.col(c) *= -1.0;
        break;
      }
    }
  }
}

Subspace::Subspace(std::size_t ambient_dim) : basis_(static_cast<Eigen::Index>(ambient_dim), 0) {}

Subspace::Subspace(RealMatrix basis) : basis_(std::move(basis)) {
  if (basis_.cols() > basis_.rows())
    throw InvalidInput("Subspace: more basis vectors than the ambient dimension");
  if (!basis_.allFinite()) throw InvalidInput("Subspace: non-finite basis entries");
  const double defect = orthonormality_defect(basis_);
  if (defect > kOrthTol)
    throw InvalidInput("Subspace: basis not orthonormal (defect " + std::to_string(defect) + ")");
}

Subspace Subspace::full(std::size_t ambient_dim) {
  const auto n = static_cast<Eigen::Index>(ambient_dim);
  return Subspace(RealMatrix(RealMatrix::Identity(n, n)));
}

RealMatrix Subspace::projector() const { return basis_ * basis_.transpose(); }

Subspace nullspace_basis(const RealMatrix& a, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("nullspace_basis: tol must be positive");
  const Eigen::Index n = a.cols();
  if (n == 0) return Subspace(0);
  if (a.rows() == 0) return Subspace::full(static_cast<std::size_t>(n));

  // Reduce tall systems to their n x n triangular factor first; the
  // nullspace and singular values are unchanged.
  RealMatrix square;
  if (a.rows() > n) {
    Eigen::HouseholderQR<RealMatrix> qr(a);
    square = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  } else {
    square = RealMatrix::Zero(n, n);
    square.topRows(a.rows()) = a;
  }

  Eigen::JacobiSVD<RealMatrix> svd(square, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = std::max(tol * sv(0), kAbsoluteRankFloor);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;

  RealMatrix basis = svd.matrixV().rightCols(n - rank);
  canonicalize_signs(basis);
  return Subspace(std::move(basis));
}

Subspace column_space(const RealMatrix& a, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("column_space: tol must be positive");
  if (a.cols() == 0 || a.rows() == 0) return Subspace(static_cast<std::size_t>(a.rows()));
  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = std::max(tol * sv(0), kAbsoluteRankFloor);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  RealMatrix basis = svd.matrixU().leftCols(rank);
  canonicalize_signs(basis);
  return Subspace(std::move(basis));
}

Subspace complement(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return nullspace_basis(s.basis().transpose());
}

Subspace intersection(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim())
    throw InvalidInput("intersection: ambient dimensions differ");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  const RealMatrix off_b = a.basis() - b.basis() * (b.basis().transpose() * a.basis());
  const Subspace coeffs = nullspace_basis(off_b, tol);
  RealMatrix basis = a.basis() * coeffs.basis();
  canonicalize_signs(basis);
  return Subspace(std::move(basis));
}

Vector orthogonal_projection(const Vector& v, const Subspace& s) {
  if (static_cast<std::size_t>(v.size()) != s.ambient_dim())
    throw InvalidInput("orthogonal_projection: dimension mismatch (" + std::to_string(v.size()) +
                       " vs " + std::to_string(s.ambient_dim()) + ")");
  if (s.is_zero()) return Vector::Zero(v.size());
  return s.basis() * (s.basis().transpose() * v);
}

double subspace_distance(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim())
    return std::numeric_limits<double>::infinity();
  if (a.is_zero()) return 0.0;
  const RealMatrix a_off_b = a.basis() - b.basis() * (b.basis().transpose() * a.basis());
  const RealMatrix b_off_a = b.basis() - a.basis() * (a.basis().transpose() * b.basis());
  return std::max(a_off_b.colwise().norm().maxCoeff(), b_off_a.colwise().norm().maxCoeff());
}

}  // namespace equigeo

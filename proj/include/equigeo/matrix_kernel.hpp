#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <variant>
#include <vector>

namespace equigeo {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

/// Default relative cutoff for numerical rank decisions.
inline constexpr double kRankTol = 1e-9;
/// Orthonormality tolerance for subspace bases.
inline constexpr double kOrthTol = 1e-10;

/// Real quaternion w + xi + yj + zk.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm() const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& p, const Quaternion& q);
Quaternion operator-(const Quaternion& p, const Quaternion& q);
Quaternion operator*(double s, const Quaternion& q);
/// Hamilton product.
Quaternion operator*(const Quaternion& p, const Quaternion& q);

inline Quaternion quaternion_product(const Quaternion& p, const Quaternion& q) { return p * q; }

/// Dense quaternionic matrix, row-major.
class QuaternionMatrix {
 public:
  QuaternionMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Lifts a complex matrix to a j-free quaternionic one.
  static QuaternionMatrix from_complex(const ComplexMatrix& m);

  friend QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Quaternion> data_;
};

enum class Field { real, complex, quaternion };

/// Embedding factor of a field: real dimension of one scalar.
int field_degree(Field f);

using FieldMatrix = std::variant<RealMatrix, ComplexMatrix, QuaternionMatrix>;

/// Standard real embedding: complex entries become 2x2 blocks, quaternion
/// entries become the 4x4 left-multiplication matrix in the basis (1, i, j, k).
/// The map is an algebra homomorphism. Throws InvalidInput when `field`
/// does not match the stored scalar type.
RealMatrix real_embedding(const FieldMatrix& entries, Field field);

/// 4x4 matrix of left multiplication by q on (1, i, j, k)-coordinates.
RealMatrix left_multiplication_matrix(const Quaternion& q);

/// A subspace of R^ambient_dim given by an orthonormal basis stored as columns.
class Subspace {
 public:
  /// The zero subspace.
  explicit Subspace(std::size_t ambient_dim);
  /// Takes ownership of an orthonormal basis; throws InvalidInput if the
  /// columns are not orthonormal to kOrthTol.
  explicit Subspace(RealMatrix basis);

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return static_cast<std::size_t>(basis_.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.cols()); }
  bool is_zero() const { return basis_.cols() == 0; }

  const RealMatrix& basis() const { return basis_; }
  Vector vector(std::size_t i) const { return basis_.col(static_cast<Eigen::Index>(i)); }

  /// Orthogonal projector onto the subspace.
  RealMatrix projector() const;

 private:
  RealMatrix basis_;
};

/// Orthonormal basis of {v : |Av| <= tol * sigma_max(A) * |v|} via SVD.
/// A zero (or empty) matrix yields the full space.
Subspace nullspace_basis(const RealMatrix& a, double tol = kRankTol);

/// Orthonormal basis of the column span of A, using the same rank rule.
Subspace column_space(const RealMatrix& a, double tol = kRankTol);

/// Euclidean orthogonal complement within the ambient space.
Subspace complement(const Subspace& s);

/// Intersection of two subspaces of the same ambient space.
Subspace intersection(const Subspace& a, const Subspace& b, double tol = kRankTol);

/// sum_i <v, b_i> b_i. Throws InvalidInput on dimension mismatch.
Vector orthogonal_projection(const Vector& v, const Subspace& s);

/// Largest distance from a basis vector of one subspace to the other
/// (symmetric). Infinity when dimensions differ.
double subspace_distance(const Subspace& a, const Subspace& b);

/// Residual of B^T B - I in max-abs norm.
double orthonormality_defect(const RealMatrix& basis);

/// Flips each column so that its first entry of maximal magnitude is positive.
void canonicalize_signs(RealMatrix& basis);

}  // namespace equigeo

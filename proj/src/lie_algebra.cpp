#include "equigeo/lie_algebra.hpp"

#include "equigeo/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace equigeo {

namespace {

constexpr double kMembershipTol = 1e-10;

std::uint64_t next_algebra_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

Eigen::Index embedded_size(const FactorSpec& f) {
  switch (f.family) {
    case Family::so:
      return f.n;
    case Family::su:
    case Family::u:
      return 2 * f.n;
    case Family::sp:
      return 4 * f.n;
    case Family::abelian:
      return 0;
  }
  return 0;
}

void validate(const FactorSpec& f) {
  const bool ok = [&] {
    switch (f.family) {
      case Family::so:
      case Family::su:
        return f.n >= 2;
      case Family::u:
      case Family::sp:
      case Family::abelian:
        return f.n >= 1;
    }
    return false;
  }();
  if (!ok) throw InvalidInput("unsupported factor " + to_string(f));
  if (!(f.kappa > 0.0) || !std::isfinite(f.kappa))
    throw InvalidInput("factor " + to_string(f) + ": normalisation coefficient must be positive");
}

RealMatrix real_unit(int n, int a, int b) {
  RealMatrix m = RealMatrix::Zero(n, n);
  m(a, b) = 1.0;
  return m;
}

}  // namespace

std::string to_string(const FactorSpec& f) {
  std::ostringstream os;
  switch (f.family) {
    case Family::so:
      os << "so(" << f.n << ")";
      break;
    case Family::su:
      os << "su(" << f.n << ")";
      break;
    case Family::u:
      os << "u(" << f.n << ")";
      break;
    case Family::sp:
      os << "sp(" << f.n << ")";
      break;
    case Family::abelian:
      os << "R^" << f.n;
      break;
  }
  if (f.kappa != 1.0) os << "[kappa=" << f.kappa << "]";
  return os.str();
}

Field family_field(Family f) {
  switch (f) {
    case Family::su:
    case Family::u:
      return Field::complex;
    case Family::sp:
      return Field::quaternion;
    case Family::so:
    case Family::abelian:
      return Field::real;
  }
  return Field::real;
}

std::vector<FieldMatrix> classical_basis(Family family, int n) {
  using std::numbers::sqrt2;
  std::vector<FieldMatrix> out;
  switch (family) {
    case Family::so:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          out.emplace_back(RealMatrix((real_unit(n, a, b) - real_unit(n, b, a)) / sqrt2));
      break;

    case Family::su:
    case Family::u: {
      const std::complex<double> i(0.0, 1.0);
      if (family == Family::u) {
        for (int a = 0; a < n; ++a) {
          ComplexMatrix m = ComplexMatrix::Zero(n, n);
          m(a, a) = i;
          out.emplace_back(std::move(m));
        }
      } else {
        // Orthonormal Cartan elements i diag(1, .., 1, -k, 0, ..) / sqrt(k(k+1)).
        for (int k = 1; k < n; ++k) {
          ComplexMatrix m = ComplexMatrix::Zero(n, n);
          const double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
          for (int a = 0; a < k; ++a) m(a, a) = i * s;
          m(k, k) = -static_cast<double>(k) * s * i;
          out.emplace_back(std::move(m));
        }
      }
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          ComplexMatrix re = ComplexMatrix::Zero(n, n);
          re(a, b) = 1.0 / sqrt2;
          re(b, a) = -1.0 / sqrt2;
          ComplexMatrix im = ComplexMatrix::Zero(n, n);
          im(a, b) = i / sqrt2;
          im(b, a) = i / sqrt2;
          out.emplace_back(std::move(re));
          out.emplace_back(std::move(im));
        }
      break;
    }

    case Family::sp: {
      const Quaternion imag[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
      const Quaternion units[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                   Quaternion::k()};
      const auto un = static_cast<std::size_t>(n);
      for (std::size_t a = 0; a < un; ++a)
        for (const auto& q : imag) {
          QuaternionMatrix m(un, un);
          m(a, a) = q;
          out.emplace_back(std::move(m));
        }
      for (std::size_t a = 0; a < un; ++a)
        for (std::size_t b = a + 1; b < un; ++b)
          for (const auto& q : units) {
            QuaternionMatrix m(un, un);
            m(a, b) = (1.0 / sqrt2) * q;
            m(b, a) = (-1.0 / sqrt2) * q.conj();
            out.emplace_back(std::move(m));
          }
      break;
    }

    case Family::abelian:
      break;
  }
  return out;
}

LieAlgebra LieAlgebra::build(std::vector<FactorSpec> spec) {
  if (spec.empty()) throw InvalidInput("build_lie_algebra: empty factor list");
  for (const auto& f : spec) validate(f);

  LieAlgebra g;
  g.id_ = next_algebra_id();
  g.factors_ = std::move(spec);

  for (const auto& f : g.factors_) {
    FactorLayout lay;
    lay.spec = f;
    lay.field = family_field(f.family);
    lay.block_offset = g.block_size_;
    lay.block_size = embedded_size(f);
    lay.abelian_offset = g.abelian_size_;
    g.block_size_ += lay.block_size;
    if (f.family == Family::abelian) g.abelian_size_ += f.n;
    g.layout_.push_back(lay);
  }

  for (auto& lay : g.layout_) {
    lay.first_basis = g.basis_.size();
    const double scale = 1.0 / std::sqrt(lay.spec.kappa);
    if (lay.spec.family == Family::abelian) {
      for (int a = 0; a < lay.spec.n; ++a) {
        MatrixRep rep{RealMatrix::Zero(g.block_size_, g.block_size_), Vector::Zero(g.abelian_size_)};
        rep.abelian(lay.abelian_offset + a) = scale;
        g.basis_.push_back(std::move(rep));
      }
    } else {
      for (const auto& m : classical_basis(lay.spec.family, lay.spec.n)) {
        MatrixRep rep{RealMatrix::Zero(g.block_size_, g.block_size_), Vector::Zero(g.abelian_size_)};
        rep.block.block(lay.block_offset, lay.block_offset, lay.block_size, lay.block_size) =
            scale * real_embedding(m, lay.field);
        g.basis_.push_back(std::move(rep));
      }
    }
    lay.basis_count = g.basis_.size() - lay.first_basis;
  }

  const std::size_t d = g.basis_.size();
  const auto di = static_cast<Eigen::Index>(d);
  g.gram_.resize(di, di);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      g.gram_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          g.trace_inner(g.basis_[i], g.basis_[j]);
  const double gram_defect = (g.gram_ - RealMatrix::Identity(di, di)).cwiseAbs().maxCoeff();
  if (gram_defect > kMembershipTol)
    throw ConstructionError("build_lie_algebra: basis not orthonormal (defect " +
                            std::to_string(gram_defect) + ")");

  g.ad_.assign(d, RealMatrix::Zero(di, di));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      const MatrixRep c = g.commutator(g.basis_[i], g.basis_[j]);
      for (std::size_t k = 0; k < d; ++k)
        g.ad_[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
            g.trace_inner(c, g.basis_[k]);
    }
  return g;
}

std::string LieAlgebra::label() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " + ";
    out += to_string(f);
  }
  return out;
}

void LieAlgebra::require_own(const AlgebraElement& x) const {
  if (x.algebra_id() != id_) throw InvalidInput("element belongs to a different algebra");
  if (x.size() != dim()) throw InvalidInput("element has wrong coordinate length");
}

AlgebraElement LieAlgebra::element(Vector coords) const {
  if (static_cast<std::size_t>(coords.size()) != dim())
    throw InvalidInput("element: expected " + std::to_string(dim()) + " coordinates, got " +
                       std::to_string(coords.size()));
  return AlgebraElement(std::move(coords), id_);
}

AlgebraElement LieAlgebra::basis_element(std::size_t i) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim()));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return element(std::move(v));
}

AlgebraElement LieAlgebra::zero() const { return element(Vector::Zero(static_cast<Eigen::Index>(dim()))); }

RealMatrix LieAlgebra::ad(const Vector& x) const {
  const auto d = static_cast<Eigen::Index>(dim());
  RealMatrix out = RealMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    if (x(i) != 0.0) out += x(i) * ad_[static_cast<std::size_t>(i)];
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return ad(x) * y; }

AlgebraElement LieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  require_own(x);
  require_own(y);
  return element(bracket(x.coords(), y.coords()));
}

double LieAlgebra::bi_invariant_inner_product(const AlgebraElement& x, const AlgebraElement& y) const {
  require_own(x);
  require_own(y);
  return x.coords().dot(gram_ * y.coords());
}

MatrixRep LieAlgebra::representative(const AlgebraElement& x) const {
  require_own(x);
  MatrixRep out{RealMatrix::Zero(block_size_, block_size_), Vector::Zero(abelian_size_)};
  for (std::size_t i = 0; i < dim(); ++i) {
    const double c = x.coords()(static_cast<Eigen::Index>(i));
    if (c == 0.0) continue;
    out.block += c * basis_[i].block;
    out.abelian += c * basis_[i].abelian;
  }
  return out;
}

MatrixRep LieAlgebra::commutator(const MatrixRep& a, const MatrixRep& b) const {
  return {a.block * b.block - b.block * a.block, Vector::Zero(abelian_size_)};
}

double LieAlgebra::trace_inner(const MatrixRep& a, const MatrixRep& b) const {
  double total = 0.0;
  for (const auto& lay : layout_) {
    if (lay.spec.family == Family::abelian) {
      total += lay.spec.kappa * a.abelian.segment(lay.abelian_offset, lay.spec.n)
                                    .dot(b.abelian.segment(lay.abelian_offset, lay.spec.n));
      continue;
    }
    const auto ab = a.block.block(lay.block_offset, lay.block_offset, lay.block_size, lay.block_size);
    const auto bb = b.block.block(lay.block_offset, lay.block_offset, lay.block_size, lay.block_size);
    const double tr = ab.cwiseProduct(bb.transpose()).sum();
    total += lay.spec.kappa * (-tr / field_degree(lay.field));
  }
  return total;
}

MatrixRep LieAlgebra::assemble(const std::vector<FieldMatrix>& factor_blocks, const Vector& abelian) const {
  MatrixRep out{RealMatrix::Zero(block_size_, block_size_), abelian};
  if (abelian.size() != abelian_size_)
    throw InvalidInput("assemble: expected " + std::to_string(abelian_size_) + " abelian coordinates");
  std::size_t next = 0;
  for (const auto& lay : layout_) {
    if (lay.spec.family == Family::abelian) continue;
    if (next >= factor_blocks.size()) throw InvalidInput("assemble: too few factor blocks");
    const RealMatrix e = real_embedding(factor_blocks[next++], lay.field);
    if (e.rows() != lay.block_size || e.cols() != lay.block_size)
      throw InvalidInput("assemble: block for " + to_string(lay.spec) + " has wrong size");
    out.block.block(lay.block_offset, lay.block_offset, lay.block_size, lay.block_size) = e;
  }
  if (next != factor_blocks.size()) throw InvalidInput("assemble: too many factor blocks");
  return out;
}

AlgebraElement LieAlgebra::from_representative(const MatrixRep& rep) const {
  if (rep.block.rows() != block_size_ || rep.block.cols() != block_size_ ||
      rep.abelian.size() != abelian_size_)
    throw InvalidInput("from_representative: shape mismatch");
  const auto d = static_cast<Eigen::Index>(dim());
  Vector coords(d);
  for (Eigen::Index i = 0; i < d; ++i) coords(i) = trace_inner(rep, basis_[static_cast<std::size_t>(i)]);
  AlgebraElement x = element(coords);
  const MatrixRep back = representative(x);
  const double scale = std::max({1.0, rep.block.cwiseAbs().maxCoeff(),
                                 abelian_size_ > 0 ? rep.abelian.cwiseAbs().maxCoeff() : 0.0});
  double residual = (back.block - rep.block).cwiseAbs().maxCoeff();
  if (abelian_size_ > 0) residual = std::max(residual, (back.abelian - rep.abelian).cwiseAbs().maxCoeff());
  if (residual > kMembershipTol * scale)
    throw InvalidInput("from_representative: matrix is not in " + label() + " (residual " +
                       std::to_string(residual) + ")");
  return x;
}

Subspace orthogonal_complement(const Subspace& s, const LieAlgebra& within) {
  if (s.ambient_dim() != within.dim())
    throw InvalidInput("orthogonal_complement: subspace is not in the algebra's coordinate space");
  if (s.is_zero()) return Subspace::full(within.dim());
  return nullspace_basis(s.basis().transpose() * within.gram());
}

}  // namespace equigeo

#include "equigeo/catalog.hpp"

#include "equigeo/errors.hpp"

#include <algorithm>
#include <array>
#include <complex>

namespace equigeo {

namespace {

struct NamedFamily {
  SpaceFamily family;
  const char* name;
};

constexpr std::array<NamedFamily, 10> kFamilies{{
    {SpaceFamily::so_sphere, "so-sphere"},
    {SpaceFamily::su_sphere, "su-sphere"},
    {SpaceFamily::u_sphere, "u-sphere"},
    {SpaceFamily::sp_sphere, "sp-sphere"},
    {SpaceFamily::sp_sp1_sphere, "sp-sp1-sphere"},
    {SpaceFamily::sp_u1_sphere, "sp-u1-sphere"},
    {SpaceFamily::thm2_su_su, "thm2-su-su"},
    {SpaceFamily::thm2_sp_su, "thm2-sp-su"},
    {SpaceFamily::thm2_so_so, "thm2-so-so"},
    {SpaceFamily::thm2_so_su, "thm2-so-su"},
}};

FieldMatrix zero_matrix(Field f, int n) {
  switch (f) {
    case Field::real:
      return RealMatrix(RealMatrix::Zero(n, n));
    case Field::complex:
      return ComplexMatrix(ComplexMatrix::Zero(n, n));
    case Field::quaternion:
      return QuaternionMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  }
  return RealMatrix(RealMatrix::Zero(n, n));
}

// Places `m` at (offset, offset) inside an n x n zero matrix of the same field.
FieldMatrix embed_block(const FieldMatrix& m, int n, int offset) {
  return std::visit(
      [&](const auto& src) -> FieldMatrix {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, QuaternionMatrix>) {
          QuaternionMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
          for (std::size_t r = 0; r < src.rows(); ++r)
            for (std::size_t c = 0; c < src.cols(); ++c) out(r + offset, c + offset) = src(r, c);
          return out;
        } else {
          T out = T::Zero(n, n);
          out.block(offset, offset, src.rows(), src.cols()) = src;
          return out;
        }
      },
      m);
}

// Elements of g built from one field matrix per matrix summand plus abelian part.
class Generators {
 public:
  explicit Generators(const LieAlgebra& g) : g_(g) {}

  AlgebraElement make(const std::vector<FieldMatrix>& blocks, Vector abelian = Vector()) const {
    if (abelian.size() == 0) abelian = Vector::Zero(abelian_size());
    return g_.from_representative(g_.assemble(blocks, abelian));
  }

  // Classical subalgebra basis placed at `offset` in the matrix summand with
  // index `factor`; other summands zero.
  std::vector<AlgebraElement> block_subalgebra(std::size_t factor, Family family, int n, int offset) const {
    std::vector<AlgebraElement> out;
    for (const auto& b : classical_basis(family, n)) {
      auto blocks = zeros();
      blocks[factor] = embed_block(b, matrix_size(factor), offset);
      out.push_back(make(blocks));
    }
    return out;
  }

  std::vector<FieldMatrix> zeros() const {
    std::vector<FieldMatrix> out;
    for (const auto& lay : g_.layout())
      if (lay.spec.family != Family::abelian) out.push_back(zero_matrix(lay.field, lay.spec.n));
    return out;
  }

  int matrix_size(std::size_t factor) const {
    std::size_t seen = 0;
    for (const auto& lay : g_.layout()) {
      if (lay.spec.family == Family::abelian) continue;
      if (seen++ == factor) return lay.spec.n;
    }
    throw InvalidInput("no such matrix factor");
  }

  Eigen::Index abelian_size() const {
    Eigen::Index k = 0;
    for (const auto& f : g_.factors())
      if (f.family == Family::abelian) k += f.n;
    return k;
  }

 private:
  const LieAlgebra& g_;
};

void append(std::vector<AlgebraElement>& into, std::vector<AlgebraElement> more) {
  for (auto& x : more) into.push_back(std::move(x));
}

// m-coordinate subspace spanned by elements that must lie in m.
Subspace m_span(const HomogeneousSpaceModel& space, const std::vector<AlgebraElement>& xs) {
  RealMatrix cols(static_cast<Eigen::Index>(space.dim_m()), static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Vector& c = xs[i].coords();
    if (space.project_h(c).norm() > kStructureTol * std::max(1.0, c.norm()))
      throw ConstructionError(space.label() + ": explicit summand has an h-component");
    cols.col(static_cast<Eigen::Index>(i)) = space.project_m(c);
  }
  return column_space(cols);
}

struct Built {
  HomogeneousSpaceModel space;
  std::optional<HomogeneousSpaceModel> parent;
  std::optional<Subspace> k_complement;
  std::vector<std::pair<std::string, Subspace>> blocks;
};

Built build_sphere(SpaceFamily family, int n, const std::string& label) {
  const std::complex<double> ci(0.0, 1.0);
  switch (family) {
    case SpaceFamily::so_sphere: {
      const LieAlgebra g = build_lie_algebra({{Family::so, n + 1}});
      return {make_reductive_decomposition(g, Generators(g).block_subalgebra(0, Family::so, n, 0), label), {}, {}, {}};
    }
    case SpaceFamily::su_sphere: {
      const LieAlgebra g = build_lie_algebra({{Family::su, n + 1}});
      std::vector<AlgebraElement> h;
      if (n >= 2) h = Generators(g).block_subalgebra(0, Family::su, n, 0);
      return {make_reductive_decomposition(g, h, label), {}, {}, {}};
    }
    case SpaceFamily::u_sphere: {
      const LieAlgebra g = build_lie_algebra({{Family::u, n + 1}});
      return {make_reductive_decomposition(g, Generators(g).block_subalgebra(0, Family::u, n, 0), label), {}, {}, {}};
    }
    case SpaceFamily::sp_sphere: {
      const LieAlgebra g = build_lie_algebra({{Family::sp, n + 1}});
      return {make_reductive_decomposition(g, Generators(g).block_subalgebra(0, Family::sp, n, 0), label), {}, {}, {}};
    }
    case SpaceFamily::sp_sp1_sphere: {
      const LieAlgebra g = build_lie_algebra({{Family::sp, n + 1}, {Family::sp, 1}});
      const Generators gen(g);
      auto h = gen.block_subalgebra(0, Family::sp, n, 0);
      // Diagonal sp(1): bottom-right entry of sp(n+1) paired with the external factor.
      for (const auto& q : {Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
        auto blocks = gen.zeros();
        auto& big = std::get<QuaternionMatrix>(blocks[0]);
        big(static_cast<std::size_t>(n), static_cast<std::size_t>(n)) = q;
        std::get<QuaternionMatrix>(blocks[1])(0, 0) = q;
        h.push_back(gen.make(blocks));
      }
      return {make_reductive_decomposition(g, h, label), {}, {}, {}};
    }
    case SpaceFamily::sp_u1_sphere: {
      const LieAlgebra g = build_lie_algebra({{Family::sp, n + 1}, {Family::abelian, 1}});
      const Generators gen(g);
      const auto un = static_cast<std::size_t>(n);
      auto h = gen.block_subalgebra(0, Family::sp, n, 0);
      {
        // (diag(0, a i), a)
        auto blocks = gen.zeros();
        std::get<QuaternionMatrix>(blocks[0])(un, un) = Quaternion::i();
        h.push_back(gen.make(blocks, Vector::Ones(1)));
      }
      Built out{make_reductive_decomposition(g, h, label), {}, {}, {}};

      std::vector<AlgebraElement> m1;
      for (const auto& q : {Quaternion::j(), Quaternion::k()}) {
        auto blocks = gen.zeros();
        std::get<QuaternionMatrix>(blocks[0])(un, un) = q;
        m1.push_back(gen.make(blocks));
      }
      std::vector<AlgebraElement> m2;
      for (std::size_t a = 0; a < un; ++a)
        for (const auto& q : {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
          auto blocks = gen.zeros();
          auto& x = std::get<QuaternionMatrix>(blocks[0]);
          x(a, un) = q;
          x(un, a) = -1.0 * q.conj();
          m2.push_back(gen.make(blocks));
        }
      out.blocks.emplace_back("m1", m_span(out.space, m1));
      out.blocks.emplace_back("m2", m_span(out.space, m2));
      return out;
    }
    default:
      break;
  }
  (void)ci;
  throw InvalidInput("build_sphere_space: not a sphere family");
}

Built build_triple(SpaceFamily family, int n1, int n2, const std::string& label) {
  const std::complex<double> ci(0.0, 1.0);
  std::optional<LieAlgebra> algebra;
  std::vector<AlgebraElement> h;
  std::vector<AlgebraElement> k_extra;

  switch (family) {
    case SpaceFamily::thm2_su_su: {
      const int total = n1 + n2;
      algebra = build_lie_algebra({{Family::su, total}});
      const Generators gen(*algebra);
      if (n1 >= 2) append(h, gen.block_subalgebra(0, Family::su, n1, 0));
      if (n2 >= 2) append(h, gen.block_subalgebra(0, Family::su, n2, n1));
      ComplexMatrix z = ComplexMatrix::Zero(total, total);
      for (int a = 0; a < n1; ++a) z(a, a) = ci * static_cast<double>(n2);
      for (int a = n1; a < total; ++a) z(a, a) = -ci * static_cast<double>(n1);
      k_extra.push_back(gen.make({z}));
      break;
    }
    case SpaceFamily::thm2_sp_su: {
      algebra = build_lie_algebra({{Family::sp, n1}});
      const Generators gen(*algebra);
      for (const auto& b : classical_basis(Family::su, n1))
        h.push_back(gen.make({QuaternionMatrix::from_complex(std::get<ComplexMatrix>(b))}));
      const ComplexMatrix i_id = ci * ComplexMatrix::Identity(n1, n1);
      k_extra.push_back(gen.make({QuaternionMatrix::from_complex(i_id)}));
      break;
    }
    case SpaceFamily::thm2_so_so: {
      algebra = build_lie_algebra({{Family::so, n1 + 2}});
      const Generators gen(*algebra);
      h = gen.block_subalgebra(0, Family::so, n1, 0);
      RealMatrix r = RealMatrix::Zero(n1 + 2, n1 + 2);
      r(n1, n1 + 1) = 1.0;
      r(n1 + 1, n1) = -1.0;
      k_extra.push_back(gen.make({r}));
      break;
    }
    case SpaceFamily::thm2_so_su: {
      algebra = build_lie_algebra({{Family::so, 2 * n1}});
      const Generators gen(*algebra);
      for (const auto& b : classical_basis(Family::su, n1))
        h.push_back(gen.make({real_embedding(b, Field::complex)}));
      const ComplexMatrix i_id = ci * ComplexMatrix::Identity(n1, n1);
      k_extra.push_back(gen.make({real_embedding(i_id, Field::complex)}));
      break;
    }
    default:
      throw InvalidInput("build_symmetric_triple_space: not a triple family");
  }

  Built out{make_reductive_decomposition(*algebra, h, label), {}, {}, {}};
  std::vector<AlgebraElement> k = h;
  append(k, k_extra);
  out.parent = make_reductive_decomposition(*algebra, k, label + " over K");

  RealMatrix extra(static_cast<Eigen::Index>(out.space.dim_m()), static_cast<Eigen::Index>(k_extra.size()));
  for (std::size_t i = 0; i < k_extra.size(); ++i)
    extra.col(static_cast<Eigen::Index>(i)) = out.space.project_m(k_extra[i].coords());
  out.k_complement = column_space(extra);
  return out;
}

}  // namespace

std::string space_name(SpaceFamily f) {
  for (const auto& nf : kFamilies)
    if (nf.family == f) return nf.name;
  return "unknown";
}

SpaceFamily space_family_from_name(const std::string& name) {
  for (const auto& nf : kFamilies)
    if (name == nf.name) return nf.family;
  std::string valid;
  for (const auto& nf : kFamilies) valid += std::string(valid.empty() ? "" : ", ") + nf.name;
  throw InvalidInput("unknown space '" + name + "'; valid names: " + valid);
}

std::vector<std::string> space_names() {
  std::vector<std::string> out;
  for (const auto& nf : kFamilies) out.emplace_back(nf.name);
  return out;
}

bool is_symmetric_triple(SpaceFamily f) {
  return f == SpaceFamily::thm2_su_su || f == SpaceFamily::thm2_sp_su || f == SpaceFamily::thm2_so_so ||
         f == SpaceFamily::thm2_so_su;
}

void validate(const SpaceDescriptor& d) {
  const auto fail = [&](const std::string& why) {
    throw InvalidInput(space_name(d.family) + ": " + why);
  };
  switch (d.family) {
    case SpaceFamily::so_sphere:
      if (d.n < 2) fail("requires n >= 2");
      break;
    case SpaceFamily::su_sphere:
    case SpaceFamily::u_sphere:
    case SpaceFamily::sp_sphere:
    case SpaceFamily::sp_sp1_sphere:
    case SpaceFamily::sp_u1_sphere:
      if (d.n < 1) fail("requires n >= 1");
      break;
    case SpaceFamily::thm2_su_su:
      if (d.n1 < 1 || d.n2 < 1) fail("requires n1, n2 >= 1");
      if (d.n1 == 1 && d.n2 == 1) fail("(n1, n2) = (1, 1) is excluded");
      break;
    case SpaceFamily::thm2_sp_su:
      if (d.n < 2) fail("requires n >= 2");
      break;
    case SpaceFamily::thm2_so_so:
    case SpaceFamily::thm2_so_su:
      if (d.n < 3) fail("requires n >= 3");
      break;
  }
}

std::string quotient_label(const SpaceDescriptor& d) {
  const auto s = [](int v) { return std::to_string(v); };
  switch (d.family) {
    case SpaceFamily::so_sphere:
      return "SO(" + s(d.n + 1) + ")/SO(" + s(d.n) + ")";
    case SpaceFamily::su_sphere:
      return "SU(" + s(d.n + 1) + ")/SU(" + s(d.n) + ")";
    case SpaceFamily::u_sphere:
      return "U(" + s(d.n + 1) + ")/U(" + s(d.n) + ")";
    case SpaceFamily::sp_sphere:
      return "Sp(" + s(d.n + 1) + ")/Sp(" + s(d.n) + ")";
    case SpaceFamily::sp_sp1_sphere:
      return "Sp(" + s(d.n + 1) + ")Sp(1)/Sp(" + s(d.n) + ")Sp(1)";
    case SpaceFamily::sp_u1_sphere:
      return "Sp(" + s(d.n + 1) + ")U(1)/Sp(" + s(d.n) + ")U(1)";
    case SpaceFamily::thm2_su_su:
      return "SU(" + s(d.n1 + d.n2) + ")/SU(" + s(d.n1) + ")SU(" + s(d.n2) + ")";
    case SpaceFamily::thm2_sp_su:
      return "Sp(" + s(d.n) + ")/SU(" + s(d.n) + ")";
    case SpaceFamily::thm2_so_so:
      return "SO(" + s(d.n + 2) + ")/SO(" + s(d.n) + ")";
    case SpaceFamily::thm2_so_su:
      return "SO(" + s(2 * d.n) + ")/SU(" + s(d.n) + ")";
  }
  return "?";
}

std::string to_string(Expected e) {
  switch (e) {
    case Expected::no_fixed_points:
      return "no_fixed_points";
    case Expected::fixed_point_set:
      return "fixed_point_set";
    case Expected::center_of_fixed_point_set:
      return "center_of_fixed_point_set";
    case Expected::empty:
      return "empty";
    case Expected::unknown:
      return "unknown";
  }
  return "unknown";
}

HomogeneousSpaceModel build_sphere_space(SpaceFamily family, int n) {
  const SpaceDescriptor d{family, n, 0, 0};
  validate(d);
  return build_sphere(family, n, quotient_label(d)).space;
}

HomogeneousSpaceModel build_symmetric_triple_space(SpaceFamily family, int n1, int n2) {
  SpaceDescriptor d{family, n1, 0, 0};
  if (family == SpaceFamily::thm2_su_su) d = {family, 0, n1, n2};
  validate(d);
  return build_space(d).space;
}

CatalogEntry build_space(const SpaceDescriptor& d) {
  validate(d);
  const std::string label = quotient_label(d);
  Built built = [&] {
    if (!is_symmetric_triple(d.family)) return build_sphere(d.family, d.n, label);
    if (d.family == SpaceFamily::thm2_su_su) return build_triple(d.family, d.n1, d.n2, label);
    return build_triple(d.family, d.n, 0, label);
  }();

  Expected expected = Expected::unknown;
  switch (d.family) {
    case SpaceFamily::so_sphere:
    case SpaceFamily::sp_sp1_sphere:
      expected = Expected::no_fixed_points;
      break;
    case SpaceFamily::su_sphere:
      // SU(2)/SU(1) has trivial isotropy and lies outside the classified cases.
      expected = d.n >= 2 ? Expected::fixed_point_set : Expected::unknown;
      break;
    case SpaceFamily::u_sphere:
    case SpaceFamily::sp_u1_sphere:
      expected = Expected::fixed_point_set;
      break;
    case SpaceFamily::sp_sphere:
      expected = Expected::empty;
      break;
    case SpaceFamily::thm2_su_su:
    case SpaceFamily::thm2_sp_su:
    case SpaceFamily::thm2_so_so:
    case SpaceFamily::thm2_so_su:
      expected = Expected::center_of_fixed_point_set;
      break;
  }

  CatalogEntry entry{d, std::move(built.space), expected, std::move(built.parent), std::move(built.k_complement),
                     std::move(built.blocks)};

  if (is_symmetric_triple(d.family)) {
    const TripleRelations rel = check_triple_relations(entry);
    if (rel.max_residual() > kStructureTol)
      throw ConstructionError(label + ": bracket relations of the triple fail (residual " +
                              std::to_string(rel.max_residual()) + ")");
    if (rel.m0_vs_k_complement > kSubspaceMatchTol || entry.space.m0().dim() != 1)
      throw ConstructionError(label + ": fixed-point set is not the line k - h");
  }
  return entry;
}

Subspace lift_to_algebra(const HomogeneousSpaceModel& space, const Subspace& m_sub) {
  if (m_sub.ambient_dim() != space.dim_m()) throw InvalidInput("lift_to_algebra: not an m-subspace");
  if (m_sub.is_zero()) return Subspace(space.algebra().dim());
  return Subspace(RealMatrix(space.m().basis() * m_sub.basis()));
}

double inclusion_residual(const LieAlgebra& g, const Subspace& a, const Subspace& b, const Subspace& target) {
  double worst = 0.0;
  const RealMatrix off = RealMatrix::Identity(static_cast<Eigen::Index>(g.dim()), static_cast<Eigen::Index>(g.dim())) -
                         target.projector();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const RealMatrix brackets = g.ad(a.vector(i)) * b.basis();
    if (brackets.cols() > 0) worst = std::max(worst, (off * brackets).colwise().norm().maxCoeff());
  }
  return worst;
}

Subspace joint_centralizer(const LieAlgebra& g, const Subspace& s, const Subspace& within) {
  if (s.is_zero() || within.is_zero()) return within;
  RealMatrix rows(static_cast<Eigen::Index>(s.dim() * g.dim()), static_cast<Eigen::Index>(within.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i)
    rows.middleRows(static_cast<Eigen::Index>(i * g.dim()), static_cast<Eigen::Index>(g.dim())) =
        g.ad(s.vector(i)) * within.basis();
  const Subspace coeffs = nullspace_basis(rows);
  if (coeffs.is_zero()) return Subspace(within.ambient_dim());
  return Subspace(RealMatrix(within.basis() * coeffs.basis()));
}

double TripleRelations::max_residual() const {
  return std::max({h_mprime, m0_mprime, h_m0, h_h, m0_m0});
}

TripleRelations check_triple_relations(const CatalogEntry& entry) {
  if (!entry.parent || !entry.k_complement) throw InvalidInput(entry.space.label() + " is not a symmetric triple");
  const HomogeneousSpaceModel& s = entry.space;
  const LieAlgebra& g = s.algebra();
  const Subspace zero(g.dim());
  const Subspace& h = s.h();
  const Subspace m0 = lift_to_algebra(s, *entry.k_complement);
  const Subspace mprime = lift_to_algebra(s, complement(*entry.k_complement));

  TripleRelations r;
  r.h_mprime = inclusion_residual(g, h, mprime, mprime);
  r.m0_mprime = inclusion_residual(g, m0, mprime, mprime);
  r.h_m0 = inclusion_residual(g, h, m0, zero);
  r.h_h = inclusion_residual(g, h, h, h);
  r.m0_m0 = inclusion_residual(g, m0, m0, m0);
  r.h_kernel_on_mprime = joint_centralizer(g, h, mprime).dim();
  r.m0_kernel_on_mprime = joint_centralizer(g, m0, mprime).dim();
  r.m0_vs_k_complement = subspace_distance(s.m0(), *entry.k_complement);
  r.parent_isotropy_irreducible = isotropy_irreducibility_test(*entry.parent);
  return r;
}

double SpU1Relations::max_residual() const { return std::max({m0_m0, m0_m1, m0_m2}); }

SpU1Relations check_sp_u1_relations(const CatalogEntry& entry) {
  if (entry.descriptor.family != SpaceFamily::sp_u1_sphere || entry.blocks.size() != 2)
    throw InvalidInput("check_sp_u1_relations: entry is not an sp-u1-sphere");
  const HomogeneousSpaceModel& s = entry.space;
  const LieAlgebra& g = s.algebra();
  const Subspace zero(g.dim());
  const Subspace m0 = lift_to_algebra(s, s.m0());
  const Subspace m1 = lift_to_algebra(s, entry.blocks[0].second);
  const Subspace m2 = lift_to_algebra(s, entry.blocks[1].second);

  SpU1Relations r;
  r.m0_m0 = inclusion_residual(g, m0, m0, zero);
  r.m0_m1 = inclusion_residual(g, m0, m1, m1);
  r.m0_m2 = inclusion_residual(g, m0, m2, m2);
  RealMatrix both(static_cast<Eigen::Index>(g.dim()), static_cast<Eigen::Index>(m1.dim() + m2.dim()));
  both << m1.basis(), m2.basis();
  const Subspace m12 = column_space(both);
  r.kernel_dim = 0;
  for (std::size_t i = 0; i < m0.dim(); ++i) {
    const Subspace u(RealMatrix(m0.basis().col(static_cast<Eigen::Index>(i))));
    r.kernel_dim = std::max(r.kernel_dim, joint_centralizer(g, u, m12).dim());
  }
  r.block_dim_total = s.m0().dim() + entry.blocks[0].second.dim() + entry.blocks[1].second.dim();
  return r;
}

}  // namespace equigeo

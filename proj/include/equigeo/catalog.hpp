#pragma once

#include "equigeo/homogeneous_space.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace equigeo {

/// Projection residual allowed between a computed and a predicted subspace.
inline constexpr double kSubspaceMatchTol = 1e-9;

enum class SpaceFamily {
  so_sphere,      // SO(n+1)/SO(n)
  su_sphere,      // SU(n+1)/SU(n)
  u_sphere,       // U(n+1)/U(n)
  sp_sphere,      // Sp(n+1)/Sp(n)
  sp_sp1_sphere,  // Sp(n+1)Sp(1)/Sp(n)Sp(1)
  sp_u1_sphere,   // Sp(n+1)U(1)/Sp(n)U(1)
  thm2_su_su,     // SU(n1+n2)/SU(n1)SU(n2), K = S(U(n1)U(n2))
  thm2_sp_su,     // Sp(n)/SU(n), K = U(n)
  thm2_so_so,     // SO(n+2)/SO(n), K = SO(n)SO(2)
  thm2_so_su,     // SO(2n)/SU(n), K = U(n)
};

/// Kebab-case CLI name, e.g. "sp-u1-sphere".
std::string space_name(SpaceFamily f);
/// Throws InvalidInput listing the valid names.
SpaceFamily space_family_from_name(const std::string& name);
std::vector<std::string> space_names();
bool is_symmetric_triple(SpaceFamily f);

struct SpaceDescriptor {
  SpaceFamily family = SpaceFamily::so_sphere;
  int n = 0;   // sphere families and single-parameter triples
  int n1 = 0;  // thm2_su_su only
  int n2 = 0;

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

/// Throws InvalidInput when parameters are out of range for the family.
void validate(const SpaceDescriptor& d);
/// Group-quotient label such as "Sp(2)U(1)/Sp(1)U(1)".
std::string quotient_label(const SpaceDescriptor& d);

/// Known answer for the set of Randers equigeodesic vectors in m.
enum class Expected {
  no_fixed_points,            // m0 = 0, no invariant non-Riemannian Randers metric
  fixed_point_set,            // m0 \ {0}
  center_of_fixed_point_set,  // c(m0) \ {0}
  empty,                      // no Randers equigeodesic vectors
  unknown,                    // parameters outside the classified cases
};

std::string to_string(Expected e);

struct CatalogEntry {
  SpaceDescriptor descriptor;
  HomogeneousSpaceModel space;
  Expected expected = Expected::unknown;
  /// G/K for the symmetric-triple families.
  std::optional<HomogeneousSpaceModel> parent;
  /// Orthogonal complement of h in k, in m-coordinates (triple families).
  std::optional<Subspace> k_complement;
  /// Explicitly constructed isotropy summands of m' (sp-u1-sphere: "m1", "m2").
  std::vector<std::pair<std::string, Subspace>> blocks;
};

CatalogEntry build_space(const SpaceDescriptor& d);

/// Sphere families, built from top-left block embeddings.
HomogeneousSpaceModel build_sphere_space(SpaceFamily family, int n);
/// Triple families; n2 is used by thm2_su_su only.
HomogeneousSpaceModel build_symmetric_triple_space(SpaceFamily family, int n1, int n2 = 0);

/// Lifts an m-coordinate subspace to algebra coordinates.
Subspace lift_to_algebra(const HomogeneousSpaceModel& space, const Subspace& m_sub);

/// max over basis pairs (a, b) of |[a, b] - proj_target [a, b]| (algebra coordinates).
double inclusion_residual(const LieAlgebra& g, const Subspace& a, const Subspace& b, const Subspace& target);

/// {w in within : [w, s] = 0 for all s in S} (algebra coordinates).
Subspace joint_centralizer(const LieAlgebra& g, const Subspace& s, const Subspace& within);

/// Bracket relations of a symmetric triple H < K < G with m0 = k - h, m' = g - k.
struct TripleRelations {
  double h_mprime = 0.0;   // [h, m'] in m'
  double m0_mprime = 0.0;  // [m0, m'] in m'
  double h_m0 = 0.0;       // [h, m0] = 0
  double h_h = 0.0;        // [h, h] in h
  double m0_m0 = 0.0;      // [m0, m0] in m0
  std::size_t h_kernel_on_mprime = 0;   // dim {v in m' : [v, h] = 0}
  std::size_t m0_kernel_on_mprime = 0;  // dim {v in m' : [v, m0] = 0}
  double m0_vs_k_complement = 0.0;      // distance between computed m0 and k - h
  bool parent_isotropy_irreducible = false;

  double max_residual() const;
};

TripleRelations check_triple_relations(const CatalogEntry& entry);

/// Relations for Sp(n+1)U(1)/Sp(n)U(1) with m = m0 + m1 + m2.
struct SpU1Relations {
  double m0_m0 = 0.0;  // [m0, m0] = 0
  double m0_m1 = 0.0;  // [m0, m1] in m1
  double m0_m2 = 0.0;  // [m0, m2] in m2
  std::size_t kernel_dim = 0;  // dim {v in m1 + m2 : [u, v] = 0} for the m0 generator u
  std::size_t block_dim_total = 0;  // dim m0 + dim m1 + dim m2

  double max_residual() const;
};

SpU1Relations check_sp_u1_relations(const CatalogEntry& entry);

}  // namespace equigeo

#pragma once

#include "equigeo/geodesic_criteria.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equigeo {

enum class SetKind { empty, linear_subspace, undetermined };

std::string to_string(SetKind k);
SetKind set_kind_from_string(const std::string& s);

/// How a classification was certified.
struct Certification {
  std::size_t constraint_dim = 0;     // dim L = {X : [X, m0] in h}
  std::size_t shrink_rounds = 0;
  bool quadratic_vanishing = false;   // all B_i vanish on the returned subspace
  std::size_t verified_members = 0;   // vectors passing randers_equigeodesic_test
  std::string emptiness;              // "", "zero_constraint" or "definite_form"
};

/// The set of Randers equigeodesic vectors in m. For linear_subspace the set
/// is `subspace` minus the origin; subspaces are in m-coordinates.
struct EquigeodesicSet {
  SetKind kind = SetKind::empty;
  Subspace subspace{0};
  Certification certification;
  std::vector<Vector> members;      // witnesses when undetermined
  std::vector<Vector> non_members;
};

/// L = {X in m : proj_m [X, v] = 0 for all v in m0}.
Subspace commuting_constraint_subspace(const HomogeneousSpaceModel& space);

/// True iff B_i(X, Y) = proj_m([Lambda_i X, Y] + [Lambda_i Y, X]) vanishes on
/// all pairs of basis vectors of L, i.e. every element of L is a Riemannian
/// equigeodesic vector.
bool certify_quadratic_vanishing(const HomogeneousSpaceModel& space, const Subspace& l,
                                 double tol = kCriterionTol);

struct ClassifyOptions {
  double tol = kCriterionTol;
  std::uint64_t seed = 0;
  std::size_t random_checks = 20;
};

EquigeodesicSet classify_equigeodesic_set(const HomogeneousSpaceModel& space, const ClassifyOptions& options = {});

/// {X in `within` : [X, s] = 0 for all s in S}, full bracket in g.
Subspace centralizer_in(const HomogeneousSpaceModel& space, const Subspace& s, const Subspace& within);

}  // namespace equigeo

#include "equigeo/classifier.hpp"

#include "equigeo/errors.hpp"

#include <algorithm>

namespace equigeo {

namespace {

constexpr std::size_t kRandomSeedsPerRound = 8;
constexpr std::size_t kRandomFormCombinations = 64;

RealMatrix stack_rows(const std::vector<RealMatrix>& blocks, Eigen::Index cols) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  RealMatrix out(rows, cols);
  Eigen::Index r = 0;
  for (const auto& b : blocks) {
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

// Matrix of Y -> B_i(x, Y) = proj_m([Lambda_i x, Y] + [Lambda_i Y, x]) on m-coordinates.
RealMatrix polarised_map(const HomogeneousSpaceModel& space, const RealMatrix& lambda, const Vector& x) {
  return space.ad_m(space.embed(lambda * x)) - space.ad_m(space.embed(x)) * lambda;
}

Subspace subspace_of(const RealMatrix& ambient_basis, const Subspace& coeffs) {
  RealMatrix b = ambient_basis * coeffs.basis();
  canonicalize_signs(b);
  return Subspace(std::move(b));
}

// Looks for a component of some B_i (or a random combination of them) that is
// a definite quadratic form on L; then [Lambda X, X]_m = 0 forces X = 0 in L.
bool definite_form_certificate(const HomogeneousSpaceModel& space, const Subspace& l, Rng& rng) {
  const auto k = static_cast<Eigen::Index>(l.dim());
  const auto dm = static_cast<Eigen::Index>(space.dim_m());
  std::vector<RealMatrix> forms;
  for (const auto& lambda : space.commutant()) {
    // values[a] holds B_i(l_a, l_b) for all b as columns.
    std::vector<RealMatrix> values;
    for (Eigen::Index a = 0; a < k; ++a)
      values.push_back(polarised_map(space, lambda, l.basis().col(a)) * l.basis());
    for (Eigen::Index c = 0; c < dm; ++c) {
      RealMatrix s(k, k);
      for (Eigen::Index a = 0; a < k; ++a) s.row(a) = values[static_cast<std::size_t>(a)].row(c);
      forms.push_back(0.5 * (s + s.transpose()));
    }
  }
  const auto definite = [](const RealMatrix& s) {
    const double scale = s.cwiseAbs().maxCoeff();
    if (scale == 0.0) return false;
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(s, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    const double margin = 1e-6 * scale;
    return ev.minCoeff() > margin || ev.maxCoeff() < -margin;
  };
  for (const auto& s : forms)
    if (definite(s)) return true;
  for (std::size_t t = 0; t < kRandomFormCombinations && !forms.empty(); ++t) {
    RealMatrix combo = RealMatrix::Zero(k, k);
    for (const auto& s : forms) combo += rng.normal() * s;
    if (definite(combo)) return true;
  }
  return false;
}

}  // namespace

std::string to_string(SetKind k) {
  switch (k) {
    case SetKind::empty:
      return "empty";
    case SetKind::linear_subspace:
      return "linear_subspace";
    case SetKind::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

SetKind set_kind_from_string(const std::string& s) {
  if (s == "empty") return SetKind::empty;
  if (s == "linear_subspace") return SetKind::linear_subspace;
  if (s == "undetermined") return SetKind::undetermined;
  throw InvalidInput("unknown set kind '" + s + "'");
}

Subspace commuting_constraint_subspace(const HomogeneousSpaceModel& space) {
  if (space.m0().is_zero()) throw InvalidInput(kNoRandersMessage);
  std::vector<RealMatrix> rows;
  for (std::size_t i = 0; i < space.m0().dim(); ++i)
    rows.push_back(space.ad_m(space.embed(space.m0().vector(i))));
  return nullspace_basis(stack_rows(rows, static_cast<Eigen::Index>(space.dim_m())));
}

bool certify_quadratic_vanishing(const HomogeneousSpaceModel& space, const Subspace& l, double tol) {
  if (l.ambient_dim() != space.dim_m()) throw InvalidInput("certify_quadratic_vanishing: L is not in m");
  for (const auto& lambda : space.commutant())
    for (std::size_t a = 0; a < l.dim(); ++a) {
      const RealMatrix values = polarised_map(space, lambda, l.vector(a)) * l.basis();
      if (values.colwise().norm().maxCoeff() > tol) return false;
    }
  return true;
}

Subspace centralizer_in(const HomogeneousSpaceModel& space, const Subspace& s, const Subspace& within) {
  if (s.ambient_dim() != space.dim_m() || within.ambient_dim() != space.dim_m())
    throw InvalidInput("centralizer_in: subspaces must be given in m-coordinates");
  if (s.is_zero() || within.is_zero()) return within;
  const RealMatrix lifted = space.m().basis() * within.basis();
  std::vector<RealMatrix> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(space.algebra().ad(space.embed(s.vector(i))) * lifted);
  const Subspace coeffs = nullspace_basis(stack_rows(rows, lifted.cols()));
  return subspace_of(within.basis(), coeffs);
}

EquigeodesicSet classify_equigeodesic_set(const HomogeneousSpaceModel& space, const ClassifyOptions& options) {
  EquigeodesicSet out;
  const Subspace l = commuting_constraint_subspace(space);
  out.certification.constraint_dim = l.dim();
  out.subspace = Subspace(space.dim_m());

  if (l.is_zero()) {
    out.kind = SetKind::empty;
    out.certification.emptiness = "zero_constraint";
    return out;
  }

  Rng rng(options.seed);
  Subspace current = l;
  bool any_member = false;
  bool certified = false;
  const std::size_t max_rounds = l.dim();

  for (std::size_t round = 0; round <= max_rounds; ++round) {
    if (certify_quadratic_vanishing(space, current, options.tol)) {
      certified = true;
      break;
    }
    if (round == max_rounds) break;

    std::vector<Vector> seeds;
    const Subspace core = intersection(space.m0(), current);
    for (std::size_t i = 0; i < core.dim(); ++i) seeds.push_back(core.vector(i));
    for (std::size_t t = 0; t < kRandomSeedsPerRound; ++t)
      seeds.push_back(current.basis() * rng.normal_vector(static_cast<Eigen::Index>(current.dim())));

    std::vector<RealMatrix> constraints;
    for (const auto& x : seeds) {
      if (x.norm() == 0.0) continue;
      if (!riemannian_equigeodesic_test(space, x, options.tol).verdict) {
        out.non_members.push_back(x / x.norm());
        continue;
      }
      any_member = true;
      out.members.push_back(x / x.norm());
      for (const auto& lambda : space.commutant())
        constraints.push_back(polarised_map(space, lambda, x / x.norm()) * current.basis());
    }
    if (constraints.empty()) break;

    const Subspace coeffs = nullspace_basis(stack_rows(constraints, static_cast<Eigen::Index>(current.dim())));
    ++out.certification.shrink_rounds;
    if (coeffs.dim() == current.dim()) break;
    current = subspace_of(current.basis(), coeffs);
  }

  if (certified) {
    // Every element of `current` is Riemannian-equigeodesic and lies in L.
    std::size_t verified = 0;
    bool all_pass = true;
    const auto check = [&](const Vector& x) {
      const auto r = randers_equigeodesic_test(space, x, options.tol);
      if (r.verdict) {
        ++verified;
      } else {
        all_pass = false;
        out.non_members.push_back(x / x.norm());
      }
    };
    for (std::size_t i = 0; i < current.dim(); ++i) check(current.vector(i));
    for (std::size_t t = 0; t < options.random_checks; ++t) {
      const Vector x = current.basis() * rng.normal_vector(static_cast<Eigen::Index>(current.dim()));
      if (x.norm() > 0.0) check(x);
    }
    out.certification.quadratic_vanishing = true;
    out.certification.verified_members = verified;
    if (all_pass) {
      out.kind = SetKind::linear_subspace;
      out.subspace = current;
      out.members.clear();
      out.non_members.clear();
      return out;
    }
    out.kind = SetKind::undetermined;
    return out;
  }

  if (!any_member && definite_form_certificate(space, l, rng)) {
    out.kind = SetKind::empty;
    out.certification.emptiness = "definite_form";
    out.non_members.clear();
    return out;
  }
  out.kind = SetKind::undetermined;
  return out;
}

}  // namespace equigeo

#include "equigeo/geodesic_criteria.hpp"

#include "equigeo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace equigeo {

namespace {

// Relative size below which a component counts as absent (X in h, X_h = 0, u in m0).
constexpr double kMembershipTol = 1e-10;
constexpr int kConvexityGrid = 101;

void require_same_algebra(const HomogeneousSpaceModel& space, const AlgebraElement& x) {
  if (x.algebra_id() != space.algebra().id() || x.size() != space.algebra().dim())
    throw InvalidInput("vector does not belong to the space's Lie algebra");
}

void require_metric_size(const HomogeneousSpaceModel& space, const MetricOperator& metric) {
  if (metric.dim() != space.dim_m()) throw InvalidInput("metric operator has wrong dimension");
}

// X normalised to unit alpha-norm of X_m; rejects X in h.
struct Normalised {
  Vector x;    // g-coordinates
  Vector x_m;  // m-coordinates
};

Normalised normalise_outside_h(const HomogeneousSpaceModel& space, const MetricOperator& metric,
                               const AlgebraElement& x) {
  require_same_algebra(space, x);
  require_metric_size(space, metric);
  const Vector x_m = space.project_m(x.coords());
  const double full = x.coords().norm();
  if (full == 0.0 || x_m.norm() <= kMembershipTol * full)
    throw InvalidInput("X lies in h; geodesic vectors must satisfy X not in h");
  const double scale = 1.0 / std::sqrt(metric.alpha(x_m, x_m));
  return {x.coords() * scale, x_m * scale};
}

// max_j |alpha([X, Z_j]_m, target)| over the m-basis.
CriterionReport pairing_residual(const HomogeneousSpaceModel& space, const MetricOperator& metric,
                                 const Vector& x_g, const Vector& target, double tol) {
  const Vector values = space.ad_m(x_g).transpose() * (metric.matrix() * target);
  CriterionReport report;
  if (values.size() == 0) {
    report.verdict = true;
    return report;
  }
  Eigen::Index worst = 0;
  report.residual = values.cwiseAbs().maxCoeff(&worst);
  report.verdict = report.residual <= tol;
  report.witnesses.push_back(static_cast<std::size_t>(worst));
  return report;
}

void require_u_in_m0(const HomogeneousSpaceModel& space, const Vector& u) {
  if (static_cast<std::size_t>(u.size()) != space.dim_m())
    throw InvalidInput("u must have dim(m) = " + std::to_string(space.dim_m()) + " coordinates");
  const double off = (u - orthogonal_projection(u, space.m0())).norm();
  if (off > kMembershipTol * std::max(1.0, u.norm())) throw InvalidInput("u does not lie in m0");
}

Vector m_coords_in_m(const HomogeneousSpaceModel& space, const AlgebraElement& x) {
  require_same_algebra(space, x);
  const double full = x.coords().norm();
  if (space.project_h(x.coords()).norm() > kMembershipTol * full)
    throw InvalidInput("equigeodesic tests take X in m; X has an h-component");
  return space.project_m(x.coords());
}

// Keeps the larger of two (residual, witness) candidates.
void absorb(CriterionReport& into, const Vector& v) {
  if (v.size() == 0) return;
  const double r = v.norm();
  if (r > into.residual || into.witnesses.empty()) {
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    into.residual = std::max(into.residual, r);
    into.witnesses = {static_cast<std::size_t>(k)};
  }
}

}  // namespace

std::string to_string(PhiPreset p) {
  switch (p) {
    case PhiPreset::randers:
      return "randers";
    case PhiPreset::quadratic:
      return "quadratic";
    case PhiPreset::inverse:
      return "inverse";
  }
  return "unknown";
}

double phi(PhiPreset p, double s) {
  switch (p) {
    case PhiPreset::randers:
      return 1.0 + s;
    case PhiPreset::quadratic:
      return (1.0 + s) * (1.0 + s);
    case PhiPreset::inverse:
      return 1.0 / (1.0 - s);
  }
  return 0.0;
}

double phi_prime(PhiPreset p, double s) {
  switch (p) {
    case PhiPreset::randers:
      return 1.0;
    case PhiPreset::quadratic:
      return 2.0 * (1.0 + s);
    case PhiPreset::inverse:
      return 1.0 / ((1.0 - s) * (1.0 - s));
  }
  return 0.0;
}

double phi_second(PhiPreset p, double s) {
  switch (p) {
    case PhiPreset::randers:
      return 0.0;
    case PhiPreset::quadratic:
      return 2.0;
    case PhiPreset::inverse:
      return 2.0 / ((1.0 - s) * (1.0 - s) * (1.0 - s));
  }
  return 0.0;
}

MinkowskiNormSpec MinkowskiNormSpec::make(const HomogeneousSpaceModel& space, MetricOperator metric, Vector u,
                                          PhiPreset preset) {
  require_metric_size(space, metric);
  require_u_in_m0(space, u);
  const double b = std::sqrt(metric.alpha(u, u));
  if (preset == PhiPreset::randers && !(b < 1.0))
    throw InvalidInput("Randers norm requires alpha(u,u) < 1 (got b = " + std::to_string(b) + ")");
  if (preset == PhiPreset::inverse && !(b < 1.0))
    throw InvalidInput("inverse preset requires b < 1 (got b = " + std::to_string(b) + ")");
  for (int i = 0; i < kConvexityGrid; ++i) {
    const double s = b == 0.0 ? 0.0 : -b + 2.0 * b * i / (kConvexityGrid - 1);
    const double value = phi(preset, s) - s * phi_prime(preset, s) + (b * b - s * s) * phi_second(preset, s);
    if (!(phi(preset, s) > 0.0) || !(value > 0.0))
      throw InvalidInput(to_string(preset) + " norm is not a Minkowski norm at s = " + std::to_string(s));
  }
  return MinkowskiNormSpec(std::move(metric), std::move(u), preset, b);
}

CriterionReport riemannian_geodesic_residual(const HomogeneousSpaceModel& space, const MetricOperator& metric,
                                             const AlgebraElement& x, double tol) {
  const auto n = normalise_outside_h(space, metric, x);
  return pairing_residual(space, metric, n.x, n.x_m, tol);
}

CriterionReport alpha_beta_geodesic_residual(const HomogeneousSpaceModel& space, const MinkowskiNormSpec& norm,
                                             const AlgebraElement& x, double tol) {
  const MetricOperator& metric = norm.metric();
  const auto n = normalise_outside_h(space, metric, x);
  const double length = std::sqrt(metric.alpha(n.x_m, n.x_m));
  const double s = metric.alpha(n.x_m, norm.u()) / length;
  if (std::abs(s) > norm.b() * (1.0 + 1e-12))
    throw InvalidInput("|s| exceeds b; outside the domain of phi");
  const PhiPreset p = norm.preset();
  const Vector target =
      (phi(p, s) - s * phi_prime(p, s)) * n.x_m + phi_prime(p, s) * length * norm.u();
  return pairing_residual(space, metric, n.x, target, tol);
}

CriterionReport randers_geodesic_residual(const HomogeneousSpaceModel& space, const MetricOperator& metric,
                                          const Vector& u, const AlgebraElement& x, double tol) {
  require_metric_size(space, metric);
  require_u_in_m0(space, u);
  if (!(metric.alpha(u, u) < 1.0)) throw InvalidInput("Randers norm requires alpha(u,u) < 1");
  const auto n = normalise_outside_h(space, metric, x);
  const Vector target = n.x_m + std::sqrt(metric.alpha(n.x_m, n.x_m)) * u;
  return pairing_residual(space, metric, n.x, target, tol);
}

CriterionReport riemannian_equigeodesic_test(const HomogeneousSpaceModel& space, const Vector& x_m, double tol) {
  if (static_cast<std::size_t>(x_m.size()) != space.dim_m())
    throw InvalidInput("X must have dim(m) = " + std::to_string(space.dim_m()) + " coordinates");
  const double len = x_m.norm();
  if (len == 0.0) throw InvalidInput("X = 0 is not a candidate equigeodesic vector");
  const Vector x = x_m / len;
  CriterionReport report;
  for (const auto& lambda : space.commutant()) absorb(report, space.bracket_m(lambda * x, x));
  report.verdict = report.residual <= tol;
  return report;
}

CriterionReport riemannian_equigeodesic_test(const HomogeneousSpaceModel& space, const AlgebraElement& x,
                                             double tol) {
  return riemannian_equigeodesic_test(space, m_coords_in_m(space, x), tol);
}

CriterionReport randers_equigeodesic_test(const HomogeneousSpaceModel& space, const Vector& x_m, double tol) {
  if (space.m0().is_zero()) throw InvalidInput(kNoRandersMessage);
  CriterionReport report = riemannian_equigeodesic_test(space, x_m, tol);
  const Vector x = x_m / x_m.norm();
  for (std::size_t i = 0; i < space.m0().dim(); ++i) absorb(report, space.bracket_m(x, space.m0().vector(i)));
  report.verdict = report.residual <= tol;
  return report;
}

CriterionReport randers_equigeodesic_test(const HomogeneousSpaceModel& space, const AlgebraElement& x,
                                          double tol) {
  return randers_equigeodesic_test(space, m_coords_in_m(space, x), tol);
}

Vector sample_m0_ball(const HomogeneousSpaceModel& space, const MetricOperator& metric, double radius, Rng& rng) {
  const RealMatrix& basis = space.m0().basis();
  const auto k = basis.cols();
  if (k == 0) throw InvalidInput(kNoRandersMessage);
  const RealMatrix restricted = basis.transpose() * metric.matrix() * basis;
  const Eigen::LLT<RealMatrix> chol(restricted);

  Vector dir = rng.normal_vector(k);
  while (dir.norm() == 0.0) dir = rng.normal_vector(k);
  const double r = std::pow(rng.uniform(), 1.0 / static_cast<double>(k));
  const Vector w = (radius * r / dir.norm()) * dir;
  // alpha(u0, u0) = |L^T u0|^2 = |w|^2.
  const Vector u0 = chol.matrixU().solve(w);
  return basis * u0;
}

OracleReport sampled_metric_oracle(const HomogeneousSpaceModel& space, const AlgebraElement& x,
                                   std::size_t n_samples, std::uint64_t seed, double tol) {
  if (space.m0().is_zero()) throw InvalidInput(kNoRandersMessage);
  if (n_samples == 0) throw InvalidInput("sampled_metric_oracle: n_samples must be at least 1");
  Rng rng(seed);
  OracleReport out;
  out.samples = n_samples;
  out.max_residual = -1.0;
  for (std::size_t k = 0; k < n_samples; ++k) {
    MetricOperator metric = sample_invariant_metric(space, rng);
    Vector u = sample_m0_ball(space, metric, kOracleRadius, rng);
    const CriterionReport r = randers_geodesic_residual(space, metric, u, x, tol);
    if (r.residual > out.max_residual) {
      out.max_residual = r.residual;
      out.worst_sample = k;
      out.worst_metric = metric.matrix();
      out.worst_u = std::move(u);
    }
  }
  out.verdict = out.max_residual <= tol;
  return out;
}

OracleReport sampled_metric_oracle(const HomogeneousSpaceModel& space, const Vector& x_m, std::size_t n_samples,
                                   std::uint64_t seed, double tol) {
  if (static_cast<std::size_t>(x_m.size()) != space.dim_m())
    throw InvalidInput("X must have dim(m) = " + std::to_string(space.dim_m()) + " coordinates");
  return sampled_metric_oracle(space, space.element_from_m(x_m), n_samples, seed, tol);
}

}  // namespace equigeo

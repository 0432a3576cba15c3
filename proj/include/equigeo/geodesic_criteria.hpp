#pragma once

#include "equigeo/homogeneous_space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equigeo {

/// Verdict threshold on residuals of unit-normalised vectors.
inline constexpr double kCriterionTol = 1e-8;
/// Radius (in alpha-norm) of the ball the sampling oracle draws u from.
inline constexpr double kOracleRadius = 0.9;

/// phi presets for F = sqrt(alpha) * phi(beta / sqrt(alpha)).
enum class PhiPreset { randers, quadratic, inverse };

std::string to_string(PhiPreset p);
double phi(PhiPreset p, double s);
double phi_prime(PhiPreset p, double s);
double phi_second(PhiPreset p, double s);

/// Invariant (alpha, beta) norm datum. u is stored in m-coordinates and must
/// lie in m0.
class MinkowskiNormSpec {
 public:
  /// Validates u in m0, the randers bound b < 1 and the convexity inequality
  /// phi(s) - s phi'(s) + (b^2 - s^2) phi''(s) > 0 on 101 points of [-b, b].
  static MinkowskiNormSpec make(const HomogeneousSpaceModel& space, MetricOperator metric, Vector u,
                                PhiPreset preset);

  const MetricOperator& metric() const { return metric_; }
  const Vector& u() const { return u_; }
  PhiPreset preset() const { return preset_; }
  /// alpha(u, u)^{1/2}.
  double b() const { return b_; }

 private:
  MinkowskiNormSpec(MetricOperator metric, Vector u, PhiPreset preset, double b)
      : metric_(std::move(metric)), u_(std::move(u)), preset_(preset), b_(b) {}

  MetricOperator metric_;
  Vector u_;
  PhiPreset preset_;
  double b_;
};

/// Outcome of one criterion evaluation.
///
/// `witnesses` holds the m-basis indices at which the maximum is attained.
struct CriterionReport {
  double residual = 0.0;
  bool verdict = false;
  std::vector<std::size_t> witnesses;
};

/// max_Z |alpha([X, Z]_m, X_m)| over the m-basis, X alpha-normalised.
CriterionReport riemannian_geodesic_residual(const HomogeneousSpaceModel& space, const MetricOperator& metric,
                                             const AlgebraElement& x, double tol = kCriterionTol);

/// Geodesic-vector criterion for an (alpha, beta) norm.
CriterionReport alpha_beta_geodesic_residual(const HomogeneousSpaceModel& space, const MinkowskiNormSpec& norm,
                                             const AlgebraElement& x, double tol = kCriterionTol);

/// Simplified criterion for the Randers norm sqrt(alpha(y,y)) + alpha(y,u).
CriterionReport randers_geodesic_residual(const HomogeneousSpaceModel& space, const MetricOperator& metric,
                                          const Vector& u, const AlgebraElement& x, double tol = kCriterionTol);

/// [Lambda_i X, X]_m = 0 for every commutant basis element, X in m.
CriterionReport riemannian_equigeodesic_test(const HomogeneousSpaceModel& space, const AlgebraElement& x,
                                             double tol = kCriterionTol);
CriterionReport riemannian_equigeodesic_test(const HomogeneousSpaceModel& space, const Vector& x_m,
                                             double tol = kCriterionTol);

/// Riemannian equigeodesic and [X, m0] in h. Throws InvalidInput when m0 = 0.
CriterionReport randers_equigeodesic_test(const HomogeneousSpaceModel& space, const AlgebraElement& x,
                                          double tol = kCriterionTol);
CriterionReport randers_equigeodesic_test(const HomogeneousSpaceModel& space, const Vector& x_m,
                                          double tol = kCriterionTol);

/// Worst Randers residual over randomly drawn invariant Randers metrics.
struct OracleReport {
  double max_residual = 0.0;
  std::size_t samples = 0;
  std::size_t worst_sample = 0;
  RealMatrix worst_metric;
  Vector worst_u;
  bool verdict = false;  // max_residual <= tol
};

OracleReport sampled_metric_oracle(const HomogeneousSpaceModel& space, const AlgebraElement& x,
                                   std::size_t n_samples, std::uint64_t seed, double tol = kCriterionTol);
OracleReport sampled_metric_oracle(const HomogeneousSpaceModel& space, const Vector& x_m,
                                   std::size_t n_samples, std::uint64_t seed, double tol = kCriterionTol);

/// u uniform in {alpha(u,u)^{1/2} <= radius} intersected with m0 (m-coordinates).
Vector sample_m0_ball(const HomogeneousSpaceModel& space, const MetricOperator& metric, double radius, Rng& rng);

/// The message used whenever a space has no fixed-point set.
inline constexpr const char* kNoRandersMessage =
    "m0 = 0: no invariant non-Riemannian Randers metrics exist on this space";

}  // namespace equigeo

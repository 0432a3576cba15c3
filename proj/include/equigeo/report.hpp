#pragma once

#include "equigeo/catalog.hpp"
#include "equigeo/classifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace equigeo {

struct SpaceDims {
  std::size_t g = 0, h = 0, m = 0, m0 = 0, mprime = 0;
  friend bool operator==(const SpaceDims&, const SpaceDims&) = default;
};

struct ClassificationSummary {
  std::string kind;
  /// Orthonormal basis of the set, one row per vector, in m-coordinates.
  std::vector<std::vector<double>> basis;
  std::size_t constraint_dim = 0;
  std::size_t shrink_rounds = 0;
  bool quadratic_vanishing = false;
  std::size_t verified_members = 0;
  std::string emptiness;
  friend bool operator==(const ClassificationSummary&, const ClassificationSummary&) = default;
};

/// Known answer vs. computed answer for the space.
struct PredictionCheck {
  std::string expectation;  // to_string(Expected)
  std::string predicted_kind;
  std::size_t predicted_dim = 0;
  std::string computed_kind;
  std::size_t computed_dim = 0;
  bool match = false;
  /// Projection distance between subspaces; absent when dimensions differ.
  std::optional<double> residual;
  friend bool operator==(const PredictionCheck&, const PredictionCheck&) = default;
};

struct Tolerances {
  double criterion = kCriterionTol;
  double rank = kRankTol;
  double structure = kStructureTol;
  double subspace_match = kSubspaceMatchTol;
  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct AnalysisReport {
  std::string space;  // CLI name
  std::string label;  // quotient label
  int n = 0, n1 = 0, n2 = 0;
  SpaceDims dims;
  std::size_t commutant_dim = 0;
  bool isotropy_irreducible = false;
  std::optional<ClassificationSummary> classification;  // absent when m0 = 0
  std::optional<PredictionCheck> theorem_check;            // absent without a known answer
  Tolerances tolerances;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  double tol = kCriterionTol;
  std::uint64_t seed = 0;
};

AnalysisReport analyze_space(const CatalogEntry& entry, const AnalyzeOptions& options = {});
AnalysisReport analyze_space(const SpaceDescriptor& d, const AnalyzeOptions& options = {});

/// Subspace the known answer predicts (m-coordinates); empty optional when
/// there is no prediction or m0 = 0.
std::optional<Subspace> predicted_subspace(const CatalogEntry& entry);

/// Pretty-printed JSON, deterministic for equal reports.
std::string report_to_json(const AnalysisReport& r);
/// Throws InvalidInput on malformed documents.
AnalysisReport report_from_json(const std::string& text);

/// Short human-readable summary.
std::string report_summary(const AnalysisReport& r);

}  // namespace equigeo

#include "equigeo/report.hpp"

#include "equigeo/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace equigeo {

namespace {

using nlohmann::json;

constexpr const char* kConnectedNote =
    "isotropy invariance is checked through ad(h); results apply to connected H";
constexpr const char* kCenterNote = "c(m0) is taken as the center of the Lie algebra m0";
constexpr const char* kTrivialIsotropyNote = "outside the classified cases: H is trivial, no known answer is asserted";

std::string kind_for(Expected e) {
  switch (e) {
    case Expected::fixed_point_set:
    case Expected::center_of_fixed_point_set:
      return to_string(SetKind::linear_subspace);
    case Expected::empty:
      return to_string(SetKind::empty);
    case Expected::no_fixed_points:
      return "no_fixed_points";
    case Expected::unknown:
      break;
  }
  return "";
}

json summary_to_json(const ClassificationSummary& c) {
  return json{{"kind", c.kind},
              {"basis", c.basis},
              {"certification",
               {{"constraint_dim", c.constraint_dim},
                {"shrink_rounds", c.shrink_rounds},
                {"quadratic_vanishing", c.quadratic_vanishing},
                {"verified_members", c.verified_members},
                {"emptiness", c.emptiness}}}};
}

ClassificationSummary summary_from_json(const json& j) {
  ClassificationSummary c;
  c.kind = j.at("kind").get<std::string>();
  c.basis = j.at("basis").get<std::vector<std::vector<double>>>();
  const json& cert = j.at("certification");
  c.constraint_dim = cert.at("constraint_dim").get<std::size_t>();
  c.shrink_rounds = cert.at("shrink_rounds").get<std::size_t>();
  c.quadratic_vanishing = cert.at("quadratic_vanishing").get<bool>();
  c.verified_members = cert.at("verified_members").get<std::size_t>();
  c.emptiness = cert.at("emptiness").get<std::string>();
  return c;
}

json check_to_json(const PredictionCheck& t) {
  json j{{"expectation", t.expectation},
         {"predicted", {{"kind", t.predicted_kind}, {"dim", t.predicted_dim}}},
         {"computed", {{"kind", t.computed_kind}, {"dim", t.computed_dim}}},
         {"match", t.match}};
  j["residual"] = t.residual ? json(*t.residual) : json(nullptr);
  return j;
}

PredictionCheck check_from_json(const json& j) {
  PredictionCheck t;
  t.expectation = j.at("expectation").get<std::string>();
  t.predicted_kind = j.at("predicted").at("kind").get<std::string>();
  t.predicted_dim = j.at("predicted").at("dim").get<std::size_t>();
  t.computed_kind = j.at("computed").at("kind").get<std::string>();
  t.computed_dim = j.at("computed").at("dim").get<std::size_t>();
  t.match = j.at("match").get<bool>();
  if (!j.at("residual").is_null()) t.residual = j.at("residual").get<double>();
  return t;
}

}  // namespace

std::optional<Subspace> predicted_subspace(const CatalogEntry& entry) {
  const HomogeneousSpaceModel& s = entry.space;
  switch (entry.expected) {
    case Expected::fixed_point_set:
      return s.m0();
    case Expected::center_of_fixed_point_set:
      return centralizer_in(s, s.m0(), s.m0());
    case Expected::empty:
      return Subspace(s.dim_m());
    case Expected::no_fixed_points:
    case Expected::unknown:
      break;
  }
  return std::nullopt;
}

AnalysisReport analyze_space(const CatalogEntry& entry, const AnalyzeOptions& options) {
  const HomogeneousSpaceModel& s = entry.space;
  AnalysisReport r;
  r.space = space_name(entry.descriptor.family);
  r.label = s.label();
  r.n = entry.descriptor.n;
  r.n1 = entry.descriptor.n1;
  r.n2 = entry.descriptor.n2;
  r.dims = {s.algebra().dim(), s.h().dim(), s.dim_m(), s.m0().dim(), s.mprime().dim()};
  r.commutant_dim = s.commutant().size();
  r.isotropy_irreducible = isotropy_irreducibility_test(s);
  r.tolerances.criterion = options.tol;
  r.seed = options.seed;
  r.notes.emplace_back(kConnectedNote);

  std::optional<EquigeodesicSet> set;
  if (s.m0().is_zero()) {
    r.notes.emplace_back(kNoRandersMessage);
  } else {
    set = classify_equigeodesic_set(s, {options.tol, options.seed});
    ClassificationSummary c;
    c.kind = to_string(set->kind);
    for (std::size_t i = 0; i < set->subspace.dim(); ++i) {
      const Vector v = set->subspace.vector(i);
      c.basis.emplace_back(v.data(), v.data() + v.size());
    }
    c.constraint_dim = set->certification.constraint_dim;
    c.shrink_rounds = set->certification.shrink_rounds;
    c.quadratic_vanishing = set->certification.quadratic_vanishing;
    c.verified_members = set->certification.verified_members;
    c.emptiness = set->certification.emptiness;
    r.classification = std::move(c);
  }

  if (entry.expected == Expected::center_of_fixed_point_set) r.notes.emplace_back(kCenterNote);
  if (entry.expected == Expected::unknown) {
    r.notes.emplace_back(kTrivialIsotropyNote);
    return r;
  }

  PredictionCheck t;
  t.expectation = to_string(entry.expected);
  t.predicted_kind = kind_for(entry.expected);
  if (entry.expected == Expected::no_fixed_points) {
    t.computed_kind = s.m0().is_zero() ? "no_fixed_points" : "fixed_points_present";
    t.match = s.m0().is_zero();
    r.theorem_check = t;
    return r;
  }
  const Subspace predicted = predicted_subspace(entry).value();
  t.predicted_dim = predicted.dim();
  t.computed_kind = set ? to_string(set->kind) : "no_fixed_points";
  t.computed_dim = set ? set->subspace.dim() : 0;
  if (set && set->subspace.dim() == predicted.dim()) t.residual = subspace_distance(set->subspace, predicted);
  t.match = t.computed_kind == t.predicted_kind && t.residual && *t.residual <= kSubspaceMatchTol;
  r.theorem_check = t;
  return r;
}

AnalysisReport analyze_space(const SpaceDescriptor& d, const AnalyzeOptions& options) {
  return analyze_space(build_space(d), options);
}

std::string report_to_json(const AnalysisReport& r) {
  json j;
  j["space"] = r.space;
  j["label"] = r.label;
  j["params"] = {{"n", r.n}, {"n1", r.n1}, {"n2", r.n2}};
  j["dims"] = {{"g", r.dims.g}, {"h", r.dims.h}, {"m", r.dims.m}, {"m0", r.dims.m0}, {"mprime", r.dims.mprime}};
  j["commutant_dim"] = r.commutant_dim;
  j["isotropy_irreducible"] = r.isotropy_irreducible;
  j["classification"] = r.classification ? summary_to_json(*r.classification) : json(nullptr);
  j["theorem_check"] = r.theorem_check ? check_to_json(*r.theorem_check) : json(nullptr);
  j["tolerances"] = {{"criterion", r.tolerances.criterion},
                     {"rank", r.tolerances.rank},
                     {"structure", r.tolerances.structure},
                     {"subspace_match", r.tolerances.subspace_match}};
  j["seed"] = r.seed;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    AnalysisReport r;
    r.space = j.at("space").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.n = j.at("params").at("n").get<int>();
    r.n1 = j.at("params").at("n1").get<int>();
    r.n2 = j.at("params").at("n2").get<int>();
    const json& d = j.at("dims");
    r.dims = {d.at("g").get<std::size_t>(), d.at("h").get<std::size_t>(), d.at("m").get<std::size_t>(),
              d.at("m0").get<std::size_t>(), d.at("mprime").get<std::size_t>()};
    r.commutant_dim = j.at("commutant_dim").get<std::size_t>();
    r.isotropy_irreducible = j.at("isotropy_irreducible").get<bool>();
    if (!j.at("classification").is_null()) r.classification = summary_from_json(j.at("classification"));
    if (!j.at("theorem_check").is_null()) r.theorem_check = check_from_json(j.at("theorem_check"));
    const json& t = j.at("tolerances");
    r.tolerances = {t.at("criterion").get<double>(), t.at("rank").get<double>(), t.at("structure").get<double>(),
                    t.at("subspace_match").get<double>()};
    r.seed = j.at("seed").get<std::uint64_t>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string report_summary(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.label << " [" << r.space << "]\n";
  out << "  dim g = " << r.dims.g << ", h = " << r.dims.h << ", m = " << r.dims.m << ", m0 = " << r.dims.m0
      << ", m' = " << r.dims.mprime << "\n";
  out << "  symmetric commutant dim = " << r.commutant_dim
      << (r.isotropy_irreducible ? " (isotropy irreducible)" : "") << "\n";
  if (r.classification)
    out << "  Randers equigeodesic set: " << r.classification->kind << ", dim " << r.classification->basis.size()
        << "\n";
  if (r.theorem_check) {
    out << "  expected " << r.theorem_check->expectation << ": " << (r.theorem_check->match ? "match" : "MISMATCH");
    if (r.theorem_check->residual) out << " (residual " << *r.theorem_check->residual << ")";
    out << "\n";
  }
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
  return out.str();
}

}  // namespace equigeo

#include "equigeo/suite.hpp"

#include "equigeo/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace equigeo {

namespace {

constexpr double kOraclePassBound = 1e-8;
constexpr double kOracleFailBound = 1e-7;
constexpr double kReductionTol = 1e-12;
constexpr double kIdentityTol = 1e-10;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Runs analyze_space over the cases and requires a matching known answer.
void classify_all(const std::vector<SpaceDescriptor>& cases, const SuiteOptions& o, CheckResult& r) {
  std::vector<std::string> failures;
  double worst = 0.0;
  for (const auto& d : cases) {
    const AnalysisReport rep = analyze_space(d, {o.tol, o.seed});
    const bool ok = rep.theorem_check && rep.theorem_check->match;
    if (rep.theorem_check && rep.theorem_check->residual) worst = std::max(worst, *rep.theorem_check->residual);
    if (!ok) failures.push_back(rep.label);
  }
  r.passed = failures.empty();
  std::ostringstream out;
  out << cases.size() << " spaces, max subspace residual " << fmt(worst);
  for (const auto& f : failures) out << "; mismatch on " << f;
  r.detail = out.str();
}

std::vector<LieAlgebra> identity_algebras() {
  return {build_lie_algebra({{Family::so, 4}}),
          build_lie_algebra({{Family::su, 3}}),
          build_lie_algebra({{Family::u, 2}}),
          build_lie_algebra({{Family::sp, 2}}),
          build_lie_algebra({{Family::sp, 1}, {Family::abelian, 1}}),
          build_lie_algebra({{Family::su, 2, 2.0}, {Family::so, 3}})};
}

ComplexMatrix random_complex(int n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = {rng.normal(), rng.normal()};
  return m;
}

QuaternionMatrix random_quaternion(int n, Rng& rng) {
  QuaternionMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
  return m;
}

}  // namespace

std::vector<SpaceDescriptor> sphere_classification_cases() {
  return {{SpaceFamily::su_sphere, 2, 0, 0},    {SpaceFamily::su_sphere, 3, 0, 0},
          {SpaceFamily::u_sphere, 2, 0, 0},     {SpaceFamily::u_sphere, 3, 0, 0},
          {SpaceFamily::sp_u1_sphere, 1, 0, 0}, {SpaceFamily::sp_u1_sphere, 2, 0, 0},
          {SpaceFamily::sp_sphere, 1, 0, 0},    {SpaceFamily::sp_sphere, 2, 0, 0}};
}

std::vector<SpaceDescriptor> triple_classification_cases() {
  return {{SpaceFamily::thm2_su_su, 0, 2, 1}, {SpaceFamily::thm2_su_su, 0, 2, 2}, {SpaceFamily::thm2_su_su, 0, 3, 2},
          {SpaceFamily::thm2_sp_su, 2, 0, 0}, {SpaceFamily::thm2_sp_su, 3, 0, 0}, {SpaceFamily::thm2_so_so, 3, 0, 0},
          {SpaceFamily::thm2_so_so, 4, 0, 0}, {SpaceFamily::thm2_so_su, 3, 0, 0}, {SpaceFamily::thm2_so_su, 4, 0, 0}};
}

std::vector<CommutantGolden> commutant_goldens() {
  std::vector<CommutantGolden> out;
  for (int n = 2; n <= 5; ++n) out.push_back({{SpaceFamily::so_sphere, n, 0, 0}, 1});
  for (int n = 2; n <= 4; ++n) out.push_back({{SpaceFamily::su_sphere, n, 0, 0}, 2});
  for (int n = 1; n <= 3; ++n) out.push_back({{SpaceFamily::sp_sphere, n, 0, 0}, 7});
  for (int n = 1; n <= 3; ++n) out.push_back({{SpaceFamily::sp_u1_sphere, n, 0, 0}, 3});
  return out;
}

CheckResult check_sphere_classification(const SuiteOptions& o) {
  return timed("sphere families: fixed-point line or empty set",
               [&](CheckResult& r) { classify_all(sphere_classification_cases(), o, r); });
}

CheckResult check_triple_classification(const SuiteOptions& o) {
  return timed("symmetric triples: center of the fixed-point set",
               [&](CheckResult& r) { classify_all(triple_classification_cases(), o, r); });
}

CheckResult check_oracle_equivalence(const SuiteOptions& o) {
  return timed("algebraic test agrees with sampled Randers metrics", [&](CheckResult& r) {
    std::vector<SpaceDescriptor> cases = sphere_classification_cases();
    for (const auto& d : triple_classification_cases()) cases.push_back(d);
    Rng rng(o.seed);
    std::size_t vectors = 0, passes = 0;
    std::vector<std::string> counterexamples;
    double worst_pass = 0.0;
    double weakest_fail = std::numeric_limits<double>::infinity();
    std::uint64_t stream = o.seed;
    for (const auto& d : cases) {
      const CatalogEntry entry = build_space(d);
      const HomogeneousSpaceModel& s = entry.space;
      const auto dm = static_cast<Eigen::Index>(s.dim_m());
      std::vector<Vector> xs;
      for (Eigen::Index i = 0; i < dm; ++i) xs.push_back(Vector::Unit(dm, i));
      for (std::size_t t = 0; t < o.random_vectors; ++t) xs.push_back(rng.normal_vector(dm));
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto test = randers_equigeodesic_test(s, xs[k], o.tol);
        const auto oracle = sampled_metric_oracle(s, xs[k], o.samples, ++stream, o.tol);
        ++vectors;
        bool agree = false;
        if (test.verdict) {
          ++passes;
          worst_pass = std::max(worst_pass, oracle.max_residual);
          agree = oracle.max_residual <= kOraclePassBound;
        } else {
          weakest_fail = std::min(weakest_fail, oracle.max_residual);
          agree = oracle.max_residual > kOracleFailBound;
        }
        if (!agree) counterexamples.push_back(s.label() + " vector " + std::to_string(k));
      }
    }
    r.passed = counterexamples.empty();
    std::ostringstream out;
    out << vectors << " vectors on " << cases.size() << " spaces, " << passes << " pass; max residual on passes "
        << fmt(worst_pass) << ", smallest worst-case residual on failures " << fmt(weakest_fail);
    for (const auto& c : counterexamples) out << "; counterexample " << c;
    r.detail = out.str();
  });
}

CheckResult check_residual_reduction(const SuiteOptions& o) {
  return timed("general (alpha,beta) criterion reduces to the Randers and Riemannian forms", [&](CheckResult& r) {
    std::vector<SpaceDescriptor> cases = sphere_classification_cases();
    for (const auto& d : triple_classification_cases()) cases.push_back(d);
    std::vector<CatalogEntry> entries;
    for (const auto& d : cases) entries.push_back(build_space(d));
    Rng rng(o.seed + 1);
    double worst_randers = 0.0, worst_riemann = 0.0;
    for (std::size_t t = 0; t < o.reduction_cases; ++t) {
      const HomogeneousSpaceModel& s = entries[t % entries.size()].space;
      const MetricOperator metric = sample_invariant_metric(s, rng);
      const Vector u = sample_m0_ball(s, metric, kOracleRadius, rng);
      Vector x = rng.normal_vector(static_cast<Eigen::Index>(s.algebra().dim()));
      const AlgebraElement xe = s.algebra().element(x);
      const auto general = alpha_beta_geodesic_residual(s, MinkowskiNormSpec::make(s, metric, u, PhiPreset::randers),
                                                        xe, o.tol);
      const auto randers = randers_geodesic_residual(s, metric, u, xe, o.tol);
      worst_randers = std::max(worst_randers, std::abs(general.residual - randers.residual));
      const Vector zero = Vector::Zero(static_cast<Eigen::Index>(s.dim_m()));
      const auto general0 = alpha_beta_geodesic_residual(
          s, MinkowskiNormSpec::make(s, metric, zero, PhiPreset::randers), xe, o.tol);
      const auto riemann = riemannian_geodesic_residual(s, metric, xe, o.tol);
      worst_riemann = std::max(worst_riemann, std::abs(general0.residual - riemann.residual));
    }
    r.passed = worst_randers <= kReductionTol && worst_riemann <= kReductionTol;
    r.detail = std::to_string(o.reduction_cases) + " tuples, max |general - Randers| " + fmt(worst_randers) +
               ", max |general(u=0) - Riemannian| " + fmt(worst_riemann);
  });
}

CheckResult check_structural_identities(const SuiteOptions&) {
  return timed("bracket relations and trivial kernels on m'", [&](CheckResult& r) {
    double worst = 0.0;
    std::vector<std::string> failures;
    for (const auto& d : triple_classification_cases()) {
      const CatalogEntry e = build_space(d);
      const TripleRelations rel = check_triple_relations(e);
      worst = std::max({worst, rel.max_residual(), rel.m0_vs_k_complement});
      if (rel.max_residual() > kIdentityTol || rel.m0_vs_k_complement > kIdentityTol)
        failures.push_back(e.space.label() + " brackets");
      if (rel.h_kernel_on_mprime != 0 || rel.m0_kernel_on_mprime != 0) failures.push_back(e.space.label() + " kernel");
      if (!rel.parent_isotropy_irreducible) failures.push_back(e.space.label() + " G/K reducible");
    }
    for (int n = 1; n <= 2; ++n) {
      const CatalogEntry e = build_space({SpaceFamily::sp_u1_sphere, n, 0, 0});
      const SpU1Relations rel = check_sp_u1_relations(e);
      worst = std::max(worst, rel.max_residual());
      if (rel.max_residual() > kIdentityTol) failures.push_back(e.space.label() + " brackets");
      if (rel.kernel_dim != 0) failures.push_back(e.space.label() + " kernel");
      if (rel.block_dim_total != e.space.dim_m()) failures.push_back(e.space.label() + " block dims");
    }
    r.passed = failures.empty();
    std::ostringstream out;
    out << triple_classification_cases().size() << " triples + 2 sp-u1 spheres, max residual " << fmt(worst);
    for (const auto& f : failures) out << "; failed " << f;
    r.detail = out.str();
  });
}

CheckResult check_commutant_dimensions(const SuiteOptions&) {
  return timed("dimension of the invariant metric space", [&](CheckResult& r) {
    std::vector<std::string> failures;
    const auto goldens = commutant_goldens();
    for (const auto& g : goldens) {
      const CatalogEntry e = build_space(g.space);
      const std::size_t got = compute_equivariant_symmetric_operators(e.space).size();
      if (got != g.dim)
        failures.push_back(e.space.label() + " got " + std::to_string(got) + " want " + std::to_string(g.dim));
    }
    r.passed = failures.empty();
    std::ostringstream out;
    out << goldens.size() << " spaces";
    for (const auto& f : failures) out << "; " << f;
    r.detail = out.str();
  });
}

CheckResult check_algebraic_invariants(const SuiteOptions& o) {
  return timed("Jacobi, ad-invariance, embedding products, idempotent projections", [&](CheckResult& r) {
    Rng rng(o.seed + 2);
    const auto algebras = identity_algebras();
    double jacobi = 0.0, invariance = 0.0, embedding = 0.0, idempotence = 0.0;
    for (std::size_t t = 0; t < o.random_cases; ++t) {
      const LieAlgebra& g = algebras[t % algebras.size()];
      const auto d = static_cast<Eigen::Index>(g.dim());
      const Vector x = rng.normal_vector(d), y = rng.normal_vector(d), z = rng.normal_vector(d);

      const Vector jac = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
      jacobi = std::max(jacobi, jac.norm());

      const auto rep = [&](const Vector& v) { return g.representative(g.element(v)); };
      const double inv = g.trace_inner(rep(g.bracket(x, y)), rep(z)) + g.trace_inner(rep(y), rep(g.bracket(x, z)));
      invariance = std::max(invariance, std::abs(inv));
    }
    for (std::size_t t = 0; t < o.random_cases; ++t) {
      const int n = 1 + static_cast<int>(t % 4);
      const ComplexMatrix a = random_complex(n, rng), b = random_complex(n, rng);
      const RealMatrix ec = real_embedding(FieldMatrix(ComplexMatrix(a * b)), Field::complex) -
                            real_embedding(FieldMatrix(a), Field::complex) * real_embedding(FieldMatrix(b), Field::complex);
      const QuaternionMatrix p = random_quaternion(n, rng), q = random_quaternion(n, rng);
      const RealMatrix eq = real_embedding(FieldMatrix(p * q), Field::quaternion) -
                            real_embedding(FieldMatrix(p), Field::quaternion) *
                                real_embedding(FieldMatrix(q), Field::quaternion);
      embedding = std::max({embedding, ec.cwiseAbs().maxCoeff(), eq.cwiseAbs().maxCoeff()});
    }
    for (std::size_t t = 0; t < o.random_cases; ++t) {
      const Eigen::Index ambient = 2 + static_cast<Eigen::Index>(t % 9);
      const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng.uniform() * static_cast<double>(ambient - 1));
      RealMatrix a(ambient, k);
      for (Eigen::Index c = 0; c < k; ++c) a.col(c) = rng.normal_vector(ambient);
      const Subspace s = column_space(a);
      const RealMatrix p = s.projector();
      const Vector v = rng.normal_vector(ambient);
      const Vector once = orthogonal_projection(v, s);
      idempotence = std::max({idempotence, (p * p - p).cwiseAbs().maxCoeff(),
                              (orthogonal_projection(once, s) - once).norm()});
    }
    r.passed = jacobi <= kIdentityTol && invariance <= kIdentityTol && embedding <= kIdentityTol &&
               idempotence <= kIdentityTol;
    r.detail = std::to_string(o.random_cases) + " cases each; Jacobi " + fmt(jacobi) + ", ad-invariance " +
               fmt(invariance) + ", embedding " + fmt(embedding) + ", idempotence " + fmt(idempotence);
  });
}

std::vector<NamedCheck> verification_checks() {
  return {{"sphere-classification", check_sphere_classification},
          {"triple-classification", check_triple_classification},
          {"oracle-equivalence", check_oracle_equivalence},
          {"residual-reduction", check_residual_reduction},
          {"structural-identities", check_structural_identities},
          {"commutant-dimensions", check_commutant_dimensions},
          {"algebraic-invariants", check_algebraic_invariants}};
}

std::vector<CheckResult> run_verification_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (const auto& c : verification_checks()) out.push_back(c.run(o));
  return out;
}

std::string format_suite(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << secs << ") " << r.detail << "\n";
  }
  return out.str();
}

}  // namespace equigeo

#include "equigeo/errors.hpp"
#include "equigeo/report.hpp"
#include "equigeo/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace equigeo;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct SpaceArgs {
  std::string space;
  int n = 1;
  int n1 = 1;
  int n2 = 1;
};

void add_space_options(CLI::App* cmd, SpaceArgs& a) {
  cmd->add_option("--space", a.space, "space name, e.g. sp-u1-sphere")->required();
  cmd->add_option("--n", a.n, "family parameter n");
  cmd->add_option("--n1", a.n1, "first block size (thm2-su-su)");
  cmd->add_option("--n2", a.n2, "second block size (thm2-su-su)");
}

SpaceDescriptor descriptor_of(const SpaceArgs& a) {
  const SpaceFamily f = space_family_from_name(a.space);
  if (f == SpaceFamily::thm2_su_su) return {f, 0, a.n1, a.n2};
  return {f, a.n, 0, 0};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

json matrix_rows(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(to_std(m.row(r).transpose()));
  return rows;
}

Vector read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read vector file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput("vector file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_array()) throw InvalidInput("vector file must hold a JSON array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InvalidInput("vector entries must be numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equigeodesic vectors on compact homogeneous spaces"};
  app.require_subcommand(1);

  double tol = kCriterionTol;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string out_path;

  SpaceArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "build a space and classify its Randers equigeodesic vectors");
  add_space_options(analyze, analyze_args);

  auto* verify = app.add_subcommand("verify", "run the verification suite");

  SpaceArgs check_args;
  std::string vector_path;
  auto* check = app.add_subcommand("check-vector", "test one vector given in the reported m-basis");
  add_space_options(check, check_args);
  check->add_option("--vector", vector_path, "JSON array of m-coordinates")->required();

  for (auto* cmd : {analyze, verify, check}) {
    cmd->add_option("--tol", tol, "criterion tolerance")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    cmd->add_option("--out", out_path, "write JSON here instead of stdout");
  }
  for (auto* cmd : {verify, check}) cmd->add_option("--samples", samples, "sampled metrics per oracle call");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!(tol > 0.0)) throw InvalidInput("--tol must be positive");

    if (analyze->parsed()) {
      const AnalysisReport r = analyze_space(descriptor_of(analyze_args), {tol, seed});
      write_output(out_path, report_to_json(r));
      std::cerr << report_summary(r);
      return kExitOk;
    }

    if (verify->parsed()) {
      if (samples == 0) throw InvalidInput("--samples must be at least 1");
      SuiteOptions o;
      o.seed = seed;
      o.samples = samples;
      o.tol = tol;
      const auto results = run_verification_suite(o);
      std::cout << format_suite(results);
      bool all = true;
      json j = json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      if (!out_path.empty()) write_output(out_path, j.dump(2) + "\n");
      return all ? kExitOk : kExitFail;
    }

    if (check->parsed()) {
      if (samples == 0) throw InvalidInput("--samples must be at least 1");
      const CatalogEntry entry = build_space(descriptor_of(check_args));
      const HomogeneousSpaceModel& s = entry.space;
      const Vector x = read_vector(vector_path);
      if (static_cast<std::size_t>(x.size()) != s.dim_m())
        throw InvalidInput("vector has " + std::to_string(x.size()) + " coordinates; dim m = " +
                           std::to_string(s.dim_m()));
      const CriterionReport test = randers_equigeodesic_test(s, x, tol);
      const OracleReport oracle = sampled_metric_oracle(s, x, samples, seed, tol);
      json j{{"space", space_name(entry.descriptor.family)},
             {"label", s.label()},
             {"vector", to_std(x)},
             {"test", {{"residual", test.residual}, {"verdict", test.verdict}, {"witnesses", test.witnesses}}},
             {"oracle",
              {{"max_residual", oracle.max_residual},
               {"samples", oracle.samples},
               {"worst_sample", oracle.worst_sample},
               {"worst_u", to_std(oracle.worst_u)},
               {"worst_metric", matrix_rows(oracle.worst_metric)},
               {"verdict", oracle.verdict}}},
             {"tol", tol},
             {"seed", seed}};
      write_output(out_path, j.dump(2) + "\n");
      std::cerr << s.label() << ": " << (test.verdict ? "equigeodesic" : "not equigeodesic") << " (residual "
                << test.residual << "; oracle max " << oracle.max_residual << " over " << samples << " metrics)\n";
      return test.verdict ? kExitOk : kExitFail;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

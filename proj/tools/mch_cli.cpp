// Command line front end: graph enumeration, link product evaluation, and
// the verification suites. Exit codes: 0 success, 1 validation failure,
// 2 transversality failure, 3 degenerate lattice, 4 suite failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mch/charge_lattice.hpp"
#include "mch/curve_json.hpp"
#include "mch/errors.hpp"
#include "mch/graph_enumerate.hpp"
#include "mch/graph_json.hpp"
#include "mch/isotopy.hpp"
#include "mch/multilink.hpp"
#include "mch/rational.hpp"
#include "mch/verify_suites.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitTransversality = 2;
constexpr int kExitDegenerateLattice = 3;
constexpr int kExitSuiteFailure = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

std::vector<mch::Rat> parse_rat_array(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array of rational strings");
  std::vector<mch::Rat> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw std::invalid_argument(what + " entries must be rational strings");
    out.push_back(mch::parse_rat(v.get<std::string>()));
  }
  return out;
}

mch::ChargeLattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_integer())
    throw std::invalid_argument("lattice config needs an integer rank");
  mch::ChargeLattice lat;
  lat.rank = j["rank"].get<int>();
  if (j.contains("boundary_matrix")) {
    for (const auto& row : j["boundary_matrix"]) {
      std::vector<std::int64_t> r;
      for (const auto& v : row) {
        if (!v.is_number_integer())
          throw std::invalid_argument("boundary_matrix entries must be integers");
        r.push_back(v.get<std::int64_t>());
      }
      lat.boundary_matrix.push_back(std::move(r));
    }
  }
  if (j.contains("omega")) lat.omega = parse_rat_array(j["omega"], "omega");
  if (j.contains("norm_weights"))
    lat.norm_weights = parse_rat_array(j["norm_weights"], "norm_weights");
  return lat;
}

mch::ChargeLattice default_lattice(int rank) {
  mch::ChargeLattice lat;
  lat.rank = rank;
  lat.omega.assign(rank, mch::Rat(1));
  lat.norm_weights.assign(rank, mch::Rat(1));
  return lat;
}

int run_enumerate(const std::string& lattice_path, const std::vector<std::int64_t>& beta,
                  int chi, const std::string& c_str, const std::string& format,
                  const std::string& out_path) {
  const mch::ChargeLattice lat = lattice_path.empty()
                                     ? default_lattice(static_cast<int>(beta.size()))
                                     : lattice_from_json(parse_json_file(lattice_path));
  const mch::Rat C = mch::parse_rat(c_str);
  const std::vector<mch::DecoratedGraph> graphs = mch::enumerate_graphs(lat, beta, chi, C);
  if (format == "dot") {
    std::string text = "// count " + std::to_string(graphs.size()) + "\n";
    for (const auto& g : graphs) text += mch::graph_to_dot(g);
    emit(out_path, text);
    return 0;
  }
  nlohmann::json out;
  out["count"] = graphs.size();
  out["graphs"] = nlohmann::json::array();
  for (const auto& g : graphs) out["graphs"].push_back(mch::graph_to_json(g));
  emit(out_path, out.dump(2) + "\n");
  return 0;
}

int run_multilink(const std::string& input_path, const std::string& out_path) {
  const mch::NiceGenerator g = mch::generator_from_json(parse_json_file(input_path));
  emit(out_path, mch::format_rat(mch::multilink(g)) + "\n");
  return 0;
}

int run_verify_suite(const std::string& suite, std::uint64_t seed, int cases,
                     const std::string& out_path) {
  using namespace mch;
  std::vector<SuiteResult> results;
  if (suite == "axioms") {
    results.push_back(run_axioms_suite(seed, cases > 0 ? cases : 500));
    results.push_back(run_first_map_suite(seed, cases > 0 ? std::max(1, cases / 5) : 100));
  } else if (suite == "oracle") {
    results.push_back(run_oracle_suite(seed, cases > 0 ? cases : 50));
    results.push_back(run_torus_suite());
  } else if (suite == "chain-map") {
    const int n = cases > 0 ? cases : 20;
    results.push_back(run_chain_map_suite(seed, n));
    results.push_back(run_hnul_kernel_suite(seed, n));
  } else if (suite == "nicify") {
    results.push_back(run_nicify_suite(seed, cases > 0 ? cases : 5));
  } else {
    throw std::invalid_argument("unknown suite " + suite +
                                " (expected axioms, chain-map, oracle, or nicify)");
  }
  bool passed = true;
  nlohmann::json report;
  report["seed"] = seed;
  report["suites"] = nlohmann::json::array();
  for (const SuiteResult& r : results) {
    report["suites"].push_back(suite_to_json(r));
    passed = passed && r.passed();
  }
  report["passed"] = passed;
  emit(out_path, report.dump(2) + "\n");
  return passed ? 0 : kExitSuiteFailure;
}

int run_verify_isotopy(const std::string& input_path, const std::string& out_path) {
  using namespace mch;
  const Isotopy iso = isotopy_from_json(parse_json_file(input_path));
  const ChainMapCheck check = verify_chain_map(iso);
  const Rat rel = multilink(hnul_element(iso));
  const bool passed = check.ok && rel == Rat(0);
  nlohmann::json report;
  report["input"] = input_path;
  report["track_boundary"] = format_rat(check.lhs);
  report["differential_multilink"] = format_rat(check.rhs);
  report["relation_multilink"] = format_rat(rel);
  report["passed"] = passed;
  emit(out_path, report.dump(2) + "\n");
  return passed ? 0 : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-curve homology toolkit"};
  app.require_subcommand(1);

  std::string lattice_path, c_str = "1", format = "json", out_path;
  std::vector<std::int64_t> beta;
  int chi = 1;
  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate stable decorated graphs");
  enumerate->add_option("--lattice", lattice_path, "lattice config json file");
  enumerate->add_option("--beta", beta, "total charge, comma separated integers")
      ->required()
      ->delimiter(',');
  enumerate->add_option("--chi", chi, "Euler characteristic, default 1");
  enumerate->add_option("--C", c_str, "support constant, rational string, default 1");
  enumerate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  enumerate->add_option("--out", out_path, "output file, default stdout");

  std::string ml_input, ml_out;
  CLI::App* multilink = app.add_subcommand("multilink", "link product of a generator file");
  multilink->add_option("--input", ml_input, "generator json file")->required();
  multilink->add_option("--out", ml_out, "output file, default stdout");

  std::string suite, vf_input, vf_out;
  std::uint64_t seed = 20260816ull;
  int cases = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a property suite or check an isotopy file");
  verify->add_option("--suite", suite, "axioms, chain-map, oracle, or nicify");
  verify->add_option("--input", vf_input, "isotopy json file");
  verify->add_option("--seed", seed, "suite seed");
  verify->add_option("--cases", cases, "case count override, 0 = suite default");
  verify->add_option("--out", vf_out, "output file, default stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(lattice_path, beta, chi, c_str, format, out_path);
    if (multilink->parsed()) return run_multilink(ml_input, ml_out);
    if (suite.empty() == vf_input.empty())
      throw std::invalid_argument("verify needs exactly one of --suite and --input");
    if (!suite.empty()) return run_verify_suite(suite, seed, cases, vf_out);
    return run_verify_isotopy(vf_input, vf_out);
  } catch (const mch::transversality_error& e) {
    std::cerr << "transversality failure: " << e.what() << "\n";
    return kExitTransversality;
  } catch (const mch::degenerate_lattice_error& e) {
    std::cerr << "degenerate lattice: " << e.what() << "\n";
    return kExitDegenerateLattice;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}

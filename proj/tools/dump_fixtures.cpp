// Regenerates the shipped fixture files from the coded fixtures. Run after
// changing fixture geometry: dump_fixtures <output directory>.

#include <fstream>
#include <iostream>
#include <string>

#include "mch/curve_json.hpp"
#include "mch/fixtures.hpp"

namespace {

void write(const std::string& dir, const std::string& name, const nlohmann::json& j) {
  const std::string path = dir + "/" + name;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  out << j.dump(2) << "\n";
  std::cout << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "fixtures";
  using namespace mch;
  write(dir, "hopf.json", generator_to_json(fixtures::hopf_pair()));
  write(dir, "split.json", generator_to_json(fixtures::split_pair()));
  write(dir, "clasp_hopf.json", generator_to_json(fixtures::clasp_hopf_pair()));
  write(dir, "hopf_pass.json", isotopy_to_json(fixtures::hopf_pass()));
  write(dir, "tangency.json", isotopy_to_json(fixtures::tangency_isotopy()));
  return 0;
}

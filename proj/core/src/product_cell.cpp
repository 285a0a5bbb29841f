#include "mch/product_cell.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mch/errors.hpp"

namespace mch {

std::string chain_fingerprint(const OneChain& chain) {
  std::vector<std::string> parts;
  for (const auto& term : chain.terms) {
    std::ostringstream os;
    os << "c=" << format_rat(term.coeff) << ";v=";
    for (const Vec3& v : term.loop.vertices)
      os << "(" << format_rat(v[0]) << "," << format_rat(v[1]) << "," << format_rat(v[2]) << ")";
    if (!term.loop.translations.empty()) {
      os << ";t=";
      for (const IVec3& t : term.loop.translations)
        os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
    }
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "[";
  for (const auto& p : parts) out += p + "|";
  out += "]";
  return out;
}

ProductCurveCell::ProductCurveCell(AmbientSpace ambient, std::vector<OneChain> curves)
    : ambient_(ambient), curves_(std::move(curves)) {
  if (curves_.size() % 2 != 0)
    throw std::invalid_argument("product cell needs an even number of half edge slots");
  for (const auto& c : curves_) {
    if (c.ambient != ambient_) throw std::invalid_argument("product cell ambient mismatch");
    auto errors = validate_chain(c);
    if (!errors.empty()) throw std::invalid_argument("product cell curve: " + errors.front());
  }
}

CellList ProductCurveCell::diagonal_restriction(int edge) const {
  if (edge < 0 || edge >= edge_slots()) throw std::invalid_argument("edge slot out of range");
  if (!are_disjoint(curves_[2 * edge], curves_[2 * edge + 1]))
    throw transversality_error("product cell meets the diagonal at edge " + std::to_string(edge));
  return {};
}

WeightedCell ProductCurveCell::relabel(const EdgeRelabeling& r) const {
  if (static_cast<int>(r.edge_perm.size()) != edge_slots())
    throw std::invalid_argument("relabeling size mismatch");
  std::vector<OneChain> moved(curves_.size());
  int flips = 0;
  for (int e = 0; e < edge_slots(); ++e) {
    int target = r.edge_perm[e];
    bool f = r.flip[e] != 0;
    if (f) ++flips;
    moved[2 * target + (f ? 1 : 0)] = curves_[2 * e];
    moved[2 * target + (f ? 0 : 1)] = curves_[2 * e + 1];
  }
  Rat sign = (flips % 2 == 0) ? 1 : -1;
  return {sign, std::make_shared<ProductCurveCell>(ambient_, std::move(moved))};
}

std::string ProductCurveCell::key() const {
  std::ostringstream os;
  os << "P|" << (ambient_ == AmbientSpace::R3 ? "R3" : "T3") << "|";
  for (const auto& c : curves_) os << chain_fingerprint(c) << "#";
  return os.str();
}

ForgetfulData ProductCurveCell::forgetful_data() const {
  ForgetfulData fd;
  fd.factorizes = true;
  for (const auto& c : curves_) fd.classes.push_back(homology_class(c));
  fd.strengthened = true;
  for (int e = 0; e < edge_slots(); ++e)
    if (fd.classes[2 * e] != fd.classes[2 * e + 1]) fd.strengthened = false;
  return fd;
}

}  // namespace mch

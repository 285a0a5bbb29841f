#include "mch/forgetful.hpp"

#include <stdexcept>

namespace mch {

namespace {

bool class_equal(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Checks one cell sum whose forgotten half edge slots are listed in
// `slots` with the required class per slot. Fills the report in place.
void check_cells(const CellSum& cells, const std::string& where,
                 const std::vector<int>& slots,
                 const std::vector<std::vector<Rat>>& required,
                 ForgetfulReport& rep) {
  for (const auto& [ck, wc] : cells) {
    const ForgetfulData fd = wc.cell->forgetful_data();
    if (!fd.factorizes) {
      rep.ok = false;
      rep.errors.push_back(where + ": cell " + ck + " lacks factorization metadata");
      continue;
    }
    if ((int)fd.classes.size() != 2 * wc.cell->edge_slots()) {
      rep.ok = false;
      rep.errors.push_back(where + ": cell " + ck + " has malformed class table");
      continue;
    }
    for (size_t j = 0; j < slots.size(); ++j) {
      const int h = slots[j];
      if (!class_equal(fd.classes[h], required[j])) {
        rep.ok = false;
        rep.errors.push_back(where + ": cell " + ck + " class mismatch at half edge slot " +
                             std::to_string(h));
      }
    }
    if (!fd.strengthened) rep.strengthened = false;
    for (size_t j = 0; j + 1 < slots.size(); j += 2) {
      // Slots come in (2e, 2e+1) pairs; the strong form needs equal classes.
      if (!class_equal(fd.classes[slots[j]], fd.classes[slots[j + 1]]))
        rep.strengthened = false;
    }
  }
}

std::string sig_string(const SigKey& s) {
  std::string out = "(k=" + std::to_string(s.k) + "; ";
  for (size_t i = 0; i < s.sig.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.sig[i]);
  }
  return out + ")";
}

}  // namespace

ForgetfulReport check_forgetful(const MultiCurveChain& c, const std::vector<Rat>& gamma) {
  if (c.version != ChainVersion::Second)
    throw std::invalid_argument("class form of the forgetful check needs a signature chain");
  ForgetfulReport rep;
  for (const auto& [key, cells] : c.second_entries) {
    const int k0 = key.sig.front();
    if (k0 == 0) continue;
    std::vector<int> slots;
    std::vector<std::vector<Rat>> required;
    for (int e = 0; e < k0; ++e) {
      slots.push_back(2 * e);
      slots.push_back(2 * e + 1);
      required.push_back(gamma);
      required.push_back(gamma);
    }
    check_cells(cells, sig_string(key), slots, required, rep);
  }
  return rep;
}

ForgetfulReport check_forgetful(const MultiCurveChain& c, const ChargeLattice& lattice) {
  if (c.version != ChainVersion::First)
    throw std::invalid_argument("charge form of the forgetful check needs a graph chain");
  ForgetfulReport rep;
  for (const auto& [label, entry] : c.first_entries) {
    const auto& e0 = entry.marked.filtration.front();
    if (e0.empty()) continue;
    const auto edges = entry.marked.graph.edges();
    std::vector<int> slots;
    std::vector<std::vector<Rat>> required;
    for (int e : e0) {
      const auto [hmin, hmax] = edges[e];
      for (int h : {hmin, hmax}) {
        const auto cls = lattice.boundary_of(entry.marked.graph.vertices[entry.marked.graph.pi[h]].beta);
        std::vector<Rat> want(cls.begin(), cls.end());
        required.push_back(std::move(want));
      }
      slots.push_back(2 * e);
      slots.push_back(2 * e + 1);
    }
    check_cells(entry.cells, "graph " + label, slots, required, rep);
  }
  return rep;
}

}  // namespace mch

#include "mch/sweep_cell.hpp"

#include <sstream>
#include <stdexcept>

#include "mch/crossing.hpp"
#include "mch/product_cell.hpp"

namespace mch {

SweepCell::SweepCell(Isotopy iso) : iso_(std::move(iso)) {
  auto errors = validate_isotopy(iso_);
  if (!errors.empty()) throw std::invalid_argument("sweep cell: " + errors.front());
  if (iso_.num_half_edges() % 2 != 0)
    throw std::invalid_argument("sweep cell needs an even number of half edge slots");
}

CellList SweepCell::boundary() const {
  auto start = std::make_shared<ProductCurveCell>(iso_.ambient, iso_.frames.front());
  auto end = std::make_shared<ProductCurveCell>(iso_.ambient, iso_.frames.back());
  return {{Rat(1), end}, {Rat(-1), start}};
}

CellList SweepCell::diagonal_restriction(int edge) const {
  if (edge < 0 || edge >= edge_slots()) throw std::invalid_argument("edge slot out of range");
  auto it = restriction_cache_.find(edge);
  if (it != restriction_cache_.end()) return it->second;

  int h0 = 2 * edge, h1 = 2 * edge + 1;
  auto events = crossing_events(iso_, {{h0, h1}});
  CellList out;
  for (const CrossingEvent& ev : events) {
    Rat mid = (ev.t_lo + ev.t_hi) / 2;
    auto frame = frame_at(iso_, mid);
    Rat coeff = Rat(ev.jump) * frame[h0].terms[ev.term_a].coeff * frame[h1].terms[ev.term_b].coeff;
    std::vector<OneChain> remaining;
    remaining.reserve(frame.size() - 2);
    for (int h = 0; h < static_cast<int>(frame.size()); ++h)
      if (h != h0 && h != h1) remaining.push_back(frame[h]);
    out.push_back({coeff, std::make_shared<ProductCurveCell>(iso_.ambient, std::move(remaining))});
  }
  restriction_cache_.emplace(edge, out);
  return out;
}

WeightedCell SweepCell::relabel(const EdgeRelabeling& r) const {
  if (static_cast<int>(r.edge_perm.size()) != edge_slots())
    throw std::invalid_argument("relabeling size mismatch");
  Isotopy moved = iso_;
  int flips = 0;
  for (int e = 0; e < edge_slots(); ++e) {
    int target = r.edge_perm[e];
    bool f = r.flip[e] != 0;
    if (f) ++flips;
    for (size_t i = 0; i < iso_.frames.size(); ++i) {
      moved.frames[i][2 * target + (f ? 1 : 0)] = iso_.frames[i][2 * e];
      moved.frames[i][2 * target + (f ? 0 : 1)] = iso_.frames[i][2 * e + 1];
    }
  }
  Rat sign = (flips % 2 == 0) ? 1 : -1;
  return {sign, std::make_shared<SweepCell>(std::move(moved))};
}

std::string SweepCell::key() const {
  std::ostringstream os;
  os << "S|" << (iso_.ambient == AmbientSpace::R3 ? "R3" : "T3") << "|";
  for (const Rat& t : iso_.times) os << format_rat(t) << ",";
  os << "|";
  for (const auto& frame : iso_.frames) {
    for (const OneChain& c : frame) os << chain_fingerprint(c) << "#";
    os << "@";
  }
  return os.str();
}

ForgetfulData SweepCell::forgetful_data() const {
  ForgetfulData fd;
  fd.factorizes = true;
  for (const auto& c : iso_.frames.front()) fd.classes.push_back(homology_class(c));
  fd.strengthened = true;
  for (int e = 0; e < edge_slots(); ++e)
    if (fd.classes[2 * e] != fd.classes[2 * e + 1]) fd.strengthened = false;
  return fd;
}

}  // namespace mch

#include "mch/synthetic_cell.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mch {

SyntheticCell::SyntheticCell(Data d) : d_(std::move(d)) {
  if (d_.k < 0) throw std::invalid_argument("synthetic cell: negative edge count");
  if (static_cast<int>(d_.b_present.size()) != d_.k ||
      static_cast<int>(d_.tags.size()) != d_.k || static_cast<int>(d_.flips.size()) != d_.k)
    throw std::invalid_argument("synthetic cell: per-edge tables must have size k");
  for (size_t i = 0; i + 1 < d_.a_gens.size(); ++i)
    if (d_.a_gens[i] >= d_.a_gens[i + 1])
      throw std::invalid_argument("synthetic cell: a factors must be strictly increasing");
  if (d_.forgetful && static_cast<int>(d_.classes.size()) != 2 * d_.k)
    throw std::invalid_argument("synthetic cell: forgetful classes must have size 2k");
}

CellList SyntheticCell::boundary() const {
  CellList out;
  for (size_t p = 0; p < d_.a_gens.size(); ++p) {
    Data nd = d_;
    nd.a_gens.erase(nd.a_gens.begin() + static_cast<long>(p));
    nd.dim -= 1;
    Rat sign = (p % 2 == 0) ? 1 : -1;
    out.push_back({sign, std::make_shared<SyntheticCell>(std::move(nd))});
  }
  return out;
}

CellList SyntheticCell::diagonal_restriction(int edge) const {
  if (edge < 0 || edge >= d_.k) throw std::invalid_argument("edge slot out of range");
  if (!d_.b_present[edge]) return {};
  size_t pos = d_.a_gens.size();
  for (int e = 0; e < edge; ++e)
    if (d_.b_present[e]) ++pos;
  Data nd = d_;
  nd.k -= 1;
  nd.dim -= 3;
  nd.b_present.erase(nd.b_present.begin() + edge);
  nd.tags.erase(nd.tags.begin() + edge);
  nd.flips.erase(nd.flips.begin() + edge);
  if (nd.forgetful) {
    nd.classes.erase(nd.classes.begin() + 2 * edge, nd.classes.begin() + 2 * edge + 2);
  }
  Rat sign = (pos % 2 == 0) ? 1 : -1;
  if (d_.flips[edge]) sign = -sign;
  return {{sign, std::make_shared<SyntheticCell>(std::move(nd))}};
}

WeightedCell SyntheticCell::relabel(const EdgeRelabeling& r) const {
  if (static_cast<int>(r.edge_perm.size()) != d_.k)
    throw std::invalid_argument("relabeling size mismatch");
  Data nd = d_;
  for (int e = 0; e < d_.k; ++e) {
    int t = r.edge_perm[e];
    nd.b_present[t] = d_.b_present[e];
    nd.tags[t] = d_.tags[e];
    nd.flips[t] = static_cast<char>(d_.flips[e] ^ r.flip[e]);
    if (d_.forgetful) {
      bool f = r.flip[e] != 0;
      nd.classes[2 * t + (f ? 1 : 0)] = d_.classes[2 * e];
      nd.classes[2 * t + (f ? 0 : 1)] = d_.classes[2 * e + 1];
    }
  }
  // Intrinsic sign: parity of the b word reordering.
  std::vector<int> images;
  for (int e = 0; e < d_.k; ++e)
    if (d_.b_present[e]) images.push_back(r.edge_perm[e]);
  int inversions = 0;
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  Rat sign = (inversions % 2 == 0) ? 1 : -1;
  return {sign, std::make_shared<SyntheticCell>(std::move(nd))};
}

std::string SyntheticCell::key() const {
  std::ostringstream os;
  os << "Y|" << d_.k << "|" << d_.dim << "|" << d_.flavor << "|a:";
  for (int a : d_.a_gens) os << a << ",";
  os << "|b:";
  for (char b : d_.b_present) os << (b ? 1 : 0);
  os << "|t:";
  for (auto t : d_.tags) os << t << ",";
  os << "|f:";
  for (char f : d_.flips) os << (f ? 1 : 0);
  if (d_.forgetful) {
    os << "|F" << (d_.strengthened ? "s" : "") << ":";
    for (const auto& cls : d_.classes) {
      for (const Rat& c : cls) os << format_rat(c) << ",";
      os << ";";
    }
  }
  return os.str();
}

ForgetfulData SyntheticCell::forgetful_data() const {
  ForgetfulData fd;
  fd.factorizes = d_.forgetful;
  fd.classes = d_.classes;
  fd.strengthened = d_.strengthened;
  return fd;
}

}  // namespace mch

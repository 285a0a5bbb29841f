#include "mch/sig_group.hpp"

#include <algorithm>

namespace mch {

std::vector<std::string> validate_signature(const SigKey& s) {
  std::vector<std::string> errors;
  if (s.k < 0) errors.push_back("negative edge count");
  if (s.sig.empty()) errors.push_back("signature needs at least one entry");
  for (size_t i = 0; i < s.sig.size(); ++i) {
    if (s.sig[i] < 0 || s.sig[i] > s.k) {
      errors.push_back("signature entry out of [0, k]");
      break;
    }
    if (i > 0 && s.sig[i - 1] > s.sig[i]) {
      errors.push_back("signature entries must be non-decreasing");
      break;
    }
  }
  return errors;
}

namespace {

std::vector<std::pair<int, int>> blocks_of(const SigKey& s) {
  std::vector<std::pair<int, int>> blocks;
  int prev = 0;
  for (int ki : s.sig) {
    if (ki > prev) blocks.emplace_back(prev, ki);
    prev = std::max(prev, ki);
  }
  if (prev < s.k) blocks.emplace_back(prev, s.k);
  return blocks;
}

}  // namespace

std::vector<EdgeRelabeling> signature_group(const SigKey& s) {
  auto blocks = blocks_of(s);
  std::vector<std::vector<int>> perms;  // full edge permutations, identity first
  std::vector<int> base(s.k);
  for (int e = 0; e < s.k; ++e) base[e] = e;
  perms.push_back(base);
  // Odometer over per-block permutations.
  std::vector<std::vector<std::vector<int>>> block_perms;
  for (auto [lo, hi] : blocks) {
    std::vector<std::vector<int>> ps;
    std::vector<int> ids(hi - lo);
    for (int i = 0; i < hi - lo; ++i) ids[i] = lo + i;
    std::vector<int> p = ids;
    do {
      ps.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    block_perms.push_back(std::move(ps));
  }
  perms.clear();
  std::vector<size_t> idx(block_perms.size(), 0);
  while (true) {
    std::vector<int> perm = base;
    for (size_t b = 0; b < block_perms.size(); ++b) {
      auto [lo, hi] = blocks[b];
      for (int i = 0; i < hi - lo; ++i) perm[lo + i] = block_perms[b][idx[b]][i];
    }
    perms.push_back(std::move(perm));
    size_t b = 0;
    while (b < idx.size() && ++idx[b] == block_perms[b].size()) {
      idx[b] = 0;
      ++b;
    }
    if (b == idx.size()) break;
  }

  std::vector<EdgeRelabeling> out;
  out.reserve(perms.size() << s.k);
  for (const auto& perm : perms)
    for (unsigned mask = 0; mask < (1u << s.k); ++mask) {
      EdgeRelabeling r;
      r.edge_perm = perm;
      r.flip.resize(s.k);
      for (int e = 0; e < s.k; ++e) r.flip[e] = static_cast<char>((mask >> e) & 1u);
      out.push_back(std::move(r));
    }
  return out;
}

Int signature_group_order(const SigKey& s) {
  Int order = Int(1) << s.k;
  for (auto [lo, hi] : blocks_of(s)) {
    for (int i = 2; i <= hi - lo; ++i) order *= i;
  }
  return order;
}

EdgeRelabeling to_edge_relabeling(const GraphAut& a) {
  EdgeRelabeling r;
  r.edge_perm = a.edge_perm;
  r.flip = a.edge_flip;
  return r;
}

}  // namespace mch

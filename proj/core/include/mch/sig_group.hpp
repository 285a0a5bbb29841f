#pragma once

#include <string>
#include <vector>

#include "mch/cell.hpp"
#include "mch/graph_aut.hpp"
#include "mch/rational.hpp"

namespace mch {

// Filtration signature of a chain slot: k edge slots, marked prefix sizes
// sig = (k_0 <= ... <= k_l) with entries in [0, k]. Always stored with at
// least one entry; a chain without filtration data sits at sig = {0}.
struct SigKey {
  int k = 0;
  std::vector<int> sig;

  bool operator<(const SigKey& o) const {
    if (k != o.k) return k < o.k;
    return sig < o.sig;
  }
  bool operator==(const SigKey& o) const { return k == o.k && sig == o.sig; }
};

std::vector<std::string> validate_signature(const SigKey& s);

// Symmetry group of the signature: edge permutations preserving every prefix
// {0..k_i-1} (equivalently, permuting the consecutive blocks internally)
// combined with all half edge pair reversals. Identity first.
std::vector<EdgeRelabeling> signature_group(const SigKey& s);

// 2^k times the product of the block factorials.
Int signature_group_order(const SigKey& s);

// Edge slot action of a marked graph automorphism.
EdgeRelabeling to_edge_relabeling(const GraphAut& a);

}  // namespace mch

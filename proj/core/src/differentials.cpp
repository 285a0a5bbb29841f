#include "mch/differentials.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mch/sig_group.hpp"

namespace mch {

namespace {

MultiCurveChain make_out(const MultiCurveChain& c) {
  MultiCurveChain out;
  out.version = c.version;
  out.degree = c.degree - 1;
  return out;
}

}  // namespace

MultiCurveChain boundary_cells(const MultiCurveChain& c) {
  MultiCurveChain out = make_out(c);
  if (c.version == ChainVersion::Second) {
    for (const auto& [key, cells] : c.second_entries)
      for (const auto& [ck, wc] : cells)
        for (const auto& b : wc.cell->boundary())
          insert_second(out, key, wc.coeff * b.coeff, b.cell);
  } else {
    for (const auto& [label, entry] : c.first_entries)
      for (const auto& [ck, wc] : entry.cells)
        for (const auto& b : wc.cell->boundary())
          insert_first(out, entry.marked, wc.coeff * b.coeff, b.cell);
  }
  return out;
}

MultiCurveChain boundary_diagonal(const MultiCurveChain& c) {
  MultiCurveChain out = make_out(c);
  if (c.version == ChainVersion::Second) {
    for (const auto& [key, cells] : c.second_entries) {
      // Eligible slots are the edges outside the top marked prefix.
      for (int e = key.sig.back(); e < key.k; ++e) {
        SigKey tgt{key.k - 1, key.sig};
        for (const auto& [ck, wc] : cells)
          for (const auto& d : wc.cell->diagonal_restriction(e))
            insert_second(out, tgt, wc.coeff * d.coeff, d.cell);
      }
    }
  } else {
    for (const auto& [label, entry] : c.first_entries) {
      const int ne = entry.marked.graph.num_edges();
      const auto& top = entry.marked.filtration.back();
      for (int e = 0; e < ne; ++e) {
        if (std::binary_search(top.begin(), top.end(), e)) continue;
        // Surviving edges keep their relative order under contraction, so
        // the restriction's slot reindexing matches the contracted graph.
        const MarkedGraph contracted = contract_edge(entry.marked, e);
        for (const auto& [ck, wc] : entry.cells)
          for (const auto& d : wc.cell->diagonal_restriction(e))
            insert_first(out, contracted, wc.coeff * d.coeff, d.cell);
      }
    }
  }
  return symmetrize(out);
}

MultiCurveChain boundary_filtration(const MultiCurveChain& c) {
  MultiCurveChain out = make_out(c);
  const int dsign = (c.degree % 2 == 0) ? 1 : -1;
  if (c.version == ChainVersion::Second) {
    for (const auto& [key, cells] : c.second_entries) {
      const int L = (int)key.sig.size();
      for (int i = 0; i <= L; ++i) {
        const int lo = (i > 0) ? key.sig[i - 1] : 0;
        const int hi = (i < L) ? key.sig[i] : key.k;
        const int isign = (i % 2 == 0) ? dsign : -dsign;
        for (int v = lo; v <= hi; ++v) {
          SigKey tgt{key.k, {}};
          tgt.sig.reserve(L + 1);
          tgt.sig.insert(tgt.sig.end(), key.sig.begin(), key.sig.begin() + i);
          tgt.sig.push_back(v);
          tgt.sig.insert(tgt.sig.end(), key.sig.begin() + i, key.sig.end());
          Rat w = Rat(binomial(hi - lo, v - lo));
          if (isign < 0) w = -w;
          for (const auto& [ck, wc] : cells)
            insert_second(out, tgt, wc.coeff * w, wc.cell);
        }
      }
    }
    // Every target group is contained in the source group, so invariance
    // is inherited and no projection is needed.
    return out;
  }
  for (const auto& [label, entry] : c.first_entries) {
    const int ne = entry.marked.graph.num_edges();
    std::vector<int> all_edges(ne);
    std::iota(all_edges.begin(), all_edges.end(), 0);
    const std::vector<int> empty_set;
    const auto& filt = entry.marked.filtration;
    const int L = (int)filt.size();
    for (int i = 0; i <= L; ++i) {
      const auto& lo = (i > 0) ? filt[i - 1] : empty_set;
      const auto& hi = (i < L) ? filt[i] : all_edges;
      std::vector<int> diff;
      std::set_difference(hi.begin(), hi.end(), lo.begin(), lo.end(),
                          std::back_inserter(diff));
      const int isign = (i % 2 == 0) ? dsign : -dsign;
      const Rat w(isign);
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << diff.size()); ++mask) {
        std::vector<int> level = lo;
        for (int j = 0; j < (int)diff.size(); ++j)
          if ((mask >> j) & 1) level.push_back(diff[j]);
        std::sort(level.begin(), level.end());
        MarkedGraph tgt = entry.marked;
        tgt.filtration.insert(tgt.filtration.begin() + i, std::move(level));
        for (const auto& [ck, wc] : entry.cells)
          insert_first(out, tgt, wc.coeff * w, wc.cell);
      }
    }
  }
  return symmetrize(out);
}

MultiCurveChain boundary_hat(const MultiCurveChain& c) {
  MultiCurveChain out = boundary_cells(c);
  out = chain_add(out, boundary_diagonal(c), Rat(-1));
  out = chain_add(out, boundary_filtration(c), Rat(-1));
  return out;
}

}  // namespace mch

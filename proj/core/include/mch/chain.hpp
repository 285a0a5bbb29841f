#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mch/cell.hpp"
#include "mch/decorated_graph.hpp"
#include "mch/sig_group.hpp"

namespace mch {

// First version: entries indexed by marked decorated graphs. Second version:
// entries indexed by filtration signatures on standard edge slots.
enum class ChainVersion { First, Second };

// Formal rational combination of cells keyed by cell identity.
using CellSum = std::map<std::string, WeightedCell>;

void add_weighted(CellSum& sum, const Rat& coeff, const CellPtr& cell);
void add_cell_sum(CellSum& dst, const CellSum& src, const Rat& scale = Rat(1));
bool cell_sum_equal(const CellSum& a, const CellSum& b);

// Transport by an edge relabeling including the orientation torsor sign.
CellSum apply_relabeling(const CellSum& s, const EdgeRelabeling& g);

// Group average (1/|G|) sum_g of the transported sums. Projects onto the
// invariant part; entries whose stabilizer acts with sign -1 die.
CellSum symmetrize_sum(const CellSum& s, const std::vector<EdgeRelabeling>& group);

struct V1Entry {
  MarkedGraph marked;  // stored in canonical form
  CellSum cells;
};

// Chain of one homological degree. Entries of either version store
// group-invariant cell sums; slot dimension must equal degree + 2k + l.
struct MultiCurveChain {
  ChainVersion version = ChainVersion::Second;
  int degree = 0;
  std::map<SigKey, CellSum> second_entries;
  std::map<std::string, V1Entry> first_entries;  // keyed by canonical label
};

// Inserts with normalization: second version validates the signature shape;
// first version canonicalizes the marked graph and transports the cell along
// the canonical edge map (empty filtrations become the single empty level).
void insert_second(MultiCurveChain& c, const SigKey& s, const Rat& coeff, const CellPtr& cell);
void insert_first(MultiCurveChain& c, const MarkedGraph& m, const Rat& coeff, const CellPtr& cell);

MultiCurveChain chain_add(const MultiCurveChain& a, const MultiCurveChain& b,
                          const Rat& scale_b = Rat(1));
bool chain_equal(const MultiCurveChain& a, const MultiCurveChain& b);
bool chain_is_zero(const MultiCurveChain& c);

std::vector<std::string> validate_chain_structure(const MultiCurveChain& c);

MultiCurveChain symmetrize(const MultiCurveChain& c);
bool is_symmetric(const MultiCurveChain& c);

// JSON round trip for chains of formal cells (and the graph indexing of the
// first version). Geometric cells are not serialized here.
nlohmann::json multicurve_to_json(const MultiCurveChain& c);
MultiCurveChain multicurve_from_json(const nlohmann::json& j);

}  // namespace mch

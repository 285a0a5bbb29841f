#include "mch/chain.hpp"

#include <stdexcept>

#include "mch/graph_aut.hpp"
#include "mch/graph_canonical.hpp"
#include "mch/graph_json.hpp"
#include "mch/synthetic_cell.hpp"

namespace mch {

void add_weighted(CellSum& sum, const Rat& coeff, const CellPtr& cell) {
  if (coeff == 0) return;
  std::string key = cell->key();
  auto it = sum.find(key);
  if (it == sum.end()) {
    sum.emplace(std::move(key), WeightedCell{coeff, cell});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) sum.erase(it);
}

void add_cell_sum(CellSum& dst, const CellSum& src, const Rat& scale) {
  for (const auto& [key, wc] : src) add_weighted(dst, wc.coeff * scale, wc.cell);
}

bool cell_sum_equal(const CellSum& a, const CellSum& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second.coeff != ib->second.coeff) return false;
  }
  return true;
}

CellSum apply_relabeling(const CellSum& s, const EdgeRelabeling& g) {
  CellSum out;
  Rat torsor(g.torsor_sign());
  for (const auto& [key, wc] : s) {
    WeightedCell moved = wc.cell->relabel(g);
    add_weighted(out, wc.coeff * moved.coeff * torsor, moved.cell);
  }
  return out;
}

CellSum symmetrize_sum(const CellSum& s, const std::vector<EdgeRelabeling>& group) {
  if (group.empty()) throw std::invalid_argument("empty symmetry group");
  CellSum out;
  Rat inv = Rat(1) / Rat(static_cast<int>(group.size()));
  for (const auto& g : group) add_cell_sum(out, apply_relabeling(s, g), inv);
  return out;
}

void insert_second(MultiCurveChain& c, const SigKey& s, const Rat& coeff, const CellPtr& cell) {
  if (c.version != ChainVersion::Second)
    throw std::invalid_argument("cannot insert signature entries into a first version chain");
  auto errors = validate_signature(s);
  if (!errors.empty()) throw std::invalid_argument("signature: " + errors.front());
  if (cell->edge_slots() != s.k)
    throw std::invalid_argument("cell edge slots do not match the signature");
  add_weighted(c.second_entries[s], coeff, cell);
  if (c.second_entries[s].empty()) c.second_entries.erase(s);
}

void insert_first(MultiCurveChain& c, const MarkedGraph& m, const Rat& coeff,
                  const CellPtr& cell) {
  if (c.version != ChainVersion::First)
    throw std::invalid_argument("cannot insert graph entries into a second version chain");
  MarkedGraph norm = m;
  if (norm.filtration.empty()) norm.filtration.push_back({});
  auto errors = validate_marked(norm);
  if (!errors.empty()) throw std::invalid_argument("marked graph: " + errors.front());
  CanonicalForm cf = canonical_form(norm);
  EdgeRelabeling r{cf.edge_map, cf.edge_flip};
  WeightedCell moved = cell->relabel(r);
  Rat torsor(r.torsor_sign());
  auto it = c.first_entries.find(cf.label);
  if (it == c.first_entries.end()) {
    V1Entry entry;
    entry.marked = cf.canonical;
    add_weighted(entry.cells, coeff * moved.coeff * torsor, moved.cell);
    if (!entry.cells.empty()) c.first_entries.emplace(cf.label, std::move(entry));
    return;
  }
  add_weighted(it->second.cells, coeff * moved.coeff * torsor, moved.cell);
  if (it->second.cells.empty()) c.first_entries.erase(it);
}

MultiCurveChain chain_add(const MultiCurveChain& a, const MultiCurveChain& b, const Rat& scale_b) {
  if (a.version != b.version) throw std::invalid_argument("chain version mismatch");
  if (a.degree != b.degree) throw std::invalid_argument("chain degree mismatch");
  MultiCurveChain out = a;
  for (const auto& [sig, cells] : b.second_entries) {
    add_cell_sum(out.second_entries[sig], cells, scale_b);
    if (out.second_entries[sig].empty()) out.second_entries.erase(sig);
  }
  for (const auto& [label, entry] : b.first_entries) {
    auto it = out.first_entries.find(label);
    if (it == out.first_entries.end()) {
      V1Entry scaled;
      scaled.marked = entry.marked;
      add_cell_sum(scaled.cells, entry.cells, scale_b);
      if (!scaled.cells.empty()) out.first_entries.emplace(label, std::move(scaled));
      continue;
    }
    add_cell_sum(it->second.cells, entry.cells, scale_b);
    if (it->second.cells.empty()) out.first_entries.erase(it);
  }
  return out;
}

bool chain_equal(const MultiCurveChain& a, const MultiCurveChain& b) {
  if (a.version != b.version || a.degree != b.degree) return false;
  if (a.second_entries.size() != b.second_entries.size()) return false;
  if (a.first_entries.size() != b.first_entries.size()) return false;
  {
    auto ia = a.second_entries.begin();
    auto ib = b.second_entries.begin();
    for (; ia != a.second_entries.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first)) return false;
      if (!cell_sum_equal(ia->second, ib->second)) return false;
    }
  }
  {
    auto ia = a.first_entries.begin();
    auto ib = b.first_entries.begin();
    for (; ia != a.first_entries.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (!cell_sum_equal(ia->second.cells, ib->second.cells)) return false;
    }
  }
  return true;
}

bool chain_is_zero(const MultiCurveChain& c) {
  return c.second_entries.empty() && c.first_entries.empty();
}

std::vector<std::string> validate_chain_structure(const MultiCurveChain& c) {
  std::vector<std::string> errors;
  if (c.version == ChainVersion::Second) {
    if (!c.first_entries.empty()) errors.push_back("second version chain has graph entries");
    for (const auto& [sig, cells] : c.second_entries) {
      for (const auto& e : validate_signature(sig)) errors.push_back("signature: " + e);
      int l = static_cast<int>(sig.sig.size()) - 1;
      int want_dim = c.degree + 2 * sig.k + l;
      for (const auto& [key, wc] : cells) {
        if (wc.cell->edge_slots() != sig.k) errors.push_back("cell edge slots do not match k");
        if (wc.cell->dimension() != want_dim)
          errors.push_back("cell dimension does not match degree + 2k + l");
      }
    }
    return errors;
  }
  if (!c.second_entries.empty()) errors.push_back("first version chain has signature entries");
  for (const auto& [label, entry] : c.first_entries) {
    for (const auto& e : validate_marked(entry.marked)) errors.push_back(label + ": " + e);
    if (entry.marked.filtration.empty()) {
      errors.push_back(label + ": stored filtration must be normalized to one level");
      continue;
    }
    CanonicalForm cf = canonical_form(entry.marked);
    if (cf.label != label) errors.push_back("entry key is not the canonical label");
    int k = static_cast<int>(entry.marked.graph.edges().size());
    int l = static_cast<int>(entry.marked.filtration.size()) - 1;
    int want_dim = c.degree + 2 * k + l;
    for (const auto& [key, wc] : entry.cells) {
      if (wc.cell->edge_slots() != k) errors.push_back("cell edge slots do not match edge count");
      if (wc.cell->dimension() != want_dim)
        errors.push_back("cell dimension does not match degree + 2k + l");
    }
  }
  return errors;
}

MultiCurveChain symmetrize(const MultiCurveChain& c) {
  MultiCurveChain out;
  out.version = c.version;
  out.degree = c.degree;
  if (c.version == ChainVersion::Second) {
    for (const auto& [sig, cells] : c.second_entries) {
      CellSum sym = symmetrize_sum(cells, signature_group(sig));
      if (!sym.empty()) out.second_entries.emplace(sig, std::move(sym));
    }
    return out;
  }
  for (const auto& [label, entry] : c.first_entries) {
    std::vector<EdgeRelabeling> group;
    for (const GraphAut& a : automorphism_group(entry.marked)) group.push_back(to_edge_relabeling(a));
    CellSum sym = symmetrize_sum(entry.cells, group);
    if (!sym.empty()) {
      V1Entry ne;
      ne.marked = entry.marked;
      ne.cells = std::move(sym);
      out.first_entries.emplace(label, std::move(ne));
    }
  }
  return out;
}

bool is_symmetric(const MultiCurveChain& c) { return chain_equal(c, symmetrize(c)); }

namespace {

using nlohmann::json;

json cell_to_json(const Cell& cell) {
  const auto* syn = dynamic_cast<const SyntheticCell*>(&cell);
  if (!syn) throw std::invalid_argument("only formal cells serialize to chain json");
  const auto& d = syn->data();
  json j;
  j["k"] = d.k;
  j["dim"] = d.dim;
  j["flavor"] = d.flavor;
  j["a"] = d.a_gens;
  std::vector<int> b(d.b_present.begin(), d.b_present.end());
  std::vector<int> f(d.flips.begin(), d.flips.end());
  j["b"] = b;
  j["tags"] = d.tags;
  j["flips"] = f;
  if (d.forgetful) {
    json classes = json::array();
    for (const auto& cls : d.classes) {
      json jc = json::array();
      for (const Rat& x : cls) jc.push_back(format_rat(x));
      classes.push_back(jc);
    }
    j["classes"] = classes;
    j["strengthened"] = d.strengthened;
  }
  return j;
}

CellPtr cell_from_json(const json& j) {
  SyntheticCell::Data d;
  d.k = j.at("k").get<int>();
  d.dim = j.at("dim").get<int>();
  d.flavor = j.at("flavor").get<int>();
  d.a_gens = j.at("a").get<std::vector<int>>();
  for (int b : j.at("b").get<std::vector<int>>()) d.b_present.push_back(static_cast<char>(b));
  d.tags = j.at("tags").get<std::vector<std::int64_t>>();
  for (int f : j.at("flips").get<std::vector<int>>()) d.flips.push_back(static_cast<char>(f));
  if (j.contains("classes")) {
    d.forgetful = true;
    for (const auto& jc : j["classes"]) {
      std::vector<Rat> cls;
      for (const auto& x : jc) cls.push_back(parse_rat(x.get<std::string>()));
      d.classes.push_back(std::move(cls));
    }
    d.strengthened = j.value("strengthened", false);
  }
  return std::make_shared<SyntheticCell>(std::move(d));
}

json cells_to_json(const CellSum& cells) {
  json out = json::array();
  for (const auto& [key, wc] : cells) {
    json jc;
    jc["coeff"] = format_rat(wc.coeff);
    jc["cell"] = cell_to_json(*wc.cell);
    out.push_back(jc);
  }
  return out;
}

}  // namespace

json multicurve_to_json(const MultiCurveChain& c) {
  json j;
  j["version"] = c.version == ChainVersion::First ? "first" : "second";
  j["degree"] = c.degree;
  if (c.version == ChainVersion::Second) {
    json entries = json::array();
    for (const auto& [sig, cells] : c.second_entries) {
      json je;
      je["k"] = sig.k;
      je["sig"] = sig.sig;
      je["cells"] = cells_to_json(cells);
      entries.push_back(je);
    }
    j["entries"] = entries;
    return j;
  }
  json entries = json::array();
  for (const auto& [label, entry] : c.first_entries) {
    json je;
    je["graph"] = graph_to_json(entry.marked);
    je["cells"] = cells_to_json(entry.cells);
    entries.push_back(je);
  }
  j["graph_entries"] = entries;
  return j;
}

MultiCurveChain multicurve_from_json(const json& j) {
  MultiCurveChain c;
  std::string version = j.at("version").get<std::string>();
  if (version == "first")
    c.version = ChainVersion::First;
  else if (version == "second")
    c.version = ChainVersion::Second;
  else
    throw std::invalid_argument("chain version must be first or second");
  c.degree = j.at("degree").get<int>();
  if (c.version == ChainVersion::Second) {
    for (const auto& je : j.value("entries", json::array())) {
      SigKey sig;
      sig.k = je.at("k").get<int>();
      sig.sig = je.at("sig").get<std::vector<int>>();
      for (const auto& jc : je.at("cells"))
        insert_second(c, sig, parse_rat(jc.at("coeff").get<std::string>()),
                      cell_from_json(jc.at("cell")));
    }
    return c;
  }
  for (const auto& je : j.value("graph_entries", json::array())) {
    MarkedGraph m = marked_graph_from_json(je.at("graph"));
    for (const auto& jc : je.at("cells"))
      insert_first(c, m, parse_rat(jc.at("coeff").get<std::string>()),
                   cell_from_json(jc.at("cell")));
  }
  return c;
}

}  // namespace mch

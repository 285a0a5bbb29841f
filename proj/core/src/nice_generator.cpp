#include "mch/nice_generator.hpp"

#include <memory>
#include <stdexcept>

#include "mch/errors.hpp"
#include "mch/product_cell.hpp"
#include "mch/sig_group.hpp"
#include "mch/sweep_cell.hpp"

namespace mch {

std::vector<std::string> validate_generator(const NiceGenerator& g) {
  std::vector<std::string> errors;
  const size_t n = g.curves.size();
  if (n % 2 != 0) errors.push_back("odd number of curve slots");
  if (g.pairing.size() * 2 != n) errors.push_back("pairing does not cover the slots once");
  std::vector<char> seen(n, 0);
  for (const auto& [a, b] : g.pairing) {
    if (a < 0 || b < 0 || a >= (int)n || b >= (int)n || a == b) {
      errors.push_back("pairing entry out of range");
      continue;
    }
    if (seen[a] || seen[b]) errors.push_back("half edge paired twice");
    seen[a] = seen[b] = 1;
  }
  for (size_t h = 0; h < n; ++h) {
    const auto curve_errors = validate_chain(g.curves[h]);
    for (const auto& e : curve_errors)
      errors.push_back("curve " + std::to_string(h) + ": " + e);
    if (g.curves[h].ambient != g.ambient)
      errors.push_back("curve " + std::to_string(h) + ": ambient mismatch");
  }
  if (!errors.empty()) return errors;
  for (const auto& [a, b] : g.pairing)
    if (!are_disjoint(g.curves[a], g.curves[b]))
      errors.push_back("paired curves " + std::to_string(a) + "," + std::to_string(b) +
                       " intersect");
  if (!g.curves.empty()) {
    const auto cls = homology_class(g.curves[0]);
    for (size_t h = 1; h < n; ++h)
      if (homology_class(g.curves[h]) != cls)
        errors.push_back("curve " + std::to_string(h) + " has a different homology class");
  }
  return errors;
}

std::vector<Rat> generator_class(const NiceGenerator& g) {
  if (g.curves.empty()) return {};
  return homology_class(g.curves[0]);
}

MultiCurveChain to_nice_cycle(const NiceGenerator& g) {
  const auto errors = validate_generator(g);
  if (!errors.empty()) throw std::invalid_argument("nice generator: " + errors.front());
  std::vector<OneChain> ordered;
  ordered.reserve(g.curves.size());
  for (const auto& [a, b] : g.pairing) {
    ordered.push_back(g.curves[a]);
    ordered.push_back(g.curves[b]);
  }
  return make_nice_cycle(ordered, g.ambient);
}

bool is_nice(const MultiCurveChain& c) {
  if (c.version != ChainVersion::Second) return false;
  for (const auto& [key, cells] : c.second_entries)
    if (key.sig.size() > 1 && !cells.empty()) return false;
  return true;
}

MultiCurveChain spread_nice(int k, int degree, const CellSum& base) {
  if (k < 0) throw std::invalid_argument("spread_nice: negative slot count");
  MultiCurveChain out;
  out.version = ChainVersion::Second;
  out.degree = degree;
  const CellSum inv = symmetrize_sum(base, signature_group(SigKey{k, {0}}));
  for (int j = 0; j <= k; ++j) {
    const Rat w = Rat(binomial(k, j));
    for (const auto& [ck, wc] : inv)
      insert_second(out, SigKey{k, {j}}, w * wc.coeff, wc.cell);
  }
  return out;
}

MultiCurveChain make_nice_cycle(const std::vector<OneChain>& curves, AmbientSpace ambient) {
  if (curves.size() % 2 != 0)
    throw std::invalid_argument("make_nice_cycle: odd number of half edge slots");
  const int k = (int)curves.size() / 2;
  for (int e = 0; e < k; ++e)
    if (!are_disjoint(curves[2 * e], curves[2 * e + 1]))
      throw transversality_error("make_nice_cycle: sigma pair " + std::to_string(e) +
                                 " is not disjoint");
  CellSum base;
  add_weighted(base, Rat(1), std::make_shared<ProductCurveCell>(ambient, curves));
  return spread_nice(k, 0, base);
}

MultiCurveChain make_nice_sweep(const Isotopy& iso) {
  CellSum base;
  add_weighted(base, Rat(1), std::make_shared<SweepCell>(iso));
  const int k = iso.num_half_edges() / 2;
  return spread_nice(k, 1, base);
}

}  // namespace mch

#include "mch/multilink.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "mch/crossing.hpp"
#include "mch/differentials.hpp"
#include "mch/linking.hpp"
#include "mch/nice_generator.hpp"
#include "mch/product_cell.hpp"
#include "mch/sweep_cell.hpp"

namespace mch {

namespace {

std::vector<std::pair<int, int>> sigma_pairs(int k) {
  std::vector<std::pair<int, int>> out;
  out.reserve(k);
  for (int e = 0; e < k; ++e) out.emplace_back(2 * e, 2 * e + 1);
  return out;
}

}  // namespace

Rat point_boundary(const PointChain& p) {
  if (p.degree != 1) throw std::invalid_argument("point_boundary needs a degree 1 chain");
  Rat total = p.end - p.start;
  for (const auto& j : p.jumps) total -= j.jump;
  return total;
}

Rat multilink_value(const std::vector<OneChain>& curves, AmbientSpace ambient) {
  (void)ambient;
  if (curves.size() % 2 != 0)
    throw std::invalid_argument("multilink_value: odd number of half edge slots");
  Rat value(1);
  for (size_t e = 0; 2 * e < curves.size(); ++e)
    value *= linking_number(curves[2 * e], curves[2 * e + 1]);
  return value;
}

Rat multilink(const MultiCurveChain& z) {
  if (z.version != ChainVersion::Second)
    throw std::invalid_argument("multilink needs a signature chain");
  if (z.degree != 0) throw std::invalid_argument("multilink needs a degree 0 chain");
  if (!is_nice(z)) throw std::invalid_argument("multilink needs a nice chain");
  Rat total(0);
  for (const auto& [key, cells] : z.second_entries) {
    if (key.sig != std::vector<int>{0}) continue;
    for (const auto& [ck, wc] : cells) {
      const auto* prod = dynamic_cast<const ProductCurveCell*>(wc.cell.get());
      if (!prod) throw std::invalid_argument("multilink needs curve product cells");
      total += wc.coeff * multilink_value(prod->curves(), prod->ambient());
    }
  }
  return total;
}

Rat multilink(const NiceGenerator& g) {
  const auto errors = validate_generator(g);
  if (!errors.empty()) throw std::invalid_argument("multilink: " + errors.front());
  for (const Rat& c : generator_class(g))
    if (c != 0) throw std::invalid_argument("multilink needs a rationally trivial class");
  Rat value(1);
  for (const auto& [a, b] : g.pairing) value *= linking_number(g.curves[a], g.curves[b]);
  return value;
}

PointChain multilink_track(const MultiCurveChain& b) {
  if (b.version != ChainVersion::Second)
    throw std::invalid_argument("multilink_track needs a signature chain");
  if (b.degree != 1) throw std::invalid_argument("multilink_track needs a degree 1 chain");
  if (!is_nice(b)) throw std::invalid_argument("multilink_track needs a nice chain");
  PointChain track;
  track.degree = 1;
  for (const auto& [key, cells] : b.second_entries) {
    if (key.sig != std::vector<int>{0}) continue;
    const int k = key.k;
    for (const auto& [ck, wc] : cells) {
      const auto* sweep = dynamic_cast<const SweepCell*>(wc.cell.get());
      if (!sweep) throw std::invalid_argument("multilink_track needs sweep cells");
      const Isotopy& iso = sweep->isotopy();
      track.start += wc.coeff * multilink_value(iso.frames.front(), iso.ambient);
      track.end += wc.coeff * multilink_value(iso.frames.back(), iso.ambient);
      for (const auto& ev : crossing_events(iso, sigma_pairs(k))) {
        const Rat mid = (ev.t_lo + ev.t_hi) / 2;
        const auto config = frame_at(iso, mid);
        const Rat chain_jump = Rat(ev.jump) *
                               config[2 * ev.edge].terms[ev.term_a].coeff *
                               config[2 * ev.edge + 1].terms[ev.term_b].coeff;
        Rat others(1);
        for (int q = 0; q < k; ++q) {
          if (q == ev.edge) continue;
          others *= linking_number(config[2 * q], config[2 * q + 1]);
        }
        track.jumps.push_back({mid, wc.coeff * chain_jump * others});
      }
    }
  }
  std::sort(track.jumps.begin(), track.jumps.end(),
            [](const PointChain::Jump& a, const PointChain::Jump& b) { return a.t < b.t; });
  // The slot symmetrization visits every crossing once per flip image; the
  // images share the certified time, so they merge into one jump.
  std::vector<PointChain::Jump> merged;
  for (const auto& j : track.jumps) {
    if (!merged.empty() && merged.back().t == j.t)
      merged.back().jump += j.jump;
    else
      merged.push_back(j);
  }
  std::erase_if(merged, [](const PointChain::Jump& j) { return j.jump == 0; });
  track.jumps = std::move(merged);
  return track;
}

MultiCurveChain hnul_element(const Isotopy& iso) {
  const auto errs = validate_isotopy(iso);
  if (!errs.empty()) throw std::invalid_argument("hnul_element: " + errs.front());
  const int k = iso.num_half_edges() / 2;
  MultiCurveChain out = make_nice_cycle(iso.frames.back(), iso.ambient);
  out = chain_add(out, make_nice_cycle(iso.frames.front(), iso.ambient), Rat(-1));
  for (const auto& ev : crossing_events(iso, sigma_pairs(k))) {
    const Rat mid = (ev.t_lo + ev.t_hi) / 2;
    const auto config = frame_at(iso, mid);
    const Rat chain_jump = Rat(ev.jump) *
                           config[2 * ev.edge].terms[ev.term_a].coeff *
                           config[2 * ev.edge + 1].terms[ev.term_b].coeff;
    std::vector<OneChain> remaining;
    remaining.reserve(2 * (k - 1));
    for (int h = 0; h < 2 * k; ++h)
      if (h != 2 * ev.edge && h != 2 * ev.edge + 1) remaining.push_back(config[h]);
    out = chain_add(out, make_nice_cycle(remaining, iso.ambient), -chain_jump);
  }
  return out;
}

ChainMapCheck verify_chain_map(const Isotopy& iso) {
  const MultiCurveChain sweep = make_nice_sweep(iso);
  ChainMapCheck check;
  check.lhs = point_boundary(multilink_track(sweep));
  MultiCurveChain bh = boundary_hat(sweep);
  // The filtration part lands outside the nice range and does not feed the
  // link product; drop it so the degree 0 read-off applies.
  for (auto it = bh.second_entries.begin(); it != bh.second_entries.end();) {
    if (it->first.sig.size() > 1)
      it = bh.second_entries.erase(it);
    else
      ++it;
  }
  check.rhs = multilink(bh);
  check.ok = check.lhs == check.rhs;
  return check;
}

}  // namespace mch

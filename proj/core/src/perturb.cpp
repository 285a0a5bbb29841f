#include "mch/perturb.hpp"

#include <stdexcept>

#include "mch/errors.hpp"

namespace mch {

Isotopy perturb_off_diagonal(const std::vector<OneChain>& config,
                             const std::vector<std::pair<int, int>>& sigma_pairs,
                             const Rat& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (config.empty()) throw std::invalid_argument("empty configuration");
  AmbientSpace ambient = config.front().ambient;
  for (size_t h = 0; h < config.size(); ++h) {
    if (config[h].ambient != ambient) throw std::invalid_argument("ambient space mismatch");
    for (const auto& e : validate_chain(config[h]))
      throw std::invalid_argument("half edge " + std::to_string(h) + ": " + e);
  }
  std::vector<char> used(config.size(), 0);
  for (auto [h0, h1] : sigma_pairs) {
    if (h0 < 0 || h1 < 0 || h0 >= static_cast<int>(config.size()) ||
        h1 >= static_cast<int>(config.size()) || h0 == h1)
      throw std::invalid_argument("sigma pair out of range");
    if (used[h0] || used[h1]) throw std::invalid_argument("half edge used in two sigma pairs");
    used[h0] = used[h1] = 1;
  }

  // Fixed generic-looking directions, cycled by pair index.
  const std::vector<Vec3> dirs = {
      {Rat(1), rat(1, 3), rat(1, 7)},  {rat(1, 2), Rat(1), rat(1, 5)},
      {rat(1, 5), rat(1, 2), Rat(1)},  {Rat(1), rat(2, 7), rat(3, 11)},
      {rat(3, 5), rat(5, 7), Rat(1)},
  };

  std::vector<OneChain> moved = config;
  for (size_t j = 0; j < sigma_pairs.size(); ++j) {
    auto [h0, h1] = sigma_pairs[j];
    if (are_disjoint(moved[h0], moved[h1])) continue;
    const Vec3& dir = dirs[j % dirs.size()];
    bool ok = false;
    for (int attempt = 0; attempt < 32 && !ok; ++attempt) {
      Rat scale = epsilon / (Int(1) << (1 + static_cast<int>(j) + attempt));
      OneChain candidate = moved[h1];
      for (auto& term : candidate.terms) term.loop = translate(term.loop, scale * dir);
      if (are_disjoint(moved[h0], candidate)) {
        moved[h1] = std::move(candidate);
        ok = true;
      }
    }
    if (!ok)
      throw transversality_error("perturbation budget exhausted for sigma pair " +
                                 std::to_string(j));
  }

  Isotopy iso;
  iso.ambient = ambient;
  iso.times = {Rat(0), Rat(1)};
  iso.frames = {config, moved};
  return iso;
}

}  // namespace mch

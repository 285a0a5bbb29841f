#include "mch/nicify.hpp"

#include <stdexcept>

#include "mch/differentials.hpp"
#include "mch/errors.hpp"
#include "mch/nice_generator.hpp"

namespace mch {

namespace {

constexpr int kMaxSlots = 3;  // configuration limit of the constructive procedure

}  // namespace

NicifyResult nicify(const MultiCurveChain& z) {
  if (z.version != ChainVersion::Second)
    throw std::invalid_argument("nicify needs a signature chain");
  if (z.degree != 0) throw std::invalid_argument("nicify needs a degree 0 chain");
  const auto errs = validate_chain_structure(z);
  if (!errs.empty()) throw std::invalid_argument("nicify: " + errs.front());
  int max_k = 0;
  for (const auto& [key, cells] : z.second_entries) {
    if (cells.empty()) continue;
    if (key.sig.size() > 2)
      throw std::invalid_argument(
          "nicify: entries above filtration length one are outside the cell model");
    max_k = std::max(max_k, key.k);
  }
  if (max_k > kMaxSlots)
    throw std::invalid_argument("nicify: more edge slots than the configuration limit");
  if (!chain_is_zero(boundary_hat(z)))
    throw std::invalid_argument("nicify needs an exact cycle");

  NicifyResult result;
  result.bounding.version = ChainVersion::Second;
  result.bounding.degree = 1;
  result.nice = z;

  for (int level = max_k; level >= 1; --level) {
    // Copy the (j, level) layer of the current chain onto the length-one
    // slots (j); the two groups coincide, so invariance carries over.
    MultiCurveChain b;
    b.version = ChainVersion::Second;
    b.degree = 1;
    for (const auto& [key, cells] : result.nice.second_entries) {
      if (key.k != level || key.sig.size() != 2 || key.sig[1] != level) continue;
      for (const auto& [ck, wc] : cells)
        insert_second(b, SigKey{level, {key.sig[0]}}, wc.coeff, wc.cell);
    }
    if (b.second_entries.empty()) continue;
    MultiCurveChain db;
    try {
      db = boundary_hat(b);
    } catch (const transversality_error& e) {
      throw std::runtime_error(
          std::string("nicify: bounding chain not transversal; outside constructive scope (") +
          e.what() + ")");
    }
    result.nice = chain_add(result.nice, db);
    result.bounding = chain_add(result.bounding, b);
  }

  if (!is_nice(result.nice))
    throw std::logic_error("nicify: residual entries above filtration length zero");
  return result;
}

}  // namespace mch

#include "mch/cell.hpp"

#include <stdexcept>

namespace mch {

EdgeRelabeling EdgeRelabeling::identity(int k) {
  EdgeRelabeling r;
  r.edge_perm.resize(k);
  for (int e = 0; e < k; ++e) r.edge_perm[e] = e;
  r.flip.assign(k, 0);
  return r;
}

bool EdgeRelabeling::is_identity() const {
  for (size_t e = 0; e < edge_perm.size(); ++e)
    if (edge_perm[e] != static_cast<int>(e) || flip[e]) return false;
  return true;
}

int EdgeRelabeling::torsor_sign() const {
  int sign = 1;
  for (char f : flip)
    if (f) sign = -sign;
  return sign;
}

EdgeRelabeling EdgeRelabeling::compose(const EdgeRelabeling& inner) const {
  if (edge_perm.size() != inner.edge_perm.size())
    throw std::invalid_argument("edge relabeling size mismatch");
  EdgeRelabeling out;
  size_t k = edge_perm.size();
  out.edge_perm.resize(k);
  out.flip.resize(k);
  for (size_t e = 0; e < k; ++e) {
    out.edge_perm[e] = edge_perm[inner.edge_perm[e]];
    out.flip[e] = static_cast<char>(inner.flip[e] ^ flip[inner.edge_perm[e]]);
  }
  return out;
}

}  // namespace mch

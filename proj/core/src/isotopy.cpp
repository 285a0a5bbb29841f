#include "mch/isotopy.hpp"

#include <stdexcept>

namespace mch {

std::vector<std::string> validate_isotopy(const Isotopy& iso) {
  std::vector<std::string> errors;
  if (iso.times.size() < 2) errors.push_back("isotopy needs at least two keyframes");
  if (!iso.times.empty() && iso.times.front() != 0) errors.push_back("first keyframe must be at t=0");
  if (!iso.times.empty() && iso.times.back() != 1) errors.push_back("last keyframe must be at t=1");
  for (size_t i = 0; i + 1 < iso.times.size(); ++i)
    if (iso.times[i] >= iso.times[i + 1]) {
      errors.push_back("keyframe times must be strictly increasing");
      break;
    }
  if (iso.frames.size() != iso.times.size())
    errors.push_back("one frame required per keyframe time");
  if (!errors.empty()) return errors;

  const auto& first = iso.frames.front();
  for (size_t i = 0; i < iso.frames.size(); ++i) {
    const auto& frame = iso.frames[i];
    if (frame.size() != first.size()) {
      errors.push_back("frames must have equal half edge counts");
      return errors;
    }
    for (size_t h = 0; h < frame.size(); ++h) {
      if (frame[h].ambient != iso.ambient) {
        errors.push_back("frame chain ambient mismatch");
        return errors;
      }
      for (const auto& e : validate_chain(frame[h]))
        errors.push_back("frame " + std::to_string(i) + " half edge " + std::to_string(h) + ": " + e);
      if (frame[h].terms.size() != first[h].terms.size()) {
        errors.push_back("loop term counts must be constant in time");
        return errors;
      }
      for (size_t l = 0; l < frame[h].terms.size(); ++l) {
        const auto& cur = frame[h].terms[l];
        const auto& ref = first[h].terms[l];
        if (cur.coeff != ref.coeff) errors.push_back("loop coefficients must be constant in time");
        if (cur.loop.vertices.size() != ref.loop.vertices.size())
          errors.push_back("loop vertex counts must be constant in time");
        if (cur.loop.translations != ref.loop.translations)
          errors.push_back("deck translations must be constant in time");
        if (!errors.empty()) return errors;
      }
    }
  }
  return errors;
}

std::vector<OneChain> frame_at(const Isotopy& iso, const Rat& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("isotopy time outside [0, 1]");
  size_t i = 0;
  while (i + 2 < iso.times.size() && t >= iso.times[i + 1]) ++i;
  const Rat& t0 = iso.times[i];
  const Rat& t1 = iso.times[i + 1];
  Rat lam = (t - t0) / (t1 - t0);
  std::vector<OneChain> out = iso.frames[i];
  const auto& next = iso.frames[i + 1];
  for (size_t h = 0; h < out.size(); ++h)
    for (size_t l = 0; l < out[h].terms.size(); ++l) {
      auto& verts = out[h].terms[l].loop.vertices;
      const auto& nverts = next[h].terms[l].loop.vertices;
      for (size_t v = 0; v < verts.size(); ++v)
        verts[v] = verts[v] + lam * (nverts[v] - verts[v]);
    }
  return out;
}

Rat max_speed_l1(const Isotopy& iso, int half_edge) {
  Rat best = 0;
  for (size_t i = 0; i + 1 < iso.times.size(); ++i) {
    Rat dt = iso.times[i + 1] - iso.times[i];
    const auto& cur = iso.frames[i][half_edge];
    const auto& nxt = iso.frames[i + 1][half_edge];
    for (size_t l = 0; l < cur.terms.size(); ++l) {
      const auto& a = cur.terms[l].loop.vertices;
      const auto& b = nxt.terms[l].loop.vertices;
      for (size_t v = 0; v < a.size(); ++v) {
        Vec3 d = b[v] - a[v];
        Rat l1 = rat_abs(d[0]) + rat_abs(d[1]) + rat_abs(d[2]);
        best = std::max(best, Rat(l1 / dt));
      }
    }
  }
  return best;
}

}  // namespace mch

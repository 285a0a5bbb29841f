#include "mch/pl_loop.hpp"

#include <algorithm>
#include <stdexcept>

namespace mch {

namespace {

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

Vec3 shifted(const Vec3& p, const IVec3& w) {
  return {p[0] + w[0], p[1] + w[1], p[2] + w[2]};
}

Seg shifted(const Seg& s, const IVec3& w) { return {shifted(s.a, w), shifted(s.b, w)}; }

struct Box {
  Vec3 lo, hi;
};

Box box_of(const Seg& s) {
  Box b;
  for (int i = 0; i < 3; ++i) {
    b.lo[i] = std::min(s.a[i], s.b[i]);
    b.hi[i] = std::max(s.a[i], s.b[i]);
  }
  return b;
}

bool point_on_segment(const Vec3& p, const Seg& s) {
  Vec3 u = s.b - s.a;
  Vec3 d = p - s.a;
  if (!is_zero(cross(d, u))) return false;
  if (is_zero(u)) return is_zero(d);
  Rat t = dot(d, u) / dot(u, u);
  return t >= 0 && t <= 1;
}

}  // namespace

std::vector<Seg> lift_segments(const PLLoop& loop) {
  size_t n = loop.vertices.size();
  std::vector<Seg> out;
  out.reserve(n);
  IVec3 shift = {0, 0, 0};
  for (size_t i = 0; i < n; ++i) {
    Vec3 start = shifted(loop.vertices[i], shift);
    if (!loop.translations.empty())
      for (int d = 0; d < 3; ++d) shift[d] += loop.translations[i][d];
    Vec3 end = shifted(loop.vertices[(i + 1) % n], shift);
    out.push_back({start, end});
  }
  return out;
}

IVec3 total_translation(const PLLoop& loop) {
  IVec3 w = {0, 0, 0};
  for (const auto& t : loop.translations)
    for (int d = 0; d < 3; ++d) w[d] += t[d];
  return w;
}

std::vector<std::string> validate_loop(const PLLoop& loop, AmbientSpace ambient) {
  std::vector<std::string> errors;
  if (loop.vertices.empty()) {
    errors.push_back("loop has no vertices");
    return errors;
  }
  if (ambient == AmbientSpace::R3) {
    if (!loop.translations.empty()) errors.push_back("translations are only valid in T3");
    if (loop.vertices.size() < 3) errors.push_back("closed loop in R3 needs at least 3 vertices");
  } else {
    if (!loop.translations.empty() && loop.translations.size() != loop.vertices.size())
      errors.push_back("translations must have one entry per segment");
  }
  if (errors.empty())
    for (const Seg& s : lift_segments(loop))
      if (s.a == s.b) {
        errors.push_back("zero length segment");
        break;
      }
  return errors;
}

std::vector<std::string> validate_chain(const OneChain& chain) {
  std::vector<std::string> errors;
  for (size_t i = 0; i < chain.terms.size(); ++i)
    for (const auto& e : validate_loop(chain.terms[i].loop, chain.ambient))
      errors.push_back("term " + std::to_string(i) + ": " + e);
  return errors;
}

std::vector<std::int64_t> homology_class(const PLLoop& loop, AmbientSpace ambient) {
  if (ambient == AmbientSpace::R3) return {};
  IVec3 w = total_translation(loop);
  return {w[0], w[1], w[2]};
}

std::vector<Rat> homology_class(const OneChain& chain) {
  if (chain.ambient == AmbientSpace::R3) return {};
  std::vector<Rat> out(3, Rat(0));
  for (const auto& term : chain.terms) {
    IVec3 w = total_translation(term.loop);
    for (int d = 0; d < 3; ++d) out[d] += term.coeff * Rat(w[d]);
  }
  return out;
}

PLLoop translate(const PLLoop& loop, const Vec3& shift) {
  PLLoop out = loop;
  for (auto& v : out.vertices) v = v + shift;
  return out;
}

bool segments_intersect(const Seg& s, const Seg& t) {
  Vec3 u = s.b - s.a;
  Vec3 v = t.b - t.a;
  Vec3 d = t.a - s.a;
  Vec3 n = cross(u, v);
  if (!is_zero(n)) {
    if (dot(d, n) != 0) return false;  // skew
    Rat nn = dot(n, n);
    Rat alpha = dot(cross(d, v), n) / nn;
    Rat beta = dot(cross(d, u), n) / nn;
    return alpha >= 0 && alpha <= 1 && beta >= 0 && beta <= 1;
  }
  // Parallel or degenerate.
  if (is_zero(u)) return point_on_segment(s.a, t);
  if (is_zero(v)) return point_on_segment(t.a, s);
  if (!is_zero(cross(d, u))) return false;  // parallel, distinct lines
  Rat uu = dot(u, u);
  Rat a0 = dot(d, u) / uu;
  Rat a1 = dot(t.b - s.a, u) / uu;
  if (a0 > a1) std::swap(a0, a1);
  return a1 >= 0 && a0 <= 1;
}

SegClosest segment_closest(const Seg& s, const Seg& t) {
  Vec3 u = s.b - s.a;
  Vec3 v = t.b - t.a;
  Vec3 d0 = s.a - t.a;
  Rat a = dot(u, u), b = dot(u, v), c = dot(v, v);
  Rat d = dot(u, d0), e = dot(v, d0);

  auto clamp01 = [](const Rat& x) {
    if (x < 0) return Rat(0);
    if (x > 1) return Rat(1);
    return x;
  };
  auto value = [&](const Rat& alpha, const Rat& beta) {
    Vec3 w = d0 + (alpha * u) - (beta * v);
    return dot(w, w);
  };

  std::vector<std::pair<Rat, Rat>> candidates;
  Rat denom = a * c - b * b;
  if (denom != 0) {
    Rat alpha = (b * e - c * d) / denom;
    Rat beta = (a * e - b * d) / denom;
    if (alpha >= 0 && alpha <= 1 && beta >= 0 && beta <= 1) candidates.emplace_back(alpha, beta);
  }
  // Box edge minimizers of the convex quadratic.
  for (int fixed_beta = 0; fixed_beta <= 1; ++fixed_beta) {
    Rat beta(fixed_beta);
    Rat alpha = (a == 0) ? Rat(0) : clamp01((b * beta - d) / a);
    candidates.emplace_back(alpha, beta);
  }
  for (int fixed_alpha = 0; fixed_alpha <= 1; ++fixed_alpha) {
    Rat alpha(fixed_alpha);
    Rat beta = (c == 0) ? Rat(0) : clamp01((b * alpha + e) / c);
    candidates.emplace_back(alpha, beta);
  }
  SegClosest best{value(candidates.front().first, candidates.front().second),
                  candidates.front().first, candidates.front().second};
  for (size_t i = 1; i < candidates.size(); ++i) {
    Rat val = value(candidates[i].first, candidates[i].second);
    if (val < best.dist2) best = {val, candidates[i].first, candidates[i].second};
  }
  return best;
}

Rat segment_dist2(const Seg& s, const Seg& t) { return segment_closest(s, t).dist2; }

bool are_disjoint(const PLLoop& a, const PLLoop& b, AmbientSpace ambient) {
  std::vector<Seg> sa = lift_segments(a);
  std::vector<Seg> sb = lift_segments(b);
  if (ambient == AmbientSpace::R3) {
    for (const Seg& x : sa)
      for (const Seg& y : sb)
        if (segments_intersect(x, y)) return false;
    return true;
  }
  for (const Seg& x : sa) {
    Box bx = box_of(x);
    for (const Seg& y : sb) {
      Box by = box_of(y);
      std::int64_t lo[3], hi[3];
      for (int d = 0; d < 3; ++d) {
        lo[d] = rat_ceil(bx.lo[d] - by.hi[d]).convert_to<std::int64_t>();
        hi[d] = rat_floor(bx.hi[d] - by.lo[d]).convert_to<std::int64_t>();
      }
      for (std::int64_t w0 = lo[0]; w0 <= hi[0]; ++w0)
        for (std::int64_t w1 = lo[1]; w1 <= hi[1]; ++w1)
          for (std::int64_t w2 = lo[2]; w2 <= hi[2]; ++w2)
            if (segments_intersect(x, shifted(y, IVec3{w0, w1, w2}))) return false;
    }
  }
  return true;
}

bool are_disjoint(const OneChain& a, const OneChain& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("ambient space mismatch");
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      if (!are_disjoint(ta.loop, tb.loop, a.ambient)) return false;
  return true;
}

}  // namespace mch

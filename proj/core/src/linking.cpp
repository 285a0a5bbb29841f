#include "mch/linking.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "mch/errors.hpp"

namespace mch {

namespace {

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

struct Vec2 {
  Rat x, y;
};

Rat cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Vec2 sub2(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

struct ProjSeg {
  Vec2 p0, p1;  // projected endpoints
  Rat z0, z1;   // heights along the projection direction
};

// Frame with positive determinant whose third row is the projection
// direction: det[r1; r2; dir] = |r1|^2 |dir|^2 > 0.
struct Frame {
  Vec3 r1, r2, dir;
};

Frame make_frame(const Vec3& dir) {
  Vec3 axis = {1, 0, 0};
  if (is_zero(cross(dir, axis))) axis = {0, 1, 0};
  Frame f;
  f.r1 = cross(dir, axis);
  f.r2 = cross(dir, f.r1);
  f.dir = dir;
  return f;
}

// nullopt: the direction is non-generic for this pair, try the next one.
std::optional<std::int64_t> try_direction(const std::vector<Seg>& sa, const std::vector<Seg>& sb,
                                          const Vec3& dir) {
  Frame f = make_frame(dir);
  auto project = [&](const std::vector<Seg>& segs, std::vector<ProjSeg>& out) {
    out.clear();
    for (const Seg& s : segs) {
      ProjSeg p;
      p.p0 = {dot(f.r1, s.a), dot(f.r2, s.a)};
      p.p1 = {dot(f.r1, s.b), dot(f.r2, s.b)};
      p.z0 = dot(f.dir, s.a);
      p.z1 = dot(f.dir, s.b);
      if (p.p0.x == p.p1.x && p.p0.y == p.p1.y) return false;  // segment parallel to dir
      out.push_back(p);
    }
    return true;
  };
  std::vector<ProjSeg> pa, pb;
  if (!project(sa, pa) || !project(sb, pb)) return std::nullopt;

  std::int64_t a_over_b = 0, b_over_a = 0;
  for (const ProjSeg& A : pa)
    for (const ProjSeg& B : pb) {
      Vec2 u = sub2(A.p1, A.p0);
      Vec2 v = sub2(B.p1, B.p0);
      Vec2 w = sub2(B.p0, A.p0);
      Rat denom = cross2(u, v);
      if (denom == 0) {
        if (cross2(w, u) != 0) continue;  // parallel, distinct lines
        // Collinear projections: any closed overlap is non-generic.
        Rat uu = u.x * u.x + u.y * u.y;
        Rat t0 = (w.x * u.x + w.y * u.y) / uu;
        Vec2 w1 = sub2(B.p1, A.p0);
        Rat t1 = (w1.x * u.x + w1.y * u.y) / uu;
        if (t0 > t1) std::swap(t0, t1);
        if (t1 >= 0 && t0 <= 1) return std::nullopt;
        continue;
      }
      Rat s = cross2(w, v) / denom;
      Rat t = cross2(w, u) / denom;
      if (s < 0 || s > 1 || t < 0 || t > 1) continue;
      if (s == 0 || s == 1 || t == 0 || t == 1) return std::nullopt;  // endpoint hit
      Rat za = A.z0 + s * (A.z1 - A.z0);
      Rat zb = B.z0 + t * (B.z1 - B.z0);
      if (za == zb)
        throw std::logic_error("projected crossing with equal heights on disjoint loops");
      // Crossing sign: det of (over tangent, under tangent).
      int sgn = denom > 0 ? 1 : -1;
      if (za > zb)
        a_over_b += sgn;
      else
        b_over_a -= sgn;
    }
  if (a_over_b != b_over_a) return std::nullopt;
  return a_over_b;
}

std::int64_t linking_r3(const std::vector<Seg>& sa, const std::vector<Seg>& sb) {
  std::vector<Vec3> dirs;
  dirs.push_back({0, 0, 1});
  dirs.push_back({1, 2, 3});
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                         71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                         151, 157, 163})
    dirs.push_back({1, Rat(p), Rat(p * p)});
  for (const Vec3& dir : dirs) {
    auto lk = try_direction(sa, sb, dir);
    if (lk) return *lk;
  }
  throw std::runtime_error("no generic projection direction found");
}

struct Box3 {
  Vec3 lo, hi;
};

Box3 box_of(const std::vector<Seg>& segs) {
  Box3 b{segs.front().a, segs.front().a};
  for (const Seg& s : segs)
    for (int d = 0; d < 3; ++d) {
      b.lo[d] = std::min({b.lo[d], s.a[d], s.b[d]});
      b.hi[d] = std::max({b.hi[d], s.a[d], s.b[d]});
    }
  return b;
}

std::vector<Seg> shift_segs(const std::vector<Seg>& segs, const IVec3& w) {
  std::vector<Seg> out = segs;
  for (Seg& s : out)
    for (int d = 0; d < 3; ++d) {
      s.a[d] += w[d];
      s.b[d] += w[d];
    }
  return out;
}

}  // namespace

std::int64_t linking_number(const PLLoop& a, const PLLoop& b, AmbientSpace ambient) {
  for (const auto& e : validate_loop(a, ambient)) throw std::invalid_argument("loop a: " + e);
  for (const auto& e : validate_loop(b, ambient)) throw std::invalid_argument("loop b: " + e);
  auto wa = homology_class(a, ambient);
  auto wb = homology_class(b, ambient);
  for (auto v : wa)
    if (v != 0) throw std::invalid_argument("loop a is not null-homologous");
  for (auto v : wb)
    if (v != 0) throw std::invalid_argument("loop b is not null-homologous");
  if (!are_disjoint(a, b, ambient)) throw transversality_error("loops intersect");

  std::vector<Seg> sa = lift_segments(a);
  std::vector<Seg> sb = lift_segments(b);
  if (ambient == AmbientSpace::R3) return linking_r3(sa, sb);

  // Zero winding makes both lifts closed; translates with separated hulls
  // cannot link, so only box-overlapping deck shifts contribute.
  Box3 ba = box_of(sa);
  Box3 bb = box_of(sb);
  std::int64_t lo[3], hi[3];
  for (int d = 0; d < 3; ++d) {
    lo[d] = rat_ceil(ba.lo[d] - bb.hi[d]).convert_to<std::int64_t>();
    hi[d] = rat_floor(ba.hi[d] - bb.lo[d]).convert_to<std::int64_t>();
  }
  std::int64_t total = 0;
  for (std::int64_t w0 = lo[0]; w0 <= hi[0]; ++w0)
    for (std::int64_t w1 = lo[1]; w1 <= hi[1]; ++w1)
      for (std::int64_t w2 = lo[2]; w2 <= hi[2]; ++w2)
        total += linking_r3(sa, shift_segs(sb, IVec3{w0, w1, w2}));
  return total;
}

Rat linking_number(const OneChain& a, const OneChain& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("ambient space mismatch");
  for (const auto& e : validate_chain(a)) throw std::invalid_argument("chain a: " + e);
  for (const auto& e : validate_chain(b)) throw std::invalid_argument("chain b: " + e);
  Rat total = 0;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      total += ta.coeff * tb.coeff * Rat(linking_number(ta.loop, tb.loop, a.ambient));
  return total;
}

}  // namespace mch

#include "mch/fixtures.hpp"

namespace mch {
namespace fixtures {

namespace {

// Ring in the z=0 plane, counterclockwise seen from +z; its disk is the
// square |x|,|y| <= 1. A loop crossing the disk upward links it by +1.
OneChain ring() {
  return square_chain({Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0)},
                      {Rat(0), Rat(1), Rat(0)});
}

// Rectangle in the y=0 plane whose closing segment climbs from (0,0,-1) to
// (0,0,1), through the ring's disk.
OneChain threader() {
  return square_chain({rat(5, 4), Rat(0), Rat(0)}, {rat(-5, 4), Rat(0), Rat(0)},
                      {Rat(0), Rat(0), Rat(1)});
}

Isotopy two_frame_slide(const OneChain& still, const OneChain& moving, const Vec3& from,
                        const Vec3& to) {
  Isotopy iso;
  iso.ambient = AmbientSpace::R3;
  iso.times = {Rat(0), Rat(1)};
  iso.frames = {{still, translate_chain(moving, from)}, {still, translate_chain(moving, to)}};
  return iso;
}

}  // namespace

OneChain square_chain(const Vec3& center, const Vec3& u, const Vec3& v) {
  PLLoop loop;
  loop.vertices = {center + u + v, (center - u) + v, (center - u) - v, (center + u) - v};
  OneChain chain;
  chain.ambient = AmbientSpace::R3;
  chain.terms.push_back({Rat(1), loop});
  return chain;
}

OneChain translate_chain(const OneChain& chain, const Vec3& d) {
  OneChain out = chain;
  for (auto& term : out.terms)
    for (auto& p : term.loop.vertices) p = p + d;
  return out;
}

NiceGenerator hopf_pair() {
  NiceGenerator g;
  g.ambient = AmbientSpace::R3;
  g.pairing = {{0, 1}};
  g.curves = {ring(), threader()};
  return g;
}

NiceGenerator split_pair() {
  NiceGenerator g = hopf_pair();
  g.curves[1] = translate_chain(g.curves[1], {Rat(10), Rat(0), Rat(0)});
  return g;
}

NiceGenerator clasp_pair() {
  // Two circuits of the threading rectangle at y = -1/4 and y = 1/4,
  // connected by bridges that both climb through the ring's disk.
  PLLoop loop;
  const Rat q4 = rat(1, 4);
  loop.vertices = {{Rat(0), -q4, Rat(1)},  {rat(5, 2), -q4, Rat(1)}, {rat(5, 2), -q4, Rat(-1)},
                   {Rat(0), -q4, Rat(-1)}, {rat(1, 2), q4, Rat(1)},  {rat(5, 2), q4, Rat(1)},
                   {rat(5, 2), q4, Rat(-1)}, {rat(3, 4), q4, Rat(-1)}};
  OneChain doubled;
  doubled.ambient = AmbientSpace::R3;
  doubled.terms.push_back({Rat(1), loop});
  NiceGenerator g;
  g.ambient = AmbientSpace::R3;
  g.pairing = {{0, 1}};
  g.curves = {ring(), doubled};
  return g;
}

NiceGenerator clasp_hopf_pair() {
  const NiceGenerator hopf = hopf_pair();
  const NiceGenerator clasp = clasp_pair();
  const Vec3 shift{Rat(0), Rat(10), Rat(0)};
  NiceGenerator g;
  g.ambient = AmbientSpace::R3;
  g.pairing = {{0, 1}, {2, 3}};
  g.curves = {hopf.curves[0], hopf.curves[1], translate_chain(clasp.curves[0], shift),
              translate_chain(clasp.curves[1], shift)};
  return g;
}

NiceGenerator cube_hopf_pair(AmbientSpace ambient) {
  const Rat h = rat(1, 2);
  const Rat s = rat(1, 8);
  OneChain a = square_chain({h, h, h}, {s, Rat(0), Rat(0)}, {Rat(0), s, Rat(0)});
  OneChain b = square_chain({h + rat(5, 32), h, h}, {rat(-5, 32), Rat(0), Rat(0)},
                            {Rat(0), Rat(0), s});
  NiceGenerator g;
  g.ambient = ambient;
  if (ambient == AmbientSpace::T3) {
    for (OneChain* c : {&a, &b}) {
      c->ambient = AmbientSpace::T3;
      for (auto& term : c->terms)
        term.loop.translations.assign(term.loop.vertices.size(), IVec3{0, 0, 0});
    }
  }
  g.pairing = {{0, 1}};
  g.curves = {a, b};
  return g;
}

PLLoop winding_loop(const IVec3& w, const Vec3& p) {
  PLLoop loop;
  loop.vertices = {p};
  loop.translations = {w};
  return loop;
}

Isotopy hopf_pass() {
  return two_frame_slide(ring(), threader(), {Rat(4), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)});
}

Isotopy full_pass() {
  return two_frame_slide(ring(), threader(), {Rat(4), Rat(0), Rat(0)}, {Rat(-4), Rat(0), Rat(0)});
}

Isotopy pass_and_return() {
  const OneChain still = ring();
  const OneChain moving = threader();
  Isotopy iso;
  iso.ambient = AmbientSpace::R3;
  iso.times = {Rat(0), rat(1, 2), Rat(1)};
  const Vec3 out{Rat(4), Rat(0), Rat(0)};
  iso.frames = {{still, translate_chain(moving, out)},
                {still, moving},
                {still, translate_chain(moving, out)}};
  return iso;
}

Isotopy tangency_isotopy() {
  const OneChain still = ring();
  const OneChain moving = threader();
  Isotopy iso;
  iso.ambient = AmbientSpace::R3;
  iso.times = {Rat(0), rat(1, 2), Rat(1)};
  const Vec3 out{Rat(4), Rat(0), Rat(0)};
  const Vec3 touch{Rat(1), Rat(0), Rat(0)};  // the climbing segment meets the ring
  iso.frames = {{still, translate_chain(moving, out)},
                {still, translate_chain(moving, touch)},
                {still, translate_chain(moving, out)}};
  return iso;
}

}  // namespace fixtures
}  // namespace mch

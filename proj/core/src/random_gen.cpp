#include "mch/random_gen.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

#include "mch/differentials.hpp"
#include "mch/fixtures.hpp"
#include "mch/sweep_cell.hpp"
#include "mch/synthetic_cell.hpp"

namespace mch {

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat rand_rat(std::mt19937_64& rng) {
  int p = 0;
  while (p == 0) p = rand_int(rng, -3, 3);
  return rat(p, rand_int(rng, 1, 3));
}

using Mat3 = std::array<std::array<int, 3>, 3>;

Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int t = 0; t < 3; ++t) s += a[i][t] * b[t][j];
      c[i][j] = s;
    }
  return c;
}

// Product of random elementary shears: determinant one, integer entries.
Mat3 random_unimodular(std::mt19937_64& rng) {
  Mat3 u = identity3();
  const int steps = rand_int(rng, 1, 3);
  for (int s = 0; s < steps; ++s) {
    Mat3 e = identity3();
    int i = rand_int(rng, 0, 2);
    int j = rand_int(rng, 0, 2);
    if (i == j) j = (j + 1) % 3;
    int m = 0;
    while (m == 0) m = rand_int(rng, -2, 2);
    e[i][j] = m;
    u = mul(u, e);
  }
  return u;
}

Vec3 mat_mul(const Mat3& m, const Vec3& p) {
  Vec3 out{Rat(0), Rat(0), Rat(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += Rat(m[i][j]) * p[j];
  return out;
}

IVec3 mat_mul(const Mat3& m, const IVec3& w) {
  IVec3 out{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += (std::int64_t)m[i][j] * w[j];
  return out;
}

OneChain transform_chain(const OneChain& c, const Mat3& u, const Vec3& shift) {
  OneChain out = c;
  for (auto& term : out.terms) {
    for (auto& p : term.loop.vertices) p = mat_mul(u, p) + shift;
    for (auto& w : term.loop.translations) w = mat_mul(u, w);
  }
  return out;
}

PLLoop reverse_loop(const PLLoop& l) {
  const int n = (int)l.vertices.size();
  PLLoop out;
  out.vertices.push_back(l.vertices[0]);
  for (int j = 1; j < n; ++j) out.vertices.push_back(l.vertices[n - j]);
  if (!l.translations.empty())
    for (int j = 0; j < n; ++j) {
      const IVec3& w = l.translations[(n - 1 - j) % n];
      out.translations.push_back(IVec3{-w[0], -w[1], -w[2]});
    }
  return out;
}

OneChain reverse_chain(const OneChain& c) {
  OneChain out = c;
  for (auto& term : out.terms) term.loop = reverse_loop(term.loop);
  return out;
}

// Splits a random segment, exactly preserving the loop as a set.
PLLoop subdivide(std::mt19937_64& rng, const PLLoop& l) {
  const int n = (int)l.vertices.size();
  const int i = rand_int(rng, 0, n - 1);
  const Rat s = rat(rand_int(rng, 1, 4), 5);
  const bool torus = !l.translations.empty();
  Vec3 b = l.vertices[(i + 1) % n];
  if (torus) {
    const IVec3& w = l.translations[i];
    b = b + Vec3{Rat(w[0]), Rat(w[1]), Rat(w[2])};
  }
  const Vec3 mid = l.vertices[i] + s * (b - l.vertices[i]);
  PLLoop out = l;
  out.vertices.insert(out.vertices.begin() + i + 1, mid);
  if (torus) {
    out.translations.insert(out.translations.begin() + i, IVec3{0, 0, 0});
    // The original translation now belongs to the second half.
  }
  return out;
}

OneChain subdivide_chain(std::mt19937_64& rng, const OneChain& c) {
  OneChain out = c;
  for (auto& term : out.terms)
    for (int rounds = rand_int(rng, 0, 2); rounds > 0; --rounds)
      term.loop = subdivide(rng, term.loop);
  return out;
}

OneChain scale_chain(const OneChain& c, const Rat& s) {
  OneChain out = c;
  for (auto& term : out.terms) term.coeff *= s;
  return out;
}

std::vector<int> random_signature(std::mt19937_64& rng, int k, int len) {
  std::vector<int> sig;
  for (int i = 0; i < len; ++i) sig.push_back(rand_int(rng, 0, k));
  std::sort(sig.begin(), sig.end());
  return sig;
}

CellPtr random_synthetic(std::mt19937_64& rng, int k, int dim) {
  SyntheticCell::Data d;
  d.k = k;
  d.dim = dim;
  d.flavor = rand_int(rng, 0, 3);
  std::set<int> gens;
  for (int n = rand_int(rng, 0, 3); n > 0; --n) gens.insert(rand_int(rng, 0, 5));
  d.a_gens.assign(gens.begin(), gens.end());
  for (int e = 0; e < k; ++e) {
    d.b_present.push_back((char)rand_int(rng, 0, 1));
    d.tags.push_back(rand_int(rng, 0, 3));
    d.flips.push_back((char)rand_int(rng, 0, 1));
  }
  return std::make_shared<SyntheticCell>(std::move(d));
}

}  // namespace

MultiCurveChain random_second_chain(std::mt19937_64& rng, int max_k, int max_l, int max_d) {
  MultiCurveChain c;
  c.version = ChainVersion::Second;
  c.degree = rand_int(rng, 0, max_d);
  const int slots = rand_int(rng, 1, 3);
  for (int s = 0; s < slots; ++s) {
    const int k = rand_int(rng, 0, max_k);
    const int l = rand_int(rng, 0, max_l);
    SigKey key{k, random_signature(rng, k, l + 1)};
    const int cells = rand_int(rng, 1, 2);
    for (int i = 0; i < cells; ++i)
      insert_second(c, key, rand_rat(rng), random_synthetic(rng, k, c.degree + 2 * k + l));
  }
  return symmetrize(c);
}

MultiCurveChain random_first_chain(std::mt19937_64& rng) {
  MultiCurveChain c;
  c.version = ChainVersion::First;
  c.degree = rand_int(rng, 0, 2);
  const int entries = rand_int(rng, 1, 2);
  for (int s = 0; s < entries; ++s) {
    const int nv = rand_int(rng, 1, 3);
    const int ne = rand_int(rng, 0, 3);
    DecoratedGraph g;
    for (int v = 0; v < nv; ++v) {
      g.vertex_ids.push_back(v);
      GraphVertex gv;
      gv.beta = {rand_int(rng, 0, 2)};
      gv.chi = rand_int(rng, -1, 1);
      gv.n_marked = rand_int(rng, 0, 1);
      g.vertices.push_back(gv);
    }
    std::vector<int> labels(2 * ne);
    for (int h = 0; h < 2 * ne; ++h) labels[h] = h;
    std::shuffle(labels.begin(), labels.end(), rng);
    g.half_edge_labels = labels;
    for (int e = 0; e < ne; ++e) {
      g.sigma.push_back(2 * e + 1);
      g.sigma.push_back(2 * e);
      g.pi.push_back(rand_int(rng, 0, nv - 1));
      g.pi.push_back(rand_int(rng, 0, nv - 1));
    }
    MarkedGraph m;
    m.graph = g;
    const int l = rand_int(rng, 0, 2);
    std::vector<int> pool;
    for (int e = 0; e < ne; ++e) pool.push_back(e);
    std::vector<int> level;
    for (int i = 0; i <= l; ++i) {
      for (int e : pool)
        if (rand_int(rng, 0, 2) == 0 &&
            std::find(level.begin(), level.end(), e) == level.end())
          level.push_back(e);
      std::sort(level.begin(), level.end());
      m.filtration.push_back(level);
    }
    const int dim = c.degree + 2 * ne + (int)m.filtration.size() - 1;
    const int cells = rand_int(rng, 1, 2);
    for (int i = 0; i < cells; ++i)
      insert_first(c, m, rand_rat(rng), random_synthetic(rng, ne, dim));
  }
  return symmetrize(c);
}

LinkedPair random_disjoint_pair(std::mt19937_64& rng) {
  LinkedPair out;
  NiceGenerator base;
  switch (rand_int(rng, 0, 3)) {
    case 0:
      base = fixtures::hopf_pair();
      out.expected_link = Rat(1);
      break;
    case 1:
      base = fixtures::split_pair();
      out.expected_link = Rat(0);
      break;
    case 2:
      base = fixtures::clasp_pair();
      out.expected_link = Rat(2);
      break;
    default:
      base = fixtures::cube_hopf_pair(rand_int(rng, 0, 1) ? AmbientSpace::T3 : AmbientSpace::R3);
      out.expected_link = Rat(1);
      break;
  }
  out.a = base.curves[0];
  out.b = base.curves[1];
  if (base.ambient == AmbientSpace::R3) {
    const Mat3 u = random_unimodular(rng);
    const Vec3 shift{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
    out.a = transform_chain(out.a, u, shift);
    out.b = transform_chain(out.b, u, shift);
  } else {
    const Vec3 shift{rat(rand_int(rng, -2, 2), 2), rat(rand_int(rng, -2, 2), 2),
                     rat(rand_int(rng, -2, 2), 2)};
    out.a = transform_chain(out.a, identity3(), shift);
    out.b = transform_chain(out.b, identity3(), shift);
  }
  out.a = subdivide_chain(rng, out.a);
  out.b = subdivide_chain(rng, out.b);
  if (rand_int(rng, 0, 1)) {
    out.a = reverse_chain(out.a);
    out.expected_link = -out.expected_link;
  }
  if (rand_int(rng, 0, 1)) std::swap(out.a, out.b);  // symmetry of the link
  return out;
}

Isotopy random_isotopy(std::mt19937_64& rng, int max_k) {
  const int k = rand_int(rng, 1, std::max(1, max_k));
  Isotopy base;
  switch (rand_int(rng, 0, 2)) {
    case 0:
      base = fixtures::hopf_pass();
      break;
    case 1:
      base = fixtures::pass_and_return();
      break;
    default:
      base = fixtures::full_pass();
      break;
  }
  const int moving = rand_int(rng, 0, k - 1);
  std::vector<std::vector<OneChain>> statics;  // per static slot: one chain per half edge
  for (int j = 0; j < k; ++j) {
    if (j == moving) {
      statics.emplace_back();
      continue;
    }
    NiceGenerator g;
    switch (rand_int(rng, 0, 2)) {
      case 0:
        g = fixtures::hopf_pair();
        break;
      case 1:
        g = fixtures::split_pair();
        break;
      default:
        g = fixtures::clasp_pair();
        break;
    }
    const Vec3 shift{Rat(0), Rat(20 * (j + 1)), Rat(0)};
    const Rat coeff = Rat(rand_int(rng, 0, 3) == 0 ? -1 : 1) * Rat(rand_int(rng, 0, 2) == 0 ? 2 : 1);
    statics.push_back({scale_chain(fixtures::translate_chain(g.curves[0], shift), coeff),
                       fixtures::translate_chain(g.curves[1], shift)});
  }
  const Mat3 u = random_unimodular(rng);
  const Vec3 shift{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
  Isotopy iso;
  iso.ambient = AmbientSpace::R3;
  iso.times = base.times;
  for (size_t f = 0; f < base.times.size(); ++f) {
    std::vector<OneChain> frame;
    for (int j = 0; j < k; ++j) {
      if (j == moving) {
        frame.push_back(transform_chain(base.frames[f][0], u, shift));
        frame.push_back(transform_chain(base.frames[f][1], u, shift));
      } else {
        frame.push_back(transform_chain(statics[j][0], u, shift));
        frame.push_back(transform_chain(statics[j][1], u, shift));
      }
    }
    iso.frames.push_back(std::move(frame));
  }
  return iso;
}

NicifyFixture random_nicify_input(std::mt19937_64& rng, int max_k) {
  NicifyFixture fx;
  NiceGenerator g;
  switch (rand_int(rng, 0, max_k >= 2 ? 3 : 2)) {
    case 0:
      g = fixtures::hopf_pair();
      break;
    case 1:
      g = fixtures::split_pair();
      break;
    case 2:
      g = fixtures::clasp_pair();
      break;
    default:
      g = fixtures::clasp_hopf_pair();
      break;
  }
  const Mat3 u = random_unimodular(rng);
  const Vec3 shift{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
  for (auto& c : g.curves) c = transform_chain(c, u, shift);
  fx.nice_part = to_nice_cycle(g);

  const Isotopy iso = random_isotopy(rng, max_k);
  const int wk = iso.num_half_edges() / 2;
  MultiCurveChain witness;
  witness.version = ChainVersion::Second;
  witness.degree = 1;
  insert_second(witness, SigKey{wk, {rand_int(rng, 0, wk)}}, rand_rat(rng),
                std::make_shared<SweepCell>(iso));
  witness = symmetrize(witness);

  fx.z = chain_add(fx.nice_part, boundary_hat(witness));
  return fx;
}

}  // namespace mch

#include "mch/crossing.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mch/errors.hpp"
#include "mch/linking.hpp"
#include "mch/product_cell.hpp"

namespace mch {

namespace {

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

std::string rat_str(const Rat& x) { return format_rat(x); }

// Exact squared distance between two loops; for T3 minimized over all deck
// translates that can come within distance threshold (others are farther by
// the bounding box gap).
Rat loops_dist2_within(const PLLoop& a, const PLLoop& b, AmbientSpace ambient,
                       const Rat& threshold) {
  std::vector<Seg> sa = lift_segments(a);
  std::vector<Seg> sb = lift_segments(b);
  Rat best = -1;
  auto consider = [&](const std::vector<Seg>& xs, const std::vector<Seg>& ys) {
    for (const Seg& x : xs)
      for (const Seg& y : ys) {
        Rat d2 = segment_dist2(x, y);
        if (best < 0 || d2 < best) best = d2;
      }
  };
  if (ambient == AmbientSpace::R3) {
    consider(sa, sb);
    return best;
  }
  Vec3 alo = sa.front().a, ahi = sa.front().a, blo = sb.front().a, bhi = sb.front().a;
  auto widen = [](const std::vector<Seg>& segs, Vec3& lo, Vec3& hi) {
    for (const Seg& s : segs)
      for (int d = 0; d < 3; ++d) {
        lo[d] = std::min({lo[d], s.a[d], s.b[d]});
        hi[d] = std::max({hi[d], s.a[d], s.b[d]});
      }
  };
  widen(sa, alo, ahi);
  widen(sb, blo, bhi);
  std::int64_t lo[3], hi[3];
  for (int d = 0; d < 3; ++d) {
    lo[d] = rat_ceil(alo[d] - bhi[d] - threshold).convert_to<std::int64_t>();
    hi[d] = rat_floor(ahi[d] - blo[d] + threshold).convert_to<std::int64_t>();
  }
  for (std::int64_t w0 = lo[0]; w0 <= hi[0]; ++w0)
    for (std::int64_t w1 = lo[1]; w1 <= hi[1]; ++w1)
      for (std::int64_t w2 = lo[2]; w2 <= hi[2]; ++w2) {
        std::vector<Seg> shifted = sb;
        for (Seg& s : shifted)
          for (int d = 0; d < 3; ++d) {
            std::int64_t w = d == 0 ? w0 : (d == 1 ? w1 : w2);
            s.a[d] += w;
            s.b[d] += w;
          }
        consider(sa, shifted);
      }
  // Out-of-range translates are farther than threshold in some axis.
  if (best < 0 || best > threshold * threshold) return threshold * threshold + 1;
  return best;
}

struct PairState {
  const Isotopy* iso = nullptr;
  int h0 = 0, h1 = 0;  // half edges
  int ta = 0, tb = 0;  // loop term indices
  Rat speed_sum;
  std::map<Rat, std::int64_t> memo;
};

PLLoop loop_at(const PairState& st, const Rat& t, int which) {
  auto frame = frame_at(*st.iso, t);
  if (which == 0) return frame[st.h0].terms[st.ta].loop;
  return frame[st.h1].terms[st.tb].loop;
}

// Exact linking at a sample; throws transversality_error if the loops touch.
std::int64_t link_sample(PairState& st, const Rat& t) {
  auto it = st.memo.find(t);
  if (it != st.memo.end()) return it->second;
  std::int64_t lk = linking_number(loop_at(st, t, 0), loop_at(st, t, 1), st.iso->ambient);
  st.memo.emplace(t, lk);
  return lk;
}

// Splitting sample inside (lo, hi) near the midpoint, nudged off any
// intersection instant.
Rat pick_sample(PairState& st, const Rat& lo, const Rat& hi, std::int64_t& lk_out) {
  Rat mid = (lo + hi) / 2;
  Rat w = hi - lo;
  std::vector<Rat> offsets = {Rat(0)};
  for (int j = 7; j <= 12; ++j) {
    Rat d = w / Int(1LL << j);
    offsets.push_back(d);
    offsets.push_back(-d);
  }
  for (const Rat& d : offsets) {
    Rat t = mid + d;
    if (t <= lo || t >= hi) continue;
    try {
      lk_out = link_sample(st, t);
      return t;
    } catch (const transversality_error&) {
      continue;
    }
  }
  throw transversality_error("persistent intersection near t=" + rat_str(mid) +
                             ", tangency suspected");
}

struct RawEvent {
  Rat lo, hi;
  std::int64_t jump;
};

void isolate(PairState& st, const Rat& lo, const Rat& hi, std::int64_t lk_lo, std::int64_t lk_hi,
             const Rat& emit_width, const Rat& floor_width, std::vector<RawEvent>& out) {
  Rat width = hi - lo;
  if (lk_lo != lk_hi && (lk_hi - lk_lo == 1 || lk_lo - lk_hi == 1) && width <= emit_width) {
    out.push_back({lo, hi, lk_hi - lk_lo});
    return;
  }
  if (lk_lo == lk_hi) {
    // Separation certificate from the midpoint sample: nothing can cross if
    // the gap exceeds the largest possible relative displacement.
    Rat mid = (lo + hi) / 2;
    Rat reach = st.speed_sum * width / 2;
    Rat d2 = loops_dist2_within(loop_at(st, mid, 0), loop_at(st, mid, 1), st.iso->ambient, reach);
    if (d2 > reach * reach) return;
  }
  if (width < floor_width)
    throw transversality_error("cannot isolate linking jump above width floor in [" +
                               rat_str(lo) + ", " + rat_str(hi) + "]");
  std::int64_t lk_mid = 0;
  Rat mid = pick_sample(st, lo, hi, lk_mid);
  isolate(st, lo, mid, lk_lo, lk_mid, emit_width, floor_width, out);
  isolate(st, mid, hi, lk_mid, lk_hi, emit_width, floor_width, out);
}

// Midpoint genericity check: the closest strands of the two loops must not be
// parallel-degenerate while a jump is present.
void check_event_sign(PairState& st, const RawEvent& ev) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    Rat m = attempt == 0 ? Rat((ev.lo + ev.hi) / 2) : Rat(ev.lo + (ev.hi - ev.lo) / 8);
    PLLoop a = loop_at(st, m, 0);
    PLLoop b = loop_at(st, m, 1);
    std::vector<Seg> sa = lift_segments(a);
    std::vector<Seg> sb = lift_segments(b);
    bool have = false;
    Rat best_d2;
    Vec3 ta{}, tb{}, diff{};
    auto consider = [&](const Seg& x, const Seg& y) {
      SegClosest c = segment_closest(x, y);
      if (!have || c.dist2 < best_d2) {
        have = true;
        best_d2 = c.dist2;
        ta = x.b - x.a;
        tb = y.b - y.a;
        Vec3 px = x.a + (c.alpha * (x.b - x.a));
        Vec3 py = y.a + (c.beta * (y.b - y.a));
        diff = px - py;
      }
    };
    if (st.iso->ambient == AmbientSpace::R3) {
      for (const Seg& x : sa)
        for (const Seg& y : sb) consider(x, y);
    } else {
      // Search a generous translate box around the configuration.
      for (const Seg& x : sa)
        for (const Seg& y : sb)
          for (std::int64_t w0 = -2; w0 <= 2; ++w0)
            for (std::int64_t w1 = -2; w1 <= 2; ++w1)
              for (std::int64_t w2 = -2; w2 <= 2; ++w2) {
                Seg ys = y;
                ys.a[0] += w0; ys.a[1] += w1; ys.a[2] += w2;
                ys.b[0] += w0; ys.b[1] += w1; ys.b[2] += w2;
                consider(x, ys);
              }
    }
    if (!have) throw std::logic_error("crossing sign check found no segments");
    if (best_d2 == 0) continue;  // sampled exactly on the crossing, retry off-center
    Rat det = dot(cross(ta, tb), diff);
    if (det == 0 && ev.jump != 0)
      throw std::logic_error("degenerate strand geometry at certified crossing");
    return;
  }
  throw std::logic_error("crossing midpoint lies on the intersection twice");
}

}  // namespace

std::vector<CrossingEvent> crossing_events_uncached(
    const Isotopy& iso, const std::vector<std::pair<int, int>>& sigma_pairs) {

  const Rat emit0 = Rat(Int(1), Int(1) << 30);
  const Rat floorw = Rat(Int(1), Int(1) << 60);

  struct Tagged {
    CrossingEvent ev;
    size_t pair_index;
  };
  std::vector<PairState> states;
  std::vector<Tagged> events;

  for (size_t e = 0; e < sigma_pairs.size(); ++e) {
    auto [h0, h1] = sigma_pairs[e];
    size_t terms_a = iso.frames[0][h0].terms.size();
    size_t terms_b = iso.frames[0][h1].terms.size();
    for (size_t i = 0; i < terms_a; ++i)
      for (size_t j = 0; j < terms_b; ++j) {
        PairState st;
        st.iso = &iso;
        st.h0 = h0;
        st.h1 = h1;
        st.ta = static_cast<int>(i);
        st.tb = static_cast<int>(j);
        st.speed_sum = max_speed_l1(iso, h0) + max_speed_l1(iso, h1);
        states.push_back(std::move(st));
        PairState& ps = states.back();
        std::int64_t lk0 = link_sample(ps, 0);
        std::int64_t lk1 = link_sample(ps, 1);
        std::vector<RawEvent> raw;
        isolate(ps, 0, 1, lk0, lk1, emit0, floorw, raw);
        for (const RawEvent& r : raw) {
          CrossingEvent ev;
          ev.edge = static_cast<int>(e);
          ev.term_a = ps.ta;
          ev.term_b = ps.tb;
          ev.t_lo = r.lo;
          ev.t_hi = r.hi;
          ev.jump = r.jump;
          events.push_back({ev, states.size() - 1});
        }
      }
  }

  // Brackets of distinct events must have disjoint interiors; overlapping
  // ones are re-isolated at smaller widths.
  for (Rat emit = emit0; ; emit = emit / Int(1LL << 10)) {
    std::sort(events.begin(), events.end(), [](const Tagged& a, const Tagged& b) {
      if (a.ev.t_lo != b.ev.t_lo) return a.ev.t_lo < b.ev.t_lo;
      return a.ev.t_hi < b.ev.t_hi;
    });
    std::vector<char> overlapping(events.size(), 0);
    bool any = false;
    for (size_t i = 0; i + 1 < events.size(); ++i)
      if (events[i + 1].ev.t_lo < events[i].ev.t_hi) {
        overlapping[i] = overlapping[i + 1] = 1;
        any = true;
      }
    if (!any) break;
    if (emit / Int(1LL << 10) < floorw)
      throw transversality_error("simultaneous crossing events cannot be separated");
    std::vector<Tagged> next;
    for (size_t i = 0; i < events.size(); ++i) {
      if (!overlapping[i]) {
        next.push_back(events[i]);
        continue;
      }
      PairState& ps = states[events[i].pair_index];
      std::vector<RawEvent> raw;
      std::int64_t lk_lo = link_sample(ps, events[i].ev.t_lo);
      std::int64_t lk_hi = link_sample(ps, events[i].ev.t_hi);
      isolate(ps, events[i].ev.t_lo, events[i].ev.t_hi, lk_lo, lk_hi, emit / Int(1LL << 10),
              floorw, raw);
      for (const RawEvent& r : raw) {
        Tagged t = events[i];
        t.ev.t_lo = r.lo;
        t.ev.t_hi = r.hi;
        t.ev.jump = r.jump;
        next.push_back(t);
      }
    }
    events = std::move(next);
  }

  std::vector<CrossingEvent> out;
  out.reserve(events.size());
  for (auto& t : events) {
    RawEvent r{t.ev.t_lo, t.ev.t_hi, t.ev.jump};
    check_event_sign(states[t.pair_index], r);
    out.push_back(t.ev);
  }
  return out;
}

namespace {

// Serialization of one half edge track: the full time evolution of its
// chain. Equal strings mean equal certified events.
std::string track_fingerprint(const Isotopy& iso, int h) {
  std::string fp;
  for (const auto& frame : iso.frames) fp += chain_fingerprint(frame[h]) + "#";
  return fp;
}

std::mutex g_events_mutex;
std::map<std::string, std::vector<CrossingEvent>> g_events_cache;

}  // namespace

// Certification is exact and expensive, and slot symmetrization asks for the
// same pair tracks many times under flips and permutations. The linking
// number is symmetric, so events only depend on the unordered pair of
// tracks; results are cached under that normalized key and mapped back.
std::vector<CrossingEvent> crossing_events(const Isotopy& iso,
                                           const std::vector<std::pair<int, int>>& sigma_pairs) {
  auto errors = validate_isotopy(iso);
  if (!errors.empty()) throw std::invalid_argument("isotopy: " + errors.front());
  for (auto [h0, h1] : sigma_pairs)
    if (h0 < 0 || h1 < 0 || h0 >= iso.num_half_edges() || h1 >= iso.num_half_edges() || h0 == h1)
      throw std::invalid_argument("sigma pair out of range");

  struct PairNorm {
    std::pair<int, int> pair;  // half edges, fingerprint order
    bool swapped = false;
    std::string fp;
    int query_index = 0;
  };
  std::vector<PairNorm> norm(sigma_pairs.size());
  for (size_t i = 0; i < sigma_pairs.size(); ++i) {
    auto [h0, h1] = sigma_pairs[i];
    std::string f0 = track_fingerprint(iso, h0);
    std::string f1 = track_fingerprint(iso, h1);
    PairNorm& pn = norm[i];
    pn.query_index = static_cast<int>(i);
    pn.swapped = f1 < f0;
    pn.pair = pn.swapped ? std::make_pair(h1, h0) : std::make_pair(h0, h1);
    pn.fp = pn.swapped ? f1 + "|" + f0 : f0 + "|" + f1;
  }
  std::stable_sort(norm.begin(), norm.end(),
                   [](const PairNorm& a, const PairNorm& b) { return a.fp < b.fp; });

  std::string key = iso.ambient == AmbientSpace::R3 ? "R3;" : "T3;";
  for (const Rat& t : iso.times) key += format_rat(t) + ",";
  for (const PairNorm& pn : norm) key += ";" + pn.fp;

  std::vector<CrossingEvent> canonical;
  bool hit = false;
  {
    std::lock_guard<std::mutex> lock(g_events_mutex);
    auto it = g_events_cache.find(key);
    if (it != g_events_cache.end()) {
      canonical = it->second;
      hit = true;
    }
  }
  if (!hit) {
    std::vector<std::pair<int, int>> ordered;
    ordered.reserve(norm.size());
    for (const PairNorm& pn : norm) ordered.push_back(pn.pair);
    canonical = crossing_events_uncached(iso, ordered);
    std::lock_guard<std::mutex> lock(g_events_mutex);
    if (g_events_cache.size() > 4096) g_events_cache.clear();
    g_events_cache.emplace(key, canonical);
  }

  std::vector<CrossingEvent> out;
  out.reserve(canonical.size());
  for (const CrossingEvent& ev : canonical) {
    const PairNorm& pn = norm[ev.edge];
    CrossingEvent mapped = ev;
    mapped.edge = pn.query_index;
    if (pn.swapped) std::swap(mapped.term_a, mapped.term_b);
    out.push_back(mapped);
  }
  std::sort(out.begin(), out.end(), [](const CrossingEvent& a, const CrossingEvent& b) {
    if (a.t_lo != b.t_lo) return a.t_lo < b.t_lo;
    return a.edge < b.edge;
  });
  return out;
}

}  // namespace mch

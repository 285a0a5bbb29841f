#include "mch/gauss_link.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace mch {

namespace {

struct V3 {
  double x, y, z;
};

V3 sub(const V3& a, const V3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

double det3(const V3& a, const V3& b, const V3& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

V3 to_v3(const Vec3& v) { return {to_double(v[0]), to_double(v[1]), to_double(v[2])}; }

// 8-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 8> kNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

// Integrand denominator 1/|d + s u - t v|^3 over [s0,s1] x [t0,t1].
double gauss_patch(const V3& d, const V3& u, const V3& v, double s0, double s1, double t0,
                   double t1) {
  double hs = 0.5 * (s1 - s0), cs = 0.5 * (s1 + s0);
  double ht = 0.5 * (t1 - t0), ct = 0.5 * (t1 + t0);
  double sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    double s = cs + hs * kNodes[i];
    for (int j = 0; j < 8; ++j) {
      double t = ct + ht * kNodes[j];
      V3 w = {d.x + s * u.x - t * v.x, d.y + s * u.y - t * v.y, d.z + s * u.z - t * v.z};
      double r2 = w.x * w.x + w.y * w.y + w.z * w.z;
      double r = std::sqrt(r2);
      sum += kWeights[i] * kWeights[j] / (r2 * r);
    }
  }
  return sum * hs * ht;
}

double adaptive_patch(const V3& d, const V3& u, const V3& v, double s0, double s1, double t0,
                      double t1, double tol, int depth) {
  double coarse = gauss_patch(d, u, v, s0, s1, t0, t1);
  double sm = 0.5 * (s0 + s1), tm = 0.5 * (t0 + t1);
  double fine = gauss_patch(d, u, v, s0, sm, t0, tm) + gauss_patch(d, u, v, sm, s1, t0, tm) +
                gauss_patch(d, u, v, s0, sm, tm, t1) + gauss_patch(d, u, v, sm, s1, tm, t1);
  if (std::abs(fine - coarse) <= tol || depth >= 14) return fine;
  double quarter = tol / 4.0;
  return adaptive_patch(d, u, v, s0, sm, t0, tm, quarter, depth + 1) +
         adaptive_patch(d, u, v, sm, s1, t0, tm, quarter, depth + 1) +
         adaptive_patch(d, u, v, s0, sm, tm, t1, quarter, depth + 1) +
         adaptive_patch(d, u, v, sm, s1, tm, t1, quarter, depth + 1);
}

double gauss_pair(const std::vector<Seg>& sa, const std::vector<Seg>& sb, double tol) {
  double total = 0.0;
  double pair_tol = tol / static_cast<double>(sa.size() * sb.size());
  for (const Seg& A : sa)
    for (const Seg& B : sb) {
      V3 a0 = to_v3(A.a), a1 = to_v3(A.b);
      V3 b0 = to_v3(B.a), b1 = to_v3(B.b);
      V3 u = sub(a1, a0), v = sub(b1, b0), d = sub(a0, b0);
      double num = det3(u, v, d);  // constant over the patch for linear segments
      if (num == 0.0) continue;
      total += num * adaptive_patch(d, u, v, 0, 1, 0, 1, pair_tol / std::abs(num), 0);
    }
  return total / (4.0 * M_PI);
}

}  // namespace

double gauss_linking_number(const PLLoop& a, const PLLoop& b, AmbientSpace ambient, double tol) {
  for (const auto& e : validate_loop(a, ambient)) throw std::invalid_argument("loop a: " + e);
  for (const auto& e : validate_loop(b, ambient)) throw std::invalid_argument("loop b: " + e);
  std::vector<Seg> sa = lift_segments(a);
  std::vector<Seg> sb = lift_segments(b);
  if (ambient == AmbientSpace::R3) return gauss_pair(sa, sb, tol);

  // Torus: sum over deck translates whose bounding boxes meet; separated
  // convex hulls contribute an exactly zero integral.
  double alo[3] = {1e300, 1e300, 1e300}, ahi[3] = {-1e300, -1e300, -1e300};
  double blo[3] = {1e300, 1e300, 1e300}, bhi[3] = {-1e300, -1e300, -1e300};
  auto widen = [](const std::vector<Seg>& segs, double* lo, double* hi) {
    for (const Seg& s : segs) {
      V3 p = to_v3(s.a), q = to_v3(s.b);
      double ps[3] = {p.x, p.y, p.z}, qs[3] = {q.x, q.y, q.z};
      for (int d = 0; d < 3; ++d) {
        lo[d] = std::min({lo[d], ps[d], qs[d]});
        hi[d] = std::max({hi[d], ps[d], qs[d]});
      }
    }
  };
  widen(sa, alo, ahi);
  widen(sb, blo, bhi);
  double total = 0.0;
  long lo[3], hi[3];
  for (int d = 0; d < 3; ++d) {
    lo[d] = static_cast<long>(std::ceil(alo[d] - bhi[d] - 1e-9));
    hi[d] = static_cast<long>(std::floor(ahi[d] - blo[d] + 1e-9));
  }
  for (long w0 = lo[0]; w0 <= hi[0]; ++w0)
    for (long w1 = lo[1]; w1 <= hi[1]; ++w1)
      for (long w2 = lo[2]; w2 <= hi[2]; ++w2) {
        std::vector<Seg> shifted = sb;
        for (Seg& s : shifted) {
          s.a[0] += w0; s.a[1] += w1; s.a[2] += w2;
          s.b[0] += w0; s.b[1] += w1; s.b[2] += w2;
        }
        total += gauss_pair(sa, shifted, tol);
      }
  return total;
}

}  // namespace mch

#include "mch/verify_suites.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "mch/chain.hpp"
#include "mch/differentials.hpp"
#include "mch/first_to_second.hpp"
#include "mch/fixtures.hpp"
#include "mch/gauss_link.hpp"
#include "mch/linking.hpp"
#include "mch/multilink.hpp"
#include "mch/nice_generator.hpp"
#include "mch/nicify.hpp"
#include "mch/random_gen.hpp"

namespace mch {

namespace {

constexpr int kMaxNotes = 8;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void record(SuiteResult& r, int case_index, const std::string& what) {
  ++r.failures;
  if ((int)r.notes.size() < kMaxNotes)
    r.notes.push_back("case " + std::to_string(case_index) + ": " + what);
  else if ((int)r.notes.size() == kMaxNotes)
    r.notes.push_back("further failures suppressed");
}

// All seven exact differential identities on one chain.
void check_identities(SuiteResult& r, int i, const MultiCurveChain& c) {
  const MultiCurveChain dc = boundary_cells(c);
  const MultiCurveChain gc = boundary_diagonal(c);
  const MultiCurveChain fc = boundary_filtration(c);
  if (!chain_is_zero(boundary_cells(dc))) record(r, i, "cell boundary does not square to zero");
  if (!chain_is_zero(boundary_diagonal(gc)))
    record(r, i, "diagonal boundary does not square to zero");
  if (!chain_is_zero(boundary_filtration(fc)))
    record(r, i, "filtration boundary does not square to zero");
  if (!chain_is_zero(chain_add(boundary_cells(gc), boundary_diagonal(dc))))
    record(r, i, "cell and diagonal boundaries do not anticommute");
  if (!chain_is_zero(chain_add(boundary_cells(fc), boundary_filtration(dc))))
    record(r, i, "cell and filtration boundaries do not anticommute");
  if (!chain_is_zero(chain_add(boundary_diagonal(fc), boundary_filtration(gc))))
    record(r, i, "diagonal and filtration boundaries do not anticommute");
  if (!chain_is_zero(boundary_hat(boundary_hat(c))))
    record(r, i, "total differential does not square to zero");
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

bool integer_coefficients(const OneChain& c) {
  for (const auto& term : c.terms)
    if (denominator(term.coeff) != 1) return false;
  return true;
}

// Bilinear extension of the quadrature estimate.
double gauss_chain_link(const OneChain& a, const OneChain& b) {
  double sum = 0.0;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      sum += to_double(ta.coeff * tb.coeff) * gauss_linking_number(ta.loop, tb.loop, a.ambient);
  return sum;
}

}  // namespace

nlohmann::json suite_to_json(const SuiteResult& r) {
  // No wall time in the report: identical (inputs, seed) must serialize
  // identically.
  return nlohmann::json{{"suite", r.name},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"passed", r.passed()},
                        {"notes", r.notes}};
}

SuiteResult run_axioms_suite(std::uint64_t seed, int cases) {
  Timer timer;
  SuiteResult r;
  r.name = "axioms";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    const MultiCurveChain c = random_second_chain(rng, 4, 3, 3);
    if (!is_symmetric(c)) record(r, i, "generated chain is not invariant");
    check_identities(r, i, c);
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_first_map_suite(std::uint64_t seed, int cases) {
  Timer timer;
  SuiteResult r;
  r.name = "first-map";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    const MultiCurveChain c = random_first_chain(rng);
    if (!chain_is_zero(boundary_hat(boundary_hat(c))))
      record(r, i, "graph side total differential does not square to zero");
    const MultiCurveChain lhs = first_to_second(boundary_hat(c));
    const MultiCurveChain rhs = boundary_hat(first_to_second(c));
    if (!chain_equal(lhs, rhs)) record(r, i, "pushforward does not commute with the differential");
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_oracle_suite(std::uint64_t seed, int cases) {
  Timer timer;
  SuiteResult r;
  r.name = "oracle";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    const LinkedPair p = random_disjoint_pair(rng);
    const Rat exact = linking_number(p.a, p.b);
    if (exact != p.expected_link) record(r, i, "projection link differs from the constructed value");
    if (integer_coefficients(p.a) && integer_coefficients(p.b) && denominator(exact) != 1)
      record(r, i, "integer coefficient link is not an integer");
    const double gauss = gauss_chain_link(p.a, p.b);
    if (std::fabs(gauss - to_double(exact)) > 0.01)
      record(r, i, "quadrature estimate differs from the exact value by more than 0.01");
    if (linking_number(reverse_chain(p.a), p.b) != -exact)
      record(r, i, "reversal does not negate the link");
    if (linking_number(p.b, p.a) != exact) record(r, i, "link is not symmetric");
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_torus_suite() {
  Timer timer;
  SuiteResult r;
  r.name = "torus";

  ++r.cases;
  const Rat plane_link = multilink(fixtures::cube_hopf_pair(AmbientSpace::R3));
  const Rat torus_link = multilink(fixtures::cube_hopf_pair(AmbientSpace::T3));
  if (plane_link != 1 || torus_link != plane_link)
    record(r, 0, "in-cube pair links differently in the two ambients");

  const std::vector<IVec3> windings = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, -1, 3}};
  for (int i = 0; i < (int)windings.size(); ++i) {
    ++r.cases;
    const IVec3& w = windings[i];
    const PLLoop loop = fixtures::winding_loop(w, Vec3{rat(1, 3), rat(1, 5), rat(1, 7)});
    if (!validate_loop(loop, AmbientSpace::T3).empty()) {
      record(r, 1 + i, "winding fixture fails validation");
      continue;
    }
    const std::vector<std::int64_t> cls = homology_class(loop, AmbientSpace::T3);
    if (cls.size() != 3 || cls[0] != w[0] || cls[1] != w[1] || cls[2] != w[2])
      record(r, 1 + i, "winding fixture reports the wrong homology class");
  }

  ++r.cases;
  PLLoop flat;  // zero winding: a triangle with zero deck translations
  flat.vertices = {Vec3{rat(1, 8), rat(1, 8), rat(1, 8)}, Vec3{rat(3, 8), rat(1, 8), rat(1, 8)},
                   Vec3{rat(1, 8), rat(3, 8), rat(1, 8)}};
  flat.translations = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  if (!validate_loop(flat, AmbientSpace::T3).empty() ||
      homology_class(flat, AmbientSpace::T3) != std::vector<std::int64_t>{0, 0, 0})
    record(r, 5, "zero winding triangle misreports its class");

  ++r.cases;
  OneChain combo;
  combo.ambient = AmbientSpace::T3;
  combo.terms.push_back({rat(2), fixtures::winding_loop({1, 0, 0}, Vec3{rat(1, 3), rat(1, 5), rat(1, 7)})});
  combo.terms.push_back({rat(-1), fixtures::winding_loop({0, 3, 1}, Vec3{rat(2, 3), rat(2, 5), rat(2, 7)})});
  const std::vector<Rat> cls = homology_class(combo);
  if (cls.size() != 3 || cls[0] != 2 || cls[1] != -3 || cls[2] != -1)
    record(r, 6, "chain homology class is not the weighted winding sum");

  ++r.cases;
  if (multilink(fixtures::hopf_pair()) != 1) record(r, 7, "hopf fixture is not +1");

  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_chain_map_suite(std::uint64_t seed, int cases) {
  Timer timer;
  SuiteResult r;
  r.name = "chain-map";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    const Isotopy iso = random_isotopy(rng, 3);
    const ChainMapCheck check = verify_chain_map(iso);
    if (!check.ok)
      record(r, i,
             "track boundary " + format_rat(check.lhs) + " differs from differential multilink " +
                 format_rat(check.rhs));
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_hnul_kernel_suite(std::uint64_t seed, int cases) {
  Timer timer;
  SuiteResult r;
  r.name = "hnul-kernel";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    const Isotopy iso = random_isotopy(rng, 3);
    const MultiCurveChain h = hnul_element(iso);
    const Rat value = multilink(h);
    if (value != 0)
      record(r, i, "relation element has multilink " + format_rat(value));
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_nicify_suite(std::uint64_t seed, int cases) {
  Timer timer;
  SuiteResult r;
  r.name = "nicify";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    const NicifyFixture fx = random_nicify_input(rng, 2);
    if (is_nice(fx.z)) {
      record(r, i, "fixture degenerated to a nice cycle");
      continue;
    }
    if (!chain_is_zero(boundary_hat(fx.z))) {
      record(r, i, "fixture is not a cycle");
      continue;
    }
    const NicifyResult res = nicify(fx.z);
    if (!is_nice(res.nice)) record(r, i, "repaired chain is not nice");
    if (!chain_is_zero(boundary_hat(res.nice))) record(r, i, "repaired chain is not a cycle");
    if (!chain_equal(res.nice, chain_add(fx.z, boundary_hat(res.bounding))))
      record(r, i, "repaired chain is not the input plus the returned boundary");
    if (multilink(res.nice) != multilink(fx.nice_part))
      record(r, i, "nicify changed the multilink");
  }
  r.seconds = timer.seconds();
  return r;
}

}  // namespace mch

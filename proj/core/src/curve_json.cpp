#include "mch/curve_json.hpp"

#include <stdexcept>

#include "mch/errors.hpp"

namespace mch {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("curve json: " + msg);
}

void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

AmbientSpace ambient_from(const json& j) {
  require(j.contains("ambient") && j["ambient"].is_string(), "missing ambient");
  std::string a = j["ambient"].get<std::string>();
  if (a == "R3") return AmbientSpace::R3;
  if (a == "T3") return AmbientSpace::T3;
  fail("ambient must be R3 or T3");
}

const char* ambient_name(AmbientSpace a) { return a == AmbientSpace::R3 ? "R3" : "T3"; }

json loop_to_json(const PLLoop& loop) {
  json jl;
  json verts = json::array();
  for (const Vec3& v : loop.vertices)
    verts.push_back({format_rat(v[0]), format_rat(v[1]), format_rat(v[2])});
  jl["vertices"] = verts;
  if (!loop.translations.empty()) {
    json tr = json::array();
    for (const IVec3& t : loop.translations) tr.push_back({t[0], t[1], t[2]});
    jl["translations"] = tr;
  }
  return jl;
}

PLLoop loop_from_json(const json& jl) {
  require(jl.is_object() && jl.contains("vertices") && jl["vertices"].is_array(),
          "loop needs a vertices array");
  PLLoop loop;
  for (const auto& jv : jl["vertices"]) {
    require(jv.is_array() && jv.size() == 3, "vertices must be triples");
    Vec3 v;
    for (int d = 0; d < 3; ++d) {
      require(jv[d].is_string(), "coordinates must be rational strings");
      v[d] = parse_rat(jv[d].get<std::string>());
    }
    loop.vertices.push_back(v);
  }
  if (jl.contains("translations")) {
    require(jl["translations"].is_array(), "translations must be an array");
    for (const auto& jt : jl["translations"]) {
      require(jt.is_array() && jt.size() == 3, "translations must be integer triples");
      IVec3 t;
      for (int d = 0; d < 3; ++d) {
        require(jt[d].is_number_integer(), "translations must be integer triples");
        t[d] = jt[d].get<std::int64_t>();
      }
      loop.translations.push_back(t);
    }
  }
  return loop;
}

json loops_to_json(const OneChain& chain) {
  json loops = json::array();
  for (const auto& term : chain.terms) {
    json jl = loop_to_json(term.loop);
    jl["coeff"] = format_rat(term.coeff);
    loops.push_back(jl);
  }
  return loops;
}

OneChain loops_from_json(const json& jloops, AmbientSpace ambient) {
  require(jloops.is_array(), "loops must be an array");
  OneChain chain;
  chain.ambient = ambient;
  for (const auto& jl : jloops) {
    OneChain::Term term;
    require(jl.contains("coeff") && jl["coeff"].is_string(), "loop needs a coeff string");
    term.coeff = parse_rat(jl["coeff"].get<std::string>());
    term.loop = loop_from_json(jl);
    chain.terms.push_back(std::move(term));
  }
  auto errors = validate_chain(chain);
  if (!errors.empty()) fail(errors.front());
  return chain;
}

}  // namespace

json chain_to_json(const OneChain& chain) {
  json j;
  j["ambient"] = ambient_name(chain.ambient);
  j["loops"] = loops_to_json(chain);
  return j;
}

OneChain chain_from_json(const json& j) {
  require(j.is_object(), "top level must be an object");
  AmbientSpace ambient = ambient_from(j);
  require(j.contains("loops"), "missing loops");
  return loops_from_json(j["loops"], ambient);
}

json isotopy_to_json(const Isotopy& iso) {
  json j;
  j["ambient"] = ambient_name(iso.ambient);
  json times = json::array();
  for (const Rat& t : iso.times) times.push_back(format_rat(t));
  j["times"] = times;
  json frames = json::array();
  for (const auto& frame : iso.frames) {
    json jf = json::array();
    for (const OneChain& chain : frame) jf.push_back(loops_to_json(chain));
    frames.push_back(jf);
  }
  j["frames"] = frames;
  return j;
}

Isotopy isotopy_from_json(const json& j) {
  require(j.is_object(), "top level must be an object");
  Isotopy iso;
  iso.ambient = ambient_from(j);
  require(j.contains("times") && j["times"].is_array(), "missing times");
  for (const auto& jt : j["times"]) {
    require(jt.is_string(), "times must be rational strings");
    iso.times.push_back(parse_rat(jt.get<std::string>()));
  }
  require(j.contains("frames") && j["frames"].is_array(), "missing frames");
  for (const auto& jf : j["frames"]) {
    require(jf.is_array(), "frames must be arrays of half edge loop lists");
    std::vector<OneChain> frame;
    for (const auto& jc : jf) frame.push_back(loops_from_json(jc, iso.ambient));
    iso.frames.push_back(std::move(frame));
  }
  auto errors = validate_isotopy(iso);
  if (!errors.empty()) fail(errors.front());
  return iso;
}

json generator_to_json(const NiceGenerator& g) {
  json j;
  j["ambient"] = ambient_name(g.ambient);
  json pairs = json::array();
  for (const auto& [a, b] : g.pairing) pairs.push_back(json::array({a, b}));
  j["pairs"] = pairs;
  json curves = json::array();
  for (const OneChain& c : g.curves) curves.push_back(loops_to_json(c));
  j["curves"] = curves;
  return j;
}

NiceGenerator generator_from_json(const json& j) {
  require(j.is_object(), "top level must be an object");
  NiceGenerator g;
  g.ambient = ambient_from(j);
  require(j.contains("pairs") && j["pairs"].is_array(), "missing pairs");
  for (const auto& jp : j["pairs"]) {
    require(jp.is_array() && jp.size() == 2 && jp[0].is_number_integer() &&
                jp[1].is_number_integer(),
            "pairs must be integer couples");
    g.pairing.emplace_back(jp[0].get<int>(), jp[1].get<int>());
  }
  require(j.contains("curves") && j["curves"].is_array(), "missing curves");
  for (const auto& jc : j["curves"]) g.curves.push_back(loops_from_json(jc, g.ambient));
  // Intersecting curves are a transversality failure, same as in the linking
  // computation itself; every other violation is a validation error.
  for (std::size_t a = 0; a < g.curves.size(); ++a)
    for (std::size_t b = a + 1; b < g.curves.size(); ++b)
      if (!are_disjoint(g.curves[a], g.curves[b]))
        throw transversality_error("generator curves " + std::to_string(a) + " and " +
                                   std::to_string(b) + " intersect");
  auto errors = validate_generator(g);
  if (!errors.empty()) fail(errors.front());
  return g;
}

}  // namespace mch

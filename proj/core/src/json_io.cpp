#include "affblocks/json_io.hpp"

#include "affblocks/error.hpp"

namespace affblocks {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + " JSON is missing \"" + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Root& a) { return to_string(a); }

Root root_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("root literal must be a JSON string, got " + j.dump());
  return parse_root(j.get<std::string>());
}

Json to_json(const Poly& f) {
  Json out = Json::array();
  for (const Root& a : f.roots()) out.push_back(to_json(a));
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of roots, got " + j.dump());
  RatFun f;
  for (const Json& item : j) f.accumulate(root_from_json(item), 1);
  return Poly(std::move(f));
}

Json to_json(const DominantTuple& q) {
  Json comps = Json::array();
  for (const Poly& c : q.components()) comps.push_back(to_json(c));
  return Json{{"n", q.n()}, {"components", comps}};
}

DominantTuple tuple_from_json(const Json& j, std::optional<int> n) {
  return guarded("tuple", [&] {
    const Json* comps = &j;
    if (j.is_object()) {
      comps = &field(j, "components", "tuple");
      int declared = field(j, "n", "tuple").get<int>();
      if (n && *n != declared) {
        throw DomainError("tuple declares n=" + std::to_string(declared) + " but n=" +
                          std::to_string(*n) + " was requested");
      }
      n = declared;
    }
    if (!comps->is_array()) throw ParseError("tuple components must be a JSON array");
    std::vector<Poly> polys;
    for (const Json& c : *comps) polys.push_back(poly_from_json(c));
    if (n) {
      // Trailing constant components may be omitted.
      if (static_cast<int>(polys.size()) > *n) {
        throw DomainError("tuple has " + std::to_string(polys.size()) + " components, n=" +
                          std::to_string(*n));
      }
      polys.resize(static_cast<std::size_t>(*n));
    }
    return DominantTuple(std::move(polys));
  });
}

Json to_json(const EllipticCharacter& chi) {
  return Json{{"r", chi.r}, {"class", to_json(chi.class_poly)}};
}

EllipticCharacter elliptic_from_json(const Json& j) {
  return guarded("elliptic character", [&] {
    EllipticCharacter chi{field(j, "r", "elliptic character").get<std::int64_t>(),
                          poly_from_json(field(j, "class", "elliptic character"))};
    if (chi.class_poly.degree() != chi.r) {
      throw DomainError("elliptic character class degree does not match r");
    }
    return chi;
  });
}

Json to_json(const CharacterSum& c) {
  Json terms = Json::array();
  for (const auto& [w, m] : c.terms()) terms.push_back({{"weight", to_string(w)}, {"mult", m}});
  return Json{{"n", c.n()}, {"terms", terms}};
}

CharacterSum character_from_json(const Json& j) {
  return guarded("character", [&] {
    const int n = field(j, "n", "character").get<int>();
    CharacterSum c(n);
    for (const Json& t : field(j, "terms", "character")) {
      c.add(parse_xn(field(t, "weight", "character term").get<std::string>(), n),
            field(t, "mult", "character term").get<std::int64_t>());
    }
    return c;
  });
}

Json to_json(const Multisegment& ms) {
  Json segs = Json::array();
  for (const Segment& s : ms.segments()) {
    segs.push_back({{"center", to_json(s.center)}, {"length", s.length}});
  }
  return Json{{"segments", segs}};
}

Multisegment multisegment_from_json(const Json& j) {
  return guarded("multisegment", [&] {
    const Json& segs = j.is_object() ? field(j, "segments", "multisegment") : j;
    if (!segs.is_array()) throw ParseError("segments must be a JSON array");
    std::vector<Segment> out;
    for (const Json& s : segs) {
      out.push_back({root_from_json(field(s, "center", "segment")),
                     field(s, "length", "segment").get<std::int64_t>()});
    }
    return Multisegment(std::move(out));
  });
}

}  // namespace affblocks

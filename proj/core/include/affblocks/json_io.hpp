#pragma once

// JSON wire formats:
//   DominantTuple      {"n": N, "components": [[root, ...], ...]}
//   EllipticCharacter  {"r": R, "class": [root, ...]}
//   CharacterSum       {"n": N, "terms": [{"weight": "L[i;root]^e,...", "mult": m}, ...]}
//   Multisegment       {"segments": [{"center": root, "length": k}, ...]}
// Roots are root literals; polynomial components list roots with repetition.

#include "affblocks/characters.hpp"
#include "affblocks/drinfeld.hpp"
#include "affblocks/hecke.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string_view>

namespace affblocks {

using Json = nlohmann::json;

/// Parses text as JSON, rethrowing syntax errors as ParseError.
Json parse_json(std::string_view text);

Json to_json(const Root& a);
Root root_from_json(const Json& j);

Json to_json(const Poly& f);
Poly poly_from_json(const Json& j);

Json to_json(const DominantTuple& q);
/// Accepts the object form or a bare components array. When `n` is given it
/// must match the component count. Throws DomainError on non-dominant input.
DominantTuple tuple_from_json(const Json& j, std::optional<int> n = std::nullopt);

Json to_json(const EllipticCharacter& chi);
EllipticCharacter elliptic_from_json(const Json& j);

Json to_json(const CharacterSum& c);
CharacterSum character_from_json(const Json& j);

Json to_json(const Multisegment& ms);
/// Accepts the object form or a bare segments array.
Multisegment multisegment_from_json(const Json& j);

}  // namespace affblocks

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "longhom/adapted.hpp"
#include "longhom/dirseq.hpp"
#include "longhom/interval_set.hpp"
#include "longhom/symmap.hpp"

namespace longhom::json {

using Json = nlohmann::ordered_json;

// Malformed documents throw ParseError; well-formed documents describing
// invalid objects throw DomainError.

Json interval_to_json(const Interval& i);
Interval interval_from_json(const Json& j);

/// {"universe":"w^2","parts":[{"lo":"0","hi":{"excl":"w"}},{"lo":"w*2","hi":"tail"}]}
Json set_to_json(const IntervalSet& s);
IntervalSet set_from_json(const Json& j);
/// A bare parts array read against a known universe.
IntervalSet parts_from_json(const Universe& u, const Json& parts);

/// {"alpha":"3","dirs":"uud"} for finite lengths,
/// {"alpha":"w","up":[parts]} otherwise.
Json seq_to_json(const DirectionSeq& s);
DirectionSeq seq_from_json(const Json& j);

/// {"s":seq,"labels":[{"lo":"0","hi":{"excl":"1"},"label":"vert"},...]}
Json map_to_json(const SymbolicMap& m);
SymbolicMap map_from_json(const Json& j);

/// {"universe":"w^3","family":[{"index":part,"set":[parts]},...]}
Json family_to_json(const IndexedFamily& f);
IndexedFamily family_from_json(const Json& j);

Json parse(std::string_view text);
Json load_file(const std::string& path);
/// Compact, deterministic rendering.
std::string dump(const Json& j);

}  // namespace longhom::json

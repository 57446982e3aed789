#pragma once

// JSON forms of the library types. Writers emit canonical output (reduced
// scalars, graded-lex monomials), so parse followed by write reproduces the
// same bytes. Readers throw Error(Parse) on malformed input.

#include "json.hpp"

#include "frev/centralizer.hpp"
#include "frev/factorization.hpp"
#include "frev/map2.hpp"
#include "frev/onevar.hpp"
#include "frev/reversibility.hpp"
#include "frev/series1.hpp"

namespace frev {

using json = nlohmann::json;

json to_json(const Series1& s);
json to_json(const BiSeries& s);
json to_json(const Map2& f);
json to_json(const CentElem& a);
json to_json(const Certificate& c);
json to_json(const Certificate1& c);
json to_json(const FactorBundle& b);
json to_json(const NormalFormTag& tag);

Series1 series1_from_json(const json& j);
BiSeries biseries_from_json(const json& j);
Map2 map2_from_json(const json& j);
CentElem centelem_from_json(const json& j);
FactorBundle bundle_from_json(const json& j);

/// Canonical text: two-space indent and a trailing newline.
std::string dump(const json& j);
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

}  // namespace frev

// Copyright 2026 The equimot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQUIMOT_CODEC_HPP
#define EQUIMOT_CODEC_HPP

// JSON encodings. Output is canonical: arrays follow the canonical sort
// orders, object keys are emitted in a fixed order and big integers are
// decimal strings, so equal values always serialize to identical text.

#include <json.hpp>

#include "equimot/ffrealize.hpp"
#include "equimot/groups.hpp"
#include "equimot/grothring.hpp"
#include "equimot/series.hpp"

namespace equimot::codec {

using Json = nlohmann::ordered_json;

Json to_json(const AbelianGroup& group);
Json to_json(const Character& chi);
Json to_json(const GroupElement& g);
Json to_json(const Generator& g);
Json to_json(const Monomial& m);
Json to_json(const RingElement& e);
Json to_json(const PowerSeries& s);
Json to_json(const TPoly& p);
Json to_json(const RationalWitness& w);
Json to_json(const GeneratorTable& t);
Json to_json(const P1Scenario& sc);

// Decoders throw Error(parse_error) on malformed input and normalize what
// they accept (unsorted terms, repeated monomials, SymC(0) factors).
AbelianGroup group_from_json(const Json& j);
Character character_from_json(const Json& j, const AbelianGroup& group);
GroupElement element_from_json(const Json& j, const AbelianGroup& group);
Generator generator_from_json(const Json& j);
Monomial monomial_from_json(const Json& j);
RingElement ring_element_from_json(const Json& j);
PowerSeries series_from_json(const Json& j);
TPoly tpoly_from_json(const Json& j);
RationalWitness witness_from_json(const Json& j);
GeneratorTable table_from_json(const Json& j);
P1Scenario scenario_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error(parse_error).
Json parse(const std::string& text);

}  // namespace equimot::codec

#endif  // EQUIMOT_CODEC_HPP

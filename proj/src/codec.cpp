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

#include "equimot/codec.hpp"

#include <string>

#include "equimot/error.hpp"

namespace equimot::codec {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

Residues residues_of(const Json& j, const char* what) {
  Residues out;
  for (const auto& x : as_array(j, what)) out.push_back(as_int(x, what));
  return out;
}

Json residues_json(const Residues& r) {
  Json a = Json::array();
  for (auto x : r) a.push_back(x);
  return a;
}

Integer as_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) fail(std::string(what) + " is not a decimal integer");
    return out;
  }
  fail(std::string(what) + " must be an integer or a decimal string");
}

std::size_t as_degree(const Json& j, const char* what) {
  const auto d = as_int(j, what);
  if (d < 0) fail(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(d);
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json to_json(const AbelianGroup& group) { return Json{{"divisors", residues_json(group.divisors())}}; }
Json to_json(const Character& chi) { return Json{{"residues", residues_json(chi.residues())}}; }
Json to_json(const GroupElement& g) { return Json{{"residues", residues_json(g.residues())}}; }

Json to_json(const Generator& g) {
  Json out;
  if (const auto* a = g.get_if<AffLine>()) {
    out["kind"] = "aff";
    out["chi"] = residues_json(a->chi);
  } else if (const auto* s = g.get_if<SymBase>()) {
    out["kind"] = "symc";
    out["n"] = s->n;
  } else if (const auto* e = g.get_if<E0Twist>()) {
    out["kind"] = "e0";
    out["i"] = e->i;
    out["j"] = e->j;
  }
  return out;
}

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (const auto& [g, e] : m.factors()) out.push_back(Json{{"gen", to_json(g)}, {"exp", e}});
  return out;
}

Json to_json(const RingElement& e) {
  Json out = Json::array();
  for (const auto& [m, c] : e.terms()) out.push_back(Json{{"coef", c.get_str()}, {"mon", to_json(m)}});
  return out;
}

Json to_json(const PowerSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const TPoly& p) {
  Json out = Json::array();
  for (const auto& [d, c] : p.terms()) out.push_back(Json{{"deg", d}, {"coef", to_json(c)}});
  return out;
}

Json to_json(const RationalWitness& w) { return Json{{"num", to_json(w.num())}, {"den", to_json(w.den())}}; }

Json to_json(const GeneratorTable& t) {
  Json out = Json::array();
  for (const auto& [g, v] : t.entries()) {
    Json value = v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str());
    out.push_back(Json{{"gen", to_json(g)}, {"value", std::move(value)}});
  }
  return out;
}

Json to_json(const P1Scenario& sc) { return Json{{"q", sc.q()}, {"r", sc.r()}}; }

AbelianGroup group_from_json(const Json& j) {
  return guarded([&] { return AbelianGroup(residues_of(field(j, "divisors"), "divisors")); });
}

Character character_from_json(const Json& j, const AbelianGroup& group) {
  return guarded([&] { return group.character(residues_of(field(j, "residues"), "residues")); });
}

GroupElement element_from_json(const Json& j, const AbelianGroup& group) {
  return guarded([&] { return group.element(residues_of(field(j, "residues"), "residues")); });
}

Generator generator_from_json(const Json& j) {
  return guarded([&] {
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) fail("generator kind must be a string");
    const auto k = kind.get<std::string>();
    if (k == "aff") return Generator::aff(residues_of(field(j, "chi"), "chi"));
    if (k == "symc") return Generator::sym_base(as_int(field(j, "n"), "n"));
    if (k == "e0") return Generator::e0_twist(as_int(field(j, "i"), "i"), as_int(field(j, "j"), "j"));
    fail("unknown generator kind '" + k + "'");
  });
}

Monomial monomial_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Monomial::Factor> factors;
    for (const auto& f : as_array(j, "monomial")) {
      const auto& gen = field(f, "gen");
      const auto e = as_int(field(f, "exp"), "exp");
      if (e < 0 || e > 0xffffffffLL) fail("exponent out of range");
      // Sym^0 of anything is the unit class.
      if (gen.is_object() && gen.value("kind", "") == "symc" && gen.contains("n") && gen["n"] == 0) continue;
      factors.emplace_back(generator_from_json(gen), static_cast<std::uint32_t>(e));
    }
    return Monomial::from_factors(std::move(factors));
  });
}

RingElement ring_element_from_json(const Json& j) {
  return guarded([&] {
    std::vector<std::pair<Monomial, Integer>> terms;
    for (const auto& t : as_array(j, "ring element"))
      terms.emplace_back(monomial_from_json(field(t, "mon")), as_integer(field(t, "coef"), "coef"));
    return RingElement::from_terms(terms);
  });
}

PowerSeries series_from_json(const Json& j) {
  return guarded([&] {
    const auto order = as_degree(field(j, "order"), "order");
    std::vector<RingElement> coeffs;
    for (const auto& c : as_array(field(j, "coeffs"), "coeffs")) coeffs.push_back(ring_element_from_json(c));
    if (coeffs.size() != order + 1) fail("series needs order+1 coefficients");
    return PowerSeries(std::move(coeffs));
  });
}

TPoly tpoly_from_json(const Json& j) {
  return guarded([&] {
    std::vector<TPoly::Term> terms;
    for (const auto& t : as_array(j, "t-polynomial"))
      terms.emplace_back(as_degree(field(t, "deg"), "deg"), ring_element_from_json(field(t, "coef")));
    return TPoly::from_terms(std::move(terms));
  });
}

RationalWitness witness_from_json(const Json& j) {
  auto num = tpoly_from_json(field(j, "num"));
  auto den = tpoly_from_json(field(j, "den"));
  // A bad denominator is a semantic error, not a syntax error.
  return RationalWitness(std::move(num), std::move(den));
}

GeneratorTable table_from_json(const Json& j) {
  return guarded([&] {
    GeneratorTable t;
    for (const auto& entry : as_array(j, "generator table"))
      t.set(generator_from_json(field(entry, "gen")), as_integer(field(entry, "value"), "value"));
    return t;
  });
}

P1Scenario scenario_from_json(const Json& j) {
  const auto q = guarded([&] { return as_int(field(j, "q"), "q"); });
  const auto r = guarded([&] { return as_int(field(j, "r"), "r"); });
  return P1Scenario(q, r);
}

}  // namespace equimot::codec

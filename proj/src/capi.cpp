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

#include "equimot.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "equimot/codec.hpp"
#include "equimot/error.hpp"
#include "equimot/ffrealize.hpp"
#include "equimot/grothring.hpp"
#include "equimot/series.hpp"
#include "equimot/verify.hpp"
#include "equimot/zeta.hpp"

struct equimot_group {
  equimot::AbelianGroup value;
};
struct equimot_element {
  equimot::RingElement value;
};
struct equimot_witness {
  equimot::RationalWitness value;
};
struct equimot_series {
  equimot::PowerSeries value;
};
struct equimot_table {
  equimot::GeneratorTable value;
};
struct equimot_report {
  equimot::VerifyReport value;
  std::string summary;
};

namespace {

using namespace equimot;

thread_local std::string last_error;

equimot_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_group: return EQUIMOT_ERR_INVALID_GROUP;
    case ErrorCode::invalid_argument: return EQUIMOT_ERR_INVALID_ARGUMENT;
    case ErrorCode::non_invertible_denominator: return EQUIMOT_ERR_NON_INVERTIBLE;
    case ErrorCode::uncovered_generator: return EQUIMOT_ERR_UNCOVERED_GENERATOR;
    case ErrorCode::unsupported_scenario: return EQUIMOT_ERR_UNSUPPORTED_SCENARIO;
    case ErrorCode::too_large: return EQUIMOT_ERR_TOO_LARGE;
    case ErrorCode::inconsistent_counts: return EQUIMOT_ERR_INCONSISTENT_COUNTS;
    case ErrorCode::singular_curve: return EQUIMOT_ERR_SINGULAR_CURVE;
    case ErrorCode::unsupported: return EQUIMOT_ERR_UNSUPPORTED;
    case ErrorCode::parse_error: return EQUIMOT_ERR_PARSE;
  }
  return EQUIMOT_ERR_INTERNAL;
}

equimot_status fail(equimot_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
equimot_status guard(F&& f) noexcept {
  try {
    f();
    last_error.clear();
    return EQUIMOT_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EQUIMOT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EQUIMOT_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::invalid_argument, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Residues residues_of(const int64_t* data, size_t count) {
  if (count > 0) require(data, "residues");
  return Residues(data, data + count);
}

Character character_of(const AbelianGroup& group, const int64_t* chi, size_t rank) {
  return group.character(residues_of(chi, rank));
}

}  // namespace

extern "C" {

const char* equimot_last_error(void) { return last_error.c_str(); }

const char* equimot_status_name(equimot_status status) {
  switch (status) {
    case EQUIMOT_OK: return "ok";
    case EQUIMOT_ERR_INVALID_GROUP: return to_string(ErrorCode::invalid_group);
    case EQUIMOT_ERR_INVALID_ARGUMENT: return to_string(ErrorCode::invalid_argument);
    case EQUIMOT_ERR_NON_INVERTIBLE: return to_string(ErrorCode::non_invertible_denominator);
    case EQUIMOT_ERR_UNCOVERED_GENERATOR: return to_string(ErrorCode::uncovered_generator);
    case EQUIMOT_ERR_UNSUPPORTED_SCENARIO: return to_string(ErrorCode::unsupported_scenario);
    case EQUIMOT_ERR_TOO_LARGE: return to_string(ErrorCode::too_large);
    case EQUIMOT_ERR_INCONSISTENT_COUNTS: return to_string(ErrorCode::inconsistent_counts);
    case EQUIMOT_ERR_SINGULAR_CURVE: return to_string(ErrorCode::singular_curve);
    case EQUIMOT_ERR_UNSUPPORTED: return to_string(ErrorCode::unsupported);
    case EQUIMOT_ERR_PARSE: return to_string(ErrorCode::parse_error);
    case EQUIMOT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void equimot_string_free(char* s) { std::free(s); }

// Groups

equimot_status equimot_group_create(const int64_t* divisors, size_t count, equimot_group** out) {
  return guard([&] {
    require(out, "out");
    *out = new equimot_group{AbelianGroup(residues_of(divisors, count))};
  });
}

equimot_status equimot_group_from_json(const char* json, equimot_group** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new equimot_group{codec::group_from_json(codec::parse(json))};
  });
}

void equimot_group_destroy(equimot_group* group) { delete group; }

int64_t equimot_group_order(const equimot_group* group) { return group ? group->value.order() : 0; }
int64_t equimot_group_exponent(const equimot_group* group) { return group ? group->value.exponent() : 0; }
size_t equimot_group_rank(const equimot_group* group) { return group ? group->value.rank() : 0; }

equimot_status equimot_group_character(const equimot_group* group, int64_t index, int64_t* residues,
                                       size_t capacity) {
  return guard([&] {
    require(group, "group");
    require(residues, "residues");
    const auto& G = group->value;
    if (index < 0 || index >= G.order())
      throw Error(ErrorCode::invalid_argument, "character index out of range: " + std::to_string(index) +
                                                   " not in [0, " + std::to_string(G.order()) + ")");
    if (capacity < G.rank()) throw Error(ErrorCode::invalid_argument, "residue buffer too small");
    const auto chi = G.characters()[static_cast<size_t>(index)];
    std::copy(chi.residues().begin(), chi.residues().end(), residues);
  });
}

// Ring elements

equimot_status equimot_element_from_json(const char* json, equimot_element** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new equimot_element{codec::ring_element_from_json(codec::parse(json))};
  });
}

equimot_status equimot_element_to_json(const equimot_element* e, char** out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = copy_string(codec::to_json(e->value).dump());
  });
}

equimot_status equimot_element_to_text(const equimot_element* e, char** out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = copy_string(e->value.to_string());
  });
}

int equimot_element_equal(const equimot_element* a, const equimot_element* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

void equimot_element_destroy(equimot_element* e) { delete e; }

equimot_status equimot_sym_affine_line(const equimot_group* group, const int64_t* chi, size_t rank, int64_t n,
                                       equimot_element** out) {
  return guard([&] {
    require(group, "group");
    require(out, "out");
    *out = new equimot_element{sym_affine_line(n, character_of(group->value, chi, rank))};
  });
}

equimot_status equimot_sym_curve_class(const equimot_group* group, int64_t genus, int64_t n,
                                       equimot_element** out) {
  return guard([&] {
    require(group, "group");
    require(out, "out");
    *out = new equimot_element{sym_curve_class(n, CurveSpec(genus, group->value))};
  });
}

equimot_status equimot_regular_rep_class(const equimot_group* group, equimot_element** out) {
  return guard([&] {
    require(group, "group");
    require(out, "out");
    *out = new equimot_element{regular_rep_class(group->value)};
  });
}

// Witnesses

equimot_status equimot_zeta_affine_line(const equimot_group* group, const int64_t* chi, size_t rank,
                                        equimot_witness** out) {
  return guard([&] {
    require(group, "group");
    require(out, "out");
    *out = new equimot_witness{zeta_affine_line(character_of(group->value, chi, rank), group->value)};
  });
}

equimot_status equimot_zeta_affine_space(const equimot_group* group, const int64_t* chars, size_t count,
                                         equimot_witness** out) {
  return guard([&] {
    require(group, "group");
    require(out, "out");
    const auto rank = group->value.rank();
    if (count > 0) require(chars, "chars");
    std::vector<Character> list;
    for (size_t k = 0; k < count; ++k) list.push_back(character_of(group->value, chars + k * rank, rank));
    *out = new equimot_witness{zeta_affine_space(list, group->value)};
  });
}

equimot_status equimot_zeta_curve(const equimot_group* group, int64_t genus, equimot_witness** out) {
  return guard([&] {
    require(group, "group");
    require(out, "out");
    *out = new equimot_witness{zeta_curve(CurveSpec(genus, group->value))};
  });
}

equimot_status equimot_witness_from_json(const char* json, equimot_witness** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new equimot_witness{codec::witness_from_json(codec::parse(json))};
  });
}

equimot_status equimot_witness_to_json(const equimot_witness* w, char** out) {
  return guard([&] {
    require(w, "witness");
    require(out, "out");
    *out = copy_string(codec::to_json(w->value).dump());
  });
}

equimot_status equimot_witness_to_text(const equimot_witness* w, char** out) {
  return guard([&] {
    require(w, "witness");
    require(out, "out");
    *out = copy_string(w->value.to_string());
  });
}

void equimot_witness_destroy(equimot_witness* w) { delete w; }

equimot_status equimot_witness_expand(const equimot_witness* w, int64_t order, equimot_series** out) {
  return guard([&] {
    require(w, "witness");
    require(out, "out");
    if (order < 0) throw Error(ErrorCode::invalid_argument, "expansion order must be nonnegative");
    *out = new equimot_series{ps_expand(w->value, static_cast<size_t>(order))};
  });
}

equimot_status equimot_witness_check(const equimot_witness* w, const equimot_series* s, int* holds) {
  return guard([&] {
    require(w, "witness");
    require(s, "series");
    require(holds, "holds");
    *holds = witness_check(w->value, s->value) ? 1 : 0;
  });
}

// Series

equimot_status equimot_series_from_json(const char* json, equimot_series** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new equimot_series{codec::series_from_json(codec::parse(json))};
  });
}

equimot_status equimot_series_to_json(const equimot_series* s, char** out) {
  return guard([&] {
    require(s, "series");
    require(out, "out");
    *out = copy_string(codec::to_json(s->value).dump());
  });
}

equimot_status equimot_series_to_text(const equimot_series* s, char** out) {
  return guard([&] {
    require(s, "series");
    require(out, "out");
    *out = copy_string(s->value.to_string());
  });
}

int64_t equimot_series_order(const equimot_series* s) {
  return s ? static_cast<int64_t>(s->value.order()) : -1;
}

equimot_status equimot_series_coefficient(const equimot_series* s, int64_t n, equimot_element** out) {
  return guard([&] {
    require(s, "series");
    require(out, "out");
    if (n < 0 || static_cast<size_t>(n) > s->value.order())
      throw Error(ErrorCode::invalid_argument, "coefficient index out of range");
    *out = new equimot_element{s->value[static_cast<size_t>(n)]};
  });
}

void equimot_series_destroy(equimot_series* s) { delete s; }

// Realization

equimot_status equimot_table_from_json(const char* json, equimot_table** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new equimot_table{codec::table_from_json(codec::parse(json))};
  });
}

equimot_status equimot_table_p1(int64_t q, int64_t r, int64_t g, equimot_table** out) {
  return guard([&] {
    require(out, "out");
    const P1Scenario sc(q, r);
    const auto elem = sc.group().element({g});
    *out = new equimot_table{p1_table(sc, elem, CurveSpec(0, sc.group()))};
  });
}

equimot_status equimot_table_to_json(const equimot_table* t, char** out) {
  return guard([&] {
    require(t, "table");
    require(out, "out");
    *out = copy_string(codec::to_json(t->value).dump());
  });
}

void equimot_table_destroy(equimot_table* t) { delete t; }

equimot_status equimot_realize(const equimot_element* e, const equimot_table* t, char** decimal) {
  return guard([&] {
    require(e, "element");
    require(t, "table");
    require(decimal, "decimal");
    *decimal = copy_string(realize(e->value, t->value).get_str());
  });
}

// Verification

equimot_status equimot_verify(const char* suite, const equimot_verify_params* params, equimot_report** out) {
  return guard([&] {
    require(suite, "suite");
    require(params, "params");
    require(out, "out");
    const std::string name = suite;
    VerifyReport report;
    if (name == "cross") {
      const AbelianGroup group(residues_of(params->divisors, params->divisor_count));
      const auto order = params->order > 0 ? params->order : 3 * group.order();
      report = verify_cross(group, static_cast<size_t>(order));
    } else if (name == "a1") {
      report = verify_a1(params->q, params->r, params->nmax);
    } else if (name == "p1") {
      report = verify_p1(params->q, params->r, params->nmax);
    } else if (name == "weil") {
      report = verify_weil(params->p, params->a, params->b, params->nmax);
    } else {
      throw Error(ErrorCode::invalid_argument, "unknown verification suite '" + name + "'");
    }
    auto summary = report.summary();
    *out = new equimot_report{std::move(report), std::move(summary)};
  });
}

size_t equimot_report_passed(const equimot_report* report) { return report ? report->value.passed() : 0; }
size_t equimot_report_failed(const equimot_report* report) { return report ? report->value.failed() : 0; }
const char* equimot_report_summary(const equimot_report* report) {
  return report ? report->summary.c_str() : "";
}
void equimot_report_destroy(equimot_report* report) { delete report; }

}  // extern "C"

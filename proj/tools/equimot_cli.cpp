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

// equimot command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "equimot.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// Thrown to unwind out of a subcommand with a diagnostic and exit code.
struct Abort {
  int code;
  std::string message;
};

void check(equimot_status status) {
  if (status == EQUIMOT_OK) return;
  const int code = status == EQUIMOT_ERR_TOO_LARGE ? kExitResource : kExitUsage;
  throw Abort{code, std::string(equimot_status_name(status)) + ": " + equimot_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Group = std::unique_ptr<equimot_group, Deleter<equimot_group, equimot_group_destroy>>;
using Element = std::unique_ptr<equimot_element, Deleter<equimot_element, equimot_element_destroy>>;
using Witness = std::unique_ptr<equimot_witness, Deleter<equimot_witness, equimot_witness_destroy>>;
using Series = std::unique_ptr<equimot_series, Deleter<equimot_series, equimot_series_destroy>>;
using Table = std::unique_ptr<equimot_table, Deleter<equimot_table, equimot_table_destroy>>;
using Report = std::unique_ptr<equimot_report, Deleter<equimot_report, equimot_report_destroy>>;

std::string take(char* s) {
  std::string out(s);
  equimot_string_free(s);
  return out;
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Abort{kExitUsage, "cannot open " + path};
  return read_all(in);
}

std::vector<std::int64_t> parse_tuple(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Abort{kExitUsage, "not an integer tuple: '" + text + "'"};
    }
  }
  return out;
}

struct ZetaOptions {
  std::string kind;
  std::vector<std::int64_t> group{1};
  std::vector<std::int64_t> char_indices;
  std::string chi;
  std::int64_t genus = 0;
  std::optional<std::int64_t> expand;
  bool json = false;
};

struct VerifyOptions {
  std::string suite;
  std::vector<std::int64_t> group{1};
  std::int64_t order = 0;
  std::int64_t q = 5;
  std::int64_t r = 2;
  std::int64_t p = 5;
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t nmax = 8;
};

struct RealizeOptions {
  std::optional<std::string> table;
  std::optional<std::string> input;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t g = 0;
  std::int64_t genus = 0;
  bool json = false;
};

Group make_group(const std::vector<std::int64_t>& divisors) {
  equimot_group* g = nullptr;
  check(equimot_group_create(divisors.data(), divisors.size(), &g));
  return Group(g);
}

// Characters named either by canonical indices or by ':'-separated residue tuples.
std::vector<std::vector<std::int64_t>> selected_characters(const ZetaOptions& opt, const equimot_group* group) {
  std::vector<std::vector<std::int64_t>> out;
  if (!opt.char_indices.empty() && !opt.chi.empty())
    throw Abort{kExitUsage, "use either --char or --chi, not both"};
  const auto rank = equimot_group_rank(group);
  for (auto index : opt.char_indices) {
    std::vector<std::int64_t> residues(rank);
    check(equimot_group_character(group, index, residues.data(), residues.size()));
    out.push_back(std::move(residues));
  }
  if (!opt.chi.empty()) {
    std::stringstream ss(opt.chi);
    std::string tuple;
    while (std::getline(ss, tuple, ':')) {
      auto residues = parse_tuple(tuple);
      if (residues.size() != rank)
        throw Abort{kExitUsage, "character '" + tuple + "' needs " + std::to_string(rank) + " residues"};
      out.push_back(std::move(residues));
    }
  }
  return out;
}

int run_zeta(const ZetaOptions& opt) {
  auto group = make_group(opt.group);
  equimot_witness* raw = nullptr;
  if (opt.kind == "curve") {
    if (!opt.char_indices.empty() || !opt.chi.empty())
      throw Abort{kExitUsage, "zeta curve takes no character"};
    check(equimot_zeta_curve(group.get(), opt.genus, &raw));
  } else {
    const auto chars = selected_characters(opt, group.get());
    if (opt.kind == "a1") {
      if (chars.size() != 1) throw Abort{kExitUsage, "zeta a1 needs exactly one character"};
      check(equimot_zeta_affine_line(group.get(), chars[0].data(), chars[0].size(), &raw));
    } else {
      std::vector<std::int64_t> flat;
      for (const auto& c : chars) flat.insert(flat.end(), c.begin(), c.end());
      check(equimot_zeta_affine_space(group.get(), flat.data(), chars.size(), &raw));
    }
  }
  Witness witness(raw);

  Series series;
  if (opt.expand) {
    if (*opt.expand < 0) throw Abort{kExitUsage, "--expand must be nonnegative"};
    equimot_series* s = nullptr;
    check(equimot_witness_expand(witness.get(), *opt.expand, &s));
    series.reset(s);
  }

  char* text = nullptr;
  if (opt.json) {
    check(equimot_witness_to_json(witness.get(), &text));
    auto w = take(text);
    if (series) {
      check(equimot_series_to_json(series.get(), &text));
      std::cout << "{\"witness\":" << w << ",\"series\":" << take(text) << "}\n";
    } else {
      std::cout << w << "\n";
    }
  } else {
    check(equimot_witness_to_text(witness.get(), &text));
    std::cout << "zeta(t) = " << take(text) << "\n";
    if (series) {
      check(equimot_series_to_text(series.get(), &text));
      std::cout << take(text);
    }
  }
  return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
  equimot_verify_params params{};
  params.divisors = opt.group.data();
  params.divisor_count = opt.group.size();
  params.order = opt.order;
  params.q = opt.q;
  params.r = opt.r;
  params.p = opt.p;
  params.a = opt.a;
  params.b = opt.b;
  params.nmax = opt.nmax;
  equimot_report* raw = nullptr;
  check(equimot_verify(opt.suite.c_str(), &params, &raw));
  Report report(raw);
  std::cout << "verify " << opt.suite << ": " << equimot_report_summary(report.get());
  return equimot_report_failed(report.get()) == 0 ? kExitOk : kExitChecksFailed;
}

int run_realize(const RealizeOptions& opt) {
  const auto text = opt.input ? read_file(*opt.input) : read_all(std::cin);
  equimot_element* e = nullptr;
  check(equimot_element_from_json(text.c_str(), &e));
  Element elem(e);

  equimot_table* t = nullptr;
  if (opt.table) {
    check(equimot_table_from_json(read_file(*opt.table).c_str(), &t));
  } else {
    if (opt.q == 0 || opt.r == 0) throw Abort{kExitUsage, "realize needs --table FILE or --q/--r/--g"};
    if (opt.genus != 0) throw Abort{kExitUsage, "the built-in P^1 scenario has genus 0"};
    check(equimot_table_p1(opt.q, opt.r, opt.g, &t));
  }
  Table table(t);

  char* value = nullptr;
  check(equimot_realize(elem.get(), table.get(), &value));
  const auto v = take(value);
  if (opt.json)
    std::cout << "{\"value\":\"" << v << "\"}\n";
  else
    std::cout << v << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant motivic zeta functions: witnesses, expansions, realizations"};
  app.require_subcommand(1);

  ZetaOptions zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "Rational witness of a motivic zeta function");
  zeta_cmd->add_option("kind", zeta.kind, "a1 | ak | curve")->required()->check(CLI::IsMember({"a1", "ak", "curve"}));
  zeta_cmd->add_option("--group", zeta.group, "Cyclic factors d1,d2,...")->delimiter(',');
  zeta_cmd->add_option("--char", zeta.char_indices, "Character indices in canonical order")->delimiter(',');
  zeta_cmd->add_option("--chi", zeta.chi, "Character residues a1,a2,... (':' separates characters)");
  zeta_cmd->add_option("--genus", zeta.genus, "Curve genus");
  zeta_cmd->add_option("--expand", zeta.expand, "Also print the series up to t^N");
  zeta_cmd->add_flag("--json", zeta.json, "Canonical JSON output");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify.suite, "cross | a1 | p1 | weil")
      ->required()
      ->check(CLI::IsMember({"cross", "a1", "p1", "weil"}));
  verify_cmd->add_option("--group", verify.group, "Cyclic factors d1,d2,...")->delimiter(',');
  verify_cmd->add_option("--order", verify.order, "Truncation order (default 3r)");
  verify_cmd->add_option("--q", verify.q, "Field size for a1/p1");
  verify_cmd->add_option("--r", verify.r, "Cyclic group order for a1/p1");
  verify_cmd->add_option("--p", verify.p, "Prime for weil");
  verify_cmd->add_option("--a", verify.a, "Curve coefficient a for weil");
  verify_cmd->add_option("--b", verify.b, "Curve coefficient b for weil");
  verify_cmd->add_option("--nmax", verify.nmax, "Largest degree checked");

  RealizeOptions realize;
  auto* realize_cmd = app.add_subcommand("realize", "Evaluate an element (JSON on stdin or FILE)");
  realize_cmd->add_option("input", realize.input, "Element JSON file (default: stdin)");
  realize_cmd->add_option("--table", realize.table, "Generator table JSON file");
  realize_cmd->add_option("--q", realize.q, "Scenario field size");
  realize_cmd->add_option("--r", realize.r, "Scenario group order");
  realize_cmd->add_option("--g", realize.g, "Group element");
  realize_cmd->add_option("--genus", realize.genus, "Curve genus (scenario supports 0)");
  realize_cmd->add_flag("--json", realize.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "equimot: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (zeta_cmd->parsed()) return run_zeta(zeta);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (realize_cmd->parsed()) return run_realize(realize);
  } catch (const Abort& a) {
    std::cerr << "equimot: " << a.message << "\n";
    return a.code;
  }
  return kExitUsage;
}

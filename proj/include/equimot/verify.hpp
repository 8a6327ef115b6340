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

#ifndef EQUIMOT_VERIFY_HPP
#define EQUIMOT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "equimot/groups.hpp"

namespace equimot {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

class VerifyReport {
 public:
  void add(std::string name, bool passed, std::string detail = {});

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept { return checks_.size() - passed(); }
  bool ok() const noexcept { return failed() == 0; }
  /// One line per failing check followed by a summary line.
  std::string summary() const;

 private:
  std::vector<CheckResult> checks_;
};

/// Cross-multiplication of the A^1 and A^k witnesses against their term
/// series, and of the curve witnesses (genus 0..2) against sym_curve_class,
/// up to t^order.
VerifyReport verify_cross(const AbelianGroup& group, std::size_t order);

/// Realized Sym^n(A^1, chi) against monic-polynomial enumeration on the
/// scaling scenario, for every chi, every g and n <= nmax.
VerifyReport verify_a1(std::int64_t q, std::int64_t r, std::int64_t nmax);

/// Realized genus-0 curve classes against fixed points of g on P^n, for
/// every g and n <= nmax.
VerifyReport verify_p1(std::int64_t q, std::int64_t r, std::int64_t nmax);

/// Genus-1 harness for y^2 = x^3 + a x + b over F_p: Hasse bound, divisor
/// counts N_1 (p^n - 1)/(p - 1) and the order-2 recurrence from the
/// denominator (1 - t)(1 - p t).
VerifyReport verify_weil(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t nmax);

}  // namespace equimot

#endif  // EQUIMOT_VERIFY_HPP

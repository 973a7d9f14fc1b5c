// Copyright 2026 The exo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXO_ERRORS_HPP
#define EXO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace exo {

/// Projected gate too far from unitary for the local invariants to mean
/// anything; inspect leakage instead.
class NearSingularError : public std::runtime_error {
 public:
  NearSingularError(const std::string& what, double abs_det)
      : std::runtime_error(what), abs_det_(abs_det) {}
  double abs_det() const noexcept { return abs_det_; }

 private:
  double abs_det_;
};

class TangentPoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sequence document failed to parse or validate. `line` is 1-based (0 when
/// unknown); `field` is a JSON path such as "gates[3].q1".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string field)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// A search ran out of its start budget; carries the best point found.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, double best_cost, std::vector<double> best_times)
      : std::runtime_error(what), best_cost_(best_cost), best_times_(std::move(best_times)) {}
  double best_cost() const noexcept { return best_cost_; }
  const std::vector<double>& best_times() const noexcept { return best_times_; }

 private:
  double best_cost_;
  std::vector<double> best_times_;
};

}  // namespace exo

#endif  // EXO_ERRORS_HPP

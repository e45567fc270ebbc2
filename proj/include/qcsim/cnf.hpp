// Copyright 2026 The qcsim Authors
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

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcsim {

// Positive or negated propositional variable; variables are numbered from 1.
struct Literal {
  int var;
  bool negated = false;

  static Literal pos(int var) { return {var, false}; }
  static Literal neg(int var) { return {var, true}; }
  // DIMACS convention: +v / -v.
  static Literal from_dimacs(int encoded) {
    return {encoded < 0 ? -encoded : encoded, encoded < 0};
  }
  int dimacs() const { return negated ? -var : var; }

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

// CNF clauses plus per-literal real weights. A variable is either unbiased
// (weight 1 for both polarities, not recorded) or has both polarity weights
// recorded. Clause order is preserved for deterministic export.
class WeightedCnf {
public:
  explicit WeightedCnf(int num_vars);

  int num_vars() const { return num_vars_; }
  // Allocates one more variable and returns its id.
  int add_var();

  void add_clause(Clause clause);
  // Appends a single-literal clause.
  void add_unit(Literal lit) { add_clause({lit}); }

  void set_weight(int var, double positive_weight, double negative_weight);
  bool biased(int var) const { return weights_.contains(var); }
  double weight(Literal lit) const;
  // Weight of assigning `value` to `var`.
  double weight_of(int var, bool value) const {
    return weight({var, !value});
  }

  const std::vector<Clause>& clauses() const { return clauses_; }
  // var -> (positive weight, negative weight), ordered by var.
  const std::map<int, std::pair<double, double>>& weights() const {
    return weights_;
  }

private:
  int num_vars_;
  std::vector<Clause> clauses_;
  std::map<int, std::pair<double, double>> weights_;
};

// Reads standard DIMACS (`p cnf V C` header, zero-terminated clauses). Weight
// comments in the exported format (`c p weight <lit> <w> 0`) are honored, so
// parse_dimacs(export_weighted(f)) reproduces f exactly.
WeightedCnf parse_dimacs(const std::string& text);

WeightedCnf parse_dimacs_file(const std::string& path);

// Emits the weighted-CNF text format: header, `c t wmc`, one
// `c p weight <lit> <w> 0` line per biased literal (17 significant digits),
// then zero-terminated clauses. Byte-deterministic.
std::string export_weighted(const WeightedCnf& formula);

// Exact weighted count by enumerating all 2^V assignments. The weight of an
// assignment is the product of literal weights over all declared variables.
// Guarded to num_vars <= 26.
double brute_force_wmc(const WeightedCnf& formula);

}  // namespace qcsim

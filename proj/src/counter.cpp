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

#include "qcsim/counter.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace qcsim {

namespace {

class DpllCounter {
public:
  DpllCounter(const WeightedCnf& formula, CountOptions options)
      : formula_(formula),
        options_(options),
        value_(static_cast<size_t>(formula.num_vars()) + 1, kOpen) {}

  double run() { return count_subtree(1.0); }

private:
  static constexpr std::int8_t kOpen = 0;
  static constexpr std::int8_t kTrue = 1;
  static constexpr std::int8_t kFalse = -1;

  bool literal_true(const Literal& lit) const {
    return value_[static_cast<size_t>(lit.var)] == (lit.negated ? kFalse : kTrue);
  }
  bool literal_false(const Literal& lit) const {
    return value_[static_cast<size_t>(lit.var)] == (lit.negated ? kTrue : kFalse);
  }

  void assign(int var, bool value) {
    value_[static_cast<size_t>(var)] = value ? kTrue : kFalse;
    trail_.push_back(var);
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      value_[static_cast<size_t>(trail_.back())] = kOpen;
      trail_.pop_back();
    }
  }

  // Propagates unit clauses to fixpoint. Multiplies the weights of forced
  // literals into `factor`. Returns false on conflict.
  bool propagate(double& factor) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& clause : formula_.clauses()) {
        bool satisfied = false;
        int open_count = 0;
        const Literal* open_lit = nullptr;
        for (const Literal& lit : clause) {
          if (literal_true(lit)) {
            satisfied = true;
            break;
          }
          if (!literal_false(lit)) {
            ++open_count;
            open_lit = &lit;
          }
        }
        if (satisfied) continue;
        if (open_count == 0) return false;
        if (open_count == 1) {
          assign(open_lit->var, !open_lit->negated);
          factor *= formula_.weight(*open_lit);
          changed = true;
        }
      }
    }
    return true;
  }

  // Weighted count of the subtree under the current partial assignment,
  // excluding weights of literals assigned by ancestors.
  double count_subtree(double assigned_product) {
    const size_t mark = trail_.size();
    double factor = 1.0;
    if (!propagate(factor)) {
      undo_to(mark);
      return 0.0;
    }

    bool all_satisfied = true;
    int branch_var = -1;
    for (const Clause& clause : formula_.clauses()) {
      bool satisfied = false;
      for (const Literal& lit : clause) {
        if (literal_true(lit)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      all_satisfied = false;
      for (const Literal& lit : clause) {
        if (literal_false(lit)) continue;
        if (branch_var < 0 ||
            (options_.branch_highest_first ? lit.var > branch_var
                                           : lit.var < branch_var)) {
          branch_var = lit.var;
        }
      }
    }

    double result;
    if (all_satisfied) {
      double free_product = 1.0;
      for (int var = 1; var <= formula_.num_vars(); ++var) {
        if (value_[static_cast<size_t>(var)] == kOpen) {
          free_product *=
              formula_.weight_of(var, true) + formula_.weight_of(var, false);
        }
      }
#ifndef NDEBUG
      // The running product must match a from-scratch recomputation.
      double recomputed = 1.0;
      for (int var = 1; var <= formula_.num_vars(); ++var) {
        if (value_[static_cast<size_t>(var)] != kOpen) {
          recomputed *=
              formula_.weight_of(var, value_[static_cast<size_t>(var)] == kTrue);
        }
      }
      assert(std::abs(recomputed - assigned_product * factor) <=
             1e-9 * std::max(1.0, std::abs(recomputed)));
#endif
      result = factor * free_product;
    } else {
      const size_t branch_mark = trail_.size();
      assign(branch_var, true);
      double high = formula_.weight_of(branch_var, true) *
                    count_subtree(assigned_product * factor *
                                  formula_.weight_of(branch_var, true));
      undo_to(branch_mark);
      assign(branch_var, false);
      double low = formula_.weight_of(branch_var, false) *
                   count_subtree(assigned_product * factor *
                                 formula_.weight_of(branch_var, false));
      undo_to(branch_mark);
      result = factor * (high + low);
    }
    undo_to(mark);
    return result;
  }

  const WeightedCnf& formula_;
  CountOptions options_;
  std::vector<std::int8_t> value_;
  std::vector<int> trail_;
};

}  // namespace

double count_weighted(const WeightedCnf& formula, CountOptions options) {
  return DpllCounter(formula, options).run();
}

}  // namespace qcsim

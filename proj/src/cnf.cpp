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

#include "qcsim/cnf.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qcsim/errors.hpp"

namespace qcsim {

WeightedCnf::WeightedCnf(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) {
    throw std::invalid_argument("variable count must be nonnegative");
  }
}

int WeightedCnf::add_var() { return ++num_vars_; }

void WeightedCnf::add_clause(Clause clause) {
  for (const Literal& lit : clause) {
    if (lit.var < 1 || lit.var > num_vars_) {
      throw std::out_of_range("clause literal " + std::to_string(lit.dimacs()) +
                              " references undeclared variable");
    }
  }
  clauses_.push_back(std::move(clause));
}

void WeightedCnf::set_weight(int var, double positive_weight,
                             double negative_weight) {
  if (var < 1 || var > num_vars_) {
    throw std::out_of_range("weight for undeclared variable " +
                            std::to_string(var));
  }
  weights_[var] = {positive_weight, negative_weight};
}

double WeightedCnf::weight(Literal lit) const {
  auto it = weights_.find(lit.var);
  if (it == weights_.end()) return 1.0;
  return lit.negated ? it->second.second : it->second.first;
}

namespace {

class DimacsScanner {
public:
  explicit DimacsScanner(const std::string& text) : stream_(text) {}

  // Returns false at end of input. Comment lines other than weight lines are
  // skipped; weight lines are collected.
  bool next_line(std::vector<std::string>& tokens, int& line_no) {
    std::string line;
    while (std::getline(stream_, line)) {
      ++line_no_;
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (tokens.empty()) continue;
      line_no = line_no_;
      return true;
    }
    return false;
  }

private:
  std::istringstream stream_;
  int line_no_ = 0;
};

int parse_int_token(const std::string& token, int line_no) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line_no, 1);
  }
  if (pos != token.size()) {
    throw ParseError("expected an integer, got '" + token + "'", line_no, 1);
  }
  return value;
}

double parse_double_token(const std::string& token, int line_no) {
  size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected a weight, got '" + token + "'", line_no, 1);
  }
  if (pos != token.size()) {
    throw ParseError("expected a weight, got '" + token + "'", line_no, 1);
  }
  return value;
}

std::string format_weight(double w) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", w);
  return buffer;
}

}  // namespace

WeightedCnf parse_dimacs(const std::string& text) {
  DimacsScanner scanner(text);
  std::vector<std::string> tokens;
  int line_no = 0;

  int num_vars = -1;
  int declared_clauses = 0;
  // Weight lines may precede full weight knowledge; collect then apply.
  std::vector<std::pair<int, double>> literal_weights;
  std::vector<Clause> clauses;
  Clause current;
  bool in_clause = false;

  while (scanner.next_line(tokens, line_no)) {
    if (tokens[0] == "c") {
      // `c p weight <lit> <w> 0` carries a literal weight; anything else is
      // a plain comment.
      if (tokens.size() >= 5 && tokens[1] == "p" && tokens[2] == "weight") {
        int lit = parse_int_token(tokens[3], line_no);
        double w = parse_double_token(tokens[4], line_no);
        literal_weights.emplace_back(lit, w);
      }
      continue;
    }
    if (tokens[0] == "p") {
      if (num_vars >= 0) {
        throw ParseError("duplicate 'p cnf' header", line_no, 1);
      }
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        throw ParseError("malformed header, expected 'p cnf <V> <C>'", line_no,
                         1);
      }
      num_vars = parse_int_token(tokens[2], line_no);
      declared_clauses = parse_int_token(tokens[3], line_no);
      if (num_vars < 0 || declared_clauses < 0) {
        throw ParseError("header counts must be nonnegative", line_no, 1);
      }
      continue;
    }
    if (num_vars < 0) {
      throw ParseError("clause before 'p cnf' header", line_no, 1);
    }
    for (const std::string& tok : tokens) {
      int value = parse_int_token(tok, line_no);
      if (value == 0) {
        clauses.push_back(current);
        current.clear();
        in_clause = false;
        continue;
      }
      int var = value < 0 ? -value : value;
      if (var > num_vars) {
        throw ParseError("literal " + std::to_string(value) +
                             " exceeds declared variable count " +
                             std::to_string(num_vars),
                         line_no, 1);
      }
      current.push_back(Literal::from_dimacs(value));
      in_clause = true;
    }
  }

  if (num_vars < 0) {
    throw ParseError("missing 'p cnf' header", line_no + 1, 1);
  }
  if (in_clause) {
    throw ParseError("clause missing terminating 0", line_no, 1);
  }

  WeightedCnf formula(num_vars);
  for (Clause& clause : clauses) formula.add_clause(std::move(clause));

  // Pair up polarity weights; a literal without a recorded partner keeps the
  // partner's default weight 1.
  std::map<int, std::pair<double, double>> by_var;
  for (auto [lit, w] : literal_weights) {
    int var = lit < 0 ? -lit : lit;
    if (var < 1 || var > num_vars) {
      throw ParseError("weight for undeclared variable " + std::to_string(lit),
                       line_no, 1);
    }
    auto [it, inserted] = by_var.try_emplace(var, 1.0, 1.0);
    if (lit > 0) {
      it->second.first = w;
    } else {
      it->second.second = w;
    }
  }
  for (const auto& [var, pair] : by_var) {
    formula.set_weight(var, pair.first, pair.second);
  }
  return formula;
}

WeightedCnf parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open CNF file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str());
}

std::string export_weighted(const WeightedCnf& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars() << ' ' << formula.clauses().size()
      << "\n";
  out << "c t wmc\n";
  for (const auto& [var, pair] : formula.weights()) {
    out << "c p weight " << var << ' ' << format_weight(pair.first) << " 0\n";
    out << "c p weight -" << var << ' ' << format_weight(pair.second) << " 0\n";
  }
  for (const Clause& clause : formula.clauses()) {
    for (const Literal& lit : clause) out << lit.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

double brute_force_wmc(const WeightedCnf& formula) {
  const int n = formula.num_vars();
  if (n > 26) {
    throw std::out_of_range("brute-force enumeration capped at 26 variables");
  }
  double total = 0.0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t assignment = 0; assignment < limit; ++assignment) {
    auto value_of = [&](int var) { return ((assignment >> (var - 1)) & 1) != 0; };
    bool satisfied = true;
    for (const Clause& clause : formula.clauses()) {
      bool clause_ok = false;
      for (const Literal& lit : clause) {
        if (value_of(lit.var) != lit.negated) {
          clause_ok = true;
          break;
        }
      }
      if (!clause_ok) {
        satisfied = false;
        break;
      }
    }
    if (!satisfied) continue;
    double weight = 1.0;
    for (int var = 1; var <= n; ++var) {
      weight *= formula.weight_of(var, value_of(var));
    }
    total += weight;
  }
  return total;
}

}  // namespace qcsim

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

#include "qcsim/circuit_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "qcsim/errors.hpp"

namespace qcsim {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_uint(const Token& token, int line_no) {
  if (token.text.empty()) {
    throw ParseError("expected a number", line_no, token.column);
  }
  for (char ch : token.text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("expected a nonnegative integer, got '" + token.text + "'",
                       line_no, token.column);
    }
  }
  try {
    return std::stoi(token.text);
  } catch (const std::exception&) {
    throw ParseError("number out of range: '" + token.text + "'", line_no,
                     token.column);
  }
}

int parse_qubit(const Token& token, int line_no, int n_qubits) {
  int q = parse_uint(token, line_no);
  if (q >= n_qubits) {
    throw ParseError("qubit index " + std::to_string(q) + " out of range (" +
                         std::to_string(n_qubits) + " qubits)",
                     line_no, token.column);
  }
  return q;
}

void require_arity(const std::vector<Token>& tokens, size_t n_args, int line_no) {
  if (tokens.size() != n_args + 1) {
    throw ParseError("gate '" + tokens[0].text + "' takes " +
                         std::to_string(n_args) + " qubit argument(s)",
                     line_no, tokens[0].column);
  }
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  int n_qubits = -1;
  std::vector<Gate> gates;

  while (std::getline(stream, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (n_qubits < 0) {
      if (tokens[0].text != "qubits") {
        throw ParseError("first directive must be 'qubits <n>'", line_no,
                         tokens[0].column);
      }
      if (tokens.size() != 2) {
        throw ParseError("'qubits' takes exactly one argument", line_no,
                         tokens[0].column);
      }
      n_qubits = parse_uint(tokens[1], line_no);
      if (n_qubits <= 0) {
        throw ParseError("qubit count must be positive", line_no,
                         tokens[1].column);
      }
      continue;
    }

    const std::string& name = tokens[0].text;
    try {
      if (name == "x" || name == "h" || name == "s" || name == "t") {
        require_arity(tokens, 1, line_no);
        int q = parse_qubit(tokens[1], line_no, n_qubits);
        if (name == "x") gates.push_back(Gate::x(q));
        else if (name == "h") gates.push_back(Gate::h(q));
        else if (name == "s") gates.push_back(Gate::s(q));
        else gates.push_back(Gate::t(q));
      } else if (name == "cx") {
        require_arity(tokens, 2, line_no);
        int c = parse_qubit(tokens[1], line_no, n_qubits);
        int t = parse_qubit(tokens[2], line_no, n_qubits);
        gates.push_back(Gate::cnot(c, t));
      } else if (name == "ccx") {
        require_arity(tokens, 3, line_no);
        int c0 = parse_qubit(tokens[1], line_no, n_qubits);
        int c1 = parse_qubit(tokens[2], line_no, n_qubits);
        int t = parse_qubit(tokens[3], line_no, n_qubits);
        gates.push_back(Gate::ccnot(c0, c1, t));
      } else if (name == "mcx") {
        if (tokens.size() < 3) {
          throw ParseError("'mcx' needs at least one control and a target",
                           line_no, tokens[0].column);
        }
        std::vector<ControlBit> controls;
        for (size_t i = 1; i + 1 < tokens.size(); ++i) {
          Token token = tokens[i];
          bool positive = true;
          if (!token.text.empty() && token.text[0] == '!') {
            positive = false;
            token.text.erase(0, 1);
            token.column += 1;
          }
          controls.push_back({parse_qubit(token, line_no, n_qubits), positive});
        }
        int t = parse_qubit(tokens.back(), line_no, n_qubits);
        gates.push_back(Gate::mcx(std::move(controls), t));
      } else {
        throw ParseError("unknown gate '" + name + "'", line_no,
                         tokens[0].column);
      }
    } catch (const std::invalid_argument& e) {
      // Gate constructor rejects duplicate qubits and bad arities.
      throw ParseError(e.what(), line_no, tokens[0].column);
    }
  }

  if (n_qubits < 0) {
    throw ParseError("missing 'qubits <n>' header", line_no + 1, 1);
  }
  return Circuit(n_qubits, std::move(gates));
}

Circuit parse_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open circuit file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit(buffer.str());
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.n_qubits() << "\n";
  for (const Gate& g : circuit.gates()) {
    out << gate_kind_name(g.kind());
    for (const ControlBit& c : g.controls()) {
      out << ' ';
      if (!c.positive) out << '!';
      out << c.qubit;
    }
    out << ' ' << g.target() << "\n";
  }
  return out.str();
}

}  // namespace qcsim

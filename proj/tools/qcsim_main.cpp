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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcsim/check.hpp"
#include "qcsim/circuit_io.hpp"
#include "qcsim/cnf.hpp"
#include "qcsim/counter.hpp"
#include "qcsim/dd.hpp"
#include "qcsim/encode_comp.hpp"
#include "qcsim/encode_pauli.hpp"
#include "qcsim/errors.hpp"
#include "qcsim/lowering.hpp"
#include "qcsim/oracle.hpp"
#include "qcsim/statevector.hpp"

namespace {

// Exit-code contract: 0 ok, 1 parse error, 2 gate-set/backend capability,
// 3 equal-up-to-global-factor, 4 not equal, 5 cross-check deviation.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitCapability = 2;
constexpr int kExitEquivFactor = 3;
constexpr int kExitEquivNot = 4;
constexpr int kExitCheckFail = 5;

std::string fmt12(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  std::string s = buffer;
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string fmt12(qcsim::Complex value) {
  if (std::abs(value.imag()) < 1e-12) return fmt12(value.real());
  return fmt12(value.real()) + (value.imag() < 0 ? " - " : " + ") +
         fmt12(std::abs(value.imag())) + "i";
}

class Stopwatch {
public:
  ~Stopwatch() {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    double ms = std::chrono::duration<double, std::milli>(elapsed).count();
    std::fprintf(stderr, "time: %.3f ms\n", ms);
  }

private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

qcsim::DdKind parse_kind(const std::string& name) {
  if (name == "add") return qcsim::DdKind::Add;
  if (name == "qmdd") return qcsim::DdKind::Qmdd;
  throw CLI::ValidationError("--kind must be add or qmdd");
}

struct SimQuery {
  std::string amplitude;
  std::string prob;
  int prob0 = -1;
  bool all = false;
};

int run_sim(const std::string& file, const std::string& backend,
            const SimQuery& query, int max_qubits) {
  using namespace qcsim;
  Circuit circuit = parse_circuit_file(file);
  const int n = circuit.n_qubits();

  int query_count = (query.amplitude.empty() ? 0 : 1) +
                    (query.prob.empty() ? 0 : 1) + (query.prob0 >= 0 ? 1 : 0) +
                    (query.all ? 1 : 0);
  if (query_count != 1) {
    std::cerr << "error: pass exactly one of --amplitude, --prob, --prob0, "
                 "--all\n";
    return kExitCapability;
  }
  auto parse_bits = [&](const std::string& text) {
    BasisString b = BasisString::from_string(text);
    if (b.size() != n) {
      throw std::invalid_argument("basis string length must equal qubit count");
    }
    return b;
  };
  if (query.all && n > 16) {
    std::cerr << "error: --all is limited to 16 qubits\n";
    return kExitCapability;
  }
  if (query.prob0 >= n) {
    std::cerr << "error: --prob0 qubit index out of range\n";
    return kExitCapability;
  }
  // wmc and the diagram backends derive --prob0 from the full distribution.
  if (query.prob0 >= 0 && backend != "sv" && backend != "pauli" && n > 16) {
    std::cerr << "error: --prob0 via " << backend
              << " enumerates 2^n outcomes and is limited to 16 qubits\n";
    return kExitCapability;
  }

  if (backend == "sv") {
    StateVector state = simulate(circuit, max_qubits);
    if (!query.amplitude.empty()) {
      std::cout << fmt12(state.amplitude(parse_bits(query.amplitude))) << "\n";
    } else if (!query.prob.empty()) {
      std::cout << fmt12(state.prob(parse_bits(query.prob))) << "\n";
    } else if (query.prob0 >= 0) {
      std::cout << fmt12(state.marginal_prob0(query.prob0)) << "\n";
    } else {
      for (size_t i = 0; i < state.amplitudes().size(); ++i) {
        BasisString b = BasisString::from_index(i, n);
        std::cout << b.str() << ' ' << fmt12(state.prob(b)) << "\n";
      }
    }
    return kExitOk;
  }

  if (backend == "add" || backend == "qmdd") {
    DdManager manager(parse_kind(backend), n);
    DdEdge state = manager.simulate(circuit);
    if (!query.amplitude.empty()) {
      std::cout << fmt12(manager.amplitude(state, parse_bits(query.amplitude)))
                << "\n";
    } else if (!query.prob.empty()) {
      std::cout << fmt12(manager.measure_prob(state, parse_bits(query.prob)))
                << "\n";
    } else if (query.prob0 >= 0) {
      double p0 = 0.0;
      for (size_t i = 0; i < (size_t{1} << n); ++i) {
        if ((i >> (n - 1 - query.prob0)) & 1) continue;
        p0 += manager.measure_prob(state, BasisString::from_index(i, n));
      }
      std::cout << fmt12(p0) << "\n";
    } else {
      for (size_t i = 0; i < (size_t{1} << n); ++i) {
        BasisString b = BasisString::from_index(i, n);
        std::cout << b.str() << ' ' << fmt12(manager.measure_prob(state, b))
                  << "\n";
      }
    }
    return kExitOk;
  }

  if (backend == "wmc") {
    if (!wmc_supports(circuit)) {
      std::cerr << "error: wmc backend handles Toffoli+H circuits only\n";
      return kExitCapability;
    }
    if (!query.amplitude.empty()) {
      std::cout << fmt12(amplitude_wmc(circuit, parse_bits(query.amplitude)))
                << "\n";
    } else if (!query.prob.empty()) {
      double amp = amplitude_wmc(circuit, parse_bits(query.prob));
      std::cout << fmt12(amp * amp) << "\n";
    } else if (query.prob0 >= 0) {
      double p0 = 0.0;
      for (size_t i = 0; i < (size_t{1} << n); ++i) {
        if ((i >> (n - 1 - query.prob0)) & 1) continue;
        double amp = amplitude_wmc(circuit, BasisString::from_index(i, n));
        p0 += amp * amp;
      }
      std::cout << fmt12(p0) << "\n";
    } else {
      for (size_t i = 0; i < (size_t{1} << n); ++i) {
        BasisString b = BasisString::from_index(i, n);
        double amp = amplitude_wmc(circuit, b);
        std::cout << b.str() << ' ' << fmt12(amp * amp) << "\n";
      }
    }
    return kExitOk;
  }

  if (backend == "pauli") {
    if (!pauli_supports(circuit)) {
      std::cerr << "error: pauli backend cannot lower mcx with more than two "
                   "controls\n";
      return kExitCapability;
    }
    if (query.prob0 < 0) {
      std::cerr << "error: the pauli backend answers --prob0 queries only\n";
      return kExitCapability;
    }
    bool lowered = false;
    qcsim::Circuit prepared = prepare_for_pauli(circuit, &lowered);
    if (lowered) {
      std::cerr << "notice: rewriting circuit to Clifford+T for the pauli "
                   "backend\n";
    }
    std::cout << fmt12(prob0_pauli(prepared, query.prob0)) << "\n";
    return kExitOk;
  }

  std::cerr << "error: unknown backend '" << backend << "'\n";
  return kExitCapability;
}

int run_encode(const std::string& file, const std::string& basis,
               const std::string& measure_bits, int measure_qubit,
               const std::string& out_path) {
  using namespace qcsim;
  Circuit circuit = parse_circuit_file(file);
  if (basis == "comp") {
    if (measure_bits.empty()) {
      std::cerr << "error: --basis comp needs --measure <bits>\n";
      return kExitCapability;
    }
    if (!wmc_supports(circuit)) {
      std::cerr << "error: computational-basis encoding handles Toffoli+H "
                   "circuits only\n";
      return kExitCapability;
    }
    BasisString b = BasisString::from_string(measure_bits);
    if (b.size() != circuit.n_qubits()) {
      std::cerr << "error: basis string length must equal qubit count\n";
      return kExitCapability;
    }
    CompEncoding enc = encode_circuit_comp(circuit);
    for (int q = 0; q < enc.n_qubits; ++q) {
      enc.cnf.add_unit({enc.final_vars[static_cast<size_t>(q)], !b.bit(q)});
    }
    write_file(out_path, export_weighted(enc.cnf));
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
  }
  if (basis == "pauli") {
    if (measure_qubit < 0) {
      std::cerr << "error: --basis pauli needs --measure-qubit <q>\n";
      return kExitCapability;
    }
    if (!pauli_supports(circuit)) {
      std::cerr << "error: pauli encoding cannot lower mcx with more than two "
                   "controls\n";
      return kExitCapability;
    }
    if (measure_qubit >= circuit.n_qubits()) {
      std::cerr << "error: measured qubit out of range\n";
      return kExitCapability;
    }
    bool lowered = false;
    Circuit prepared = prepare_for_pauli(circuit, &lowered);
    if (lowered) {
      std::cerr << "notice: rewriting circuit to Clifford+T for the pauli "
                   "encoding\n";
    }
    PauliEncoding enc = encode_circuit_pauli(prepared);
    write_file(out_path, export_weighted(measured_formula(enc, measure_qubit)));
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
  }
  std::cerr << "error: --basis must be comp or pauli\n";
  return kExitCapability;
}

int run_check(const std::string& file) {
  using namespace qcsim;
  Circuit circuit = parse_circuit_file(file);
  CheckReport report = cross_check(circuit);
  for (const BackendReport& backend : report.backends) {
    std::cout << backend.name << ": "
              << (backend.applicable ? "ok" : "skipped");
    if (!backend.note.empty()) std::cout << " (" << backend.note << ")";
    std::cout << "\n";
  }
  std::cout << "max deviation: " << fmt12(report.max_deviation) << "\n";
  std::cout << "check: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? kExitOk : kExitCheckFail;
}

int run_oracle(const std::string& dimacs_path, const std::string& out_path) {
  using namespace qcsim;
  WeightedCnf formula = parse_dimacs_file(dimacs_path);
  Circuit circuit = build_cnf_oracle(formula);
  write_file(out_path, serialize_circuit(circuit));
  std::cout << "wrote " << out_path << " (" << circuit.n_qubits()
            << " qubits)\n";
  return kExitOk;
}

int run_count(const std::string& cnf_path) {
  using namespace qcsim;
  WeightedCnf formula = parse_dimacs_file(cnf_path);
  std::cout << fmt12(count_weighted(formula)) << "\n";
  return kExitOk;
}

int run_equiv(const std::string& a_path, const std::string& b_path,
              const std::string& kind) {
  using namespace qcsim;
  Circuit a = parse_circuit_file(a_path);
  Circuit b = parse_circuit_file(b_path);
  EquivResult result = equiv_check(a, b, parse_kind(kind));
  switch (result.verdict) {
    case EquivVerdict::Equal:
      std::cout << "equal\n";
      return kExitOk;
    case EquivVerdict::EqualUpToGlobalFactor:
      std::cout << "equal up to global factor " << fmt12(result.factor)
                << "\n";
      return kExitEquivFactor;
    case EquivVerdict::NotEqual:
      std::cout << "not equal\n";
      return kExitEquivNot;
  }
  return kExitEquivNot;
}

int run_stats(const std::string& file, const std::string& kind) {
  using namespace qcsim;
  Circuit circuit = parse_circuit_file(file);
  DdManager manager(parse_kind(kind), circuit.n_qubits());
  DdEdge state = manager.simulate(circuit);
  std::cout << "kind=" << (manager.kind() == DdKind::Add ? "ADD" : "QMDD")
            << " nodes=" << manager.node_count(state)
            << " terminals=" << manager.terminal_count(state) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-circuit analysis toolkit: simulation via statevector, "
               "weighted model counting and decision diagrams, plus encoding "
               "export, CNF oracles and equivalence checking"};
  app.require_subcommand(1);

  std::string file;
  std::string backend = "sv";
  SimQuery query;
  int max_qubits = qcsim::StateVector::kDefaultMaxQubits;
  CLI::App* sim = app.add_subcommand("sim", "simulate a circuit");
  sim->add_option("file", file, "circuit file (.qc)")->required();
  sim->add_option("--backend", backend, "sv | wmc | pauli | add | qmdd");
  sim->add_option("--amplitude", query.amplitude, "basis string");
  sim->add_option("--prob", query.prob, "basis string");
  sim->add_option("--prob0", query.prob0, "qubit index");
  sim->add_flag("--all", query.all, "print all probabilities (n <= 16)");
  sim->add_option("--max-qubits", max_qubits,
                  "override the statevector qubit cap");

  std::string basis = "comp";
  std::string measure_bits;
  int measure_qubit = -1;
  std::string out_path;
  CLI::App* encode =
      app.add_subcommand("encode", "export a weighted-CNF encoding");
  encode->add_option("file", file, "circuit file (.qc)")->required();
  encode->add_option("--basis", basis, "comp | pauli");
  encode->add_option("--measure", measure_bits,
                     "basis string (comp basis measurement)");
  encode->add_option("--measure-qubit", measure_qubit,
                     "qubit index (pauli basis readout)");
  encode->add_option("-o,--out", out_path, "output file")->required();

  CLI::App* check = app.add_subcommand("check", "cross-check all backends");
  check->add_option("file", file, "circuit file (.qc)")->required();

  std::string second_file;
  CLI::App* oracle =
      app.add_subcommand("oracle", "build a CNF function-oracle circuit");
  oracle->add_option("dimacs", file, "DIMACS CNF file")->required();
  oracle->add_option("-o,--out", out_path, "output circuit file")->required();

  CLI::App* count = app.add_subcommand("count", "weighted model count");
  count->add_option("cnf", file, "weighted CNF file")->required();

  std::string kind = "qmdd";
  CLI::App* equiv = app.add_subcommand("equiv", "circuit equivalence check");
  equiv->add_option("a", file, "first circuit")->required();
  equiv->add_option("b", second_file, "second circuit")->required();
  equiv->add_option("--kind", kind, "add | qmdd");

  CLI::App* stats = app.add_subcommand("stats", "decision-diagram size");
  stats->add_option("file", file, "circuit file (.qc)")->required();
  stats->add_option("--kind", kind, "add | qmdd");

  CLI11_PARSE(app, argc, argv);

  Stopwatch stopwatch;
  try {
    if (sim->parsed()) return run_sim(file, backend, query, max_qubits);
    if (encode->parsed()) {
      return run_encode(file, basis, measure_bits, measure_qubit, out_path);
    }
    if (check->parsed()) return run_check(file);
    if (oracle->parsed()) return run_oracle(file, out_path);
    if (count->parsed()) return run_count(file);
    if (equiv->parsed()) return run_equiv(file, second_file, kind);
    if (stats->parsed()) return run_stats(file, kind);
  } catch (const qcsim::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qcsim::UnsupportedGateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const std::out_of_range& e) {
    // Size guards (for example the statevector qubit cap).
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

// Copyright 2026 The qclh Authors
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

#include "qclh/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qclh {

namespace {

using complex = std::complex<double>;

Eigen::Matrix2cd named_matrix(GateKind kind) {
    Eigen::Matrix2cd m;
    const double s = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::Identity: m << 1, 0, 0, 1; break;
        case GateKind::PauliX: m << 0, 1, 1, 0; break;
        case GateKind::PauliY: m << 0, complex(0, -1), complex(0, 1), 0; break;
        case GateKind::PauliZ: m << 1, 0, 0, -1; break;
        case GateKind::Hadamard: m << s, s, s, -s; break;
        case GateKind::PhaseS: m << 1, 0, 0, complex(0, 1); break;
        default: throw std::logic_error("named_matrix: not a named gate");
    }
    return m;
}

const std::map<std::string, GateKind> kNamedGates = {
    {"I", GateKind::Identity},  {"X", GateKind::PauliX}, {"Y", GateKind::PauliY},
    {"Z", GateKind::PauliZ},    {"H", GateKind::Hadamard}, {"S", GateKind::PhaseS},
};

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::Identity: return "I";
        case GateKind::PauliX: return "X";
        case GateKind::PauliY: return "Y";
        case GateKind::PauliZ: return "Z";
        case GateKind::Hadamard: return "H";
        case GateKind::PhaseS: return "S";
        case GateKind::Custom: return "U";
        case GateKind::CPhase: return "CPHASE";
    }
    return "?";
}

double unitarity_residual(const Eigen::Matrix2cd& u) {
    const Eigen::Matrix2cd delta = u.adjoint() * u - Eigen::Matrix2cd::Identity();
    return delta.cwiseAbs().maxCoeff();
}

}  // namespace

Gate Gate::single(GateKind kind, int qubit) {
    if (kind == GateKind::CPhase || kind == GateKind::Custom) {
        throw std::invalid_argument("Gate::single: use custom()/cphase() for this kind");
    }
    Gate g;
    g.kind = kind;
    g.target = qubit;
    g.matrix = named_matrix(kind);
    return g;
}

Gate Gate::custom(int qubit, const Eigen::Matrix2cd& matrix) {
    const double residual = unitarity_residual(matrix);
    if (residual > kUnitarityTol) {
        std::ostringstream msg;
        msg << "custom gate matrix is not unitary (residual " << residual << ")";
        throw std::invalid_argument(msg.str());
    }
    Gate g;
    g.kind = GateKind::Custom;
    g.target = qubit;
    g.matrix = matrix;
    return g;
}

Gate Gate::cphase(int qubit1, int qubit2) {
    if (qubit1 == qubit2) {
        throw std::invalid_argument("CPHASE requires two distinct targets");
    }
    Gate g;
    g.kind = GateKind::CPhase;
    g.target = qubit1;
    g.target2 = qubit2;
    return g;
}

Eigen::MatrixXcd Gate::block() const {
    if (kind == GateKind::CPhase) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
        m(3, 3) = -1.0;
        return m;
    }
    return matrix;
}

bool Gate::operator==(const Gate& other) const {
    if (kind != other.kind || target != other.target || target2 != other.target2) return false;
    if (kind == GateKind::Custom) return matrix == other.matrix;
    return true;
}

void Circuit::validate() const {
    if (witness_qubits < 1) throw std::invalid_argument("circuit needs at least one witness qubit");
    if (ancilla_qubits < 0) throw std::invalid_argument("negative ancilla count");
    if (gates.empty()) throw std::invalid_argument("circuit needs at least one gate");
    const int n = total_qubits();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        auto check = [&](int q) {
            if (q < 1 || q > n) {
                std::ostringstream msg;
                msg << "gate " << (i + 1) << ": qubit index " << q << " out of range [1, " << n << "]";
                throw std::invalid_argument(msg.str());
            }
        };
        check(g.target);
        if (g.is_two_qubit()) {
            check(g.target2);
            if (g.target == g.target2) {
                std::ostringstream msg;
                msg << "gate " << (i + 1) << ": duplicate CPHASE targets";
                throw std::invalid_argument(msg.str());
            }
        }
        if (g.kind == GateKind::Custom && unitarity_residual(g.matrix) > kUnitarityTol) {
            std::ostringstream msg;
            msg << "gate " << (i + 1) << ": custom matrix not unitary";
            throw std::invalid_argument(msg.str());
        }
    }
}

bool Circuit::operator==(const Circuit& other) const {
    return witness_qubits == other.witness_qubits && ancilla_qubits == other.ancilla_qubits &&
           gates == other.gates;
}

StateVector make_basis_state(int num_qubits, std::uint64_t index) {
    StateVector s;
    s.num_qubits = num_qubits;
    s.amplitudes = Eigen::VectorXcd::Zero(std::int64_t{1} << num_qubits);
    s.amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
    return s;
}

void apply_gate(StateVector& state, const Gate& gate) {
    const int n = state.num_qubits;
    auto& amps = state.amplitudes;
    if (gate.kind == GateKind::CPhase) {
        const std::uint64_t m1 = std::uint64_t{1} << (n - gate.target);
        const std::uint64_t m2 = std::uint64_t{1} << (n - gate.target2);
        const std::uint64_t both = m1 | m2;
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & both) == both) amps(static_cast<Eigen::Index>(i)) = -amps(static_cast<Eigen::Index>(i));
        }
        return;
    }
    if (gate.kind == GateKind::Identity) return;
    const Eigen::Matrix2cd& u = gate.matrix;
    const std::uint64_t mask = std::uint64_t{1} << (n - gate.target);
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t base = 0; base < dim; base += mask << 1) {
        for (std::uint64_t off = 0; off < mask; ++off) {
            const auto i0 = static_cast<Eigen::Index>(base + off);
            const auto i1 = static_cast<Eigen::Index>(base + off + mask);
            const complex a0 = amps(i0);
            const complex a1 = amps(i1);
            amps(i0) = u(0, 0) * a0 + u(0, 1) * a1;
            amps(i1) = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
}

namespace {

std::uint64_t witness_index(const Circuit& circuit, const std::string& witness) {
    if (static_cast<int>(witness.size()) != circuit.witness_qubits) {
        std::ostringstream msg;
        msg << "witness length " << witness.size() << " != n_x = " << circuit.witness_qubits;
        throw std::invalid_argument(msg.str());
    }
    std::uint64_t idx = 0;
    for (char c : witness) {
        if (c != '0' && c != '1') throw std::invalid_argument("witness must be a bitstring");
        idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
    }
    // witness bits occupy the leading qubits; ancillas start in |0>
    return idx << circuit.ancilla_qubits;
}

}  // namespace

StateVector simulate(const Circuit& circuit, const std::string& witness) {
    circuit.validate();
    StateVector state = make_basis_state(circuit.total_qubits(), witness_index(circuit, witness));
    for (const Gate& g : circuit.gates) apply_gate(state, g);
    return state;
}

double acceptance_probability(const Circuit& circuit, const std::string& witness) {
    const StateVector state = simulate(circuit, witness);
    const int n = state.num_qubits;
    const std::uint64_t outmask = std::uint64_t{1} << (n - 1);  // qubit 1
    double p = 0.0;
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & outmask) p += std::norm(state.amplitudes(static_cast<Eigen::Index>(i)));
    }
    return p;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
    circuit.validate();
    const int n = circuit.total_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        StateVector state = make_basis_state(n, static_cast<std::uint64_t>(col));
        for (const Gate& g : circuit.gates) apply_gate(state, g);
        u.col(col) = state.amplitudes;
    }
    return u;
}

std::vector<int> cphase_times(const Circuit& circuit) {
    std::vector<int> times;
    for (int t = 1; t <= circuit.length(); ++t) {
        if (circuit.gates[t - 1].is_two_qubit()) times.push_back(t);
    }
    return times;
}

Circuit pad_to_clock_capacity(const Circuit& circuit) {
    Circuit out = circuit;
    int width = 1;
    while ((1 << width) < out.length() + 1) ++width;
    const int padded_length = (1 << width) - 1;
    while (out.length() < padded_length) out.gates.push_back(Gate::single(GateKind::Identity, 1));
    return out;
}

Circuit pad_and_normalize(const Circuit& circuit, int spacing, ZDressing dressing) {
    circuit.validate();
    if (spacing < 4) throw std::invalid_argument("spacing L must be at least 4");

    // Runs of single-qubit gates separated by the CPhase gates.
    std::vector<std::vector<Gate>> runs(1);
    std::vector<Gate> cphases;
    for (const Gate& g : circuit.gates) {
        if (g.is_two_qubit()) {
            cphases.push_back(g);
            runs.emplace_back();
        } else {
            runs.back().push_back(g);
        }
    }
    const int k = static_cast<int>(cphases.size());

    Circuit out;
    out.witness_qubits = circuit.witness_qubits;
    out.ancilla_qubits = circuit.ancilla_qubits;

    if (k == 0) {
        out.gates = circuit.gates;
        while (out.length() < 2) out.gates.push_back(Gate::single(GateKind::Identity, 1));
        return out;
    }

    // Slot plan: CPhase ell at time ell*L, optional Z dressing at +-1, +-2,
    // originals in the free slots between windows, identities elsewhere.
    std::map<int, Gate> slots;
    auto place = [&](int t, const Gate& g) {
        auto it = slots.find(t);
        if (it != slots.end()) {
            if (!(it->second == g)) {
                std::ostringstream msg;
                msg << "spacing L=" << spacing << " leaves no room at slot " << t
                    << "; increase L";
                throw std::invalid_argument(msg.str());
            }
            return;
        }
        slots.emplace(t, g);
    };
    for (int ell = 1; ell <= k; ++ell) {
        const int t = ell * spacing;
        const Gate& cz = cphases[ell - 1];
        place(t, cz);
        if (dressing == ZDressing::Insert) {
            place(t - 2, Gate::single(GateKind::PauliZ, cz.target));
            place(t - 1, Gate::single(GateKind::PauliZ, cz.target2));
            place(t + 1, Gate::single(GateKind::PauliZ, cz.target2));
            place(t + 2, Gate::single(GateKind::PauliZ, cz.target));
        }
    }

    int length = k * spacing + 2;  // grows below; >= last CPhase + 3 at the end
    auto fill_run = [&](const std::vector<Gate>& run, int lo, int hi, bool extend) {
        int t = lo;
        for (const Gate& g : run) {
            while (t <= hi && slots.count(t)) ++t;
            if (t > hi) {
                if (!extend) {
                    std::ostringstream msg;
                    msg << "spacing L=" << spacing << " cannot fit " << run.size()
                        << " single-qubit gate(s) between CPHASE slots; increase L";
                    throw std::invalid_argument(msg.str());
                }
                hi = t;  // trailing run: just keep extending
            }
            slots.emplace(t, g);
            length = std::max(length, t);
            ++t;
        }
    };
    const int margin = dressing == ZDressing::Insert ? 2 : 0;
    fill_run(runs[0], 1, spacing - 1 - margin, false);
    for (int ell = 1; ell < k; ++ell) {
        fill_run(runs[ell], ell * spacing + 1 + margin, (ell + 1) * spacing - 1 - margin, false);
    }
    fill_run(runs[k], k * spacing + 1 + margin, k * spacing + 2, true);

    length = std::max(length, k * spacing + 3);
    for (int t = 1; t <= length; ++t) {
        auto it = slots.find(t);
        out.gates.push_back(it != slots.end() ? it->second : Gate::single(GateKind::Identity, 1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    std::ostringstream msg;
    msg << "circuit parse error on line " << line_no << ": " << what;
    throw std::invalid_argument(msg.str());
}

int parse_qubit_token(const std::string& tok, int line_no) {
    if (tok.size() < 2 || tok[0] != 'q') parse_fail(line_no, "expected qubit token q<i>, got '" + tok + "'");
    try {
        size_t pos = 0;
        const int q = std::stoi(tok.substr(1), &pos);
        if (pos != tok.size() - 1) parse_fail(line_no, "bad qubit token '" + tok + "'");
        return q;
    } catch (const std::invalid_argument&) {
        parse_fail(line_no, "bad qubit token '" + tok + "'");
    } catch (const std::out_of_range&) {
        parse_fail(line_no, "qubit index out of range in '" + tok + "'");
    }
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Circuit c;
    bool saw_version = false;
    bool saw_qubits = false;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (!saw_version) {
            if (toks.size() != 2 || toks[0] != "circuit" || toks[1] != "v1") {
                parse_fail(line_no, "expected header 'circuit v1'");
            }
            saw_version = true;
            continue;
        }
        if (!saw_qubits) {
            if (toks.size() != 3 || toks[0] != "qubits") {
                parse_fail(line_no, "expected 'qubits <n_x> <m_x>'");
            }
            try {
                c.witness_qubits = std::stoi(toks[1]);
                c.ancilla_qubits = std::stoi(toks[2]);
            } catch (const std::exception&) {
                parse_fail(line_no, "bad qubit counts");
            }
            saw_qubits = true;
            continue;
        }
        if (toks[0] != "gate") parse_fail(line_no, "expected 'gate ...'");
        if (toks.size() < 3) parse_fail(line_no, "gate line too short");
        const std::string& name = toks[1];
        try {
            if (name == "CPHASE") {
                if (toks.size() != 4) parse_fail(line_no, "CPHASE takes exactly two qubits");
                const int q1 = parse_qubit_token(toks[2], line_no);
                const int q2 = parse_qubit_token(toks[3], line_no);
                c.gates.push_back(Gate::cphase(q1, q2));
            } else if (name == "U") {
                if (toks.size() != 11) parse_fail(line_no, "custom gate takes q<i> plus 8 numbers");
                const int q = parse_qubit_token(toks[2], line_no);
                double vals[8];
                for (int j = 0; j < 8; ++j) {
                    size_t pos = 0;
                    vals[j] = std::stod(toks[3 + j], &pos);
                    if (pos != toks[3 + j].size()) parse_fail(line_no, "bad number '" + toks[3 + j] + "'");
                }
                Eigen::Matrix2cd m;
                m << complex(vals[0], vals[1]), complex(vals[2], vals[3]),
                     complex(vals[4], vals[5]), complex(vals[6], vals[7]);
                c.gates.push_back(Gate::custom(q, m));
            } else {
                auto it = kNamedGates.find(name);
                if (it == kNamedGates.end()) parse_fail(line_no, "unknown gate '" + name + "'");
                if (toks.size() != 3) parse_fail(line_no, "named gate takes exactly one qubit");
                c.gates.push_back(Gate::single(it->second, parse_qubit_token(toks[2], line_no)));
            }
        } catch (const std::invalid_argument& e) {
            // Re-tag construction failures (duplicate targets, non-unitary
            // matrices) with the line number.
            std::string what = e.what();
            if (what.rfind("circuit parse error", 0) == 0) throw;
            parse_fail(line_no, what);
        }
    }
    if (!saw_version) throw std::invalid_argument("circuit parse error on line 1: empty input");
    if (!saw_qubits) throw std::invalid_argument("circuit parse error: missing 'qubits' line");
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("circuit parse error: ") + e.what());
    }
    return c;
}

std::string serialize_circuit(const Circuit& circuit) {
    circuit.validate();
    std::ostringstream out;
    out << "circuit v1\n";
    out << "qubits " << circuit.witness_qubits << " " << circuit.ancilla_qubits << "\n";
    for (const Gate& g : circuit.gates) {
        out << "gate " << gate_name(g.kind) << " q" << g.target;
        if (g.kind == GateKind::CPhase) {
            out << " q" << g.target2;
        } else if (g.kind == GateKind::Custom) {
            for (int r = 0; r < 2; ++r) {
                for (int cidx = 0; cidx < 2; ++cidx) {
                    out << " " << format_double(g.matrix(r, cidx).real())
                        << " " << format_double(g.matrix(r, cidx).imag());
                }
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qclh

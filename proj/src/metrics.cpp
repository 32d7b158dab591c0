// Copyright 2026 The iongrover Authors
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

#include "iongrover/metrics.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "iongrover/grover.hpp"

namespace iongrover {

namespace {

std::vector<std::size_t> label_indices(std::size_t n, const std::vector<std::string> &labels) {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto &l : labels) {
        auto b = BasisLabel::parse(l);
        if (b.n_qubits() != n) {
            throw std::invalid_argument("label width does not match distribution: " + l);
        }
        out.push_back(b.index());
    }
    return out;
}

}  // namespace

Distribution noiseless_evolver(const Circuit &circuit, const StateVector &input) {
    return run(circuit, input).probabilities();
}

double asp(const Distribution &measured, const std::vector<std::size_t> &marked) {
    double total = 0.0;
    for (auto k : marked) {
        if (k >= measured.size()) {
            throw std::out_of_range("marked index outside distribution");
        }
        total += measured[k];
    }
    return total;
}

double asp(const Distribution &measured, const std::vector<std::string> &marked) {
    return asp(measured, label_indices(measured.n_qubits(), marked));
}

double sso(const Distribution &expected, const Distribution &measured) {
    if (expected.size() != measured.size()) {
        throw std::invalid_argument("sso: distributions have different lengths");
    }
    double s = 0.0;
    for (std::size_t j = 0; j < expected.size(); ++j) {
        s += std::sqrt(expected[j] * measured[j]);
    }
    return s * s;
}

Distribution expected_grover_distribution(std::size_t n, const std::vector<std::size_t> &marked) {
    const std::size_t N = std::size_t{1} << n;
    const std::size_t t = marked.size();
    std::vector<bool> is_marked(N, false);
    for (auto k : marked) {
        if (k >= N || is_marked[k]) {
            throw std::invalid_argument("marked indices must be distinct and in range");
        }
        is_marked[k] = true;
    }
    const double hit = theoretical_asp(N, t);
    std::vector<double> p(N);
    for (std::size_t k = 0; k < N; ++k) {
        p[k] = is_marked[k] ? hit / static_cast<double>(t)
                            : (t == N ? 0.0 : (1.0 - hit) / static_cast<double>(N - t));
    }
    return Distribution(std::move(p));
}

Distribution expected_grover_distribution(std::size_t n, const std::vector<std::string> &marked) {
    return expected_grover_distribution(n, label_indices(n, marked));
}

Distribution marginal(const Distribution &dist, const std::vector<std::size_t> &qubits) {
    const std::size_t n = dist.n_qubits();
    for (auto q : qubits) {
        if (q >= n) {
            throw std::out_of_range("marginal qubit out of range");
        }
    }
    const std::size_t m = qubits.size();
    std::vector<double> p(std::size_t{1} << m, 0.0);
    for (std::size_t k = 0; k < dist.size(); ++k) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < m; ++i) {
            out = (out << 1) | ((k >> (n - 1 - qubits[i])) & 1);
        }
        p[out] += dist[k];
    }
    return Distribution(std::move(p));
}

TruthTable truth_table(const Circuit &circuit, const std::vector<std::size_t> &io_qubits, const Evolver &evolve) {
    const std::size_t n = circuit.n_qubits();
    const std::size_t m = io_qubits.size();
    std::vector<bool> seen(n, false);
    for (auto q : io_qubits) {
        if (q >= n || seen[q]) {
            throw std::invalid_argument("io qubits must be distinct circuit qubits");
        }
        seen[q] = true;
    }
    if (m == 0) {
        throw std::invalid_argument("truth table needs at least one io qubit");
    }
    TruthTable tt;
    tt.rows.reserve(std::size_t{1} << m);
    for (std::size_t k = 0; k < (std::size_t{1} << m); ++k) {
        std::size_t full = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if ((k >> (m - 1 - i)) & 1) {
                full |= std::size_t{1} << (n - 1 - io_qubits[i]);
            }
        }
        tt.rows.push_back(marginal(evolve(circuit, StateVector::basis(n, BasisLabel(n, full))), io_qubits));
    }
    return tt;
}

double truth_table_fidelity(const TruthTable &tt, const std::vector<std::size_t> &ideal) {
    if (ideal.size() != tt.size() || tt.size() == 0) {
        throw std::invalid_argument("ideal map does not match truth table size");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < tt.size(); ++k) {
        if (ideal[k] >= tt.rows[k].size()) {
            throw std::out_of_range("ideal output outside truth table");
        }
        total += tt(k, ideal[k]);
    }
    return total / static_cast<double>(tt.size());
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

nlohmann::json distribution_to_json(const Distribution &dist) { return dist.probs(); }

Distribution distribution_from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("distribution must be a JSON array");
    }
    std::vector<double> p;
    for (const auto &v : j) {
        if (!v.is_number()) {
            throw std::invalid_argument("distribution entries must be numbers");
        }
        p.push_back(v.get<double>());
    }
    return Distribution(std::move(p));
}

std::string distribution_to_csv(const Distribution &dist) {
    std::ostringstream os;
    os << "label,probability\n";
    for (std::size_t k = 0; k < dist.size(); ++k) {
        os << label_string(k, dist.n_qubits()) << ',' << format_double(dist[k]) << '\n';
    }
    return os.str();
}

std::string truth_table_to_csv(const TruthTable &tt) {
    std::ostringstream os;
    if (tt.size() == 0) {
        return "input\n";
    }
    const std::size_t m = tt.rows.front().n_qubits();
    os << "input";
    for (std::size_t k = 0; k < tt.rows.front().size(); ++k) {
        os << ',' << label_string(k, m);
    }
    os << '\n';
    for (std::size_t r = 0; r < tt.size(); ++r) {
        os << label_string(r, m);
        for (std::size_t k = 0; k < tt.rows[r].size(); ++k) {
            os << ',' << format_double(tt(r, k));
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json truth_table_to_json(const TruthTable &tt) {
    auto rows = nlohmann::json::array();
    for (const auto &r : tt.rows) {
        rows.push_back(distribution_to_json(r));
    }
    return rows;
}

}  // namespace iongrover

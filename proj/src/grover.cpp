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

#include "iongrover/grover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace iongrover {

namespace {

constexpr double kHalfPi = kPi / 2;

std::size_t qubit_mask(std::size_t n, std::size_t q) { return std::size_t{1} << (n - 1 - q); }

std::vector<std::size_t> qubits_of(std::size_t n, std::size_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n; ++q) {
        if (mask & qubit_mask(n, q)) {
            out.push_back(q);
        }
    }
    return out;
}

void check_data_width(std::size_t n) {
    if (n < 1 || n > kMaxDataQubits) {
        throw std::invalid_argument("data register must have 1.." + std::to_string(kMaxDataQubits) + " qubits");
    }
}

/// Algebraic normal form of the indicator of `marked`: coefficient k is set
/// when the monomial over the qubits in mask k appears.
std::vector<bool> indicator_anf(std::size_t n, const std::vector<std::size_t> &marked) {
    std::vector<bool> a(std::size_t{1} << n, false);
    for (auto m : marked) {
        a[m] = true;
    }
    for (std::size_t bit = 1; bit < a.size(); bit <<= 1) {
        for (std::size_t x = 0; x < a.size(); ++x) {
            if (x & bit) {
                a[x] = a[x] != a[x ^ bit];
            }
        }
    }
    return a;
}

// XX cost of one monomial of the given degree.
std::size_t monomial_cost(OracleStyle style, int degree) {
    static constexpr std::size_t phase_cost[] = {0, 0, 1, 5};
    static constexpr std::size_t boolean_cost[] = {0, 1, 5, 11};
    return style == OracleStyle::phase ? phase_cost[degree] : boolean_cost[degree];
}

/// A marking circuit: a CNOT cascade mapping the register linearly, then the
/// X-conjugated monomials of the mapped set, then the cascade undone.
struct Synthesis {
    std::vector<std::pair<std::size_t, std::size_t>> cnots;  // (control, target)
    std::size_t x_mask = 0;
    std::vector<std::size_t> monomials;
    std::size_t cost = 0;

    bool needs_helper() const {
        return std::any_of(monomials.begin(), monomials.end(), [](std::size_t m) { return std::popcount(m) == 3; });
    }
};

Synthesis best_anf(std::size_t n, const std::vector<std::size_t> &marked, OracleStyle style) {
    std::optional<Synthesis> best;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> shifted;
        for (auto m : marked) {
            shifted.push_back(m ^ mask);
        }
        auto anf = indicator_anf(n, shifted);
        Synthesis s;
        s.x_mask = mask;
        for (std::size_t k = 0; k < anf.size(); ++k) {
            if (anf[k]) {
                s.monomials.push_back(k);
                s.cost += monomial_cost(style, std::popcount(k));
            }
        }
        std::stable_sort(s.monomials.begin(), s.monomials.end(),
                         [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });
        if (!best || s.cost < best->cost ||
            (s.cost == best->cost && std::popcount(s.x_mask) < std::popcount(best->x_mask))) {
            best = std::move(s);
        }
    }
    return *best;
}

Synthesis synthesize(const OracleSpec &spec) {
    const std::size_t n = spec.n();
    Synthesis best = best_anf(n, spec.marked(), spec.style());

    // Two labels at Hamming distance d > 1: CNOTs from one differing qubit to
    // the others bring the pair to distance 1, leaving a single subcube.
    if (spec.marked().size() == 2) {
        const std::size_t diff = spec.marked()[0] ^ spec.marked()[1];
        auto differing = qubits_of(n, diff);
        if (differing.size() > 1) {
            const std::size_t pivot = differing.front();
            std::vector<std::size_t> mapped;
            for (auto m : spec.marked()) {
                std::size_t x = m;
                if (x & qubit_mask(n, pivot)) {
                    for (std::size_t i = 1; i < differing.size(); ++i) {
                        x ^= qubit_mask(n, differing[i]);
                    }
                }
                mapped.push_back(x);
            }
            Synthesis reduced = best_anf(n, mapped, spec.style());
            for (std::size_t i = 1; i < differing.size(); ++i) {
                reduced.cnots.emplace_back(pivot, differing[i]);
            }
            reduced.cost += 2 * reduced.cnots.size();
            if (reduced.cost < best.cost) {
                best = std::move(reduced);
            }
        }
    }
    return best;
}

void append_x_layer(Circuit &c, std::size_t n, std::size_t mask) {
    for (auto q : qubits_of(n, mask)) {
        c.rx(q, kPi);
    }
}

OracleCircuit emit(const OracleSpec &spec, const Synthesis &s, const ChiSigns &signs) {
    const std::size_t n = spec.n();
    OracleCircuit out{Circuit(n), n, std::nullopt, std::nullopt};
    std::size_t width = n;
    if (spec.style() == OracleStyle::boolean) {
        out.target_ancilla = width++;
        if (s.needs_helper()) {
            out.helper_ancilla = width++;
        }
    }
    Circuit c(width);
    for (const auto &[ctrl, tgt] : s.cnots) {
        c.append(cnot_template(width, ctrl, tgt, signs));
    }
    append_x_layer(c, n, s.x_mask);
    for (auto m : s.monomials) {
        auto qs = qubits_of(n, m);
        if (spec.style() == OracleStyle::phase) {
            switch (qs.size()) {
                case 0: break;  // global phase
                case 1: c.append(rz_template(width, qs[0], kPi)); break;
                case 2: c.append(cz_template(width, qs[0], qs[1], signs)); break;
                default: c.append(ccz_template(width, qs[0], qs[1], qs[2], signs)); break;
            }
        } else {
            const std::size_t t = *out.target_ancilla;
            switch (qs.size()) {
                case 0: c.rx(t, kPi); break;
                case 1: c.append(cnot_template(width, qs[0], t, signs)); break;
                case 2: c.append(toffoli3_template(width, qs[0], qs[1], t, signs)); break;
                default: c.append(toffoli4_template(width, qs[0], qs[1], qs[2], t, *out.helper_ancilla, signs)); break;
            }
        }
    }
    append_x_layer(c, n, s.x_mask);
    for (auto it = s.cnots.rbegin(); it != s.cnots.rend(); ++it) {
        c.append(cnot_template(width, it->first, it->second, signs));
    }
    out.circuit = std::move(c);
    return out;
}

}  // namespace

std::string to_string(OracleStyle style) { return style == OracleStyle::phase ? "phase" : "boolean"; }

OracleStyle parse_style(const std::string &s) {
    if (s == "phase") {
        return OracleStyle::phase;
    }
    if (s == "boolean") {
        return OracleStyle::boolean;
    }
    throw std::invalid_argument("unknown oracle style '" + s + "'");
}

OracleSpec::OracleSpec(std::size_t n, const std::vector<std::string> &marked, OracleStyle style)
    : n_(n), style_(style) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("oracle width out of range");
    }
    if (marked.empty()) {
        throw std::invalid_argument("oracle needs at least one marked label");
    }
    for (const auto &bits : marked) {
        auto label = BasisLabel::parse(bits);
        if (label.n_qubits() != n) {
            throw std::invalid_argument("marked label '" + bits + "' does not have " + std::to_string(n) + " bits");
        }
        marked_.push_back(label.index());
    }
    std::sort(marked_.begin(), marked_.end());
    if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end()) {
        throw std::invalid_argument("marked labels must be distinct");
    }
}

std::vector<std::string> OracleSpec::marked_labels() const {
    std::vector<std::string> out;
    for (auto m : marked_) {
        out.push_back(label_string(m, n_));
    }
    return out;
}

bool OracleSpec::is_marked(std::size_t index) const { return std::binary_search(marked_.begin(), marked_.end(), index); }

OracleSpec OracleSpec::with_style(OracleStyle style) const {
    OracleSpec copy = *this;
    copy.style_ = style;
    return copy;
}

void to_json(nlohmann::json &j, const OracleSpec &spec) {
    j = {{"n", spec.n()}, {"marked", spec.marked_labels()}, {"style", to_string(spec.style())}};
}

OracleSpec oracle_from_json(const nlohmann::json &j) {
    try {
        return OracleSpec(j.at("n").get<std::size_t>(), j.at("marked").get<std::vector<std::string>>(),
                          parse_style(j.at("style").get<std::string>()));
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed oracle JSON: ") + e.what());
    }
}

void to_json(nlohmann::json &j, const GroverRunResult &r) {
    j = {{"distribution", r.data_distribution.probs()},
         {"xx_count", r.circuit_xx_count},
         {"qubits", r.total_qubits}};
}

Circuit initialization_stage(std::size_t n, OracleStyle style) {
    check_data_width(n);
    const std::size_t width = style == OracleStyle::boolean ? n + 1 : n;
    Circuit c(width);
    for (std::size_t q = 0; q < n; ++q) {
        c.ry(q, kHalfPi);
    }
    if (style == OracleStyle::boolean) {
        c.rx(n, kPi).ry(n, kHalfPi);
    }
    return c;
}

OracleCircuit phase_oracle(const OracleSpec &spec, const ChiSigns &signs) {
    if (spec.style() != OracleStyle::phase) {
        throw std::invalid_argument("phase_oracle needs a phase-style spec");
    }
    check_data_width(spec.n());
    return emit(spec, synthesize(spec), signs);
}

OracleCircuit boolean_oracle(const OracleSpec &spec, const ChiSigns &signs) {
    if (spec.style() != OracleStyle::boolean) {
        throw std::invalid_argument("boolean_oracle needs a boolean-style spec");
    }
    check_data_width(spec.n());
    return emit(spec, synthesize(spec), signs);
}

OracleCircuit synthesize_oracle(const OracleSpec &spec, const ChiSigns &signs) {
    return spec.style() == OracleStyle::phase ? phase_oracle(spec, signs) : boolean_oracle(spec, signs);
}

Circuit amplification_stage(std::size_t n, const ChiSigns &signs) {
    // Ry(pi/2)^n (I - 2|0><0|) Ry(-pi/2)^n = -(2|s><s| - I).
    check_data_width(n);
    Circuit c(n);
    for (std::size_t q = 0; q < n; ++q) {
        c.ry(q, -kHalfPi).rx(q, kPi);
    }
    switch (n) {
        case 1: c.append(rz_template(n, 0, kPi)); break;
        case 2: c.append(cz_template(n, 0, 1, signs)); break;
        default: c.append(ccz_template(n, 0, 1, 2, signs)); break;
    }
    for (std::size_t q = 0; q < n; ++q) {
        c.rx(q, kPi).ry(q, kHalfPi);
    }
    return c;
}

Circuit grover_circuit(const GroverConfig &config) {
    if (config.iterations < 1) {
        throw std::invalid_argument("Grover needs at least one iteration");
    }
    const auto &spec = config.oracle;
    auto oracle = synthesize_oracle(spec, config.signs);
    const std::size_t width = oracle.circuit.n_qubits();
    Circuit c = initialization_stage(spec.n(), spec.style()).widened(width);
    const Circuit amplify = amplification_stage(spec.n(), config.signs);
    for (std::size_t i = 0; i < config.iterations; ++i) {
        c.append(oracle.circuit);
        c.append(amplify);
    }
    return c;
}

Distribution marginal_leading(const Distribution &dist, std::size_t n_data) {
    if (n_data < 1 || n_data > dist.n_qubits()) {
        throw std::invalid_argument("marginal width out of range");
    }
    const std::size_t shift = dist.n_qubits() - n_data;
    std::vector<double> p(std::size_t{1} << n_data, 0.0);
    for (std::size_t k = 0; k < dist.size(); ++k) {
        p[k >> shift] += dist[k];
    }
    return Distribution(std::move(p));
}

GroverRunResult run_grover(const GroverConfig &config) {
    const Circuit c = grover_circuit(config);
    const auto full = run(c, StateVector::zero(c.n_qubits())).probabilities();
    return GroverRunResult{marginal_leading(full, config.oracle.n()), xx_count(c), c.n_qubits()};
}

double theoretical_asp(std::size_t database_size, std::size_t solutions) {
    const std::size_t N = database_size;
    const std::size_t t = solutions;
    if (t < 1 || t > N) {
        throw std::invalid_argument("solution count must be in 1..N");
    }
    // t ((N - 2t) + 2(N - t))^2 / N^3, evaluated in integers then divided once.
    const auto amp = static_cast<std::int64_t>(3 * N) - static_cast<std::int64_t>(4 * t);
    const auto num = static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(amp * amp);
    return static_cast<double>(num) / static_cast<double>(N * N * N);
}

double classical_asp(std::size_t database_size, std::size_t solutions) {
    const std::size_t N = database_size;
    const std::size_t t = solutions;
    if (N < 2 || t < 1 || t > N) {
        throw std::invalid_argument("classical baseline needs N >= 2 and 1 <= t <= N");
    }
    // t/N + (N - t)/N * t/(N - 1) = t (2N - t - 1) / (N (N - 1)).
    return static_cast<double>(t * (2 * N - t - 1)) / static_cast<double>(N * (N - 1));
}

std::vector<OracleSpec> enumerate_oracles(std::size_t n, std::size_t t, OracleStyle style) {
    const std::size_t dim = std::size_t{1} << n;
    if (t < 1 || t > dim) {
        throw std::invalid_argument("solution count must be in 1..2^n");
    }
    std::vector<OracleSpec> out;
    std::vector<std::size_t> pick(t);
    for (std::size_t i = 0; i < t; ++i) {
        pick[i] = i;
    }
    while (true) {
        std::vector<std::string> labels;
        for (auto k : pick) {
            labels.push_back(label_string(k, n));
        }
        out.emplace_back(n, labels, style);
        // Next combination in lexicographic order.
        std::size_t i = t;
        while (i > 0 && pick[i - 1] == dim - t + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < t; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace iongrover

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

#include "iongrover/noise.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "iongrover/decompose.hpp"

namespace iongrover {

namespace {

// Trajectories are summed in fixed blocks and the block sums are added in
// index order, so the floating point result is independent of scheduling.
constexpr std::uint64_t kBlock = 256;

const std::array<Mat2, 4> &paulis() {
    static const std::array<Mat2, 4> p{{
        {1, 0, 0, 1},
        {0, 1, 1, 0},
        {0, Complex(0, -1), Complex(0, 1), 0},
        {1, 0, 0, -1},
    }};
    return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t trajectory) {
    return splitmix64(splitmix64(seed) ^ trajectory);
}

struct Fault {
    std::size_t after_gate;
    std::size_t qubit_a;
    int pauli_a;
    std::size_t qubit_b;
    int pauli_b;
};

std::vector<Fault> draw_faults(const Circuit &circuit, const NoiseModel &noise, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pick2(1, 15);
    std::uniform_int_distribution<int> pick1(1, 3);
    std::vector<Fault> faults;
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        // Both draws are made for every gate so that raising p only adds faults.
        const double u = coin(rng);
        if (const auto *x = std::get_if<XXGate>(&gates[i])) {
            const int which = pick2(rng);
            if (u < noise.p_xx) {
                faults.push_back({i, x->qa, which / 4, x->qb, which % 4});
            }
        } else {
            const int which = pick1(rng);
            if (u < noise.p_r) {
                const auto q = std::get<RotationGate>(gates[i]).qubit;
                faults.push_back({i, q, which, q, 0});
            }
        }
    }
    return faults;
}

StateVector apply_fault(StateVector s, const Fault &f) {
    if (f.pauli_a != 0) {
        s = s.apply_one_qubit(f.qubit_a, paulis()[static_cast<std::size_t>(f.pauli_a)]);
    }
    if (f.pauli_b != 0) {
        s = s.apply_one_qubit(f.qubit_b, paulis()[static_cast<std::size_t>(f.pauli_b)]);
    }
    return s;
}

double require_number(const nlohmann::json &j, const char *key) {
    if (!j.at(key).is_number()) {
        throw std::invalid_argument(std::string("config field '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

std::uint64_t require_count(const nlohmann::json &j, const char *key) {
    const auto &v = j.at(key);
    if (!v.is_number_unsigned()) {
        throw std::invalid_argument(std::string("config field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

}  // namespace

void NoiseModel::validate() const {
    if (!(p_xx >= 0.0 && p_xx < 1.0) || !(p_r >= 0.0 && p_r < 1.0)) {
        throw std::invalid_argument("noise probabilities must lie in [0, 1)");
    }
}

void SpamModel::validate() const {
    for (double v : {eps0, eps1, crosstalk}) {
        if (!(v >= 0.0 && v < 0.5)) {
            throw std::invalid_argument("SPAM parameters must lie in [0, 0.5)");
        }
    }
}

NoiseConfig noise_config_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("noise config must be a JSON object");
    }
    NoiseConfig c;
    for (const auto &[key, value] : j.items()) {
        if (key == "p_xx") {
            c.noise.p_xx = require_number(j, "p_xx");
        } else if (key == "p_r") {
            c.noise.p_r = require_number(j, "p_r");
        } else if (key == "eps0") {
            c.spam.eps0 = require_number(j, "eps0");
        } else if (key == "eps1") {
            c.spam.eps1 = require_number(j, "eps1");
        } else if (key == "crosstalk") {
            c.spam.crosstalk = require_number(j, "crosstalk");
        } else if (key == "trajectories") {
            c.trajectories = require_count(j, "trajectories");
        } else if (key == "seed") {
            c.seed = require_count(j, "seed");
        } else {
            throw std::invalid_argument("unknown config field '" + key + "'");
        }
    }
    c.noise.validate();
    c.spam.validate();
    if (c.trajectories < 1) {
        throw std::invalid_argument("trajectories must be at least 1");
    }
    return c;
}

nlohmann::json to_json(const NoiseConfig &c) {
    return {{"p_xx", c.noise.p_xx},      {"p_r", c.noise.p_r},
            {"eps0", c.spam.eps0},        {"eps1", c.spam.eps1},
            {"crosstalk", c.spam.crosstalk}, {"trajectories", c.trajectories},
            {"seed", c.seed}};
}

Distribution run_noisy(const Circuit &circuit, const NoiseModel &noise, std::uint64_t trajectories,
                       std::uint64_t seed, const std::optional<StateVector> &initial) {
    noise.validate();
    if (trajectories < 1) {
        throw std::invalid_argument("trajectories must be at least 1");
    }
    const std::size_t n = circuit.n_qubits();
    const StateVector start = initial ? *initial : StateVector::zero(n);
    if (start.n_qubits() != n) {
        throw std::invalid_argument("initial state width does not match circuit");
    }
    const auto &gates = circuit.gates();

    // prefix[i] is the noiseless state after the first i gates. A trajectory
    // resumes from the state just after its first fault.
    std::vector<StateVector> prefix{start};
    prefix.reserve(gates.size() + 1);
    for (const auto &g : gates) {
        prefix.push_back(apply_gate(prefix.back(), g));
    }
    const std::vector<double> clean = prefix.back().probabilities().probs();
    const std::size_t dim = clean.size();

    const std::uint64_t n_blocks = (trajectories + kBlock - 1) / kBlock;
    std::vector<std::vector<double>> block_sums(n_blocks, std::vector<double>(dim, 0.0));

    auto run_block = [&](std::uint64_t b) {
        auto &acc = block_sums[b];
        const std::uint64_t end = std::min(trajectories, (b + 1) * kBlock);
        for (std::uint64_t t = b * kBlock; t < end; ++t) {
            std::mt19937_64 rng(stream_seed(seed, t));
            const auto faults = draw_faults(circuit, noise, rng);
            if (faults.empty()) {
                for (std::size_t k = 0; k < dim; ++k) {
                    acc[k] += clean[k];
                }
                continue;
            }
            std::size_t next = 0;
            StateVector s = prefix[faults.front().after_gate + 1];
            for (std::size_t i = faults.front().after_gate; i < gates.size(); ++i) {
                if (i > faults.front().after_gate) {
                    s = apply_gate(s, gates[i]);
                }
                while (next < faults.size() && faults[next].after_gate == i) {
                    s = apply_fault(std::move(s), faults[next++]);
                }
            }
            for (std::size_t k = 0; k < dim; ++k) {
                acc[k] += std::norm(s[k]);
            }
        }
    };

    const std::uint64_t workers =
        std::min<std::uint64_t>(n_blocks, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) {
            run_block(b);
        }
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t b = w; b < n_blocks; b += workers) {
                    run_block(b);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    std::vector<double> p(dim, 0.0);
    for (const auto &bs : block_sums) {
        for (std::size_t k = 0; k < dim; ++k) {
            p[k] += bs[k];
        }
    }
    double total = 0.0;
    for (auto &v : p) {
        v /= static_cast<double>(trajectories);
        total += v;
    }
    for (auto &v : p) {
        v /= total;
    }
    return Distribution(std::move(p));
}

Evolver noisy_evolver(const NoiseModel &noise, std::uint64_t trajectories, std::uint64_t seed) {
    return [=](const Circuit &c, const StateVector &in) { return run_noisy(c, noise, trajectories, seed, in); };
}

double fit_p_xx(double target_fidelity, std::uint64_t trajectories, std::uint64_t seed) {
    if (!(target_fidelity > 0.0 && target_fidelity <= 1.0)) {
        throw std::invalid_argument("target fidelity must lie in (0, 1]");
    }
    const Circuit t3 = toffoli3_template(3, 0, 1, 2);
    std::vector<std::size_t> ideal{0, 1, 2, 3, 4, 5, 7, 6};
    auto fidelity = [&](double p) {
        return truth_table_fidelity(truth_table(t3, {0, 1, 2}, noisy_evolver(NoiseModel{p, 0.0}, trajectories, seed)),
                                    ideal);
    };
    double lo = 0.0;
    double hi = 0.25;
    for (int it = 0; it < 18; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (fidelity(mid) > target_fidelity) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Eigen::MatrixXd confusion_matrix(const SpamModel &spam, std::size_t n) {
    spam.validate();
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("confusion matrix width out of range");
    }
    const std::size_t dim = std::size_t{1} << n;
    auto bit = [n](std::size_t k, std::size_t q) { return (k >> (n - 1 - q)) & 1; };
    Eigen::MatrixXd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t truth = 0; truth < dim; ++truth) {
        // Probability that each qubit reads 1 given the whole true pattern.
        std::vector<double> p1(n);
        for (std::size_t q = 0; q < n; ++q) {
            if (bit(truth, q)) {
                p1[q] = 1.0 - spam.eps1;
            } else {
                int bright = 0;
                if (q > 0 && bit(truth, q - 1)) {
                    ++bright;
                }
                if (q + 1 < n && bit(truth, q + 1)) {
                    ++bright;
                }
                const double bleed = 1.0 - std::pow(1.0 - spam.crosstalk, bright);
                p1[q] = spam.eps0 + (1.0 - spam.eps0) * bleed;
            }
        }
        for (std::size_t read = 0; read < dim; ++read) {
            double p = 1.0;
            for (std::size_t q = 0; q < n; ++q) {
                p *= bit(read, q) ? p1[q] : 1.0 - p1[q];
            }
            m(static_cast<Eigen::Index>(read), static_cast<Eigen::Index>(truth)) = p;
        }
    }
    return m;
}

Distribution apply_spam(const Distribution &true_dist, const SpamModel &spam) {
    const Eigen::MatrixXd m = confusion_matrix(spam, true_dist.n_qubits());
    const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(true_dist.probs().data(), m.cols());
    const Eigen::VectorXd y = m * x;
    std::vector<double> p(y.data(), y.data() + y.size());
    const double total = y.sum();
    for (auto &v : p) {
        v = std::max(v, 0.0) / total;
    }
    return Distribution(std::move(p));
}

Distribution correct_spam(const Distribution &measured, const SpamModel &spam) {
    const Eigen::MatrixXd m = confusion_matrix(spam, measured.n_qubits());
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) {
        throw std::domain_error("confusion matrix is singular");
    }
    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(measured.probs().data(), m.rows());
    const Eigen::VectorXd x = lu.solve(y);
    std::vector<double> p(x.data(), x.data() + x.size());
    double total = 0.0;
    for (auto &v : p) {
        v = std::max(v, 0.0);
        total += v;
    }
    if (total <= 0.0) {
        throw std::domain_error("SPAM correction produced no probability mass");
    }
    for (auto &v : p) {
        v /= total;
    }
    return Distribution(std::move(p));
}

}  // namespace iongrover

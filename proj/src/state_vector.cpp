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

#include "iongrover/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace iongrover {

namespace {

std::size_t bit_mask(std::size_t n_qubits, std::size_t q) {
    return std::size_t{1} << (n_qubits - 1 - q);
}

void check_qubit_count(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in 1.." + std::to_string(kMaxQubits));
    }
}

template <std::size_t D>
bool is_unitary_impl(const std::array<Complex, D * D> &u, double tol) {
    for (std::size_t r = 0; r < D; ++r) {
        for (std::size_t c = 0; c < D; ++c) {
            Complex acc{};
            for (std::size_t k = 0; k < D; ++k) {
                acc += std::conj(u[k * D + r]) * u[k * D + c];
            }
            if (std::abs(acc - Complex(r == c ? 1.0 : 0.0)) > tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

BasisLabel::BasisLabel(std::size_t n_qubits, std::size_t index) : n_qubits_(n_qubits), index_(index) {
    if (n_qubits == 0 || n_qubits > 63 || index >= (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("basis index out of range");
    }
}

BasisLabel BasisLabel::parse(std::string_view bits) {
    if (bits.empty() || bits.size() > 63) {
        throw std::invalid_argument("malformed basis label '" + std::string(bits) + "'");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("malformed basis label '" + std::string(bits) + "'");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return BasisLabel(bits.size(), index);
}

std::string BasisLabel::bits() const { return label_string(index_, n_qubits_); }

bool BasisLabel::bit(std::size_t qubit) const { return (index_ & bit_mask(n_qubits_, qubit)) != 0; }

std::string label_string(std::size_t index, std::size_t n_qubits) {
    std::string out(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (index & bit_mask(n_qubits, q)) {
            out[q] = '1';
        }
    }
    return out;
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty() || !std::has_single_bit(probs_.size())) {
        throw std::invalid_argument("distribution length must be a power of two");
    }
    n_qubits_ = static_cast<std::size_t>(std::countr_zero(probs_.size()));
    double total = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < -kUnitaryTol) {
            throw std::invalid_argument("distribution entries must be non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kUnitaryTol) {
        throw std::invalid_argument("distribution must sum to 1");
    }
}

Distribution Distribution::uniform(std::size_t n_qubits) {
    std::size_t dim = std::size_t{1} << n_qubits;
    return Distribution(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

Distribution Distribution::point_mass(std::size_t n_qubits, std::size_t index) {
    std::vector<double> p(std::size_t{1} << n_qubits, 0.0);
    p.at(index) = 1.0;
    return Distribution(std::move(p));
}

double Distribution::at(std::string_view bits) const {
    auto label = BasisLabel::parse(bits);
    if (label.n_qubits() != n_qubits_) {
        throw std::invalid_argument("label width does not match distribution");
    }
    return probs_[label.index()];
}

StateVector::StateVector(std::vector<Complex> amps, std::size_t n_qubits, Unchecked)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector::StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
    if (amps_.size() < 2 || !std::has_single_bit(amps_.size())) {
        throw std::invalid_argument("state length must be 2^n");
    }
    n_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
    check_qubit_count(n_qubits_);
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state amplitudes must be finite");
        }
    }
    if (std::abs(norm_squared() - 1.0) > kUnitaryTol) {
        throw std::invalid_argument("state must be normalized");
    }
}

StateVector StateVector::basis(std::size_t n_qubits, const BasisLabel &label) {
    check_qubit_count(n_qubits);
    if (label.n_qubits() != n_qubits) {
        throw std::invalid_argument("label width does not match qubit count");
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    amps[label.index()] = 1.0;
    return StateVector(std::move(amps), n_qubits, Unchecked{});
}

StateVector StateVector::basis(std::size_t n_qubits, std::string_view bits) {
    return basis(n_qubits, BasisLabel::parse(bits));
}

StateVector StateVector::zero(std::size_t n_qubits) { return basis(n_qubits, BasisLabel(n_qubits, 0)); }

StateVector init_basis(std::size_t n_qubits, std::string_view bits) { return StateVector::basis(n_qubits, bits); }

double StateVector::norm_squared() const {
    return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                           [](double acc, const Complex &a) { return acc + std::norm(a); });
}

StateVector StateVector::apply_one_qubit(std::size_t q, const Mat2 &u) const {
    if (q >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    if (!is_unitary(u)) {
        throw std::invalid_argument("single-qubit matrix is not unitary");
    }
    const std::size_t m = bit_mask(n_qubits_, q);
    std::vector<Complex> out(amps_);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (k & m) {
            continue;
        }
        const Complex a0 = amps_[k];
        const Complex a1 = amps_[k | m];
        out[k] = u[0] * a0 + u[1] * a1;
        out[k | m] = u[2] * a0 + u[3] * a1;
    }
    return StateVector(std::move(out), n_qubits_, Unchecked{});
}

StateVector StateVector::apply_two_qubit(std::size_t qa, std::size_t qb, const Mat4 &u) const {
    if (qa >= n_qubits_ || qb >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    if (qa == qb) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    if (!is_unitary(u)) {
        throw std::invalid_argument("two-qubit matrix is not unitary");
    }
    const std::size_t ma = bit_mask(n_qubits_, qa);
    const std::size_t mb = bit_mask(n_qubits_, qb);
    std::vector<Complex> out(amps_);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (k & (ma | mb)) {
            continue;
        }
        const std::array<std::size_t, 4> idx{k, k | mb, k | ma, k | ma | mb};
        std::array<Complex, 4> in{};
        for (std::size_t j = 0; j < 4; ++j) {
            in[j] = amps_[idx[j]];
        }
        for (std::size_t r = 0; r < 4; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < 4; ++c) {
                acc += u[r * 4 + c] * in[c];
            }
            out[idx[r]] = acc;
        }
    }
    return StateVector(std::move(out), n_qubits_, Unchecked{});
}

Distribution StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Complex &a) { return std::norm(a); });
    return Distribution(std::move(p));
}

std::map<std::string, std::uint64_t> StateVector::sample(std::uint64_t shots, std::uint64_t seed) const {
    return sample_distribution(probabilities(), shots, seed);
}

std::map<std::string, std::uint64_t> sample_distribution(
    const Distribution &dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    std::vector<double> cdf(dist.size());
    std::partial_sum(dist.probs().begin(), dist.probs().end(), cdf.begin());
    std::vector<std::uint64_t> counts(dist.size(), 0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, cdf.back());
    for (std::uint64_t s = 0; s < shots; ++s) {
        auto it = std::upper_bound(cdf.begin(), cdf.end(), unif(rng));
        std::size_t k = static_cast<std::size_t>(it - cdf.begin());
        if (k == dist.size()) {
            // Rounding at the top of the CDF; fall back to the last supported outcome.
            do {
                --k;
            } while (k > 0 && dist[k] == 0.0);
        }
        ++counts[k];
    }
    std::map<std::string, std::uint64_t> out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] > 0) {
            out[label_string(k, dist.n_qubits())] = counts[k];
        }
    }
    return out;
}

bool is_unitary(const Mat2 &u, double tol) { return is_unitary_impl<2>(u, tol); }
bool is_unitary(const Mat4 &u, double tol) { return is_unitary_impl<4>(u, tol); }

}  // namespace iongrover

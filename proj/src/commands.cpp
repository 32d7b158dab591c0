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

#include "iongrover/commands.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "iongrover/decompose.hpp"
#include "iongrover/metrics.hpp"
#include "iongrover/tomography.hpp"

namespace iongrover {

namespace {

constexpr std::uint64_t kFitTrajectories = 2000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(index ^ splitmix64(salt)));
}

nlohmann::json meta(const std::string &command, const CommonOptions &c) {
    return {{"command", command}, {"seed", c.seed}, {"version", kVersion}};
}

nlohmann::json noise_block(const ResolvedNoise &n) {
    nlohmann::json j = to_json(n.config);
    j["fitted"] = n.fitted_p_xx.has_value();
    return j;
}

std::string results_name(const std::string &command, OutputFormat f) {
    return command + (f == OutputFormat::json ? ".json" : ".csv");
}

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

struct GateEntry {
    Circuit circuit;
    std::vector<std::size_t> io;
    std::vector<std::size_t> ideal;
};

std::vector<std::size_t> swap_last_two(std::size_t dim) {
    std::vector<std::size_t> m(dim);
    std::iota(m.begin(), m.end(), 0);
    std::swap(m[dim - 2], m[dim - 1]);
    return m;
}

std::vector<std::size_t> identity_map(std::size_t dim) {
    std::vector<std::size_t> m(dim);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

GateEntry gate_entry(const std::string &gate) {
    if (gate == "toffoli3") {
        return {toffoli3_template(3, 0, 1, 2), {0, 1, 2}, swap_last_two(8)};
    }
    if (gate == "toffoli4") {
        return {toffoli4_template(5, 0, 1, 2, 3, 4), {0, 1, 2, 3}, swap_last_two(16)};
    }
    if (gate == "cnot") {
        return {cnot_template(2, 0, 1), {0, 1}, swap_last_two(4)};
    }
    // Diagonal gates have the identity truth table.
    if (gate == "cz") {
        return {cz_template(2, 0, 1), {0, 1}, identity_map(4)};
    }
    if (gate == "ccz") {
        return {ccz_template(3, 0, 1, 2), {0, 1, 2}, identity_map(8)};
    }
    throw std::invalid_argument("unknown gate '" + gate + "' (expected toffoli3, toffoli4, cnot, cz or ccz)");
}

std::optional<double> hardware_reference_asp(std::size_t n, std::size_t t, OracleStyle style) {
    if (n != 3) {
        return std::nullopt;
    }
    if (t == 1) {
        return style == OracleStyle::phase ? 0.437 : 0.389;
    }
    if (t == 2) {
        return style == OracleStyle::phase ? 0.753 : 0.679;
    }
    return std::nullopt;
}

std::string join(const std::vector<std::string> &items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? std::string(1, sep) : "") + items[i];
    }
    return out;
}

// Runs fn(i) for i in [0, count) on a small pool; results land by index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn) {
    const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto &th : pool) {
        th.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace

OutputFormat parse_format(const std::string &s) {
    if (s == "json") {
        return OutputFormat::json;
    }
    if (s == "csv") {
        return OutputFormat::csv;
    }
    throw std::invalid_argument("unknown format '" + s + "'");
}

NoiseSource parse_noise_source(const std::string &arg) {
    if (arg.empty()) {
        return {};
    }
    if (arg == "fitted") {
        return {NoiseSource::Kind::fitted, ""};
    }
    return {NoiseSource::Kind::file, arg};
}

NoiseConfig load_noise_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("malformed config file '" + path + "': " + e.what());
    }
    try {
        return noise_config_from_json(j);
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument("invalid config file '" + path + "': " + e.what());
    }
}

std::optional<ResolvedNoise> resolve_noise(const NoiseSource &src, std::uint64_t seed,
                                           std::optional<std::uint64_t> trajectories) {
    switch (src.kind) {
    case NoiseSource::Kind::none:
        return std::nullopt;
    case NoiseSource::Kind::file: {
        ResolvedNoise r{load_noise_config(src.path), std::nullopt};
        if (trajectories) {
            r.config.trajectories = *trajectories;
        }
        return r;
    }
    case NoiseSource::Kind::fitted: {
        ResolvedNoise r;
        r.config.trajectories = trajectories.value_or(kFitTrajectories);
        r.config.seed = seed;
        r.config.noise.p_xx = fit_p_xx(kFittedToffoli3Fidelity, r.config.trajectories, seed);
        r.fitted_p_xx = r.config.noise.p_xx;
        return r;
    }
    }
    return std::nullopt;
}

CommandOutput cmd_gate_table(const GateTableOptions &opts) {
    const GateEntry g = gate_entry(opts.gate);
    const auto &c = opts.common;
    const auto noise = resolve_noise(c.noise, c.seed, c.trajectories);

    CommandOutput out;
    const TruthTable ideal_tt = truth_table(g.circuit, g.io);
    nlohmann::json row{{"gate", opts.gate},
                       {"qubits", g.circuit.n_qubits()},
                       {"xx_count", xx_count(g.circuit)},
                       {"fidelity_noiseless", truth_table_fidelity(ideal_tt, g.ideal)}};
    out.files.emplace_back(opts.gate + "_truth_table.csv", truth_table_to_csv(ideal_tt));
    if (noise) {
        const TruthTable noisy_tt = truth_table(
            g.circuit, g.io, noisy_evolver(noise->config.noise, noise->config.trajectories, noise->config.seed));
        row["fidelity_noisy"] = truth_table_fidelity(noisy_tt, g.ideal);
        row["p_xx"] = noise->config.noise.p_xx;
        out.files.emplace_back(opts.gate + "_truth_table_noisy.csv", truth_table_to_csv(noisy_tt));
    }

    std::ostringstream summary;
    summary << opts.gate << ": xx_count " << row["xx_count"].get<std::size_t>() << ", fidelity "
            << format_double(row["fidelity_noiseless"].get<double>());
    if (noise) {
        summary << ", noisy fidelity " << format_double(row["fidelity_noisy"].get<double>()) << " at p_xx "
                << format_double(noise->config.noise.p_xx);
    }
    summary << '\n';

    if (c.format == OutputFormat::json) {
        nlohmann::json doc{{"meta", meta("gate-table", c)}, {"rows", nlohmann::json::array({row})}};
        if (noise) {
            doc["noise"] = noise_block(*noise);
        }
        out.files.emplace_back(results_name("gate_table", c.format), dump(doc));
    } else {
        std::ostringstream csv;
        csv << "gate,qubits,xx_count,fidelity_noiseless,fidelity_noisy,p_xx\n";
        csv << opts.gate << ',' << row["qubits"].get<std::size_t>() << ',' << row["xx_count"].get<std::size_t>()
            << ',' << format_double(row["fidelity_noiseless"].get<double>()) << ','
            << (noise ? format_double(row["fidelity_noisy"].get<double>()) : "") << ','
            << (noise ? format_double(noise->config.noise.p_xx) : "") << '\n';
        out.files.emplace_back(results_name("gate_table", c.format), csv.str());
    }
    out.summary = summary.str();
    return out;
}

nlohmann::json grover_row(const OracleSpec &spec, const std::optional<ResolvedNoise> &noise,
                          const std::optional<SpamModel> &spam, std::optional<std::uint64_t> shots,
                          std::uint64_t seed, std::uint64_t index) {
    const GroverConfig config{spec};
    const Circuit circuit = grover_circuit(config);
    Distribution dist;
    if (noise) {
        dist = marginal_leading(
            run_noisy(circuit, noise->config.noise, noise->config.trajectories, derive_seed(noise->config.seed, index, 1)),
            spec.n());
    } else {
        dist = run_grover(config).data_distribution;
    }
    nlohmann::json row{{"marked", spec.marked_labels()},
                       {"style", to_string(spec.style())},
                       {"xx_count", xx_count(circuit)},
                       {"qubits", circuit.n_qubits()}};
    if (spam) {
        dist = apply_spam(dist, *spam);
    }
    if (shots) {
        const auto counts = sample_distribution(dist, *shots, derive_seed(seed, index, 2));
        std::vector<double> p(dist.size(), 0.0);
        nlohmann::json jc = nlohmann::json::object();
        for (const auto &[label, count] : counts) {
            p[BasisLabel::parse(label).index()] = static_cast<double>(count) / static_cast<double>(*shots);
            jc[label] = count;
        }
        row["counts"] = jc;
        dist = Distribution(std::move(p));
    }
    if (spam) {
        row["uncorrected_distribution"] = distribution_to_json(dist);
        dist = correct_spam(dist, *spam);
    }
    row["distribution"] = distribution_to_json(dist);
    row["asp"] = asp(dist, spec.marked());
    row["sso"] = sso(expected_grover_distribution(spec.n(), spec.marked()), dist);
    return row;
}

CommandOutput cmd_grover(const GroverOptions &opts) {
    const auto &c = opts.common;
    const OracleStyle style = parse_style(opts.style);
    std::vector<OracleSpec> specs;
    std::size_t n = 3;
    if (opts.all) {
        if (!opts.marked.empty()) {
            throw std::invalid_argument("--all and --marked are mutually exclusive");
        }
        if (!opts.t || (*opts.t != 1 && *opts.t != 2)) {
            throw std::invalid_argument("--all requires --t 1 or --t 2");
        }
        specs = enumerate_oracles(n, *opts.t, style);
    } else {
        if (opts.marked.empty()) {
            throw std::invalid_argument("give --marked labels or --all");
        }
        n = opts.marked.front().size();
        if (n < 1 || n > kMaxDataQubits) {
            throw std::invalid_argument("marked labels must have 1 to 3 bits");
        }
        if (opts.t && *opts.t != opts.marked.size()) {
            throw std::invalid_argument("--t does not match the number of marked labels");
        }
        specs.emplace_back(n, opts.marked, style);
    }
    if (opts.shots && *opts.shots < 1) {
        throw std::invalid_argument("--shots must be at least 1");
    }
    std::optional<SpamModel> spam;
    if (!opts.spam_path.empty()) {
        spam = load_noise_config(opts.spam_path).spam;
    }
    const auto noise = resolve_noise(c.noise, c.seed, c.trajectories);

    std::vector<nlohmann::json> rows(specs.size());
    parallel_for(specs.size(), [&](std::size_t i) {
        rows[i] = grover_row(specs[i], noise, spam, opts.shots, c.seed, i);
    });

    const std::size_t t = specs.front().marked().size();
    double mean_asp = 0.0;
    double mean_sso = 0.0;
    for (const auto &r : rows) {
        mean_asp += r["asp"].get<double>();
        mean_sso += r["sso"].get<double>();
    }
    mean_asp /= static_cast<double>(rows.size());
    mean_sso /= static_cast<double>(rows.size());
    const std::size_t N = std::size_t{1} << n;
    nlohmann::json aggregate{{"oracles", rows.size()},
                             {"t", t},
                             {"style", to_string(style)},
                             {"mean_asp", mean_asp},
                             {"mean_sso", mean_sso},
                             {"theoretical_asp", theoretical_asp(N, t)},
                             {"classical_asp", classical_asp(N, t)}};
    const auto reference = hardware_reference_asp(n, t, style);
    if (opts.all && noise && reference) {
        aggregate["hardware_reference_asp"] = *reference;
    }

    CommandOutput out;
    if (c.format == OutputFormat::json) {
        nlohmann::json doc{{"meta", meta("grover", c)}, {"rows", rows}, {"aggregate", aggregate}};
        if (noise) {
            doc["noise"] = noise_block(*noise);
        }
        if (spam) {
            doc["spam"] = {{"eps0", spam->eps0}, {"eps1", spam->eps1}, {"crosstalk", spam->crosstalk}};
        }
        out.files.emplace_back(results_name("grover", c.format), dump(doc));
    } else {
        std::ostringstream csv;
        csv << "marked,style,asp,sso,xx_count,qubits";
        for (std::size_t k = 0; k < N; ++k) {
            csv << ",p_" << label_string(k, n);
        }
        csv << '\n';
        for (const auto &r : rows) {
            csv << join(r["marked"].get<std::vector<std::string>>(), ';') << ',' << r["style"].get<std::string>()
                << ',' << format_double(r["asp"].get<double>()) << ',' << format_double(r["sso"].get<double>())
                << ',' << r["xx_count"].get<std::size_t>() << ',' << r["qubits"].get<std::size_t>();
            for (const auto &p : r["distribution"]) {
                csv << ',' << format_double(p.get<double>());
            }
            csv << '\n';
        }
        out.files.emplace_back(results_name("grover", c.format), csv.str());
    }

    std::ostringstream summary;
    summary << rows.size() << " oracle(s), style " << to_string(style) << ", t " << t << ": mean asp "
            << format_double(mean_asp) << ", mean sso " << format_double(mean_sso) << ", classical "
            << format_double(classical_asp(N, t));
    if (aggregate.contains("hardware_reference_asp")) {
        summary << ", hardware reference " << format_double(*reference);
    }
    if (noise && noise->fitted_p_xx) {
        summary << ", fitted p_xx " << format_double(*noise->fitted_p_xx);
    }
    summary << '\n';
    out.summary = summary.str();
    return out;
}

CommandOutput cmd_tomography(const TomographyOptions &opts) {
    const auto &c = opts.common;
    const auto noise = resolve_noise(c.noise, c.seed, c.trajectories);
    const Circuit gate = toffoli3_template(3, 0, 1, 2);

    CommandOutput out;
    const TruthTable ideal = limited_tomography(gate);
    std::vector<nlohmann::json> rows{{{"variant", "noiseless"}, {"success", tomography_success(ideal)}}};
    out.files.emplace_back("tomography_table.csv", truth_table_to_csv(ideal));
    if (noise) {
        const TruthTable noisy = limited_tomography(
            gate, noisy_evolver(noise->config.noise, noise->config.trajectories, noise->config.seed));
        rows.push_back({{"variant", "noisy"},
                        {"success", tomography_success(noisy)},
                        {"p_xx", noise->config.noise.p_xx},
                        {"hardware_reference_success", 0.821}});
        out.files.emplace_back("tomography_table_noisy.csv", truth_table_to_csv(noisy));
    }

    if (c.format == OutputFormat::json) {
        nlohmann::json doc{{"meta", meta("tomography", c)}, {"rows", rows}};
        if (noise) {
            doc["noise"] = noise_block(*noise);
        }
        out.files.emplace_back(results_name("tomography", c.format), dump(doc));
    } else {
        std::ostringstream csv;
        csv << "variant,success\n";
        for (const auto &r : rows) {
            csv << r["variant"].get<std::string>() << ',' << format_double(r["success"].get<double>()) << '\n';
        }
        out.files.emplace_back(results_name("tomography", c.format), csv.str());
    }

    std::ostringstream summary;
    for (const auto &r : rows) {
        summary << r["variant"].get<std::string>() << " success " << format_double(r["success"].get<double>());
        if (r.contains("hardware_reference_success")) {
            summary << " (hardware reference 0.821)";
        }
        summary << '\n';
    }
    out.summary = summary.str();
    return out;
}

CommandOutput cmd_costs(const CostsOptions &opts) {
    const auto &c = opts.common;
    if (opts.n_min < 3) {
        throw std::invalid_argument("Toffoli-n costs need n >= 3");
    }
    if (opts.n_max < opts.n_min) {
        throw std::invalid_argument("empty n range");
    }
    std::vector<nlohmann::json> rows;
    std::ostringstream csv;
    csv << "n,xx_count,ancillas\n";
    for (std::size_t n = opts.n_min; n <= opts.n_max; ++n) {
        const auto r = toffoli_n_cost(n);
        rows.push_back({{"n", r.n}, {"xx_count", r.xx_count}, {"ancillas", r.ancilla_count}});
        csv << r.n << ',' << r.xx_count << ',' << r.ancilla_count << '\n';
    }
    CommandOutput out;
    if (c.format == OutputFormat::json) {
        out.files.emplace_back(results_name("costs", c.format), dump({{"meta", meta("costs", c)}, {"rows", rows}}));
    } else {
        out.files.emplace_back(results_name("costs", c.format), csv.str());
    }
    out.summary = csv.str();
    return out;
}

void write_output(const CommandOutput &out, const std::string &dir) {
    namespace fs = std::filesystem;
    const fs::path root(dir);
    fs::create_directories(root);
    std::vector<std::pair<fs::path, fs::path>> staged;
    try {
        for (const auto &[name, content] : out.files) {
            const fs::path final_path = root / name;
            fs::path tmp = final_path;
            tmp += ".partial";
            std::ofstream f(tmp, std::ios::binary);
            f << content;
            f.close();
            staged.emplace_back(tmp, final_path);
            if (!f) {
                throw std::runtime_error("failed to write " + final_path.string());
            }
        }
    } catch (...) {
        for (const auto &[tmp, dest] : staged) {
            std::error_code ec;
            fs::remove(tmp, ec);
        }
        throw;
    }
    for (const auto &[tmp, dest] : staged) {
        fs::rename(tmp, dest);
    }
}

}  // namespace iongrover

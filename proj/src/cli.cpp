// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/cli.hpp>

#include <ehmin/error.hpp>
#include <ehmin/fermion.hpp>
#include <ehmin/ga.hpp>
#include <ehmin/io.hpp>
#include <ehmin/objective.hpp>
#include <ehmin/oracles.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

namespace hmeas::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
    GAConfig config;
    bool bits = false;
    std::string trace_path;
};

void add_ga_options(CLI::App* app, CommonOptions& opts) {
    auto& c = opts.config;
    app->add_option("--n-gen", c.n_gen, "Genes per parameter")->capture_default_str();
    app->add_option("--n-population", c.n_population, "Population per island")->capture_default_str();
    app->add_option("--n-bad", c.n_bad, "Weakest members excluded from reproduction")->capture_default_str();
    app->add_option("--p-mut", c.p_mut, "Per-gene mutation probability")->capture_default_str();
    app->add_option("--m-mut", c.m_mut, "Mutation half-range")->capture_default_str();
    app->add_option("--m-init", c.m_init, "Initialization half-range")->capture_default_str();
    app->add_option("--n-epochs", c.n_epochs, "Maximum number of epochs")->capture_default_str();
    app->add_option("--epsilon", c.epsilon, "Stagnation tolerance")->capture_default_str();
    app->add_option("--n-term", c.n_term, "Stagnation window in epochs")->capture_default_str();
    app->add_option("--n-islands", c.n_islands, "Number of islands")->capture_default_str();
    app->add_option("--p-mig", c.p_mig, "Per-epoch migration probability")->capture_default_str();
    app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    app->add_option("--workers", c.workers, "Threads used to evolve islands")->capture_default_str();
    app->add_flag("--bits", opts.bits, "Report entropies in bits instead of nats");
}

double scale(const CommonOptions& opts, double nats) { return opts.bits ? nats / std::numbers::ln2 : nats; }

json result_json(const EhminResult& r, const CommonOptions& opts) {
    return {{"value", scale(opts, r.value)},
            {"params", r.params},
            {"epochs", r.epochs},
            {"evaluations", r.evaluations},
            {"islands", opts.config.n_islands},
            {"seed", opts.config.seed},
            {"units", opts.bits ? "bits" : "nats"}};
}

void maybe_write_trace(const CommonOptions& opts, const EhminResult& r) {
    if (opts.trace_path.empty()) return;
    std::ofstream out(opts.trace_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write trace " + opts.trace_path);
    write_trace(r.trace, out);
}

Dims parse_dims(const std::string& text) {
    Dims dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            const long long d = std::stoll(token, &used);
            if (used != token.size() || d < 0) throw std::invalid_argument(token);
            dims.push_back(static_cast<std::size_t>(d));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad dimension list \"" + text + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return dims;
}

// Loading failures of any kind are input errors.
template <typename F>
auto load(F&& loader) {
    try {
        return loader();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IoError || e.code() == ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::IoError: return kExitParse;
        case ErrorCode::InvalidConfig: return kExitConfig;
        case ErrorCode::NoOracleApplicable:
        case ErrorCode::NotTwoFermion:
        case ErrorCode::NotBipartite:
        case ErrorCode::BadOrder: return kExitDomain;
        default: return kExitFailure;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal measurement entropy of multipartite and fermionic pure states", "ehmin"};
    app.require_subcommand(1);

    CommonOptions ehmin_opts;
    std::string ehmin_file;
    auto* ehmin_cmd = app.add_subcommand("ehmin", "Minimize measurement entropy over local unitaries");
    ehmin_cmd->add_option("state", ehmin_file, "State file (JSON)")->required();
    ehmin_cmd->add_option("--trace", ehmin_opts.trace_path, "Write per-epoch records (JSON lines) to FILE");
    add_ga_options(ehmin_cmd, ehmin_opts);

    CommonOptions verify_opts;
    std::string verify_file;
    auto* verify_cmd = app.add_subcommand("verify", "Compare the GA result with a closed-form oracle");
    verify_cmd->add_option("state", verify_file, "State file (JSON)")->required();
    add_ga_options(verify_cmd, verify_opts);

    std::string random_dims;
    std::uint64_t random_seed = 0;
    std::string random_out;
    auto* random_cmd = app.add_subcommand("random", "Write a seeded Haar-random state file");
    random_cmd->add_option("--dims", random_dims, "Comma-separated subsystem dimensions")->required();
    random_cmd->add_option("--seed", random_seed, "RNG seed")->capture_default_str();
    random_cmd->add_option("--out", random_out, "Output file (stdout when omitted)");

    CommonOptions fermion_opts;
    std::string fermion_mode;
    std::string fermion_file;
    auto* fermion_cmd = app.add_subcommand("fermion", "Fermionic states: ehmin or Slater decomposition");
    fermion_cmd->add_option("mode", fermion_mode, "ehmin | slater")
        ->required()
        ->check(CLI::IsMember({"ehmin", "slater"}));
    fermion_cmd->add_option("state", fermion_file, "Fermion state file (JSON)")->required();
    fermion_cmd->add_option("--trace", fermion_opts.trace_path, "Write per-epoch records (JSON lines) to FILE");
    add_ga_options(fermion_cmd, fermion_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (*ehmin_cmd) {
            const auto state = load([&] { return io::read_state(ehmin_file); });
            ehmin_opts.config.validate();
            const auto r = ehmin(state, ehmin_opts.config);
            maybe_write_trace(ehmin_opts, r);
            out << result_json(r, ehmin_opts).dump(2) << '\n';
        } else if (*verify_cmd) {
            const auto state = load([&] { return io::read_state(verify_file); });
            verify_opts.config.validate();
            const auto oracle = detect_oracle(state);
            const auto r = ehmin(state, verify_opts.config);
            json report = {{"oracle", to_string(oracle.kind)},
                           {"ehmin", scale(verify_opts, r.value)},
                           {"oracle_value", scale(verify_opts, oracle.value)},
                           {"gap", scale(verify_opts, std::abs(r.value - oracle.value))},
                           {"epochs", r.epochs},
                           {"evaluations", r.evaluations},
                           {"seed", verify_opts.config.seed},
                           {"units", verify_opts.bits ? "bits" : "nats"}};
            out << report.dump(2) << '\n';
        } else if (*random_cmd) {
            const auto dims = parse_dims(random_dims);
            const auto state = load([&] { return random_state(dims, random_seed); });
            const auto j = io::to_json(state);
            if (random_out.empty()) {
                out << j.dump(2) << '\n';
            } else {
                io::write_json(random_out, j);
            }
        } else if (*fermion_cmd) {
            const auto f = load([&] { return io::read_fermion_state(fermion_file); });
            if (fermion_mode == "slater") {
                const auto d = slater_decompose(f);
                std::vector<double> weights = d.weights;
                json report = {{"p", f.modes()},
                               {"n", f.particles()},
                               {"weights", weights},
                               {"entropy", scale(fermion_opts, slater_entropy(d))},
                               {"units", fermion_opts.bits ? "bits" : "nats"}};
                out << report.dump(2) << '\n';
            } else {
                fermion_opts.config.validate();
                const auto r = ehmin_fermion(f, fermion_opts.config);
                maybe_write_trace(fermion_opts, r);
                auto report = result_json(r, fermion_opts);
                report["p"] = f.modes();
                report["n"] = f.particles();
                out << report.dump(2) << '\n';
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace hmeas::cli

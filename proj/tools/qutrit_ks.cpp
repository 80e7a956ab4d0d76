// Copyright 2026 The qutrit-ks Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qutrit_ks: command-line front end.
//
//   qutrit_ks witness     --state PPS1
//   qutrit_ks protocol    --state-json '{"name":"PPS3"}'
//   qutrit_ks single-shot --theta-p 135.9 --theta-q 78.4
//   qutrit_ks table1      --format csv
//   qutrit_ks evolve      --state SIGMA_X --t1 1 --t2 1 --t-max 5 --steps 101
//   qutrit_ks verify
//
// Exit codes: 0 success, 2 usage/parse error, 3 invalid physical state.

#include "qutrit_ks/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace qutrit_ks;
using namespace qutrit_ks::cli;

struct StateArgs {
    std::string name;
    std::string json_text;
    std::optional<std::uint64_t> random_seed;
    bool deviation = false;
};

void add_state_options(CLI::App *cmd, StateArgs &args) {
    auto *name = cmd->add_option("--state", args.name,
                                 "PPS1 | PPS2 | PPS3 | SIGMA_X | THERMAL | MIXED");
    auto *js = cmd->add_option("--state-json", args.json_text,
                               "state as JSON, inline or @path to a file");
    auto *rnd = cmd->add_option("--random-seed", args.random_seed, "seeded random density matrix");
    name->excludes(js)->excludes(rnd);
    js->excludes(rnd);
    cmd->add_flag("--deviation", args.deviation,
                  "explicit matrices are deviations (I/3 is added)");
}

std::string read_text(const std::string &arg) {
    if (arg.empty() || arg.front() != '@') {
        return arg;
    }
    std::ifstream in(arg.substr(1));
    if (!in) {
        throw UsageError("cannot read '" + arg.substr(1) + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StateSpec to_spec(const StateArgs &args) {
    if (args.random_seed) {
        return RandomState{*args.random_seed};
    }
    if (!args.json_text.empty()) {
        StateSpec spec = parse_state_json(read_text(args.json_text));
        if (auto *e = std::get_if<ExplicitState>(&spec); e != nullptr && args.deviation) {
            e->deviation = true;
        }
        return spec;
    }
    if (!args.name.empty()) {
        return NamedState{args.name};
    }
    return NamedState{"MIXED"};
}

/// Runs `body` with output to `path` (stdout when empty).
template <typename F> void with_output(const std::string &path, F &&body) {
    if (path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    body(f);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-qutrit Kochen-Specker contextuality simulator"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string output;

    // witness
    StateArgs witness_state;
    std::string sequence_text;
    bool dump_state = false;
    auto *witness = app.add_subcommand("witness", "evaluate every inequality form on a state");
    add_state_options(witness, witness_state);
    witness->add_option("--sequence", sequence_text,
                        "pulse sequence JSON applied before evaluation (inline or @path)");
    witness->add_flag("--dump-state", dump_state, "print the resolved state as JSON");
    witness->add_option("--format", format, "table | json | csv");
    witness->add_option("--output", output, "output file");

    // protocol
    StateArgs protocol_state;
    auto *protocol = app.add_subcommand("protocol", "simulate the four-experiment readout");
    add_state_options(protocol, protocol_state);
    protocol->add_option("--format", format, "table | json | csv");
    protocol->add_option("--output", output, "output file");

    // single-shot
    SingleShotOptions shot;
    auto *single = app.add_subcommand("single-shot", "single-shot test of a diagonal state");
    single->add_option("--theta-p", shot.theta_p_deg, "theta_p in degrees [0, 180]")->required();
    single->add_option("--theta-q", shot.theta_q_deg, "theta_q in degrees [0, 180]")->required();
    single->add_option("--format", format, "table | json | csv");
    single->add_option("--output", output, "output file");

    // table1
    auto *table1 = app.add_subcommand("table1", "reproduce the diagonal-state table");
    table1->add_option("--format", format, "csv | json | table");
    table1->add_option("--output", output, "output file");

    // evolve
    StateArgs evolve_state;
    RunConfig cfg;
    auto *evolve = app.add_subcommand("evolve", "witness of a relaxing state over time");
    add_state_options(evolve, evolve_state);
    evolve->add_option("--t1", cfg.t1, "T1 in seconds")->capture_default_str();
    evolve->add_option("--t2", cfg.t2, "T2 in seconds")->capture_default_str();
    evolve->add_option("--t-max", cfg.t_max, "last time point in seconds")->capture_default_str();
    evolve->add_option("--steps", cfg.steps, "number of time points")->capture_default_str();
    evolve->add_option("--seed", cfg.seed, "seed for --random-seed states without a value");
    evolve->add_option("--format", format, "csv | json");
    evolve->add_option("--output", output, "output file");

    // verify
    auto *verify = app.add_subcommand("verify", "classical bounds and expansion audit");
    verify->add_option("--format", format, "table | json | csv");
    verify->add_option("--output", output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*witness) {
            WitnessOptions opt;
            opt.state = to_spec(witness_state);
            opt.dump_state = dump_state;
            opt.format = parse_format(format);
            if (!sequence_text.empty()) {
                try {
                    opt.sequence = parse_sequence_json(json::parse(read_text(sequence_text)));
                } catch (const json::parse_error &e) {
                    throw UsageError(std::string("malformed pulse sequence: ") + e.what());
                }
            }
            with_output(output, [&](std::ostream &out) { cmd_witness(opt, out); });
        } else if (*protocol) {
            ProtocolOptions opt;
            opt.state = to_spec(protocol_state);
            opt.format = parse_format(format);
            with_output(output, [&](std::ostream &out) { cmd_protocol(opt, out); });
        } else if (*single) {
            shot.format = parse_format(format);
            with_output(output, [&](std::ostream &out) { cmd_single_shot(shot, out); });
        } else if (*table1) {
            const Format f = table1->count("--format") ? parse_format(format) : Format::kCsv;
            with_output(output, [&](std::ostream &out) { cmd_table1(f, out); });
        } else if (*evolve) {
            if (evolve_state.name.empty() && evolve_state.json_text.empty() &&
                !evolve_state.random_seed && evolve->count("--seed")) {
                evolve_state.random_seed = cfg.seed;
            }
            cfg.format = evolve->count("--format") ? parse_format(format) : Format::kCsv;
            with_output(output, [&](std::ostream &out) { cmd_evolve(to_spec(evolve_state), cfg, out); });
        } else if (*verify) {
            with_output(output, [&](std::ostream &out) { cmd_verify(parse_format(format), out); });
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError &e) {
        std::cerr << "invalid state: " << e.what() << "\n";
        return kInvalidState;
    }
    return kSuccess;
}

// Copyright 2026 The Rabin OT Toolkit Authors
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

#include "rabin_ot/cli/app.h"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rabin_ot/cli/commands.h"
#include "rabin_ot/cli/format.h"
#include "rabin_ot/version.h"
#include "rabin_ot/verify/battery.h"

namespace rabin_ot::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// stdout, or a file opened in binary mode so newlines are written as-is.
class Output {
   public:
    Output(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) {
                throw IoError("cannot open " + path + " for writing");
            }
            stream_ = &file_;
        }
    }

    std::ostream &stream() {
        return *stream_;
    }

    void close(const std::string &path) {
        if (file_.is_open()) {
            file_.close();
            if (!file_) {
                throw IoError("error writing " + path);
            }
        }
    }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

struct CommonOptions {
    std::string out_path;
    std::string manifest_path;
};

void add_common(CLI::App *command, CommonOptions &common) {
    command->add_option("--out", common.out_path, "Output file (default: stdout)");
    command->add_option("--manifest", common.manifest_path,
                        "Manifest file (default: <out>.manifest, or stderr when writing to stdout)");
}

struct PointOptions {
    std::optional<double> p;
    std::optional<double> theta_degrees;
};

void add_point(CLI::App *command, PointOptions &point) {
    auto *p = command->add_option("--p", point.p, "No-bit probability p_?");
    auto *theta = command->add_option("--theta", point.theta_degrees, "State angle theta in degrees, p_? = cos 2 theta");
    p->excludes(theta);
}

double resolve_p(const PointOptions &point, double fallback) {
    if (point.theta_degrees) {
        return protocols::ProtocolParams::from_theta(*point.theta_degrees * M_PI / 180).p_question();
    }
    return point.p.value_or(fallback);
}

std::string argv_json(const std::vector<std::string> &args) {
    return nlohmann::json(args).dump();
}

void emit_manifest(const RunManifest &manifest, const CommonOptions &common, std::ostream &err) {
    std::string path = common.manifest_path;
    if (path.empty() && !common.out_path.empty()) {
        path = common.out_path + ".manifest";
    }
    if (path.empty()) {
        err << manifest.text();
        return;
    }
    Output file(path, err);
    file.stream() << manifest.text();
    file.close(path);
}

RunManifest base_manifest(const std::string &command, const std::vector<std::string> &args,
                          const CommonOptions &common) {
    RunManifest manifest;
    manifest.add("tool", "rabin_ot");
    manifest.add("version", kVersion);
    manifest.add("command", command);
    manifest.add("argv", argv_json(args));
    manifest.add("output", common.out_path.empty() ? "-" : common.out_path);
    return manifest;
}

std::vector<std::string> split_columns(const std::string &text) {
    std::vector<std::string> columns;
    std::stringstream stream(text);
    std::string column;
    while (std::getline(stream, column, ',')) {
        columns.push_back(column);
    }
    return columns;
}

std::string strategies_for(const std::string &protocol) {
    std::string list;
    for (const auto &scenario : verify::scenario_registry()) {
        if (scenario.protocol == protocol) {
            list += (list.empty() ? "" : ", ") + scenario.strategy;
        }
    }
    return list;
}

std::string joined_check_name(std::string name) {
    for (char &c : name) {
        if (c == ' ') {
            c = '.';
        }
    }
    return name;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Rabin oblivious transfer toolkit: cheating curves, tradeoffs, simulation and verification",
                 "rabin_ot"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    CommonOptions common;

    auto *curves = app.add_subcommand("curves", "Cheating and guessing probabilities as functions of p_?");
    SweepSpec sweep;
    std::string columns;
    curves->add_option("--p-min", sweep.p_min, "Sweep start")->capture_default_str();
    curves->add_option("--p-max", sweep.p_max, "Sweep end")->capture_default_str();
    curves->add_option("--step", sweep.step, "Sweep step")->capture_default_str();
    curves->add_option("--columns", columns, "Comma-separated subset of the curve columns");
    add_common(curves, common);

    auto *tradeoff = app.add_subcommand("tradeoff", "Classical (A, B) segment with quantum, ideal and reference points");
    PointOptions tradeoff_point;
    std::size_t segment_points = 101;
    add_point(tradeoff, tradeoff_point);
    tradeoff->add_option("--points", segment_points, "Points on the classical segment")->capture_default_str();
    add_common(tradeoff, common);

    auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of one cheating strategy");
    PointOptions sim_point;
    verify::McConfig mc;
    std::optional<double> send;
    std::optional<double> read;
    std::optional<double> coin_y;
    std::string format_name = "csv";
    simulate_cmd->add_option("--protocol", mc.protocol, "quantum, classical, mixed or coinflip")->required();
    simulate_cmd->add_option("--strategy", mc.strategy, "Strategy name, see the README")->required();
    add_point(simulate_cmd, sim_point);
    simulate_cmd->add_option("--rounds", mc.rounds, "Rounds to simulate")->capture_default_str();
    simulate_cmd->add_option("--seed", mc.seed, "Random seed")->capture_default_str();
    auto *s_opt = simulate_cmd->add_option("--s", send, "Classical send probability (with --r)");
    auto *r_opt = simulate_cmd->add_option("--r", read, "Classical read probability (with --s)");
    s_opt->needs(r_opt);
    r_opt->needs(s_opt);
    simulate_cmd->add_option("--y", coin_y, "Coin-flip sender-branch probability (default 0.5)");
    simulate_cmd->add_option("--format", format_name, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    add_common(simulate_cmd, common);

    auto *verify_cmd = app.add_subcommand("verify", "Verification battery");
    std::string depth_name = "quick";
    verify::BatteryOptions battery;
    bool timings = false;
    verify_cmd->add_option("--depth", depth_name, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    verify_cmd->add_option("--seed", battery.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--rounds", battery.mc_rounds, "Monte Carlo rounds per run in the full battery")
        ->capture_default_str();
    verify_cmd->add_flag("--inject-fault", battery.inject_fault, "Test mode: use a wrong reference constant");
    verify_cmd->add_flag("--timings", timings, "Print per-check run times to stderr");
    add_common(verify_cmd, common);

    auto *replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    std::string replay_path;
    replay->add_option("manifest", replay_path, "Manifest file")->required();

    std::vector<std::string> argv_storage{"rabin_ot"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (curves->parsed()) {
            if (!columns.empty()) {
                sweep.columns = split_columns(columns);
            }
            sweep.validate();
            Output output(common.out_path, out);
            write_curves(sweep, output.stream());
            output.close(common.out_path);
            RunManifest manifest = base_manifest("curves", args, common);
            manifest.add("p_min", format_number(sweep.p_min));
            manifest.add("p_max", format_number(sweep.p_max));
            manifest.add("step", format_number(sweep.step));
            manifest.add("rows", std::to_string(sweep.points().size()));
            emit_manifest(manifest, common, err);
            return kExitOk;
        }
        if (tradeoff->parsed()) {
            double p = resolve_p(tradeoff_point, 0.5);
            auto rows = tradeoff_rows(p, segment_points);
            Output output(common.out_path, out);
            write_tradeoff(rows, output.stream());
            output.close(common.out_path);
            RunManifest manifest = base_manifest("tradeoff", args, common);
            manifest.add("p_question", format_number(p));
            manifest.add("segment_points", std::to_string(segment_points));
            manifest.add("rows", std::to_string(rows.size()));
            emit_manifest(manifest, common, err);
            return kExitOk;
        }
        if (simulate_cmd->parsed()) {
            try {
                verify::find_scenario(mc.protocol, mc.strategy);
            } catch (const std::out_of_range &) {
                std::string known = strategies_for(mc.protocol);
                err << "error: unknown strategy '" << mc.strategy << "' for protocol '" << mc.protocol << "'\n";
                err << (known.empty() ? "protocols: quantum, classical, mixed, coinflip"
                                      : "strategies for " + mc.protocol + ": " + known)
                    << "\n"
                    << simulate_cmd->help();
                return kExitUsage;
            }
            bool classical_protocol = mc.protocol == "classical" || mc.protocol == "mixed";
            if (send) {
                if (!classical_protocol) {
                    throw UsageError("--s and --r apply to the classical and mixed protocols");
                }
                if (sim_point.p || sim_point.theta_degrees) {
                    throw UsageError("--s/--r fix p_? = 1 - s r; do not also pass --p or --theta");
                }
                mc.classical = protocols::ClassicalParams(*send, *read);
            }
            if (coin_y) {
                if (mc.protocol != "coinflip") {
                    throw UsageError("--y applies to the coinflip protocol");
                }
                if (!(*coin_y >= 0 && *coin_y <= 1)) {
                    throw UsageError("--y must be in [0, 1]");
                }
                mc.y = *coin_y;
            }
            if (mc.rounds == 0) {
                throw UsageError("--rounds must be at least 1");
            }
            mc.p_question = resolve_p(sim_point, 0.5);
            SimulationResult result = simulate(mc);
            Output output(common.out_path, out);
            write_simulation(result, format_name == "jsonl" ? Format::Jsonl : Format::Csv, output.stream());
            output.close(common.out_path);
            RunManifest manifest = base_manifest("simulate", args, common);
            manifest.add("protocol", mc.protocol);
            manifest.add("strategy", mc.strategy);
            manifest.add("p_question", format_number(mc.input().p_question));
            if (classical_protocol) {
                manifest.add("s", format_number(mc.input().classical.s));
                manifest.add("r", format_number(mc.input().classical.r));
            }
            if (mc.protocol == "coinflip") {
                manifest.add("y", format_number(mc.y));
            }
            manifest.add("rounds", std::to_string(mc.rounds));
            manifest.add("seed", std::to_string(mc.seed));
            manifest.add("result", result.passed ? "PASS" : "FAIL");
            emit_manifest(manifest, common, err);
            return result.passed ? kExitOk : kExitFail;
        }
        if (verify_cmd->parsed()) {
            battery.depth = depth_name == "full" ? verify::Depth::Full : verify::Depth::Quick;
            if (battery.mc_rounds == 0) {
                throw UsageError("--rounds must be at least 1");
            }
            auto report = verify::run_battery(battery);
            Output output(common.out_path, out);
            for (const auto &check : report.checks) {
                output.stream() << check.line() << '\n';
                if (timings) {
                    err << check.name << ": " << check.seconds << " s\n";
                }
            }
            output.stream() << "summary: " << report.count(verify::CheckStatus::Pass) << " passed, "
                            << report.count(verify::CheckStatus::Fail) << " failed, "
                            << report.count(verify::CheckStatus::Info) << " informational\n";
            auto failed = report.failed_names();
            if (!failed.empty()) {
                output.stream() << "failed:";
                for (const auto &name : failed) {
                    output.stream() << ' ' << name;
                }
                output.stream() << '\n';
            }
            output.close(common.out_path);
            RunManifest manifest = base_manifest("verify", args, common);
            manifest.add("depth", depth_name);
            manifest.add("seed", std::to_string(battery.seed));
            manifest.add("mc_rounds", std::to_string(battery.mc_rounds));
            manifest.add("inject_fault", battery.inject_fault ? "1" : "0");
            for (const auto &check : report.checks) {
                manifest.add("check." + joined_check_name(check.name), verify::status_name(check.status));
            }
            emit_manifest(manifest, common, err);
            return report.passed() ? kExitOk : kExitFail;
        }
        if (replay->parsed()) {
            std::ifstream file(replay_path, std::ios::binary);
            if (!file) {
                throw IoError("cannot read " + replay_path);
            }
            std::stringstream text;
            text << file.rdbuf();
            auto recorded = RunManifest::parse_argv(text.str());
            if (!recorded || recorded->empty()) {
                throw UsageError(replay_path + " has no argv entry");
            }
            if (recorded->front() == "replay") {
                throw UsageError("a manifest cannot record a replay");
            }
            return run_cli(*recorded, out, err);
        }
    } catch (const std::exception &e) {
        // Usage, I/O and parameter-validation errors all exit 2.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rabin_ot::cli

// Copyright 2026 The sdc Authors
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

#include "cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "sdc/format.h"
#include "sdc/sweep.h"

namespace sdc::cli {

namespace {

struct CommonFlags {
    std::string message = "00";
    std::string bell = "00";
    std::string format = "csv";
    std::string out_path;
    bool no_discord = false;
};

double parse_double(const std::string &text, const char *flag) {
    double v = 0.0;
    const char *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        throw UsageError(std::string(flag) + ": '" + text + "' is not a number");
    }
    return v;
}

// "v" or "start:stop:count".
GridSpec parse_range(const std::string &text, const char *flag) {
    const auto first = text.find(':');
    if (first == std::string::npos) {
        return GridSpec::single(parse_double(text, flag));
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos) {
        throw UsageError(std::string(flag) + ": expected start:stop:count");
    }
    GridSpec g;
    g.start = parse_double(text.substr(0, first), flag);
    g.stop = parse_double(text.substr(first + 1, second - first - 1), flag);
    const std::string count = text.substr(second + 1);
    const auto res = std::from_chars(count.data(), count.data() + count.size(), g.count);
    if (res.ec != std::errc() || res.ptr != count.data() + count.size()) {
        throw UsageError(std::string(flag) + ": point count '" + count + "' is not an integer");
    }
    return g;
}

std::pair<int, int> parse_bits(const std::string &text, const char *flag) {
    if (text.size() != 2 || (text[0] != '0' && text[0] != '1') ||
        (text[1] != '0' && text[1] != '1')) {
        throw UsageError(std::string(flag) + ": expected two bits such as 01");
    }
    return {text[0] - '0', text[1] - '0'};
}

void add_common(CLI::App *cmd, CommonFlags &flags, bool with_output) {
    cmd->add_option("--message", flags.message, "Two message bits ij, encoded as Z^j X^i")
        ->capture_default_str();
    cmd->add_option("--bell", flags.bell, "Shared Bell state label (alpha beta)")
        ->capture_default_str();
    cmd->add_flag("--no-discord", flags.no_discord, "Skip the discord optimization");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    if (with_output) {
        cmd->add_option("--out", flags.out_path, "Write output to PATH instead of stdout");
    }
}

void apply_common(const CommonFlags &flags, SweepConfig &cfg) {
    const auto [i, j] = parse_bits(flags.message, "--message");
    const auto [a, b] = parse_bits(flags.bell, "--bell");
    cfg.msg = Message(i, j);
    cfg.idx = BellIndex(a, b);
    cfg.include_discord = !flags.no_discord;
    cfg.output_format = flags.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    if (!flags.out_path.empty()) {
        cfg.output_path = flags.out_path;
    }
}

int emit(const SweepConfig &cfg, std::ostream &out, std::ostream &err) {
    const auto rows = run_sweep(cfg);
    std::ostringstream buf;
    if (cfg.output_format == OutputFormat::kJson) {
        write_json(buf, rows);
    } else {
        write_csv(buf, rows);
    }
    if (!cfg.output_path) {
        out << buf.str();
        return kExitOk;
    }
    std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
    file << buf.str();
    file.close();
    if (!file) {
        err << "error: cannot write " << *cfg.output_path << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Superdense coding with a uniformly accelerated qubit"};
    app.require_subcommand(1);

    std::string point_r = "0";
    std::string point_ql = "0";
    CommonFlags point_flags;
    auto *point = app.add_subcommand("point", "Evaluate every quantity at one (r, q_l)");
    point->add_option("--r", point_r, "Acceleration parameter in [0, pi/4]")->capture_default_str();
    point->add_option("--ql", point_ql, "Left-mode weight q_l in [0, 1]")->capture_default_str();
    add_common(point, point_flags, false);

    std::string sweep_r = "0:0.7853981633974483:21";
    std::string sweep_ql = "0";
    CommonFlags sweep_flags;
    auto *sweep = app.add_subcommand("sweep", "Evaluate a grid over r and q_l");
    sweep->add_option("--r", sweep_r, "r value or start:stop:count")->capture_default_str();
    sweep->add_option("--ql", sweep_ql, "q_l value or start:stop:count")->capture_default_str();
    add_common(sweep, sweep_flags, true);

    std::string figure_name;
    int grid = 0;
    CommonFlags figure_flags;
    auto *figure = app.add_subcommand("figure", "Emit a figure preset sweep");
    figure->add_option("name", figure_name, "Preset name")
        ->required()
        ->check(CLI::IsMember(figure_names()));
    figure->add_option("--grid", grid, "Points per swept axis")->check(CLI::PositiveNumber);
    add_common(figure, figure_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (point->parsed()) {
            SweepConfig cfg;
            cfg.r_spec = GridSpec::single(parse_double(point_r, "--r"));
            cfg.ql_spec = GridSpec::single(parse_double(point_ql, "--ql"));
            apply_common(point_flags, cfg);
            if (point->count("--format") == 0) {
                cfg.validate();
                const ProtocolPoint pt{ModeSplit(cfg.r_spec.start, cfg.ql_spec.start), cfg.idx,
                                       cfg.msg};
                write_report(out, evaluate_point(pt, {cfg.include_discord, Execution::kParallel}));
                return kExitOk;
            }
            return emit(cfg, out, err);
        }
        SweepConfig cfg;
        if (sweep->parsed()) {
            cfg.r_spec = parse_range(sweep_r, "--r");
            cfg.ql_spec = parse_range(sweep_ql, "--ql");
            apply_common(sweep_flags, cfg);
        } else {
            const SweepConfig preset =
                figure_config(figure_name, grid > 0 ? std::optional<int>(grid) : std::nullopt);
            cfg = preset;
            apply_common(figure_flags, cfg);
        }
        cfg.validate();
        return emit(cfg, out, err);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "validation error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace sdc::cli

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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/measures.h"

namespace sdc {

/// Thrown for malformed or out-of-domain command-line configurations.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// count evenly spaced values from start to stop inclusive.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    static GridSpec single(double v) { return {v, v, 1}; }
    std::vector<double> values() const;
};

enum class OutputFormat { kCsv, kJson };

struct SweepConfig {
    GridSpec r_spec;
    GridSpec ql_spec;
    Message msg{};
    BellIndex idx{};
    bool include_discord = true;
    OutputFormat output_format = OutputFormat::kCsv;
    std::optional<std::string> output_path;

    /// Throws UsageError if a range is inverted, empty or leaves the domain.
    void validate() const;
};

/// One report per grid point in r-major, then q_l, order. Points are
/// distributed over OpenMP threads; each point's discord search runs
/// serially inside its thread.
std::vector<QuantityReport> run_sweep(const SweepConfig &cfg);

/// Single-threaded reference for run_sweep.
std::vector<QuantityReport> run_sweep_serial(const SweepConfig &cfg);

inline constexpr int kSurfaceGrid = 61;
inline constexpr int kCutGrid = 101;

/// Names accepted by figure_config, in display order.
const std::vector<std::string> &figure_names();

/// Sweep preset for a figure: fig2 (q_l = 0 vs r), fig4..fig7 (surfaces
/// over r x q_l), fig8-thin / fig8-thick (q_l = 1/sqrt2 / 1 vs r) and
/// fig3-thin / fig3-thick (r = 0 / pi/4 vs q_l). `grid` overrides the
/// number of points per swept axis. Throws UsageError on an unknown name.
SweepConfig figure_config(std::string_view name, std::optional<int> grid = std::nullopt);

}  // namespace sdc

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

#include "sdc/sweep.h"

#include <cmath>
#include <numbers>

namespace sdc {

std::vector<double> GridSpec::values() const {
    std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
    for (int k = 0; k < count; ++k) {
        out[k] = (k == count - 1 && count > 1)
                     ? stop
                     : start + (stop - start) * k / std::max(count - 1, 1);
    }
    return out;
}

void SweepConfig::validate() const {
    auto check = [](const GridSpec &g, double hi, const char *name) {
        if (g.count < 1) {
            throw UsageError(std::string(name) + ": point count must be at least 1");
        }
        if (!(g.start <= g.stop)) {
            throw UsageError(std::string(name) + ": start must not exceed stop");
        }
        if (g.start < -ModeSplit::kBoundarySlack || g.stop > hi + ModeSplit::kBoundarySlack) {
            throw UsageError(std::string(name) + ": range leaves the domain [0, " +
                             std::to_string(hi) + "]");
        }
    };
    check(r_spec, ModeSplit::kMaxR, "r");
    check(ql_spec, 1.0, "q_l");
}

namespace {

std::vector<ProtocolPoint> grid_points(const SweepConfig &cfg) {
    cfg.validate();
    std::vector<ProtocolPoint> pts;
    for (double r : cfg.r_spec.values()) {
        for (double ql : cfg.ql_spec.values()) {
            pts.push_back({ModeSplit(r, ql), cfg.idx, cfg.msg});
        }
    }
    return pts;
}

}  // namespace

std::vector<QuantityReport> run_sweep(const SweepConfig &cfg) {
    const auto pts = grid_points(cfg);
    const EvaluateOptions opts{cfg.include_discord, Execution::kSerial};
    std::vector<QuantityReport> rows(pts.size());
    const int n = static_cast<int>(pts.size());
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) {
        rows[k] = evaluate_point(pts[k], opts);
    }
    return rows;
}

std::vector<QuantityReport> run_sweep_serial(const SweepConfig &cfg) {
    const auto pts = grid_points(cfg);
    const EvaluateOptions opts{cfg.include_discord, Execution::kSerial};
    std::vector<QuantityReport> rows;
    rows.reserve(pts.size());
    for (const auto &pt : pts) {
        rows.push_back(evaluate_point(pt, opts));
    }
    return rows;
}

const std::vector<std::string> &figure_names() {
    static const std::vector<std::string> names{"fig2",       "fig4",      "fig5",
                                                "fig6",       "fig7",      "fig8-thin",
                                                "fig8-thick", "fig3-thin", "fig3-thick"};
    return names;
}

SweepConfig figure_config(std::string_view name, std::optional<int> grid) {
    if (grid && *grid < 1) {
        throw UsageError("--grid must be at least 1");
    }
    const int cut = grid.value_or(kCutGrid);
    const int surface = grid.value_or(kSurfaceGrid);
    const GridSpec r_axis{0.0, ModeSplit::kMaxR, cut};
    const GridSpec ql_axis{0.0, 1.0, cut};

    SweepConfig cfg;
    if (name == "fig2") {
        cfg.r_spec = r_axis;
        cfg.ql_spec = GridSpec::single(0.0);
    } else if (name == "fig4" || name == "fig5" || name == "fig6" || name == "fig7") {
        cfg.r_spec = {0.0, ModeSplit::kMaxR, surface};
        cfg.ql_spec = {0.0, 1.0, surface};
    } else if (name == "fig8-thin") {
        cfg.r_spec = r_axis;
        cfg.ql_spec = GridSpec::single(std::numbers::sqrt2 / 2);
    } else if (name == "fig8-thick") {
        cfg.r_spec = r_axis;
        cfg.ql_spec = GridSpec::single(1.0);
    } else if (name == "fig3-thin") {
        cfg.r_spec = GridSpec::single(0.0);
        cfg.ql_spec = ql_axis;
    } else if (name == "fig3-thick") {
        cfg.r_spec = GridSpec::single(ModeSplit::kMaxR);
        cfg.ql_spec = ql_axis;
    } else {
        throw UsageError("unknown figure preset '" + std::string(name) + "'");
    }
    return cfg;
}

}  // namespace sdc

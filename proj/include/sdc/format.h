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

#include <ostream>
#include <span>
#include <string>

#include "sdc/measures.h"

namespace sdc {

inline constexpr const char *kCsvHeader = "r,q_l,P,C,N,D,P_closed,C_closed,N_closed";

/// 9 significant digits, '.' separator, independent of the global locale.
std::string format_number(double v);

/// Header plus one LF-terminated row per report. D is left empty when the
/// report carries no discord.
void write_csv(std::ostream &out, std::span<const QuantityReport> rows);

/// Array of objects keyed like the CSV columns; missing D is null.
void write_json(std::ostream &out, std::span<const QuantityReport> rows);

/// Human-readable key=value listing of every report field.
void write_report(std::ostream &out, const QuantityReport &rep);

}  // namespace sdc

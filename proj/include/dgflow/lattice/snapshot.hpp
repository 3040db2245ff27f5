/* Copyright 2026 The dgflow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Snapshot = JSON header + raw payload of n^4 * 6 little-endian float64 in
// grid order (x0 slowest), components (e01, e02, e03, e23, e31, e12) fastest.
//
//   {"format": "dgflow-snapshot", "version": 1, "n": 8, "scheme": "spectral",
//    "component_order": [...], "time": 0.25, "monitors": {...},
//    "payload": "snap_000010.bin", "dtype": "float64", "endianness": "little"}
//
// The payload path is relative to the header's directory.

#include "dgflow/lattice/field.hpp"

#include <json.hpp>

#include <filesystem>

namespace dgflow::lattice {

struct Snapshot
{
  Field2 rho;
  double time = 0.0;
  nlohmann::json monitors = nlohmann::json::object();
};

/// Writes `header` and a payload next to it with extension .bin.
void write_snapshot(const std::filesystem::path& header, const Field2& rho, double time,
                    const nlohmann::json& monitors = nlohmann::json::object());

/// Throws dgflow::Error on malformed header or payload size mismatch.
Snapshot read_snapshot(const std::filesystem::path& header);

} // namespace dgflow::lattice

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

#include "dgflow/lattice/snapshot.hpp"

#include "dgflow/errors.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace dgflow::lattice {

namespace {

const std::vector<std::string> kComponentOrder = {"e01", "e02", "e03", "e23", "e31", "e12"};

std::uint64_t to_little(std::uint64_t x)
{
  if constexpr (std::endian::native == std::endian::little)
    return x;
  std::uint64_t y = 0;
  for (int i = 0; i < 8; ++i)
    y |= ((x >> (8 * i)) & 0xffu) << (8 * (7 - i));
  return y;
}

} // namespace

void write_snapshot(const std::filesystem::path& header, const Field2& rho, double time,
                    const nlohmann::json& monitors)
{
  auto payload = header;
  payload.replace_extension(".bin");

  std::vector<std::uint64_t> words(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    std::uint64_t w;
    std::memcpy(&w, rho.data() + i, sizeof w);
    words[i] = to_little(w);
  }
  {
    std::ofstream out(payload, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(words.data()),
              static_cast<std::streamsize>(words.size() * sizeof(std::uint64_t)));
    if (!out)
      throw Error("cannot write snapshot payload " + payload.string());
  }

  nlohmann::json h = {
    {"format", "dgflow-snapshot"},
    {"version", 1},
    {"n", rho.grid().n()},
    {"scheme", std::string(to_string(rho.grid().scheme()))},
    {"component_order", kComponentOrder},
    {"time", time},
    {"monitors", monitors},
    {"payload", payload.filename().string()},
    {"dtype", "float64"},
    {"endianness", "little"},
  };
  std::ofstream out(header, std::ios::trunc);
  out << h.dump(2) << '\n';
  if (!out)
    throw Error("cannot write snapshot header " + header.string());
}

Snapshot read_snapshot(const std::filesystem::path& header)
{
  std::ifstream in(header);
  if (!in)
    throw Error("cannot open snapshot header " + header.string());
  nlohmann::json h;
  try {
    in >> h;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed snapshot header " + header.string() + ": " + e.what());
  }
  if (h.value("format", "") != "dgflow-snapshot")
    throw Error("not a snapshot header: " + header.string());
  if (h.value("component_order", std::vector<std::string>{}) != kComponentOrder)
    throw Error("unsupported component order in " + header.string());
  if (h.value("dtype", "") != "float64" || h.value("endianness", "") != "little")
    throw Error("unsupported payload encoding in " + header.string());

  const Grid grid(h.at("n").get<int>(), scheme_from_string(h.at("scheme").get<std::string>()));
  Snapshot snap{Field2(grid), h.at("time").get<double>(), h.value("monitors", nlohmann::json::object())};

  const auto payload = header.parent_path() / h.at("payload").get<std::string>();
  std::ifstream bin(payload, std::ios::binary | std::ios::ate);
  if (!bin)
    throw Error("cannot open snapshot payload " + payload.string());
  const auto bytes = static_cast<std::size_t>(bin.tellg());
  if (bytes != snap.rho.size() * sizeof(double))
    throw Error("snapshot payload " + payload.string() + " has " + std::to_string(bytes) + " bytes, expected " +
                std::to_string(snap.rho.size() * sizeof(double)));
  bin.seekg(0);
  std::vector<std::uint64_t> words(snap.rho.size());
  bin.read(reinterpret_cast<char*>(words.data()), static_cast<std::streamsize>(bytes));
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::uint64_t w = to_little(words[i]);
    std::memcpy(snap.rho.data() + i, &w, sizeof w);
  }
  return snap;
}

} // namespace dgflow::lattice

// Copyright 2026 The olcqubo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "olcqubo/random.hpp"

namespace olcqubo {

inline constexpr std::string_view kToolName = "olcqubo";
inline constexpr std::string_view kVersion = "0.1.0";

// Metadata block carried by every output file.
inline nlohmann::json make_metadata(std::string_view command, std::uint64_t seed,
                                    nlohmann::json config) {
  return {{"tool", kToolName},      {"version", kVersion}, {"command", command},
          {"master_seed", seed},    {"prng", kPrngId},     {"config", std::move(config)}};
}

// The same block flattened to "key: value" lines for text formats.
inline std::vector<std::string> metadata_lines(const nlohmann::json& meta) {
  std::vector<std::string> lines;
  for (const auto& [key, value] : meta.items())
    lines.push_back(key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()));
  return lines;
}

}  // namespace olcqubo

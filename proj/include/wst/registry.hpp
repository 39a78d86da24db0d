// Copyright 2026 The wst Authors
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

#include <optional>
#include <string>
#include <vector>

#include "wst/matgroup.hpp"

namespace wst {

enum class Tier { Fast, Standard, Heavy };
std::string tier_name(Tier t);
std::optional<Tier> parse_tier(const std::string& s);

struct InstanceSpec {
  GroupSpec spec;
  Tier tier;
  /// Checks run by the suite; empty means all.
  std::vector<std::string> checks;
};

/// Enumeration cap used by the command-line tool unless raised explicitly.
constexpr uint64_t kCliDefaultCap = 1000000;

const std::vector<InstanceSpec>& registry();

}  // namespace wst

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
#include "wst/registry.hpp"

namespace wst {

std::string tier_name(Tier t) {
  switch (t) {
    case Tier::Fast:
      return "fast";
    case Tier::Standard:
      return "standard";
    case Tier::Heavy:
      return "heavy";
  }
  return "?";
}

std::optional<Tier> parse_tier(const std::string& s) {
  for (Tier t : {Tier::Fast, Tier::Standard, Tier::Heavy})
    if (tier_name(t) == s) return t;
  return std::nullopt;
}

const std::vector<InstanceSpec>& registry() {
  using K = GroupKind;
  static const std::vector<InstanceSpec> r{
      {{K::GL, 2, 2}, Tier::Fast, {}},
      {{K::GL, 2, 3}, Tier::Fast, {}},
      {{K::GL, 3, 2}, Tier::Fast, {}},
      {{K::Sp, 2, 2}, Tier::Fast, {}},
      {{K::GU, 2, 2}, Tier::Fast, {}},
      {{K::GU, 3, 2}, Tier::Fast, {}},
      {{K::Sp, 2, 3}, Tier::Standard, {}},
      {{K::GU, 4, 2}, Tier::Standard, {}},
      {{K::GL, 2, 4}, Tier::Standard, {}},
      {{K::GL, 2, 5}, Tier::Standard, {}},
      {{K::GL, 3, 3}, Tier::Standard, {}},
      {{K::Sp, 2, 4}, Tier::Heavy, {"weil_values", "torus_census", "infrastructure"}},
      {{K::GU, 3, 3}, Tier::Heavy, {}},
  };
  return r;
}

}  // namespace wst

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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "wst/matgroup.hpp"

namespace wst {

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct CheckReport {
  std::string check;
  GroupSpec spec;
  Status status = Status::Skipped;
  nlohmann::json details = nlohmann::json::object();
  int64_t ms = 0;

  bool passed() const { return status == Status::Pass; }
  /// {"group": {...}, "check": name, "status": ..., "details": {...}, "ms": int}
  nlohmann::json to_json() const;
};

/// All check names in canonical order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);
/// Whether a check is meaningful for the group kind (otherwise it is
/// reported as skipped).
bool check_applies(const std::string& name, const GroupSpec& spec);

CheckReport check_ws_multfree(const GroupPtr& G);
CheckReport check_gl_not_multfree(const GroupPtr& G);
CheckReport check_thm_gl(const GroupPtr& G);
CheckReport check_prop71(const GroupPtr& G);
CheckReport check_st_restriction_multfree(const GroupPtr& G);
CheckReport check_brunat(const GroupPtr& G);
CheckReport check_type_partition(const GroupPtr& G);
CheckReport check_lemma_g2(const GroupPtr& G);
CheckReport check_degree_identity(const GroupPtr& G);
CheckReport check_torus_census_report(const GroupPtr& G);
CheckReport check_weil_values(const GroupPtr& G);
CheckReport check_infrastructure(const GroupPtr& G);

/// Runs a named check on G with timing. Mismatch raised inside a check is
/// a failure with the message as witness; construction errors propagate.
CheckReport run_check(const std::string& name, const GroupPtr& G);

}  // namespace wst

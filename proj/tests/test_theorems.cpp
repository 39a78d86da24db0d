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
#include <algorithm>
#include <set>

#include "doctest.h"
#include "wst/registry.hpp"
#include "wst/theorems.hpp"

using namespace wst;

TEST_CASE("Check applicability") {
  const GroupSpec gl{GroupKind::GL, 2, 3}, gl1{GroupKind::GL, 1, 3}, sp{GroupKind::Sp, 2, 3}, gu{GroupKind::GU, 3, 2};
  CHECK(check_applies("thm_gl", gl));
  CHECK(check_applies("thm_gl", gl1));
  CHECK_FALSE(check_applies("prop71", gl1));
  CHECK_FALSE(check_applies("gl_not_multfree", gl1));
  CHECK_FALSE(check_applies("ws_multfree", gl));
  CHECK(check_applies("ws_multfree", sp));
  CHECK_FALSE(check_applies("brunat", sp));
  CHECK(check_applies("brunat", gu));
  CHECK(check_applies("infrastructure", gl1));
  CHECK_FALSE(is_check_name("nope"));
  auto G = classical_group(GroupKind::GL, 2, 2);
  CHECK_THROWS_AS(run_check("nope", G), InvalidArgument);
  auto r = run_check("brunat", G);
  CHECK(r.status == Status::Skipped);
}

TEST_CASE("Fast tier passes") {
  std::set<std::string> seen;
  for (const auto& inst : registry()) {
    if (inst.tier != Tier::Fast) continue;
    auto G = classical_group(inst.spec);
    for (const auto& name : check_names()) {
      auto r = run_check(name, G);
      INFO(inst.spec.name() << " " << name << " " << r.details.dump());
      CHECK(r.check == name);
      CHECK(r.spec == inst.spec);
      if (check_applies(name, inst.spec)) {
        CHECK(r.passed());
        seen.insert(name);
      } else {
        CHECK(r.status == Status::Skipped);
      }
    }
  }
  CHECK(seen.size() == check_names().size());
}

TEST_CASE("Report JSON") {
  auto G = classical_group(GroupKind::Sp, 2, 2);
  auto r = run_check("ws_multfree", G);
  auto j = r.to_json();
  CHECK(j.at("check") == "ws_multfree");
  CHECK(j.at("status") == "pass");
  CHECK(j.at("group").at("n") == 2);
  CHECK(j.at("group").at("q") == 2);
  CHECK(j.at("details").is_object());
  CHECK(j.at("ms").is_number_integer());
  auto back = nlohmann::json::parse(j.dump());
  CHECK(back == j);
}

TEST_CASE("Restriction of St to U(2,3) is the untwisted product") {
  auto G = classical_group(GroupKind::GU, 3, 3);
  auto r = run_check("brunat", G);
  INFO(r.details.dump());
  CHECK(r.passed());
  // the 1⁻-twisted ω·St does not match at odd q
  CHECK(r.details.at("matches_omega_st") == false);
  // 1⁻ is trivial in characteristic 2
  auto rh = run_check("brunat", classical_group(GroupKind::GU, 3, 2));
  CHECK(rh.passed());
  CHECK(rh.details.at("matches_omega_st") == true);
}

TEST_CASE("Type C multiplicities in unitary groups") {
  for (int d : {3, 4}) {
    auto G = classical_group(GroupKind::GU, d, 2);
    auto r = run_check("type_partition", G);
    INFO(r.details.dump());
    CHECK(r.passed());
  }
}

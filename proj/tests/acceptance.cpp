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

// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wst/errors.hpp"
#include "wst/registry.hpp"
#include "wst/theorems.hpp"

using namespace wst;

namespace {

using K = GroupKind;

std::map<GroupSpec, GroupPtr>& groups() {
  static std::map<GroupSpec, GroupPtr> g;
  return g;
}

GroupPtr group(const GroupSpec& s) {
  auto& g = groups();
  auto it = g.find(s);
  if (it != g.end()) return it->second;
  return g[s] = classical_group(s);
}

// Runs check on every listed group; failures are printed under the
// criterion line.
bool all_pass(const std::string& check, const std::vector<GroupSpec>& specs, std::vector<std::string>& why) {
  bool ok = true;
  for (const auto& s : specs) {
    CheckReport r = run_check(check, group(s));
    if (!r.passed()) {
      ok = false;
      why.push_back(s.name() + " " + check + ": " + r.details.dump());
    }
  }
  return ok;
}

std::vector<GroupSpec> registry_gl(int min_n) {
  std::vector<GroupSpec> out;
  for (const auto& i : registry())
    if (i.spec.kind == K::GL && i.spec.n >= min_n) out.push_back(i.spec);
  return out;
}

bool census(const GroupSpec& s, std::vector<std::string>& why) {
  CheckReport r = run_check("torus_census", group(s));
  const auto& d = r.details;
  auto fail = [&](const std::string& m) {
    why.push_back(s.name() + " torus_census: " + m);
    return false;
  };
  if (!r.passed()) return fail(d.dump());
  if (d.at("descriptors") != 5) return fail("descriptor count " + d.at("descriptors").dump());
  if (d.at("neutral") != 2) return fail("neutral count " + d.at("neutral").dump());
  const std::map<std::string, int> weyl{{"(1^2;-)", 8}, {"(2;-)", 4}};
  int seen = 0;
  for (const auto& t : d.at("tori")) {
    uint64_t order = t.at("order"), w = t.at("weyl"), nrm = t.at("normalizer");
    if (nrm != order * w) return fail(t.at("torus").get<std::string>() + ": |N| != |T||W|");
    auto it = weyl.find(t.at("torus").get<std::string>());
    if (it == weyl.end()) continue;
    ++seen;
    if ((int)w != it->second) return fail(it->first + ": |W| = " + std::to_string(w));
  }
  if (seen != 2) return fail("neutral tori missing from report");
  return true;
}

}  // namespace

int main() {
  const GroupSpec sp42{K::Sp, 2, 2}, sp43{K::Sp, 2, 3}, sp44{K::Sp, 2, 4};
  const GroupSpec gu22{K::GU, 2, 2}, gu32{K::GU, 3, 2}, gu42{K::GU, 4, 2};
  const GroupSpec gl22{K::GL, 2, 2}, gl23{K::GL, 2, 3}, gl24{K::GL, 2, 4}, gl25{K::GL, 2, 5};
  const GroupSpec gl32{K::GL, 3, 2}, gl33{K::GL, 3, 3};

  std::vector<std::function<bool(std::vector<std::string>&)>> criteria{
      [&](auto& w) { return all_pass("ws_multfree", {sp43, sp42, gu22, gu32, gu42}, w); },
      [&](auto& w) { return all_pass("thm_gl", {gl22, gl23, gl24, gl25, gl32, gl33}, w); },
      [&](auto& w) { return all_pass("gl_not_multfree", registry_gl(2), w); },
      [&](auto& w) { return all_pass("prop71", {gl22, gl23, gl32, gl33}, w); },
      [&](auto& w) {
        bool a = all_pass("st_restriction_multfree", registry_gl(1), w);
        return all_pass("st_restriction_multfree", {sp42, sp43, gu32, gu42}, w) && a;
      },
      [&](auto& w) { return all_pass("brunat", {gu32, gu42}, w); },
      [&](auto& w) { return all_pass("lemma_g2", {sp42, sp43, gu32, gu42}, w); },
      [&](auto& w) {
        bool a = census(sp42, w);
        return census(sp43, w) && a;
      },
      [&](auto& w) { return all_pass("weil_values", {sp42, sp43, sp44, gu32, gu42}, w); },
      [&](auto& w) {
        std::vector<GroupSpec> all;
        for (const auto& i : registry()) all.push_back(i.spec);
        return all_pass("infrastructure", all, w);
      },
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::vector<std::string> why;
    bool ok = false;
    try {
      ok = criteria[i](why);
    } catch (const std::exception& e) {
      why.push_back(std::string("error: ") + e.what());
    }
    std::printf("criterion %zu: %s\n", i + 1, ok ? "pass" : "fail");
    for (const auto& m : why) std::printf("    %s\n", m.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed ? 1 : 0;
}

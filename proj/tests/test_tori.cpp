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

#include "doctest.h"
#include "wst/tori.hpp"

using namespace wst;

namespace {

const Torus& find_torus(const std::vector<Torus>& ts, const std::string& label) {
  for (const auto& t : ts)
    if (t.desc.label() == label) return t;
  throw InvalidArgument("no torus " + label);
}

bool all_ok(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines)
    if (!l.ok) return false;
  return true;
}

}  // namespace

TEST_CASE("descriptors") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(0).size() == 1);
  auto sp = torus_descriptors(GroupKind::Sp, 2, 3);
  CHECK(sp.size() == 5);
  CHECK(std::count_if(sp.begin(), sp.end(), [](auto& d) { return d.neutral(); }) == 2);
  std::vector<std::string> labels;
  for (auto& d : sp) labels.push_back(d.label());
  for (auto l : {"(1^2;-)", "(2;-)", "(1;1)", "(-;2)", "(-;1^2)"})
    CHECK(std::find(labels.begin(), labels.end(), l) != labels.end());
  CHECK(torus_descriptors(GroupKind::GL, 2, 3).size() == 2);
  auto gu = torus_descriptors(GroupKind::GU, 3, 2);
  CHECK(gu.size() == 3);
  CHECK(gu[1].label() == "(2,1)");
  CHECK(gu[1].split == std::vector<int>{2});
  CHECK(gu[1].factor_orders(2) == std::vector<uint64_t>{3, 3});
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_f_centralizer_order({GroupKind::Sp, {1, 1}, {}}) == 8);
  CHECK(weyl_f_centralizer_order({GroupKind::Sp, {2}, {}}) == 4);
  CHECK(weyl_f_centralizer_order({GroupKind::Sp, {1}, {1}}) == 4);
  CHECK(weyl_f_centralizer_order({GroupKind::GU, {}, {3}}) == 3);
  CHECK(weyl_f_centralizer_order({GroupKind::GL, {1, 1, 1}, {}}) == 6);
  // Σ_T |G|/|N(T)| over Sp(4) descriptors counts each Weyl element once: Σ 1/|W(T)| = 1
  mpq_class s = 0;
  for (auto& d : torus_descriptors(GroupKind::Sp, 2, 3)) s += mpq_class(1, weyl_f_centralizer_order(d));
  CHECK(s == 1);
  s = 0;
  for (auto& d : torus_descriptors(GroupKind::GU, 4, 2)) s += mpq_class(1, weyl_f_centralizer_order(d));
  CHECK(s == 1);
}

TEST_CASE("tori of Sp(4,3)") {
  auto G = classical_group(GroupKind::Sp, 2, 3);
  auto ts = build_all_tori(G);
  REQUIRE(ts.size() == 5);
  for (const auto& t : ts) {
    INFO(t.desc.label());
    CHECK(t.order() == t.desc.order(3));
    CHECK(all_ok(verify_t_decomposition(t)));
  }
  const auto& ns = find_torus(ts, "(-;2)");
  CHECK(ns.order() == 10);
  const auto& sp = find_torus(ts, "(1^2;-)");
  CHECK(sp.order() == 4);
  CHECK(algebraic_normalizer_order(sp) == 32);
  CHECK(algebraic_normalizer_order(find_torus(ts, "(2;-)")) == 8 * 4);
  // mixed radix layout
  for (size_t pos = 0; pos < ns.order(); ++pos) CHECK(ns.position(ns.exponents(pos)) == pos);
  auto rep = check_torus_census(G, ts);
  INFO(rep.details.dump());
  CHECK(rep.ok);
}

TEST_CASE("degenerate tori at q = 2") {
  auto G = classical_group(GroupKind::Sp, 2, 2);
  auto ts = build_all_tori(G);
  const auto& t = find_torus(ts, "(1^2;-)");
  CHECK(t.order() == 1);
  auto lines = verify_t_decomposition(t);
  CHECK(all_ok(lines));
  auto fixed = std::find_if(lines.begin(), lines.end(), [](auto& l) { return l.name == "fixed_space"; });
  REQUIRE(fixed != lines.end());
  CHECK(fixed->detail.find("dim V^T = 4") != std::string::npos);
  // the finite torus is trivial but the algebraic normalizer is the monomial group
  CHECK(algebraic_normalizer_order(t) == 8);
  CHECK(finite_normalizer_order(t) == G->order());
  auto rep = check_torus_census(G, ts);
  INFO(rep.details.dump());
  CHECK(rep.ok);
}

TEST_CASE("unitary and linear tori") {
  auto U = classical_group(GroupKind::GU, 3, 2);
  auto ts = build_all_tori(U);
  const auto& c = find_torus(ts, "(3)");
  CHECK(c.order() == 9);
  CHECK(algebraic_normalizer_order(c) / c.order() == 3);
  for (auto s : {GroupSpec{GroupKind::GU, 3, 2}, GroupSpec{GroupKind::GU, 4, 2}, GroupSpec{GroupKind::GL, 3, 2},
                 GroupSpec{GroupKind::GL, 2, 5}, GroupSpec{GroupKind::GU, 2, 3}}) {
    auto G = classical_group(s);
    auto rep = check_torus_census(G, build_all_tori(G));
    INFO(s.name(), " ", rep.details.dump());
    CHECK(rep.ok);
  }
}

TEST_CASE("corrupted decomposition is detected") {
  auto G = classical_group(GroupKind::Sp, 2, 3);
  auto t = build_torus(G, {GroupKind::Sp, {1}, {1}});
  REQUIRE(all_ok(verify_t_decomposition(t)));
  // swap a coordinate between the summands: both become degenerate
  std::swap(t.factors[0].coords[1], t.factors[1].coords[1]);
  auto lines = verify_t_decomposition(t);
  CHECK_FALSE(lines[0].ok);
  // a generator of the wrong order
  auto u = build_torus(G, {GroupKind::Sp, {}, {2}});
  u.factors[0].order = 5;
  CHECK_FALSE(all_ok(verify_t_decomposition(u)));
}

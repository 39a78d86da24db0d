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
#include <random>

#include "doctest.h"
#include "wst/matgroup.hpp"

using namespace wst;

namespace {

// Burnside: number of classes = #commuting pairs / |G|.
uint64_t commuting_pair_count(const GroupPtr& G) {
  uint64_t n = 0;
  for (uint32_t x = 0; x < G->order(); ++x)
    for (uint32_t y = 0; y < G->order(); ++y)
      if (G->mul(x, y) == G->mul(y, x)) ++n;
  return n;
}

void check_class_structure(const GroupPtr& G, uint64_t seed) {
  uint64_t total = 0;
  for (size_t c = 0; c < G->num_classes(); ++c) {
    total += G->cls(c).size;
    CHECK(G->order() % G->cls(c).size == 0);
    CHECK(G->class_of(G->cls(c).rep) == c);
    CHECK(G->power(G->cls(c).rep, G->cls(c).order) == 0);
    CHECK(G->power_class(c, G->cls(c).order + 1) == c);
    CHECK(G->power_class(G->inverse_class(c), -1) == c);
    if (c) CHECK(G->cls(c - 1).order <= G->cls(c).order);
  }
  CHECK(total == G->order());
  CHECK(G->cls(0).size == 1);
  CHECK(G->element(G->cls(0).rep).is_identity());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick(0, (uint32_t)G->order() - 1);
  for (int t = 0; t < 200; ++t) {
    uint32_t x = pick(rng), g = pick(rng);
    uint32_t y = G->mul(G->mul(g, x), G->inverse(g));
    CHECK(G->class_of(x) == G->class_of(y));
    CHECK(G->mul(x, G->inverse(x)) == 0);
    // the power map agrees with direct powering
    int64_t k = (int64_t)(rng() % 13) - 6;
    CHECK(G->class_of(G->power(x, k)) == G->power_class(G->class_of(x), k));
  }
}

}  // namespace

TEST_CASE("classical group orders and form preservation") {
  struct Case {
    GroupKind k;
    int n;
    uint32_t q;
    uint64_t order;
  };
  for (auto c : {Case{GroupKind::GL, 2, 2, 6}, Case{GroupKind::GL, 2, 3, 48}, Case{GroupKind::GL, 3, 2, 168},
                 Case{GroupKind::GL, 2, 4, 180}, Case{GroupKind::GL, 2, 5, 480}, Case{GroupKind::GL, 3, 3, 11232},
                 Case{GroupKind::Sp, 1, 3, 24}, Case{GroupKind::Sp, 2, 2, 720}, Case{GroupKind::Sp, 2, 3, 51840},
                 Case{GroupKind::GU, 1, 3, 4}, Case{GroupKind::GU, 2, 2, 18}, Case{GroupKind::GU, 3, 2, 648},
                 Case{GroupKind::GU, 2, 3, 96}, Case{GroupKind::GU, 4, 2, 77760}, Case{GroupKind::GU, 3, 3, 24192}}) {
    GroupSpec s{c.k, c.n, c.q};
    CHECK(s.order() == c.order);
    auto G = classical_group(s);
    CHECK(G->order() == c.order);
    FormSpec f = s.form();
    for (uint32_t i = 0; i < G->order(); i += 1 + (uint32_t)G->order() / 500) CHECK(form_preserved(G->element(i), f));
  }
  CHECK(GroupSpec{GroupKind::Sp, 2, 4}.order() == 979200);
  CHECK(GroupSpec{GroupKind::GL, 0, 3}.order() == 1);
  CHECK(classical_group(GroupKind::GU, 0, 2)->order() == 1);
  CHECK(GroupSpec{GroupKind::Sp, 2, 3}.name() == "Sp(4,3)");
  CHECK(GroupSpec{GroupKind::GU, 3, 2}.p_part() == 8);
}

TEST_CASE("cap is enforced before enumeration") {
  CHECK_THROWS_AS(classical_group(GroupKind::Sp, 2, 5, 1000000), CapExceeded);
  CHECK_THROWS_AS(classical_group(GroupKind::GL, 3, 3, 1000), CapExceeded);
}

TEST_CASE("conjugacy classes") {
  auto G = classical_group(GroupKind::GL, 2, 2);
  REQUIRE(G->num_classes() == 3);
  CHECK(G->cls(0).size == 1);
  CHECK(G->cls(1).size == 3);
  CHECK(G->cls(2).size == 2);
  CHECK(G->exponent() == 6);
  CHECK(classical_group(GroupKind::Sp, 2, 2)->num_classes() == 11);
  CHECK(classical_group(GroupKind::GL, 2, 3)->num_classes() == 8);
  CHECK(classical_group(GroupKind::GL, 3, 3)->num_classes() == 24);
  CHECK(classical_group(GroupKind::GL, 2, 5)->num_classes() == 24);
  CHECK(classical_group(GroupKind::Sp, 2, 3)->num_classes() == 34);
  // independent count for small groups
  for (auto s : {GroupSpec{GroupKind::GL, 3, 2}, GroupSpec{GroupKind::GU, 2, 2}, GroupSpec{GroupKind::GU, 3, 2},
                 GroupSpec{GroupKind::GL, 2, 4}, GroupSpec{GroupKind::Sp, 2, 2}}) {
    auto H = classical_group(s);
    CHECK(commuting_pair_count(H) == H->num_classes() * H->order());
  }
  uint64_t seed = 1;
  for (auto s : {GroupSpec{GroupKind::GL, 2, 3}, GroupSpec{GroupKind::GU, 3, 2}, GroupSpec{GroupKind::Sp, 2, 3},
                 GroupSpec{GroupKind::GU, 4, 2}})
    check_class_structure(classical_group(s), seed++);
}

TEST_CASE("canonical class order is deterministic") {
  auto F = FiniteField::make(3, 1);
  // regenerate GL(2,3) from a different generating set
  Matrix a(F, 2, 2, {1, 1, 0, 1}), b(F, 2, 2, {0, 1, 2, 0}), c = Matrix::diag(F, {2, 1});
  auto H = MatrixGroup::generate(F, 2, {c, b, a}, "GL(2,3) alt", 48);
  auto G = classical_group(GroupKind::GL, 2, 3);
  REQUIRE(H->num_classes() == G->num_classes());
  for (size_t i = 0; i < G->num_classes(); ++i) {
    CHECK(H->element(H->cls(i).rep) == G->element(G->cls(i).rep));
    CHECK(H->cls(i).size == G->cls(i).size);
  }
}

TEST_CASE("subgroups and projections") {
  auto G = classical_group(GroupKind::GL, 3, 2);
  CHECK(parabolic(G, 1)->index() == 7);
  auto Q = affine_subgroup_gl(G);
  CHECK(Q->group->order() == 24);
  CHECK(Q->factors[0]->order() == 6);
  CHECK(unitriangular_gl(G)->group->order() == 8);

  auto S = classical_group(GroupKind::Sp, 2, 3);
  auto P1 = parabolic(S, 1);
  CHECK(P1->index() == 40);
  CHECK(P1->factors[0]->order() == 2);
  CHECK(P1->factors[1]->order() == 24);
  CHECK(parabolic(S, 2)->index() == 40);
  CHECK(flag_stabilizer(classical_group(GroupKind::Sp, 2, 2), {1, 2})->index() == 45);
  CHECK(isotropic_vector_stabilizer(S)->group->order() == 648);

  auto U3 = classical_group(GroupKind::GU, 3, 2);
  CHECK(anisotropic_vector_stabilizer(U3)->group->order() == 18);
  CHECK(anisotropic_line_stabilizer(U3)->group->order() == 54);
  CHECK(parabolic(U3, 1)->index() == 9);
  CHECK(isotropic_vector_stabilizer(U3)->group->order() == 24);
  auto U4 = classical_group(GroupKind::GU, 4, 2);
  CHECK(isotropic_vector_stabilizer(U4)->group->order() == 576);
  auto P2 = parabolic(U4, 2);
  CHECK(P2->factors[0]->order() == 180);  // GL(2,4)
  CHECK(P2->factors[1]->order() == 1);

  // Levi projections are onto: every factor class is hit
  for (auto H : {P1, Q, parabolic(U4, 1)}) {
    for (size_t f = 0; f < H->factors.size(); ++f) {
      std::vector<char> hit(H->factors[f]->num_classes(), 0);
      for (const auto& fc : H->factor_classes) hit[fc[f]] = 1;
      for (char h : hit) CHECK(h);
    }
  }
  // fusion agrees with membership
  for (size_t c = 0; c < P1->group->num_classes(); ++c)
    CHECK(S->class_of(P1->to_parent[P1->group->cls(c).rep]) == P1->fusion[c]);
}

TEST_CASE("unitary adapter") {
  for (auto [d, q] : {std::pair{2, 2u}, std::pair{3, 2u}, std::pair{4, 2u}, std::pair{3, 3u}}) {
    Matrix A = unitary_basis_adapter(d, q);
    CHECK(A.conj_transpose(q) * A == antidiag_ones(A.field(), d));
  }
}

TEST_CASE("element tables that are not groups are rejected") {
  auto G = classical_group(GroupKind::GL, 3, 2);
  CHECK_THROWS_AS(subgroup_from_indices(G, {0, 1, 2, 3, 4}, "five"), ConstructionError);
  uint32_t x = G->cls(G->num_classes() - 1).rep;  // order 7
  REQUIRE(G->cls(G->num_classes() - 1).order == 7);
  CHECK_THROWS_AS(subgroup_from_indices(G, {0, x}, "pair"), ConstructionError);
  std::vector<uint32_t> cyc;
  for (int k = 0; k < 7; ++k) cyc.push_back(G->power(x, k));
  CHECK(subgroup_from_indices(G, cyc, "cyclic")->group->num_classes() == 7);
}

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
#include <random>

#include "doctest.h"
#include "wst/chartab.hpp"

using namespace wst;

namespace {

std::vector<int64_t> degrees(const CharacterTable& T) {
  std::vector<int64_t> d;
  for (size_t i = 0; i < T.size(); ++i) d.push_back(T.degree(i));
  return d;
}

ClassFunction random_class_function(const GroupPtr& G, std::mt19937_64& rng) {
  int N = (int)G->exponent();
  std::vector<Cyclotomic> v;
  for (size_t c = 0; c < G->num_classes(); ++c) {
    Cyclotomic x(N);
    for (int t = 0; t < 3; ++t) x += Cyclotomic::root(N, (int64_t)(rng() % N)).scale((int64_t)(rng() % 7) - 3);
    v.push_back(x);
  }
  return ClassFunction(G, v);
}

// |C_G(g)|_p
int64_t centralizer_p_part(const GroupPtr& G, size_t c) {
  uint64_t n = G->centralizer_order(c), r = 1, p = G->characteristic();
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return (int64_t)r;
}

}  // namespace

TEST_CASE("known degree lists") {
  auto T = character_table(classical_group(GroupKind::GL, 2, 2));
  CHECK(degrees(*T) == std::vector<int64_t>{1, 1, 2});
  CHECK(degrees(*character_table(classical_group(GroupKind::GL, 2, 3))) ==
        std::vector<int64_t>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(degrees(*character_table(classical_group(GroupKind::GL, 3, 2))) == std::vector<int64_t>{1, 3, 3, 6, 7, 8});
  CHECK(degrees(*character_table(classical_group(GroupKind::Sp, 2, 2))) ==
        std::vector<int64_t>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});
  // trivial character first
  for (size_t c = 0; c < T->group()->num_classes(); ++c) CHECK((*T)[0][c] == Cyclotomic::integer(1, 1));
}

TEST_CASE("tables validate exactly") {
  for (auto s : {GroupSpec{GroupKind::GL, 2, 4}, GroupSpec{GroupKind::GL, 2, 5}, GroupSpec{GroupKind::GU, 2, 2},
                 GroupSpec{GroupKind::GU, 3, 2}, GroupSpec{GroupKind::GU, 2, 3}, GroupSpec{GroupKind::Sp, 1, 5}}) {
    auto T = character_table(classical_group(s));
    auto v = T->validate();
    INFO(s.name(), " ", v.detail);
    CHECK(v.ok());
    // complex conjugation and Galois automorphisms permute the rows
    std::vector<ClassFunction> rows = T->irreducibles();
    for (int64_t k : {int64_t{-1}, int64_t{7}, int64_t{11}}) {
      if (std::gcd(k, (int64_t)T->conductor()) != 1) continue;
      for (const auto& x : rows) {
        auto y = x.galois(k);
        CHECK(std::find(rows.begin(), rows.end(), y) != rows.end());
      }
    }
  }
}

TEST_CASE("corrupted tables are rejected") {
  auto G = classical_group(GroupKind::GL, 2, 3);
  auto T = character_table(G);
  auto rows = T->irreducibles();
  rows[3] = rows[3] + ClassFunction::trivial(G);
  CHECK_FALSE(CharacterTable(G, rows).validate().ok());
  rows = T->irreducibles();
  rows.pop_back();
  CHECK_FALSE(CharacterTable(G, rows).validate().ok());
}

TEST_CASE("json round trip") {
  auto G = classical_group(GroupKind::GU, 2, 2);
  auto T = character_table(G);
  auto j = nlohmann::json::parse(T->to_json().dump());
  auto U = CharacterTable::from_json(G, j);
  REQUIRE(U.size() == T->size());
  for (size_t i = 0; i < U.size(); ++i) CHECK(U[i] == (*T)[i]);
  CHECK(j["classes"].size() == G->num_classes());
  CHECK_THROWS_AS(CharacterTable::from_json(classical_group(GroupKind::GL, 2, 3), j), Mismatch);
}

TEST_CASE("Frobenius reciprocity and transitivity (random class functions)") {
  std::mt19937_64 rng(42);
  auto G = classical_group(GroupKind::GL, 3, 2);
  auto P = parabolic(G, 1);
  auto B = flag_stabilizer(G, {1, 2});
  for (int t = 0; t < 10; ++t) {
    auto f = random_class_function(P->group, rng);
    auto g = random_class_function(G, rng);
    CHECK(inner(induce(*P, f), g) == inner(f, restrict_to(*P, g)));
    CHECK(inner(f, f) == inner(f, f).conj());
  }
  // Ind of the trivial character of the trivial subgroup is the regular character
  auto one = subgroup_from_indices(G, {0}, "1");
  CHECK(induce(*one, ClassFunction::trivial(one->group)) == ClassFunction::regular(G));
  // induced permutation character: value at 1 is the index
  auto perm = induce(*B, ClassFunction::trivial(B->group));
  CHECK(perm.degree() == Cyclotomic::integer(1, 21));
  CHECK(inner_rational(perm, ClassFunction::trivial(G)) == 1);
}

TEST_CASE("inflation from a Levi factor") {
  auto G = classical_group(GroupKind::Sp, 2, 2);
  auto P = parabolic(G, 1);
  auto TL = character_table(P->factors[1]);
  for (size_t i = 0; i < TL->size(); ++i) {
    auto f = inflate(*P, {ClassFunction(), (*TL)[i]});
    CHECK(inner_rational(f, f) == 1);
    CHECK(f.degree() == (*TL)[i].degree());
  }
  CHECK(inflate(*P, {ClassFunction(), ClassFunction()}) == ClassFunction::trivial(P->group));
}

TEST_CASE("Steinberg character") {
  for (auto s : {GroupSpec{GroupKind::GL, 2, 2}, GroupSpec{GroupKind::GL, 3, 2}, GroupSpec{GroupKind::GL, 2, 3},
                 GroupSpec{GroupKind::Sp, 2, 2}, GroupSpec{GroupKind::GU, 3, 2}, GroupSpec{GroupKind::GU, 2, 3}}) {
    auto G = classical_group(s);
    auto st = steinberg(G);
    INFO(s.name());
    CHECK(inner_rational(st, st) == 1);
    CHECK(st.degree() == Cyclotomic::rational(1, mpq_class(s.p_part())));
    for (size_t c = 0; c < G->num_classes(); ++c) {
      auto v = st[c].as_rational().value();
      if (G->p_regular(c)) CHECK(abs(v) == centralizer_p_part(G, c));
      else CHECK(v == 0);
    }
    auto d = decompose(*character_table(G), st);
    CHECK(d.constituents == 1);
    CHECK(d.is_character());
  }
}

TEST_CASE("decomposition rejects non-characters") {
  auto G = classical_group(GroupKind::GL, 2, 2);
  auto T = character_table(G);
  auto half = ClassFunction::regular(G).scale(mpq_class(1, 4));
  CHECK_THROWS_AS(T->decompose(half), ConstructionError);
  auto d = decompose(*T, ClassFunction::regular(G));
  CHECK(d.mult == std::vector<int64_t>{1, 1, 2});
  CHECK_FALSE(d.multiplicity_free());
}

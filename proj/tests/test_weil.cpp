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
#include "wst/weil.hpp"

using namespace wst;

namespace {

int64_t value(const ClassFunction& f, size_t c) { return f[c].as_rational().value().get_num().get_si(); }

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

const Torus& find_torus(const std::vector<Torus>& ts, const std::string& label) {
  for (const auto& t : ts)
    if (t.desc.label() == label) return t;
  throw InvalidArgument("no torus " + label);
}

}  // namespace

TEST_CASE("Weil character of GL") {
  auto G = classical_group(GroupKind::GL, 2, 2);
  auto w = weil_gl(G, false);
  CHECK(value(w, 0) == 4);
  for (size_t c = 1; c < G->num_classes(); ++c) {
    if (G->cls(c).order == 2) CHECK(value(w, c) == 2);
    if (G->cls(c).order == 3) CHECK(value(w, c) == 1);
  }
  // ω̂ = 1 + Ind_{Q} 1, the permutation character on vectors
  for (auto s : {GroupSpec{GroupKind::GL, 2, 3}, GroupSpec{GroupKind::GL, 3, 2}}) {
    auto H = classical_group(s);
    auto Q = affine_q(H);
    CHECK(weil_gl(H, false) == ClassFunction::trivial(H) + induce(*Q, ClassFunction::trivial(Q->group)));
  }
  // the twist is the order-2 linear character
  auto H = classical_group(GroupKind::GL, 2, 3);
  auto tw = weil_gl(H, true), un = weil_gl(H, false);
  CHECK(tw != un);
  for (size_t c = 0; c < H->num_classes(); ++c) CHECK(std::abs(value(tw, c)) == value(un, c));
  CHECK(weil_gl(G, true) == weil_gl(G, false));
}

TEST_CASE("Weil values on tori") {
  auto G = classical_group(GroupKind::Sp, 2, 3);
  auto ts = build_all_tori(G);
  const auto& t = find_torus(ts, "(-;2)");
  auto v = weil_on_torus(t, false);
  CHECK(v[0] == 9);
  for (size_t pos = 1; pos < v.size(); ++pos) CHECK(v[pos] == (pos % 2 ? 1 : -1));
  auto S2 = classical_group(GroupKind::Sp, 2, 2);
  auto t2 = build_torus(S2, {GroupKind::Sp, {}, {2}});
  auto v2 = weil_on_torus(t2, true);
  CHECK(v2[0] == 4);
  for (size_t pos = 1; pos < v2.size(); ++pos) CHECK(v2[pos] == -1);
  // multiplicativity: ω_T is the outer product of the factor contributions
  for (const auto& u : ts) {
    auto w = weil_on_torus(u, false);
    for (size_t pos = 0; pos < u.order(); ++pos) {
      auto e = u.exponents(pos);
      int64_t x = 1;
      for (size_t i = 0; i < u.factors.size(); ++i) x *= weil_on_torus_factor(u.factors[i], false)[e[i]];
      CHECK(w[pos] == x);
    }
  }
}

TEST_CASE("assembled Weil character") {
  for (auto s : {GroupSpec{GroupKind::Sp, 2, 2}, GroupSpec{GroupKind::Sp, 2, 3}, GroupSpec{GroupKind::GU, 3, 2},
                 GroupSpec{GroupKind::GU, 2, 2}, GroupSpec{GroupKind::GU, 4, 2}, GroupSpec{GroupKind::GU, 2, 3}}) {
    auto G = classical_group(s);
    const auto& w = weil_data(G);
    INFO(s.name());
    CHECK(w.conflicts.empty());
    CHECK(w.realizations > G->num_classes() / 2);
    int64_t deg = s.kind == GroupKind::Sp ? ipow(s.q, s.n) : ipow(s.q, s.n);
    CHECK(w.integer_values[0] == deg);
    for (size_t c = 0; c < G->num_classes(); ++c) {
      if (!G->p_regular(c)) {
        CHECK(w.integer_values[c] == 0);
        continue;
      }
      int N = fixed_space_dim(G, c);
      int64_t a = std::abs(w.integer_values[c]);
      if (s.kind == GroupKind::Sp) CHECK(a * a == ipow(s.q, N));
      else CHECK(a == ipow(s.q, N));
    }
    if (s.kind == GroupKind::Sp && s.q == 2)
      CHECK(w.source[G->num_classes() - 1] != WeilSource::Unused);
  }
}

TEST_CASE("unitary Weil character agrees with the closed formula in characteristic 2") {
  // ω = 1⁻·ω̂ and 1⁻ is trivial for q even; ω̂(g) = (-1)^d (-q)^{N(g)}
  auto G = classical_group(GroupKind::GU, 3, 2);
  const auto& w = weil_data(G);
  for (size_t c = 0; c < G->num_classes(); ++c) {
    if (!G->p_regular(c)) continue;
    int N = fixed_space_dim(G, c);
    CHECK(w.integer_values[c] == -ipow(-2, N));
  }
}

TEST_CASE("Weil-Steinberg character") {
  CHECK(weil_steinberg(classical_group(GroupKind::Sp, 2, 2)).degree() == Cyclotomic::integer(1, 64));
  CHECK(weil_steinberg(classical_group(GroupKind::GL, 2, 2)).degree() == Cyclotomic::integer(1, 8));
  auto G = classical_group(GroupKind::GU, 3, 2);
  auto ws = weil_steinberg(G);
  CHECK(ws.degree() == Cyclotomic::integer(1, 64));
  for (size_t c = 0; c < G->num_classes(); ++c)
    if (!G->p_regular(c)) CHECK(ws[c].is_zero());
  // a broken ω is caught
  auto bad = weil_data(G).values + ClassFunction::trivial(G).scale(mpq_class(1, 2));
  CHECK_THROWS_AS(weil_steinberg(G, bad), ConstructionError);
}

TEST_CASE("Gelfand-Graev character") {
  auto G = classical_group(GroupKind::GL, 2, 2);
  CHECK(gelfand_graev_gl(G).degree() == Cyclotomic::integer(1, 3));
  for (auto s : {GroupSpec{GroupKind::GL, 2, 2}, GroupSpec{GroupKind::GL, 2, 3}, GroupSpec{GroupKind::GL, 3, 2},
                 GroupSpec{GroupKind::GL, 2, 4}}) {
    auto H = classical_group(s);
    auto T = character_table(H);
    auto g = gelfand_graev_gl(H);
    INFO(s.name());
    auto d = decompose(*T, g);
    CHECK(d.multiplicity_free());
    CHECK(inner_rational(g, steinberg(H)) == 1);
    // independent of ν
    Elt a = H->field()->q() > 2 ? H->field()->primitive() : 1;
    CHECK(gelfand_graev_gl(H, a) == g);
  }
  auto G1 = classical_group(GroupKind::GL, 1, 5);
  CHECK(gelfand_graev_gl(G1) == ClassFunction::regular(G1));
  auto G0 = classical_group(GroupKind::GL, 0, 5);
  CHECK(gelfand_graev_gl(G0) == ClassFunction::trivial(G0));
}

TEST_CASE("level Steinberg characters") {
  CHECK(level_steinberg(classical_group(GroupKind::GL, 2, 2), 0).degree() == Cyclotomic::integer(1, 1));
  CHECK(level_steinberg(classical_group(GroupKind::GL, 2, 2), 1).degree() == Cyclotomic::integer(1, 1));
  CHECK(level_steinberg(classical_group(GroupKind::GL, 3, 2), 2).degree() == Cyclotomic::integer(1, 3));
  CHECK(level_steinberg_degree(3, 2, 2) == 3);
  for (auto [n, q] : {std::pair{2, 2u}, std::pair{2, 3u}, std::pair{3, 2u}, std::pair{3, 3u}}) {
    auto G = classical_group(GroupKind::GL, n, q);
    for (int i = 0; i < n; ++i) {
      auto s = level_steinberg(G, i);
      INFO(G->name(), " i=", i);
      CHECK(s.degree() == Cyclotomic::rational(1, mpq_class(level_steinberg_degree(n, q, i))));
      CHECK(inner_rational(s, s) == 1);  // irreducible
    }
  }
  CHECK_THROWS_AS(level_steinberg(classical_group(GroupKind::GL, 2, 2), 2), InvalidArgument);
}

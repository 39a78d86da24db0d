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
#include <numeric>
#include <random>

#include "doctest.h"
#include "wst/cyclotomic.hpp"

using namespace wst;

namespace {

Cyclotomic random_cyc(int N, std::mt19937& rng, int range = 5) {
  std::vector<int64_t> m(N, 0);
  int terms = 1 + rng() % 4;
  for (int t = 0; t < terms; ++t) m[rng() % N] += (int64_t)(rng() % (2 * range + 1)) - range;
  Cyclotomic x = Cyclotomic::from_exponents(N, m);
  if (rng() % 3 == 0) x = x.scale(mpq_class(1, 1 + rng() % 6));
  return x;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-6 * (1 + std::abs(a)); }

}  // namespace

TEST_CASE("cyc_root examples") {
  Cyclotomic i = Cyclotomic::root(4, 1);
  CHECK(i.phi() == 2);
  CHECK(i.coeff(0) == 0);
  CHECK(i.coeff(1) == 1);
  CHECK(Cyclotomic::root(3, 3) == Cyclotomic::integer(3, 1));
  CHECK(Cyclotomic::root(3, 2) == Cyclotomic::integer(3, -1) - Cyclotomic::root(3, 1));
}

TEST_CASE("cyc_arith examples") {
  CHECK(Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2) == Cyclotomic::integer(3, -1));
  CHECK(Cyclotomic::root(5, 1).conj() * Cyclotomic::root(5, 1) == Cyclotomic::integer(5, 1));
  CHECK(Cyclotomic::root(3, 1).embed(6) == Cyclotomic::root(6, 2));
  CHECK_THROWS_AS(Cyclotomic::root(3, 1) + Cyclotomic::root(5, 1), Mismatch);
  CHECK_THROWS_AS(Cyclotomic::root(4, 1).embed(6), Mismatch);
  CHECK(Cyclotomic::root(4, 2) == Cyclotomic::integer(6, -1));
  CHECK(Cyclotomic::root(4, 1) != Cyclotomic::root(6, 1));
}

TEST_CASE("cyc_classify examples") {
  auto z = Cyclotomic::root(3, 0) + Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
  auto c = z.classify();
  CHECK(c.kind == Cyclotomic::Kind::NonnegInteger);
  CHECK(c.value == 0);
  CHECK(Cyclotomic::integer(7, 2).classify().kind == Cyclotomic::Kind::NonnegInteger);
  CHECK(Cyclotomic::integer(7, -2).classify().kind == Cyclotomic::Kind::Integer);
  CHECK(Cyclotomic::rational(7, mpq_class(1, 2)).classify().kind == Cyclotomic::Kind::Rational);
  CHECK(Cyclotomic::root(5, 1).classify().kind == Cyclotomic::Kind::Other);
}

TEST_CASE("cyclotomic polynomials match known small cases") {
  CHECK(cyclotomic_polynomial(1) == std::vector<int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);
  for (int n = 1; n <= 60; ++n) CHECK((int)cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}

TEST_CASE("zeta_N has order exactly N") {
  for (int N = 1; N <= 24; ++N) {
    Cyclotomic z = Cyclotomic::root(N, 1), x = Cyclotomic::integer(N, 1);
    for (int k = 1; k <= N; ++k) {
      x = x * z;
      if (k < N) CHECK(x != Cyclotomic::integer(N, 1));
    }
    CHECK(x == Cyclotomic::integer(N, 1));
  }
}

TEST_CASE("ring axioms and numeric agreement on random samples") {
  std::mt19937 rng(5);
  for (int N : {1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24, 30, 36, 60, 120, 360}) {
    for (int t = 0; t < 30; ++t) {
      Cyclotomic a = random_cyc(N, rng), b = random_cyc(N, rng), c = random_cyc(N, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Cyclotomic(N));
      CHECK(a.conj().conj() == a);
      CHECK(close((a * b).approx(), a.approx() * b.approx()));
      CHECK(close((a + b).approx(), a.approx() + b.approx()));
      CHECK(close(a.conj().approx(), std::conj(a.approx())));
      CHECK(close(a.embed(2 * N).approx(), a.approx()));
      CHECK(Cyclotomic::from_json(a.to_json()) == a);
    }
    CHECK(Cyclotomic::rational(N, mpq_class(3, 7)).conj() == Cyclotomic::rational(N, mpq_class(3, 7)));
  }
}

TEST_CASE("trace form is positive definite") {
  std::mt19937 rng(9);
  for (int N = 1; N <= 12; ++N) {
    for (int t = 0; t < 10; ++t) {
      Cyclotomic x = random_cyc(N, rng);
      Cyclotomic n = x * x.conj();
      Cyclotomic tr(N);
      for (int k = 1; k <= N; ++k)
        if (std::gcd(k, N) == 1) tr += n.galois(k);
      auto r = tr.as_rational();
      REQUIRE(r.has_value());
      if (x.is_zero()) CHECK(*r == 0);
      else CHECK(*r > 0);
    }
  }
}

TEST_CASE("big-integer fallback") {
  Cyclotomic x = Cyclotomic::integer(12, int64_t{1} << 40) + Cyclotomic::root(12, 1);
  Cyclotomic y = x;
  for (int i = 0; i < 4; ++i) y = y * x;  // coefficients beyond 2^200
  CHECK(!y.is_small());
  Cyclotomic z = y;
  for (int i = 0; i < 4; ++i) z = z * x.conj();
  CHECK(close(z.approx() / 1e100, (y.approx() * std::pow(std::conj(x.approx()), 4)) / 1e100));
  CHECK(Cyclotomic::from_json(y.to_json()) == y);
  Cyclotomic back = y - y + Cyclotomic::integer(12, 3);
  CHECK(back.is_small());
  CHECK(back == Cyclotomic::integer(12, 3));
  CHECK(Cyclotomic::integer(12, 1).scale(mpq_class(1, 3)).scale(3) == Cyclotomic::integer(12, 1));
}

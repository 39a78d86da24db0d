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
#include <set>

#include "doctest.h"
#include "wst/matrix.hpp"

using namespace wst;

namespace {

std::vector<uint32_t> divisors(uint32_t n) {
  std::vector<uint32_t> d;
  for (uint32_t i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

// Multiplicative order by repeated multiplication, independent of log tables.
uint32_t naive_order(const FieldPtr& F, Elt a) {
  Elt x = a;
  uint32_t o = 1;
  while (x != 1) {
    x = F->mul(x, a);
    ++o;
  }
  return o;
}

Matrix random_matrix(const FieldPtr& F, int n, std::mt19937& rng) {
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng() % F->q();
  return m;
}

// det(xI - A) at the scalar x, by cofactor expansion.
Elt cofactor_det(const Matrix& A) {
  const FieldPtr& F = A.field();
  int n = A.rows();
  if (n == 1) return A(0, 0);
  Elt acc = 0;
  for (int j = 0; j < n; ++j) {
    Matrix minor(F, n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = A(r, c);
      }
    Elt t = F->mul(A(0, j), cofactor_det(minor));
    acc = (j % 2) ? F->sub(acc, t) : F->add(acc, t);
  }
  return acc;
}

}  // namespace

TEST_CASE("make_field examples") {
  auto F2 = FiniteField::make(2, 1);
  CHECK(F2->q() == 2);
  CHECK(F2->primitive() == 1);

  auto F4 = FiniteField::make(2, 2);
  CHECK(F4->modulus() == std::vector<uint32_t>{1, 1, 1});

  auto F9 = FiniteField::make(3, 2);
  CHECK(naive_order(F9, F9->primitive()) == 8);
  CHECK(FiniteField::make(3, 2) == F9);

  CHECK_THROWS_AS(FiniteField::make(4, 1), InvalidArgument);
  CHECK_THROWS_AS(FiniteField::make(2, 21), InvalidArgument);
}

TEST_CASE("field arithmetic examples") {
  auto F4 = FiniteField::make(2, 2);
  Elt a = F4->x();
  CHECK(F4->mul(a, a) == F4->add(a, 1));
  CHECK(F4->frobenius(a, 1) == F4->mul(a, a));
  CHECK(F4->frobenius(F4->frobenius(a, 1), 1) == a);
  auto F9 = FiniteField::make(3, 2);
  for (Elt x = 1; x < 9; ++x) CHECK(F9->pow(x, 8) == 1);
  CHECK_THROWS_AS(F9->inv(0), Singular);
  FieldElement u(F4, a), v(F9, 1);
  CHECK_THROWS_AS(u + v, Mismatch);
}

TEST_CASE("primitive element and Frobenius invariants for all table fields") {
  std::vector<std::pair<uint32_t, uint32_t>> pk = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8},
                                                   {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 6}, {5, 1}, {5, 2},
                                                   {5, 4}, {7, 2}, {11, 1}, {2, 12}, {13, 2}};
  for (auto [p, k] : pk) {
    auto F = FiniteField::make(p, k);
    uint32_t n = F->q() - 1;
    Elt g = F->primitive();
    CHECK(F->pow(g, n) == 1);
    for (uint32_t d : divisors(n))
      if (d < n) CHECK(F->pow(g, d) != 1);
    for (Elt x = 0; x < std::min<uint32_t>(F->q(), 300); ++x) CHECK(F->frobenius(x, (int)k) == x);
  }
}

TEST_CASE("field axioms by exhaustion for q <= 16") {
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 1}, {7, 1}}) {
    auto F = FiniteField::make(p, k);
    uint32_t q = F->q();
    for (Elt a = 0; a < q; ++a) {
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      for (Elt b = 0; b < q; ++b) {
        CHECK(F->frobenius(F->mul(a, b), 1) == F->mul(F->frobenius(a, 1), F->frobenius(b, 1)));
        CHECK(F->frobenius(F->add(a, b), 1) == F->add(F->frobenius(a, 1), F->frobenius(b, 1)));
        for (Elt c = 0; c < q; ++c)
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      }
    }
  }
}

TEST_CASE("subfield embeddings") {
  auto F2 = FiniteField::make(2, 1), F4 = FiniteField::make(2, 2), F16 = FiniteField::make(2, 4);
  CHECK((*subfield_embed(F2, F4))(1) == 1);
  auto F3 = FiniteField::make(3, 1), F9 = FiniteField::make(3, 2);
  auto e39 = subfield_embed(F3, F9);
  for (Elt a = 0; a < 3; ++a)
    for (Elt b = 0; b < 3; ++b) CHECK((*e39)(F3->add(a, b)) == F9->add((*e39)(a), (*e39)(b)));
  auto e = subfield_embed(F4, F16);
  CHECK(naive_order(F16, (*e)(F4->primitive())) == 3);
  for (Elt a = 0; a < 4; ++a)
    for (Elt b = 0; b < 4; ++b) {
      CHECK((*e)(F4->add(a, b)) == F16->add((*e)(a), (*e)(b)));
      CHECK((*e)(F4->mul(a, b)) == F16->mul((*e)(a), (*e)(b)));
    }
  std::set<Elt> img;
  for (Elt a = 0; a < 4; ++a) img.insert((*e)(a));
  CHECK(img.size() == 4);
  for (Elt a = 0; a < 4; ++a) CHECK(e->preimage((*e)(a)) == a);
  CHECK(subfield_embed(F4, F16) == e);
  CHECK_THROWS_AS(subfield_embed(F4, FiniteField::make(2, 3)), InvalidArgument);
}

TEST_CASE("matrix inverse on random samples") {
  std::mt19937 rng(7);
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}}) {
    auto F = FiniteField::make(p, k);
    int done = 0;
    while (done < 1000) {
      Matrix m = random_matrix(F, 1 + rng() % 4, rng);
      if (m.det() == 0) {
        CHECK_THROWS_AS(m.inverse(), Singular);
        continue;
      }
      CHECK((m * m.inverse()).is_identity());
      ++done;
    }
  }
}

TEST_CASE("char_poly agrees with det(xI - A) and companion matrices") {
  std::mt19937 rng(11);
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto F = FiniteField::make(p, k);
    for (int t = 0; t < 50; ++t) {
      int n = 1 + rng() % 4;
      Matrix A = random_matrix(F, n, rng);
      Poly cp = A.char_poly();
      CHECK(cp.degree() == n);
      for (Elt x = 0; x < F->q(); ++x) {
        Matrix M = Matrix::identity(F, n).scale(x) - A;
        CHECK(cp.eval(x) == cofactor_det(M));
      }
      std::vector<Elt> c(n + 1);
      for (int i = 0; i < n; ++i) c[i] = rng() % F->q();
      c[n] = 1;
      Poly f(F, c);
      CHECK(Matrix::companion(f).char_poly() == f);
    }
  }
}

TEST_CASE("fixed-space dimension") {
  auto F2 = FiniteField::make(2, 1);
  CHECK(kernel_dim_of_g_minus_1(Matrix::identity(F2, 3)) == 3);
  Matrix g(F2, 2, 2, {0, 1, 1, 1});
  CHECK(g.pow(3).is_identity());
  CHECK(kernel_dim_of_g_minus_1(g) == 0);
}

TEST_CASE("form preservation") {
  auto F3 = FiniteField::make(3, 1);
  FormSpec J = FormSpec::symplectic(Matrix(F3, 2, 2, {0, 1, 2, 0}));
  CHECK(J.valid());
  CHECK(form_preserved(Matrix::identity(F3, 2), J));
  CHECK(form_preserved(Matrix::diag(F3, {2, F3->inv(2)}), J));
  // Exhaustive over GL(2,3): exactly the determinant-one matrices preserve J.
  int preserving = 0, total = 0;
  for (Elt a = 0; a < 81; ++a) {
    Matrix g(F3, 2, 2, {a % 3, (a / 3) % 3, (a / 9) % 3, a / 27});
    if (g.det() == 0) continue;
    ++total;
    bool pres = form_preserved(g, J);
    CHECK(pres == (g.det() == 1));
    preserving += pres;
  }
  CHECK(total == 48);
  CHECK(preserving == 24);
}

TEST_CASE("invariant forms and basis transport") {
  std::mt19937 rng(3);
  auto F3 = FiniteField::make(3, 1);
  // A random conjugate of a symplectic group element has a transported form.
  Matrix J = standard_symplectic_gram(F3, 4);
  Matrix P0;
  do {
    P0 = random_matrix(F3, 4, rng);
  } while (P0.det() == 0);
  Matrix B = P0.transpose() * J * P0;
  CHECK(FormSpec::symplectic(B).valid());
  Matrix P = symplectic_basis(B);
  CHECK(P.transpose() * B * P == J);

  auto F4 = FiniteField::make(2, 2);
  for (int d = 1; d <= 4; ++d) {
    Matrix Q;
    do {
      Q = random_matrix(F4, d, rng);
    } while (Q.det() == 0);
    Matrix H = Q.conj_transpose(2) * Q;  // hermitian, nondegenerate
    CHECK(FormSpec::hermitian(H, 2).valid());
    Matrix O = unitary_orthonormal_basis(H, 2);
    CHECK(O.conj_transpose(2) * H * O == Matrix::identity(F4, d));
    if (d >= 2) {
      Matrix A = unitary_hyperbolic_basis(H, 2);
      CHECK(A.conj_transpose(2) * H * A == antidiag_ones(F4, d));
    }
  }

  // Every invariant form of a single symplectic element includes J's multiples.
  Matrix g = Matrix::identity(F3, 4);
  g(0, 3) = 1;  // transvection along v_1 preserves J
  CHECK(form_preserved(g, FormSpec::symplectic(J)));
  auto forms = invariant_forms({g}, FormKind::Symplectic);
  for (const auto& f : forms) CHECK(g.transpose() * f * g == f);
  Matrix found = find_invariant_form({g}, FormKind::Symplectic);
  CHECK(found.det() != 0);
  CHECK(FormSpec::symplectic(found).valid());
}

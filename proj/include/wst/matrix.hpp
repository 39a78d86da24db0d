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

#include <string>
#include <vector>

#include "wst/field.hpp"

namespace wst {

/// Polynomial over a finite field, constant coefficient first, no trailing
/// zeros (the zero polynomial is empty).
struct Poly {
  FieldPtr F;
  std::vector<Elt> c;

  Poly() = default;
  Poly(FieldPtr f, std::vector<Elt> coeffs);
  static Poly monomial(FieldPtr f, int deg, Elt coef = 1);

  int degree() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  Elt lead() const { return c.back(); }
  Elt eval(Elt x) const;
  void trim();

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(Elt s) const;
  bool operator==(const Poly& o) const { return F == o.F && c == o.c; }
  std::string to_string() const;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
Poly poly_monic(const Poly& a);
/// Roots in the coefficient field, by exhaustion, sorted by code.
std::vector<Elt> poly_roots(const Poly& a);

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, int rows, int cols);
  Matrix(FieldPtr f, int rows, int cols, std::vector<Elt> data);
  static Matrix identity(FieldPtr f, int n);
  static Matrix diag(FieldPtr f, const std::vector<Elt>& d);
  /// Companion matrix of a monic polynomial; its characteristic polynomial
  /// is the polynomial itself.
  static Matrix companion(const Poly& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return F_; }
  Elt& operator()(int r, int c) { return a_[(size_t)r * cols_ + c]; }
  Elt operator()(int r, int c) const { return a_[(size_t)r * cols_ + c]; }
  const std::vector<Elt>& data() const { return a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scale(Elt s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const { return a_ < o.a_; }

  Matrix transpose() const;
  /// Entrywise x ↦ x^{p^i}.
  Matrix frobenius(int i) const;
  /// Transpose of the entrywise image under x ↦ x^qsub.
  Matrix conj_transpose(uint32_t qsub) const;
  Matrix inverse() const;
  Matrix pow(int64_t e) const;
  Elt det() const;
  int rank() const;
  /// Columns span the right kernel.
  Matrix kernel() const;
  Poly char_poly() const;
  bool is_identity() const;

  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);
  std::vector<Elt> column(int c) const;
  std::vector<Elt> apply(const std::vector<Elt>& v) const;

  std::string to_string() const;

 private:
  FieldPtr F_;
  int rows_ = 0, cols_ = 0;
  std::vector<Elt> a_;
};

/// dim Ker(g − 1), the dimension of the fixed space.
int kernel_dim_of_g_minus_1(const Matrix& g);
/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);
/// Matrix whose columns are the given vectors.
Matrix from_columns(const FieldPtr& F, const std::vector<std::vector<Elt>>& cols);

enum class FormKind { None, Symplectic, Hermitian };

/// A nondegenerate form on F^d: u^T B v (symplectic) or σ(u)^T B v
/// (hermitian, σ: x ↦ x^qsub with |F| = qsub²).
struct FormSpec {
  FormKind kind = FormKind::None;
  Matrix gram;
  uint32_t qsub = 0;

  static FormSpec none(const FieldPtr& F, int d);
  static FormSpec symplectic(Matrix gram);
  static FormSpec hermitian(Matrix gram, uint32_t qsub);

  Elt eval(const std::vector<Elt>& u, const std::vector<Elt>& v) const;
  bool valid() const;
};

bool form_preserved(const Matrix& g, const FormSpec& form);

/// Alternating Gram of the basis v_1..v_n, v_n'..v_1':
/// J[i][2n-1-i] = 1 for i < n, -1 for i >= n.
Matrix standard_symplectic_gram(const FieldPtr& F, int n2);
/// Anti-diagonal matrix with ones.
Matrix antidiag_ones(const FieldPtr& F, int d);

/// Basis of all Gram matrices B with g^T B g = B (symplectic: also
/// alternating) or σ(g)^T B g = B (hermitian: also σ(B)^T = B) for every g.
/// The solution space is a GF(p)-space; the returned list is a GF(p)-basis.
std::vector<Matrix> invariant_forms(const std::vector<Matrix>& gens, FormKind kind, uint32_t qsub = 0);
/// A nondegenerate invariant form (throws ConstructionError if none found).
Matrix find_invariant_form(const std::vector<Matrix>& gens, FormKind kind, uint32_t qsub = 0);

/// P with P^T B P = standard_symplectic_gram (columns e_1..e_m, f_m..f_1).
Matrix symplectic_basis(const Matrix& B);
/// P with σ(P)^T B P = I for a hermitian B.
Matrix unitary_orthonormal_basis(const Matrix& B, uint32_t qsub);
/// P with σ(P)^T B P = antidiag(1, ..., 1): hyperbolic pairs (a_i, a_i') in
/// the order a_1..a_r, [a_0], a_r'..a_1', a_0 of norm 1 when d is odd.
Matrix unitary_hyperbolic_basis(const Matrix& B, uint32_t qsub);

}  // namespace wst

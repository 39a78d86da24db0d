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
#include "wst/matrix.hpp"

#include <random>
#include <sstream>

namespace wst {

namespace {

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (a != b) throw Mismatch("matrix field mismatch");
}

int frob_power_of(const FieldPtr& F, uint32_t qsub) {
  int s = 0;
  uint64_t v = 1;
  while (v < qsub) {
    v *= F->p();
    ++s;
  }
  if (v != qsub || (uint64_t)qsub * qsub != F->q())
    throw InvalidArgument("hermitian form needs |F| = qsub^2");
  return s;
}

using Vec = std::vector<Elt>;

Vec vscale(const FieldPtr& F, const Vec& v, Elt s) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = F->mul(v[i], s);
  return r;
}

Vec vaxpy(const FieldPtr& F, const Vec& y, Elt a, const Vec& x) {
  Vec r(y.size());
  for (size_t i = 0; i < y.size(); ++i) r[i] = F->add(y[i], F->mul(a, x[i]));
  return r;
}

bool vzero(const Vec& v) {
  for (Elt e : v)
    if (e) return false;
  return true;
}

// Greedy maximal independent subset.
std::vector<Vec> independent(const FieldPtr& F, const std::vector<Vec>& vs) {
  std::vector<Vec> out;
  int r = 0;
  for (const auto& v : vs) {
    if (vzero(v)) continue;
    auto trial = out;
    trial.push_back(v);
    int nr = from_columns(F, trial).rank();
    if (nr > r) {
      out = std::move(trial);
      r = nr;
    }
  }
  return out;
}

// All nonzero vectors of span(basis) in a fixed order, visited until f
// returns true.
template <class Fn>
bool for_each_in_span(const FieldPtr& F, const std::vector<Vec>& basis, Fn f) {
  const size_t m = basis.size();
  if (m == 0) return false;
  const size_t d = basis[0].size();
  std::vector<Elt> coef(m, 0);
  while (true) {
    size_t i = 0;
    while (i < m && coef[i] == F->q() - 1) coef[i++] = 0;
    if (i == m) return false;
    ++coef[i];
    Vec v(d, 0);
    for (size_t j = 0; j < m; ++j)
      if (coef[j]) v = vaxpy(F, v, coef[j], basis[j]);
    if (f(v)) return true;
  }
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldPtr f, std::vector<Elt> coeffs) : F(std::move(f)), c(std::move(coeffs)) { trim(); }

Poly Poly::monomial(FieldPtr f, int deg, Elt coef) {
  std::vector<Elt> c(deg + 1, 0);
  c[deg] = coef;
  return Poly(std::move(f), std::move(c));
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Elt Poly::eval(Elt x) const {
  Elt acc = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) acc = F->add(F->mul(acc, x), c[i]);
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  require_same(F, o.F);
  std::vector<Elt> r(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F->add(i < c.size() ? c[i] : 0, i < o.c.size() ? o.c[i] : 0);
  return Poly(F, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scale(F->neg(1)); }

Poly Poly::operator*(const Poly& o) const {
  require_same(F, o.F);
  if (c.empty() || o.c.empty()) return Poly(F, {});
  std::vector<Elt> r(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] = F->add(r[i + j], F->mul(c[i], o.c[j]));
  return Poly(F, std::move(r));
}

Poly Poly::scale(Elt s) const {
  std::vector<Elt> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = F->mul(c[i], s);
  return Poly(F, std::move(r));
}

std::string Poly::to_string() const {
  if (c.empty()) return "0";
  std::string s;
  for (int i = (int)c.size() - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string coef = F->to_string(c[i]);
    if (i == 0) {
      s += coef;
    } else {
      if (c[i] != 1) s += "(" + coef + ")";
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require_same(a.F, b.F);
  if (b.is_zero()) throw Singular("polynomial division by zero");
  const FieldPtr& F = a.F;
  std::vector<Elt> r = a.c;
  int db = b.degree();
  std::vector<Elt> qc(std::max(0, a.degree() - db + 1), 0);
  Elt li = F->inv(b.lead());
  for (int i = (int)r.size() - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    Elt t = F->mul(r[i], li);
    qc[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F->sub(r[i - db + j], F->mul(t, b.c[j]));
  }
  return {Poly(F, std::move(qc)), Poly(F, std::move(r))};
}

Poly poly_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a.scale(a.F->inv(a.lead()));
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

std::vector<Elt> poly_roots(const Poly& a) {
  std::vector<Elt> out;
  for (Elt x = 0; x < a.F->q(); ++x)
    if (a.eval(x) == 0) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldPtr f, int rows, int cols) : F_(std::move(f)), rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {}

Matrix::Matrix(FieldPtr f, int rows, int cols, std::vector<Elt> data)
    : F_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != (size_t)rows * cols) throw InvalidArgument("matrix data has wrong size");
}

Matrix Matrix::identity(FieldPtr f, int n) {
  Matrix m(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diag(FieldPtr f, const std::vector<Elt>& d) {
  Matrix m(std::move(f), (int)d.size(), (int)d.size());
  for (size_t i = 0; i < d.size(); ++i) m((int)i, (int)i) = d[i];
  return m;
}

Matrix Matrix::companion(const Poly& f) {
  int n = f.degree();
  if (n < 1 || f.lead() != 1) throw InvalidArgument("companion needs a monic polynomial of positive degree");
  Matrix m(f.F, n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) m(i, n - 1) = f.F->neg(f.c[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same(F_, o.F_);
  if (cols_ != o.rows_) throw InvalidArgument("matrix shape mismatch in product");
  Matrix r(F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Elt a = (*this)(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) = F_->add(r(i, j), F_->mul(a, o(k, j)));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(F_, o.F_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch in sum");
  Matrix r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scale(F_->neg(1)); }

Matrix Matrix::scale(Elt s) const {
  Matrix r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], s);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::frobenius(int i) const {
  Matrix r(F_, rows_, cols_);
  for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = F_->frobenius(a_[t], i);
  return r;
}

Matrix Matrix::conj_transpose(uint32_t qsub) const { return frobenius(frob_power_of(F_, qsub)).transpose(); }

std::vector<int> rref(Matrix& m) {
  const FieldPtr& F = m.field();
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Elt inv = F->inv(m(r, c));
    for (int j = 0; j < m.cols(); ++j) m(r, j) = F->mul(m(r, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || !m(i, c)) continue;
      Elt t = F->neg(m(i, c));
      for (int j = 0; j < m.cols(); ++j) m(i, j) = F->add(m(i, j), F->mul(t, m(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw InvalidArgument("inverse of non-square matrix");
  int n = rows_;
  Matrix aug(F_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if ((int)piv.size() < n || piv[n - 1] != n - 1) throw Singular("singular matrix");
  return aug.block(0, n, n, n);
}

Matrix Matrix::pow(int64_t e) const {
  if (rows_ != cols_) throw InvalidArgument("power of non-square matrix");
  Matrix base = e < 0 ? inverse() : *this;
  uint64_t k = e < 0 ? (uint64_t)(-e) : (uint64_t)e;
  Matrix r = identity(F_, rows_);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Elt Matrix::det() const {
  if (rows_ != cols_) throw InvalidArgument("det of non-square matrix");
  Matrix m = *this;
  int n = rows_;
  Elt d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c)) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = F_->neg(d);
    }
    d = F_->mul(d, m(c, c));
    Elt inv = F_->inv(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (!m(i, c)) continue;
      Elt t = F_->neg(F_->mul(m(i, c), inv));
      for (int j = c; j < n; ++j) m(i, j) = F_->add(m(i, j), F_->mul(t, m(c, j)));
    }
  }
  return d;
}

int Matrix::rank() const {
  Matrix m = *this;
  return (int)rref(m).size();
}

Matrix Matrix::kernel() const {
  Matrix m = *this;
  auto piv = rref(m);
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols_, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F_->neg(m((int)r, f));
    basis.push_back(v);
  }
  if (basis.empty()) return Matrix(F_, cols_, 0);
  return from_columns(F_, basis);
}

Poly Matrix::char_poly() const {
  if (rows_ != cols_) throw InvalidArgument("char_poly of non-square matrix");
  const int n = rows_;
  // Similarity reduction to upper Hessenberg form.
  Matrix H = *this;
  for (int j = 0; j + 2 < n; ++j) {
    int p = -1;
    for (int i = j + 1; i < n; ++i)
      if (H(i, j)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(H(p, c), H(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(H(r, p), H(r, j + 1));
    }
    Elt inv = F_->inv(H(j + 1, j));
    for (int r = j + 2; r < n; ++r) {
      if (!H(r, j)) continue;
      Elt t = F_->mul(H(r, j), inv);
      for (int c = 0; c < n; ++c) H(r, c) = F_->sub(H(r, c), F_->mul(t, H(j + 1, c)));
      for (int rr = 0; rr < n; ++rr) H(rr, j + 1) = F_->add(H(rr, j + 1), F_->mul(t, H(rr, r)));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_{m-i,m} (prod sub-diagonals) p_{m-i-1}.
  auto h = [&](int i, int j) { return H(i - 1, j - 1); };
  std::vector<Poly> P;
  P.push_back(Poly(F_, {1}));
  for (int m = 1; m <= n; ++m) {
    Poly pm = P[m - 1] * Poly(F_, {F_->neg(h(m, m)), 1});
    Elt t = 1;
    for (int i = 1; i < m; ++i) {
      t = F_->mul(t, h(m - i + 1, m - i));
      Elt coef = F_->mul(t, h(m - i, m));
      if (coef) pm = pm - P[m - i - 1].scale(coef);
    }
    P.push_back(pm);
  }
  return P[n];
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix b(F_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::vector<Elt> Matrix::column(int c) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<Elt> Matrix::apply(const std::vector<Elt>& v) const {
  Vec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] = F_->add(r[i], F_->mul((*this)(i, j), v[j]));
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << F_->to_string((*this)(i, j));
  }
  os << "]";
  return os.str();
}

int kernel_dim_of_g_minus_1(const Matrix& g) {
  Matrix m = g - Matrix::identity(g.field(), g.rows());
  return g.cols() - m.rank();
}

Matrix from_columns(const FieldPtr& F, const std::vector<std::vector<Elt>>& cols) {
  if (cols.empty()) throw InvalidArgument("from_columns needs at least one column");
  int d = (int)cols[0].size();
  Matrix m(F, d, (int)cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < d; ++i) m(i, (int)j) = cols[j][i];
  return m;
}

// ---------------------------------------------------------------- forms

FormSpec FormSpec::none(const FieldPtr& F, int d) { return FormSpec{FormKind::None, Matrix::identity(F, d), 0}; }

FormSpec FormSpec::symplectic(Matrix gram) { return FormSpec{FormKind::Symplectic, std::move(gram), 0}; }

FormSpec FormSpec::hermitian(Matrix gram, uint32_t qsub) {
  frob_power_of(gram.field(), qsub);
  return FormSpec{FormKind::Hermitian, std::move(gram), qsub};
}

Elt FormSpec::eval(const std::vector<Elt>& u, const std::vector<Elt>& v) const {
  const FieldPtr& F = gram.field();
  Vec uu = u;
  if (kind == FormKind::Hermitian) {
    int s = frob_power_of(F, qsub);
    for (auto& x : uu) x = F->frobenius(x, s);
  }
  Vec bv = gram.apply(v);
  Elt acc = 0;
  for (size_t i = 0; i < uu.size(); ++i) acc = F->add(acc, F->mul(uu[i], bv[i]));
  return acc;
}

bool FormSpec::valid() const {
  if (gram.rows() != gram.cols() || gram.det() == 0) return false;
  const FieldPtr& F = gram.field();
  switch (kind) {
    case FormKind::None:
      return true;
    case FormKind::Symplectic:
      for (int i = 0; i < gram.rows(); ++i) {
        if (gram(i, i)) return false;
        for (int j = 0; j < gram.cols(); ++j)
          if (gram(i, j) != F->neg(gram(j, i))) return false;
      }
      return true;
    case FormKind::Hermitian:
      return gram.conj_transpose(qsub) == gram;
  }
  return false;
}

bool form_preserved(const Matrix& g, const FormSpec& form) {
  if (g.rows() != g.cols() || g.rows() != form.gram.rows()) return false;
  switch (form.kind) {
    case FormKind::None:
      return g.det() != 0;
    case FormKind::Symplectic:
      return g.transpose() * form.gram * g == form.gram;
    case FormKind::Hermitian:
      return g.conj_transpose(form.qsub) * form.gram * g == form.gram;
  }
  return false;
}

Matrix standard_symplectic_gram(const FieldPtr& F, int n2) {
  if (n2 % 2) throw InvalidArgument("symplectic dimension must be even");
  Matrix J(F, n2, n2);
  int n = n2 / 2;
  for (int i = 0; i < n2; ++i) J(i, n2 - 1 - i) = i < n ? 1 : F->neg(1);
  return J;
}

Matrix antidiag_ones(const FieldPtr& F, int d) {
  Matrix A(F, d, d);
  for (int i = 0; i < d; ++i) A(i, d - 1 - i) = 1;
  return A;
}

std::vector<Matrix> invariant_forms(const std::vector<Matrix>& gens, FormKind kind, uint32_t qsub) {
  if (gens.empty()) throw InvalidArgument("invariant_forms needs generators");
  const FieldPtr& F = gens[0].field();
  const int d = gens[0].rows();
  const uint32_t k = F->k();
  FieldPtr P = FiniteField::make(F->p(), 1);
  int s = kind == FormKind::Hermitian ? frob_power_of(F, qsub) : 0;

  auto linear_image = [&](const Matrix& B) {
    std::vector<Matrix> outs;
    for (const auto& g : gens) {
      if (kind == FormKind::Symplectic) outs.push_back(g.transpose() * B * g - B);
      else outs.push_back(g.frobenius(s).transpose() * B * g - B);
    }
    if (kind == FormKind::Symplectic) {
      outs.push_back(B + B.transpose());
      Matrix dg(F, d, 1);
      for (int i = 0; i < d; ++i) dg(i, 0) = B(i, i);
      outs.push_back(dg);
    } else {
      outs.push_back(B.frobenius(s).transpose() - B);
    }
    std::vector<Elt> eq;
    for (const auto& M : outs)
      for (Elt e : M.data())
        for (uint32_t c : F->coeffs(e)) eq.push_back(c);
    return eq;
  };

  const int nunk = d * d * (int)k;
  std::vector<std::vector<Elt>> cols;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (uint32_t c = 0; c < k; ++c) {
        Matrix B(F, d, d);
        std::vector<uint32_t> unit(k, 0);
        unit[c] = 1;
        B(a, b) = F->from_coeffs(unit);
        cols.push_back(linear_image(B));
      }
  Matrix sys = from_columns(P, cols);
  Matrix ker = sys.kernel();
  std::vector<Matrix> out;
  for (int j = 0; j < ker.cols(); ++j) {
    Matrix B(F, d, d);
    for (int idx = 0; idx < nunk; ++idx) {
      Elt v = ker(idx, j);
      if (!v) continue;
      int a = idx / (d * (int)k), b = (idx / (int)k) % d, c = idx % (int)k;
      std::vector<uint32_t> unit(k, 0);
      unit[c] = v;
      B(a, b) = F->add(B(a, b), F->from_coeffs(unit));
    }
    out.push_back(B);
  }
  return out;
}

Matrix find_invariant_form(const std::vector<Matrix>& gens, FormKind kind, uint32_t qsub) {
  auto basis = invariant_forms(gens, kind, qsub);
  if (basis.empty()) throw ConstructionError("no invariant form");
  for (const auto& B : basis)
    if (B.det()) return B;
  const FieldPtr& F = basis[0].field();
  std::mt19937 rng(12345);
  for (int t = 0; t < 2000; ++t) {
    Matrix B(F, basis[0].rows(), basis[0].cols());
    for (const auto& b : basis) B = B + b.scale(F->from_int(rng() % F->p()));
    if (B.det()) return B;
  }
  throw ConstructionError("no nondegenerate invariant form found");
}

Matrix symplectic_basis(const Matrix& B) {
  const FieldPtr& F = B.field();
  const int d = B.rows();
  FormSpec form{FormKind::Symplectic, B, 0};
  auto b = [&](const Vec& u, const Vec& v) { return form.eval(u, v); };
  std::vector<Vec> W;
  for (int i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    W.push_back(e);
  }
  std::vector<Vec> E, Fv;
  while (!W.empty()) {
    Vec e = W[0];
    Vec f;
    for (size_t i = 1; i < W.size() && f.empty(); ++i)
      if (b(e, W[i])) f = W[i];
    if (f.empty()) throw ConstructionError("degenerate alternating form");
    f = vscale(F, f, F->inv(b(e, f)));
    std::vector<Vec> rest;
    for (const auto& w : W) {
      Vec w1 = vaxpy(F, w, F->neg(b(w, f)), e);
      w1 = vaxpy(F, w1, b(w, e), f);
      rest.push_back(w1);
    }
    E.push_back(e);
    Fv.push_back(f);
    W = independent(F, rest);
    if ((int)W.size() != d - 2 * (int)E.size()) throw ConstructionError("symplectic basis: dimension mismatch");
  }
  std::vector<Vec> cols = E;
  for (int i = (int)Fv.size() - 1; i >= 0; --i) cols.push_back(Fv[i]);
  Matrix P = from_columns(F, cols);
  if (P.transpose() * B * P != standard_symplectic_gram(F, d))
    throw ConstructionError("symplectic basis self-check failed");
  return P;
}

namespace {

// Solve c^{qsub+1} = a for c (a in the fixed field, nonzero).
Elt norm_preimage(const FieldPtr& F, uint32_t qsub, Elt a) {
  for (Elt c = 1; c < F->q(); ++c)
    if (F->pow(c, qsub + 1) == a) return c;
  throw ConstructionError("norm map not surjective");
}

struct HermCtx {
  FieldPtr F;
  FormSpec form;
  int s;
  Elt h(const Vec& u, const Vec& v) const { return form.eval(u, v); }
  // Project w onto the orthogonal complement of an orthonormal v.
  Vec perp_unit(const Vec& w, const Vec& v) const { return vaxpy(F, w, F->neg(h(v, w)), v); }
};

}  // namespace

Matrix unitary_orthonormal_basis(const Matrix& B, uint32_t qsub) {
  const FieldPtr& F = B.field();
  const int d = B.rows();
  HermCtx c{F, FormSpec::hermitian(B, qsub), frob_power_of(F, qsub)};
  std::vector<Vec> W;
  for (int i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    W.push_back(e);
  }
  std::vector<Vec> out;
  while (!W.empty()) {
    Vec v;
    for (const auto& w : W)
      if (c.h(w, w)) {
        v = w;
        break;
      }
    if (v.empty())
      for_each_in_span(F, W, [&](const Vec& w) {
        if (c.h(w, w)) {
          v = w;
          return true;
        }
        return false;
      });
    if (v.empty()) throw ConstructionError("degenerate hermitian form");
    Elt a = c.h(v, v);
    v = vscale(F, v, norm_preimage(F, qsub, F->inv(a)));
    std::vector<Vec> rest;
    for (const auto& w : W) rest.push_back(c.perp_unit(w, v));
    out.push_back(v);
    W = independent(F, rest);
    if ((int)W.size() != d - (int)out.size()) throw ConstructionError("orthonormal basis: dimension mismatch");
  }
  Matrix P = from_columns(F, out);
  if (P.conj_transpose(qsub) * B * P != Matrix::identity(F, d))
    throw ConstructionError("orthonormal basis self-check failed");
  return P;
}

Matrix unitary_hyperbolic_basis(const Matrix& B, uint32_t qsub) {
  const FieldPtr& F = B.field();
  const int d = B.rows();
  HermCtx c{F, FormSpec::hermitian(B, qsub), frob_power_of(F, qsub)};
  std::vector<Vec> W;
  for (int i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    W.push_back(e);
  }
  std::vector<Vec> X, Y;
  while (W.size() >= 2) {
    Vec x;
    for_each_in_span(F, W, [&](const Vec& w) {
      if (c.h(w, w) == 0) {
        x = w;
        return true;
      }
      return false;
    });
    if (x.empty()) throw ConstructionError("no isotropic vector in a subspace of dimension >= 2");
    Vec y;
    for (const auto& w : W)
      if (c.h(x, w)) {
        y = w;
        break;
      }
    if (y.empty()) throw ConstructionError("degenerate hermitian form");
    y = vscale(F, y, F->inv(c.h(x, y)));
    // y + t x is isotropic iff t + σ(t) = -h(y, y).
    Elt target = F->neg(c.h(y, y));
    bool found = false;
    for (Elt t = 0; t < F->q() && !found; ++t) {
      if (F->add(t, F->frobenius(t, c.s)) == target) {
        y = vaxpy(F, y, t, x);
        found = true;
      }
    }
    if (!found) throw ConstructionError("trace map not surjective");
    std::vector<Vec> rest;
    for (const auto& w : W) {
      Vec w1 = vaxpy(F, w, F->neg(c.h(y, w)), x);
      w1 = vaxpy(F, w1, F->neg(c.h(x, w)), y);
      rest.push_back(w1);
    }
    X.push_back(x);
    Y.push_back(y);
    W = independent(F, rest);
    if ((int)W.size() != d - 2 * (int)X.size()) throw ConstructionError("hyperbolic basis: dimension mismatch");
  }
  std::vector<Vec> cols = X;
  if (W.size() == 1) {
    Vec v = W[0];
    Elt a = c.h(v, v);
    if (!a) throw ConstructionError("degenerate hermitian form");
    cols.push_back(vscale(F, v, norm_preimage(F, qsub, F->inv(a))));
  }
  for (int i = (int)Y.size() - 1; i >= 0; --i) cols.push_back(Y[i]);
  Matrix P = from_columns(F, cols);
  if (P.conj_transpose(qsub) * B * P != antidiag_ones(F, d))
    throw ConstructionError("hyperbolic basis self-check failed");
  return P;
}

}  // namespace wst

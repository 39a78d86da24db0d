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
#include "wst/tori.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "wst/errors.hpp"

namespace wst {

namespace {

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

uint64_t factorial(int n) {
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= (uint64_t)i;
  return r;
}

void partitions_rec(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::string parts_label(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  std::string s;
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!s.empty()) s += ",";
    s += std::to_string(parts[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::map<int, int> multiplicities(const std::vector<int>& parts) {
  std::map<int, int> m;
  for (int p : parts) ++m[p];
  return m;
}

const GroupSpec& spec_of(const GroupPtr& G) {
  if (!G->spec()) throw InvalidArgument("tori need a classical group");
  return *G->spec();
}

// Minimal polynomial over F of x in Big ⊇ F, |F| = Q.
Poly min_poly(const FieldPtr& F, const FieldPtr& Big, Elt x, uint64_t Q, int expected_degree) {
  std::vector<Elt> conj{x};
  for (Elt y = Big->pow(x, (int64_t)Q); y != x; y = Big->pow(y, (int64_t)Q)) conj.push_back(y);
  if ((int)conj.size() != expected_degree)
    throw ConstructionError("torus generator has degree " + std::to_string(conj.size()) + ", expected " +
                            std::to_string(expected_degree));
  Poly f(Big, {1});
  for (Elt r : conj) f = f * Poly(Big, {Big->neg(r), 1});
  auto emb = subfield_embed(F, Big);
  std::vector<Elt> c;
  for (Elt a : f.c) {
    auto pre = emb->preimage(a);
    if (!pre) throw ConstructionError("minimal polynomial not defined over the base field");
    c.push_back(*pre);
  }
  return Poly(F, c);
}

// Companion matrix over F (|F| = Q = p^kF) of an element of order `order`
// in GF(Q^deg) obtained as ξ^cofactor.
Matrix element_companion(const FieldPtr& F, int deg, uint64_t cofactor) {
  auto Big = FiniteField::make(F->p(), F->k() * (uint32_t)deg);
  Elt x = Big->pow(Big->primitive(), (int64_t)cofactor);
  return Matrix::companion(min_poly(F, Big, x, F->q(), deg));
}

Matrix coordinate_basis(const FieldPtr& F, int d, const std::vector<int>& idx) {
  Matrix b(F, d, (int)idx.size());
  for (size_t j = 0; j < idx.size(); ++j) b(idx[j], (int)j) = 1;
  return b;
}

// Identity with `local` placed on the rows and columns idx.
Matrix place(const FieldPtr& F, int d, const Matrix& local, const std::vector<int>& idx) {
  Matrix g = Matrix::identity(F, d);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) g(idx[i], idx[j]) = local((int)i, (int)j);
  return g;
}

std::vector<int> range(int a, int len) {
  std::vector<int> v(len);
  std::iota(v.begin(), v.end(), a);
  return v;
}

TorusFactor make_factor(const GroupSpec& s, const FieldPtr& F, bool split, int m, int& next) {
  const int d = s.degree();
  const uint32_t q = s.q;
  TorusFactor f;
  f.split = split;
  f.part = m;
  f.order = split ? ipow(q, m) - 1 : ipow(q, m) + 1;
  switch (s.kind) {
    case GroupKind::GL: {
      Matrix M = element_companion(F, m, 1);
      f.coords = range(next, m);
      next += m;
      f.generator = place(F, d, M, f.coords);
      f.blocks.push_back({coordinate_basis(F, d, f.coords), M});
      break;
    }
    case GroupKind::Sp: {
      const int n = s.n, a = next;
      next += m;
      std::vector<int> first = range(a, m), second = range(2 * n - a - m, m);
      f.coords = first;
      f.coords.insert(f.coords.end(), second.begin(), second.end());
      if (split) {
        Matrix M = element_companion(F, m, 1);
        Matrix K = antidiag_ones(F, m);
        Matrix Mp = K * M.inverse().transpose() * K;
        Matrix local(F, 2 * m, 2 * m);
        local.set_block(0, 0, M);
        local.set_block(m, m, Mp);
        f.generator = place(F, d, local, f.coords);
        f.blocks.push_back({coordinate_basis(F, d, first), M});
        f.blocks.push_back({coordinate_basis(F, d, second), Mp});
      } else {
        Matrix C = element_companion(F, 2 * m, ipow(q, m) - 1);
        Matrix B = find_invariant_form({C}, FormKind::Symplectic);
        Matrix P = symplectic_basis(B);
        Matrix Cp = P.inverse() * C * P;
        f.generator = place(F, d, Cp, f.coords);
        f.blocks.push_back({coordinate_basis(F, d, f.coords), Cp});
      }
      break;
    }
    case GroupKind::GU: {
      f.coords = range(next, m);
      next += m;
      if (split) {
        // order q^m - 1 on a hyperbolic space W ⊕ W' of dimension m
        const int h = m / 2;
        Matrix M = element_companion(F, h, 1);
        Matrix K = antidiag_ones(F, h);
        Matrix Mp = K * M.frobenius((int)F->k() / 2).inverse().transpose() * K;
        Matrix D(F, m, m);
        D.set_block(0, 0, M);
        D.set_block(h, h, Mp);
        Matrix A = unitary_basis_adapter(m, q);
        f.generator = place(F, d, A * D * A.inverse(), f.coords);
        Matrix Aamb(F, d, m);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) Aamb(f.coords[i], j) = A(i, j);
        f.blocks.push_back({Aamb.block(0, 0, d, h), M});
        f.blocks.push_back({Aamb.block(0, h, d, h), Mp});
      } else {
        Matrix C = element_companion(F, m, ipow(q, m) - 1);
        Matrix B = find_invariant_form({C}, FormKind::Hermitian, q);
        Matrix P = unitary_orthonormal_basis(B, q);
        Matrix Cp = P.inverse() * C * P;
        f.generator = place(F, d, Cp, f.coords);
        f.blocks.push_back({coordinate_basis(F, d, f.coords), Cp});
      }
      break;
    }
  }
  return f;
}

// Krylov span of v under g (vectors restricted to idx) has full rank.
bool generates(const Matrix& g, std::vector<Elt> v, const std::vector<int>& idx) {
  const FieldPtr& F = g.field();
  std::vector<std::vector<Elt>> cols;
  for (size_t k = 0; k < idx.size(); ++k) {
    std::vector<Elt> r;
    for (int i : idx) r.push_back(v[i]);
    cols.push_back(r);
    v = g.apply(v);
  }
  return from_columns(F, cols).rank() == (int)idx.size();
}

std::vector<Elt> normalized(const FieldPtr& F, std::vector<Elt> v) {
  for (Elt x : v) {
    if (x == 0) continue;
    Elt s = F->inv(x);
    for (auto& y : v) y = F->mul(y, s);
    break;
  }
  return v;
}

}  // namespace

std::vector<uint64_t> TorusDescriptor::factor_orders(uint32_t q) const {
  std::vector<uint64_t> o;
  for (int m : split) o.push_back(ipow(q, m) - 1);
  for (int m : nonsplit) o.push_back(ipow(q, m) + 1);
  return o;
}

uint64_t TorusDescriptor::order(uint32_t q) const {
  uint64_t r = 1;
  for (uint64_t o : factor_orders(q)) r *= o;
  return r;
}

std::string TorusDescriptor::label() const {
  if (kind == GroupKind::Sp) return "(" + parts_label(split) + ";" + parts_label(nonsplit) + ")";
  std::vector<int> all = split;
  all.insert(all.end(), nonsplit.begin(), nonsplit.end());
  std::sort(all.rbegin(), all.rend());
  return "(" + parts_label(all) + ")";
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<TorusDescriptor> torus_descriptors(GroupKind kind, int n, uint32_t q) {
  (void)q;
  std::vector<TorusDescriptor> out;
  switch (kind) {
    case GroupKind::GL:
      for (auto& p : partitions(n)) out.push_back({kind, p, {}});
      break;
    case GroupKind::Sp:
      for (int k = n; k >= 0; --k)
        for (auto& a : partitions(k))
          for (auto& b : partitions(n - k)) out.push_back({kind, a, b});
      break;
    case GroupKind::GU:
      for (auto& p : partitions(n)) {
        TorusDescriptor d{kind, {}, {}};
        for (int m : p) (m % 2 == 0 ? d.split : d.nonsplit).push_back(m);
        out.push_back(d);
      }
      break;
  }
  return out;
}

uint64_t weyl_f_centralizer_order(const TorusDescriptor& d) {
  uint64_t r = 1;
  if (d.kind == GroupKind::Sp) {
    for (const auto* parts : {&d.split, &d.nonsplit})
      for (auto [i, a] : multiplicities(*parts)) r *= ipow(2 * (uint64_t)i, a) * factorial(a);
    return r;
  }
  std::vector<int> all = d.split;
  all.insert(all.end(), d.nonsplit.begin(), d.nonsplit.end());
  for (auto [i, c] : multiplicities(all)) r *= ipow((uint64_t)i, c) * factorial(c);
  return r;
}

std::vector<uint64_t> Torus::exponents(size_t pos) const {
  std::vector<uint64_t> e;
  for (const auto& f : factors) {
    e.push_back(pos % f.order);
    pos /= f.order;
  }
  return e;
}

size_t Torus::position(const std::vector<uint64_t>& exps) const {
  size_t pos = 0;
  for (size_t i = factors.size(); i-- > 0;) pos = pos * factors[i].order + exps[i] % factors[i].order;
  return pos;
}

Torus build_torus(const GroupPtr& G, const TorusDescriptor& desc) {
  const GroupSpec& s = spec_of(G);
  if (desc.kind != s.kind) throw InvalidArgument("descriptor kind does not match the group");
  const FieldPtr& F = G->field();
  Torus t;
  t.desc = desc;
  t.G = G;
  int next = 0;
  if (s.kind == GroupKind::GU) {
    std::vector<std::pair<int, bool>> parts;
    for (int m : desc.split) parts.push_back({m, true});
    for (int m : desc.nonsplit) parts.push_back({m, false});
    std::stable_sort(parts.begin(), parts.end(), [](auto a, auto b) { return a.first > b.first; });
    for (auto [m, sp] : parts) t.factors.push_back(make_factor(s, F, sp, m, next));
  } else {
    for (int m : desc.split) t.factors.push_back(make_factor(s, F, true, m, next));
    for (int m : desc.nonsplit) t.factors.push_back(make_factor(s, F, false, m, next));
  }
  int total = s.kind == GroupKind::Sp ? 2 * next : next;
  if (total != s.degree()) throw ConstructionError("descriptor " + desc.label() + " does not fit " + s.name());

  // each factor as a list of powers (element indices)
  std::vector<std::vector<uint32_t>> powers;
  for (const auto& f : t.factors) {
    int64_t gi = G->find(f.generator);
    if (gi < 0) throw ConstructionError("torus generator outside " + G->name());
    std::vector<uint32_t> pw{0};
    for (uint64_t k = 1; k < f.order; ++k) pw.push_back(G->mul(pw.back(), (uint32_t)gi));
    if (G->mul(pw.back(), (uint32_t)gi) != 0 || std::count(pw.begin(), pw.end(), 0u) != 1)
      throw ConstructionError("torus generator has the wrong order");
    powers.push_back(std::move(pw));
  }
  t.elements = {0};
  for (const auto& pw : powers) {
    std::vector<uint32_t> next_el;
    next_el.reserve(t.elements.size() * pw.size());
    for (uint32_t y : pw)
      for (uint32_t x : t.elements) next_el.push_back(G->mul(x, y));
    t.elements = std::move(next_el);
  }
  // the mixed-radix layout puts factor 0 fastest
  std::vector<uint32_t> sorted = t.elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ConstructionError("torus factors do not form a direct product");
  return t;
}

std::vector<Torus> build_all_tori(const GroupPtr& G) {
  const GroupSpec& s = spec_of(G);
  std::vector<Torus> out;
  for (const auto& d : torus_descriptors(s.kind, s.n, s.q)) out.push_back(build_torus(G, d));
  return out;
}

std::vector<CheckLine> verify_t_decomposition(const Torus& t) {
  const GroupSpec& s = spec_of(t.G);
  const FieldPtr& F = t.G->field();
  const int d = s.degree();
  const FormSpec form = s.form();
  const bool has_form = form.kind != FormKind::None;
  std::vector<CheckLine> out;

  // summands partition the coordinates, are invariant, orthogonal and nondegenerate
  {
    bool ok = true;
    std::string why;
    std::vector<int> owner(d, -1);
    for (size_t i = 0; i < t.factors.size(); ++i)
      for (int c : t.factors[i].coords) {
        if (c < 0 || c >= d || owner[c] >= 0) {
          ok = false;
          why = "coordinates overlap";
        } else {
          owner[c] = (int)i;
        }
      }
    if (std::count(owner.begin(), owner.end(), -1)) {
      ok = false;
      why = "summands do not span V";
    }
    for (size_t i = 0; ok && i < t.factors.size(); ++i) {
      const auto& ci = t.factors[i].coords;
      for (const auto& g : t.factors)
        for (int c : ci)
          for (int r = 0; r < d; ++r)
            if (owner[r] != (int)i && g.generator(r, c) != 0) {
              ok = false;
              why = "V_" + std::to_string(i + 1) + " not T-invariant";
            }
      if (has_form) {
        Matrix sub(F, (int)ci.size(), (int)ci.size());
        for (size_t a = 0; a < ci.size(); ++a)
          for (size_t b = 0; b < ci.size(); ++b) sub((int)a, (int)b) = form.gram(ci[a], ci[b]);
        if (sub.rank() != (int)ci.size()) {
          ok = false;
          why = "V_" + std::to_string(i + 1) + " degenerate";
        }
        for (int r : ci)
          for (int c = 0; c < d; ++c)
            if (owner[c] != (int)i && form.gram(r, c) != 0) {
              ok = false;
              why = "V_" + std::to_string(i + 1) + " not orthogonal to the others";
            }
      }
    }
    out.push_back({"orthogonal_decomposition", ok, ok ? std::to_string(t.factors.size()) + " summands" : why});
  }

  // T = ∏ T_i, T_i cyclic acting trivially off V_i
  {
    bool ok = true;
    std::string why;
    uint64_t prod = 1;
    for (size_t i = 0; i < t.factors.size(); ++i) {
      const auto& f = t.factors[i];
      prod *= f.order;
      std::set<int> own(f.coords.begin(), f.coords.end());
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if ((!own.count(r) || !own.count(c)) && f.generator(r, c) != (r == c ? 1u : 0u)) {
            ok = false;
            why = "T_" + std::to_string(i + 1) + " moves vectors outside V_" + std::to_string(i + 1);
          }
      if (!form_preserved(f.generator, form)) {
        ok = false;
        why = "T_" + std::to_string(i + 1) + " is not an isometry";
      }
      for (const auto& g : t.factors)
        if (f.generator * g.generator != g.generator * f.generator) {
          ok = false;
          why = "factors do not commute";
        }
    }
    std::vector<uint32_t> e = t.elements;
    std::sort(e.begin(), e.end());
    if (prod != t.order() || std::adjacent_find(e.begin(), e.end()) != e.end()) {
      ok = false;
      why = "not a direct product";
    }
    out.push_back({"direct_product", ok, ok ? "|T| = " + std::to_string(t.order()) : why});
  }

  // factor orders q^m ∓ 1
  {
    auto expected = t.desc.factor_orders(s.q);
    std::vector<uint64_t> got;
    bool ok = expected.size() == t.factors.size();
    for (const auto& f : t.factors) {
      got.push_back(f.order);
      Matrix x = f.generator.pow((int64_t)f.order);
      if (!x.is_identity()) ok = false;
      for (uint64_t r = 2; r <= f.order; ++r)
        if (f.order % r == 0 && is_prime(r) && f.generator.pow((int64_t)(f.order / r)).is_identity()) ok = false;
    }
    std::vector<uint64_t> a = expected, b = got;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) ok = false;
    std::string det;
    for (uint64_t o : got) det += (det.empty() ? "" : "x") + std::to_string(o);
    out.push_back({"factor_orders", ok, det});
  }

  // V^T = sum of the V_i with trivial T_i
  {
    Matrix stack(F, d * (int)t.factors.size(), d);
    for (size_t i = 0; i < t.factors.size(); ++i)
      stack.set_block((int)i * d, 0, t.factors[i].generator - Matrix::identity(F, d));
    int fixed_dim = t.factors.empty() ? d : d - stack.rank();
    int trivial = 0;
    bool inside = true;
    for (const auto& f : t.factors) {
      if (f.order != 1) continue;
      trivial += (int)f.coords.size();
      for (int c : f.coords)
        for (const auto& g : t.factors)
          if (g.generator.column(c) != Matrix::identity(F, d).column(c)) inside = false;
    }
    bool ok = inside && fixed_dim == trivial;
    out.push_back({"fixed_space", ok, "dim V^T = " + std::to_string(fixed_dim) + ", trivial summands " +
                                          std::to_string(trivial)});
  }

  // nonsplit factors act irreducibly on V_i
  {
    bool ok = true;
    std::string det;
    std::mt19937_64 rng(7);
    for (size_t i = 0; i < t.factors.size(); ++i) {
      const auto& f = t.factors[i];
      if (f.split) continue;
      const int k = (int)f.coords.size();
      uint64_t total = ipow(F->q(), k);
      bool exhaustive = total <= 65536;
      uint64_t tries = exhaustive ? total : 256;
      for (uint64_t code = 1; code < tries; ++code) {
        std::vector<Elt> v(d, 0);
        uint64_t x = exhaustive ? code : rng();
        bool nz = false;
        for (int j = 0; j < k; ++j) {
          v[f.coords[j]] = (Elt)(x % F->q());
          x /= F->q();
          nz |= v[f.coords[j]] != 0;
        }
        if (nz && !generates(f.generator, v, f.coords)) {
          ok = false;
          det = "V_" + std::to_string(i + 1) + " reducible";
          break;
        }
      }
      if (ok) det += std::string(det.empty() ? "" : "; ") + "V_" + std::to_string(i + 1) +
                     (exhaustive ? " irreducible (all vectors)" : " irreducible (sampled)");
    }
    out.push_back({"nonsplit_irreducible", ok, det.empty() ? "no nonsplit factors" : det});
  }

  // split factors fix a totally isotropic subspace of half the dimension
  {
    bool ok = true;
    std::string det;
    for (size_t i = 0; i < t.factors.size(); ++i) {
      const auto& f = t.factors[i];
      if (!f.split || !has_form) continue;
      const auto& W = f.blocks.at(0);
      if (f.generator * W.basis != W.basis * W.action || 2 * W.basis.cols() != (int)f.coords.size() ||
          W.basis.rank() != W.basis.cols())
        ok = false;
      for (int a = 0; a < W.basis.cols(); ++a)
        for (int b = 0; b < W.basis.cols(); ++b)
          if (form.eval(W.basis.column(a), W.basis.column(b)) != 0) ok = false;
      det += std::string(det.empty() ? "" : "; ") + "W_" + std::to_string(i + 1) + " dim " +
             std::to_string(W.basis.cols());
    }
    if (!has_form) det = "no form";
    out.push_back({"split_isotropic", ok, det.empty() ? "no split factors" : det});
  }

  // semisimple
  {
    bool ok = true;
    for (uint32_t e : t.elements)
      if (!t.G->p_regular(t.G->class_of(e))) ok = false;
    out.push_back({"semisimple", ok, ok ? "all elements p-regular" : "p-singular element"});
  }
  return out;
}

uint64_t algebraic_normalizer_order(const Torus& t) {
  const GroupPtr& G = t.G;
  const FieldPtr& F = G->field();
  const int d = G->degree();
  int E = 1;
  for (const auto& f : t.factors)
    for (const auto& b : f.blocks) E = std::lcm(E, b.action.rows());
  auto Big = FiniteField::make(F->p(), F->k() * (uint32_t)E);
  auto emb = subfield_embed(F, Big);
  auto lift = [&](const Matrix& m) {
    Matrix r(Big, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = (*emb)(m(i, j));
    return r;
  };

  std::vector<std::vector<Elt>> lines;
  for (const auto& f : t.factors)
    for (const auto& b : f.blocks) {
      Poly cp = b.action.char_poly();
      std::vector<Elt> c;
      for (Elt a : cp.c) c.push_back((*emb)(a));
      Matrix X = lift(b.action), B = lift(b.basis);
      for (Elt lam : poly_roots(Poly(Big, c))) {
        Matrix K = (X - Matrix::identity(Big, X.rows()).scale(lam)).kernel();
        if (K.cols() != 1) throw ConstructionError("torus action is not regular semisimple on a block");
        lines.push_back(normalized(Big, B.apply(K.column(0))));
      }
    }
  std::sort(lines.begin(), lines.end());
  if ((int)lines.size() != d || std::adjacent_find(lines.begin(), lines.end()) != lines.end())
    throw ConstructionError("eigenlines of " + t.desc.label() + " do not form a basis");

  std::vector<Elt> embt(F->q());
  for (Elt a = 0; a < F->q(); ++a) embt[a] = (*emb)(a);
  uint64_t count = 0;
  std::vector<Elt> w(d);
  for (uint32_t gi = 0; gi < G->order(); ++gi) {
    const uint8_t* g = G->bytes(gi);
    bool ok = true;
    for (const auto& v : lines) {
      for (int r = 0; r < d; ++r) {
        Elt acc = 0;
        for (int c = 0; c < d; ++c)
          if (v[c]) acc = Big->add(acc, Big->mul(embt[g[r * d + c]], v[c]));
        w[r] = acc;
      }
      if (!std::binary_search(lines.begin(), lines.end(), normalized(Big, w))) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

uint64_t finite_normalizer_order(const Torus& t) {
  const GroupPtr& G = t.G;
  std::vector<char> in_t(G->order(), 0);
  for (uint32_t e : t.elements) in_t[e] = 1;
  std::vector<uint32_t> gens;
  for (const auto& f : t.factors)
    if (f.order > 1) gens.push_back((uint32_t)G->find(f.generator));
  uint64_t count = 0;
  for (uint32_t g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (uint32_t x : gens)
      if (!in_t[G->mul(G->mul(g, x), G->inverse(g))]) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

CensusReport check_torus_census(const GroupPtr& G, const std::vector<Torus>& tori) {
  const GroupSpec& s = spec_of(G);
  CensusReport rep;
  auto& j = rep.details;
  j["group"] = s.name();

  uint64_t expected_count = 0;
  if (s.kind == GroupKind::Sp) {
    for (int k = 0; k <= s.n; ++k) expected_count += partitions(k).size() * partitions(s.n - k).size();
  } else {
    expected_count = partitions(s.n).size();
  }
  j["descriptors"] = tori.size();
  j["descriptors_expected"] = expected_count;
  if (tori.size() != expected_count) rep.ok = false;

  size_t neutral = 0;
  for (const auto& t : tori) neutral += t.desc.neutral();
  j["neutral"] = neutral;
  if (s.kind == GroupKind::Sp || (s.kind == GroupKind::GU && s.n % 2 == 0)) {
    size_t expected = partitions(s.kind == GroupKind::Sp ? s.n : s.n / 2).size();
    j["neutral_expected"] = expected;
    if (neutral != expected) rep.ok = false;
  }

  std::vector<std::vector<uint32_t>> signatures;
  std::vector<char> covered(G->num_classes(), 0);
  for (const auto& t : tori) {
    nlohmann::json e;
    e["torus"] = t.desc.label();
    e["order"] = t.order();
    uint64_t w = weyl_f_centralizer_order(t.desc);
    uint64_t n = algebraic_normalizer_order(t);
    e["weyl"] = w;
    e["normalizer"] = n;
    e["finite_normalizer"] = finite_normalizer_order(t);
    bool ident = n == t.order() * w;
    e["normalizer_identity"] = ident;
    bool dec = true;
    for (const auto& c : verify_t_decomposition(t))
      if (!c.ok) {
        dec = false;
        e["failed"].push_back(c.name + ": " + c.detail);
      }
    e["decomposition"] = dec;
    rep.ok = rep.ok && ident && dec && t.order() == t.desc.order(s.q);
    std::vector<uint32_t> sig;
    for (uint32_t x : t.elements) {
      sig.push_back(G->class_of(x));
      covered[G->class_of(x)] = 1;
    }
    std::sort(sig.begin(), sig.end());
    signatures.push_back(std::move(sig));
    j["tori"].push_back(e);
  }

  bool distinct = true;
  for (size_t a = 0; a < signatures.size(); ++a)
    for (size_t b = a + 1; b < signatures.size(); ++b)
      if (signatures[a] == signatures[b]) {
        distinct = false;
        j["conjugate_pair"].push_back(tori[a].desc.label() + " ~ " + tori[b].desc.label());
      }
  j["pairwise_nonconjugate"] = distinct;

  std::vector<size_t> missing;
  for (size_t c = 0; c < G->num_classes(); ++c)
    if (G->p_regular(c) && !covered[c]) missing.push_back(c);
  j["semisimple_classes_covered"] = missing.empty();
  if (!missing.empty()) j["uncovered_classes"] = missing;
  rep.ok = rep.ok && distinct && missing.empty();
  return rep;
}

}  // namespace wst

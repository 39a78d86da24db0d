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
#include "wst/weil.hpp"

#include <map>
#include <mutex>

#include "wst/errors.hpp"

namespace wst {

namespace {

const GroupSpec& spec_of(const GroupPtr& G) {
  if (!G->spec()) throw InvalidArgument(G->name() + " is not a classical group");
  return *G->spec();
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

ClassFunction integer_function(const GroupPtr& G, const std::vector<int64_t>& v) {
  std::vector<Cyclotomic> c;
  for (int64_t x : v) c.push_back(Cyclotomic::integer(1, x));
  return ClassFunction(G, std::move(c));
}

struct AffineData {
  GroupPtr G;
  std::shared_ptr<const Subgroup> Q;
  std::shared_ptr<const Subgroup> S;  // V_{n-1} Q_{n-2} inside Q, projected onto Q_{n-2}
};

const AffineData& affine_data(const GroupPtr& G) {
  static std::mutex m;
  static std::map<const MatrixGroup*, AffineData> cache;
  {
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(G.get());
    if (it != cache.end()) return it->second;
  }
  AffineData d;
  d.G = G;
  d.Q = affine_subgroup_gl(G);
  const int n = spec_of(G).n;
  if (n >= 2) {
    GroupPtr Qp = affine_data(d.Q->factors[0]).Q->group;
    auto S = subgroup_by_predicate(
        d.Q->group,
        [n](const Matrix& g) {
          for (int r = 1; r < n; ++r)
            if (g(r, 1) != (r == 1 ? 1u : 0u)) return false;
          return true;
        },
        "V Q_" + std::to_string(n - 2) + " in Q_" + std::to_string(n - 1));
    attach_projection(*S, {Qp}, [n](const Matrix& g) { return std::vector<Matrix>{g.block(1, 1, n - 1, n - 1)}; });
    d.S = S;
  }
  std::lock_guard<std::mutex> lk(m);
  return cache.emplace(G.get(), std::move(d)).first->second;
}

}  // namespace

int fixed_space_dim(const GroupPtr& G, size_t cls) { return kernel_dim_of_g_minus_1(G->element(G->cls(cls).rep)); }

ClassFunction weil_gl(const GroupPtr& G, bool twist) {
  const GroupSpec& s = spec_of(G);
  if (s.kind != GroupKind::GL) throw InvalidArgument("weil_gl needs GL(n,q)");
  const FieldPtr& F = G->field();
  std::vector<int64_t> v;
  for (size_t c = 0; c < G->num_classes(); ++c) {
    int64_t x = ipow(s.q, fixed_space_dim(G, c));
    if (twist && s.q % 2 == 1) {
      Elt det = G->element(G->cls(c).rep).det();
      if (F->pow(det, (s.q - 1) / 2) != 1) x = -x;
    }
    v.push_back(x);
  }
  return integer_function(G, v);
}

int sign_exponent(const TorusFactor& f, uint64_t e, bool char2_convention) {
  if (char2_convention || f.order % 2 == 1) return 0;
  return (int)(e % 2);
}

std::vector<int64_t> weil_on_torus_factor(const TorusFactor& f, bool char2_convention) {
  std::vector<int64_t> v(f.order);
  const int64_t s = f.split ? 1 : -1;
  for (uint64_t e = 0; e < f.order; ++e) {
    int64_t minus = sign_exponent(f, e, char2_convention) ? -1 : 1;
    v[e] = (e == 0 ? (int64_t)f.order : 0) + s * minus;
  }
  return v;
}

std::vector<int64_t> weil_on_torus(const Torus& t, bool char2_convention) {
  std::vector<std::vector<int64_t>> per;
  for (const auto& f : t.factors) per.push_back(weil_on_torus_factor(f, char2_convention));
  std::vector<int64_t> v(t.order());
  for (size_t pos = 0; pos < v.size(); ++pos) {
    auto e = t.exponents(pos);
    int64_t x = 1;
    for (size_t i = 0; i < per.size(); ++i) x *= per[i][e[i]];
    v[pos] = x;
  }
  return v;
}

std::string source_name(WeilSource s) {
  switch (s) {
    case WeilSource::TorusAssembled:
      return "torus-assembled";
    case WeilSource::FixedVectors:
      return "fixed-vector count";
    case WeilSource::ZeroExtension:
      return "zero-extension";
    case WeilSource::Unused:
      return "unused";
  }
  return "?";
}

nlohmann::json WeilData::to_json() const {
  nlohmann::json j;
  j["group"] = spec.to_json();
  j["realizations"] = realizations;
  j["conflicts"] = conflicts.size();
  const GroupPtr& G = values.group();
  for (size_t c = 0; c < integer_values.size(); ++c) {
    nlohmann::json e{{"class", c},
                     {"order", G->cls(c).order},
                     {"fixed_dim", fixed_space_dim(G, c)},
                     {"value", integer_values[c]},
                     {"source", source_name(source[c])}};
    if (!witness_torus[c].empty()) e["witness"] = {{"torus", witness_torus[c]}, {"position", witness_position[c]}};
    j["classes"].push_back(e);
  }
  for (const auto& x : conflicts)
    j["conflict_list"].push_back(
        {{"class", x.cls}, {"torus", x.torus}, {"position", x.position}, {"first", x.first}, {"other", x.other}});
  return j;
}

WeilData weil_semisimple(const GroupPtr& G, const std::vector<Torus>& tori, bool strict) {
  const GroupSpec& s = spec_of(G);
  if (s.kind == GroupKind::GL) throw InvalidArgument("torus assembly is for Sp and GU");
  const bool c2 = s.p() == 2;
  const size_t k = G->num_classes();
  WeilData w;
  w.spec = s;
  w.integer_values.assign(k, 0);
  w.source.assign(k, WeilSource::Unused);
  w.witness_torus.assign(k, "");
  w.witness_position.assign(k, -1);
  std::vector<char> set(k, 0);
  for (const auto& t : tori) {
    auto v = weil_on_torus(t, c2);
    for (size_t pos = 0; pos < v.size(); ++pos) {
      size_t c = G->class_of(t.elements[pos]);
      ++w.realizations;
      if (!set[c]) {
        set[c] = 1;
        w.integer_values[c] = v[pos];
        w.source[c] = WeilSource::TorusAssembled;
        w.witness_torus[c] = t.desc.label();
        w.witness_position[c] = (int64_t)pos;
      } else if (w.integer_values[c] != v[pos]) {
        w.conflicts.push_back({c, t.desc.label(), pos, w.integer_values[c], v[pos]});
      }
    }
  }
  for (size_t c = 0; c < k; ++c) {
    if (G->p_regular(c)) {
      if (!set[c]) throw ConstructionError("semisimple class " + std::to_string(c) + " of " + s.name() +
                                           " lies in no constructed torus");
    } else {
      w.source[c] = s.kind == GroupKind::Sp && c2 ? WeilSource::ZeroExtension : WeilSource::Unused;
    }
  }
  if (strict && !w.conflicts.empty())
    throw Mismatch("torus assembly of the Weil character is inconsistent on " + std::to_string(w.conflicts.size()) +
                   " realizations in " + s.name());
  w.values = integer_function(G, w.integer_values);
  return w;
}

const WeilData& weil_data(const GroupPtr& G) {
  static std::mutex m;
  static std::map<const MatrixGroup*, std::pair<GroupPtr, WeilData>> cache;
  {
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(G.get());
    if (it != cache.end()) return it->second.second;
  }
  const GroupSpec& s = spec_of(G);
  WeilData w;
  if (s.kind == GroupKind::GL) {
    w.spec = s;
    w.values = weil_gl(G, true);
    for (size_t c = 0; c < G->num_classes(); ++c)
      w.integer_values.push_back(w.values[c].as_rational().value().get_num().get_si());
    w.source.assign(G->num_classes(), WeilSource::FixedVectors);
    w.witness_torus.assign(G->num_classes(), "");
    w.witness_position.assign(G->num_classes(), -1);
  } else {
    w = weil_semisimple(G, build_all_tori(G));
  }
  std::lock_guard<std::mutex> lk(m);
  return cache.emplace(G.get(), std::make_pair(G, std::move(w))).first->second.second;
}

ClassFunction weil_steinberg(const GroupPtr& G, const ClassFunction& omega) {
  ClassFunction prod = omega * steinberg(G);
  std::vector<Cyclotomic> v;
  for (size_t c = 0; c < G->num_classes(); ++c)
    v.push_back(G->p_regular(c) ? prod[c] : Cyclotomic::integer(prod.conductor(), 0));
  ClassFunction ws(G, std::move(v));
  if (!decompose(*character_table(G), ws).is_character())
    throw ConstructionError("ω·St of " + G->name() + " is not a character");
  return ws;
}

ClassFunction weil_steinberg(const GroupPtr& G) { return weil_steinberg(G, weil_data(G).values); }

ClassFunction gelfand_graev_gl(const GroupPtr& G, Elt a) {
  const GroupSpec& s = spec_of(G);
  if (s.kind != GroupKind::GL) throw InvalidArgument("Gelfand-Graev character needs GL(n,q)");
  if (a == 0) throw InvalidArgument("additive character must be nontrivial");
  if (s.n == 0) return ClassFunction::trivial(G);
  if (s.n == 1) return ClassFunction::regular(G);
  auto U = unitriangular_gl(G);
  const FieldPtr& F = G->field();
  const int p = (int)F->p();
  std::vector<Cyclotomic> v;
  for (size_t c = 0; c < U->group->num_classes(); ++c) {
    Matrix u = U->group->element(U->group->cls(c).rep);
    int64_t e = 0;
    for (int i = 0; i + 1 < s.n; ++i) e += additive_exponent(F, F->mul(a, u(i, i + 1)));
    v.push_back(Cyclotomic::root(p, e));
  }
  return induce(*U, ClassFunction(U->group, std::move(v)));
}

std::shared_ptr<const Subgroup> affine_q(const GroupPtr& G) { return affine_data(G).Q; }

ClassFunction level_steinberg(const GroupPtr& G, int i) {
  const GroupSpec& s = spec_of(G);
  if (s.kind != GroupKind::GL) throw InvalidArgument("level Steinberg characters live on GL(n,q)");
  if (i < 0 || i > s.n - 1) throw InvalidArgument("level index out of range");
  const AffineData& d = affine_data(G);
  if (s.n == 1) return ClassFunction::trivial(d.Q->group);
  if (i == 0) return inflate(*d.Q, {steinberg(d.Q->factors[0])});
  ClassFunction mu = level_steinberg(d.Q->factors[0], i - 1);
  const FieldPtr& F = G->field();
  const int p = (int)F->p();
  const GroupPtr& S = d.S->group;
  std::vector<Cyclotomic> lam;
  for (size_t c = 0; c < S->num_classes(); ++c)
    lam.push_back(Cyclotomic::root(p, additive_exponent(F, S->element(S->cls(c).rep)(0, 1))));
  return induce(*d.S, ClassFunction(S, std::move(lam)) * inflate(*d.S, {mu}));
}

mpz_class level_steinberg_degree(int n, uint32_t q, int i) {
  mpz_class r = 1, Q = q;
  for (int j = 1; j <= i; ++j) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), Q.get_mpz_t(), n - j);
    r *= t - 1;
  }
  int m = n - i - 1;
  mpz_class st;
  mpz_pow_ui(st.get_mpz_t(), Q.get_mpz_t(), (unsigned long)(m * (m - 1) / 2));
  return r * st;
}

}  // namespace wst

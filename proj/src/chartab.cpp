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
#include "wst/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

namespace wst {

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(GroupPtr G, std::vector<Cyclotomic> values) : G_(std::move(G)), v_(std::move(values)) {
  if (v_.size() != G_->num_classes())
    throw InvalidArgument("class function on " + G_->name() + " needs " + std::to_string(G_->num_classes()) +
                          " values");
  N_ = 1;
  for (const auto& x : v_) N_ = (int)lcm64(N_, x.conductor());
  for (auto& x : v_) x = x.embed(N_);
}

ClassFunction ClassFunction::constant(GroupPtr G, int64_t v) {
  size_t k = G->num_classes();
  return ClassFunction(std::move(G), std::vector<Cyclotomic>(k, Cyclotomic::integer(1, v)));
}

ClassFunction ClassFunction::regular(GroupPtr G) {
  std::vector<Cyclotomic> v(G->num_classes(), Cyclotomic::integer(1, 0));
  v[0] = Cyclotomic::integer(1, (int64_t)G->order());
  return ClassFunction(std::move(G), std::move(v));
}

namespace {

void same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw Mismatch("class functions on different groups");
}

template <class Op>
ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b, Op op) {
  same_group(a, b);
  int M = (int)lcm64(a.conductor(), b.conductor());
  std::vector<Cyclotomic> v;
  v.reserve(a.size());
  for (size_t c = 0; c < a.size(); ++c) v.push_back(op(a[c].embed(M), b[c].embed(M)));
  return ClassFunction(a.group(), std::move(v));
}

}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  return pointwise(*this, o, [](const Cyclotomic& x, const Cyclotomic& y) { return x + y; });
}
ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  return pointwise(*this, o, [](const Cyclotomic& x, const Cyclotomic& y) { return x - y; });
}
ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  return pointwise(*this, o, [](const Cyclotomic& x, const Cyclotomic& y) { return x * y; });
}

ClassFunction ClassFunction::operator-() const { return scale(int64_t{-1}); }

ClassFunction ClassFunction::scale(int64_t s) const {
  std::vector<Cyclotomic> v;
  for (const auto& x : v_) v.push_back(x.scale(s));
  return ClassFunction(G_, std::move(v));
}

ClassFunction ClassFunction::scale(const mpq_class& s) const {
  std::vector<Cyclotomic> v;
  for (const auto& x : v_) v.push_back(x.scale(s));
  return ClassFunction(G_, std::move(v));
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  for (const auto& x : v_) v.push_back(x.conj());
  return ClassFunction(G_, std::move(v));
}

ClassFunction ClassFunction::galois(int64_t k) const {
  std::vector<Cyclotomic> v;
  for (const auto& x : v_) v.push_back(x.galois(k));
  return ClassFunction(G_, std::move(v));
}

ClassFunction ClassFunction::embed(int M) const {
  std::vector<Cyclotomic> v;
  for (const auto& x : v_) v.push_back(x.embed(M));
  return ClassFunction(G_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (G_ != o.G_) return false;
  int M = (int)lcm64(N_, o.N_);
  for (size_t c = 0; c < v_.size(); ++c)
    if (v_[c].embed(M) != o.v_[c].embed(M)) return false;
  return true;
}

bool ClassFunction::is_zero() const {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

nlohmann::json ClassFunction::to_json() const {
  auto a = nlohmann::json::array();
  for (const auto& x : v_) a.push_back(x.to_json());
  return a;
}

Cyclotomic inner(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  const auto& G = a.group();
  int M = (int)lcm64(a.conductor(), b.conductor());
  Cyclotomic s(M);
  for (size_t c = 0; c < a.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    s += (a[c].embed(M) * b[c].embed(M).conj()).scale((int64_t)G->cls(c).size);
  }
  return s.scale(mpq_class(1, mpz_class(std::to_string(G->order()))));
}

mpq_class inner_rational(const ClassFunction& a, const ClassFunction& b) {
  auto r = inner(a, b).as_rational();
  if (!r) throw ConstructionError("inner product is not rational on " + a.group()->name());
  return *r;
}

ClassFunction restrict_to(const Subgroup& H, const ClassFunction& f) {
  if (f.group() != H.parent) throw Mismatch("restriction from the wrong group");
  std::vector<Cyclotomic> v;
  for (size_t c = 0; c < H.group->num_classes(); ++c) v.push_back(f[H.fusion[c]]);
  return ClassFunction(H.group, std::move(v));
}

ClassFunction induce(const Subgroup& H, const ClassFunction& f) {
  if (f.group() != H.group) throw Mismatch("induction of a class function on the wrong group");
  const auto& G = H.parent;
  int M = (int)lcm64(f.conductor(), (int64_t)G->exponent());
  std::vector<Cyclotomic> acc(G->num_classes(), Cyclotomic(M));
  for (size_t c = 0; c < H.group->num_classes(); ++c) {
    if (f[c].is_zero()) continue;
    acc[H.fusion[c]] += f[c].embed(M).scale((int64_t)H.group->cls(c).size);
  }
  // Ind f(g) = [G:H] / |g^G| * Σ_{c ⊆ g^G} |c| f(c)
  mpz_class idx(std::to_string(H.index()));
  for (size_t s = 0; s < acc.size(); ++s)
    if (!acc[s].is_zero()) acc[s] = acc[s].scale(mpq_class(idx, mpz_class(std::to_string(G->cls(s).size))));
  return ClassFunction(G, std::move(acc));
}

ClassFunction inflate(const Subgroup& H, const std::vector<ClassFunction>& per_factor) {
  if (per_factor.size() != H.factors.size()) throw InvalidArgument("inflate: one class function per factor");
  for (size_t f = 0; f < per_factor.size(); ++f)
    if (per_factor[f].group() && per_factor[f].group() != H.factors[f])
      throw Mismatch("inflate: class function on the wrong factor");
  int M = 1;
  for (const auto& f : per_factor)
    if (f.group()) M = (int)lcm64(M, f.conductor());
  std::vector<Cyclotomic> v;
  for (size_t c = 0; c < H.group->num_classes(); ++c) {
    Cyclotomic x = Cyclotomic::integer(M, 1);
    for (size_t f = 0; f < per_factor.size(); ++f)
      if (per_factor[f].group()) x *= per_factor[f][H.factor_classes[c][f]].embed(M);
    v.push_back(x);
  }
  return ClassFunction(H.group, std::move(v));
}

// ---------------------------------------------------------------------------
// CharacterTable

CharacterTable::CharacterTable(GroupPtr G, std::vector<ClassFunction> irr) : G_(std::move(G)), irr_(std::move(irr)) {
  N_ = (int)G_->exponent();
  for (auto& x : irr_) {
    if (x.group() != G_) throw Mismatch("table entries must live on the table's group");
    N_ = (int)lcm64(N_, x.conductor());
  }
  for (auto& x : irr_) {
    x = x.embed(N_);
    irr_conj_.push_back(x.conj());
  }
}

int64_t CharacterTable::degree(size_t i) const {
  auto d = irr_[i].degree().as_rational();
  if (!d || d->get_den() != 1) throw ConstructionError("non-integral degree");
  return d->get_num().get_si();
}

std::vector<int64_t> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<int64_t> m;
  for (size_t i = 0; i < irr_.size(); ++i) {
    auto r = inner(f, irr_[i]).as_rational();
    if (!r || r->get_den() != 1)
      throw ConstructionError("class function on " + G_->name() + " is not a virtual character");
    m.push_back(r->get_num().get_si());
  }
  return m;
}

CharacterTable::Validation CharacterTable::validate() const {
  Validation v;
  size_t k = G_->num_classes();
  if (irr_.size() != k) {
    v.detail = "table has " + std::to_string(irr_.size()) + " rows for " + std::to_string(k) + " classes";
    return v;
  }
  mpz_class sumsq = 0;
  v.degrees = true;
  for (size_t i = 0; i < k; ++i) {
    auto d = irr_[i].degree().as_rational();
    if (!d || d->get_den() != 1 || *d <= 0) {
      v.degrees = false;
      v.detail = "bad degree in row " + std::to_string(i);
      return v;
    }
    sumsq += d->get_num() * d->get_num();
  }
  mpz_class order(std::to_string(G_->order()));
  if (sumsq != order) {
    v.degrees = false;
    v.detail = "sum of squared degrees " + sumsq.get_str() + " != |G| = " + order.get_str();
  }
  // rows: Σ_c |c| χ_i(c) conj χ_j(c) = |G| δ_ij
  v.rows = true;
  for (size_t i = 0; i < k && v.rows; ++i)
    for (size_t j = i; j < k && v.rows; ++j) {
      Cyclotomic s(N_);
      for (size_t c = 0; c < k; ++c) s += (irr_[i][c] * irr_conj_[j][c]).scale((int64_t)G_->cls(c).size);
      Cyclotomic expect = Cyclotomic::integer(N_, i == j ? (int64_t)G_->order() : 0);
      if (s != expect) {
        v.rows = false;
        v.detail = "row orthogonality fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  // columns: Σ_i χ_i(r) conj χ_i(s) = |C_G(g_r)| δ_rs
  v.columns = true;
  for (size_t r = 0; r < k && v.columns; ++r)
    for (size_t s = r; s < k && v.columns; ++s) {
      Cyclotomic t(N_);
      for (size_t i = 0; i < k; ++i) t += irr_[i][r] * irr_conj_[i][s];
      Cyclotomic expect = Cyclotomic::integer(N_, r == s ? (int64_t)G_->centralizer_order(r) : 0);
      if (t != expect) {
        v.columns = false;
        v.detail = "column orthogonality fails at (" + std::to_string(r) + "," + std::to_string(s) + ")";
      }
    }
  return v;
}

nlohmann::json CharacterTable::to_json() const {
  nlohmann::json j;
  if (G_->spec()) j["group"] = G_->spec()->to_json();
  else j["group"] = {{"name", G_->name()}, {"order", G_->order()}};
  j["N"] = N_;
  auto cl = nlohmann::json::array();
  for (size_t c = 0; c < G_->num_classes(); ++c)
    cl.push_back({{"order", G_->cls(c).order},
                  {"size", G_->cls(c).size},
                  {"centralizer", G_->centralizer_order(c)},
                  {"representative", G_->element(G_->cls(c).rep).to_string()}});
  j["classes"] = cl;
  auto rows = nlohmann::json::array();
  for (const auto& x : irr_) rows.push_back(x.to_json());
  j["irreducibles"] = rows;
  return j;
}

CharacterTable CharacterTable::from_json(GroupPtr G, const nlohmann::json& j) {
  const auto& cl = j.at("classes");
  if (cl.size() != G->num_classes()) throw Mismatch("stored table has a different number of classes");
  for (size_t c = 0; c < cl.size(); ++c) {
    if (cl[c].at("order").get<uint32_t>() != G->cls(c).order || cl[c].at("size").get<uint64_t>() != G->cls(c).size)
      throw Mismatch("stored table has a different class structure");
    if (cl[c].contains("representative") &&
        cl[c]["representative"].get<std::string>() != G->element(G->cls(c).rep).to_string())
      throw Mismatch("stored table has different class representatives");
  }
  std::vector<ClassFunction> irr;
  for (const auto& row : j.at("irreducibles")) {
    std::vector<Cyclotomic> v;
    for (const auto& x : row) v.push_back(Cyclotomic::from_json(x));
    irr.emplace_back(G, std::move(v));
  }
  return CharacterTable(G, std::move(irr));
}

// ---------------------------------------------------------------------------
// Dixon–Schneider

namespace {

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

uint64_t primitive_root_mod(uint64_t l) {
  std::vector<uint64_t> fac;
  uint64_t n = l - 1;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      fac.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) fac.push_back(n);
  for (uint64_t g = 2;; ++g) {
    bool ok = true;
    for (uint64_t p : fac) ok = ok && powmod(g, (l - 1) / p, l) != 1;
    if (ok) return g;
  }
}

// Columns of B span an invariant subspace; B is kept in column echelon form
// (identity on the pivot rows) so restricted operators read off directly.
struct Space {
  Matrix B;
  std::vector<int> pivots;
};

Space column_echelon(const Matrix& B) {
  Matrix t = B.transpose();
  auto piv = rref(t);
  int m = (int)piv.size();
  Space s{t.block(0, 0, m, t.cols()).transpose(), piv};
  return s;
}

class DixonSchneider {
 public:
  DixonSchneider(const GroupPtr& G) : G_(G), k_(G->num_classes()) {}

  void class_matrices() {
    a_.assign(k_ * k_ * k_, 0);
    for (size_t s = 0; s < k_; ++s) {
      uint32_t z = G_->cls(s).rep;
      for (uint32_t x = 0; x < G_->order(); ++x) {
        size_t j = G_->class_of(x), r = G_->class_of(G_->mul(G_->inverse(x), z));
        ++a_[(j * k_ + r) * k_ + s];
      }
    }
  }

  std::vector<ClassFunction> run(uint64_t l) {
    auto F = FiniteField::make((uint32_t)l, 1);
    const uint64_t e = G_->exponent();
    std::vector<Space> work{column_echelon(Matrix::identity(F, (int)k_))}, done;
    for (size_t j = 1; j < k_ && !work.empty(); ++j) {
      Matrix M(F, (int)k_, (int)k_);
      for (size_t r = 0; r < k_; ++r)
        for (size_t s = 0; s < k_; ++s) M((int)r, (int)s) = F->from_int((int64_t)(a_[(j * k_ + r) * k_ + s] % l));
      std::vector<Space> next;
      for (auto& sp : work) {
        int m = sp.B.cols();
        Matrix MB = M * sp.B;
        Matrix R(F, m, m);
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) R(a, b) = MB(sp.pivots[a], b);
        // sanity: MB == B R (the space is invariant)
        if (sp.B * R != MB) throw ConstructionError("class matrix does not preserve an eigenspace");
        auto roots = poly_roots(R.char_poly());
        int total = 0;
        for (Elt lam : roots) {
          Matrix S = R - Matrix::identity(F, m).scale(lam);
          Matrix K = S.kernel();
          total += K.cols();
          Space sub = column_echelon(sp.B * K);
          (sub.B.cols() == 1 ? done : next).push_back(sub);
        }
        if (total != m) throw ConstructionError("class matrix is not diagonalizable mod " + std::to_string(l));
      }
      work = std::move(next);
    }
    if (!work.empty() || done.size() != k_)
      throw ConstructionError("common eigenspaces do not split into lines mod " + std::to_string(l));

    uint64_t z = powmod(primitive_root_mod(l), (l - 1) / e, l);
    std::vector<ClassFunction> irr;
    for (auto& sp : done) {
      std::vector<uint64_t> w(k_);
      Elt w0 = sp.B(0, 0);
      if (!w0) throw ConstructionError("eigenvector vanishes at the identity");
      for (size_t c = 0; c < k_; ++c) w[c] = F->div(sp.B((int)c, 0), w0);
      // |G| / χ(1)^2 = Σ_c ω_c ω_{c*} / |c|
      uint64_t t = 0;
      for (size_t c = 0; c < k_; ++c)
        t = (t + w[c] * w[G_->inverse_class(c)] % l * powmod(G_->cls(c).size % l, l - 2, l)) % l;
      if (!t) throw ConstructionError("degenerate degree equation");
      uint64_t d2 = (uint64_t)(G_->order() % l) * powmod(t, l - 2, l) % l;
      uint64_t deg = 0;
      for (uint64_t d = 1; d * d <= G_->order(); ++d)
        if (G_->order() % d == 0 && d * d % l == d2) {
          deg = d;
          break;
        }
      if (!deg) throw ConstructionError("no admissible degree mod " + std::to_string(l));
      std::vector<uint64_t> X(k_);
      for (size_t c = 0; c < k_; ++c) X[c] = w[c] * deg % l * powmod(G_->cls(c).size % l, l - 2, l) % l;
      std::vector<Cyclotomic> vals;
      for (size_t c = 0; c < k_; ++c) {
        uint64_t o = G_->cls(c).order, step = e / o;
        uint64_t zo = powmod(z, step, l), inv_o = powmod(o % l, l - 2, l);
        std::vector<int64_t> mult(e, 0);
        int64_t sum = 0;
        for (uint64_t m = 0; m < o; ++m) {
          uint64_t acc = 0;
          for (uint64_t t2 = 0; t2 < o; ++t2)
            acc = (acc + X[G_->power_class(c, (int64_t)t2)] * powmod(zo, (l - 1 - (m * t2) % (l - 1)) % (l - 1), l)) %
                  l;
          acc = acc * inv_o % l;
          if (acc > deg) throw ConstructionError("eigenvalue multiplicity out of range mod " + std::to_string(l));
          mult[m * step] = (int64_t)acc;
          sum += (int64_t)acc;
        }
        if (sum != (int64_t)deg) throw ConstructionError("eigenvalue multiplicities do not add up to the degree");
        vals.push_back(Cyclotomic::from_exponents((int)e, mult));
      }
      irr.emplace_back(G_, std::move(vals));
    }
    return irr;
  }

 private:
  GroupPtr G_;
  size_t k_;
  std::vector<uint32_t> a_;
};

bool is_trivial(const ClassFunction& f) {
  for (size_t c = 0; c < f.size(); ++c)
    if (f[c] != Cyclotomic::integer(f.conductor(), 1)) return false;
  return true;
}

bool value_less(const ClassFunction& a, const ClassFunction& b) {
  for (size_t c = 0; c < a.size(); ++c) {
    auto x = a[c].coeffs(), y = b[c].coeffs();
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

CharacterTable dixon_schneider(const GroupPtr& G) {
  if (G->order() == 1) return CharacterTable(G, {ClassFunction::trivial(G)});
  const uint64_t e = G->exponent();
  const uint64_t bound = 2 * (uint64_t)std::ceil(std::sqrt((double)G->order())) + 1;
  DixonSchneider ds(G);
  ds.class_matrices();
  std::string last;
  uint64_t l = (bound / e + 1) * e + 1;
  for (int attempt = 0; attempt < 5; l += e) {
    if (!is_prime(l) || G->order() % l == 0) continue;
    if (l >= (uint64_t{1} << 20)) break;
    ++attempt;
    try {
      auto irr = ds.run(l);
      std::sort(irr.begin(), irr.end(), [](const ClassFunction& a, const ClassFunction& b) {
        auto da = a.degree().as_rational().value(), db = b.degree().as_rational().value();
        if (da != db) return da < db;
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        return value_less(a, b);
      });
      CharacterTable T(G, std::move(irr));
      auto v = T.validate();
      if (v.ok()) return T;
      last = v.detail;
    } catch (const ConstructionError& ex) {
      last = ex.what();
    }
  }
  throw ConstructionError("character table of " + G->name() + " failed: " + last);
}

namespace {

std::string cache_file(const GroupSpec& s) {
  return "table_" + kind_name(s.kind) + "_" + std::to_string(s.n) + "_" + std::to_string(s.q) + ".json";
}

}  // namespace

TablePtr character_table(const GroupPtr& G) {
  static std::mutex m;
  static std::map<const MatrixGroup*, std::pair<GroupPtr, TablePtr>> cache;
  {
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(G.get());
    if (it != cache.end()) return it->second.second;
  }
  TablePtr T;
  const char* dir = std::getenv("WST_CACHE_DIR");
  std::filesystem::path path;
  if (dir && *dir && G->spec()) {
    path = std::filesystem::path(dir) / cache_file(*G->spec());
    std::ifstream in(path);
    if (in) {
      try {
        auto t = std::make_shared<CharacterTable>(CharacterTable::from_json(G, nlohmann::json::parse(in)));
        if (t->validate().ok()) T = t;
      } catch (const std::exception&) {
        T = nullptr;  // unreadable or stale cache entry: recompute
      }
    }
  }
  if (!T) {
    T = std::make_shared<CharacterTable>(dixon_schneider(G));
    if (!path.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
      auto tmp = path;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        out << T->to_json().dump();
      }
      std::filesystem::rename(tmp, path, ec);
    }
  }
  std::lock_guard<std::mutex> lk(m);
  return cache.emplace(G.get(), std::pair{G, T}).first->second.second;
}

bool Decomposition::is_character() const {
  for (auto m : mult)
    if (m < 0) return false;
  return true;
}

Decomposition decompose(const CharacterTable& T, const ClassFunction& f) {
  Decomposition d;
  d.mult = T.decompose(f);
  for (auto m : d.mult) {
    d.constituents += m;
    d.max_mult = std::max(d.max_mult, m);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Standard characters

ClassFunction steinberg(const GroupPtr& G) {
  if (!G->spec()) throw InvalidArgument("Steinberg character needs a classical group");
  static std::mutex m;
  static std::map<const MatrixGroup*, std::pair<GroupPtr, ClassFunction>> cache;
  {
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(G.get());
    if (it != cache.end()) return it->second.second;
  }
  int r = G->spec()->rank();
  ClassFunction st = ClassFunction::constant(G, 0);
  for (uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> dims;
    for (int j = 0; j < r; ++j)
      if (mask >> j & 1) dims.push_back(j + 1);
    auto P = flag_stabilizer(G, dims);
    ClassFunction ind = induce(*P, ClassFunction::trivial(P->group));
    st = (r - (int)dims.size()) % 2 ? st - ind : st + ind;
  }
  std::lock_guard<std::mutex> lk(m);
  cache.emplace(G.get(), std::make_pair(G, st));
  return st;
}

uint32_t additive_exponent(const FieldPtr& F, Elt x) { return F->trace(x); }

}  // namespace wst

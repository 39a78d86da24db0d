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
#include "wst/matgroup.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

namespace wst {

namespace {

uint64_t mix64(uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

uint64_t hash_bytes(const uint8_t* p, size_t n) {
  uint64_t h = 0x9E3779B97F4A7C15ULL ^ n;
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    uint64_t c;
    std::memcpy(&c, p + i, 8);
    h = mix64(h ^ c);
  }
  if (i < n) {
    uint64_t c = 0;
    std::memcpy(&c, p + i, n - i);
    h = mix64(h ^ c);
  }
  return h;
}

constexpr uint32_t kEmpty = 0xFFFFFFFFu;

mpz_class ipow(uint64_t b, uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

void to_bytes(const Matrix& m, uint8_t* out) {
  const auto& a = m.data();
  for (size_t i = 0; i < a.size(); ++i) out[i] = (uint8_t)a[i];
}

}  // namespace

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "gl";
    case GroupKind::Sp: return "sp";
    case GroupKind::GU: return "u";
  }
  return "?";
}

uint32_t GroupSpec::p() const { return prime_power(q).first; }

FieldPtr GroupSpec::field() const {
  auto [pp, k] = prime_power(q);
  return FiniteField::make(pp, kind == GroupKind::GU ? 2 * k : k);
}

FormSpec GroupSpec::form() const {
  auto F = field();
  switch (kind) {
    case GroupKind::GL: return FormSpec::none(F, degree());
    case GroupKind::Sp: return FormSpec::symplectic(standard_symplectic_gram(F, degree()));
    case GroupKind::GU: return FormSpec::hermitian(Matrix::identity(F, degree()), q);
  }
  return {};
}

mpz_class GroupSpec::order() const {
  mpz_class r = p_part();
  switch (kind) {
    case GroupKind::GL:
      for (int i = 1; i <= n; ++i) r *= ipow(q, i) - 1;
      break;
    case GroupKind::Sp:
      for (int i = 1; i <= n; ++i) r *= ipow(q, 2 * i) - 1;
      break;
    case GroupKind::GU:
      for (int i = 1; i <= n; ++i) r *= ipow(q, i) - (i % 2 ? -1 : 1);
      break;
  }
  return r;
}

mpz_class GroupSpec::p_part() const {
  if (kind == GroupKind::Sp) return ipow(q, (uint64_t)n * n);
  return ipow(q, (uint64_t)n * (n - 1) / 2);
}

int GroupSpec::rank() const {
  switch (kind) {
    case GroupKind::GL: return std::max(n - 1, 0);
    case GroupKind::Sp: return n;
    case GroupKind::GU: return n / 2;
  }
  return 0;
}

std::string GroupSpec::name() const {
  std::string k = kind == GroupKind::GL ? "GL" : kind == GroupKind::Sp ? "Sp" : "GU";
  return k + "(" + std::to_string(degree()) + "," + std::to_string(q) + ")";
}

nlohmann::json GroupSpec::to_json() const {
  return {{"kind", kind_name(kind)}, {"n", n}, {"q", q}, {"name", name()}, {"order", order().get_str()}};
}

// ---------------------------------------------------------------------------
// MatrixGroup

MatrixGroup::MatrixGroup(FieldPtr F, int d, std::vector<uint8_t> elems, std::string name,
                         std::optional<GroupSpec> spec)
    : F_(std::move(F)), d_(d), esz_((size_t)d * d), q_(F_->q()), name_(std::move(name)), spec_(spec),
      elems_(std::move(elems)) {
  if (q_ > 256) throw InvalidArgument("matrix groups need a field of order <= 256");
  n_ = esz_ ? elems_.size() / esz_ : 1;
  if (esz_ == 0) n_ = 1;
  build_index();
}

void MatrixGroup::build_index() {
  uint64_t cap = 16;
  while (cap < 2 * n_) cap <<= 1;
  slots_.assign(cap, kEmpty);
  mask_ = cap - 1;
  for (uint32_t i = 0; i < n_; ++i) {
    uint64_t h = hash_bytes(bytes(i), esz_) & mask_;
    while (slots_[h] != kEmpty) {
      if (std::memcmp(bytes(slots_[h]), bytes(i), esz_) == 0)
        throw ConstructionError(name_ + ": duplicate element in table");
      h = (h + 1) & mask_;
    }
    slots_[h] = i;
  }
}

int64_t MatrixGroup::find_bytes(const uint8_t* b) const {
  uint64_t h = hash_bytes(b, esz_) & mask_;
  while (slots_[h] != kEmpty) {
    if (std::memcmp(bytes(slots_[h]), b, esz_) == 0) return slots_[h];
    h = (h + 1) & mask_;
  }
  return -1;
}

int64_t MatrixGroup::find(const Matrix& m) const {
  if (m.rows() != d_ || m.cols() != d_) return -1;
  if (d_ == 0) return 0;
  if (m.field() != F_) throw Mismatch("matrix over " + m.field()->name() + " looked up in " + name_);
  std::vector<uint8_t> b(esz_);
  to_bytes(m, b.data());
  return find_bytes(b.data());
}

Matrix MatrixGroup::element(uint32_t i) const {
  Matrix m(F_, d_, d_);
  const uint8_t* b = bytes(i);
  for (int r = 0; r < d_; ++r)
    for (int c = 0; c < d_; ++c) m(r, c) = b[r * d_ + c];
  return m;
}

void MatrixGroup::multiply_bytes(const uint8_t* a, const uint8_t* b, uint8_t* out) const {
  const uint8_t* at = F_->add_table();
  const uint8_t* mt = F_->mul_table();
  const int d = d_;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      uint32_t acc = 0;
      for (int k = 0; k < d; ++k) {
        uint8_t x = a[i * d + k];
        if (!x) continue;
        acc = at[acc * q_ + mt[x * q_ + b[k * d + j]]];
      }
      out[i * d + j] = (uint8_t)acc;
    }
}

uint32_t MatrixGroup::mul(uint32_t a, uint32_t b) const {
  if (d_ == 0) return 0;
  uint8_t buf[256];
  multiply_bytes(bytes(a), bytes(b), buf);
  int64_t r = find_bytes(buf);
  if (r < 0) throw ConstructionError(name_ + ": product left the group");
  return (uint32_t)r;
}

uint32_t MatrixGroup::power(uint32_t a, int64_t k) const {
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  uint32_t r = 0, base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

uint32_t MatrixGroup::power_class(size_t c, int64_t k) const {
  const auto& pm = power_map_[c];
  int64_t o = (int64_t)pm.size();
  return pm[(size_t)(((k % o) + o) % o)];
}

void MatrixGroup::compute_inverses() {
  inv_.assign(n_, kEmpty);
  inv_[0] = 0;
  if (d_ == 0) return;
  // breadth-first over the generators: (h g)^{-1} = g^{-1} h^{-1}
  std::vector<uint32_t> ginv;
  for (uint32_t g : gens_) {
    int64_t j = find(element(g).inverse());
    if (j < 0) throw ConstructionError(name_ + ": inverse left the group");
    ginv.push_back((uint32_t)j);
  }
  std::vector<uint32_t> queue{0};
  uint8_t buf[256];
  for (size_t h = 0; h < queue.size(); ++h)
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      multiply_bytes(bytes(queue[h]), bytes(gens_[gi]), buf);
      int64_t x = find_bytes(buf);
      if (x < 0) throw ConstructionError(name_ + ": product left the group");
      if (inv_[x] != kEmpty) continue;
      multiply_bytes(bytes(ginv[gi]), bytes(inv_[queue[h]]), buf);
      int64_t y = find_bytes(buf);
      if (y < 0) throw ConstructionError(name_ + ": inverse left the group");
      inv_[x] = (uint32_t)y;
      queue.push_back((uint32_t)x);
    }
  if (queue.size() != n_) throw ConstructionError(name_ + ": generators do not generate");
}

size_t MatrixGroup::closure_size(const std::vector<uint32_t>& gens, bool* escaped) const {
  *escaped = false;
  std::vector<char> seen(n_, 0);
  std::vector<uint32_t> queue{0};
  seen[0] = 1;
  uint8_t buf[256];
  for (size_t h = 0; h < queue.size(); ++h) {
    for (uint32_t g : gens) {
      multiply_bytes(bytes(queue[h]), bytes(g), buf);
      int64_t r = find_bytes(buf);
      if (r < 0) {
        *escaped = true;
        return queue.size();
      }
      if (!seen[r]) {
        seen[r] = 1;
        queue.push_back((uint32_t)r);
      }
    }
  }
  return queue.size();
}

void MatrixGroup::find_generators(uint64_t seed, int max_gens) {
  if (n_ == 1) return;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick(1, (uint32_t)n_ - 1);
  std::vector<uint32_t> gens;
  for (int attempt = 0; attempt < max_gens; ++attempt) {
    gens.push_back(pick(rng));
    if (gens.size() < 2 && n_ > 2) continue;
    bool escaped;
    size_t s = closure_size(gens, &escaped);
    if (escaped) throw ConstructionError(name_ + ": element table is not closed under multiplication");
    if (s == n_) {
      gens_ = gens;
      return;
    }
  }
  throw ConstructionError(name_ + ": could not find a generating set");
}

void MatrixGroup::compute_classes() {
  class_of_.assign(n_, kEmpty);
  std::vector<uint32_t> gens = gens_;
  std::vector<uint32_t> ginv;
  for (uint32_t g : gens) ginv.push_back(inv_[g]);
  struct Raw {
    uint32_t rep;
    uint64_t size;
  };
  std::vector<Raw> raw;
  std::vector<uint32_t> queue;
  uint8_t t1[256], t2[256];
  for (uint32_t x = 0; x < n_; ++x) {
    if (class_of_[x] != kEmpty) continue;
    uint32_t id = (uint32_t)raw.size();
    queue.assign(1, x);
    class_of_[x] = id;
    uint32_t best = x;
    for (size_t h = 0; h < queue.size(); ++h) {
      uint32_t y = queue[h];
      if (std::memcmp(bytes(y), bytes(best), esz_) < 0) best = y;
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        multiply_bytes(bytes(gens[gi]), bytes(y), t1);
        multiply_bytes(t1, bytes(ginv[gi]), t2);
        int64_t z = find_bytes(t2);
        if (z < 0) throw ConstructionError(name_ + ": conjugate left the group");
        if (class_of_[z] == kEmpty) {
          class_of_[z] = id;
          queue.push_back((uint32_t)z);
        }
      }
    }
    raw.push_back({best, queue.size()});
  }
  // element orders of representatives
  std::vector<uint32_t> orders(raw.size());
  for (size_t c = 0; c < raw.size(); ++c) {
    uint32_t o = 1, y = raw[c].rep;
    while (y != 0) {
      y = mul(y, raw[c].rep);
      ++o;
    }
    orders[c] = o;
  }
  std::vector<size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    if (raw[a].size != raw[b].size) return raw[a].size < raw[b].size;
    return std::memcmp(bytes(raw[a].rep), bytes(raw[b].rep), esz_) < 0;
  });
  std::vector<uint32_t> newid(raw.size());
  classes_.clear();
  for (size_t i = 0; i < perm.size(); ++i) {
    newid[perm[i]] = (uint32_t)i;
    classes_.push_back({raw[perm[i]].rep, raw[perm[i]].size, orders[perm[i]]});
  }
  for (auto& c : class_of_) c = newid[c];
  if (classes_[0].rep != 0) throw ConstructionError(name_ + ": identity is not first");

  power_map_.assign(classes_.size(), {});
  exponent_ = 1;
  for (size_t c = 0; c < classes_.size(); ++c) {
    uint32_t o = classes_[c].order, y = 0;
    auto& pm = power_map_[c];
    pm.resize(o);
    for (uint32_t k = 0; k < o; ++k) {
      pm[k] = class_of_[y];
      y = mul(y, classes_[c].rep);
    }
    exponent_ = std::lcm(exponent_, (uint64_t)o);
  }
}

GroupPtr build_group_from_table(FieldPtr F, int d, std::vector<uint8_t> elems, std::string name,
                                std::optional<GroupSpec> spec) {
  std::shared_ptr<MatrixGroup> G(new MatrixGroup(std::move(F), d, std::move(elems), std::move(name), spec));
  if (G->d_ > 0 && G->find(Matrix::identity(G->F_, G->d_)) != 0)
    throw ConstructionError(G->name_ + ": identity must be element 0");
  return G;
}

GroupPtr MatrixGroup::generate(FieldPtr F, int d, const std::vector<Matrix>& gens, std::string name,
                               uint64_t expected_order, uint64_t cap, std::optional<GroupSpec> spec) {
  if (expected_order > cap)
    throw CapExceeded(name + " has order " + std::to_string(expected_order) + " > cap " + std::to_string(cap));
  size_t esz = (size_t)d * d;
  if (esz > 256) throw InvalidArgument("matrix degree too large");
  std::vector<uint8_t> elems(esz, 0);
  for (int i = 0; i < d; ++i) elems[i * d + i] = 1;
  std::vector<uint8_t> gb;
  for (const auto& g : gens) {
    if (g.rows() != d || g.cols() != d || g.field() != F) throw InvalidArgument(name + ": bad generator");
    std::vector<uint8_t> b(esz);
    to_bytes(g, b.data());
    gb.insert(gb.end(), b.begin(), b.end());
  }
  size_t ng = esz ? gb.size() / esz : 0;
  // closure with a growing open-addressing index
  std::vector<uint32_t> slots(1024, kEmpty);
  uint64_t mask = 1023;
  size_t count = 1;
  auto at = [&](size_t i) { return elems.data() + i * esz; };
  auto insert = [&](const uint8_t* b) -> bool {
    uint64_t h = hash_bytes(b, esz) & mask;
    while (slots[h] != kEmpty) {
      if (std::memcmp(at(slots[h]), b, esz) == 0) return false;
      h = (h + 1) & mask;
    }
    slots[h] = (uint32_t)count;
    elems.insert(elems.end(), b, b + esz);
    ++count;
    if (count * 2 > slots.size()) {
      slots.assign(slots.size() * 2, kEmpty);
      mask = slots.size() - 1;
      for (size_t i = 0; i < count; ++i) {
        uint64_t hh = hash_bytes(at(i), esz) & mask;
        while (slots[hh] != kEmpty) hh = (hh + 1) & mask;
        slots[hh] = (uint32_t)i;
      }
    }
    return true;
  };
  if (esz) {
    slots[hash_bytes(at(0), esz) & mask] = 0;
    // a throwaway group object supplies the byte multiplication
    MatrixGroup mulctx(F, d, std::vector<uint8_t>(elems), "tmp", std::nullopt);
    std::vector<uint8_t> buf(esz);
    for (size_t h = 0; h < count; ++h) {
      for (size_t g = 0; g < ng; ++g) {
        mulctx.multiply_bytes(at(h), gb.data() + g * esz, buf.data());
        if (insert(buf.data()) && count > cap)
          throw CapExceeded(name + ": enumeration exceeded cap " + std::to_string(cap));
      }
    }
  }
  if (expected_order && count != expected_order)
    throw ConstructionError(name + ": generated " + std::to_string(count) + " elements, expected " +
                            std::to_string(expected_order));
  auto G = std::const_pointer_cast<MatrixGroup>(build_group_from_table(F, d, std::move(elems), name, spec));
  // a random pair usually generates and keeps the class orbits cheap
  try {
    G->find_generators(0x5eed0000u + G->n_, 4);
  } catch (const ConstructionError&) {
    G->gens_.clear();
  }
  if (G->gens_.size() > ng || G->gens_.empty()) {
    G->gens_.clear();
    for (size_t g = 0; g < ng; ++g) {
      auto i = (uint32_t)G->find_bytes(gb.data() + g * esz);
      if (i != 0 && std::find(G->gens_.begin(), G->gens_.end(), i) == G->gens_.end()) G->gens_.push_back(i);
    }
  }
  G->compute_inverses();
  G->compute_classes();
  return G;
}

GroupPtr MatrixGroup::from_elements(FieldPtr F, int d, std::vector<uint8_t> elems, std::string name) {
  size_t esz = (size_t)d * d;
  if (esz && elems.size() % esz) throw InvalidArgument("element table has wrong size");
  // identity first
  if (esz) {
    std::vector<uint8_t> id(esz, 0);
    for (int i = 0; i < d; ++i) id[i * d + i] = 1;
    size_t n = elems.size() / esz, pos = n;
    for (size_t i = 0; i < n; ++i)
      if (std::memcmp(elems.data() + i * esz, id.data(), esz) == 0) pos = i;
    if (pos == n) throw ConstructionError(name + ": element table lacks the identity");
    std::swap_ranges(elems.begin(), elems.begin() + esz, elems.begin() + pos * esz);
  }
  auto G = std::const_pointer_cast<MatrixGroup>(build_group_from_table(F, d, std::move(elems), name, std::nullopt));
  G->find_generators(0x5eed0000u + G->n_, 64);
  G->compute_inverses();
  G->compute_classes();
  return G;
}

nlohmann::json MatrixGroup::summary_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["field"] = F_->name();
  j["degree"] = d_;
  j["order"] = n_;
  j["num_classes"] = classes_.size();
  j["exponent"] = exponent_;
  auto cl = nlohmann::json::array();
  for (size_t c = 0; c < classes_.size(); ++c)
    cl.push_back({{"order", classes_[c].order}, {"size", classes_[c].size}, {"centralizer", centralizer_order(c)},
                  {"rep", element(classes_[c].rep).to_string()}});
  j["classes"] = cl;
  return j;
}

// ---------------------------------------------------------------------------
// Subgroups

std::shared_ptr<Subgroup> subgroup_from_indices(const GroupPtr& G, std::vector<uint32_t> parent_indices,
                                                std::string description) {
  std::sort(parent_indices.begin(), parent_indices.end());
  parent_indices.erase(std::unique(parent_indices.begin(), parent_indices.end()), parent_indices.end());
  if (G->order() % parent_indices.size())
    throw ConstructionError(description + ": size does not divide the group order");
  std::vector<uint8_t> elems;
  elems.reserve(parent_indices.size() * G->element_bytes());
  for (uint32_t i : parent_indices) elems.insert(elems.end(), G->bytes(i), G->bytes(i) + G->element_bytes());
  auto H = std::make_shared<Subgroup>();
  H->parent = G;
  H->description = description;
  H->group = MatrixGroup::from_elements(G->field(), G->degree(), std::move(elems), description);
  H->to_parent.resize(H->group->order());
  for (uint32_t i = 0; i < H->group->order(); ++i) {
    int64_t j = G->find_bytes(H->group->bytes(i));
    if (j < 0) throw ConstructionError(description + ": element not in parent");
    H->to_parent[i] = (uint32_t)j;
  }
  for (size_t c = 0; c < H->group->num_classes(); ++c)
    H->fusion.push_back(G->class_of(H->to_parent[H->group->cls(c).rep]));
  // fusion must be a class function of H: check every element
  for (uint32_t i = 0; i < H->group->order(); ++i)
    if (G->class_of(H->to_parent[i]) != H->fusion[H->group->class_of(i)])
      throw ConstructionError(description + ": inconsistent class fusion");
  return H;
}

std::shared_ptr<Subgroup> subgroup_by_predicate(const GroupPtr& G, const std::function<bool(const Matrix&)>& pred,
                                                std::string description) {
  std::vector<uint32_t> idx;
  for (uint32_t i = 0; i < G->order(); ++i)
    if (pred(G->element(i))) idx.push_back(i);
  return subgroup_from_indices(G, std::move(idx), std::move(description));
}

void attach_projection(Subgroup& H, std::vector<GroupPtr> factors,
                       std::function<std::vector<Matrix>(const Matrix&)> project) {
  const auto& K = H.group;
  auto locate = [&](const Matrix& g) {
    auto img = project(g);
    if (img.size() != factors.size()) throw ConstructionError(H.description + ": projection arity");
    std::vector<uint32_t> r;
    for (size_t f = 0; f < factors.size(); ++f) {
      int64_t j = factors[f]->find(img[f]);
      if (j < 0) throw ConstructionError(H.description + ": projection leaves " + factors[f]->name());
      r.push_back((uint32_t)j);
    }
    return r;
  };
  H.factor_classes.clear();
  for (size_t c = 0; c < K->num_classes(); ++c) {
    auto r = locate(K->element(K->cls(c).rep));
    std::vector<uint32_t> fc;
    for (size_t f = 0; f < factors.size(); ++f) fc.push_back(factors[f]->class_of(r[f]));
    H.factor_classes.push_back(fc);
  }
  std::mt19937_64 rng(0xfac7 + K->order());
  std::uniform_int_distribution<uint32_t> pick(0, (uint32_t)K->order() - 1);
  for (int t = 0; t < 64; ++t) {
    uint32_t a = pick(rng), b = pick(rng);
    auto ra = locate(K->element(a)), rb = locate(K->element(b)), rab = locate(K->element(K->mul(a, b)));
    for (size_t f = 0; f < factors.size(); ++f)
      if (factors[f]->mul(ra[f], rb[f]) != rab[f])
        throw ConstructionError(H.description + ": projection is not multiplicative");
  }
  H.factors = std::move(factors);
  H.project = std::move(project);
}

// ---------------------------------------------------------------------------
// Classical groups

namespace {

Matrix elementary(const FieldPtr& F, int d, int a, int b, Elt t) {
  Matrix m = Matrix::identity(F, d);
  m(a, b) = F->add(m(a, b), t);
  return m;
}

std::vector<Matrix> gl_generators(const FieldPtr& F, int n) {
  std::vector<Matrix> gens;
  if (n == 0) return gens;
  std::vector<Elt> dg(n, 1);
  dg[0] = F->primitive();
  gens.push_back(Matrix::diag(F, dg));
  for (int i = 0; i + 1 < n; ++i)
    for (uint32_t s = 0; s < F->k(); ++s) {
      gens.push_back(elementary(F, n, i, i + 1, F->exp(s)));
      gens.push_back(elementary(F, n, i + 1, i, F->exp(s)));
    }
  return gens;
}

std::vector<Matrix> sp_generators(const FieldPtr& F, int n2) {
  std::vector<Matrix> gens;
  if (n2 == 0) return gens;
  FormSpec form = FormSpec::symplectic(standard_symplectic_gram(F, n2));
  auto keep = [&](const Matrix& m) {
    if (form_preserved(m, form) && std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(m);
  };
  for (int a = 0; a + 1 < n2; ++a)
    for (auto [r, c] : {std::pair{a, a + 1}, std::pair{a + 1, a}})
      {
        // the torus below scales root elements, so t = 1 suffices
        Elt t = 1;
        int rb = n2 - 1 - c, cb = n2 - 1 - r;
        keep(elementary(F, n2, r, c, t));
        for (Elt u : {t, F->neg(t)}) {
          if (rb == r && cb == c) continue;
          Matrix m = elementary(F, n2, r, c, t);
          m(rb, cb) = F->add(m(rb, cb), u);
          keep(m);
        }
      }
  if (F->q() > 2)
    for (int i = 0; i < n2 / 2; ++i) {
      std::vector<Elt> dg(n2, 1);
      dg[i] = F->primitive();
      dg[n2 - 1 - i] = F->inv(F->primitive());
      keep(Matrix::diag(F, dg));
    }
  return gens;
}

// closure of 2x2 matrices, used only for the tiny unitary group GU(2,q)
size_t small_closure(const std::vector<Matrix>& gens, const FieldPtr& F) {
  std::set<Matrix> seen{Matrix::identity(F, 2)};
  std::vector<Matrix> queue{Matrix::identity(F, 2)};
  for (size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : gens) {
      Matrix m = queue[h] * g;
      if (seen.insert(m).second) queue.push_back(m);
    }
  return seen.size();
}

std::vector<Matrix> gu_generators(const FieldPtr& F, int d, uint32_t q) {
  std::vector<Matrix> gens;
  if (d == 0) return gens;
  Elt alpha = F->exp(q - 1);  // order q + 1
  std::vector<Elt> dg(d, 1);
  dg[0] = alpha;
  gens.push_back(Matrix::diag(F, dg));
  if (d == 1) return gens;
  FormSpec form = FormSpec::hermitian(Matrix::identity(F, 2), q);
  std::vector<Matrix> u2;
  uint32_t Q = F->q();
  for (uint32_t code = 0; code < Q * Q * Q * Q; ++code) {
    Matrix m(F, 2, 2, {code % Q, (code / Q) % Q, (code / Q / Q) % Q, code / Q / Q / Q});
    if (form_preserved(m, form)) u2.push_back(m);
  }
  size_t full = u2.size();
  std::vector<Matrix> small;
  for (const auto& m : u2) {
    if (m.is_identity()) continue;
    auto trial = small;
    trial.push_back(m);
    if (small_closure(trial, F) > small_closure(small, F)) small = trial;
    if (small_closure(small, F) == full) break;
  }
  for (const auto& m : small) {
    Matrix e = Matrix::identity(F, d);
    e.set_block(0, 0, m);
    gens.push_back(e);
  }
  for (int i = 1; i + 1 < d; ++i) {
    Matrix pmat = Matrix::identity(F, d);
    pmat(i, i) = pmat(i + 1, i + 1) = 0;
    pmat(i, i + 1) = pmat(i + 1, i) = 1;
    gens.push_back(pmat);
  }
  return gens;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<GroupSpec, GroupPtr>& group_cache() {
  static std::map<GroupSpec, GroupPtr> cache;
  return cache;
}

}  // namespace

GroupPtr classical_group(const GroupSpec& spec, uint64_t cap) {
  if (spec.n < 0) throw InvalidArgument("negative dimension");
  mpz_class ord = spec.order();
  if (ord > mpz_class(std::to_string(cap)))
    throw CapExceeded(spec.name() + " has order " + ord.get_str() + ", above the cap " + std::to_string(cap));
  {
    std::lock_guard<std::mutex> lk(cache_mutex());
    auto it = group_cache().find(spec);
    if (it != group_cache().end()) return it->second;
  }
  auto F = spec.field();
  if (F->q() > 256) throw InvalidArgument(spec.name() + ": field too large for enumeration");
  std::vector<Matrix> gens;
  switch (spec.kind) {
    case GroupKind::GL: gens = gl_generators(F, spec.n); break;
    case GroupKind::Sp: gens = sp_generators(F, 2 * spec.n); break;
    case GroupKind::GU: gens = gu_generators(F, spec.n, spec.q); break;
  }
  FormSpec form = spec.form();
  for (const auto& g : gens)
    if (!form_preserved(g, form)) throw ConstructionError(spec.name() + ": generator does not preserve the form");
  GroupPtr G;
  if (spec.kind == GroupKind::GU && spec.n >= 3) {
    // monomial matrices and GU(2,q) blocks need not generate; top up with
    // unitary transvections and quasi-reflections I + a v σ(v)^T
    G = MatrixGroup::generate(F, spec.degree(), gens, spec.name(), 0, cap, spec);
    int d = spec.degree();
    uint32_t Q = F->q();
    uint64_t nv = 1;
    for (int i = 0; i < d; ++i) nv *= Q;
    for (uint64_t code = 1; code < nv && G->order() != ord.get_ui(); ++code) {
      std::vector<Elt> v(d);
      for (int i = 0, c = (int)code; i < d; ++i, c /= (int)Q) v[i] = (Elt)(c % Q);
      for (Elt a = 1; a < Q; ++a) {
        Matrix t = Matrix::identity(F, d);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) t(r, c) = F->add(t(r, c), F->mul(a, F->mul(v[r], F->pow(v[c], spec.q))));
        if (!form_preserved(t, form) || G->find(t) >= 0) continue;
        gens.push_back(t);
        G = MatrixGroup::generate(F, d, gens, spec.name(), 0, cap, spec);
        break;
      }
    }
    if (G->order() != ord.get_ui())
      throw ConstructionError(spec.name() + ": generated " + std::to_string(G->order()) + " elements, expected " +
                              ord.get_str());
  } else {
    G = MatrixGroup::generate(F, spec.degree(), gens, spec.name(), ord.get_ui(), cap, spec);
  }
  std::lock_guard<std::mutex> lk(cache_mutex());
  return group_cache().emplace(spec, G).first->second;
}

GroupPtr classical_group(GroupKind kind, int n, uint32_t q, uint64_t cap) {
  return classical_group(GroupSpec{kind, n, q}, cap);
}

// ---------------------------------------------------------------------------
// Adapted coordinates and standard subgroups

namespace {

struct Adapter {
  Matrix A, Ainv;
};

const Adapter& adapter(int d, uint32_t q) {
  static std::mutex m;
  static std::map<std::pair<int, uint32_t>, Adapter> cache;
  std::lock_guard<std::mutex> lk(m);
  auto key = std::pair{d, q};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto [p, k] = prime_power(q);
  auto F = FiniteField::make(p, 2 * k);
  Matrix A = d <= 1 ? Matrix::identity(F, d) : unitary_hyperbolic_basis(Matrix::identity(F, d), q);
  return cache.emplace(key, Adapter{A, d == 0 ? A : A.inverse()}).first->second;
}

const GroupSpec& require_spec(const GroupPtr& G) {
  if (!G->spec()) throw InvalidArgument(G->name() + " is not a classical group");
  return *G->spec();
}

// g preserves <e_1..e_j> in adapted coordinates
bool preserves_prefix(const Matrix& h, int j) {
  for (int r = j; r < h.rows(); ++r)
    for (int c = 0; c < j; ++c)
      if (h(r, c)) return false;
  return true;
}

// middle block of adapted coordinates, mapped back to the standard model of
// the smaller group
Matrix middle_block(const GroupSpec& spec, const Matrix& h, int m) {
  int d = spec.degree();
  if (spec.kind == GroupKind::GL) return h.block(m, m, d - m, d - m);
  Matrix mid = h.block(m, m, d - 2 * m, d - 2 * m);
  if (spec.kind == GroupKind::Sp) return mid;
  const auto& ad = adapter(d - 2 * m, spec.q);
  return ad.A * mid * ad.Ainv;
}

}  // namespace

Matrix unitary_basis_adapter(int d, uint32_t q) { return adapter(d, q).A; }

Matrix adapted(const GroupSpec& spec, const Matrix& g) {
  if (spec.kind != GroupKind::GU) return g;
  const auto& ad = adapter(spec.degree(), spec.q);
  return ad.Ainv * g * ad.A;
}

std::shared_ptr<Subgroup> flag_stabilizer(const GroupPtr& G, const std::vector<int>& dims) {
  const auto& spec = require_spec(G);
  std::string desc = "stabilizer of flag {";
  for (size_t i = 0; i < dims.size(); ++i) desc += (i ? "," : "") + std::to_string(dims[i]);
  desc += "} in " + G->name();
  return subgroup_by_predicate(
      G,
      [&](const Matrix& g) {
        Matrix h = adapted(spec, g);
        for (int j : dims)
          if (!preserves_prefix(h, j)) return false;
        return true;
      },
      desc);
}

std::shared_ptr<Subgroup> parabolic(const GroupPtr& G, int m) {
  const GroupSpec spec = require_spec(G);
  int lim = spec.kind == GroupKind::GL ? spec.n : spec.rank();
  if (m < 0 || m > lim) throw InvalidArgument("parabolic index out of range");
  auto P = flag_stabilizer(G, {m});
  P->description = "P_" + std::to_string(m) + " in " + G->name();
  GroupPtr L1 = classical_group(GroupKind::GL, m, spec.kind == GroupKind::GU ? spec.q * spec.q : spec.q);
  GroupSpec rest = spec;
  rest.n = spec.kind == GroupKind::GU ? spec.n - 2 * m : spec.n - m;
  GroupPtr L2 = classical_group(rest);
  attach_projection(*P, {L1, L2}, [spec, m](const Matrix& g) {
    Matrix h = adapted(spec, g);
    return std::vector<Matrix>{h.block(0, 0, m, m), middle_block(spec, h, m)};
  });
  return P;
}

std::shared_ptr<Subgroup> affine_subgroup_gl(const GroupPtr& G) {
  const GroupSpec spec = require_spec(G);
  if (spec.kind != GroupKind::GL || spec.n < 1) throw InvalidArgument("affine subgroup needs GL(n,q), n >= 1");
  int n = spec.n;
  auto Q = subgroup_by_predicate(
      G,
      [n](const Matrix& g) {
        for (int r = 0; r < n; ++r)
          if (g(r, 0) != (r == 0 ? 1u : 0u)) return false;
        return true;
      },
      "Q_" + std::to_string(n - 1) + " in " + G->name());
  GroupPtr L = classical_group(GroupKind::GL, n - 1, spec.q);
  attach_projection(*Q, {L}, [n](const Matrix& g) { return std::vector<Matrix>{g.block(1, 1, n - 1, n - 1)}; });
  return Q;
}

std::shared_ptr<Subgroup> unitriangular_gl(const GroupPtr& G) {
  const GroupSpec spec = require_spec(G);
  if (spec.kind != GroupKind::GL) throw InvalidArgument("unitriangular subgroup needs GL(n,q)");
  return subgroup_by_predicate(
      G,
      [](const Matrix& g) {
        for (int r = 0; r < g.rows(); ++r)
          for (int c = 0; c <= r; ++c)
            if (g(r, c) != (r == c ? 1u : 0u)) return false;
        return true;
      },
      "U in " + G->name());
}

std::shared_ptr<Subgroup> isotropic_vector_stabilizer(const GroupPtr& G) {
  const GroupSpec spec = require_spec(G);
  if (spec.kind == GroupKind::GL || spec.rank() < 1)
    throw InvalidArgument("isotropic vector stabilizer needs Sp or GU with an isotropic vector");
  auto P = subgroup_by_predicate(
      G,
      [&](const Matrix& g) {
        Matrix h = adapted(spec, g);
        for (int r = 0; r < h.rows(); ++r)
          if (h(r, 0) != (r == 0 ? 1u : 0u)) return false;
        return true;
      },
      "stabilizer of an isotropic vector in " + G->name());
  GroupSpec rest = spec;
  rest.n = spec.kind == GroupKind::GU ? spec.n - 2 : spec.n - 1;
  attach_projection(*P, {classical_group(rest)}, [spec](const Matrix& g) {
    return std::vector<Matrix>{middle_block(spec, adapted(spec, g), 1)};
  });
  return P;
}

std::shared_ptr<Subgroup> anisotropic_vector_stabilizer(const GroupPtr& G) {
  const GroupSpec spec = require_spec(G);
  if (spec.kind != GroupKind::GU || spec.n < 1) throw InvalidArgument("anisotropic vector stabilizer needs GU");
  int d = spec.n;
  auto H = subgroup_by_predicate(
      G,
      [d](const Matrix& g) {
        for (int r = 0; r < d; ++r)
          if (g(r, d - 1) != (r == d - 1 ? 1u : 0u)) return false;
        return true;
      },
      "stabilizer of an anisotropic vector in " + G->name());
  attach_projection(*H, {classical_group(GroupKind::GU, d - 1, spec.q)},
                    [d](const Matrix& g) { return std::vector<Matrix>{g.block(0, 0, d - 1, d - 1)}; });
  return H;
}

std::shared_ptr<Subgroup> anisotropic_line_stabilizer(const GroupPtr& G) {
  const GroupSpec spec = require_spec(G);
  if (spec.kind != GroupKind::GU || spec.n < 1) throw InvalidArgument("anisotropic line stabilizer needs GU");
  int d = spec.n;
  auto H = subgroup_by_predicate(
      G,
      [d](const Matrix& g) {
        for (int r = 0; r + 1 < d; ++r)
          if (g(r, d - 1)) return false;
        return true;
      },
      "stabilizer of an anisotropic line in " + G->name());
  attach_projection(*H, {classical_group(GroupKind::GU, d - 1, spec.q), classical_group(GroupKind::GU, 1, spec.q)},
                    [d](const Matrix& g) {
                      return std::vector<Matrix>{g.block(0, 0, d - 1, d - 1), g.block(d - 1, d - 1, 1, 1)};
                    });
  return H;
}

}  // namespace wst

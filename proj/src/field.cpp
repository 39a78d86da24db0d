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
#include "wst/field.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace wst {

namespace {

// Conway polynomials, constant coefficient first.
const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>& conway_table() {
  static const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> t = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
  };
  return t;
}

// Dense polynomials over GF(p) with small p, constant term first.
using IPoly = std::vector<int64_t>;

void trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int64_t inv_mod(int64_t a, int64_t p) {
  int64_t r = 1, b = ((a % p) + p) % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

IPoly pmod(IPoly a, const IPoly& m, int64_t p) {
  trim(a);
  const size_t dm = m.size() - 1;
  const int64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    int64_t c = a.back() * lead_inv % p;
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

IPoly pmulmod(const IPoly& a, const IPoly& b, const IPoly& m, int64_t p) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(r, m, p);
}

IPoly pgcd(IPoly a, IPoly b, int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IPoly ppowmod(IPoly base, uint64_t e, const IPoly& m, int64_t p) {
  IPoly r{1};
  base = pmod(base, m, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

// Ben-Or style check: no factor of degree <= k/2.
bool irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  const size_t k = f.size() - 1;
  if (k == 1) return true;
  IPoly m(f.begin(), f.end());
  IPoly xp{0, 1};
  for (size_t i = 1; i <= k / 2; ++i) {
    xp = ppowmod(xp, p, m, p);
    IPoly d = xp;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = ((d[1] - 1) % (int64_t)p + p) % p;
    IPoly g = pgcd(m, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<uint32_t> least_irreducible(uint32_t p, uint32_t k) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < k; ++i) count *= p;
  for (uint64_t code = 0; code < count; ++code) {
    std::vector<uint32_t> f(k + 1, 0);
    uint64_t c = code;
    for (uint32_t i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (k > 1 && f[0] == 0) continue;
    if (irreducible(f, p)) return f;
  }
  throw ConstructionError("no irreducible polynomial found");
}

std::vector<uint32_t> prime_factors(uint64_t n) {
  std::vector<uint32_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back((uint32_t)d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back((uint32_t)n);
  return out;
}

std::mutex g_field_mu;
std::map<std::pair<uint32_t, uint32_t>, FieldPtr> g_fields;
uint32_t g_next_id = 1;

std::mutex g_embed_mu;
std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const SubfieldEmbedding>> g_embeds;

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<uint32_t, uint32_t> prime_power(uint64_t q) {
  if (q < 2) throw InvalidArgument("not a prime power: " + std::to_string(q));
  uint64_t p = 2;
  while (q % p != 0) ++p;
  uint32_t k = 0;
  uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
  return {(uint32_t)p, k};
}

FieldPtr FiniteField::make(uint32_t p, uint32_t k, uint64_t bound) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic is not prime: " + std::to_string(p));
  if (k < 1) throw InvalidArgument("field degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > bound) throw InvalidArgument("field order exceeds bound " + std::to_string(bound));
  }
  std::lock_guard<std::mutex> lock(g_field_mu);
  auto it = g_fields.find({p, k});
  if (it != g_fields.end()) return it->second;
  std::vector<uint32_t> mod;
  bool conway = false;
  auto ct = conway_table().find({p, k});
  if (ct != conway_table().end()) {
    mod = ct->second;
    conway = true;
  } else {
    mod = least_irreducible(p, k);
  }
  auto f = std::make_shared<FiniteField>(p, k, mod, conway, g_next_id++);
  g_fields[{p, k}] = f;
  return f;
}

FiniteField::FiniteField(uint32_t p, uint32_t k, std::vector<uint32_t> modulus, bool conway, uint32_t id)
    : p_(p), k_(k), id_(id), modulus_(std::move(modulus)), conway_(conway) {
  q_ = 1;
  pow_p_.push_back(1);
  for (uint32_t i = 0; i < k; ++i) {
    q_ *= p;
    pow_p_.push_back(q_);
  }
  if (modulus_.size() != k + 1 || modulus_.back() != 1)
    throw ConstructionError("modulus must be monic of degree k");
  if (!irreducible(modulus_, p)) throw ConstructionError("modulus is reducible for " + name());

  neg_.resize(q_);
  for (Elt a = 0; a < q_; ++a) {
    auto c = coeffs(a);
    for (auto& v : c) v = (p - v) % p;
    neg_[a] = from_coeffs(c);
  }

  // Multiplication of a code by a polynomial g, reduced mod the modulus.
  auto times = [&](Elt a, const std::vector<uint32_t>& g) {
    IPoly ap(k, 0);
    auto ca = coeffs(a);
    for (uint32_t i = 0; i < k; ++i) ap[i] = ca[i];
    IPoly gp(g.begin(), g.end());
    IPoly m(modulus_.begin(), modulus_.end());
    IPoly r = pmulmod(ap, gp, m, p);
    std::vector<uint32_t> rc(k, 0);
    for (size_t i = 0; i < r.size(); ++i) rc[i] = (uint32_t)r[i];
    return from_coeffs(rc);
  };

  // Candidate primitive elements: x first (always primitive for Conway
  // moduli), then codes in increasing order.
  const uint32_t n = q_ - 1;
  auto pf = prime_factors(n);
  auto is_primitive = [&](const std::vector<uint32_t>& g) {
    IPoly gp(g.begin(), g.end());
    IPoly m(modulus_.begin(), modulus_.end());
    for (uint32_t r : pf) {
      IPoly t = ppowmod(gp, n / r, m, p);
      trim(t);
      if (t.size() == 1 && t[0] == 1) return false;
    }
    IPoly t = ppowmod(gp, n, m, p);
    trim(t);
    return t.size() == 1 && t[0] == 1;
  };
  std::vector<uint32_t> gen;
  if (k == 1) {
    for (uint32_t g = 1; g < p; ++g) {
      if (is_primitive({g})) {
        gen = {g};
        break;
      }
    }
  } else {
    std::vector<uint32_t> xv{0, 1};
    if (is_primitive(xv)) {
      gen = xv;
    } else if (conway_) {
      throw ConstructionError("Conway table entry is not primitive for " + name());
    } else {
      for (Elt a = 2; a < q_ && gen.empty(); ++a) {
        auto c = coeffs(a);
        if (is_primitive(c)) gen = c;
      }
    }
  }
  if (gen.empty()) throw ConstructionError("no primitive element in " + name());

  exp_.assign(2 * n + 1, 0);
  log_.assign(q_, 0);
  Elt cur = 1;
  for (uint32_t e = 0; e < n; ++e) {
    if (e > 0 && cur == 1) throw ConstructionError("primitive element has small order");
    exp_[e] = cur;
    log_[cur] = e;
    cur = times(cur, gen);
  }
  if (cur != 1) throw ConstructionError("primitive element order mismatch");
  for (uint32_t e = n; e <= 2 * n; ++e) exp_[e] = exp_[e - n];

  if (q_ <= 256) {
    add_store_.resize((size_t)q_ * q_);
    mul_store_.resize((size_t)q_ * q_);
    for (Elt a = 0; a < q_; ++a)
      for (Elt b = 0; b < q_; ++b) {
        add_store_[a * q_ + b] = (uint8_t)add_slow(a, b);
        mul_store_[a * q_ + b] = (a == 0 || b == 0) ? 0 : (uint8_t)exp_[log_[a] + log_[b]];
      }
    add_tab_ = add_store_.data();
    mul_tab_ = mul_store_.data();
  }
}

Elt FiniteField::x() const { return k_ == 1 ? modulus_[0] == 0 ? 0 : (p_ - modulus_[0]) % p_ : p_; }

Elt FiniteField::add_slow(Elt a, Elt b) const {
  if (p_ == 2) return a ^ b;
  Elt r = 0;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t s = (a % p_ + b % p_) % p_;
    r += s * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw Singular("inverse of zero in " + name());
  uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

Elt FiniteField::pow(Elt a, int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw Singular("negative power of zero");
    return 0;
  }
  int64_t n = q_ - 1;
  int64_t l = ((int64_t)log_[a] * (((e % n) + n) % n)) % n;
  return exp_[l];
}

Elt FiniteField::frobenius(Elt a, int i) const {
  if (a == 0) return 0;
  int64_t n = q_ - 1;
  int64_t e = 1;
  int r = ((i % (int)k_) + (int)k_) % (int)k_;
  for (int j = 0; j < r; ++j) e = e * p_ % n;
  if (n == 1) return a;
  return exp_[(int64_t)log_[a] * e % n];
}

uint32_t FiniteField::log(Elt a) const {
  if (a == 0) throw Singular("log of zero");
  return log_[a];
}

Elt FiniteField::exp(int64_t e) const {
  int64_t n = q_ - 1;
  return exp_[((e % n) + n) % n];
}

uint32_t FiniteField::mult_order(Elt a) const {
  if (a == 0) throw Singular("order of zero");
  uint32_t n = q_ - 1;
  return n / std::gcd(n, log_[a]);
}

Elt FiniteField::from_int(int64_t v) const { return (Elt)(((v % (int64_t)p_) + p_) % p_); }

uint32_t FiniteField::trace(Elt a) const {
  Elt s = 0;
  for (uint32_t i = 0; i < k_; ++i) s = add(s, frobenius(a, (int)i));
  if (s >= p_) throw ConstructionError("trace left the prime field");
  return s;
}

std::vector<uint32_t> FiniteField::coeffs(Elt a) const {
  std::vector<uint32_t> c(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elt FiniteField::from_coeffs(const std::vector<uint32_t>& c) const {
  Elt r = 0;
  for (uint32_t i = 0; i < k_ && i < c.size(); ++i) r += (c[i] % p_) * pow_p_[i];
  return r;
}

std::string FiniteField::to_string(Elt a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::string s;
  auto c = coeffs(a);
  for (int i = (int)k_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += (i == 1) ? "a" : "a^" + std::to_string(i);
  }
  return s;
}

std::string FiniteField::name() const { return "GF(" + std::to_string(q_) + ")"; }

SubfieldEmbedding::SubfieldEmbedding(FieldPtr sub, FieldPtr big) : sub_(std::move(sub)), big_(std::move(big)) {
  if (sub_->p() != big_->p() || big_->k() % sub_->k() != 0)
    throw InvalidArgument("no embedding " + sub_->name() + " -> " + big_->name());
  const auto& m = sub_->modulus();
  auto eval = [&](Elt r) {
    Elt acc = 0;
    for (int i = (int)m.size() - 1; i >= 0; --i) acc = big_->add(big_->mul(acc, r), big_->from_int(m[i]));
    return acc;
  };
  std::optional<Elt> root;
  for (Elt r = 0; r < big_->q(); ++r) {
    if (eval(r) == 0) {
      root = r;
      break;
    }
  }
  if (!root) throw ConstructionError("subfield modulus has no root in " + big_->name());
  image_.resize(sub_->q());
  for (Elt a = 0; a < sub_->q(); ++a) {
    auto c = sub_->coeffs(a);
    Elt acc = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) acc = big_->add(big_->mul(acc, *root), big_->from_int(c[i]));
    image_[a] = acc;
  }
}

std::optional<Elt> SubfieldEmbedding::preimage(Elt b) const {
  for (Elt a = 0; a < image_.size(); ++a)
    if (image_[a] == b) return a;
  return std::nullopt;
}

std::shared_ptr<const SubfieldEmbedding> subfield_embed(const FieldPtr& sub, const FieldPtr& big) {
  std::lock_guard<std::mutex> lock(g_embed_mu);
  auto key = std::make_pair(sub->id(), big->id());
  auto it = g_embeds.find(key);
  if (it != g_embeds.end()) return it->second;
  auto e = std::make_shared<const SubfieldEmbedding>(sub, big);
  g_embeds[key] = e;
  return e;
}

}  // namespace wst

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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wst/errors.hpp"

namespace wst {

/// Field element code: the coefficient vector (c_0, ..., c_{k-1}) of the
/// residue class c_0 + c_1 x + ... mod the modulus, read as the base-p
/// integer c_0 + c_1 p + c_2 p^2 + ...
using Elt = uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(p^k). Instances are interned: make(p, k) always returns the same
/// object, so pointer equality is field equality.
class FiniteField {
 public:
  static constexpr uint64_t kDefaultBound = uint64_t{1} << 20;

  static FieldPtr make(uint32_t p, uint32_t k, uint64_t bound = kDefaultBound);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  uint32_t id() const { return id_; }
  /// Monic modulus, constant coefficient first, length k + 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  bool conway() const { return conway_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  /// Residue class of x (equals the integer p for k > 1).
  Elt x() const;
  Elt primitive() const { return exp_[1]; }

  Elt add(Elt a, Elt b) const {
    if (add_tab_) return add_tab_[a * q_ + b];
    return add_slow(a, b);
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const {
    if (p_ == 2) return a;
    return neg_[a];
  }
  Elt mul(Elt a, Elt b) const {
    if (mul_tab_) return mul_tab_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, int64_t e) const;
  /// a ↦ a^{p^i}.
  Elt frobenius(Elt a, int i) const;

  /// Discrete log base primitive(); a must be nonzero.
  uint32_t log(Elt a) const;
  Elt exp(int64_t e) const;
  uint32_t mult_order(Elt a) const;

  /// Image of an integer in the prime field.
  Elt from_int(int64_t v) const;
  bool in_prime_field(Elt a) const { return a < p_; }
  /// Absolute trace to GF(p), returned as an integer in [0, p).
  uint32_t trace(Elt a) const;

  std::vector<uint32_t> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<uint32_t>& c) const;

  /// Byte tables of size q*q for q <= 256, nullptr otherwise.
  const uint8_t* add_table() const { return add_tab_; }
  const uint8_t* mul_table() const { return mul_tab_; }

  std::string to_string(Elt a) const;
  std::string name() const;

  FiniteField(uint32_t p, uint32_t k, std::vector<uint32_t> modulus, bool conway, uint32_t id);

 private:
  Elt add_slow(Elt a, Elt b) const;

  uint32_t p_, k_, q_, id_;
  std::vector<uint32_t> modulus_;
  bool conway_;
  std::vector<uint32_t> pow_p_;
  std::vector<Elt> exp_;       // length 2(q-1)+1 to avoid modular reduction
  std::vector<uint32_t> log_;  // log_[0] unused
  std::vector<Elt> neg_;
  std::vector<uint8_t> add_store_, mul_store_;
  const uint8_t* add_tab_ = nullptr;
  const uint8_t* mul_tab_ = nullptr;
};

/// Value type pairing a field with an element code.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Elt v) : f_(std::move(f)), v_(v) {}
  const FieldPtr& field() const { return f_; }
  Elt code() const { return v_; }

  FieldElement operator+(const FieldElement& o) const { return {f_, f_->add(v_, same(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {f_, f_->sub(v_, same(o))}; }
  FieldElement operator*(const FieldElement& o) const { return {f_, f_->mul(v_, same(o))}; }
  FieldElement operator/(const FieldElement& o) const { return {f_, f_->div(v_, same(o))}; }
  FieldElement operator-() const { return {f_, f_->neg(v_)}; }
  FieldElement inv() const { return {f_, f_->inv(v_)}; }
  FieldElement pow(int64_t e) const { return {f_, f_->pow(v_, e)}; }
  FieldElement frobenius(int i) const { return {f_, f_->frobenius(v_, i)}; }
  bool operator==(const FieldElement& o) const { return v_ == same(o); }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  Elt same(const FieldElement& o) const {
    if (o.f_ != f_) throw Mismatch("field mismatch: " + f_->name() + " vs " + o.f_->name());
    return o.v_;
  }
  FieldPtr f_;
  Elt v_;
};

/// Ring embedding GF(p^a) -> GF(p^b), a | b, sending the class of x in the
/// subfield to the least-code root of the subfield modulus in the big field.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr sub, FieldPtr big);
  const FieldPtr& sub() const { return sub_; }
  const FieldPtr& big() const { return big_; }
  Elt operator()(Elt a) const { return image_[a]; }
  std::optional<Elt> preimage(Elt b) const;
  bool in_image(Elt b) const { return preimage(b).has_value(); }

 private:
  FieldPtr sub_, big_;
  std::vector<Elt> image_;
};

std::shared_ptr<const SubfieldEmbedding> subfield_embed(const FieldPtr& sub, const FieldPtr& big);

bool is_prime(uint64_t n);
/// Returns (p, k) with q = p^k, or throws InvalidArgument.
std::pair<uint32_t, uint32_t> prime_power(uint64_t q);

}  // namespace wst

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

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "wst/cyclotomic.hpp"
#include "wst/matgroup.hpp"

namespace wst {

/// A class function on an enumerated group, one cyclotomic value per class
/// (canonical class order). All values share one conductor; binary
/// operations lift both sides to the lcm of the conductors.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr G, std::vector<Cyclotomic> values);
  static ClassFunction constant(GroupPtr G, int64_t v);
  static ClassFunction trivial(GroupPtr G) { return constant(std::move(G), 1); }
  static ClassFunction regular(GroupPtr G);

  const GroupPtr& group() const { return G_; }
  size_t size() const { return v_.size(); }
  const Cyclotomic& operator[](size_t c) const { return v_[c]; }
  const std::vector<Cyclotomic>& values() const { return v_; }
  int conductor() const { return N_; }
  const Cyclotomic& degree() const { return v_[0]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction operator-() const;
  ClassFunction& operator+=(const ClassFunction& o) { return *this = *this + o; }
  ClassFunction& operator-=(const ClassFunction& o) { return *this = *this - o; }
  ClassFunction scale(int64_t s) const;
  ClassFunction scale(const mpq_class& s) const;
  ClassFunction conj() const;
  ClassFunction galois(int64_t k) const;
  /// Values lifted to conductor M (N | M).
  ClassFunction embed(int M) const;
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }
  bool is_zero() const;

  nlohmann::json to_json() const;

 private:
  GroupPtr G_;
  std::vector<Cyclotomic> v_;
  int N_ = 1;
};

/// (a, b) = (1/|G|) Σ_g a(g) conj(b(g)).
Cyclotomic inner(const ClassFunction& a, const ClassFunction& b);
/// Inner product known to be rational; throws ConstructionError otherwise.
mpq_class inner_rational(const ClassFunction& a, const ClassFunction& b);

ClassFunction restrict_to(const Subgroup& H, const ClassFunction& f);
ClassFunction induce(const Subgroup& H, const ClassFunction& f);
/// Class function on H from class functions on its projection factors,
/// (f_1 ⊠ ... ⊠ f_r)(π(h)). An empty ClassFunction stands for the trivial one.
ClassFunction inflate(const Subgroup& H, const std::vector<ClassFunction>& per_factor);

/// Irreducible characters of G, sorted by degree (trivial first) then by
/// values; every table is validated by exact row and column orthogonality.
class CharacterTable {
 public:
  struct Validation {
    bool rows = false;
    bool columns = false;
    bool degrees = false;
    std::string detail;
    bool ok() const { return rows && columns && degrees; }
  };

  CharacterTable(GroupPtr G, std::vector<ClassFunction> irr);

  const GroupPtr& group() const { return G_; }
  size_t size() const { return irr_.size(); }
  const ClassFunction& operator[](size_t i) const { return irr_[i]; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  int conductor() const { return N_; }
  int64_t degree(size_t i) const;

  /// Multiplicities of each irreducible in a virtual character; throws
  /// ConstructionError when f is not a Z-combination of irreducibles.
  std::vector<int64_t> decompose(const ClassFunction& f) const;
  Validation validate() const;

  nlohmann::json to_json() const;
  /// Rebuilds a table from to_json output; the class structure must match G.
  static CharacterTable from_json(GroupPtr G, const nlohmann::json& j);

 private:
  GroupPtr G_;
  std::vector<ClassFunction> irr_;
  std::vector<ClassFunction> irr_conj_;
  int N_ = 1;
};
using TablePtr = std::shared_ptr<const CharacterTable>;

/// Dixon–Schneider over GF(ℓ) followed by exact lifting; retries a few
/// primes before giving up with ConstructionError.
CharacterTable dixon_schneider(const GroupPtr& G);
/// Memoized table (keyed by group object). With WST_CACHE_DIR set, tables
/// of classical groups are also read from and written to that directory and
/// revalidated on load.
TablePtr character_table(const GroupPtr& G);

/// Number of constituents counted with multiplicity and whether every
/// multiplicity is at most one.
struct Decomposition {
  std::vector<int64_t> mult;
  int64_t constituents = 0;
  int64_t max_mult = 0;
  bool multiplicity_free() const { return max_mult <= 1; }
  bool is_character() const;
};
Decomposition decompose(const CharacterTable& T, const ClassFunction& f);

/// Σ_{D ⊆ {1..r}} (-1)^{r-|D|} Ind_{P_D} 1 over isotropic coordinate flags.
ClassFunction steinberg(const GroupPtr& G);

/// Additive character ν(x) = ζ_p^{Tr(x)} of a finite field, as an exponent
/// in Z/p.
uint32_t additive_exponent(const FieldPtr& F, Elt x);

}  // namespace wst

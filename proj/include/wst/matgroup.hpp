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

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "wst/matrix.hpp"

namespace wst {

enum class GroupKind { GL, Sp, GU };

std::string kind_name(GroupKind k);

/// GL(n,q), Sp(2n,q) or GU(d,q). `n` is n for GL and Sp, d for GU.
struct GroupSpec {
  GroupKind kind = GroupKind::GL;
  int n = 1;
  uint32_t q = 2;

  int degree() const { return kind == GroupKind::Sp ? 2 * n : n; }
  uint32_t p() const;
  /// GF(q), or GF(q^2) for unitary groups.
  FieldPtr field() const;
  FormSpec form() const;
  mpz_class order() const;
  /// p-part of the order.
  mpz_class p_part() const;
  /// Number of steps in a maximal flag of isotropic subspaces (n-1 for GL).
  int rank() const;
  std::string name() const;
  nlohmann::json to_json() const;
  bool operator==(const GroupSpec& o) const { return kind == o.kind && n == o.n && q == o.q; }
  bool operator<(const GroupSpec& o) const {
    return std::tie(kind, n, q) < std::tie(o.kind, o.n, o.q);
  }
};

class MatrixGroup;
using GroupPtr = std::shared_ptr<const MatrixGroup>;

/// A fully enumerated matrix group over a field of order <= 256, frozen at
/// construction: element table with hash index, inverses, conjugacy classes
/// in canonical order (identity first), element-to-class map, power maps.
class MatrixGroup {
 public:
  struct ClassInfo {
    uint32_t rep;   // element index of the lexicographically least member
    uint64_t size;
    uint32_t order;
  };
  static constexpr uint64_t kDefaultCap = 20000000;

  /// Breadth-first closure of the generators; throws CapExceeded if the
  /// closure outgrows cap, ConstructionError if expected_order (when
  /// nonzero) is not met exactly.
  static GroupPtr generate(FieldPtr F, int d, const std::vector<Matrix>& gens, std::string name,
                           uint64_t expected_order = 0, uint64_t cap = kDefaultCap,
                           std::optional<GroupSpec> spec = std::nullopt);
  /// Group from a flat element table (d*d bytes per element). Closure is
  /// verified by regenerating the set from random members.
  static GroupPtr from_elements(FieldPtr F, int d, std::vector<uint8_t> elems, std::string name);

  const std::string& name() const { return name_; }
  const FieldPtr& field() const { return F_; }
  int degree() const { return d_; }
  const std::optional<GroupSpec>& spec() const { return spec_; }
  uint64_t order() const { return n_; }
  uint32_t characteristic() const { return F_->p(); }

  Matrix element(uint32_t i) const;
  const uint8_t* bytes(uint32_t i) const { return elems_.data() + (size_t)i * esz_; }
  size_t element_bytes() const { return esz_; }
  int64_t find(const Matrix& m) const;
  int64_t find_bytes(const uint8_t* b) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inverse(uint32_t a) const { return inv_[a]; }
  uint32_t power(uint32_t a, int64_t k) const;
  void multiply_bytes(const uint8_t* a, const uint8_t* b, uint8_t* out) const;
  /// Small generating set (element indices).
  const std::vector<uint32_t>& generators() const { return gens_; }

  size_t num_classes() const { return classes_.size(); }
  const ClassInfo& cls(size_t c) const { return classes_[c]; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  uint32_t class_of(uint32_t elem) const { return class_of_[elem]; }
  uint64_t centralizer_order(size_t c) const { return n_ / classes_[c].size; }
  uint32_t power_class(size_t c, int64_t k) const;
  uint32_t inverse_class(size_t c) const { return power_class(c, -1); }
  uint64_t exponent() const { return exponent_; }
  bool p_regular(size_t c) const { return classes_[c].order % characteristic() != 0; }

  nlohmann::json summary_json() const;

 private:
  MatrixGroup(FieldPtr F, int d, std::vector<uint8_t> elems, std::string name, std::optional<GroupSpec> spec);
  void build_index();
  void find_generators(uint64_t seed, int max_gens);
  void compute_inverses();
  void compute_classes();
  size_t closure_size(const std::vector<uint32_t>& gens, bool* escaped) const;

  FieldPtr F_;
  int d_;
  size_t esz_;
  uint32_t q_;
  std::string name_;
  std::optional<GroupSpec> spec_;
  uint64_t n_ = 0;
  std::vector<uint8_t> elems_;
  std::vector<uint32_t> slots_;
  uint64_t mask_ = 0;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> gens_;
  std::vector<ClassInfo> classes_;
  std::vector<uint32_t> class_of_;
  std::vector<std::vector<uint32_t>> power_map_;  // [class][k mod order]
  uint64_t exponent_ = 1;

  friend GroupPtr build_group_from_table(FieldPtr, int, std::vector<uint8_t>, std::string,
                                         std::optional<GroupSpec>);
};

/// A subgroup H of a parent group G with its own class structure and the
/// fusion of H-classes into G-classes. Optionally carries a homomorphism
/// onto a direct product of factor groups (Levi projection, quotient maps).
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;
  std::vector<uint32_t> to_parent;  // own element -> parent element
  std::vector<uint32_t> fusion;     // own class -> parent class
  std::string description;

  std::vector<GroupPtr> factors;
  std::function<std::vector<Matrix>(const Matrix&)> project;
  std::vector<std::vector<uint32_t>> factor_classes;  // [own class][factor] -> factor class

  uint64_t index() const { return parent->order() / group->order(); }
  bool has_projection() const { return !factors.empty(); }
};
using SubgroupPtr = std::shared_ptr<const Subgroup>;

/// Subgroup of the elements satisfying pred (closure is verified).
std::shared_ptr<Subgroup> subgroup_by_predicate(const GroupPtr& G, const std::function<bool(const Matrix&)>& pred,
                                                std::string description);
std::shared_ptr<Subgroup> subgroup_from_indices(const GroupPtr& G, std::vector<uint32_t> parent_indices,
                                                std::string description);
/// Attach a projection homomorphism; every image must lie in the factor
/// groups, and the map is checked multiplicative on random pairs.
void attach_projection(Subgroup& H, std::vector<GroupPtr> factors,
                       std::function<std::vector<Matrix>(const Matrix&)> project);

/// Group-theoretic constructions on the classical groups.
GroupPtr classical_group(const GroupSpec& spec, uint64_t cap = MatrixGroup::kDefaultCap);
GroupPtr classical_group(GroupKind kind, int n, uint32_t q, uint64_t cap = MatrixGroup::kDefaultCap);

/// Isometry A with σ(A)^T A = antidiag(1..1) (identity for d <= 1).
Matrix unitary_basis_adapter(int d, uint32_t q);
/// Coordinates in which isotropic flags are coordinate flags:
/// g for GL and Sp, A^{-1} g A for GU.
Matrix adapted(const GroupSpec& spec, const Matrix& g);

/// Stabilizer of the flag of coordinate subspaces <e_1..e_j>, j in dims
/// (adapted coordinates).
std::shared_ptr<Subgroup> flag_stabilizer(const GroupPtr& G, const std::vector<int>& dims);
/// P_m with its Levi projection onto GL(m, q or q^2) x G_{n-m}.
std::shared_ptr<Subgroup> parabolic(const GroupPtr& G, int m);
/// For GL(n,q): Q_{n-1} = stabilizer of e_1, projected onto GL(n-1,q) by
/// the lower-right block.
std::shared_ptr<Subgroup> affine_subgroup_gl(const GroupPtr& G);
/// Upper unitriangular matrices of GL(n,q).
std::shared_ptr<Subgroup> unitriangular_gl(const GroupPtr& G);
/// Sp/GU: stabilizer P' of the first isotropic basis vector, projected onto
/// L' = G_{n-1} (middle block).
std::shared_ptr<Subgroup> isotropic_vector_stabilizer(const GroupPtr& G);
/// GU: stabilizer of the anisotropic vector e_d (identity Gram), projected
/// onto GU(d-1,q) by the upper-left block.
std::shared_ptr<Subgroup> anisotropic_vector_stabilizer(const GroupPtr& G);
/// GU: stabilizer of the line <e_d>.
std::shared_ptr<Subgroup> anisotropic_line_stabilizer(const GroupPtr& G);

}  // namespace wst

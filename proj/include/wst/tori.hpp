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

#include "json.hpp"
#include "wst/matgroup.hpp"

namespace wst {

/// Conjugacy-class label of a maximal torus. GL: a partition of n (all
/// parts split). Sp(2n): a bipartition (split; nonsplit) of n. GU(d): a
/// partition of d, even parts split, odd parts nonsplit. Parts are kept in
/// non-increasing order.
struct TorusDescriptor {
  GroupKind kind = GroupKind::GL;
  std::vector<int> split;
  std::vector<int> nonsplit;

  /// |T_i| per factor, split factors first: q^m - 1 resp. q^m + 1.
  std::vector<uint64_t> factor_orders(uint32_t q) const;
  uint64_t order(uint32_t q) const;
  /// No summand is an irreducible T-module (no nonsplit parts).
  bool neutral() const { return nonsplit.empty(); }
  std::string label() const;
  bool operator==(const TorusDescriptor& o) const {
    return kind == o.kind && split == o.split && nonsplit == o.nonsplit;
  }
};

std::vector<std::vector<int>> partitions(int n);
std::vector<TorusDescriptor> torus_descriptors(GroupKind kind, int n, uint32_t q);
/// |W(T)^F|: ∏ (2i)^{a_i} a_i! ∏ (2i)^{b_i} b_i! for Sp, ∏ i^{c_i} c_i! otherwise.
uint64_t weyl_f_centralizer_order(const TorusDescriptor& d);

/// Invariant subspace on which a torus factor acts through a known matrix:
/// g * basis = basis * action. Used to recover eigenlines of the ambient
/// algebraic torus even when the finite factor is trivial.
struct ActionBlock {
  Matrix basis;
  Matrix action;
};

struct TorusFactor {
  bool split = true;
  int part = 1;
  uint64_t order = 1;
  Matrix generator;           // ambient matrix, identity off V_i
  std::vector<int> coords;    // V_i is spanned by these coordinate vectors
  std::vector<ActionBlock> blocks;
};

struct Torus {
  TorusDescriptor desc;
  GroupPtr G;
  std::vector<TorusFactor> factors;
  /// Elements in mixed radix over the factors (factor 0 varies fastest),
  /// as element indices of G.
  std::vector<uint32_t> elements;

  uint64_t order() const { return elements.size(); }
  std::vector<uint64_t> exponents(size_t pos) const;
  size_t position(const std::vector<uint64_t>& exps) const;
};

Torus build_torus(const GroupPtr& G, const TorusDescriptor& desc);
std::vector<Torus> build_all_tori(const GroupPtr& G);

struct CheckLine {
  std::string name;
  bool ok;
  std::string detail;
};

/// Conditions on the T-decomposition: orthogonal non-degenerate invariant
/// summands (2.1.1), T the direct product of cyclic maximal tori of the
/// summand isometry groups (2.1.2), factor orders (2.1.3), fixed space,
/// irreducibility of nonsplit factors and the isotropic subspace fixed by
/// split factors.
std::vector<CheckLine> verify_t_decomposition(const Torus& t);

/// |N_G(𝐓)|, 𝐓 the algebraic torus whose fixed points are T: the elements
/// of G permuting its eigenlines over a splitting field.
uint64_t algebraic_normalizer_order(const Torus& t);
/// |N_G(T)| for the finite group T.
uint64_t finite_normalizer_order(const Torus& t);

struct CensusReport {
  bool ok = true;
  nlohmann::json details;
};
CensusReport check_torus_census(const GroupPtr& G, const std::vector<Torus>& tori);

}  // namespace wst

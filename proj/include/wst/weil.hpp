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
#include "wst/chartab.hpp"
#include "wst/tori.hpp"

namespace wst {

/// GL(n,q): number of fixed vectors q^{dim Ker(g-1)}; with twist (q odd)
/// multiplied by the order-2 linear character det^{(q-1)/2}.
ClassFunction weil_gl(const GroupPtr& G, bool twist);

/// Per-element values of ω_T, factor by factor: ρ + 1⁻ on split factors,
/// ρ - 1⁻ on nonsplit ones. With char2_convention, 1⁻ is read as the
/// trivial character (as it must be for factors of odd order).
std::vector<int64_t> weil_on_torus(const Torus& t, bool char2_convention);
/// Values of one factor's contribution on its cyclic group (by exponent).
std::vector<int64_t> weil_on_torus_factor(const TorusFactor& f, bool char2_convention);
/// Exponent of 1⁻ at t_i^e: e mod 2 if |T_i| is even and the convention
/// keeps 1⁻, else 0.
int sign_exponent(const TorusFactor& f, uint64_t e, bool char2_convention);

enum class WeilSource { TorusAssembled, FixedVectors, ZeroExtension, Unused };
std::string source_name(WeilSource s);

struct WeilConflict {
  size_t cls;
  std::string torus;
  size_t position;
  int64_t first, other;
};

struct WeilData {
  GroupSpec spec;
  ClassFunction values;
  std::vector<int64_t> integer_values;
  std::vector<WeilSource> source;
  /// Witness torus label and element position per class (torus-assembled only).
  std::vector<std::string> witness_torus;
  std::vector<int64_t> witness_position;
  uint64_t realizations = 0;
  std::vector<WeilConflict> conflicts;

  nlohmann::json to_json() const;
};

/// Assembles ω on the semisimple classes of Sp or GU from all tori. Every
/// realization of a class is compared with the first; conflicts are recorded,
/// and with strict set they raise Mismatch. An uncovered semisimple class
/// is a ConstructionError.
WeilData weil_semisimple(const GroupPtr& G, const std::vector<Torus>& tori, bool strict = true);
/// ω for any classical group (GL: twisted for odd q). Memoized per group.
const WeilData& weil_data(const GroupPtr& G);

/// ω·St, zero on p-singular classes, checked to be a character.
ClassFunction weil_steinberg(const GroupPtr& G, const ClassFunction& omega);
ClassFunction weil_steinberg(const GroupPtr& G);

/// γ_n = Ind_U λ, λ(u) = ν(a Σ u_{i,i+1}) with ν = ζ_p^{Tr}. n = 1 gives the
/// regular character, n = 0 the trivial one.
ClassFunction gelfand_graev_gl(const GroupPtr& G, Elt a = 1);

/// Q_{n-1} of GL(n,q), memoized so that repeated calls return the same
/// group object.
std::shared_ptr<const Subgroup> affine_q(const GroupPtr& G);
/// Level-i Steinberg character of Q_{n-1} (a class function on affine_q(G)).
ClassFunction level_steinberg(const GroupPtr& G, int i);
/// (q^{n-1}-1)...(q^{n-i}-1) St_{n-i-1}(1).
mpz_class level_steinberg_degree(int n, uint32_t q, int i);

/// dim Ker(g-1) of a class representative over the group's field.
int fixed_space_dim(const GroupPtr& G, size_t cls);

}  // namespace wst

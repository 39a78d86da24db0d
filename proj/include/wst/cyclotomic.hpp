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

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wst/errors.hpp"

namespace wst {

int euler_phi(int n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<int64_t>& cyclotomic_polynomial(int n);

/// Exact element of Q(ζ_N) in the power basis 1, ζ, ..., ζ^{φ(N)-1}
/// reduced mod Φ_N. Coefficients are kept as integer numerators over one
/// positive common denominator in lowest terms, so equality is coefficient
/// equality. Small values use int64 storage; anything larger switches to GMP.
class Cyclotomic {
 public:
  enum class Kind { NonnegInteger, Integer, Rational, Other };
  struct Classification {
    Kind kind;
    mpq_class value;  // meaningful unless kind == Other
  };

  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int N);
  static Cyclotomic integer(int N, int64_t v);
  static Cyclotomic rational(int N, const mpq_class& v);
  /// ζ_N^{j mod N}.
  static Cyclotomic root(int N, int64_t j);
  /// Σ_j mult[j] ζ_N^j over j in [0, N).
  static Cyclotomic from_exponents(int N, const std::vector<int64_t>& mult);
  static Cyclotomic from_coeffs(int N, const std::vector<mpq_class>& coeffs);

  int conductor() const { return N_; }
  int phi() const;
  std::vector<mpq_class> coeffs() const;
  mpq_class coeff(int i) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scale(const mpq_class& s) const;
  Cyclotomic scale(int64_t s) const;
  Cyclotomic divide(const mpq_class& s) const { return scale(1 / s); }
  /// Numeric equality; operands of different conductors are compared in
  /// the field of the lcm.
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Complex conjugation ζ ↦ ζ^{-1}.
  Cyclotomic conj() const;
  /// Galois automorphism ζ ↦ ζ^k, gcd(k, N) = 1.
  Cyclotomic galois(int64_t k) const;
  /// The same number viewed in Q(ζ_M), N | M.
  Cyclotomic embed(int M) const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;
  Classification classify() const;
  /// True when stored in the int64 representation.
  bool is_small() const { return !big_; }

  std::string to_string() const;
  std::complex<double> approx() const;
  nlohmann::json to_json() const;
  static Cyclotomic from_json(const nlohmann::json& j);

 private:
  struct Big {
    std::vector<mpz_class> num;
    mpz_class den;
  };
  static Cyclotomic from_big(int N, Big b);
  Big to_big() const;

  int N_;
  std::vector<int64_t> num_;
  int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

/// Least common multiple, as used for conductor lifting.
int64_t lcm64(int64_t a, int64_t b);

}  // namespace wst

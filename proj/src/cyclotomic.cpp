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
#include "wst/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace wst {

namespace {

using i128 = __int128;

constexpr int64_t kSmallLimit = int64_t{1} << 62;

int bits(uint64_t v) { return v ? 64 - __builtin_clzll(v) : 0; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  mpz_class r((unsigned long)(uint64_t)(u >> 64));
  r <<= 64;
  r += (unsigned long)(uint64_t)u;
  return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62; }

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

struct Ctx {
  int N = 1, phi = 1;
  std::vector<int64_t> Phi;
  // R[e]: sparse power-basis expansion of ζ^e, e in [0, N).
  std::vector<std::vector<std::pair<int, int64_t>>> R;
  int R_bits = 0;  // bit length of max |R coefficient| * max row weight
};

std::shared_mutex g_ctx_mu;
std::map<int, std::unique_ptr<Ctx>> g_ctx;

std::vector<int64_t> compute_phi_poly(int N) {
  std::vector<int64_t> num{1};
  std::vector<int> divide_by;
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    int mu = mobius(N / d);
    if (mu == 1) {
      std::vector<int64_t> r(num.size() + d, 0);
      for (size_t i = 0; i < num.size(); ++i) {
        r[i + d] += num[i];
        r[i] -= num[i];
      }
      num = std::move(r);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (int d : divide_by) {
    // Exact division by x^d - 1, from the top coefficient down.
    size_t n = num.size() - 1;
    std::vector<int64_t> q(n - d + 1, 0);
    std::vector<int64_t> rem = num;
    for (int i = (int)n; i >= d; --i) {
      int64_t c = rem[i];
      q[i - d] = c;
      rem[i] -= c;
      rem[i - d] += c;
    }
    for (int i = 0; i < d; ++i)
      if (rem[i] != 0) throw ConstructionError("cyclotomic polynomial division not exact");
    num = std::move(q);
  }
  return num;
}

const Ctx& ctx(int N) {
  if (N < 1) throw InvalidArgument("conductor must be positive");
  {
    std::shared_lock<std::shared_mutex> lock(g_ctx_mu);
    auto it = g_ctx.find(N);
    if (it != g_ctx.end()) return *it->second;
  }
  auto c = std::make_unique<Ctx>();
  c->N = N;
  c->Phi = compute_phi_poly(N);
  c->phi = (int)c->Phi.size() - 1;
  if (c->phi != euler_phi(N)) throw ConstructionError("cyclotomic polynomial degree mismatch");
  const int phi = c->phi;
  c->R.resize(N);
  std::vector<int64_t> cur(phi, 0);
  cur[0] = 1;
  int64_t maxc = 1;
  size_t maxw = 1;
  for (int e = 0; e < N; ++e) {
    if (e > 0) {
      // Multiply by x and reduce with the monic Φ_N.
      int64_t top = cur[phi - 1];
      for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top)
        for (int i = 0; i < phi; ++i) {
          cur[i] -= top * c->Phi[i];
          if (std::llabs(cur[i]) > kSmallLimit) throw ConstructionError("cyclotomic reduction table overflow");
        }
    }
    for (int i = 0; i < phi; ++i)
      if (cur[i]) {
        c->R[e].push_back({i, cur[i]});
        maxc = std::max<int64_t>(maxc, std::llabs(cur[i]));
      }
    maxw = std::max(maxw, c->R[e].size());
  }
  c->R_bits = bits((uint64_t)maxc) + bits(maxw);
  std::unique_lock<std::shared_mutex> lock(g_ctx_mu);
  auto& slot = g_ctx[N];
  if (!slot) slot = std::move(c);
  return *slot;
}

template <class T>
struct Rep {
  std::vector<T> num;
  T den;
};

// Σ_e raw[e] ζ^e (e in [0, N)) into the power basis.
template <class T>
std::vector<T> reduce(const Ctx& c, const std::vector<T>& raw) {
  std::vector<T> out(c.phi, T(0));
  for (int e = 0; e < c.N; ++e) {
    if (raw[e] == 0) continue;
    if (e < c.phi) {
      out[e] += raw[e];
    } else {
      for (const auto& [i, v] : c.R[e]) out[i] += raw[e] * T(v);
    }
  }
  return out;
}

template <class T>
Rep<T> mul_core(const Ctx& c, const Rep<T>& a, const Rep<T>& b) {
  std::vector<T> raw(c.N, T(0));
  for (int i = 0; i < c.phi; ++i) {
    if (a.num[i] == 0) continue;
    for (int j = 0; j < c.phi; ++j) {
      if (b.num[j] == 0) continue;
      int e = i + j;
      if (e >= c.N) e -= c.N;
      raw[e] += a.num[i] * b.num[j];
    }
  }
  return {reduce(c, raw), a.den * b.den};
}

template <class T>
Rep<T> map_core(const Ctx& c, const Rep<T>& a, const std::vector<int>& target, const Ctx& tc) {
  std::vector<T> raw(tc.N, T(0));
  for (int i = 0; i < c.phi; ++i)
    if (a.num[i] != 0) raw[target[i]] += a.num[i];
  return {reduce(tc, raw), a.den};
}

}  // namespace

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<int64_t>& cyclotomic_polynomial(int n) { return ctx(n).Phi; }

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

// ---------------------------------------------------------------- construction

Cyclotomic::Cyclotomic(int N) : N_(N) { num_.assign(ctx(N).phi, 0); }

Cyclotomic Cyclotomic::integer(int N, int64_t v) {
  Cyclotomic r(N);
  if (std::llabs(v) <= kSmallLimit) {
    r.num_[0] = v;
    return r;
  }
  return rational(N, mpq_class(mpz_class((long)v)));
}

Cyclotomic Cyclotomic::rational(int N, const mpq_class& v) {
  std::vector<mpq_class> c(ctx(N).phi, 0);
  c[0] = v;
  return from_coeffs(N, c);
}

Cyclotomic Cyclotomic::root(int N, int64_t j) {
  const Ctx& c = ctx(N);
  int e = (int)(((j % N) + N) % N);
  Cyclotomic r(N);
  for (const auto& [i, v] : c.R[e]) r.num_[i] = v;
  return r;
}

Cyclotomic Cyclotomic::from_exponents(int N, const std::vector<int64_t>& mult) {
  const Ctx& c = ctx(N);
  if ((int)mult.size() != N) throw InvalidArgument("from_exponents needs N multiplicities");
  std::vector<i128> raw(N);
  for (int e = 0; e < N; ++e) raw[e] = mult[e];
  auto red = reduce(c, raw);
  Cyclotomic r(N);
  for (int i = 0; i < c.phi; ++i) {
    if (abs128(red[i]) > kSmallLimit) {
      Big b;
      for (auto v : red) b.num.push_back(to_mpz(v));
      b.den = 1;
      return from_big(N, std::move(b));
    }
    r.num_[i] = (int64_t)red[i];
  }
  return r;
}

Cyclotomic Cyclotomic::from_coeffs(int N, const std::vector<mpq_class>& coeffs) {
  const Ctx& c = ctx(N);
  if ((int)coeffs.size() != c.phi) throw InvalidArgument("coefficient vector length must be phi(N)");
  mpz_class den = 1;
  for (const auto& q : coeffs) den = lcm(den, mpz_class(q.get_den()));
  Big b;
  b.den = den;
  for (const auto& q : coeffs) b.num.push_back(mpz_class(q.get_num() * (den / q.get_den())));
  return from_big(N, std::move(b));
}

Cyclotomic Cyclotomic::from_big(int N, Big b) {
  mpz_class g = b.den;
  for (const auto& v : b.num) g = gcd(g, v);
  if (g == 0) g = 1;
  if (b.den < 0) g = -g;
  bool small = true;
  for (auto& v : b.num) {
    v /= g;
    small = small && fits_small(v);
  }
  b.den /= g;
  small = small && fits_small(b.den);
  Cyclotomic r(N);
  if (small) {
    for (size_t i = 0; i < b.num.size(); ++i) r.num_[i] = b.num[i].get_si();
    r.den_ = b.den.get_si();
    return r;
  }
  r.num_.clear();
  r.den_ = 0;
  r.big_ = std::make_shared<const Big>(std::move(b));
  return r;
}

Cyclotomic::Big Cyclotomic::to_big() const {
  if (big_) return *big_;
  Big b;
  for (int64_t v : num_) b.num.push_back(mpz_class((long)v));
  b.den = mpz_class((long)den_);
  return b;
}

// ---------------------------------------------------------------- arithmetic

int Cyclotomic::phi() const { return ctx(N_).phi; }

std::vector<mpq_class> Cyclotomic::coeffs() const {
  std::vector<mpq_class> out;
  if (big_) {
    for (const auto& v : big_->num) out.push_back(mpq_class(v, big_->den));
  } else {
    for (int64_t v : num_) out.push_back(mpq_class(mpz_class((long)v), mpz_class((long)den_)));
  }
  for (auto& q : out) q.canonicalize();
  return out;
}

mpq_class Cyclotomic::coeff(int i) const {
  mpq_class q = big_ ? mpq_class(big_->num.at(i), big_->den)
                     : mpq_class(mpz_class((long)num_.at(i)), mpz_class((long)den_));
  q.canonicalize();
  return q;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (N_ != o.N_) throw Mismatch("conductor mismatch: " + std::to_string(N_) + " vs " + std::to_string(o.N_));
  if (!big_ && !o.big_) {
    const int phi = (int)num_.size();
    if (den_ == 1 && o.den_ == 1) {
      Cyclotomic r(N_);
      bool ok = true;
      for (int i = 0; i < phi; ++i) {
        int64_t s = num_[i] + o.num_[i];
        if (std::llabs(s) > kSmallLimit) ok = false;
        r.num_[i] = s;
      }
      if (ok) return r;
    }
    i128 g = std::gcd(den_, o.den_);
    i128 fa = o.den_ / g, fb = den_ / g;
    std::vector<i128> num(phi);
    for (int i = 0; i < phi; ++i) num[i] = (i128)num_[i] * fa + (i128)o.num_[i] * fb;
    i128 den = (i128)den_ * fa;
    Cyclotomic r(N_);
    i128 gg = den;
    for (auto v : num) gg = gcd128(gg, v);
    bool small = true;
    for (int i = 0; i < phi; ++i) {
      num[i] /= gg;
      small = small && abs128(num[i]) <= kSmallLimit;
    }
    den /= gg;
    if (small && den <= kSmallLimit) {
      for (int i = 0; i < phi; ++i) r.num_[i] = (int64_t)num[i];
      r.den_ = (int64_t)den;
      return r;
    }
  }
  Big a = to_big(), b = o.to_big();
  Big s;
  s.den = a.den * b.den;
  for (size_t i = 0; i < a.num.size(); ++i) s.num.push_back(a.num[i] * b.den + b.num[i] * a.den);
  return from_big(N_, std::move(s));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  if (big_) {
    Big b = *big_;
    for (auto& v : b.num) v = -v;
    r.big_ = std::make_shared<const Big>(std::move(b));
  } else {
    for (auto& v : r.num_) v = -v;
  }
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (N_ != o.N_) throw Mismatch("conductor mismatch: " + std::to_string(N_) + " vs " + std::to_string(o.N_));
  const Ctx& c = ctx(N_);
  if (!big_ && !o.big_) {
    uint64_t ma = 0, mb = 0;
    int nza = 0, nzb = 0;
    for (int64_t v : num_) {
      ma = std::max<uint64_t>(ma, (uint64_t)std::llabs(v));
      nza += v != 0;
    }
    for (int64_t v : o.num_) {
      mb = std::max<uint64_t>(mb, (uint64_t)std::llabs(v));
      nzb += v != 0;
    }
    if (nza == 0 || nzb == 0) return Cyclotomic(N_);
    if (bits(ma) + bits(mb) + bits((uint64_t)std::min(nza, nzb)) + c.R_bits + 2 < 120 &&
        bits((uint64_t)den_) + bits((uint64_t)o.den_) < 120) {
      Rep<i128> a, b;
      for (int64_t v : num_) a.num.push_back(v);
      for (int64_t v : o.num_) b.num.push_back(v);
      a.den = den_;
      b.den = o.den_;
      Rep<i128> p = mul_core(c, a, b);
      i128 g = p.den;
      for (auto v : p.num) g = gcd128(g, v);
      if (g == 0) g = 1;
      bool small = true;
      for (auto& v : p.num) {
        v /= g;
        small = small && abs128(v) <= kSmallLimit;
      }
      p.den /= g;
      if (small && p.den <= kSmallLimit) {
        Cyclotomic r(N_);
        for (int i = 0; i < c.phi; ++i) r.num_[i] = (int64_t)p.num[i];
        r.den_ = (int64_t)p.den;
        return r;
      }
    }
  }
  Big a = to_big(), b = o.to_big();
  Rep<mpz_class> ra{a.num, a.den}, rb{b.num, b.den};
  Rep<mpz_class> p = mul_core(c, ra, rb);
  return from_big(N_, Big{std::move(p.num), std::move(p.den)});
}

Cyclotomic Cyclotomic::scale(const mpq_class& s) const {
  Big b = to_big();
  mpq_class t = s;
  t.canonicalize();
  for (auto& v : b.num) v *= t.get_num();
  b.den *= t.get_den();
  if (b.den < 0) {
    b.den = -b.den;
    for (auto& v : b.num) v = -v;
  }
  return from_big(N_, std::move(b));
}

Cyclotomic Cyclotomic::scale(int64_t s) const {
  if (!big_ && std::llabs(s) < (int64_t{1} << 30)) {
    bool ok = true;
    Cyclotomic r(N_);
    for (size_t i = 0; i < num_.size(); ++i) {
      i128 v = (i128)num_[i] * s;
      if (abs128(v) > kSmallLimit) ok = false;
      r.num_[i] = (int64_t)v;
    }
    if (ok) {
      r.den_ = den_;
      if (s == 0) {
        r.den_ = 1;
        return r;
      }
      int64_t g = den_;
      for (auto v : r.num_) g = std::gcd(g, v);
      if (g > 1) {
        for (auto& v : r.num_) v /= g;
        r.den_ /= g;
      }
      return r;
    }
  }
  return scale(mpq_class(mpz_class((long)s)));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (N_ != o.N_) {
    int M = (int)lcm64(N_, o.N_);
    return embed(M) == o.embed(M);
  }
  if (!big_ && !o.big_) return den_ == o.den_ && num_ == o.num_;
  if (big_ && o.big_) return big_->den == o.big_->den && big_->num == o.big_->num;
  return false;  // canonical forms: a value is big iff it does not fit small
}

namespace {

std::vector<int> exponent_map(int N, int64_t k, int M, int64_t mult) {
  const int phi = euler_phi(N);
  std::vector<int> t(phi);
  for (int i = 0; i < phi; ++i) t[i] = (int)((((int64_t)i * k % N + N) % N) * mult % M);
  return t;
}

}  // namespace

Cyclotomic Cyclotomic::galois(int64_t k) const {
  if (std::gcd<int64_t>(((k % N_) + N_) % N_, N_) != 1 && N_ > 1) throw InvalidArgument("galois exponent not a unit");
  const Ctx& c = ctx(N_);
  auto target = exponent_map(N_, k, N_, 1);
  if (!big_) {
    Rep<i128> a;
    for (int64_t v : num_) a.num.push_back(v);
    a.den = den_;
    if (c.R_bits < 60) {
      Rep<i128> r = map_core(c, a, target, c);
      bool small = true;
      for (auto v : r.num) small = small && abs128(v) <= kSmallLimit;
      if (small) {
        Cyclotomic out(N_);
        for (int i = 0; i < c.phi; ++i) out.num_[i] = (int64_t)r.num[i];
        out.den_ = den_;
        return out;
      }
    }
  }
  Big b = to_big();
  Rep<mpz_class> r = map_core(c, Rep<mpz_class>{b.num, b.den}, target, c);
  return from_big(N_, Big{std::move(r.num), std::move(r.den)});
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::embed(int M) const {
  if (M == N_) return *this;
  if (M % N_ != 0) throw Mismatch("cannot embed conductor " + std::to_string(N_) + " into " + std::to_string(M));
  const Ctx& tc = ctx(M);
  const Ctx& c = ctx(N_);
  auto target = exponent_map(N_, 1, M, M / N_);
  if (!big_ && c.R_bits + tc.R_bits < 60) {
    Rep<i128> a;
    for (int64_t v : num_) a.num.push_back(v);
    a.den = den_;
    Rep<i128> r = map_core(c, a, target, tc);
    bool small = true;
    for (auto v : r.num) small = small && abs128(v) <= kSmallLimit;
    if (small) {
      Cyclotomic out(M);
      for (int i = 0; i < tc.phi; ++i) out.num_[i] = (int64_t)r.num[i];
      out.den_ = den_;
      int64_t g = den_;
      for (auto v : out.num_) g = std::gcd(g, v);
      if (g > 1) {
        for (auto& v : out.num_) v /= g;
        out.den_ /= g;
      }
      return out;
    }
  }
  Big b = to_big();
  Rep<mpz_class> r = map_core(c, Rep<mpz_class>{b.num, b.den}, target, tc);
  return from_big(M, Big{std::move(r.num), std::move(r.den)});
}

// ---------------------------------------------------------------- queries

bool Cyclotomic::is_zero() const {
  if (big_) return false;
  for (int64_t v : num_)
    if (v) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  if (big_) {
    for (size_t i = 1; i < big_->num.size(); ++i)
      if (big_->num[i] != 0) return false;
    return true;
  }
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i]) return false;
  return true;
}

std::optional<mpq_class> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeff(0);
}

Cyclotomic::Classification Cyclotomic::classify() const {
  auto r = as_rational();
  if (!r) return {Kind::Other, 0};
  if (r->get_den() != 1) return {Kind::Rational, *r};
  if (*r >= 0) return {Kind::NonnegInteger, *r};
  return {Kind::Integer, *r};
}

std::string Cyclotomic::to_string() const {
  auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    mpq_class v = c[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    first = false;
    mpq_class a = abs(v);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << N_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::complex<double> Cyclotomic::approx() const {
  auto c = coeffs();
  std::complex<double> s = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    double ang = 2 * M_PI * (double)i / N_;
    s += c[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

nlohmann::json Cyclotomic::to_json() const {
  nlohmann::json j;
  j["N"] = N_;
  auto arr = nlohmann::json::array();
  auto enc = [](const mpz_class& z) -> nlohmann::json {
    if (fits_small(z)) return (int64_t)z.get_si();
    return z.get_str();
  };
  for (const auto& q : coeffs()) arr.push_back(nlohmann::json::array({enc(q.get_num()), enc(q.get_den())}));
  j["coeffs"] = arr;
  return j;
}

Cyclotomic Cyclotomic::from_json(const nlohmann::json& j) {
  int N = j.at("N").get<int>();
  std::vector<mpq_class> c;
  auto dec = [](const nlohmann::json& v) {
    if (v.is_string()) return mpz_class(v.get<std::string>());
    return mpz_class((long)v.get<int64_t>());
  };
  for (const auto& pair : j.at("coeffs")) c.push_back(mpq_class(dec(pair.at(0)), dec(pair.at(1))));
  for (auto& q : c) q.canonicalize();
  return from_coeffs(N, c);
}

}  // namespace wst

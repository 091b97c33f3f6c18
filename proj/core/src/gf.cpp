// Copyright 2026 The sfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sfi/gf.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace sfi {
namespace {

using Poly = std::vector<unsigned>;  // ascending coefficients mod p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (unsigned k = p - 2; k; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<unsigned>(r);
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const unsigned lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const unsigned c = static_cast<unsigned>(std::uint64_t{a.back()} * lead_inv % p);
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - static_cast<unsigned>(std::uint64_t{c} * m[i] % p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<unsigned>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, unsigned p) {
  Poly r{1};
  r = poly_mod(r, m, p);
  base = poly_mod(std::move(base), m, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

bool is_x(const Poly& f) { return f.size() == 2 && f[0] == 0 && f[1] == 1; }

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

bool is_irreducible(unsigned p, std::span<const unsigned> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  // Rabin: x^(p^d) = x mod f, and gcd(x^(p^(d/r)) - x, f) = 1 for primes r | d.
  const Poly x{0, 1};
  auto frob_power = [&](unsigned k) {
    Poly r = poly_mod(x, f, p);
    for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  Poly full = frob_power(d);
  trim(full);
  if (!is_x(full)) return false;
  for (std::uint64_t r : prime_factors(d)) {
    Poly h = frob_power(static_cast<unsigned>(d / r));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool is_primitive(unsigned p, std::span<const unsigned> poly) {
  if (!is_irreducible(p, poly)) return false;
  Poly f(poly.begin(), poly.end());
  trim(f);
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  const std::uint64_t group = ipow(p, d) - 1;
  const Poly x{0, 1};
  if (f[0] == 0) return false;
  for (std::uint64_t l : prime_factors(group)) {
    Poly r = poly_powmod(x, group / l, f, p);
    trim(r);
    if (r.size() == 1 && r[0] == 1) return false;
  }
  // group == 1 (F_2 itself): the root of t + 1 is 1, which generates.
  Poly r = poly_powmod(x, group, f, p);
  trim(r);
  return r.size() == 1 && r[0] == 1;
}

FieldRef FieldCtx::create(unsigned p, unsigned e, unsigned n) {
  if (!is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (e == 0 || n == 0) throw Error(ErrorCode::kInvalidArgument, "e and n must be positive");
  const unsigned d = e * n;
  std::uint64_t size = 1;
  for (unsigned i = 0; i < d; ++i) {
    size *= p;
    if (size > kMaxOrder) {
      throw Error(ErrorCode::kTooLarge, "field order exceeds 2^20");
    }
  }
  // Monic polynomials of degree d in increasing code order.
  Poly cand(d + 1, 0);
  cand[d] = 1;
  for (std::uint64_t code = 0; code < size; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < d; ++i) {
      cand[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    if (is_primitive(p, cand)) {
      return FieldRef(new FieldCtx(p, e, n, cand));
    }
  }
  throw Error(ErrorCode::kNoPrimitivePolynomial,
              "no primitive polynomial of degree " + std::to_string(d));
}

FieldRef FieldCtx::create(unsigned p, unsigned e, unsigned n, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (e == 0 || n == 0) throw Error(ErrorCode::kInvalidArgument, "e and n must be positive");
  const unsigned d = e * n;
  std::uint64_t size = 1;
  for (unsigned i = 0; i < d; ++i) {
    size *= p;
    if (size > kMaxOrder) throw Error(ErrorCode::kTooLarge, "field order exceeds 2^20");
  }
  if (modulus.size() != d + 1 || modulus.back() != 1) {
    throw Error(ErrorCode::kInvalidModulus, "modulus must be monic of degree e*n");
  }
  for (unsigned c : modulus) {
    if (c >= p) throw Error(ErrorCode::kInvalidModulus, "modulus coefficient out of range");
  }
  if (!is_primitive(p, modulus)) {
    throw Error(ErrorCode::kInvalidModulus, "modulus is not a primitive polynomial");
  }
  return FieldRef(new FieldCtx(p, e, n, std::move(modulus)));
}

FieldCtx::FieldCtx(unsigned p, unsigned e, unsigned n, std::vector<unsigned> modulus)
    : p_(p), e_(e), n_(n), modulus_(std::move(modulus)) {
  const unsigned d = e * n;
  q_ = static_cast<Elem>(ipow(p, e));
  order_ = static_cast<Elem>(ipow(p, d));
  group_ = order_ - 1;

  exp_.resize(2 * std::size_t{group_});
  log_.assign(order_, 0);
  std::vector<Elem> place(d);
  for (unsigned i = 0; i < d; ++i) place[i] = static_cast<Elem>(ipow(p, i));

  // Walk the powers of t; x holds the digits of t^k.
  std::vector<unsigned> x(d, 0);
  x[0] = 1;
  for (Elem k = 0; k < group_; ++k) {
    Elem code = 0;
    for (unsigned i = 0; i < d; ++i) code += x[i] * place[i];
    exp_[k] = code;
    log_[code] = k;
    const unsigned top = x[d - 1];
    for (unsigned i = d - 1; i > 0; --i) x[i] = x[i - 1];
    x[0] = 0;
    if (top) {
      for (unsigned i = 0; i < d; ++i) {
        x[i] = (x[i] + p - (top * modulus_[i]) % p) % p;
      }
    }
  }
  for (Elem k = 0; k < group_; ++k) exp_[group_ + k] = exp_[k];

  if (p != 2) {
    zech_.resize(group_);
    for (Elem k = 0; k < group_; ++k) {
      const Elem v = exp_[k];
      const Elem d0 = v % p;
      const Elem w = v - d0 + (d0 + 1) % p;
      zech_[k] = w == 0 ? -1 : static_cast<std::int32_t>(log_[w]);
    }
  }

  qpow_.resize(n);
  std::uint64_t qp = 1;
  for (unsigned k = 0; k < n; ++k) {
    qpow_[k] = group_ ? qp % group_ : 0;
    qp = (qp * q_) % (group_ ? group_ : 1);
  }

  for (unsigned i = 0; i < n; ++i) basis_.push_back(exp(i));

  const Elem sub_gen = exp(group_ / (q_ - 1));
  for (unsigned i = 0; i < e; ++i) subfield_basis_.push_back(pow(sub_gen, i));

  // Dual basis: invert the Gram matrix G_ij = Tr(b_i b_j) by Gauss-Jordan.
  std::vector<Elem> g(n * n), x_inv(n * n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) g[i * n + j] = trace(mul(basis_[i], basis_[j]));
    x_inv[i * n + i] = 1;
  }
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && g[piv * n + col] == 0) ++piv;
    // Non-degeneracy of the trace form guarantees a pivot.
    for (unsigned j = 0; j < n; ++j) {
      std::swap(g[piv * n + j], g[col * n + j]);
      std::swap(x_inv[piv * n + j], x_inv[col * n + j]);
    }
    const Elem s = inv(g[col * n + col]);
    for (unsigned j = 0; j < n; ++j) {
      g[col * n + j] = mul(g[col * n + j], s);
      x_inv[col * n + j] = mul(x_inv[col * n + j], s);
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == col || g[r * n + col] == 0) continue;
      const Elem f = g[r * n + col];
      for (unsigned j = 0; j < n; ++j) {
        g[r * n + j] = sub(g[r * n + j], mul(f, g[col * n + j]));
        x_inv[r * n + j] = sub(x_inv[r * n + j], mul(f, x_inv[col * n + j]));
      }
    }
  }
  dual_basis_.assign(n, 0);
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned j = 0; j < n; ++j) {
      dual_basis_[s] = add(dual_basis_[s], mul(x_inv[s * n + j], basis_[j]));
    }
  }
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return exp_[(group_ - log_[a]) % group_];
}

Elem FieldCtx::pow(Elem a, std::uint64_t k) const noexcept {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} * (k % group_)) % group_];
}

Elem FieldCtx::trace(Elem a) const noexcept {
  Elem s = 0;
  for (unsigned k = 0; k < n_; ++k) s = add(s, frobenius(a, k));
  return s;
}

std::vector<unsigned> FieldCtx::digits(Elem a) const {
  std::vector<unsigned> out(degree());
  for (auto& d : out) {
    d = a % p_;
    a /= p_;
  }
  return out;
}

Elem FieldCtx::from_digits(std::span<const unsigned> digits) const {
  Elem code = 0, place = 1;
  for (unsigned d : digits) {
    code += (d % p_) * place;
    place *= p_;
  }
  return code;
}

Elem FieldCtx::add_poly(Elem a, Elem b) const {
  auto da = digits(a), db = digits(b);
  for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da);
}

Elem FieldCtx::mul_poly(Elem a, Elem b) const {
  Poly r = poly_mulmod(digits(a), digits(b), modulus_, p_);
  r.resize(degree(), 0);
  return from_digits(r);
}

std::vector<Elem> FieldCtx::subfield_elements() const {
  std::vector<Elem> out{0};
  const Elem step = group_ / (q_ - 1);
  for (Elem k = 0; k < q_ - 1; ++k) out.push_back(exp(std::uint64_t{k} * step));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> FieldCtx::coordinates(Elem a) const {
  std::vector<Elem> out(n_);
  for (unsigned s = 0; s < n_; ++s) out[s] = trace(mul(a, dual_basis_[s]));
  return out;
}

}  // namespace sfi

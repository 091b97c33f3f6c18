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

// Table-backed arithmetic in the tower F_p <= F_q <= F_{q^n}.
//
// The big field is realised once as F_p[t]/(m) with deg m = e*n, m primitive.
// F_q is not a separate object: it is the fixed field of x -> x^q. An element
// is identified with its canonical code sum(a_i p^i) where sum(a_i t^i) is the
// reduced polynomial representative; codes are what every file format stores.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sfi/error.hpp"

namespace sfi {

using Elem = std::uint32_t;

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

bool is_prime(std::uint64_t v);

/// Monic polynomials over F_p are passed as ascending coefficient vectors
/// (the leading 1 included).
bool is_irreducible(unsigned p, std::span<const unsigned> poly);
bool is_primitive(unsigned p, std::span<const unsigned> poly);

class FieldCtx {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Deterministic context: the modulus is the smallest primitive polynomial
  /// of degree e*n in coefficient-code order.
  static FieldRef create(unsigned p, unsigned e, unsigned n);

  /// Context over a caller-supplied modulus (must be primitive of degree e*n).
  static FieldRef create(unsigned p, unsigned e, unsigned n,
                         std::vector<unsigned> modulus);

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  unsigned n() const noexcept { return n_; }
  unsigned degree() const noexcept { return e_ * n_; }
  Elem q() const noexcept { return q_; }
  /// Number of elements of the big field, q^n.
  Elem order() const noexcept { return order_; }
  /// Order of the multiplicative group, q^n - 1.
  Elem group_order() const noexcept { return group_; }
  bool char2() const noexcept { return p_ == 2; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  bool valid(Elem a) const noexcept { return a < order_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    return add_zech(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (p_ == 2 || a == 0) return a;
    return exp_[log_[a] + group_ / 2];
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  /// a^(q^k); k is reduced mod n.
  Elem frobenius(Elem a, unsigned k) const noexcept {
    if (a == 0) return 0;
    const std::uint64_t l = log_[a];
    return exp_[(l * qpow_[k % n_]) % group_];
  }
  /// Tr_{q^n:q}(a).
  Elem trace(Elem a) const noexcept;

  /// Discrete log to the base t; a must be nonzero.
  Elem log(Elem a) const noexcept { return log_[a]; }
  Elem exp(std::uint64_t k) const noexcept { return exp_[k % group_]; }
  /// The primitive root t (root of the modulus).
  Elem generator() const noexcept { return exp_[1 % group_]; }

  /// Reference arithmetic directly on polynomial representatives; used to
  /// cross-check the table path.
  Elem add_poly(Elem a, Elem b) const;
  Elem mul_poly(Elem a, Elem b) const;

  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(std::span<const unsigned> digits) const;

  bool in_subfield(Elem a) const noexcept { return frobenius(a, 1) == a; }
  /// All q elements of F_q in increasing code order.
  std::vector<Elem> subfield_elements() const;
  /// F_p-basis 1, g, ..., g^{e-1} of F_q for a generator g of F_q^*.
  const std::vector<Elem>& subfield_basis() const noexcept { return subfield_basis_; }

  /// The fixed F_q-basis 1, t, ..., t^{n-1} of F_{q^n}.
  const std::vector<Elem>& basis() const noexcept { return basis_; }
  /// F_q-coordinates of a in basis(); every entry lies in F_q.
  std::vector<Elem> coordinates(Elem a) const;
  /// Dual basis of basis() under (x, y) -> Tr(xy).
  const std::vector<Elem>& dual_basis() const noexcept { return dual_basis_; }

 private:
  FieldCtx(unsigned p, unsigned e, unsigned n, std::vector<unsigned> modulus);

  Elem add_zech(Elem a, Elem b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const Elem la = log_[a];
    Elem d = log_[b] + group_ - la;
    if (d >= group_) d -= group_;
    const std::int32_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<Elem>(z)];
  }

  unsigned p_;
  unsigned e_;
  unsigned n_;
  Elem q_;
  Elem order_;
  Elem group_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> exp_;           // length 2*(q^n - 1), so log sums need no reduction
  std::vector<Elem> log_;           // log_[0] unused
  std::vector<std::int32_t> zech_;  // log(1 + t^k), -1 when 1 + t^k = 0
  std::vector<std::uint64_t> qpow_; // q^k mod (q^n - 1)
  std::vector<Elem> basis_;
  std::vector<Elem> dual_basis_;
  std::vector<Elem> subfield_basis_;
};

}  // namespace sfi

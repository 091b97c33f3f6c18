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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "sfi/gf.hpp"
#include "sfi/matrix.hpp"

namespace sfi {

/// An F_q-linear endomorphism of F_{q^n}, stored as the coefficients of its
/// linearized polynomial x -> sum_j w_j x^(q^j). The coefficient vector is the
/// canonical form: two maps are equal iff their coefficients are.
class LinMap {
 public:
  LinMap(FieldRef ctx, std::vector<Elem> coeffs);

  static LinMap identity(FieldRef ctx);
  static LinMap zero(FieldRef ctx);
  /// x -> a * x^(q^k).
  static LinMap monomial(FieldRef ctx, Elem a, unsigned k);

  /// The unique linearized polynomial with f(basis[i]) = values[i]; the basis
  /// must be F_q-independent (NotABasis otherwise).
  static LinMap interpolate(FieldRef ctx, std::span<const Elem> basis,
                            std::span<const Elem> values);
  /// Interpolation on the context's fixed basis.
  static LinMap interpolate(FieldRef ctx, std::span<const Elem> values);

  const FieldRef& ctx() const noexcept { return ctx_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t j) const { return coeffs_[j]; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Elem operator()(Elem x) const noexcept;
  Elem evaluate(Elem x) const noexcept { return (*this)(x); }

  /// Autocirculant matrix: entry (i, j) is w_{(j-i) mod n}^(q^i), so that
  /// A * (x, x^q, ...)^T = (w(x), w(x)^q, ...)^T.
  Matrix dickson_matrix() const;
  bool is_invertible() const;
  /// Adjoint for the trace form: Tr(f(x) y) = Tr(x adjoint(f)(y)).
  LinMap adjoint() const;
  /// Inverse map; SingularMap when f is not bijective.
  LinMap inverse() const;

  /// Matrix of f over F_p in the polynomial basis 1, t, ..., t^{en-1};
  /// column i holds the digits of f(t^i). Verification only.
  std::vector<std::vector<unsigned>> fp_matrix() const;

  /// Space separated element codes, constant term first.
  std::string to_string() const;
  static LinMap parse(FieldRef ctx, const std::string& text);

  bool operator==(const LinMap& o) const { return coeffs_ == o.coeffs_; }

 private:
  FieldRef ctx_;
  std::vector<Elem> coeffs_;
};

/// (f o g)(x) = f(g(x)).
LinMap compose(const LinMap& f, const LinMap& g);
LinMap operator+(const LinMap& f, const LinMap& g);

/// Moore matrix with rows (b, b^q, ..., b^(q^{n-1})) for each b in `basis`.
Matrix moore_matrix(const FieldRef& ctx, std::span<const Elem> basis);

}  // namespace sfi

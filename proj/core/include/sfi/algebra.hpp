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

// n-dimensional F_q-algebras on F_{q^n} in coefficient form
//
//   S(x, y) = sum_{i,j} c_ij x^(q^i) y^(q^j),
//
// together with the Knuth operations. Conventions:
//   dual:      S^d(x, y) = S(y, x), i.e. C -> C^T.
//   transpose: the algebra whose right multiplication by y is the trace-form
//              adjoint of the right multiplication R_y of S. Other references
//              transpose left multiplication instead; the two differ by a dual.
// Presemifields are accepted everywhere. No unit element is assumed except
// inside nuclei(), which first passes to a Kaplansky isotope with identity.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sfi/gf.hpp"
#include "sfi/linmap.hpp"
#include "sfi/matrix.hpp"

namespace sfi {

/// Sizes are stored as exponents of p; l, m, r are the dimensions of the
/// algebra over its left, middle and right nucleus.
struct NucleiReport {
  unsigned p = 0;
  unsigned left_exp = 0;
  unsigned middle_exp = 0;
  unsigned right_exp = 0;
  unsigned centre_exp = 0;
  unsigned l = 0;
  unsigned m = 0;
  unsigned r = 0;

  std::uint64_t left_size() const;
  std::uint64_t middle_size() const;
  std::uint64_t right_size() const;
  std::uint64_t centre_size() const;
  /// True when every nucleus is the whole algebra (only the field).
  bool all_full(unsigned degree) const {
    return left_exp == degree && middle_exp == degree && right_exp == degree;
  }
};

/// Full multiplication table, rows indexed by x and columns by y (codes).
struct MultiplicationTable {
  FieldRef ctx;
  std::vector<Elem> entries;  // order^2, row-major

  Elem operator()(Elem x, Elem y) const { return entries[std::size_t{x} * ctx->order() + y]; }
};

class Algebra {
 public:
  Algebra(FieldRef ctx, Matrix coeffs);
  explicit Algebra(Matrix coeffs);

  /// Unique coefficient matrix of an F_q-bilinear map, read off its values on
  /// basis pairs. The map is trusted to be bilinear.
  static Algebra from_bilinear(FieldRef ctx, const std::function<Elem(Elem, Elem)>& mul);
  /// Validates F_q-bilinearity (NotBilinear) and that the recovered
  /// coefficients reproduce every entry.
  static Algebra from_table(const MultiplicationTable& table);

  const FieldRef& ctx() const noexcept { return ctx_; }
  const FieldCtx& field() const noexcept { return *ctx_; }
  unsigned n() const noexcept { return ctx_->n(); }
  const Matrix& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t i, std::size_t j) const { return coeffs_(i, j); }

  Elem multiply(Elem x, Elem y) const;
  /// Same product evaluated as the matrix sandwich xvec * C * yvec^T.
  Elem multiply_matrix(Elem x, Elem y) const;

  LinMap right_mult(Elem y) const;  // x -> S(x, y)
  LinMap left_mult(Elem y) const;   // x -> S(y, x)

  /// No nontrivial zero divisors.
  bool is_semifield() const;
  NucleiReport nuclei() const;

  Algebra dual() const;
  Algebra transpose() const;
  /// Closed form of dual(transpose(dual(S))).
  Algebra dtd() const;
  /// Applies a word over {d, t} left to right.
  Algebra knuth(const std::string& word) const;

  /// S'(x, y) = H(S(F(x), G(y))); SingularMap unless F, G, H are invertible.
  Algebra apply_isotopy(const LinMap& f, const LinMap& g, const LinMap& h) const;

  /// Same multiplication over the subfield F_{p^e'} (e' | e) with n' = n e / e'.
  Algebra rebase(unsigned new_e) const;

  MultiplicationTable table() const;

  bool operator==(const Algebra& o) const { return coeffs_ == o.coeffs_; }

 private:
  FieldRef ctx_;
  Matrix coeffs_;
};

}  // namespace sfi

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

// BEL-configurations in V(rn, q), coordinatised as F_{q^n}^r: the Desarguesian
// spread is {B(v) = F_{q^n} v}, U and W are F_q-subspaces given by bases.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sfi/algebra.hpp"
#include "sfi/linmap.hpp"

namespace sfi {

/// S(x, y) = sum_i g_i(f_i(x) y).
struct BelDecomposition {
  FieldRef ctx;
  std::vector<LinMap> f;
  std::vector<LinMap> g;

  std::size_t r() const noexcept { return f.size(); }
  Elem multiply(Elem x, Elem y) const;
  Algebra algebra() const;
};

/// Factors M(S^dtd) = sum u_i^T v_i and returns f_i = u_i, g_i = adjoint(v_i),
/// which rebuilds S exactly.
BelDecomposition decomposition_from_rank_factorization(const Algebra& s);

struct BelConfiguration {
  FieldRef ctx;
  std::size_t r = 0;
  std::vector<std::vector<Elem>> u_basis;  // n vectors of length r
  std::vector<std::vector<Elem>> w_basis;  // rn - n vectors of length r
};

/// U = {(f_i(x))_i}, W = ker((y_i) -> sum g_i(y_i)).
/// DegenerateU if dim U < n, DegenerateW if the sum map is not onto.
BelConfiguration configuration_from_decomposition(const BelDecomposition& d);

/// Spread elements are enumerated over projective representatives (last
/// nonzero coordinate 1) in lexicographic order of their codes.
inline constexpr std::size_t kMaxSpreadElements = 10000;

struct VerifyResult {
  bool ok = true;
  std::optional<std::vector<Elem>> violating;  // first offending representative
  std::size_t elements = 0;                    // spread elements examined
  std::size_t meets_u = 0;
  std::size_t meets_w = 0;
};

/// TooManySpreadElements above kMaxSpreadElements.
VerifyResult verify_configuration(const BelConfiguration& b);

/// (q^{rn} - 1)/(q^n - 1), saturated at kMaxSpreadElements + 1.
std::size_t spread_size(const FieldCtx& f, std::size_t r);

}  // namespace sfi

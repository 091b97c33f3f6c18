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

// Shared fixtures for the test binaries.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "sfi/algebra.hpp"
#include "sfi/belrank.hpp"
#include "sfi/families.hpp"

namespace sfi::test {

inline Matrix random_matrix(const FieldRef& ctx, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, ctx->order() - 1);
  Matrix m(ctx, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = pick(rng);
  }
  return m;
}

inline Algebra random_algebra(const FieldRef& ctx, std::mt19937_64& rng) {
  return Algebra(ctx, random_matrix(ctx, ctx->n(), ctx->n(), rng));
}

inline LinMap random_map(const FieldRef& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, ctx->order() - 1);
  std::vector<Elem> c(ctx->n());
  for (auto& x : c) x = pick(rng);
  return LinMap(ctx, std::move(c));
}

inline Algebra from_rows(const FieldRef& ctx, std::vector<Elem> data) {
  const unsigned n = ctx->n();
  return Algebra(ctx, Matrix(ctx, n, n, std::move(data)));
}

// Order-16 semifields over F_2 (modulus t^4 + t + 1), one per Knuth orbit.
// The two proper ones come from random spread sets of 4x4 binary matrices.
inline Algebra order16_nucleus4() {
  return from_rows(FieldCtx::create(2, 1, 4), {7, 15, 13, 4, 5, 6, 5, 6, 6, 9, 2, 13, 14, 8, 2, 4});
}
inline Algebra order16_trivial_nuclei() {
  return from_rows(FieldCtx::create(2, 1, 4),
                   {14, 5, 12, 6, 14, 12, 0, 2, 14, 12, 7, 5, 15, 4, 11, 0});
}

// Knuth's binary commutative semifield xy + (x Tr(y) + y Tr(x))^2 of order 32.
inline Algebra knuth_binary32() {
  FieldRef ctx = FieldCtx::create(2, 1, 5);
  const FieldCtx& f = *ctx;
  return Algebra::from_bilinear(ctx, [&f](Elem x, Elem y) {
    const Elem t = f.add(f.mul(x, f.trace(y)), f.mul(y, f.trace(x)));
    return f.add(f.mul(x, y), f.mul(t, t));
  });
}

inline Algebra gtf_auto(unsigned p, unsigned e, unsigned n, unsigned k, unsigned m) {
  FieldRef ctx = FieldCtx::create(p, e, n);
  return gtf(ctx, k, m, gtf_find_c(*ctx, k, m));
}

struct Named {
  std::string name;
  Algebra s;
};

// Semifields whose exhaustive triple is cheap (well under a second each).
inline std::vector<Named> small_semifields() {
  std::vector<Named> out;
  out.push_back({"F8", field_semifield(FieldCtx::create(2, 1, 3))});
  out.push_back({"F16", field_semifield(FieldCtx::create(2, 1, 4))});
  out.push_back({"F27", field_semifield(FieldCtx::create(3, 1, 3))});
  out.push_back({"F16/F4", field_semifield(FieldCtx::create(2, 2, 2))});
  out.push_back({"GTF27", gtf_auto(3, 1, 3, 1, 2)});
  out.push_back({"GTF64/F4", gtf_auto(2, 2, 3, 1, 2)});
  out.push_back({"GTF125", gtf_auto(5, 1, 3, 1, 2)});
  out.push_back({"S16-nuc4", order16_nucleus4()});
  out.push_back({"S16-triv", order16_trivial_nuclei()});
  return out;
}

}  // namespace sfi::test

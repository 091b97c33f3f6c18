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

#include "sfi/families.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sfi {
namespace {

void check_exponents(const FieldCtx& f, unsigned k, unsigned m) {
  if (k == 0 || m == 0 || k >= f.n() || m >= f.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "twisted field exponents need 0 < k, m < n (n = " + std::to_string(f.n()) + ")");
  }
}

// Logs of the nonzero part of {x^(q^k-1) y^(q^m-1)}: the subgroup generated
// by the two step sizes, walked breadth first.
std::vector<bool> product_set_logs(const FieldCtx& f, unsigned k, unsigned m) {
  const std::uint64_t order = f.group_order();
  auto step = [&](unsigned j) {
    std::uint64_t qj = 1;
    for (unsigned i = 0; i < j; ++i) qj = qj * f.q() % order;
    return (qj + order - 1) % order;
  };
  const std::uint64_t a = step(k), b = step(m);
  std::vector<bool> seen(order, false);
  std::vector<std::uint64_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::uint64_t s : {a, b}) {
      const std::uint64_t nx = (queue[i] + s) % order;
      if (!seen[nx]) {
        seen[nx] = true;
        queue.push_back(nx);
      }
    }
  }
  return seen;
}

}  // namespace

Algebra field_semifield(FieldRef ctx) {
  const unsigned n = ctx->n();
  Matrix c(ctx, n, n);
  c(0, 0) = 1;
  return Algebra(std::move(ctx), std::move(c));
}

bool gtf_c_valid(const FieldCtx& f, unsigned k, unsigned m, Elem c) {
  check_exponents(f, k, m);
  if (c == 0 || !f.valid(c)) return false;
  return !product_set_logs(f, k, m)[f.log(c)];
}

Elem gtf_find_c(const FieldCtx& f, unsigned k, unsigned m) {
  check_exponents(f, k, m);
  const auto seen = product_set_logs(f, k, m);
  for (Elem c = 1; c < f.order(); ++c) {
    if (!seen[f.log(c)]) return c;
  }
  throw Error(ErrorCode::kNoValidC, "x^(q^" + std::to_string(k) + "-1) y^(q^" +
                                        std::to_string(m) + "-1) covers the whole field");
}

Algebra gtf_unchecked(FieldRef ctx, unsigned k, unsigned m, Elem c) {
  check_exponents(*ctx, k, m);
  const unsigned n = ctx->n();
  Matrix mat(ctx, n, n);
  mat(0, 0) = 1;
  mat(k, m) = ctx->sub(mat(k, m), c);
  return Algebra(std::move(ctx), std::move(mat));
}

Algebra gtf(FieldRef ctx, unsigned k, unsigned m, Elem c) {
  if (!gtf_c_valid(*ctx, k, m, c)) {
    throw Error(ErrorCode::kInvalidC, "c = " + std::to_string(c) +
                                          " lies in the product set; the product has zero divisors");
  }
  return gtf_unchecked(std::move(ctx), k, m, c);
}

}  // namespace sfi

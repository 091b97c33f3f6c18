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

#include "sfi/belconfig.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace sfi {
namespace {

// dim_{F_q}(A ∩ B) for subspaces given by bases of the stated dimensions.
std::size_t meet_dim(const FieldCtx& f, const std::vector<std::vector<Elem>>& a,
                     const std::vector<std::vector<Elem>>& b) {
  std::vector<std::vector<Elem>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return a.size() + b.size() - fq_rank(f, all);
}

}  // namespace

Elem BelDecomposition::multiply(Elem x, Elem y) const {
  const FieldCtx& fc = *ctx;
  Elem acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) acc = fc.add(acc, g[i](fc.mul(f[i](x), y)));
  return acc;
}

Algebra BelDecomposition::algebra() const {
  return Algebra::from_bilinear(ctx, [this](Elem x, Elem y) { return multiply(x, y); });
}

BelDecomposition decomposition_from_rank_factorization(const Algebra& s) {
  const RankFactorization fac = rank_factor(s.dtd().coeffs());
  BelDecomposition d{s.ctx(), {}, {}};
  for (std::size_t i = 0; i < fac.rank(); ++i) {
    d.f.emplace_back(s.ctx(), fac.u[i]);
    d.g.push_back(LinMap(s.ctx(), fac.v[i]).adjoint());
  }
  return d;
}

BelConfiguration configuration_from_decomposition(const BelDecomposition& d) {
  const FieldCtx& f = *d.ctx;
  const unsigned n = f.n();
  const std::size_t r = d.r();
  const auto& basis = f.basis();
  BelConfiguration out{d.ctx, r, {}, {}};

  for (Elem b : basis) {
    std::vector<Elem> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = d.f[i](b);
    out.u_basis.push_back(std::move(v));
  }
  const std::size_t du = fq_rank(f, out.u_basis);
  if (du < n) {
    throw Error(ErrorCode::kDegenerateU, "the maps f_i have a common kernel (dim U = " +
                                             std::to_string(du) + " < " + std::to_string(n) + ")");
  }

  // The sum map over F_q: column (i, s) holds the coordinates of g_i(b_s).
  Matrix sum(d.ctx, n, r * n);
  for (std::size_t i = 0; i < r; ++i) {
    for (unsigned s = 0; s < n; ++s) {
      const auto c = f.coordinates(d.g[i](basis[s]));
      for (unsigned k = 0; k < n; ++k) sum(k, i * n + s) = c[k];
    }
  }
  if (matrix_rank(sum) < n) {
    throw Error(ErrorCode::kDegenerateW, "sum of the maps g_i is not surjective");
  }
  for (const auto& x : null_space(sum)) {
    std::vector<Elem> w(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (unsigned s = 0; s < n; ++s) w[i] = f.add(w[i], f.mul(x[i * n + s], basis[s]));
    }
    out.w_basis.push_back(std::move(w));
  }
  return out;
}

std::size_t spread_size(const FieldCtx& f, std::size_t r) {
  // 1 + Q + ... + Q^(r-1)
  std::size_t total = 0, term = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total += term;
    if (total > kMaxSpreadElements) return kMaxSpreadElements + 1;
    term *= f.order();
    if (term > kMaxSpreadElements) term = kMaxSpreadElements + 1;
  }
  return total;
}

VerifyResult verify_configuration(const BelConfiguration& b) {
  const FieldCtx& f = *b.ctx;
  const std::size_t r = b.r;
  if (spread_size(f, r) > kMaxSpreadElements) {
    throw Error(ErrorCode::kTooManySpreadElements,
                "spread has more than " + std::to_string(kMaxSpreadElements) + " elements");
  }
  std::vector<std::vector<Elem>> reps;
  for (std::size_t last = 0; last < r; ++last) {
    std::vector<Elem> v(r, 0);
    v[last] = 1;
    // Odometer over the free coordinates 0 .. last-1.
    for (;;) {
      reps.push_back(v);
      std::size_t k = 0;
      while (k < last && ++v[k] == f.order()) v[k++] = 0;
      if (k == last) break;
    }
  }
  std::sort(reps.begin(), reps.end());

  VerifyResult res;
  for (const auto& v : reps) {
    std::vector<std::vector<Elem>> elem;
    for (Elem a : f.basis()) {
      std::vector<Elem> w(r);
      for (std::size_t i = 0; i < r; ++i) w[i] = f.mul(a, v[i]);
      elem.push_back(std::move(w));
    }
    ++res.elements;
    const bool in_u = meet_dim(f, elem, b.u_basis) > 0;
    const bool in_w = !b.w_basis.empty() && meet_dim(f, elem, b.w_basis) > 0;
    res.meets_u += in_u;
    res.meets_w += in_w;
    if (in_u && in_w && res.ok) {
      res.ok = false;
      res.violating = v;
    }
  }
  return res;
}

}  // namespace sfi

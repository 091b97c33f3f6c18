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

#include "sfi/linmap.hpp"

#include <sstream>
#include <utility>

namespace sfi {

LinMap::LinMap(FieldRef ctx, std::vector<Elem> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_->n()) {
    throw Error(ErrorCode::kDimensionMismatch, "linearized polynomial needs n coefficients");
  }
  for (Elem c : coeffs_) {
    if (!ctx_->valid(c)) throw Error(ErrorCode::kInvalidArgument, "coefficient out of range");
  }
}

LinMap LinMap::identity(FieldRef ctx) { return monomial(std::move(ctx), 1, 0); }

LinMap LinMap::zero(FieldRef ctx) {
  const unsigned n = ctx->n();
  return LinMap(std::move(ctx), std::vector<Elem>(n, 0));
}

LinMap LinMap::monomial(FieldRef ctx, Elem a, unsigned k) {
  std::vector<Elem> c(ctx->n(), 0);
  c[k % ctx->n()] = a;
  return LinMap(std::move(ctx), std::move(c));
}

Matrix moore_matrix(const FieldRef& ctx, std::span<const Elem> basis) {
  const unsigned n = ctx->n();
  Matrix m(ctx, basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (unsigned j = 0; j < n; ++j) m(i, j) = ctx->frobenius(basis[i], j);
  }
  return m;
}

LinMap LinMap::interpolate(FieldRef ctx, std::span<const Elem> basis,
                           std::span<const Elem> values) {
  const unsigned n = ctx->n();
  if (basis.size() != n || values.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "interpolation needs n points");
  }
  Matrix moore = moore_matrix(ctx, basis);
  if (matrix_rank(moore) != n) {
    throw Error(ErrorCode::kNotABasis, "interpolation points are F_q-dependent");
  }
  return LinMap(std::move(ctx), solve(moore, values));
}

LinMap LinMap::interpolate(FieldRef ctx, std::span<const Elem> values) {
  const auto& b = ctx->basis();
  return interpolate(ctx, b, values);
}

Elem LinMap::operator()(Elem x) const noexcept {
  const FieldCtx& f = *ctx_;
  if (x == 0) return 0;
  // x^(q^j) via the log table directly.
  Elem acc = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) acc = f.add(acc, f.mul(coeffs_[j], f.frobenius(x, static_cast<unsigned>(j))));
  }
  return acc;
}

Matrix LinMap::dickson_matrix() const {
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  Matrix a(ctx_, n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) a(i, j) = f.frobenius(coeffs_[(j + n - i) % n], i);
  }
  return a;
}

bool LinMap::is_invertible() const { return matrix_rank(dickson_matrix()) == ctx_->n(); }

LinMap LinMap::adjoint() const {
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  std::vector<Elem> c(n);
  for (unsigned j = 0; j < n; ++j) c[j] = f.frobenius(coeffs_[(n - j) % n], j);
  return LinMap(ctx_, std::move(c));
}

LinMap LinMap::inverse() const {
  if (!is_invertible()) throw Error(ErrorCode::kSingularMap, "map is not invertible");
  const auto& b = ctx_->basis();
  std::vector<Elem> images(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) images[i] = (*this)(b[i]);
  return interpolate(ctx_, images, b);
}

std::vector<std::vector<unsigned>> LinMap::fp_matrix() const {
  const FieldCtx& f = *ctx_;
  const unsigned d = f.degree();
  std::vector<std::vector<unsigned>> m(d, std::vector<unsigned>(d, 0));
  Elem tpow = 1;
  for (unsigned i = 0; i < d; ++i) {
    const auto digits = f.digits((*this)(tpow));
    for (unsigned r = 0; r < d; ++r) m[r][i] = digits[r];
    tpow *= f.p();  // t^i has code p^i while i < en
  }
  return m;
}

std::string LinMap::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) os << ' ';
    os << coeffs_[j];
  }
  return os.str();
}

LinMap LinMap::parse(FieldRef ctx, const std::string& text) {
  std::istringstream is(text);
  std::vector<Elem> c;
  long long v;
  while (is >> v) {
    if (v < 0 || !ctx->valid(static_cast<Elem>(v))) {
      throw ParseError(0, "element code " + std::to_string(v) + " out of range");
    }
    c.push_back(static_cast<Elem>(v));
  }
  if (!is.eof()) throw ParseError(0, "non-numeric token in linear map");
  if (c.size() != ctx->n()) {
    throw ParseError(0, "linear map needs " + std::to_string(ctx->n()) + " coefficients, got " +
                            std::to_string(c.size()));
  }
  return LinMap(std::move(ctx), std::move(c));
}

LinMap compose(const LinMap& f, const LinMap& g) {
  const FieldCtx& fc = *f.ctx();
  const unsigned n = fc.n();
  std::vector<Elem> c(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      const Elem t = fc.mul(f.coeff(i), fc.frobenius(g.coeff(j), i));
      c[(i + j) % n] = fc.add(c[(i + j) % n], t);
    }
  }
  return LinMap(f.ctx(), std::move(c));
}

LinMap operator+(const LinMap& f, const LinMap& g) {
  const FieldCtx& fc = *f.ctx();
  std::vector<Elem> c(fc.n());
  for (unsigned j = 0; j < fc.n(); ++j) c[j] = fc.add(f.coeff(j), g.coeff(j));
  return LinMap(f.ctx(), std::move(c));
}

}  // namespace sfi

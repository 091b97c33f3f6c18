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

#include "sfi/matrix.hpp"

#include <string>
#include <utility>

namespace sfi {
namespace {

struct Echelon {
  std::vector<Elem> m;              // reduced row echelon form, row-major
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan to reduced row echelon form; pivots normalised to 1.
Echelon rref(const FieldCtx& f, std::vector<Elem> m, std::size_t rows, std::size_t cols) {
  Echelon out;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    const Elem s = f.inv(m[rank * cols + col]);
    for (std::size_t j = 0; j < cols; ++j) m[rank * cols + j] = f.mul(m[rank * cols + j], s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Elem lead = m[r * cols + col];
      if (lead == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        m[r * cols + j] = f.sub(m[r * cols + j], f.mul(lead, m[rank * cols + j]));
      }
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

Matrix::Matrix(FieldRef ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldRef ctx, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix data has wrong length");
  }
}

Matrix Matrix::identity(FieldRef ctx, std::size_t n) {
  Matrix m(std::move(ctx), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum of different shapes");
  }
  Matrix s(ctx_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] = ctx_->add(data_[k], o.data_[k]);
  return s;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product shapes");
  const FieldCtx& f = *ctx_;
  Matrix p(ctx_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) = f.add(p(i, j), f.mul(a, o(k, j)));
    }
  }
  return p;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out(ctx_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = ctx_->mul(s, data_[k]);
  return out;
}

Matrix Matrix::frobenius(unsigned k) const {
  Matrix out(ctx_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ctx_->frobenius(data_[i], k);
  return out;
}

bool Matrix::is_zero() const {
  for (Elem v : data_) {
    if (v != 0) return false;
  }
  return true;
}

std::size_t matrix_rank(const Matrix& a) {
  std::vector<Elem> buf = a.data();
  return detail::rank_in_place(a.field(), buf.data(), a.rows(), a.cols(), a.rows() + a.cols());
}

RankFactorization rank_factor(const Matrix& a) {
  // a = C * F where F holds the nonzero rows of rref(a) and C the pivot
  // columns of a itself.
  const FieldCtx& f = a.field();
  Echelon e = rref(f, a.data(), a.rows(), a.cols());
  RankFactorization out;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    std::vector<Elem> u(a.rows()), v(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) u[i] = a(i, e.pivots[k]);
    for (std::size_t j = 0; j < a.cols(); ++j) v[j] = e.m[k * a.cols() + j];
    out.u.push_back(std::move(u));
    out.v.push_back(std::move(v));
  }
  return out;
}

Matrix reconstruct(const FieldRef& ctx, const RankFactorization& fac, std::size_t rows,
                   std::size_t cols) {
  Matrix m(ctx, rows, cols);
  for (std::size_t k = 0; k < fac.rank(); ++k) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = ctx->add(m(i, j), ctx->mul(fac.u[k][i], fac.v[k][j]));
      }
    }
  }
  return m;
}

std::vector<Elem> solve(const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::kDimensionMismatch, "rhs length");
  const FieldCtx& f = a.field();
  const std::size_t cols = a.cols() + 1;
  std::vector<Elem> aug(a.rows() * cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug[i * cols + j] = a(i, j);
    aug[i * cols + a.cols()] = b[i];
  }
  Echelon e = rref(f, std::move(aug), a.rows(), cols);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    throw Error(ErrorCode::kNoSolution,
                "inconsistent system: coefficient rank " + std::to_string(e.pivots.size() - 1) +
                    " of " + std::to_string(a.cols()) + " columns, augmented rank " +
                    std::to_string(e.pivots.size()));
  }
  std::vector<Elem> x(a.cols(), 0);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.m[k * cols + a.cols()];
  return x;
}

std::vector<std::vector<Elem>> null_space(const Matrix& a) {
  const FieldCtx& f = a.field();
  Echelon e = rref(f, a.data(), a.rows(), a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> x(a.cols(), 0);
    x[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      x[e.pivots[k]] = f.neg(e.m[k * a.cols() + free]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t fq_rank(const FieldCtx& ctx, const std::vector<std::vector<Elem>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = ctx.n();
  const std::size_t cols = vectors.front().size() * n;
  std::vector<Elem> buf;
  buf.reserve(vectors.size() * cols);
  for (const auto& v : vectors) {
    if (v.size() * n != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged vectors");
    for (Elem x : v) {
      const auto c = ctx.coordinates(x);
      buf.insert(buf.end(), c.begin(), c.end());
    }
  }
  return detail::rank_in_place(ctx, buf.data(), vectors.size(), cols, vectors.size() + cols);
}

std::size_t fp_rank(std::vector<std::vector<unsigned>> m, unsigned p) {
  auto inv = [p](unsigned a) {
    unsigned r = 1;
    for (unsigned k = 0; k < p - 2; ++k) r = r * a % p;
    return r;
  };
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const unsigned s = inv(m[rank][col] % p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const unsigned lead = m[r][col] % p * s % p;
      if (lead == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        m[r][j] = (m[r][j] + p * p - lead * (m[rank][j] % p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace sfi

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

// Exact dense linear algebra over F_{q^n}. Matrices in this project are tiny
// (the semifield dimension n is at most a handful), so everything is plain
// Gaussian elimination on a row-major buffer.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sfi/gf.hpp"

namespace sfi {

class Matrix {
 public:
  Matrix(FieldRef ctx, std::size_t rows, std::size_t cols);
  Matrix(FieldRef ctx, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(FieldRef ctx, std::size_t n);

  const FieldRef& ctx() const noexcept { return ctx_; }
  const FieldCtx& field() const noexcept { return *ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(Elem s) const;
  /// Entrywise a -> a^(q^k).
  Matrix frobenius(unsigned k) const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  FieldRef ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

std::size_t matrix_rank(const Matrix& a);

/// Rank-one decomposition a = sum_i u_i^T v_i with the minimal number of terms.
struct RankFactorization {
  std::vector<std::vector<Elem>> u;  // each of length rows
  std::vector<std::vector<Elem>> v;  // each of length cols
  std::size_t rank() const noexcept { return u.size(); }
};

RankFactorization rank_factor(const Matrix& a);
Matrix reconstruct(const FieldRef& ctx, const RankFactorization& f, std::size_t rows,
                   std::size_t cols);

/// Solves a x = b. Throws NoSolution reporting the rank deficiency when the
/// system is inconsistent; an underdetermined system yields one particular
/// solution (free variables set to zero).
std::vector<Elem> solve(const Matrix& a, std::span<const Elem> b);

/// Basis of the right null space {x : a x = 0}.
std::vector<std::vector<Elem>> null_space(const Matrix& a);

/// Rank over F_q of vectors with entries in F_{q^n}; every entry is expanded
/// into its n F_q-coordinates first.
std::size_t fq_rank(const FieldCtx& ctx, const std::vector<std::vector<Elem>>& vectors);

/// Rank over F_p of an integer matrix with entries in [0, p).
std::size_t fp_rank(std::vector<std::vector<unsigned>> rows, unsigned p);

namespace detail {

/// In-place elimination on a row-major rows x cols buffer. Stops early and
/// returns cap + 1 as soon as more than `cap` pivots have been found.
template <bool kChar2>
std::size_t rank_in_place(const FieldCtx& f, Elem* m, std::size_t rows, std::size_t cols,
                          std::size_t cap) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t j = col; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    }
    const Elem pinv = f.inv(m[rank * cols + col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Elem lead = m[r * cols + col];
      if (lead == 0) continue;
      const Elem factor = f.mul(lead, pinv);
      for (std::size_t j = col; j < cols; ++j) {
        const Elem t = f.mul(factor, m[rank * cols + j]);
        if constexpr (kChar2) {
          m[r * cols + j] ^= t;
        } else {
          m[r * cols + j] = f.sub(m[r * cols + j], t);
        }
      }
    }
    ++rank;
    if (rank > cap) return cap + 1;
  }
  return rank;
}

inline std::size_t rank_in_place(const FieldCtx& f, Elem* m, std::size_t rows, std::size_t cols,
                                 std::size_t cap) {
  return f.char2() ? rank_in_place<true>(f, m, rows, cols, cap)
                   : rank_in_place<false>(f, m, rows, cols, cap);
}

}  // namespace detail

}  // namespace sfi

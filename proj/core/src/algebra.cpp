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

#include "sfi/algebra.hpp"

#include <random>
#include <string>
#include <utility>

#include "sfi/belrank.hpp"

namespace sfi {
namespace {

std::uint64_t pow_u64(unsigned p, unsigned k) {
  std::uint64_t r = 1;
  while (k--) r *= p;
  return r;
}

// F_q-dimension of {a : row(a) = 0} for a linear a -> row(a), given the rows
// of the basis images.
unsigned kernel_dim(const FieldCtx& f, const std::vector<std::vector<Elem>>& rows) {
  return f.n() - static_cast<unsigned>(fq_rank(f, rows));
}

}  // namespace

std::uint64_t NucleiReport::left_size() const { return pow_u64(p, left_exp); }
std::uint64_t NucleiReport::middle_size() const { return pow_u64(p, middle_exp); }
std::uint64_t NucleiReport::right_size() const { return pow_u64(p, right_exp); }
std::uint64_t NucleiReport::centre_size() const { return pow_u64(p, centre_exp); }

Algebra::Algebra(FieldRef ctx, Matrix coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != ctx_->n() || coeffs_.cols() != ctx_->n()) {
    throw Error(ErrorCode::kDimensionMismatch, "coefficient matrix must be n x n");
  }
  for (Elem c : coeffs_.data()) {
    if (!ctx_->valid(c)) throw Error(ErrorCode::kInvalidArgument, "coefficient out of range");
  }
}

Algebra::Algebra(Matrix coeffs) : Algebra(coeffs.ctx(), std::move(coeffs)) {}

Algebra Algebra::from_bilinear(FieldRef ctx, const std::function<Elem(Elem, Elem)>& mul) {
  // With Mo the Moore matrix of the basis, T = Mo C Mo^T on basis pairs.
  const unsigned n = ctx->n();
  const auto& b = ctx->basis();
  const Matrix moore = moore_matrix(ctx, b);
  Matrix x(ctx, n, n);
  std::vector<Elem> col(n);
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned r = 0; r < n; ++r) col[r] = mul(b[r], b[s]);
    const auto sol = solve(moore, col);
    for (unsigned r = 0; r < n; ++r) x(r, s) = sol[r];
  }
  Matrix c(ctx, n, n);
  for (unsigned j = 0; j < n; ++j) {
    const auto row = solve(moore, x.row(j));
    for (unsigned i = 0; i < n; ++i) c(j, i) = row[i];
  }
  return Algebra(std::move(ctx), std::move(c));
}

Algebra Algebra::from_table(const MultiplicationTable& t) {
  const FieldCtx& f = *t.ctx;
  const Elem order = f.order();
  if (t.entries.size() != std::size_t{order} * order) {
    throw Error(ErrorCode::kSizeMismatch, "table must have q^n x q^n entries");
  }
  for (Elem v : t.entries) {
    if (!f.valid(v)) throw Error(ErrorCode::kSizeMismatch, "table entry out of range");
  }
  auto additive_at = [&](Elem x1, Elem x2, Elem y) {
    const Elem s = f.add(x1, x2);
    return t(s, y) == f.add(t(x1, y), t(x2, y)) && t(y, s) == f.add(t(y, x1), t(y, x2));
  };
  if (order <= 256) {
    for (Elem x1 = 0; x1 < order; ++x1) {
      for (Elem x2 = x1; x2 < order; ++x2) {
        for (Elem y = 0; y < order; ++y) {
          if (!additive_at(x1, x2, y)) {
            throw Error(ErrorCode::kNotBilinear, "table is not additive at (" +
                                                     std::to_string(x1) + "+" +
                                                     std::to_string(x2) + ", " +
                                                     std::to_string(y) + ")");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, order - 1);
    for (int k = 0; k < 10000; ++k) {
      const Elem x1 = pick(rng), x2 = pick(rng), y = pick(rng);
      if (!additive_at(x1, x2, y)) {
        throw Error(ErrorCode::kNotBilinear, "table is not additive (sampled triple)");
      }
    }
  }
  const auto scalars = f.subfield_elements();
  for (Elem lam : scalars) {
    for (Elem b : f.basis()) {
      for (Elem y : f.basis()) {
        const Elem lb = f.mul(lam, b);
        if (t(lb, y) != f.mul(lam, t(b, y)) || t(y, lb) != f.mul(lam, t(y, b))) {
          throw Error(ErrorCode::kNotBilinear, "table is not F_q-homogeneous");
        }
      }
    }
  }
  Algebra a = from_bilinear(t.ctx, [&](Elem x, Elem y) { return t(x, y); });
  const MultiplicationTable back = a.table();
  for (std::size_t k = 0; k < back.entries.size(); ++k) {
    if (back.entries[k] != t.entries[k]) {
      throw Error(ErrorCode::kNotBilinear,
                  "recovered coefficients do not reproduce entry (" + std::to_string(k / order) +
                      ", " + std::to_string(k % order) + ")");
    }
  }
  return a;
}

Elem Algebra::multiply(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  Elem acc = 0;
  for (unsigned i = 0; i < n; ++i) {
    const Elem xi = f.frobenius(x, i);
    for (unsigned j = 0; j < n; ++j) {
      const Elem c = coeffs_(i, j);
      if (c != 0) acc = f.add(acc, f.mul(c, f.mul(xi, f.frobenius(y, j))));
    }
  }
  return acc;
}

Elem Algebra::multiply_matrix(Elem x, Elem y) const {
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  Matrix xv(ctx_, 1, n), yv(ctx_, n, 1);
  for (unsigned i = 0; i < n; ++i) {
    xv(0, i) = f.frobenius(x, i);
    yv(i, 0) = f.frobenius(y, i);
  }
  return (xv * coeffs_ * yv)(0, 0);
}

LinMap Algebra::right_mult(Elem y) const {
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  std::vector<Elem> c(n, 0);
  for (unsigned j = 0; j < n; ++j) {
    const Elem yj = f.frobenius(y, j);
    for (unsigned i = 0; i < n; ++i) c[i] = f.add(c[i], f.mul(coeffs_(i, j), yj));
  }
  return LinMap(ctx_, std::move(c));
}

LinMap Algebra::left_mult(Elem y) const {
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  std::vector<Elem> c(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    const Elem yi = f.frobenius(y, i);
    for (unsigned j = 0; j < n; ++j) c[j] = f.add(c[j], f.mul(coeffs_(i, j), yi));
  }
  return LinMap(ctx_, std::move(c));
}

bool Algebra::is_semifield() const {
  // R_{lambda y} = lambda R_y for lambda in F_q, so one y per F_q^*-coset
  // suffices: logs in [0, (q^n - 1)/(q - 1)) hit every coset exactly once.
  const FieldCtx& f = *ctx_;
  const Elem reps = f.group_order() / (f.q() - 1);
  for (Elem k = 0; k < reps; ++k) {
    if (!right_mult(f.exp(k)).is_invertible()) return false;
  }
  return true;
}

NucleiReport Algebra::nuclei() const {
  if (!is_semifield()) throw Error(ErrorCode::kNotASemifield, "nuclei need a semifield");
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();

  // Kaplansky: x * y = S(R_1^{-1} x, L_1^{-1} y) has identity S(1, 1), and its
  // nuclei are isotopy invariants of S.
  const LinMap fr = right_mult(1).inverse();
  const LinMap gl = left_mult(1).inverse();
  const Algebra k(ctx_, fr.dickson_matrix().transpose() * coeffs_ * gl.dickson_matrix());

  const auto& b = f.basis();
  std::vector<Elem> prod(n * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) prod[i * n + j] = k.multiply(b[i], b[j]);
  }

  std::vector<std::vector<Elem>> left, middle, right, centre;
  for (unsigned a = 0; a < n; ++a) {
    std::vector<Elem> rl, rm, rr, rc;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        const Elem x = b[i], y = b[j];
        rl.push_back(f.sub(k.multiply(prod[a * n + i], y), k.multiply(b[a], prod[i * n + j])));
        rm.push_back(f.sub(k.multiply(prod[i * n + a], y), k.multiply(x, prod[a * n + j])));
        rr.push_back(f.sub(k.multiply(prod[i * n + j], b[a]), k.multiply(x, prod[j * n + a])));
      }
      rc.push_back(f.sub(prod[a * n + i], prod[i * n + a]));
    }
    std::vector<Elem> all = rl;
    all.insert(all.end(), rm.begin(), rm.end());
    all.insert(all.end(), rr.begin(), rr.end());
    all.insert(all.end(), rc.begin(), rc.end());
    left.push_back(std::move(rl));
    middle.push_back(std::move(rm));
    right.push_back(std::move(rr));
    centre.push_back(std::move(all));
  }

  NucleiReport rep;
  rep.p = f.p();
  const unsigned dl = kernel_dim(f, left), dm = kernel_dim(f, middle), dr = kernel_dim(f, right);
  const unsigned dc = kernel_dim(f, centre);
  rep.left_exp = f.e() * dl;
  rep.middle_exp = f.e() * dm;
  rep.right_exp = f.e() * dr;
  rep.centre_exp = f.e() * dc;
  rep.l = n / dl;
  rep.m = n / dm;
  rep.r = n / dr;
  return rep;
}

Algebra Algebra::dual() const { return Algebra(ctx_, coeffs_.transpose()); }

Algebra Algebra::transpose() const {
  // Right multiplication of the result by y is adjoint(R_y); each coefficient
  // of that adjoint is an F_q-linear function of y, interpolated on the basis.
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  const auto& b = f.basis();
  std::vector<std::vector<Elem>> values(n, std::vector<Elem>(n));
  for (unsigned s = 0; s < n; ++s) {
    const LinMap adj = right_mult(b[s]).adjoint();
    for (unsigned l = 0; l < n; ++l) values[l][s] = adj.coeff(l);
  }
  Matrix c(ctx_, n, n);
  for (unsigned l = 0; l < n; ++l) {
    const LinMap row = LinMap::interpolate(ctx_, b, values[l]);
    for (unsigned j = 0; j < n; ++j) c(l, j) = row.coeff(j);
  }
  return Algebra(ctx_, std::move(c));
}

Algebra Algebra::dtd() const {
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  Matrix c(ctx_, n, n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      c(a, b) = f.frobenius(coeffs_((a + n - b) % n, (n - b) % n), b);
    }
  }
  return Algebra(ctx_, std::move(c));
}

Algebra Algebra::knuth(const std::string& word) const {
  Algebra cur = *this;
  for (char ch : word) {
    if (ch == 'd') {
      cur = cur.dual();
    } else if (ch == 't') {
      cur = cur.transpose();
    } else {
      throw Error(ErrorCode::kInvalidArgument, std::string("Knuth word letter '") + ch +
                                                   "' is not d or t");
    }
  }
  return cur;
}

Algebra Algebra::apply_isotopy(const LinMap& fm, const LinMap& gm, const LinMap& hm) const {
  if (!fm.is_invertible() || !gm.is_invertible() || !hm.is_invertible()) {
    throw Error(ErrorCode::kSingularMap, "isotopy maps must be invertible");
  }
  // S(F x, G y) has matrix A_F^T C A_G; post-composing with H mixes the
  // Frobenius shifts of that matrix.
  const Matrix inner = fm.dickson_matrix().transpose() * coeffs_ * gm.dickson_matrix();
  const unsigned n = ctx_->n();
  Matrix out(ctx_, n, n);
  for (unsigned k = 0; k < n; ++k) {
    if (hm.coeff(k) == 0) continue;
    out = out + theta_shift(inner, k).scaled(hm.coeff(k));
  }
  return Algebra(ctx_, std::move(out));
}

Algebra Algebra::rebase(unsigned new_e) const {
  const FieldCtx& f = *ctx_;
  if (new_e == 0 || f.e() % new_e != 0) {
    throw Error(ErrorCode::kNotASubfield, "F_{p^" + std::to_string(new_e) +
                                              "} is not a subfield of F_{p^" +
                                              std::to_string(f.e()) + "}");
  }
  if (new_e == f.e()) return *this;
  // Same degree, same modulus: element codes coincide in both contexts.
  FieldRef finer = FieldCtx::create(f.p(), new_e, f.n() * (f.e() / new_e), f.modulus());
  return from_bilinear(finer, [this](Elem x, Elem y) { return multiply(x, y); });
}

MultiplicationTable Algebra::table() const {
  const FieldCtx& f = *ctx_;
  const unsigned n = f.n();
  const Elem order = f.order();
  std::vector<Elem> frob(std::size_t{order} * n);
  for (Elem x = 0; x < order; ++x) {
    for (unsigned i = 0; i < n; ++i) frob[std::size_t{x} * n + i] = f.frobenius(x, i);
  }
  MultiplicationTable t{ctx_, std::vector<Elem>(std::size_t{order} * order)};
  std::vector<Elem> cy(n);
  for (Elem y = 0; y < order; ++y) {
    // cy = C * yvec^T, then each row x is a dot product with xvec.
    for (unsigned i = 0; i < n; ++i) {
      Elem s = 0;
      for (unsigned j = 0; j < n; ++j) s = f.add(s, f.mul(coeffs_(i, j), frob[std::size_t{y} * n + j]));
      cy[i] = s;
    }
    for (Elem x = 0; x < order; ++x) {
      Elem s = 0;
      for (unsigned i = 0; i < n; ++i) s = f.add(s, f.mul(frob[std::size_t{x} * n + i], cy[i]));
      t.entries[std::size_t{x} * order + y] = s;
    }
  }
  return t;
}

}  // namespace sfi

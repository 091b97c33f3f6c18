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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "sfi/gf.hpp"
#include "sfi/matrix.hpp"

namespace sfi {
namespace {

using Poly = std::vector<unsigned>;  // ascending, trimmed

// Independent schoolbook polynomial arithmetic over F_p.
Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  a = trim(a);
  const unsigned lead_inv = [&] {
    for (unsigned x = 1; x < p; ++x) {
      if (x * m.back() % p == 1) return x;
    }
    return 0u;
  }();
  while (a.size() >= m.size()) {
    const unsigned factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p * p - factor * m[i]) % p;
    }
    a = trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return trim(r);
}

Poly from_code(std::uint64_t code, unsigned p) {
  Poly a;
  while (code) {
    a.push_back(static_cast<unsigned>(code % p));
    code /= p;
  }
  return a;
}

std::uint64_t to_code(const Poly& a, unsigned p) {
  std::uint64_t c = 0;
  for (std::size_t i = a.size(); i-- > 0;) c = c * p + a[i];
  return c;
}

bool brute_irreducible(const Poly& m, unsigned p) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t lo = 1, hi = 1;
    for (std::size_t i = 0; i < d; ++i) lo *= p;
    hi = lo * p;
    for (std::uint64_t c = lo; c < hi; ++c) {  // all polys of degree d (any lead)
      if (poly_mod(m, from_code(c, p), p).empty()) return false;
    }
  }
  return true;
}

bool brute_primitive(const Poly& m, unsigned p) {
  if (!brute_irreducible(m, p)) return false;
  std::uint64_t group = 1;
  for (std::size_t i = 1; i < m.size(); ++i) group *= p;
  group -= 1;
  const Poly t{0, 1};
  Poly x{1};
  for (std::uint64_t k = 1; k <= group; ++k) {
    x = poly_mod(poly_mul(x, t, p), m, p);
    if (x == Poly{1}) return k == group;
  }
  return false;
}

Poly first_primitive(unsigned p, unsigned deg) {
  std::uint64_t top = 1;
  for (unsigned i = 0; i < deg; ++i) top *= p;
  for (std::uint64_t low = 0; low < top; ++low) {
    Poly m = from_code(low, p);
    m.resize(deg, 0);
    m.push_back(1);
    if (brute_primitive(m, p)) return m;
  }
  return {};
}

TEST(FieldCtx, SmallestPrimitiveQuarticOverF2) {
  const Poly m = first_primitive(2, 4);
  EXPECT_EQ(m, (Poly{1, 1, 0, 0, 1}));
  EXPECT_EQ(to_code(m, 2), 19u);
  EXPECT_EQ(FieldCtx::create(2, 1, 4)->modulus(), m);
}

TEST(FieldCtx, ModulusMatchesBruteForceOracle) {
  const std::vector<std::array<unsigned, 3>> cases{
      {2, 1, 3}, {2, 1, 5}, {2, 2, 2}, {2, 2, 3}, {3, 1, 2}, {3, 1, 4}, {3, 1, 5}, {5, 1, 2}, {5, 1, 3}, {7, 1, 2}};
  for (const auto& [p, e, n] : cases) {
    const Poly m = first_primitive(p, e * n);
    EXPECT_EQ(FieldCtx::create(p, e, n)->modulus(), m) << p << " " << e << " " << n;
  }
}

TEST(FieldCtx, IrreducibilityTestsAgreeWithBruteForce) {
  for (unsigned p : {2u, 3u}) {
    for (unsigned deg = 1; deg <= 4; ++deg) {
      std::uint64_t top = 1;
      for (unsigned i = 0; i < deg; ++i) top *= p;
      for (std::uint64_t low = 0; low < top; ++low) {
        Poly m = from_code(low, p);
        m.resize(deg, 0);
        m.push_back(1);
        EXPECT_EQ(is_irreducible(p, m), brute_irreducible(m, p));
        EXPECT_EQ(is_primitive(p, m), brute_primitive(m, p));
      }
    }
  }
}

TEST(FieldCtx, PrimeFieldTower) {
  auto f = FieldCtx::create(3, 1, 1);
  EXPECT_EQ(f->order(), 3u);
  EXPECT_EQ(f->q(), 3u);
  EXPECT_EQ(f->modulus().size(), 2u);
  EXPECT_EQ(f->mul(2, 2), 1u);
  EXPECT_EQ(f->frobenius(2, 1), 2u);
}

TEST(FieldCtx, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code_of([] { FieldCtx::create(4, 1, 1); }), ErrorCode::kNonPrime);
  EXPECT_EQ(code_of([] { FieldCtx::create(2, 1, 21); }), ErrorCode::kTooLarge);
  EXPECT_EQ(code_of([] { FieldCtx::create(2, 1, 4, {1, 1, 1, 1, 1}); }), ErrorCode::kInvalidModulus);
  EXPECT_EQ(code_of([] { FieldCtx::create(2, 1, 4)->inv(0); }), ErrorCode::kDivisionByZero);
}

TEST(Arith, SpecificProductInF16) {
  auto f = FieldCtx::create(2, 1, 4);
  // t * t^3 = t^4 = t + 1
  EXPECT_EQ(f->mul(2, 8), 3u);
  const Poly prod = poly_mod(poly_mul(from_code(2, 2), from_code(8, 2), 2), f->modulus(), 2);
  EXPECT_EQ(to_code(prod, 2), 3u);
}

TEST(Arith, TablePathMatchesPolynomialOracle) {
  std::mt19937_64 rng(1);
  for (const auto& [p, e, n] : std::vector<std::array<unsigned, 3>>{{2, 1, 4}, {2, 2, 4}, {3, 1, 5}, {5, 1, 3}, {2, 1, 10}}) {
    auto f = FieldCtx::create(p, e, n);
    std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
    for (int i = 0; i < 10000; ++i) {
      const Elem a = pick(rng), b = pick(rng);
      const Poly pa = from_code(a, p), pb = from_code(b, p);
      const Poly prod = poly_mod(poly_mul(pa, pb, p), f->modulus(), p);
      ASSERT_EQ(f->mul(a, b), to_code(prod, p));
      Poly sum(std::max(pa.size(), pb.size()), 0);
      for (std::size_t k = 0; k < sum.size(); ++k) {
        sum[k] = ((k < pa.size() ? pa[k] : 0) + (k < pb.size() ? pb[k] : 0)) % p;
      }
      ASSERT_EQ(f->add(a, b), to_code(trim(sum), p));
      ASSERT_EQ(f->mul_poly(a, b), f->mul(a, b));
      ASSERT_EQ(f->add_poly(a, b), f->add(a, b));
      ASSERT_EQ(f->sub(f->add(a, b), b), a);
    }
  }
}

TEST(Arith, FieldAxiomsExhaustiveF81) {
  auto f = FieldCtx::create(3, 1, 4);
  for (Elem a = 0; a < f->order(); ++a) {
    EXPECT_EQ(f->mul(a, 0), 0u);
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    if (a != 0) {
      EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      EXPECT_EQ(f->exp(f->log(a)), a);
      EXPECT_EQ(f->div(a, a), 1u);
    }
    EXPECT_EQ(f->pow(a, 81), a);
    EXPECT_EQ(f->from_digits(f->digits(a)), a);
  }
}

TEST(Frobenius, OrderAndFixedField) {
  std::mt19937_64 rng(2);
  for (const auto& [p, e, n] : std::vector<std::array<unsigned, 3>>{{2, 1, 4}, {2, 2, 4}, {3, 2, 2}, {5, 1, 3}}) {
    auto f = FieldCtx::create(p, e, n);
    std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
    for (int i = 0; i < 100; ++i) {
      const Elem a = pick(rng), b = pick(rng);
      EXPECT_EQ(f->frobenius(a, 0), a);
      Elem x = a;
      for (unsigned k = 0; k < n; ++k) x = f->frobenius(x, 1);
      EXPECT_EQ(x, a);
      EXPECT_EQ(f->frobenius(a, 1), f->pow(a, f->q()));
      EXPECT_EQ(f->frobenius(f->mul(a, b), 1), f->mul(f->frobenius(a, 1), f->frobenius(b, 1)));
      EXPECT_EQ(f->frobenius(f->add(a, b), 1), f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
    }
    std::size_t fixed = 0;
    for (Elem a = 0; a < f->order(); ++a) fixed += f->in_subfield(a);
    EXPECT_EQ(fixed, f->q());
    EXPECT_EQ(f->subfield_elements().size(), f->q());
  }
}

TEST(Frobenius, F256OverF4HasFourFixedPoints) {
  auto f = FieldCtx::create(2, 2, 4);
  std::size_t fixed = 0;
  for (Elem a = 0; a < f->order(); ++a) fixed += f->pow(a, 4) == a;
  EXPECT_EQ(fixed, 4u);
}

TEST(Trace, ValuesInF16) {
  auto f = FieldCtx::create(2, 1, 4);
  EXPECT_EQ(f->trace(0), 0u);
  EXPECT_EQ(f->trace(1), 0u);
  // Tr(t) = t + t^2 + t^4 + t^8 by repeated squaring of polynomials.
  const Poly& m = f->modulus();
  Poly x{0, 1}, acc;
  for (int k = 0; k < 4; ++k) {
    Poly s(std::max(acc.size(), x.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] = ((i < acc.size() ? acc[i] : 0) + (i < x.size() ? x[i] : 0)) % 2;
    }
    acc = trim(s);
    x = poly_mod(poly_mul(x, x, 2), m, 2);
  }
  EXPECT_EQ(f->trace(2), to_code(acc, 2));
}

TEST(Trace, LinearSurjectiveIntoSubfield) {
  for (const auto& [p, e, n] : std::vector<std::array<unsigned, 3>>{{2, 1, 4}, {2, 2, 3}, {3, 1, 3}, {3, 2, 2}}) {
    auto f = FieldCtx::create(p, e, n);
    std::vector<std::size_t> hits(f->order(), 0);
    for (Elem a = 0; a < f->order(); ++a) {
      const Elem t = f->trace(a);
      ASSERT_TRUE(f->in_subfield(t));
      ++hits[t];
      Elem s = 0;
      for (unsigned k = 0; k < n; ++k) s = f->add(s, f->frobenius(a, k));
      EXPECT_EQ(t, s);
    }
    for (Elem lam : f->subfield_elements()) {
      EXPECT_EQ(hits[lam], f->order() / f->q());
      EXPECT_EQ(f->trace(f->mul(lam, 7 % f->order())), f->mul(lam, f->trace(7 % f->order())));
    }
  }
}

TEST(Basis, GramMatrixNonDegenerateAndDualBasis) {
  for (const auto& [p, e, n] : std::vector<std::array<unsigned, 3>>{{2, 1, 4}, {2, 2, 3}, {3, 1, 5}, {5, 1, 2}}) {
    auto f = FieldCtx::create(p, e, n);
    const auto& b = f->basis();
    const auto& d = f->dual_basis();
    Matrix gram(f, n, n);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        gram(i, j) = f->trace(f->mul(b[i], b[j]));
        EXPECT_EQ(gram(i, j), f->trace(f->mul(b[j], b[i])));
        EXPECT_EQ(f->trace(f->mul(b[i], d[j])), i == j ? 1u : 0u);
      }
    }
    EXPECT_EQ(matrix_rank(gram), n);
    for (Elem a = 0; a < f->order(); ++a) {
      const auto c = f->coordinates(a);
      Elem back = 0;
      for (unsigned i = 0; i < n; ++i) {
        ASSERT_TRUE(f->in_subfield(c[i]));
        back = f->add(back, f->mul(c[i], b[i]));
      }
      ASSERT_EQ(back, a);
    }
  }
}

}  // namespace
}  // namespace sfi

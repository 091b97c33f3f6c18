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

#include <set>

#include "sfi/belrank.hpp"
#include "sfi/families.hpp"
#include "support.hpp"

namespace sfi {
namespace {

// {x^(q^k - 1) y^(q^m - 1)} together with 0, by direct powering.
std::set<Elem> product_set(const FieldCtx& f, unsigned k, unsigned m) {
  std::uint64_t a = 1, b = 1;
  for (unsigned i = 0; i < k; ++i) a *= f.q();
  for (unsigned i = 0; i < m; ++i) b *= f.q();
  --a;
  --b;
  std::set<Elem> xs, ys, out{0};
  for (Elem x = 1; x < f.order(); ++x) {
    xs.insert(f.pow(x, a));
    ys.insert(f.pow(x, b));
  }
  for (Elem x : xs) {
    for (Elem y : ys) out.insert(f.mul(x, y));
  }
  return out;
}

TEST(Field, Coefficients) {
  auto f = FieldCtx::create(5, 1, 3);
  const Algebra s = field_semifield(f);
  EXPECT_EQ(s.coeff(0, 0), 1u);
  EXPECT_EQ(mrk(s), 1u);
  for (Elem x = 0; x < f->order(); x += 7) {
    for (Elem y = 0; y < f->order(); ++y) ASSERT_EQ(s.multiply(x, y), f->mul(x, y));
  }
}

TEST(Gtf, FindCMatchesProductSet) {
  for (const auto& [p, e, n, k, m] :
       std::vector<std::array<unsigned, 5>>{{3, 1, 5, 1, 2}, {3, 1, 3, 1, 2}, {5, 1, 3, 1, 2},
                                            {2, 2, 3, 1, 2}, {3, 1, 4, 1, 3}, {2, 1, 6, 2, 4}}) {
    auto f = FieldCtx::create(p, e, n);
    const std::set<Elem> prod = product_set(*f, k, m);
    Elem want = 0;
    while (prod.count(want)) ++want;
    ASSERT_LT(want, f->order());
    EXPECT_EQ(gtf_find_c(*f, k, m), want) << p << " " << e << " " << n;
    for (Elem c = 0; c < f->order(); ++c) {
      ASSERT_EQ(gtf_c_valid(*f, k, m, c), prod.count(c) == 0);
    }
  }
}

TEST(Gtf, NoValidCWhenProductCoversField) {
  auto f = FieldCtx::create(2, 1, 4);
  EXPECT_EQ(product_set(*f, 1, 1).size(), 16u);
  try {
    gtf_find_c(*f, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoValidC);
  }
  for (unsigned k = 1; k < 4; ++k) {
    for (unsigned m = 1; m < 4; ++m) {
      const bool full = product_set(*f, k, m).size() == 16;
      bool threw = false;
      try {
        gtf_find_c(*f, k, m);
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::kNoValidC;
      }
      EXPECT_EQ(threw, full);
    }
  }
}

TEST(Gtf, RejectsTrivialAutomorphisms) {
  auto f = FieldCtx::create(3, 1, 5);
  auto one = FieldCtx::create(5, 1, 1);
  for (const auto& [k, m] : std::vector<std::pair<unsigned, unsigned>>{{0, 1}, {1, 0}, {5, 1}}) {
    try {
      gtf_find_c(*f, k, m);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
  EXPECT_THROW(gtf_find_c(*one, 1, 1), Error);
}

TEST(Gtf, BinaryNeedsCommonFactor) {
  // Over F_2 the map x -> x^(2^k - 1) is onto when gcd(k, n) = 1.
  auto f = FieldCtx::create(2, 1, 5);
  EXPECT_EQ(product_set(*f, 1, 2).size(), 32u);
  EXPECT_THROW(gtf_find_c(*f, 1, 2), Error);
  auto g = FieldCtx::create(2, 1, 6);
  const Algebra s = gtf(g, 2, 4, gtf_find_c(*g, 2, 4));
  EXPECT_TRUE(s.is_semifield());
  EXPECT_FALSE(s.nuclei().all_full(6));
}

TEST(Gtf, Construction) {
  auto f = FieldCtx::create(3, 1, 5);
  const Elem c = gtf_find_c(*f, 1, 2);
  const Algebra s = gtf(f, 1, 2, c);
  EXPECT_EQ(s.coeff(0, 0), 1u);
  EXPECT_EQ(s.coeff(1, 2), f->neg(c));
  std::size_t nonzero = 0;
  for (Elem x : s.coeffs().data()) nonzero += x != 0;
  EXPECT_EQ(nonzero, 2u);
  EXPECT_TRUE(s.is_semifield());
  EXPECT_EQ(mrk(s), 2u);
  for (const auto& [name, a] : test::small_semifields()) EXPECT_TRUE(a.is_semifield()) << name;
}

TEST(Gtf, InvalidCHasZeroDivisor) {
  auto f = FieldCtx::create(3, 1, 5);
  const Elem bad = f->pow(f->generator(), 2 * 2);  // x^(q-1) with x = g^2
  ASSERT_FALSE(gtf_c_valid(*f, 1, 2, bad));
  try {
    gtf(f, 1, 2, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidC);
  }
  const Algebra s = gtf_unchecked(f, 1, 2, bad);
  bool found = false;
  for (Elem x = 1; x < f->order() && !found; ++x) {
    for (Elem y = 1; y < f->order() && !found; ++y) found = s.multiply(x, y) == 0;
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(s.is_semifield());
}

TEST(Gtf, ForcedFailureIsNotASemifield) {
  auto f = FieldCtx::create(2, 1, 4);
  for (Elem c = 1; c < 16; ++c) EXPECT_FALSE(gtf_unchecked(f, 1, 1, c).is_semifield());
}

}  // namespace
}  // namespace sfi

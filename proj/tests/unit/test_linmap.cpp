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
#include <set>

#include "sfi/linmap.hpp"
#include "support.hpp"

namespace sfi {
namespace {

using test::random_map;

std::vector<Elem> frob_vec(const FieldCtx& f, Elem x) {
  std::vector<Elem> v(f.n());
  for (unsigned i = 0; i < f.n(); ++i) v[i] = f.frobenius(x, i);
  return v;
}

TEST(LinMap, EvaluateBasics) {
  auto f = FieldCtx::create(2, 2, 3);
  const LinMap id = LinMap::identity(f);
  const LinMap fr = LinMap::monomial(f, 1, 1);
  for (Elem x = 0; x < f->order(); ++x) {
    EXPECT_EQ(id(x), x);
    EXPECT_EQ(fr(x), f->pow(x, 4));
    EXPECT_EQ(LinMap::zero(f)(x), 0u);
  }
}

TEST(LinMap, AdditiveAndHomogeneous) {
  std::mt19937_64 rng(8);
  auto f = FieldCtx::create(3, 2, 2);
  std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
  const auto scalars = f->subfield_elements();
  for (int it = 0; it < 100; ++it) {
    const LinMap g = random_map(f, rng);
    const Elem x = pick(rng), y = pick(rng);
    EXPECT_EQ(g(f->add(x, y)), f->add(g(x), g(y)));
    const Elem lam = scalars[it % scalars.size()];
    EXPECT_EQ(g(f->mul(lam, x)), f->mul(lam, g(x)));
  }
}

TEST(LinMap, DicksonMatrixIdentity) {
  std::mt19937_64 rng(9);
  auto f = FieldCtx::create(2, 1, 5);
  std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
  EXPECT_TRUE(LinMap::zero(f).dickson_matrix().is_zero());
  const Matrix ai = LinMap::identity(f).dickson_matrix();
  EXPECT_EQ(ai, Matrix::identity(f, 5));
  for (int it = 0; it < 100; ++it) {
    const LinMap g = random_map(f, rng);
    const Elem x = pick(rng);
    const Matrix xv(f, 5, 1, frob_vec(*f, x));
    EXPECT_EQ((g.dickson_matrix() * xv).data(), frob_vec(*f, g(x)));
  }
}

TEST(LinMap, InvertibilityAgreesWithInjectivityAndPrimeMatrix) {
  std::mt19937_64 rng(10);
  for (const auto& [p, e, n] : std::vector<std::array<unsigned, 3>>{{2, 1, 4}, {2, 2, 3}, {3, 1, 3}}) {
    auto f = FieldCtx::create(p, e, n);
    int singular = 0;
    for (int it = 0; it < 150; ++it) {
      LinMap g = random_map(f, rng);
      if (it % 5 == 0) {  // force a kernel
        const Elem k = static_cast<Elem>(1 + it % (f->order() - 1));
        std::vector<Elem> c = g.coeffs();
        c[0] = f->sub(c[0], g(k) == 0 ? 0 : f->div(g(k), k));
        g = LinMap(f, c);
      }
      std::set<Elem> image;
      for (Elem x = 0; x < f->order(); ++x) image.insert(g(x));
      const bool injective = image.size() == f->order();
      EXPECT_EQ(g.is_invertible(), injective);
      EXPECT_EQ(fp_rank(g.fp_matrix(), p) == f->degree(), injective);
      singular += !injective;
    }
    EXPECT_GT(singular, 0);
  }
}

TEST(LinMap, XPlusXqIsSingularInF16) {
  auto f = FieldCtx::create(2, 1, 4);
  const LinMap g(f, {1, 1, 0, 0});
  std::size_t kernel = 0;
  for (Elem x = 0; x < 16; ++x) kernel += g(x) == 0;
  EXPECT_EQ(kernel, 2u);
  EXPECT_FALSE(g.is_invertible());
  EXPECT_TRUE(LinMap::identity(f).is_invertible());
  EXPECT_FALSE(LinMap::zero(f).is_invertible());
}

TEST(LinMap, AdjointContract) {
  std::mt19937_64 rng(11);
  for (const auto& [p, e, n] : std::vector<std::array<unsigned, 3>>{{2, 1, 4}, {3, 1, 5}, {2, 2, 3}}) {
    auto f = FieldCtx::create(p, e, n);
    EXPECT_EQ(LinMap::identity(f).adjoint(), LinMap::identity(f));
    EXPECT_EQ(LinMap::monomial(f, 1, 1).adjoint(), LinMap::monomial(f, 1, n - 1));
    for (int it = 0; it < 100; ++it) {
      const LinMap g = random_map(f, rng);
      const LinMap h = g.adjoint();
      for (Elem x : f->basis()) {
        for (Elem y : f->basis()) {
          ASSERT_EQ(f->trace(f->mul(g(x), y)), f->trace(f->mul(x, h(y))));
        }
      }
      EXPECT_EQ(h.adjoint(), g);
      const LinMap k = random_map(f, rng);
      EXPECT_EQ(compose(g, k).adjoint(), compose(k.adjoint(), g.adjoint()));
    }
  }
}

TEST(LinMap, Composition) {
  std::mt19937_64 rng(12);
  auto f = FieldCtx::create(3, 1, 4);
  std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
  const LinMap fr = LinMap::monomial(f, 1, 1);
  EXPECT_EQ(compose(fr, fr), LinMap::monomial(f, 1, 2));
  for (int it = 0; it < 100; ++it) {
    const LinMap g = random_map(f, rng), h = random_map(f, rng);
    EXPECT_EQ(compose(LinMap::identity(f), g), g);
    const Elem x = pick(rng);
    EXPECT_EQ(compose(g, h)(x), g(h(x)));
    EXPECT_EQ((g + h)(x), f->add(g(x), h(x)));
    EXPECT_EQ(compose(g, h).dickson_matrix(), g.dickson_matrix() * h.dickson_matrix());
  }
}

TEST(LinMap, InterpolateAndInverse) {
  std::mt19937_64 rng(13);
  auto f = FieldCtx::create(2, 1, 6);
  const auto& b = f->basis();
  EXPECT_EQ(LinMap::interpolate(f, b), LinMap::identity(f));
  std::vector<Elem> sq;
  for (Elem x : b) sq.push_back(f->frobenius(x, 1));
  EXPECT_EQ(LinMap::interpolate(f, sq), LinMap::monomial(f, 1, 1));
  for (int it = 0; it < 100; ++it) {
    const LinMap g = random_map(f, rng);
    std::vector<Elem> v;
    for (Elem x : b) v.push_back(g(x));
    EXPECT_EQ(LinMap::interpolate(f, v), g);
    if (g.is_invertible()) EXPECT_EQ(compose(g.inverse(), g), LinMap::identity(f));
  }
  std::vector<Elem> dep{1, 1, 2, 4, 8, 16};
  try {
    LinMap::interpolate(f, dep, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotABasis);
  }
  try {
    LinMap::zero(f).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMap);
  }
}

TEST(LinMap, TextRoundTrip) {
  auto f = FieldCtx::create(3, 1, 3);
  const LinMap g(f, {0, 26, 5});
  EXPECT_EQ(g.to_string(), "0 26 5");
  EXPECT_EQ(LinMap::parse(f, g.to_string()), g);
  EXPECT_THROW(LinMap::parse(f, "1 2"), ParseError);
  EXPECT_THROW(LinMap::parse(f, "1 2 27"), ParseError);
  EXPECT_THROW(LinMap::parse(f, "1 x 2"), ParseError);
}

}  // namespace
}  // namespace sfi

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

// Minimum coefficient-matrix rank over an isotopy class.
//
// Every isotope of S is strongly isotopic to some S^(I,I,H) with H normalised
// to H(x) = x + sum_{k>=1} h_k x^(q^k), and
//
//   M(S^(I,I,H)) = sum_k h_k theta_k(M(S)),
//   theta_k(C)[i][j] = C[i-k][j-k]^(q^k)     (indices mod n).
//
// The search walks the tuples (h_1, ..., h_{n-1}) of element codes as a
// mixed-radix counter with h_1 the most significant digit; the enumeration
// key sum h_k Q^(n-1-k) (Q = q^n) is also the tie-break order of witnesses.

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sfi/algebra.hpp"
#include "sfi/linmap.hpp"
#include "sfi/matrix.hpp"

namespace sfi {

Matrix theta_shift(const Matrix& c, unsigned k);

/// Rank of the coefficient matrix of S itself.
std::size_t mrk(const Algebra& s);

/// Certificate flags; a result may carry several.
enum Certificate : unsigned {
  kExhaustive = 1u,
  kUpperBound = 2u,
  kLowerBoundNuclei = 4u,
};

/// Flags joined with '+', e.g. "LOWER_BOUND_NUCLEI+UPPER_BOUND".
std::string certificate_string(unsigned flags);

enum class SearchMode { kExhaustive, kBudget };

struct SearchOptions {
  SearchMode mode = SearchMode::kExhaustive;
  std::uint64_t budget = 0;  // random tuples after the identity (budget mode)
  std::uint64_t seed = 0;
  unsigned threads = 1;      // 0 picks the hardware concurrency
  bool early_exit = true;    // stop once a proper-nucleus lower bound is met
};

/// Largest exhaustive search accepted.
inline constexpr std::uint64_t kMaxExhaustiveCandidates = std::uint64_t{1} << 32;

struct BelRankResult {
  unsigned value = 0;
  LinMap witness;  // H with constant coefficient 1
  unsigned certificate = 0;
  std::uint64_t candidates = 0;
  unsigned lower_bound = 0;
  double millis = 0.0;

  bool exhaustive() const noexcept { return certificate & kExhaustive; }
};

/// Number of normalised tuples, saturated at kMaxExhaustiveCandidates + 1.
std::uint64_t search_space_size(const FieldCtx& f);

/// Proven lower bound on mrk over the class: 2 when S is a semifield with a
/// proper nucleus, 1 for other semifields, 0 for algebras with zero divisors.
unsigned class_lower_bound(const Algebra& s);

/// mrk([S]). BudgetInvalid for a zero budget, SearchSpaceTooLarge when the
/// exhaustive space exceeds kMaxExhaustiveCandidates.
BelRankResult mrk_class(const Algebra& s, const SearchOptions& opts = {});

/// brk(S) = mrk([S^dtd]); NotASemifield unless S is one.
BelRankResult bel_rank(const Algebra& s, const SearchOptions& opts = {});

struct BelTriple {
  BelRankResult s;   // brk(S)
  BelRankResult d;   // brk(S^d)
  BelRankResult dt;  // brk(S^dt)

  bool consistent() const noexcept { return d.value == dt.value; }
};

BelTriple bel_triple(const Algebra& s, const SearchOptions& opts = {});

/// F_q-dimension of the span of {L_y o (x -> a x) : y, a in F_{q^n}} inside
/// the n^2-dimensional space of F_q-endomorphisms.
std::size_t spread_span_dim(const Algebra& s);

LinMap random_invertible_map(const FieldRef& ctx, std::mt19937_64& rng);
/// apply_isotopy with three seeded random invertible maps.
Algebra random_isotope(const Algebra& s, std::uint64_t seed);

}  // namespace sfi

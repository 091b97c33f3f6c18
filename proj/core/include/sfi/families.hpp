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

#pragma once

#include "sfi/algebra.hpp"

namespace sfi {

/// F_{q^n} itself: c_00 = 1.
Algebra field_semifield(FieldRef ctx);

/// True iff c lies outside {x^(q^k - 1) y^(q^m - 1)}.
bool gtf_c_valid(const FieldCtx& f, unsigned k, unsigned m, Elem c);

/// Smallest code outside the product set; NoValidC when there is none and
/// InvalidArgument unless 0 < k, m < n.
Elem gtf_find_c(const FieldCtx& f, unsigned k, unsigned m);

/// Generalised twisted field x o y = x y - c x^(q^k) y^(q^m); InvalidC when c
/// fails gtf_c_valid.
Algebra gtf(FieldRef ctx, unsigned k, unsigned m, Elem c);

/// Same matrix without validating c (used to exhibit zero divisors).
Algebra gtf_unchecked(FieldRef ctx, unsigned k, unsigned m, Elem c);

}  // namespace sfi

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

#include <cstdint>
#include <optional>
#include <string>

#include "sfi/algebra.hpp"
#include "sfi/belrank.hpp"

namespace sfi::cli {

enum class Format { kJsonl, kCsv };

/// One invariants record. `error` is set instead of the numbers when the
/// input could not be processed.
struct Record {
  std::string id;
  unsigned p = 0, e = 0, n = 0;
  std::size_t mrk = 0;
  std::optional<BelTriple> triple;
  std::optional<NucleiReport> nuclei;
  std::uint64_t millis = 0;
  std::string error;
};

/// Computes mrk, the BEL-rank triple and nuclei. With `force`, algebras with
/// zero divisors are searched as they are and nuclei are left empty;
/// otherwise they raise NotASemifield.
Record compute_record(const std::string& id, const Algebra& s, const SearchOptions& opts,
                      bool force, bool timing);

std::string csv_header();
std::string format_record(const Record& r, Format f);

}  // namespace sfi::cli

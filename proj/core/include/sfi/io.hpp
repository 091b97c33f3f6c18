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

// Text formats. All three share a two-line preamble after the magic line:
//
//   p e n            (r appended for BEL-DECOMP)
//   modulus c0 c1 ... c_{en}
//
// followed by element codes: n coefficient rows (SEMIFIELD-COEFF v1), q^n
// table rows indexed by x (SEMIFIELD-TABLE v1), or 2r linear maps
// f_1..f_r, g_1..g_r (BEL-DECOMP v1). Blank lines and lines starting with '#'
// are skipped; reported line numbers are physical.

#pragma once

#include <iosfwd>
#include <string>

#include "sfi/algebra.hpp"
#include "sfi/belconfig.hpp"

namespace sfi {

enum class FileKind { kCoeff, kTable, kDecomp };

inline constexpr const char* kCoeffMagic = "SEMIFIELD-COEFF v1";
inline constexpr const char* kTableMagic = "SEMIFIELD-TABLE v1";
inline constexpr const char* kDecompMagic = "BEL-DECOMP v1";

Algebra read_coeff(std::istream& in);
void write_coeff(std::ostream& out, const Algebra& s);

MultiplicationTable read_table(std::istream& in);
void write_table(std::ostream& out, const MultiplicationTable& t);

BelDecomposition read_decomp(std::istream& in);
void write_decomp(std::ostream& out, const BelDecomposition& d);

/// COEFF or TABLE, told apart by the magic line; tables go through
/// Algebra::from_table.
Algebra read_algebra(std::istream& in);

/// File-path conveniences; an unreadable file is a ParseError at line 0.
Algebra read_algebra_file(const std::string& path);
BelDecomposition read_decomp_file(const std::string& path);
FileKind detect_kind(std::istream& in);

}  // namespace sfi

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

#include "sfi/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace sfi {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next meaningful line; ParseError at end of input.
  std::string next(const char* what) {
    std::string s;
    while (std::getline(in_, s)) {
      ++line_;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      const auto first = s.find_first_not_of(" \t");
      if (first == std::string::npos || s[first] == '#') continue;
      return s;
    }
    throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
  }

  void expect_end() {
    std::string s;
    while (std::getline(in_, s)) {
      ++line_;
      const auto first = s.find_first_not_of(" \t\r");
      if (first == std::string::npos || s[first] == '#') continue;
      throw ParseError(line_, "trailing content after the last row");
    }
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<long long> numbers(const std::string& s, std::size_t line) {
  std::istringstream is(s);
  std::vector<long long> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(line, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

void expect_magic(LineReader& r, const char* magic) {
  const std::string s = r.next("the format header");
  if (s != magic) {
    throw ParseError(r.line(), std::string("expected '") + magic + "', got '" + s + "'");
  }
}

struct Preamble {
  FieldRef ctx;
  std::size_t extra = 0;  // r for BEL-DECOMP
};

Preamble read_preamble(LineReader& r, bool with_r) {
  const std::string dline = r.next("'p e n'");
  const auto dims = numbers(dline, r.line());
  const std::size_t want = with_r ? 4 : 3;
  if (dims.size() != want) {
    throw ParseError(r.line(), with_r ? "expected 'p e n r'" : "expected 'p e n'");
  }
  for (long long v : dims) {
    if (v <= 0 || v > 1 << 20) throw ParseError(r.line(), "parameters must be positive");
  }
  const auto p = static_cast<unsigned>(dims[0]);
  const auto e = static_cast<unsigned>(dims[1]);
  const auto n = static_cast<unsigned>(dims[2]);
  if (!is_prime(p)) throw ParseError(r.line(), "p = " + std::to_string(p) + " is not prime");

  std::string ml = r.next("the modulus line");
  const std::size_t mline = r.line();
  {
    std::istringstream is(ml);
    std::string head;
    is >> head;
    if (head == "modulus") ml = ml.substr(ml.find("modulus") + 7);
  }
  const auto digits = numbers(ml, mline);
  if (digits.size() != std::size_t{e} * n + 1) {
    throw ParseError(mline, "modulus needs " + std::to_string(e * n + 1) + " coefficients, got " +
                                std::to_string(digits.size()));
  }
  std::vector<unsigned> mod;
  for (long long d : digits) {
    if (d < 0 || d >= p) throw ParseError(mline, "modulus coefficient out of range");
    mod.push_back(static_cast<unsigned>(d));
  }
  if (mod.back() != 1) throw ParseError(mline, "modulus must be monic");
  if (!is_primitive(p, mod)) throw ParseError(mline, "modulus is not primitive");
  Preamble out;
  try {
    out.ctx = FieldCtx::create(p, e, n, std::move(mod));
  } catch (const Error& err) {
    throw ParseError(mline, err.what());
  }
  if (with_r) out.extra = static_cast<std::size_t>(dims[3]);
  return out;
}

std::vector<Elem> codes(const FieldCtx& f, const std::string& s, std::size_t line, std::size_t want) {
  const auto v = numbers(s, line);
  if (v.size() != want) {
    throw ParseError(line, "expected " + std::to_string(want) + " element codes, got " +
                               std::to_string(v.size()));
  }
  std::vector<Elem> out;
  out.reserve(want);
  for (long long x : v) {
    if (x < 0 || x >= static_cast<long long>(f.order())) {
      throw ParseError(line, "element code " + std::to_string(x) + " out of range");
    }
    out.push_back(static_cast<Elem>(x));
  }
  return out;
}

void write_preamble(std::ostream& out, const FieldCtx& f) {
  out << f.p() << ' ' << f.e() << ' ' << f.n();
}

void write_modulus(std::ostream& out, const FieldCtx& f) {
  out << "modulus";
  for (unsigned c : f.modulus()) out << ' ' << c;
  out << '\n';
}

void write_row(std::ostream& out, std::span<const Elem> row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out << ' ';
    out << row[j];
  }
  out << '\n';
}

}  // namespace

Algebra read_coeff(std::istream& in) {
  LineReader r(in);
  expect_magic(r, kCoeffMagic);
  const Preamble pre = read_preamble(r, false);
  const unsigned n = pre.ctx->n();
  std::vector<Elem> data;
  for (unsigned i = 0; i < n; ++i) {
    const std::string text = r.next("a coefficient row");
    const auto row = codes(*pre.ctx, text, r.line(), n);
    data.insert(data.end(), row.begin(), row.end());
  }
  r.expect_end();
  return Algebra(pre.ctx, Matrix(pre.ctx, n, n, std::move(data)));
}

void write_coeff(std::ostream& out, const Algebra& s) {
  const FieldCtx& f = s.field();
  out << kCoeffMagic << '\n';
  write_preamble(out, f);
  out << '\n';
  write_modulus(out, f);
  for (unsigned i = 0; i < f.n(); ++i) write_row(out, s.coeffs().row(i));
}

MultiplicationTable read_table(std::istream& in) {
  LineReader r(in);
  expect_magic(r, kTableMagic);
  const Preamble pre = read_preamble(r, false);
  const Elem order = pre.ctx->order();
  MultiplicationTable t{pre.ctx, {}};
  t.entries.reserve(std::size_t{order} * order);
  for (Elem x = 0; x < order; ++x) {
    const std::string text = r.next("a table row");
    const auto row = codes(*pre.ctx, text, r.line(), order);
    t.entries.insert(t.entries.end(), row.begin(), row.end());
  }
  r.expect_end();
  return t;
}

void write_table(std::ostream& out, const MultiplicationTable& t) {
  const FieldCtx& f = *t.ctx;
  out << kTableMagic << '\n';
  write_preamble(out, f);
  out << '\n';
  write_modulus(out, f);
  const Elem order = f.order();
  for (Elem x = 0; x < order; ++x) {
    write_row(out, std::span<const Elem>(t.entries.data() + std::size_t{x} * order, order));
  }
}

BelDecomposition read_decomp(std::istream& in) {
  LineReader r(in);
  expect_magic(r, kDecompMagic);
  const Preamble pre = read_preamble(r, true);
  const unsigned n = pre.ctx->n();
  BelDecomposition d{pre.ctx, {}, {}};
  for (std::size_t i = 0; i < 2 * pre.extra; ++i) {
    const std::string text = r.next("a linear map");
    auto c = codes(*pre.ctx, text, r.line(), n);
    (i < pre.extra ? d.f : d.g).emplace_back(pre.ctx, std::move(c));
  }
  r.expect_end();
  return d;
}

void write_decomp(std::ostream& out, const BelDecomposition& d) {
  const FieldCtx& f = *d.ctx;
  out << kDecompMagic << '\n';
  write_preamble(out, f);
  out << ' ' << d.r() << '\n';
  write_modulus(out, f);
  for (const auto& m : d.f) out << m.to_string() << '\n';
  for (const auto& m : d.g) out << m.to_string() << '\n';
}

FileKind detect_kind(std::istream& in) {
  const auto pos = in.tellg();
  LineReader r(in);
  const std::string s = r.next("the format header");
  const std::size_t line = r.line();
  in.clear();
  in.seekg(pos);
  if (s == kCoeffMagic) return FileKind::kCoeff;
  if (s == kTableMagic) return FileKind::kTable;
  if (s == kDecompMagic) return FileKind::kDecomp;
  throw ParseError(line, "unknown format header '" + s + "'");
}

Algebra read_algebra(std::istream& in) {
  switch (detect_kind(in)) {
    case FileKind::kCoeff:
      return read_coeff(in);
    case FileKind::kTable:
      return Algebra::from_table(read_table(in));
    case FileKind::kDecomp:
      break;
  }
  throw ParseError(1, "expected a coefficient or table file, got a decomposition");
}

Algebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_algebra(in);
}

BelDecomposition read_decomp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_decomp(in);
}

}  // namespace sfi

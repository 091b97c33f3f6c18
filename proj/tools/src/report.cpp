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

#include "report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace sfi::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Record compute_record(const std::string& id, const Algebra& s, const SearchOptions& opts,
                      bool force, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Record r;
  r.id = id;
  r.p = s.field().p();
  r.e = s.field().e();
  r.n = s.n();
  r.mrk = mrk(s);
  if (s.is_semifield()) {
    r.triple = bel_triple(s, opts);
    r.nuclei = s.nuclei();
  } else if (force) {
    const Algebra d = s.dual();
    r.triple = BelTriple{mrk_class(s.dtd(), opts), mrk_class(d.dtd(), opts),
                         mrk_class(d.transpose().dtd(), opts)};
  } else {
    throw Error(ErrorCode::kNotASemifield, "input has zero divisors (use --force to search anyway)");
  }
  if (timing) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.millis = static_cast<std::uint64_t>(std::llround(ms));
  }
  return r;
}

std::string csv_header() {
  return "id,p,e,n,mrk,brk,brk_d,brk_dt,nuclei,certificate,witness,candidates,millis,error";
}

std::string format_record(const Record& r, Format f) {
  std::ostringstream os;
  if (f == Format::kJsonl) {
    Json j;
    j["id"] = r.id;
    if (!r.error.empty()) {
      j["error"] = r.error;
      return j.dump();
    }
    j["p"] = r.p;
    j["e"] = r.e;
    j["n"] = r.n;
    j["mrk"] = r.mrk;
    j["brk"] = r.triple->s.value;
    j["brk_d"] = r.triple->d.value;
    j["brk_dt"] = r.triple->dt.value;
    if (r.nuclei) {
      j["nuclei"] = {r.nuclei->left_size(), r.nuclei->middle_size(), r.nuclei->right_size(),
                     r.nuclei->centre_size()};
    } else {
      j["nuclei"] = nullptr;
    }
    j["certificate"] = certificate_string(r.triple->s.certificate);
    j["witness"] = r.triple->s.witness.to_string();
    j["candidates"] = r.triple->s.candidates + r.triple->d.candidates + r.triple->dt.candidates;
    j["millis"] = r.millis;
    return j.dump();
  }
  os << csv_field(r.id) << ',';
  if (!r.error.empty()) {
    os << ",,,,,,,,,,,," << csv_field(r.error);
    return os.str();
  }
  os << r.p << ',' << r.e << ',' << r.n << ',' << r.mrk << ',' << r.triple->s.value << ','
     << r.triple->d.value << ',' << r.triple->dt.value << ',';
  if (r.nuclei) {
    os << r.nuclei->left_size() << ';' << r.nuclei->middle_size() << ';'
       << r.nuclei->right_size() << ';' << r.nuclei->centre_size();
  }
  os << ',' << certificate_string(r.triple->s.certificate) << ','
     << r.triple->s.witness.to_string() << ','
     << r.triple->s.candidates + r.triple->d.candidates + r.triple->dt.candidates << ','
     << r.millis << ',';
  return os.str();
}

}  // namespace sfi::cli

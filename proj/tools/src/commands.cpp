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

#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "report.hpp"
#include "sfi/belconfig.hpp"
#include "sfi/belrank.hpp"
#include "sfi/families.hpp"
#include "sfi/io.hpp"

namespace sfi::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct SearchFlags {
  std::string mode = "exhaustive";
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format = "jsonl";
  bool force = false;
  bool timing = true;
  bool no_timing = false;

  SearchOptions options() const {
    SearchOptions o;
    o.mode = mode == "budget" ? SearchMode::kBudget : SearchMode::kExhaustive;
    o.budget = budget;
    o.seed = seed;
    o.threads = threads;
    return o;
  }
  Format fmt() const { return format == "csv" ? Format::kCsv : Format::kJsonl; }
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("--mode", f.mode, "Search mode")
      ->check(CLI::IsMember({"exhaustive", "budget"}))
      ->capture_default_str();
  cmd->add_option("--budget", f.budget, "Random tuples evaluated after the identity (budget mode)");
  cmd->add_option("--seed", f.seed, "Seed of the budget-mode generator")->capture_default_str();
  cmd->add_option("--threads", f.threads, "Search shards (0 = hardware concurrency)")
      ->capture_default_str();
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--force", f.force, "Search algebras with zero divisors as they are");
}

int code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParseError:
    case ErrorCode::kNotBilinear:
    case ErrorCode::kSizeMismatch:
    case ErrorCode::kInvalidModulus:
    case ErrorCode::kNoPrimitivePolynomial:
      return kParse;
    case ErrorCode::kNotASemifield:
      return kNotSemifield;
    case ErrorCode::kSearchSpaceTooLarge:
      return kTooLarge;
    default:
      return kUsage;
  }
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& get() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void warn_triple(const Record& r, std::ostream& err) {
  if (r.triple && !r.triple->consistent()) {
    err << "warning: " << r.id << ": brk(S^d) = " << r.triple->d.value
        << " differs from brk(S^dt) = " << r.triple->dt.value << '\n';
  }
}

int cmd_invariants(const std::string& path, const SearchFlags& f, std::ostream& out,
                   std::ostream& err) {
  const Algebra s = read_algebra_file(path);
  Record r = compute_record(fs::path(path).filename().string(), s, f.options(), f.force,
                            !f.no_timing);
  warn_triple(r, err);
  if (f.fmt() == Format::kCsv) out << csv_header() << '\n';
  out << format_record(r, f.fmt()) << '\n';
  return kOk;
}

std::map<std::string, std::string> read_labels(const std::string& path) {
  std::map<std::string, std::string> labels;
  if (path.empty()) return labels;
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open labels file '" + path + "'");
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::istringstream is(line);
    std::string file, label;
    if (!(is >> file) || file[0] == '#') continue;
    if (!(is >> label)) throw ParseError(no, "expected 'file label'");
    labels[file] = label;
  }
  return labels;
}

int cmd_batch(const std::string& dir, const std::string& labels_path, const SearchFlags& f,
              std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::kInvalidArgument, "'" + dir + "' is not a directory");
  const auto labels = read_labels(labels_path);
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(dir)) {
    if (ent.is_regular_file()) files.push_back(ent.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  if (files.empty()) return kOk;

  const Format fmt = f.fmt();
  if (fmt == Format::kCsv) out << csv_header() << '\n';
  std::map<unsigned, std::size_t> histogram;
  std::map<std::string, std::vector<unsigned>> orbits;
  std::size_t errors = 0;
  for (const auto& file : files) {
    const std::string id = file.filename().string();
    Record r;
    try {
      const Algebra s = read_algebra_file(file.string());
      r = compute_record(id, s, f.options(), f.force, f.timing);
      warn_triple(r, err);
      ++histogram[r.triple->s.value];
      if (auto it = labels.find(id); it != labels.end()) orbits[it->second].push_back(r.triple->s.value);
    } catch (const Error& e) {
      r = Record{};
      r.id = id;
      r.error = e.what();
      ++errors;
    }
    out << format_record(r, fmt) << '\n';
  }

  if (fmt == Format::kJsonl) {
    Json summary;
    summary["files"] = files.size();
    summary["errors"] = errors;
    Json hist = Json::object();
    for (const auto& [k, v] : histogram) hist[std::to_string(k)] = v;
    summary["brk_histogram"] = hist;
    if (!labels.empty()) {
      Json orb = Json::object();
      for (const auto& [label, vals] : orbits) orb[label] = vals;
      summary["orbits"] = orb;
    }
    out << Json{{"summary", summary}}.dump() << '\n';
  } else {
    out << "# summary files=" << files.size() << " errors=" << errors << " brk=";
    bool first = true;
    for (const auto& [k, v] : histogram) {
      out << (first ? "" : ";") << k << ':' << v;
      first = false;
    }
    for (const auto& [label, vals] : orbits) {
      out << " orbit[" << label << "]=";
      for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? ";" : "") << vals[i];
    }
    out << '\n';
  }
  return kOk;
}

struct FamilyFlags {
  unsigned p = 2, e = 1, n = 4;
  unsigned k = 1, m = 1;
  bool auto_c = false;
  std::int64_t c = -1;
  bool table = false;
  std::string out;
};

int cmd_family(const std::string& which, const FamilyFlags& f, std::ostream& out, std::ostream& err) {
  FieldRef ctx = FieldCtx::create(f.p, f.e, f.n);
  std::optional<Algebra> s;
  if (which == "field") {
    s = field_semifield(ctx);
  } else {
    Elem c = 0;
    if (f.auto_c) {
      c = gtf_find_c(*ctx, f.k, f.m);
      err << "c = " << c << '\n';
    } else if (f.c >= 0) {
      c = static_cast<Elem>(f.c);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "gtf needs --auto-c or --c");
    }
    s = gtf(ctx, f.k, f.m, c);
  }
  Sink sink(f.out, out);
  if (f.table) {
    write_table(sink.get(), s->table());
  } else {
    write_coeff(sink.get(), *s);
  }
  return kOk;
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& dest,
                std::ostream& out) {
  const Algebra s = read_algebra_file(path);
  Sink sink(dest, out);
  if (to == "table") {
    write_table(sink.get(), s.table());
  } else {
    write_coeff(sink.get(), s);
  }
  return kOk;
}

int cmd_knuth(const std::string& path, const std::string& word, const std::string& dest,
              std::ostream& out) {
  const Algebra s = read_algebra_file(path).knuth(word);
  Sink sink(dest, out);
  write_coeff(sink.get(), s);
  return kOk;
}

int cmd_decompose(const std::string& path, const std::string& dest, std::ostream& out) {
  const Algebra s = read_algebra_file(path);
  Sink sink(dest, out);
  write_decomp(sink.get(), decomposition_from_rank_factorization(s));
  return kOk;
}

int cmd_verify_bel(const std::string& path, std::ostream& out) {
  const BelDecomposition d = read_decomp_file(path);
  const BelConfiguration b = configuration_from_decomposition(d);
  const VerifyResult v = verify_configuration(b);
  Json j;
  j["id"] = fs::path(path).filename().string();
  j["r"] = d.r();
  j["ok"] = v.ok;
  if (v.violating) {
    j["violating"] = *v.violating;
  } else {
    j["violating"] = nullptr;
  }
  j["spread_elements"] = v.elements;
  j["meets_u"] = v.meets_u;
  j["meets_w"] = v.meets_w;
  j["meets_neither"] = v.elements - v.meets_u - v.meets_w + (v.ok ? 0 : 1);
  j["dim_u"] = b.u_basis.size();
  j["dim_w"] = b.w_basis.size();
  out << j.dump() << '\n';
  return v.ok ? kOk : kNotSemifield;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semifield invariants: matrix rank, BEL-rank, nuclei"};
  app.name("sfi");
  app.require_subcommand(1);

  SearchFlags search;
  std::string input, labels;

  auto* inv = app.add_subcommand("invariants", "Report mrk, BEL-rank triple and nuclei of one file");
  inv->add_option("file", input, "COEFF or TABLE file")->required();
  add_search_flags(inv, search);
  inv->add_flag("--no-timing", search.no_timing, "Report millis as 0");

  auto* batch = app.add_subcommand("batch", "Process every file in a directory");
  batch->add_option("dir", input, "Directory of COEFF/TABLE files")->required();
  batch->add_option("--labels", labels, "File of 'filename label' lines for orbit grouping");
  add_search_flags(batch, search);
  search.timing = false;
  batch->add_flag("--timing,!--no-timing", search.timing, "Report wall time (off by default)");

  FamilyFlags fam;
  auto* family = app.add_subcommand("family", "Emit a built-in semifield");
  family->require_subcommand(1);
  for (const char* name : {"field", "gtf"}) {
    auto* sub = family->add_subcommand(name, std::string(name) == "field"
                                                 ? "The field F_{q^n}"
                                                 : "Generalised twisted field x y - c x^(q^k) y^(q^m)");
    sub->add_option("--p", fam.p, "Characteristic")->required();
    sub->add_option("--e", fam.e, "q = p^e")->capture_default_str();
    sub->add_option("--n", fam.n, "Dimension over F_q")->required();
    sub->add_flag("--table", fam.table, "Emit a TABLE file instead of COEFF");
    sub->add_option("-o,--out", fam.out, "Output file");
    if (std::string(name) == "gtf") {
      sub->add_option("--k", fam.k, "Exponent of x is q^k")->required();
      sub->add_option("--m", fam.m, "Exponent of y is q^m")->required();
      auto* a = sub->add_flag("--auto-c", fam.auto_c, "Use the smallest valid c");
      auto* c = sub->add_option("--c", fam.c, "Element code of c");
      a->excludes(c);
    }
  }

  std::string to = "coeff", dest, word;
  auto* conv = app.add_subcommand("convert", "Convert between COEFF and TABLE");
  conv->add_option("file", input, "Input file")->required();
  conv->add_option("--to", to, "Target format")->check(CLI::IsMember({"table", "coeff"}))->required();
  conv->add_option("-o,--out", dest, "Output file");

  auto* knuth = app.add_subcommand("knuth", "Apply a word over {d, t} left to right");
  knuth->add_option("file", input, "Input file")->required();
  knuth->add_option("--word", word, "e.g. dtd")->required();
  knuth->add_option("-o,--out", dest, "Output file");

  auto* decomp = app.add_subcommand("decompose", "Emit the rank-factorisation decomposition");
  decomp->add_option("file", input, "Input file")->required();
  decomp->add_option("-o,--out", dest, "Output file");

  auto* verify = app.add_subcommand("verify-bel", "Check the BEL-configuration of a decomposition");
  verify->add_option("file", input, "BEL-DECOMP file")->required();

  std::vector<const char*> argv{"sfi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*inv) return cmd_invariants(input, search, out, err);
    if (*batch) return cmd_batch(input, labels, search, out, err);
    if (*family) {
      return cmd_family(family->get_subcommands().front()->get_name(), fam, out, err);
    }
    if (*conv) return cmd_convert(input, to, dest, out);
    if (*knuth) return cmd_knuth(input, word, dest, out);
    if (*decomp) return cmd_decompose(input, dest, out);
    if (*verify) return cmd_verify_bel(input, out);
  } catch (const Error& e) {
    err << "sfi: " << e.what() << '\n';
    if (e.code() == ErrorCode::kSearchSpaceTooLarge) {
      err << "sfi: rerun with --mode budget --budget N for an upper bound\n";
    }
    return code_for(e);
  }
  return kUsage;
}

}  // namespace sfi::cli

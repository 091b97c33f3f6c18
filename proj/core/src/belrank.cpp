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

#include "sfi/belrank.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

namespace sfi {
namespace {

constexpr std::uint64_t kNoKey = std::numeric_limits<std::uint64_t>::max();

struct Best {
  unsigned rank;
  std::uint64_t key;
  std::vector<Elem> h;  // h_1 .. h_{n-1}
};

bool better(const Best& a, const Best& b) {
  return a.rank < b.rank || (a.rank == b.rank && a.key < b.key);
}

void atomic_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load(std::memory_order_relaxed);
  while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

void atomic_min(std::atomic<unsigned>& a, unsigned v) {
  unsigned cur = a.load(std::memory_order_relaxed);
  while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

LinMap normalised(const FieldRef& ctx, const std::vector<Elem>& h) {
  std::vector<Elem> c(ctx->n());
  c[0] = 1;
  std::copy(h.begin(), h.end(), c.begin() + 1);
  return LinMap(ctx, std::move(c));
}

// Shared state of one exhaustive search.
struct Search {
  const FieldCtx& f;
  FieldRef ctx;
  unsigned n;
  Elem order;
  std::size_t nn;
  std::vector<Elem> base;    // theta_0(C) = C
  std::vector<Elem> shifts;  // shifts[((k-1) * Q + h) * nn ...] = h theta_k(C)
  std::uint64_t radix_tail;  // Q^(n-2)
  unsigned stop_rank;        // early exit threshold, 0 when disabled
  std::atomic<Elem> next{0};
  std::atomic<unsigned> global_rank{0};
  std::atomic<std::uint64_t> stop_key{kNoKey};

  const Elem* shift(unsigned k, Elem h) const {
    return shifts.data() + ((std::size_t{k} - 1) * order + h) * nn;
  }
};

template <bool kChar2>
void add_into(const FieldCtx& f, Elem* dst, const Elem* a, const Elem* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if constexpr (kChar2) {
      dst[i] = a[i] ^ b[i];
    } else {
      dst[i] = f.add(a[i], b[i]);
    }
  }
}

template <bool kChar2>
Best run_worker(Search& s) {
  const unsigned n = s.n;
  const std::size_t nn = s.nn;
  Best local{n + 1, kNoKey, {}};
  std::vector<Elem> digits(n - 1, 0);
  // sums[j] = C + sum_{k <= j} h_k theta_k(C), for j = 0 .. n-2.
  std::vector<Elem> sums((n - 1) * nn);
  std::copy(s.base.begin(), s.base.end(), sums.begin());
  std::vector<Elem> cand(nn);

  auto evaluate = [&](std::uint64_t key) {
    if (local.rank == 0) return;
    const unsigned cap = std::min(local.rank - 1, s.global_rank.load(std::memory_order_relaxed));
    const auto r = static_cast<unsigned>(detail::rank_in_place<kChar2>(s.f, cand.data(), n, n, cap));
    if (r > cap) return;
    if (!normalised(s.ctx, digits).is_invertible()) return;
    local = Best{r, key, digits};
    atomic_min(s.global_rank, r);
    if (r == 0 || r <= s.stop_rank) atomic_min(s.stop_key, key);
  };

  for (;;) {
    const Elem lead = s.next.fetch_add(1, std::memory_order_relaxed);
    if (lead >= s.order) break;
    const std::uint64_t chunk = std::uint64_t{lead} * s.radix_tail;
    if (chunk > s.stop_key.load(std::memory_order_relaxed)) break;
    digits.assign(n - 1, 0);
    digits[0] = lead;
    if (n == 2) {
      add_into<kChar2>(s.f, cand.data(), s.base.data(), s.shift(1, lead), nn);
      evaluate(chunk);
      continue;
    }
    add_into<kChar2>(s.f, &sums[nn], s.base.data(), s.shift(1, lead), nn);
    for (unsigned j = 2; j + 1 < n; ++j) {
      add_into<kChar2>(s.f, &sums[j * nn], &sums[(j - 1) * nn], s.shift(j, 0), nn);
    }
    std::uint64_t key = chunk;
    const Elem* prefix = &sums[(n - 2) * nn];
    for (;;) {
      // Innermost digit h_{n-1}.
      bool stop = false;
      for (Elem d = 0; d < s.order; ++d, ++key) {
        if (key > s.stop_key.load(std::memory_order_relaxed)) {
          stop = true;
          break;
        }
        digits[n - 2] = d;
        add_into<kChar2>(s.f, cand.data(), prefix, s.shift(n - 1, d), nn);
        evaluate(key);
      }
      if (stop) break;
      // Carry into h_{n-2} .. h_2.
      unsigned j = n - 2;
      while (j >= 2) {
        digits[j - 1] += 1;
        if (digits[j - 1] < s.order) break;
        digits[j - 1] = 0;
        --j;
      }
      if (j < 2) break;
      for (unsigned l = j; l + 1 < n; ++l) {
        add_into<kChar2>(s.f, &sums[l * nn], &sums[(l - 1) * nn], s.shift(l, digits[l - 1]), nn);
      }
    }
  }
  return local;
}

BelRankResult exhaustive(const Algebra& alg, const SearchOptions& opts, unsigned lower) {
  const FieldCtx& f = alg.field();
  const unsigned n = f.n();
  const Elem order = f.order();
  const std::uint64_t total = search_space_size(f);
  if (total > kMaxExhaustiveCandidates) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "exhaustive search over q^(n(n-1)) tuples exceeds 2^32 candidates; "
                "use budget mode instead");
  }
  const unsigned stop_rank = opts.early_exit && lower >= 2 ? lower : 0;

  if (n == 1) {
    const auto r = static_cast<unsigned>(matrix_rank(alg.coeffs()));
    return BelRankResult{r, LinMap::identity(alg.ctx()), kExhaustive, 1, lower, 0.0};
  }

  Search s{f, alg.ctx(), n, order, std::size_t{n} * n, alg.coeffs().data(), {}, 1, stop_rank};
  for (unsigned k = 2; k < n; ++k) s.radix_tail *= order;
  s.global_rank.store(n);
  s.shifts.resize((n - 1) * std::size_t{order} * s.nn);
  for (unsigned k = 1; k < n; ++k) {
    const Matrix th = theta_shift(alg.coeffs(), k);
    for (Elem h = 0; h < order; ++h) {
      Elem* dst = s.shifts.data() + ((std::size_t{k} - 1) * order + h) * s.nn;
      for (std::size_t i = 0; i < s.nn; ++i) dst[i] = f.mul(h, th.data()[i]);
    }
  }

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, order));
  std::vector<Best> results(threads, Best{n + 1, kNoKey, {}});
  auto work = [&](unsigned w) {
    results[w] = f.char2() ? run_worker<true>(s) : run_worker<false>(s);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Best best{n + 1, kNoKey, {}};
  for (auto& r : results) {
    if (better(r, best)) best = std::move(r);
  }

  // H = identity is a candidate, so the scan always finds an invertible one.
  BelRankResult out{best.rank, normalised(alg.ctx(), best.h), kExhaustive, total, lower, 0.0};
  const bool stopped = s.stop_key.load() != kNoKey;
  if (stopped) {
    out.candidates = best.key + 1;
    if (best.rank != 0) out.certificate = kUpperBound | kLowerBoundNuclei;
  }
  return out;
}

BelRankResult budgeted(const Algebra& alg, const SearchOptions& opts, unsigned lower) {
  if (opts.budget == 0) throw Error(ErrorCode::kBudgetInvalid, "budget must be positive");
  const FieldCtx& f = alg.field();
  const unsigned n = f.n();
  std::vector<Matrix> th;
  for (unsigned k = 0; k < n; ++k) th.push_back(theta_shift(alg.coeffs(), k));

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
  std::vector<Elem> h(n - 1, 0);
  unsigned best = n + 1;
  std::vector<Elem> best_h;
  std::uint64_t examined = 0;
  for (std::uint64_t it = 0; it <= opts.budget; ++it) {
    if (it > 0) {
      for (auto& d : h) d = pick(rng);
    }
    ++examined;
    Matrix m = th[0];
    for (unsigned k = 1; k < n; ++k) {
      if (h[k - 1] != 0) m = m + th[k].scaled(h[k - 1]);
    }
    const auto r = static_cast<unsigned>(matrix_rank(m));
    if (r < best && normalised(alg.ctx(), h).is_invertible()) {
      best = r;
      best_h = h;
      if (opts.early_exit && (r == 0 || (lower >= 2 && r <= lower))) break;
    }
  }
  unsigned cert = kUpperBound;
  if (lower >= 1 && best == lower) cert |= kLowerBoundNuclei;
  return BelRankResult{best, normalised(alg.ctx(), best_h), cert, examined, lower, 0.0};
}

}  // namespace

Matrix theta_shift(const Matrix& c, unsigned k) {
  const FieldCtx& f = c.field();
  const unsigned n = f.n();
  k %= n;
  Matrix out(c.ctx(), n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) out(i, j) = f.frobenius(c((i + n - k) % n, (j + n - k) % n), k);
  }
  return out;
}

std::size_t mrk(const Algebra& s) { return matrix_rank(s.coeffs()); }

std::string certificate_string(unsigned flags) {
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if (!(flags & bit)) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  add(kExhaustive, "EXHAUSTIVE");
  add(kLowerBoundNuclei, "LOWER_BOUND_NUCLEI");
  add(kUpperBound, "UPPER_BOUND");
  return out;
}

std::uint64_t search_space_size(const FieldCtx& f) {
  std::uint64_t total = 1;
  for (unsigned k = 1; k < f.n(); ++k) {
    total *= f.order();
    if (total > kMaxExhaustiveCandidates) return kMaxExhaustiveCandidates + 1;
  }
  return total;
}

unsigned class_lower_bound(const Algebra& s) {
  if (!s.is_semifield()) return 0;
  return s.nuclei().all_full(s.field().degree()) ? 1 : 2;
}

BelRankResult mrk_class(const Algebra& s, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned lower = class_lower_bound(s);
  BelRankResult r = opts.mode == SearchMode::kExhaustive ? exhaustive(s, opts, lower)
                                                         : budgeted(s, opts, lower);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

BelRankResult bel_rank(const Algebra& s, const SearchOptions& opts) {
  if (!s.is_semifield()) throw Error(ErrorCode::kNotASemifield, "BEL-rank needs a semifield");
  return mrk_class(s.dtd(), opts);
}

BelTriple bel_triple(const Algebra& s, const SearchOptions& opts) {
  const Algebra d = s.dual();
  return BelTriple{bel_rank(s, opts), bel_rank(d, opts), bel_rank(d.transpose(), opts)};
}

std::size_t spread_span_dim(const Algebra& s) {
  const FieldCtx& f = s.field();
  const unsigned n = f.n();
  std::vector<std::vector<Elem>> rows;
  for (Elem y : f.basis()) {
    const LinMap ly = s.left_mult(y);
    for (Elem a : f.basis()) {
      std::vector<Elem> v(n);
      for (unsigned j = 0; j < n; ++j) v[j] = f.mul(ly.coeff(j), f.frobenius(a, j));
      rows.push_back(std::move(v));
    }
  }
  return fq_rank(f, rows);
}

LinMap random_invertible_map(const FieldRef& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, ctx->order() - 1);
  for (;;) {
    std::vector<Elem> c(ctx->n());
    for (auto& x : c) x = pick(rng);
    LinMap m(ctx, std::move(c));
    if (m.is_invertible()) return m;
  }
}

Algebra random_isotope(const Algebra& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LinMap f = random_invertible_map(s.ctx(), rng);
  const LinMap g = random_invertible_map(s.ctx(), rng);
  const LinMap h = random_invertible_map(s.ctx(), rng);
  return s.apply_isotopy(f, g, h);
}

}  // namespace sfi

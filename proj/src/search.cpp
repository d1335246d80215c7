#include "oddcover/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "oddcover/bitkernels.hpp"

namespace oddcover {

namespace {

using kernels::Word;
using Clock = std::chrono::steady_clock;
using Mask = std::uint32_t;

// Words of {0,1,e}^k indexed as in graph_bk: base 3, most significant digit
// is column 0, digits 0,1,2 meaning 0,1,e. zeros/ones hold bit c for column c.
struct WordTables {
  int k = 0;
  std::size_t count = 0;
  std::size_t row_words = 0;
  std::vector<Mask> zeros;
  std::vector<Mask> ones;
  std::vector<Word> adj;  // count rows of row_words; bit j of row i iff i ~ j in B_k

  std::span<const Word> row(std::size_t w) const { return {adj.data() + w * row_words, row_words}; }
};

std::size_t pow3(int k) {
  std::size_t p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

std::shared_ptr<const WordTables> build_tables(int k) {
  auto t = std::make_shared<WordTables>();
  t->k = k;
  t->count = pow3(k);
  t->row_words = kernels::words_for_bits(t->count);
  t->zeros.resize(t->count);
  t->ones.resize(t->count);
  for (std::size_t w = 0; w < t->count; ++w) {
    std::size_t rest = w;
    for (int c = k - 1; c >= 0; --c) {
      const std::size_t digit = rest % 3;
      rest /= 3;
      if (digit == 0) t->zeros[w] |= Mask{1} << c;
      if (digit == 1) t->ones[w] |= Mask{1} << c;
    }
  }
  t->adj.assign(t->count * t->row_words, 0);
  for (std::size_t a = 0; a < t->count; ++a) {
    const Mask za = t->zeros[a];
    const Mask oa = t->ones[a];
    for (std::size_t b = a + 1; b < t->count; ++b) {
      if (std::popcount((za & t->ones[b]) | (oa & t->zeros[b])) & 1) {
        t->adj[a * t->row_words + b / 64] |= Word{1} << (b % 64);
        t->adj[b * t->row_words + a / 64] |= Word{1} << (a % 64);
      }
    }
  }
  return t;
}

std::shared_ptr<const WordTables> tables_for(int k) {
  static std::mutex mu;
  static std::array<std::shared_ptr<const WordTables>, kMaxSearchK + 1> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[static_cast<std::size_t>(k)];
  if (!slot) slot = build_tables(k);
  return slot;
}

CodeWord word_symbols(const WordTables& t, std::size_t w) {
  CodeWord out(static_cast<std::size_t>(t.k), Symbol::Eps);
  for (int c = 0; c < t.k; ++c) {
    if (t.zeros[w] >> c & 1) out[static_cast<std::size_t>(c)] = Symbol::Zero;
    if (t.ones[w] >> c & 1) out[static_cast<std::size_t>(c)] = Symbol::One;
  }
  return out;
}

// Column symmetry state after a prefix of vertices. Columns are normalised
// so their first non-e entry is 0, and sorted lexicographically along the
// vertex order with e < 0 < 1.
struct ColumnState {
  Mask seen = 0;  // columns holding a non-e entry
  Mask ones = 0;  // columns holding a 1
  Mask tied = 0;  // bit c: columns c and c+1 agree so far
};

struct Problem {
  std::shared_ptr<const WordTables> tables;
  int m = 0;
  std::vector<int> order;             // order[p] = 0-based vertex placed at depth p
  std::vector<std::uint8_t> adjpos;   // adjpos[p*m+q] = order[p] ~ order[q]
  bool distinct = true;
  Mask full = 0;
  Mask tie_all = 0;
  int split = 0;

  bool adjacent(int p, int q) const { return adjpos[static_cast<std::size_t>(p * m + q)] != 0; }
};

Problem make_problem(const Graph& h, int k, bool distinct) {
  Problem pr;
  pr.tables = tables_for(k);
  pr.m = h.order();
  pr.distinct = distinct;
  pr.full = k == 0 ? 0 : static_cast<Mask>((Mask{1} << k) - 1);
  pr.tie_all = k <= 1 ? 0 : static_cast<Mask>((Mask{1} << (k - 1)) - 1);
  pr.order.resize(static_cast<std::size_t>(pr.m));
  std::iota(pr.order.begin(), pr.order.end(), 0);
  std::vector<int> deg(static_cast<std::size_t>(pr.m));
  for (int v = 0; v < pr.m; ++v) deg[static_cast<std::size_t>(v)] = h.degree(v + 1);
  std::ranges::stable_sort(pr.order, [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
  pr.adjpos.assign(static_cast<std::size_t>(pr.m * pr.m), 0);
  for (int p = 0; p < pr.m; ++p) {
    for (int q = 0; q < pr.m; ++q) {
      if (p != q && h.adjacent(pr.order[static_cast<std::size_t>(p)] + 1, pr.order[static_cast<std::size_t>(q)] + 1)) {
        pr.adjpos[static_cast<std::size_t>(p * pr.m + q)] = 1;
      }
    }
  }
  pr.split = std::min(2, std::max(pr.m - 1, 0));
  return pr;
}

struct Shared {
  Clock::time_point deadline;
  std::uint64_t node_budget = 0;
  bool deterministic = true;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> winner{SIZE_MAX};
};

enum class Outcome { Found, Exhausted, Aborted };

class Worker {
 public:
  Worker(const Problem& pr, Shared& shared)
      : pr_(pr), t_(*pr.tables), shared_(shared),
        buf_(static_cast<std::size_t>(pr.m + 1) * static_cast<std::size_t>(pr.m) * t_.row_words, 0),
        assign_(static_cast<std::size_t>(pr.m), 0) {
    for (int p = 0; p < pr_.m; ++p) {
      std::span<Word> d = dom(0, p);
      std::ranges::fill(d, ~Word{0});
      if (t_.count % 64) d.back() = (Word{1} << (t_.count % 64)) - 1;
    }
  }

  // Enumerates the admissible prefixes of length pr.split in search order.
  std::vector<std::vector<std::uint32_t>> prefixes() {
    collecting_ = true;
    prefixes_.clear();
    task_ = SIZE_MAX;
    dfs(0, ColumnState{0, 0, pr_.tie_all});
    collecting_ = false;
    return std::move(prefixes_);
  }

  Outcome run_task(std::size_t index, const std::vector<std::uint32_t>& prefix) {
    task_ = index;
    nodes_ = 0;
    pending_ = 0;
    ColumnState st{0, 0, pr_.tie_all};
    for (int d = 0; d < static_cast<int>(prefix.size()); ++d) {
      ColumnState next;
      if (!admissible(prefix[static_cast<std::size_t>(d)], st, next) || !forward(d, prefix[static_cast<std::size_t>(d)])) {
        return Outcome::Exhausted;
      }
      assign_[static_cast<std::size_t>(d)] = prefix[static_cast<std::size_t>(d)];
      st = next;
    }
    const Outcome out = dfs(static_cast<int>(prefix.size()), st);
    flush();
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint32_t>& assignment() const { return assign_; }

 private:
  std::span<Word> dom(int depth, int p) {
    const std::size_t off = (static_cast<std::size_t>(depth) * static_cast<std::size_t>(pr_.m) + static_cast<std::size_t>(p)) * t_.row_words;
    return {buf_.data() + off, t_.row_words};
  }

  bool admissible(std::uint32_t w, const ColumnState& st, ColumnState& next) const {
    const Mask z = t_.zeros[w];
    const Mask o = t_.ones[w];
    const Mask e = pr_.full & ~(z | o);
    if (o & ~st.seen) return false;
    if (((o & ~(o >> 1)) | (z & (e >> 1))) & st.tied) return false;
    const Mask lt = ((e & ~(e >> 1)) | (z & (o >> 1))) & st.tied;
    next.seen = st.seen | z | o;
    next.ones = st.ones | o;
    next.tied = st.tied & ~lt;
    return true;
  }

  // Narrows the domains of depths d+1.. after placing word w at depth d.
  bool forward(int d, std::uint32_t w) {
    const auto& k = kernels::active();
    const std::span<const Word> a = t_.row(w);
    for (int p = d + 1; p < pr_.m; ++p) {
      std::span<Word> src = dom(d, p);
      std::span<Word> dst = dom(d + 1, p);
      bool nonempty;
      if (pr_.adjacent(d, p)) {
        nonempty = k.and_to(dst.data(), src.data(), a.data(), t_.row_words);
      } else {
        nonempty = k.andnot_to(dst.data(), src.data(), a.data(), t_.row_words);
        if (nonempty && pr_.distinct) {
          Word& cell = dst[w / 64];
          const Word bit = Word{1} << (w % 64);
          if (cell & bit) {
            cell &= ~bit;
            nonempty = !k.is_zero(dst.data(), t_.row_words);
          }
        }
      }
      if (!nonempty) return false;
    }
    return true;
  }

  void flush() {
    if (pending_ == 0) return;
    const std::uint64_t total = shared_.nodes.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (total > shared_.node_budget || Clock::now() > shared_.deadline) shared_.out_of_budget = true;
  }

  bool should_stop() {
    if (shared_.out_of_budget.load(std::memory_order_relaxed)) return true;
    const std::size_t win = shared_.winner.load(std::memory_order_relaxed);
    return shared_.deterministic ? win < task_ : win != SIZE_MAX;
  }

  Outcome dfs(int d, const ColumnState& st) {
    if (d == pr_.m) return st.tied == 0 && st.ones == pr_.full ? Outcome::Found : Outcome::Exhausted;
    if (collecting_ && d == pr_.split) {
      prefixes_.emplace_back(assign_.begin(), assign_.begin() + d);
      return Outcome::Exhausted;
    }
    const std::span<const Word> domain = dom(d, d);
    for (std::size_t i = 0; i < domain.size(); ++i) {
      Word bits = domain[i];
      while (bits) {
        const auto w = static_cast<std::uint32_t>(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        ColumnState next;
        if (!admissible(w, st, next)) continue;
        ++nodes_;
        if (!collecting_ && ++pending_ >= 1024) {
          flush();
          if (should_stop()) return Outcome::Aborted;
        }
        if (d + 1 < pr_.m && !forward(d, w)) continue;
        assign_[static_cast<std::size_t>(d)] = w;
        const Outcome out = dfs(d + 1, next);
        if (out != Outcome::Exhausted) return out;
      }
    }
    return Outcome::Exhausted;
  }

  const Problem& pr_;
  const WordTables& t_;
  Shared& shared_;
  std::vector<Word> buf_;
  std::vector<std::uint32_t> assign_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
  std::size_t task_ = SIZE_MAX;
  bool collecting_ = false;
  std::vector<std::vector<std::uint32_t>> prefixes_;
};

struct LevelOutcome {
  enum Kind { Found, Infeasible, Budget } kind = Infeasible;
  std::vector<std::uint32_t> words;  // by vertex of the searched graph, 0-based
  std::uint64_t nodes = 0;
};

unsigned thread_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

LevelOutcome run_level(const Graph& h, int k, bool distinct, const SearchConfig& cfg, Clock::time_point deadline,
                       std::uint64_t node_budget) {
  const Problem pr = make_problem(h, k, distinct);
  Shared shared;
  shared.deadline = deadline;
  shared.node_budget = node_budget;
  shared.deterministic = cfg.deterministic;

  Worker root(pr, shared);
  const std::vector<std::vector<std::uint32_t>> tasks = root.prefixes();
  const std::uint64_t prefix_nodes = root.nodes();
  shared.nodes = prefix_nodes;

  struct TaskResult {
    Outcome outcome = Outcome::Aborted;
    std::uint64_t nodes = 0;
    std::vector<std::uint32_t> assignment;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};

  auto work = [&]() {
    Worker w(pr, shared);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (shared.out_of_budget) return;
      const std::size_t win = shared.winner.load();
      if (cfg.deterministic ? win < i : win != SIZE_MAX) continue;
      const Outcome out = w.run_task(i, tasks[i]);
      results[i].outcome = out;
      results[i].nodes = w.nodes();
      if (out == Outcome::Found) {
        results[i].assignment = w.assignment();
        std::size_t cur = shared.winner.load();
        while (i < cur && !shared.winner.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const unsigned threads = std::min<std::size_t>(thread_count(cfg.threads), std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }

  LevelOutcome lo;
  const std::size_t win = shared.winner.load();
  if (win != SIZE_MAX) {
    lo.kind = LevelOutcome::Found;
    std::vector<std::uint32_t> by_vertex(static_cast<std::size_t>(pr.m));
    for (int p = 0; p < pr.m; ++p) {
      by_vertex[static_cast<std::size_t>(pr.order[static_cast<std::size_t>(p)])] = results[win].assignment[static_cast<std::size_t>(p)];
    }
    lo.words = std::move(by_vertex);
    if (cfg.deterministic) {
      lo.nodes = prefix_nodes;
      for (std::size_t i = 0; i <= win; ++i) lo.nodes += results[i].nodes;
    } else {
      lo.nodes = shared.nodes.load();
    }
    return lo;
  }
  lo.nodes = shared.nodes.load();
  lo.kind = shared.out_of_budget ? LevelOutcome::Budget : LevelOutcome::Infeasible;
  if (lo.kind == LevelOutcome::Infeasible) {
    lo.nodes = prefix_nodes;
    for (const TaskResult& r : results) lo.nodes += r.nodes;
  }
  return lo;
}

OddCover expand_witness(const WordTables& t, const std::vector<std::uint32_t>& words, const std::vector<Vertex>& map, int n) {
  CoverCode code;
  code.k = t.k;
  code.words.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const std::size_t reduced = map.empty() ? static_cast<std::size_t>(v) : static_cast<std::size_t>(map[static_cast<std::size_t>(v)] - 1);
    code.words.push_back(word_symbols(t, words[reduced]));
  }
  return decode(code);
}

struct Prepared {
  Graph graph;
  std::vector<Vertex> map;  // empty when not reduced
};

Prepared prepare(const Graph& g, bool reduce) {
  if (!reduce) return {g, {}};
  TwinReduction r = reduce_twins(g);
  return {std::move(r.graph), std::move(r.map)};
}

void check_k(int k) {
  if (k < 0 || k > kMaxSearchK) {
    throw InvalidArgument("search: word length " + std::to_string(k) + " outside 0.." + std::to_string(kMaxSearchK));
  }
}

}  // namespace

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exact: return "exact";
    case SearchStatus::LowerBoundOnly: return "lower_bound_only";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::size_t lower_bound(const Graph& g) {
  std::size_t lb = (two_rank(g) + 1) / 2;
  const int n = g.order();
  if (n >= 3 && n % 2 == 1 && is_complete(g)) lb = std::max(lb, static_cast<std::size_t>((n + 1) / 2));
  const auto m = static_cast<std::size_t>(reduce_twins(g).graph.order());
  std::size_t l = 0;
  for (std::size_t p = 1; p < m; p *= 3) ++l;
  return std::max(lb, l);
}

UpperBound upper_bound(const Graph& g) {
  ConstructionResult r = construct_auto(g, true);
  return {r.size(), std::move(r.cover), r.family};
}

std::optional<OddCover> search_level(const Graph& g, int k, const SearchConfig& cfg) {
  check_k(k);
  const Prepared prep = prepare(g, cfg.reduce_twins);
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(cfg.time_budget);
  const LevelOutcome lo = run_level(prep.graph, k, cfg.reduce_twins, cfg, deadline, cfg.node_budget);
  if (lo.kind == LevelOutcome::Budget) throw std::runtime_error("search_level: budget exhausted at k = " + std::to_string(k));
  if (lo.kind == LevelOutcome::Infeasible) return std::nullopt;
  return expand_witness(*tables_for(k), lo.words, prep.map, g.order());
}

SearchResult exact_b2(const Graph& g, const SearchConfig& cfg) {
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(cfg.time_budget);
  SearchResult res;
  auto finish = [&]() {
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return res;
  };

  res.lb = lower_bound(g);
  if (g.edge_count() == 0) {
    res.status = SearchStatus::Exact;
    res.b2 = 0;
    res.lb = 0;
    res.ub = 0;
    res.witness = OddCover{g.order(), {}};
    return finish();
  }

  std::optional<UpperBound> ub;
  if (cfg.use_upper_bound) {
    ub = upper_bound(g);
    res.ub = ub->value;
  }

  const Prepared prep = prepare(g, cfg.reduce_twins);
  const int max_k = std::min(cfg.max_k, kMaxSearchK);
  const int first = static_cast<int>(res.lb) - 1;
  for (int k = std::max(first, 0);; ++k) {
    if (ub && static_cast<std::size_t>(k) == ub->value) {
      res.status = SearchStatus::Exact;
      res.b2 = ub->value;
      res.lb = ub->value;
      res.witness = ub->cover;
      if (!res.levels.empty() && res.levels.back().k == k - 1) res.certificate_k = k - 1;
      return finish();
    }
    if (k > max_k) {
      res.status = SearchStatus::LowerBoundOnly;
      if (ub) res.witness = ub->cover;
      return finish();
    }
    const std::uint64_t used = res.nodes;
    const std::uint64_t remaining = used >= cfg.node_budget ? 0 : cfg.node_budget - used;
    const LevelOutcome lo = run_level(prep.graph, k, cfg.reduce_twins, cfg, deadline, remaining);
    res.nodes += lo.nodes;
    res.levels.push_back({k, lo.nodes, lo.kind == LevelOutcome::Found});
    if (lo.kind == LevelOutcome::Budget) {
      res.status = SearchStatus::BudgetExhausted;
      if (ub) res.witness = ub->cover;
      return finish();
    }
    if (lo.kind == LevelOutcome::Found) {
      OddCover witness = expand_witness(*tables_for(k), lo.words, prep.map, g.order());
      if (!verify(witness, g).ok) throw std::logic_error("exact_b2: search produced an invalid cover");
      res.status = SearchStatus::Exact;
      res.b2 = static_cast<std::size_t>(k);
      res.lb = static_cast<std::size_t>(k);
      res.witness = std::move(witness);
      if (res.levels.size() >= 2) res.certificate_k = k - 1;
      return finish();
    }
    res.lb = std::max(res.lb, static_cast<std::size_t>(k + 1));
  }
}

}  // namespace oddcover

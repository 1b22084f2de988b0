#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>

#include <omp.h>

#include "kernel_tables.hpp"
#include "permsum/errors.hpp"
#include "permsum/search.hpp"

namespace permsum {

namespace {

using Clock = std::chrono::steady_clock;
using detail::bit;
using detail::highest_bit;
using detail::lowest_bit;

// Float slack for pruning; accumulated rounding in a sum of at most 63 terms
// is many orders of magnitude below this.
constexpr double kPruneSlack = 1e-9;
constexpr std::uint64_t kFlushEvery = 4096;
constexpr std::size_t kMaxCollected = 1'000'000;
constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

// Which reduction of the search space is sound for this (f, target).
struct Symmetry {
  bool fix_first_one = false;  // rotation: cyclic forms only
  // Reversal: require pi(1) < pi(n), or pi(2) < pi(n) once pi(1) = 1 is fixed.
  bool reversal = false;
};

Symmetry choose_symmetry(Functional f, const Rational& target, bool enabled) {
  Symmetry s;
  if (!enabled) return s;
  s.fix_first_one = is_cyclic(f);
  // Reversal maps a witness for t to one for -t on antisymmetric forms and to
  // one for t otherwise; either way it is an involution on witnesses of 0.
  s.reversal = !is_antisymmetric(f) || target.is_zero();
  return s;
}

struct Shared {
  Shared(const detail::TermTables& t, Functional fn, int len, const Rational& goal, std::uint64_t goal_mod,
         const Symmetry& symmetry, const SearchOptions& o, Clock::time_point t0)
      : tables(t), f(fn), n(len), target(goal), target_d(goal.to_double()), target_mod(goal_mod),
        sym(symmetry), opts(o), start(t0), last_report(t0) {}

  const detail::TermTables& tables;
  Functional f;
  int n;
  Rational target;
  double target_d;
  std::uint64_t target_mod;
  Symmetry sym;
  const SearchOptions& opts;
  Clock::time_point start;

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::size_t> first_found_task{kNoTask};

  std::mutex mutex;  // guards everything below
  Clock::time_point last_report;
  double best_gap = std::numeric_limits<double>::infinity();
  std::vector<int> best_perm;
  int report_depth = 0;
  std::vector<std::pair<std::size_t, std::vector<Witness>>> found;  // per task
};

class Worker {
 public:
  Worker(Shared& shared, std::size_t task) : s_(shared), task_(task), seq_(static_cast<std::size_t>(shared.n)) {}

  // Runs the DFS below `prefix`; returns false if stopped early.
  bool run(const std::vector<int>& prefix) {
    std::uint64_t unused = detail::all_values(s_.n);
    double partial = 0.0;
    std::uint64_t partial_mod = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      seq_[i] = prefix[i];
      unused &= ~bit(prefix[i]);
      if (i > 0) {
        partial += s_.tables.term(prefix[i - 1], prefix[i]);
        partial_mod = detail::add_mod(partial_mod, s_.tables.term_mod(prefix[i - 1], prefix[i]));
      }
    }
    const int depth = static_cast<int>(prefix.size());
    if (!admissible(depth, unused, partial)) {
      flush();
      return !stopped_;
    }
    dfs(depth, unused, partial, partial_mod);
    flush();
    return !stopped_;
  }

  std::vector<Witness> take_witnesses() { return std::move(witnesses_); }

 private:
  // Reversal symmetry: the last entry must exceed the entry at the anchor
  // position.
  bool reversal_ok(int depth, std::uint64_t unused) const {
    if (!s_.sym.reversal) return true;
    const int anchor_pos = s_.sym.fix_first_one ? 1 : 0;
    if (depth <= anchor_pos) return true;
    const int anchor = seq_[static_cast<std::size_t>(anchor_pos)];
    if (unused != 0) return highest_bit(unused) > anchor;
    return depth - 1 == anchor_pos || seq_[static_cast<std::size_t>(depth - 1)] > anchor;
  }

  bool admissible(int depth, std::uint64_t unused, double partial) const {
    if (!reversal_ok(depth, unused)) return false;
    if (unused == 0 || !s_.opts.prune || depth == 0) return true;
    double lo = 0.0;
    double hi = 0.0;
    s_.tables.completion_bounds(unused, seq_[depth - 1], seq_[0], lo, hi);
    return partial + hi >= s_.target_d - kPruneSlack && partial + lo <= s_.target_d + kPruneSlack;
  }

  void dfs(int depth, std::uint64_t unused, double partial, std::uint64_t partial_mod) {
    if (unused == 0) {
      leaf(partial, partial_mod);
      return;
    }
    const int last = seq_[depth - 1];
    if (s_.opts.order == CandidateOrder::kAscending) {
      for (std::uint64_t m = unused; m; m &= m - 1) {
        if (stopped_) return;
        step(depth, unused, partial, partial_mod, last, lowest_bit(m));
      }
      return;
    }
    int order[64];
    int count = 0;
    for (std::uint64_t m = unused; m; m &= m - 1) order[count++] = lowest_bit(m);
    const double goal = s_.target_d - partial;
    std::stable_sort(order, order + count, [&](int x, int y) {
      return std::fabs(s_.tables.term(last, x) - goal) < std::fabs(s_.tables.term(last, y) - goal);
    });
    for (int i = 0; i < count && !stopped_; ++i) step(depth, unused, partial, partial_mod, last, order[i]);
  }

  void step(int depth, std::uint64_t unused, double partial, std::uint64_t partial_mod, int last, int v) {
    if (++pending_ >= kFlushEvery) flush();
    depth_ = depth + 1;
    seq_[depth] = v;
    const std::uint64_t rest = unused & ~bit(v);
    const double next = partial + s_.tables.term(last, v);
    if (!admissible(depth + 1, rest, next)) return;
    dfs(depth + 1, rest, next, detail::add_mod(partial_mod, s_.tables.term_mod(last, v)));
  }

  void leaf(double partial, std::uint64_t partial_mod) {
    if (is_cyclic(s_.f)) {
      partial += s_.tables.term(seq_.back(), seq_.front());
      partial_mod = detail::add_mod(partial_mod, s_.tables.term_mod(seq_.back(), seq_.front()));
    }
    const double gap = std::fabs(partial - s_.target_d);
    if (gap < best_gap_) {
      best_gap_ = gap;
      best_perm_ = seq_;
    }
    if (partial_mod != s_.target_mod) return;
    // Residues agree; settle it exactly with the independent evaluator.
    Witness w(Permutation(seq_), s_.f);
    if (w.value() != s_.target) return;
    if (witnesses_.size() < kMaxCollected) witnesses_.push_back(std::move(w));
    if (s_.opts.first_only) {
      std::size_t cur = s_.first_found_task.load();
      while (task_ < cur && !s_.first_found_task.compare_exchange_weak(cur, task_)) {
      }
      stopped_ = true;
    }
  }

  void flush() {
    const std::uint64_t total = s_.nodes.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (s_.opts.first_only && s_.first_found_task.load() < task_) stopped_ = true;
    if (s_.budget_hit.load()) stopped_ = true;
    const auto now = Clock::now();
    if ((s_.opts.node_budget && total >= *s_.opts.node_budget) ||
        (s_.opts.time_budget && now - s_.start >= *s_.opts.time_budget)) {
      s_.budget_hit = true;
      stopped_ = true;
    }
    if (s_.opts.on_progress) report(now, total);
  }

  void report(Clock::time_point now, std::uint64_t total) {
    std::unique_lock lock(s_.mutex, std::try_to_lock);
    if (!lock.owns_lock()) return;
    if (best_gap_ < s_.best_gap) {
      s_.best_gap = best_gap_;
      s_.best_perm = best_perm_;
    }
    if (now - s_.last_report < s_.opts.progress_interval) return;
    s_.last_report = now;
    Progress p;
    p.nodes = total;
    p.depth = depth_;
    if (!s_.best_perm.empty()) {
      Permutation best(s_.best_perm);
      Rational dev = evaluate(s_.f, best) - s_.target;
      p.best_deviation = dev.sign() < 0 ? -dev : dev;
      p.best = std::move(best);
    }
    s_.opts.on_progress(p);
  }

  Shared& s_;
  std::size_t task_;
  std::vector<int> seq_;
  std::uint64_t pending_ = 0;
  int depth_ = 0;
  bool stopped_ = false;
  double best_gap_ = std::numeric_limits<double>::infinity();
  std::vector<int> best_perm_;
  std::vector<Witness> witnesses_;
};

// Prefixes of a fixed length that respect the symmetry constraints, in
// lexicographic order. Each is an independent unit of work.
std::vector<std::vector<int>> split_tasks(int n, const Symmetry& sym, int workers) {
  int depth = workers > 1 ? 3 : 1;
  if (sym.fix_first_one) ++depth;
  depth = std::min(depth, n);
  std::vector<std::vector<int>> tasks;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, std::uint64_t unused) -> void {
    if (static_cast<int>(prefix.size()) == depth) {
      tasks.push_back(prefix);
      return;
    }
    for (std::uint64_t m = unused; m; m &= m - 1) {
      const int v = lowest_bit(m);
      if (prefix.empty() && sym.fix_first_one && v != 1) continue;
      prefix.push_back(v);
      self(self, unused & ~bit(v));
      prefix.pop_back();
    }
  };
  rec(rec, detail::all_values(n));
  return tasks;
}

}  // namespace

SearchResult find_witness(Functional f, int n, const Rational& target, const SearchOptions& opts) {
  if (n < min_length(f) || n > kMaxSearchLength) {
    throw InvalidArgument(std::string(name(f)) + " search needs " + std::to_string(min_length(f)) +
                          " <= n <= " + std::to_string(kMaxSearchLength) + ", got n = " +
                          std::to_string(n));
  }
  if (opts.workers < 1) throw InvalidArgument("workers must be positive");
  if (opts.node_budget && *opts.node_budget == 0) throw InvalidArgument("node budget must be positive");
  if (opts.time_budget && opts.time_budget->count() <= 0) {
    throw InvalidArgument("time budget must be positive");
  }

  const auto start = Clock::now();
  const detail::TermTables tables(f, n);
  const Symmetry sym = choose_symmetry(f, target, opts.symmetry_reduction);
  SearchResult result;
  const std::uint64_t target_mod = residue_mod(target, detail::kModulus);
  if (target_mod == detail::kModulus) {
    // Every value has a denominator built from primes far below the modulus.
    result.status = SearchStatus::kExhausted;
    result.space_exhausted = true;
    result.elapsed = Clock::now() - start;
    return result;
  }
  Shared shared(tables, f, n, target, target_mod, sym, opts, start);

  const auto tasks = split_tasks(n, sym, opts.workers);
  std::atomic<bool> all_complete{true};

#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.workers)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (shared.budget_hit.load() || (opts.first_only && shared.first_found_task.load() < t)) {
      all_complete = false;
      continue;
    }
    Worker worker(shared, t);
    if (!worker.run(tasks[t])) all_complete = false;
    auto w = worker.take_witnesses();
    if (!w.empty()) {
      std::lock_guard lock(shared.mutex);
      shared.found.emplace_back(t, std::move(w));
    }
  }

  std::sort(shared.found.begin(), shared.found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [task, ws] : shared.found) {
    for (auto& w : ws) {
      if (result.witnesses.size() >= kMaxCollected) break;
      result.witnesses.push_back(std::move(w));
    }
    if (opts.first_only && !result.witnesses.empty()) break;
  }
  if (opts.first_only && result.witnesses.size() > 1) result.witnesses.erase(result.witnesses.begin() + 1, result.witnesses.end());

  result.nodes = shared.nodes.load();
  result.space_exhausted = all_complete.load() && !shared.budget_hit.load();
  if (!result.witnesses.empty()) {
    result.status = SearchStatus::kFound;
  } else if (result.space_exhausted) {
    result.status = SearchStatus::kExhausted;
  } else {
    result.status = SearchStatus::kBudgetExceeded;
  }
  result.elapsed = Clock::now() - start;
  return result;
}

}  // namespace permsum

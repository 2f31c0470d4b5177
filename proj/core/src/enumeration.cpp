#include "extremal/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <thread>
#include <vector>

#include "extremal/isomorphism.hpp"

namespace extremal {

namespace {

using Words = std::vector<std::uint64_t>;

int count(const Words& a) {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

int count_and(const Words& a, const Words& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

bool none(const Words& a) {
  return std::all_of(a.begin(), a.end(), [](auto w) { return w == 0; });
}

void set_bit(Words& a, int v) { a[v >> 6] |= std::uint64_t{1} << (v & 63); }
void clear_bit(Words& a, int v) { a[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

void and_into(Words& out, const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
}

template <typename Fn>
void for_each_bit(const Words& a, Fn&& fn) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::uint64_t w = a[i]; w != 0; w &= w - 1) fn(static_cast<int>(i * 64 + std::countr_zero(w)));
}

struct Graph {
  std::vector<SetWord> vertex;  // canonical order
  std::vector<Words> adj;
  std::vector<Words> disjoint;  // complement of adj without the vertex itself
  std::size_t words = 0;

  explicit Graph(Params p) {
    for_each_subset(ground(p.n), p.k, [&](SetWord s) { vertex.push_back(s); });
    words = (vertex.size() + 63) / 64;
    adj.assign(vertex.size(), Words(words, 0));
    for (std::size_t a = 0; a < vertex.size(); ++a)
      for (std::size_t b = a + 1; b < vertex.size(); ++b)
        if (meets(vertex[a], vertex[b])) {
          set_bit(adj[a], static_cast<int>(b));
          set_bit(adj[b], static_cast<int>(a));
        }
    disjoint.assign(vertex.size(), Words(words, 0));
    for (std::size_t a = 0; a < vertex.size(); ++a)
      for (std::size_t b = 0; b < vertex.size(); ++b)
        if (a != b && !meets(vertex[a], vertex[b])) set_bit(disjoint[a], static_cast<int>(b));
  }
};

struct Task {
  std::vector<int> clique;
  Words candidates, excluded;
};

class Search {
 public:
  using Clock = std::chrono::steady_clock;

  Search(const Graph& g, Params params, const EnumBudget& budget, const EnumOptions& options,
         std::atomic<std::uint64_t>& nodes, std::atomic<bool>& stop, std::string& stop_reason,
         Clock::time_point start)
      : g_(g), params_(params), budget_(budget), options_(options), nodes_(nodes), stop_(stop),
        stop_reason_(stop_reason), start_(start) {}

  // Children of the root, in the order a serial search would visit them.
  std::vector<Task> root_tasks() {
    Words P(g_.words, 0), X(g_.words, 0);
    for (std::size_t v = 0; v < g_.vertex.size(); ++v) set_bit(P, static_cast<int>(v));
    std::vector<Task> tasks;
    if (!tick()) return tasks;
    if (g_.vertex.empty()) return tasks;
    if (static_cast<std::size_t>(count(P)) < options_.min_size) return tasks;
    const int u = pivot(P, X);
    Words branch = P;
    for (std::size_t i = 0; i < g_.words; ++i) branch[i] &= ~g_.adj[u][i];
    for_each_bit(branch, [&](int v) {
      if (static_cast<std::size_t>(count(P)) < options_.min_size) return;
      Task t;
      t.clique = {v};
      t.candidates.assign(g_.words, 0);
      t.excluded.assign(g_.words, 0);
      and_into(t.candidates, P, g_.adj[v]);
      and_into(t.excluded, X, g_.adj[v]);
      tasks.push_back(std::move(t));
      clear_bit(P, v);
      set_bit(X, v);
    });
    return tasks;
  }

  void run(Task& t, const std::function<bool(std::vector<int>&)>& emit) {
    emit_ = &emit;
    expand(t.clique, t.candidates, t.excluded);
  }

 private:
  bool tick() {
    if (stop_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.max_nodes != 0 && n > budget_.max_nodes) return halt("max_nodes");
    if (budget_.max_millis != 0 && (n & 1023) == 0) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
      if (ms > budget_.max_millis) return halt("max_millis");
    }
    return true;
  }

  bool halt(const char* why) {
    bool expected = false;
    if (stop_.compare_exchange_strong(expected, true)) stop_reason_ = why;
    return false;
  }

  int pivot(const Words& P, const Words& X) const {
    int best = -1, best_deg = -1;
    auto consider = [&](int u) {
      if (options_.pivot == PivotRule::First) {
        if (best < 0 || u < best) best = u;
        return;
      }
      const int d = count_and(P, g_.adj[u]);
      if (d > best_deg) {
        best_deg = d;
        best = u;
      }
    };
    for_each_bit(P, consider);
    for_each_bit(X, consider);
    return best;
  }

  // Greedy cover of P by classes of pairwise disjoint sets; a clique takes at
  // most one vertex per class, so the class count bounds its size.
  std::size_t color_bound(const Words& P) const {
    Words rest = P, cls(g_.words);
    std::size_t colors = 0;
    for (std::size_t i = 0; i < g_.words; ++i) {
      while (rest[i] != 0) {
        int v = static_cast<int>(i * 64 + std::countr_zero(rest[i]));
        ++colors;
        and_into(cls, rest, g_.disjoint[v]);
        clear_bit(rest, v);
        while (!none(cls)) {
          int w = -1;
          for (std::size_t q = 0; q < g_.words && w < 0; ++q)
            if (cls[q]) w = static_cast<int>(q * 64 + std::countr_zero(cls[q]));
          clear_bit(rest, w);
          for (std::size_t q = 0; q < g_.words; ++q) cls[q] &= g_.disjoint[w][q];
        }
      }
    }
    return colors;
  }

  void expand(std::vector<int>& R, Words P, Words X) {
    if (!tick()) return;
    if (none(P)) {
      if (none(X) && R.size() >= options_.min_size) {
        if (!(*emit_)(R)) halt("stopped");
      }
      return;
    }
    if (R.size() + static_cast<std::size_t>(count(P)) < options_.min_size) return;
    if (options_.min_size > R.size() && R.size() + color_bound(P) < options_.min_size) return;
    const int u = pivot(P, X);
    Words branch = P;
    for (std::size_t i = 0; i < g_.words; ++i) branch[i] &= ~g_.adj[u][i];
    Words childP(g_.words), childX(g_.words);
    bool go = true;
    for_each_bit(branch, [&](int v) {
      if (!go || stop_.load(std::memory_order_relaxed)) return;
      if (R.size() + static_cast<std::size_t>(count(P)) < options_.min_size) {
        go = false;
        return;
      }
      and_into(childP, P, g_.adj[v]);
      and_into(childX, X, g_.adj[v]);
      R.push_back(v);
      expand(R, childP, childX);
      R.pop_back();
      clear_bit(P, v);
      set_bit(X, v);
    });
  }

  const Graph& g_;
  Params params_;
  const EnumBudget& budget_;
  const EnumOptions& options_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& stop_;
  std::string& stop_reason_;
  Clock::time_point start_;
  const std::function<bool(std::vector<int>&)>* emit_ = nullptr;
};

// Final emission stage shared by serial and parallel runs.
class Emitter {
 public:
  Emitter(const Graph& g, Params p, const EnumBudget& budget, const EnumOptions& options,
          const FamilySink& sink)
      : g_(g), params_(p), budget_(budget), options_(options), sink_(sink) {}

  // Returns false when the consumer or the family cap ends the run.
  bool operator()(const std::vector<int>& clique, std::string& stop_reason) {
    std::vector<SetWord> sets;
    sets.reserve(clique.size());
    for (int v : clique) sets.push_back(g_.vertex[v]);
    std::sort(sets.begin(), sets.end());
    Family f = Family::from_sorted_unchecked(params_, std::move(sets));
    if (options_.dedup_isomorphic) {
      auto& bucket = classes_[iso_fingerprint(f)];
      for (const Family& rep : bucket)
        if (are_isomorphic(rep, f)) return true;
      bucket.push_back(f);
    }
    if (budget_.max_families != 0 && emitted_ >= budget_.max_families) {
      stop_reason = "max_families";
      return false;
    }
    ++emitted_;
    if (!sink_(f)) {
      stop_reason = "stopped";
      return false;
    }
    return true;
  }

  std::uint64_t emitted() const { return emitted_; }

 private:
  const Graph& g_;
  Params params_;
  const EnumBudget& budget_;
  const EnumOptions& options_;
  const FamilySink& sink_;
  std::map<std::vector<std::int64_t>, std::vector<Family>> classes_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

EnumOutcome enumerate_maximal_intersecting(Params params, const EnumBudget& budget,
                                           const EnumOptions& options, const FamilySink& sink) {
  params.validate();
  params.require_kneser("enumerate_maximal_intersecting");
  if (params.k < 1) throw FamilyError("enumerate_maximal_intersecting: k must be positive");

  const Graph g(params);
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::string stop_reason;
  const auto start = Search::Clock::now();
  Emitter emitter(g, params, budget, options, sink);

  Search root(g, params, budget, options, nodes, stop, stop_reason, start);
  std::vector<Task> tasks = root.root_tasks();

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    std::string emit_reason;
    std::function<bool(std::vector<int>&)> emit = [&](std::vector<int>& clique) {
      return emitter(clique, emit_reason);
    };
    for (Task& t : tasks) {
      if (stop.load()) break;
      Search s(g, params, budget, options, nodes, stop, stop_reason, start);
      s.run(t, emit);
    }
    if (!emit_reason.empty()) stop_reason = emit_reason;
  } else {
    // Each worker buffers the cliques of its tasks; buffers are replayed in task order.
    std::vector<std::vector<std::vector<int>>> found(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Search s(g, params, budget, options, nodes, stop, stop_reason, start);
      for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
        if (stop.load()) break;
        std::function<bool(std::vector<int>&)> collect = [&found, i](std::vector<int>& c) {
          found[i].push_back(c);
          return true;
        };
        s.run(tasks[i], collect);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::string emit_reason;
    for (auto& bucket : found) {
      bool go = true;
      for (auto& c : bucket)
        if (!(go = emitter(c, emit_reason))) break;
      if (!go) break;
    }
    if (!emit_reason.empty()) stop_reason = emit_reason;
  }

  EnumOutcome out;
  out.nodes = std::min<std::uint64_t>(nodes.load(), budget.max_nodes ? budget.max_nodes : nodes.load());
  out.emitted = emitter.emitted();
  if (!stop_reason.empty()) {
    out.status = EnumStatus::Inconclusive;
    out.stop_reason = stop_reason;
  }
  return out;
}

std::uint64_t enumerate_minimal_tau2(int m, int s, const FamilySink& sink, int member_cap) {
  const Params p{m, s};
  p.validate();
  if (s < 1 || m <= 2 * s) throw FamilyError("enumerate_minimal_tau2: requires s >= 1 and m > 2s");
  const int cap = member_cap > 0 ? member_cap : s + 1;

  std::vector<SetWord> all;
  for_each_subset(ground(m), s, [&](SetWord a) { all.push_back(a); });

  std::uint64_t emitted = 0;
  bool go = true;
  std::vector<SetWord> members;

  // Every member but the newest must still share an element after any single removal.
  auto minimal = [&]() {
    const std::size_t z = members.size();
    for (std::size_t drop = 0; drop + 1 < z; ++drop) {
      SetWord acc = ground(m);
      for (std::size_t l = 0; l < z; ++l)
        if (l != drop) acc &= members[l];
      if (acc == 0) return false;
    }
    return true;
  };

  std::function<void(std::size_t, SetWord)> dfs = [&](std::size_t from, SetWord common) {
    for (std::size_t idx = from; idx < all.size() && go; ++idx) {
      const SetWord next = common & all[idx];
      members.push_back(all[idx]);
      if (next == 0) {
        if (members.size() >= 2 && minimal()) {
          ++emitted;
          go = sink(Family::from_sorted_unchecked(p, members));
        }
      } else if (static_cast<int>(members.size()) < cap) {
        dfs(idx + 1, next);
      }
      members.pop_back();
    }
  };
  dfs(0, ground(m));
  return emitted;
}

}  // namespace extremal

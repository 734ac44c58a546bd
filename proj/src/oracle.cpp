#include "orientdp/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>
#include <vector>

#include "orientdp/error.hpp"

namespace orientdp::oracle {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 14;

// Orientation evaluation on 64-bit vertex sets. One instance per graph, shared
// read-only across workers.
class Evaluator {
 public:
  Evaluator(const UndirectedGraph& g, bool prune)
      : n_(g.vertex_count()), prune_(prune), edges_(g.edges().begin(), g.edges().end()),
        low_(n_, 0), high_(n_, 0) {
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      low_[edges_[i].u] |= std::uint64_t{1} << i;
      high_[edges_[i].v] |= std::uint64_t{1} << i;
    }
  }

  // False when some vertex is a source or a sink, which makes the
  // orientation not strongly connected.
  bool passes_prefilter(std::uint64_t mask) const {
    if (!prune_ || n_ < 2) return true;
    for (std::size_t v = 0; v < n_; ++v) {
      const std::uint64_t out = (~mask & low_[v]) | (mask & high_[v]);
      const std::uint64_t in = (mask & low_[v]) | (~mask & high_[v]);
      if (out == 0 || in == 0) return false;
    }
    return true;
  }

  void build(std::uint64_t mask, std::vector<std::uint64_t>& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if ((mask >> i) & 1U) {
        out[e.v] |= std::uint64_t{1} << e.u;
      } else {
        out[e.u] |= std::uint64_t{1} << e.v;
      }
    }
  }

  // Diameter if it is at most `bound`, otherwise kNone.
  std::uint64_t diameter_within(std::uint64_t mask, std::uint64_t bound,
                                std::vector<std::uint64_t>& out) const {
    if (!passes_prefilter(mask)) return kNone;
    build(mask, out);
    std::uint64_t diam = 0;
    for (std::size_t s = 0; s < n_; ++s) {
      std::uint64_t reach = std::uint64_t{1} << s;
      std::uint64_t frontier = reach;
      std::uint64_t steps = 0;
      while (reach != all_) {
        if (steps >= bound) return kNone;
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= out[std::countr_zero(f)];
        next &= ~reach;
        if (next == 0) return kNone;
        reach |= next;
        frontier = next;
        ++steps;
      }
      diam = std::max(diam, steps);
    }
    return diam;
  }

  // Wiener index if it is at most `bound`, otherwise kNone.
  std::uint64_t wiener_within(std::uint64_t mask, std::uint64_t bound,
                              std::vector<std::uint64_t>& out) const {
    if (!passes_prefilter(mask)) return kNone;
    build(mask, out);
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < n_; ++s) {
      std::uint64_t reach = std::uint64_t{1} << s;
      std::uint64_t frontier = reach;
      std::uint64_t steps = 0;
      while (reach != all_) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= out[std::countr_zero(f)];
        next &= ~reach;
        if (next == 0) return kNone;
        ++steps;
        total += steps * static_cast<std::uint64_t>(std::popcount(next));
        if (total > bound) return kNone;
        reach |= next;
        frontier = next;
      }
    }
    return total;
  }

  std::size_t vertex_count() const { return n_; }

 private:
  std::size_t n_;
  bool prune_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> low_;
  std::vector<std::uint64_t> high_;
  std::uint64_t all_ = 0;
};

struct ChunkOutcome {
  std::uint64_t value = kNone;
  std::uint64_t mask = 0;
  std::uint64_t explored = 0;
};

struct Space {
  std::size_t m;
  bool halved;

  std::uint64_t size() const {
    const std::size_t free_bits = halved && m > 0 ? m - 1 : m;
    return std::uint64_t{1} << free_bits;
  }
  std::uint64_t mask(std::uint64_t k) const { return halved && m > 0 ? k << 1 : k; }
};

unsigned worker_count(const Options& options, std::uint64_t chunks) {
  unsigned t = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  t = std::max(1U, t);
  return static_cast<unsigned>(std::min<std::uint64_t>(t, chunks));
}

void check_cap(const UndirectedGraph& g, const Options& options) {
  const std::size_t cap = std::min(options.edge_cap, kHardEdgeCap);
  if (g.edge_count() > cap) {
    throw Error(ErrorCode::CapExceeded,
                "graph has " + std::to_string(g.edge_count()) +
                    " edges, exceeding the oracle edge cap of " + std::to_string(cap));
  }
}

// Returns true when exhaustive search is pointless: a disconnected graph or a
// bridge makes every orientation infinite.
bool trivially_infinite(const UndirectedGraph& g) {
  const auto report = connectivity_report(g);
  return !report.connected || !report.bridges.empty();
}

// Minimization driver. `evaluate(mask, bound, scratch)` returns the measure if
// it is <= bound, else kNone. Per chunk, the first mask attaining the chunk
// minimum is kept; the reduction takes the minimum value over chunks and the
// earliest chunk among ties, which yields the least optimal mask overall
// regardless of worker count.
template <typename Evaluate>
Result minimize(const UndirectedGraph& g, const Options& options, Evaluate evaluate) {
  const Space space{g.edge_count(), options.symmetry_halving};
  const std::uint64_t total = space.size();
  const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkOutcome> outcomes(chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> global_best{kNone};

  auto work = [&] {
    std::vector<std::uint64_t> scratch(g.vertex_count());
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      ChunkOutcome& outcome = outcomes[c];
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(total, begin + kChunkSize);
      for (std::uint64_t k = begin; k < end; ++k) {
        const std::uint64_t local_bound = outcome.value == kNone ? kNone - 1 : outcome.value - 1;
        const std::uint64_t bound = std::min(local_bound, global_best.load());
        const std::uint64_t mask = space.mask(k);
        const std::uint64_t v = evaluate(mask, bound, scratch);
        if (v != kNone) {
          outcome.value = v;
          outcome.mask = mask;
          std::uint64_t seen = global_best.load();
          while (v < seen && !global_best.compare_exchange_weak(seen, v)) {
          }
        }
      }
      outcome.explored = end - begin;
    }
  };

  const unsigned workers = worker_count(options, chunks);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  Result result;
  std::uint64_t best = kNone;
  std::uint64_t best_mask = 0;
  for (const auto& o : outcomes) {
    result.explored += o.explored;
    if (o.value < best) {
      best = o.value;
      best_mask = o.mask;
    }
  }
  result.witness = Orientation::from_mask(best_mask, g.edge_count());
  result.optimum = best == kNone ? Distance::infinity() : Distance(best);
  return result;
}

}  // namespace

Result min_diameter(const UndirectedGraph& g, const Options& options) {
  check_cap(g, options);
  if (trivially_infinite(g)) {
    return Result{Distance::infinity(), Orientation(g.edge_count()), 0};
  }
  const Evaluator eval(g, options.prune_sources_sinks);
  return minimize(g, options, [&](std::uint64_t mask, std::uint64_t bound, auto& scratch) {
    return eval.diameter_within(mask, bound, scratch);
  });
}

Result min_wiener(const UndirectedGraph& g, const Options& options) {
  check_cap(g, options);
  if (trivially_infinite(g)) {
    return Result{Distance::infinity(), Orientation(g.edge_count()), 0};
  }
  const Evaluator eval(g, options.prune_sources_sinks);
  return minimize(g, options, [&](std::uint64_t mask, std::uint64_t bound, auto& scratch) {
    return eval.wiener_within(mask, bound, scratch);
  });
}

Decision decide_diameter(const UndirectedGraph& g, std::uint64_t l, const Options& options) {
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "diameter bound must be at least 1");
  check_cap(g, options);
  Decision decision;
  if (trivially_infinite(g)) return decision;

  const Evaluator eval(g, options.prune_sources_sinks);
  const Space space{g.edge_count(), options.symmetry_halving};
  const std::uint64_t total = space.size();
  const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkOutcome> outcomes(chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> first_hit{kNone};

  // Chunks past the earliest chunk known to hold a hit cannot change the answer.
  auto work = [&] {
    std::vector<std::uint64_t> scratch(g.vertex_count());
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks || c > first_hit.load()) return;
      ChunkOutcome& outcome = outcomes[c];
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(total, begin + kChunkSize);
      for (std::uint64_t k = begin; k < end; ++k) {
        ++outcome.explored;
        const std::uint64_t mask = space.mask(k);
        if (eval.diameter_within(mask, l, scratch) != kNone) {
          outcome.value = 0;
          outcome.mask = mask;
          std::uint64_t seen = first_hit.load();
          while (c < seen && !first_hit.compare_exchange_weak(seen, c)) {
          }
          break;
        }
      }
    }
  };

  const unsigned workers = worker_count(options, chunks);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& o : outcomes) {
    decision.explored += o.explored;
    if (!decision.feasible && o.value != kNone) {
      decision.feasible = true;
      decision.witness = Orientation::from_mask(o.mask, g.edge_count());
    }
  }
  return decision;
}

}  // namespace orientdp::oracle

#include "ckbound/search.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>

#include "ckbound/bounds.hpp"
#include "ckbound/errors.hpp"
#include "ckbound/graph6.hpp"
#include "ckbound/spectrum.hpp"

namespace ckbound {

namespace {

constexpr double kRatioGrid = 1e12;
constexpr double kExceedSlack = 1e-9;

double ratio_from_eigenvalues(const std::vector<double>& desc, std::size_t k, std::size_t n) {
  const double shifted = desc[k - 1] + 1.0;
  if (shifted <= kCompareTolerance) return 0.0;
  return shifted / static_cast<double>(n);
}

// Total order used to pick a witness: higher ratio (on a 1e-12 grid), then
// the smaller graph6 string.
struct Candidate {
  std::int64_t key = std::numeric_limits<std::int64_t>::min();
  double ratio = 0;
  std::string g6;

  bool beats(const Candidate& o) const { return key > o.key || (key == o.key && g6 < o.g6); }
};

std::int64_t ratio_key(double r) { return std::llround(r * kRatioGrid); }

void check_k(std::size_t k, std::size_t n) {
  if (k == 0 || k > n) {
    throw InvalidArgument("k = " + std::to_string(k) + " must satisfy 1 <= k <= n = " + std::to_string(n));
  }
}

SearchResult finish(SearchResult r) {
  self_check(r);
  return r;
}

}  // namespace

const char* to_string(SearchMethod m) noexcept {
  switch (m) {
    case SearchMethod::Exhaustive: return "exhaustive";
    case SearchMethod::Stream: return "stream";
    case SearchMethod::HillClimb: return "hillclimb";
    case SearchMethod::Anneal: return "anneal";
  }
  return "unknown";
}

std::uint64_t SearchRng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("SearchRng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double SearchRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double blowup_objective(const Graph& g, std::size_t k) {
  check_k(k, g.n());
  return ratio_from_eigenvalues(symmetric_eigenvalues(g.adjacency_matrix(), g.n()), k, g.n());
}

void self_check(const SearchResult& r) {
  const Graph g = g6_decode(r.best_graph);
  const double again = blowup_objective(g, r.k);
  if (std::abs(again - r.best_ratio) > 1e-12) {
    throw ConsistencyError("search witness " + r.best_graph + " recomputes to " + std::to_string(again) +
                           ", reported " + std::to_string(r.best_ratio));
  }
  check_upper_dominance(r.k, r.best_ratio, kExceedSlack);
}

SearchResult exhaustive_max(std::size_t k, std::size_t n, const ExhaustiveOptions& opts) {
  check_k(k, n);
  if (n > 8 || (n == 8 && !opts.allow_n8)) {
    throw InvalidArgument("exhaustive search is capped at n <= 7 (n = 8 needs explicit acknowledgment; 2^28 graphs)");
  }
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<Edge> order;  // graph6 bit order
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) order.emplace_back(i, j);
  }

  unsigned threads = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 1024)));
  threads = std::min(threads, 64U);

  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    Candidate best;
    std::vector<double> matrix(n * n);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      std::fill(matrix.begin(), matrix.end(), 0.0);
      for (std::size_t p = 0; p < pairs; ++p) {
        if ((mask >> p) & 1U) {
          const auto [i, j] = order[p];
          matrix[i * n + j] = matrix[j * n + i] = 1.0;
        }
      }
      const double r = ratio_from_eigenvalues(symmetric_eigenvalues(matrix, n), k, n);
      const std::int64_t key = ratio_key(r);
      if (key < best.key) continue;
      GraphBuilder b(n);
      for (std::size_t p = 0; p < pairs; ++p) {
        if ((mask >> p) & 1U) b.set_edge(order[p].first, order[p].second, true);
      }
      Candidate c{key, r, g6_encode(b.build())};
      if (c.beats(best)) best = std::move(c);
    }
    return best;
  };

  std::vector<Candidate> partial(threads);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = std::min(total, t * chunk);
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back([&, t, lo, hi] { partial[t] = scan(lo, hi); });
    }
  }
  Candidate best;
  for (auto& c : partial) {
    if (c.beats(best)) best = std::move(c);
  }
  SearchResult r;
  r.best_ratio = best.ratio;
  r.best_graph = best.g6;
  r.evaluations = total;
  r.k = k;
  r.n = n;
  r.method = SearchMethod::Exhaustive;
  return finish(std::move(r));
}

SearchResult stream_max(std::size_t k, std::istream& in, const StreamOptions& opts) {
  if (k == 0) throw InvalidArgument("k must be >= 1");
  Candidate best;
  std::size_t best_n = 0;
  std::uint64_t evaluated = 0;
  std::string line;
  std::size_t line_no = 0;
  auto reject = [&](const std::string& why) {
    const std::string msg = "line " + std::to_string(line_no) + ": " + why;
    if (!opts.skip_malformed) throw InvalidArgument(msg);
    if (opts.warnings != nullptr) *opts.warnings << "warning: skipped " << msg << '\n';
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    std::optional<Graph> g;
    try {
      g = g6_decode(line);
    } catch (const ParseError& e) {
      reject(e.what());
      continue;
    } catch (const InvalidArgument& e) {
      reject(e.what());
      continue;
    }
    if (g->n() < k) {
      reject("graph has " + std::to_string(g->n()) + " vertices, fewer than k = " + std::to_string(k));
      continue;
    }
    const double r = blowup_objective(*g, k);
    ++evaluated;
    const std::int64_t key = ratio_key(r);
    if (key < best.key) continue;
    Candidate c{key, r, g6_encode(*g)};
    if (c.beats(best)) {
      best = std::move(c);
      best_n = g->n();
    }
  }
  if (evaluated == 0) throw InvalidArgument("no candidates in graph6 stream");
  SearchResult res;
  res.best_ratio = best.ratio;
  res.best_graph = best.g6;
  res.evaluations = evaluated;
  res.k = k;
  res.n = best_n;
  res.method = SearchMethod::Stream;
  return finish(std::move(res));
}

SearchResult local_search(const SearchConfig& cfg) {
  if (cfg.method != SearchMethod::HillClimb && cfg.method != SearchMethod::Anneal) {
    throw InvalidArgument("local_search needs method hillclimb or anneal");
  }
  if (cfg.n == 0 || cfg.n > 64) throw InvalidArgument("local search supports 1 <= n <= 64");
  check_k(cfg.k, cfg.n);
  if (cfg.budget == 0) throw InvalidArgument("budget must be >= 1");
  const std::size_t n = cfg.n;
  const std::size_t pairs = n * (n - 1) / 2;
  const bool anneal = cfg.method == SearchMethod::Anneal;
  const std::uint64_t stall =
      anneal ? cfg.stall_limit : std::min<std::uint64_t>(cfg.stall_limit, std::max<std::size_t>(1, 4 * pairs));

  SearchRng rng(cfg.seed);
  SearchResult res;
  res.k = cfg.k;
  res.n = n;
  res.seed = cfg.seed;
  res.method = cfg.method;
  res.best_ratio = -1.0;
  Graph best_graph(n);

  auto evaluate = [&](const Graph& g) {
    const double r = blowup_objective(g, cfg.k);
    ++res.evaluations;
    if (r > res.best_ratio) {
      res.best_ratio = r;
      best_graph = g;
      if (cfg.record_history) res.history.emplace_back(res.evaluations, r);
    }
    return r;
  };
  auto random_graph = [&] {
    GraphBuilder b(n);
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) b.set_edge(i, j, rng.coin());
    }
    return b.build();
  };

  const std::size_t runs = std::max<std::size_t>(1, cfg.restarts);
  for (std::size_t run = 0; run < runs; ++run) {
    const std::uint64_t run_budget = cfg.budget / runs + (run < cfg.budget % runs ? 1 : 0);
    if (run_budget == 0) continue;
    std::uint64_t used = 0;
    Graph state = random_graph();
    double current = evaluate(state);
    ++used;
    double temperature = cfg.initial_temperature;
    std::uint64_t rejections = 0;
    while (used < run_budget && pairs > 0) {
      const std::uint64_t p = rng.below(pairs);
      // decode pair index p in graph6 order
      std::size_t j = 1;
      while ((j + 1) * j / 2 <= p) ++j;
      const std::size_t i = p - j * (j - 1) / 2;
      Graph candidate = state.with_edge_toggled(i, j);
      const double value = evaluate(candidate);
      ++used;
      bool accept;
      if (anneal) {
        accept = value >= current || rng.unit() < std::exp((value - current) / temperature);
      } else {
        accept = value > current;
      }
      if (accept) {
        state = std::move(candidate);
        current = value;
        rejections = 0;
        if (anneal) temperature *= cfg.cooling;
      } else if (++rejections >= stall) {
        rejections = 0;
        temperature = cfg.initial_temperature;
        if (used >= run_budget) break;
        state = random_graph();
        current = evaluate(state);
        ++used;
      }
    }
  }
  res.best_graph = g6_encode(best_graph);
  return finish(std::move(res));
}

std::optional<double> record_ratio(std::size_t k) {
  if (k >= 1 && k <= 3) return 1.0 / static_cast<double>(k);
  for (const auto& row : published_table()) {
    if (row.k == k) return row.ratio.to_double();
  }
  return std::nullopt;
}

CampaignReport c3_campaign(const CampaignConfig& cfg) {
  CampaignReport report;
  for (std::size_t n : cfg.n_values) {
    if (n < 3) throw InvalidArgument("campaign needs n >= 3 (k = 3)");
    CampaignEntry entry{n, {}};
    bool have = false;
    for (std::uint64_t seed : cfg.seeds) {
      SearchConfig sc;
      sc.k = 3;
      sc.n = n;
      sc.method = SearchMethod::Anneal;
      sc.seed = seed;
      sc.budget = cfg.budget;
      sc.restarts = cfg.restarts;
      SearchResult r = local_search(sc);
      if (!have || r.best_ratio > entry.best.best_ratio) {
        entry.best = std::move(r);
        have = true;
      }
    }
    if (!have) continue;
    if (!report.global_best || entry.best.best_ratio > report.global_best->best_ratio) {
      report.global_best = entry.best;
    }
    report.per_n.push_back(std::move(entry));
  }
  report.exceeded = report.global_best && report.global_best->best_ratio > 1.0 / 3.0 + kExceedSlack;
  return report;
}

}  // namespace ckbound

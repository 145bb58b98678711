#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ckbound/graph.hpp"

namespace ckbound {

enum class SearchMethod { Exhaustive, Stream, HillClimb, Anneal };

const char* to_string(SearchMethod m) noexcept;

/// Seed used when none is given.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED'C0DE'2024'0001ULL;

/// Pseudo-random source for local search: std::mt19937_64 (its output
/// sequence is fixed by the C++ standard) with distribution code written out
/// here, so runs reproduce across standard libraries.
class SearchRng {
 public:
  explicit SearchRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform on [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double unit();
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct SearchConfig {
  std::size_t k = 1;
  std::size_t n = 1;
  SearchMethod method = SearchMethod::Anneal;
  std::uint64_t seed = kDefaultSeed;
  /// Total objective evaluations across all restarts.
  std::uint64_t budget = 100000;
  /// Independent runs sharing the budget evenly.
  std::size_t restarts = 1;
  double initial_temperature = 0.05;
  /// Temperature multiplier applied after every accepted move.
  double cooling = 0.995;
  /// Consecutive rejections before a run re-randomises its state. Hill
  /// climbing uses min(stall_limit, 4 * number of vertex pairs).
  std::uint64_t stall_limit = 5000;
  bool record_history = true;
};

struct SearchResult {
  double best_ratio = 0;
  /// graph6 of the witness.
  std::string best_graph;
  std::uint64_t evaluations = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  SearchMethod method = SearchMethod::Exhaustive;
  /// (evaluation index, new best ratio) at every improvement.
  std::vector<std::pair<std::uint64_t, double>> history;
};

/// Blowup limit ratio (lambda_k + 1) / n from the numeric spectrum, 0 when
/// lambda_k <= -1.
double blowup_objective(const Graph& g, std::size_t k);

/// Recomputes the objective from best_graph (must agree within 1e-12) and
/// checks the proven upper bound. Throws ConsistencyError on failure.
void self_check(const SearchResult& r);

struct ExhaustiveOptions {
  /// n = 8 means 2^28 candidates and must be requested explicitly.
  bool allow_n8 = false;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Maximum of the objective over every labelled graph on n vertices.
/// Ties go to the lexicographically smallest graph6 string.
SearchResult exhaustive_max(std::size_t k, std::size_t n, const ExhaustiveOptions& opts = {});

struct StreamOptions {
  bool skip_malformed = false;
  /// Receives one line per skipped input line when skip_malformed is set.
  std::ostream* warnings = nullptr;
};

/// Maximum of the objective over a stream of graph6 lines. A bare
/// ">>graph6<<" header line and blank lines are ignored.
SearchResult stream_max(std::size_t k, std::istream& in, const StreamOptions& opts = {});

/// Edge-toggle hill climbing or simulated annealing.
SearchResult local_search(const SearchConfig& cfg);

/// Best ratio known for k: 1/k for k <= 3 (proven for k <= 2, open for
/// k = 3) and the published table value for 4 <= k <= 24.
std::optional<double> record_ratio(std::size_t k);

struct CampaignConfig {
  std::vector<std::size_t> n_values;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::uint64_t budget = 20000;
  std::size_t restarts = 4;
};

struct CampaignEntry {
  std::size_t n = 0;
  SearchResult best;
};

struct CampaignReport {
  std::vector<CampaignEntry> per_n;
  std::optional<SearchResult> global_best;
  /// Some graph beat 1/3 + 1e-9.
  bool exceeded = false;
};

/// Annealing runs at k = 3 for each n and seed.
CampaignReport c3_campaign(const CampaignConfig& cfg);

}  // namespace ckbound

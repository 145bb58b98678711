#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ckbound {

using Edge = std::pair<std::size_t, std::size_t>;

/// Dense undirected simple graph on vertices 0..n-1, stored as bit-packed
/// adjacency rows. Immutable; build one with GraphBuilder or the
/// constructors below.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(std::size_t n);

  /// Throws InvalidArgument on loops, repeated edges or out-of-range ends.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  std::size_t degree(std::size_t v) const noexcept;
  std::size_t edge_count() const noexcept;
  std::size_t triangle_count() const noexcept;
  /// Common degree if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const noexcept;

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;
  /// Row-major n*n matrix of 0.0 / 1.0.
  std::vector<double> adjacency_matrix() const;

  Graph with_edge_toggled(std::size_t i, std::size_t j) const;
  /// Vertex v of this graph becomes vertex perm[v].
  Graph relabeled(std::span<const std::size_t> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  void set(std::size_t i, std::size_t j, bool on) noexcept;

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Mutable edge set that produces a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : graph_(n) {}

  std::size_t n() const noexcept { return graph_.n(); }
  bool has_edge(std::size_t i, std::size_t j) const;
  /// Rejects loops and edges already present.
  GraphBuilder& add_edge(std::size_t i, std::size_t j);
  GraphBuilder& set_edge(std::size_t i, std::size_t j, bool on);

  Graph build() const { return graph_; }

 private:
  void check_pair(std::size_t i, std::size_t j) const;
  Graph graph_;
};

Graph empty_graph(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
/// Vertex (a, x) has index a * h.n() + x.
Graph cartesian_product(const Graph& g, const Graph& h);
/// G^[t]: every vertex becomes a t-clique, every edge a K_{t,t}.
/// Vertex (v, a) has index v * t + a.
Graph closed_blowup_graph(const Graph& g, std::size_t t);

}  // namespace ckbound

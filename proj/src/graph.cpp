#include "ckbound/graph.hpp"

#include <bit>
#include <string>

#include "ckbound/errors.hpp"

namespace ckbound {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {
  if (n == 0) throw InvalidArgument("graph needs at least one vertex");
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [i, j] : edges) b.add_edge(i, j);
  return b.build();
}

void Graph::set(std::size_t i, std::size_t j, bool on) noexcept {
  const std::uint64_t bi = std::uint64_t{1} << (j % 64);
  const std::uint64_t bj = std::uint64_t{1} << (i % 64);
  if (on) {
    rows_[i * words_ + j / 64] |= bi;
    rows_[j * words_ + i / 64] |= bj;
  } else {
    rows_[i * words_ + j / 64] &= ~bi;
    rows_[j * words_ + i / 64] &= ~bj;
  }
}

std::size_t Graph::degree(std::size_t v) const noexcept {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[v * words_ + w]);
  return d;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t word : rows_) total += std::popcount(word);
  return total / 2;
}

std::size_t Graph::triangle_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!adjacent(i, j)) continue;
      for (std::size_t w = 0; w < words_; ++w) {
        total += std::popcount(rows_[i * words_ + w] & rows_[j * words_ + w]);
      }
    }
  }
  // each triangle is seen once per edge
  return total / 3;
}

std::optional<std::size_t> Graph::regular_degree() const noexcept {
  const std::size_t d = degree(0);
  for (std::size_t v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<double> Graph::adjacency_matrix() const {
  std::vector<double> m(n_ * n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (adjacent(i, j)) m[i * n_ + j] = 1.0;
    }
  }
  return m;
}

Graph Graph::with_edge_toggled(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_ || i == j) throw InvalidArgument("toggle needs two distinct vertices in range");
  Graph g = *this;
  g.set(i, j, !adjacent(i, j));
  return g;
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw InvalidArgument("permutation size does not match vertex count");
  std::vector<bool> seen(n_, false);
  for (std::size_t p : perm) {
    if (p >= n_ || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
  Graph g(n_);
  for (const auto& [i, j] : edges()) g.set(perm[i], perm[j], true);
  return g;
}

void GraphBuilder::check_pair(std::size_t i, std::size_t j) const {
  if (i >= n() || j >= n()) {
    throw InvalidArgument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range for n = " + std::to_string(n()));
  }
  if (i == j) throw InvalidArgument("loops are not allowed (vertex " + std::to_string(i) + ")");
}

bool GraphBuilder::has_edge(std::size_t i, std::size_t j) const {
  check_pair(i, j);
  return graph_.adjacent(i, j);
}

GraphBuilder& GraphBuilder::add_edge(std::size_t i, std::size_t j) {
  check_pair(i, j);
  if (graph_.adjacent(i, j)) {
    throw InvalidArgument("repeated edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  graph_.set(i, j, true);
  return *this;
}

GraphBuilder& GraphBuilder::set_edge(std::size_t i, std::size_t j, bool on) {
  check_pair(i, j);
  graph_.set(i, j, on);
  return *this;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  if (n == 0) throw InvalidArgument("complete graph needs n >= 1");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.set_edge(i, j, true);
  }
  return b.build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.set_edge(i, (i + 1) % n, true);
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.n() + h.n());
  for (const auto& [i, j] : g.edges()) b.set_edge(i, j, true);
  for (const auto& [i, j] : h.edges()) b.set_edge(g.n() + i, g.n() + j, true);
  return b.build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = i + 1; j < g.n(); ++j) b.set_edge(i, j, !g.adjacent(i, j));
  }
  return b.build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.n();
  GraphBuilder b(g.n() * m);
  for (std::size_t a = 0; a < g.n(); ++a) {
    for (const auto& [x, y] : h.edges()) b.set_edge(a * m + x, a * m + y, true);
  }
  for (const auto& [a, c] : g.edges()) {
    for (std::size_t x = 0; x < m; ++x) b.set_edge(a * m + x, c * m + x, true);
  }
  return b.build();
}

Graph closed_blowup_graph(const Graph& g, std::size_t t) {
  if (t == 0) throw InvalidArgument("blowup factor t must be >= 1");
  GraphBuilder b(g.n() * t);
  for (std::size_t v = 0; v < g.n(); ++v) {
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t c = a + 1; c < t; ++c) b.set_edge(v * t + a, v * t + c, true);
    }
  }
  for (const auto& [v, w] : g.edges()) {
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t c = 0; c < t; ++c) b.set_edge(v * t + a, w * t + c, true);
    }
  }
  return b.build();
}

}  // namespace ckbound

#ifndef GEODT_GRAPH_HPP
#define GEODT_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace geodt
{

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

struct Edge
{
  Vertex u;
  Vertex v;

  auto operator<=>(Edge const &) const = default;
};

class Graph;

/// All-pairs distances of a graph, with girth and diameter derived during the
/// same sweep of breadth-first searches.
class DistanceTable
{
public:
  explicit DistanceTable(Graph const &graph);

  std::size_t order() const { return _order; }

  Distance operator()(Vertex u, Vertex v) const
  { return _dist[static_cast<std::size_t>(u) * _order + v]; }

  std::span<Distance const> row(Vertex u) const
  { return {_dist.data() + static_cast<std::size_t>(u) * _order, _order}; }

  bool connected() const { return _connected; }

  // nullopt when the graph is disconnected (or empty)
  std::optional<Distance> diameter() const { return _diameter; }

  // nullopt for forests
  std::optional<Distance> girth() const { return _girth; }

  /// Gamma_i(v), ascending.
  std::vector<Vertex> sphere(Vertex v, Distance i) const;

private:
  std::size_t _order;
  std::vector<Distance> _dist;
  bool _connected;
  std::optional<Distance> _diameter;
  std::optional<Distance> _girth;
};

/// Immutable undirected simple graph on vertices 0..order-1.
///
/// Neighbour lists are sorted. An optional label per vertex records what the
/// vertex stands for (a subset, a field element, a coset representative);
/// labels never take part in comparisons.
class Graph
{
public:
  Graph();

  /// Duplicate edges are merged; loops and out-of-range endpoints throw
  /// InputError.
  Graph(std::size_t order, std::span<Edge const> edges,
        std::vector<std::string> labels = {});

  /// Throws InputError unless the lists describe a symmetric, loop-free
  /// relation on 0..adjacency.size()-1.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                              std::vector<std::string> labels = {});

  std::size_t order() const { return _adj.size(); }
  std::size_t size() const { return _size; }

  std::span<Vertex const> neighbors(Vertex v) const { return _adj[v]; }
  std::size_t degree(Vertex v) const { return _adj[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// The common degree, or nullopt if the graph is not regular or empty.
  std::optional<std::size_t> valency() const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !_labels.empty(); }
  std::string label(Vertex v) const;
  std::vector<std::string> const &labels() const { return _labels; }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Lazily computed, shared between copies.
  DistanceTable const &distances() const;

  /// Same order and same edge set. Labels are ignored.
  bool operator==(Graph const &other) const;

private:
  void build_bits();

  std::vector<std::vector<Vertex>> _adj;
  std::size_t _size = 0;
  std::size_t _words = 0;
  std::vector<std::uint64_t> _bits;
  std::vector<std::string> _labels;

  struct Cache;
  std::shared_ptr<Cache> _cache;
};

/// A set partition of 0..order-1 into non-empty cells.
class VertexPartition
{
public:
  VertexPartition() = default;

  /// Throws InputError if the cells overlap, miss a vertex, contain an empty
  /// cell or reference a vertex >= order.
  VertexPartition(std::size_t order, std::vector<std::vector<Vertex>> cells);

  static VertexPartition singletons(std::size_t order);

  std::size_t order() const { return _cell_of.size(); }
  std::size_t size() const { return _cells.size(); }
  std::vector<std::vector<Vertex>> const &cells() const { return _cells; }
  std::vector<Vertex> const &cell(std::size_t i) const { return _cells[i]; }
  std::size_t cell_of(Vertex v) const { return _cell_of[v]; }

  /// Common cell size, or nullopt if the cells differ in size.
  std::optional<std::size_t> uniform_cell_size() const;

private:
  std::vector<std::vector<Vertex>> _cells;
  std::vector<std::size_t> _cell_of;
};

struct Metrics
{
  std::optional<Distance> girth;      // nullopt: no cycle
  std::optional<Distance> diameter;   // nullopt: disconnected
  std::optional<std::size_t> valency; // nullopt: not regular
  bool connected = false;
};

std::vector<Distance> bfs_distances(Graph const &graph, Vertex source);

Metrics metrics(Graph const &graph);

Graph complement(Graph const &graph);

/// Induced subgraph on the given vertices (in the given order). Labels of the
/// result are the original vertex indices.
Graph induced_subgraph(Graph const &graph, std::span<Vertex const> vertices);

/// The subgraph induced on Gamma(v), relabelled 0..deg(v)-1; labels hold the
/// original vertex indices.
Graph local_graph(Graph const &graph, Vertex v);

/// u ~ v iff d(u,v) == k. Requires a connected graph and 1 <= k <= diameter.
Graph distance_graph(Graph const &graph, Distance k);

/// The fibres of an antipodal graph: classes of "equal or at distance
/// diameter", provided that relation is an equivalence (Gamma_d is a disjoint
/// union of cliques). nullopt otherwise or when the diameter is below 2.
std::optional<VertexPartition> antipodal_fibres(Graph const &graph);

struct Quotient
{
  Graph graph;
  bool is_cover = false;
};

Quotient quotient_graph(Graph const &graph, VertexPartition const &partition);

} // namespace geodt

#endif // GEODT_GRAPH_HPP

#include "geodt/graph.hpp"

#include <algorithm>
#include <mutex>
#include <queue>

#include "geodt/errors.hpp"

namespace geodt
{

struct Graph::Cache
{
  std::once_flag once;
  std::unique_ptr<DistanceTable> distances;
};

namespace
{

std::string vertex_str(Vertex v) { return std::to_string(v); }

void check_vertex(std::size_t order, Vertex v, char const *what)
{
  if (v >= order)
    throw InputError(std::string(what) + " " + vertex_str(v) +
                     " out of range for order " + std::to_string(order));
}

} // namespace

DistanceTable::DistanceTable(Graph const &graph)
: _order(graph.order()),
  _dist(_order * _order, kUnreachable),
  _connected(_order > 0)
{
  std::vector<Vertex> parent(_order);
  std::vector<Vertex> queue(_order);
  Distance best_cycle = kUnreachable;
  Distance diam = 0;

  for (Vertex s = 0; s < _order; ++s) {
    Distance *d = _dist.data() + static_cast<std::size_t>(s) * _order;
    d[s] = 0;
    parent[s] = s;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex x = queue[head++];
      for (Vertex y : graph.neighbors(x)) {
        if (d[y] == kUnreachable) {
          d[y] = d[x] + 1;
          parent[y] = x;
          queue[tail++] = y;
        } else if (y != parent[x]) {
          best_cycle = std::min(best_cycle, d[x] + d[y] + 1);
        }
      }
    }
    if (tail != _order)
      _connected = false;
    else
      diam = std::max(diam, d[queue[tail - 1]]);
  }

  if (_connected)
    _diameter = diam;
  if (best_cycle != kUnreachable)
    _girth = best_cycle;
}

std::vector<Vertex> DistanceTable::sphere(Vertex v, Distance i) const
{
  std::vector<Vertex> out;
  auto r = row(v);
  for (Vertex w = 0; w < _order; ++w)
    if (r[w] == i)
      out.push_back(w);
  return out;
}

Graph::Graph()
: _cache(std::make_shared<Cache>())
{}

Graph::Graph(std::size_t order, std::span<Edge const> edges,
             std::vector<std::string> labels)
: _adj(order),
  _labels(std::move(labels)),
  _cache(std::make_shared<Cache>())
{
  if (!_labels.empty() && _labels.size() != order)
    throw InputError("label table size does not match graph order");

  for (auto const &e : edges) {
    check_vertex(order, e.u, "edge endpoint");
    check_vertex(order, e.v, "edge endpoint");
    if (e.u == e.v)
      throw InputError("loop at vertex " + vertex_str(e.u));
    _adj[e.u].push_back(e.v);
    _adj[e.v].push_back(e.u);
  }
  for (auto &nbrs : _adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    _size += nbrs.size();
  }
  _size /= 2;
  build_bits();
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                            std::vector<std::string> labels)
{
  std::size_t n = adjacency.size();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adjacency[u]) {
      check_vertex(n, v, "neighbour");
      if (u < v)
        edges.push_back({u, v});
    }
  }
  Graph g(n, edges, std::move(labels));
  for (Vertex u = 0; u < n; ++u) {
    std::vector<Vertex> given = adjacency[u];
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    auto nb = g.neighbors(u);
    if (!std::equal(given.begin(), given.end(), nb.begin(), nb.end()))
      throw InputError("adjacency is not symmetric at vertex " + vertex_str(u));
  }
  return g;
}

void Graph::build_bits()
{
  std::size_t n = _adj.size();
  if (n > 8192)
    return;
  _words = (n + 63) / 64;
  _bits.assign(n * _words, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : _adj[u])
      _bits[u * _words + v / 64] |= std::uint64_t{1} << (v % 64);
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
  if (_words)
    return (_bits[u * _words + v / 64] >> (v % 64)) & 1u;
  return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
}

std::optional<std::size_t> Graph::valency() const
{
  if (_adj.empty())
    return std::nullopt;
  std::size_t k = _adj[0].size();
  for (auto const &nbrs : _adj)
    if (nbrs.size() != k)
      return std::nullopt;
  return k;
}

std::vector<Edge> Graph::edges() const
{
  std::vector<Edge> out;
  out.reserve(_size);
  for (Vertex u = 0; u < _adj.size(); ++u)
    for (Vertex v : _adj[u])
      if (u < v)
        out.push_back({u, v});
  return out;
}

std::string Graph::label(Vertex v) const
{
  return _labels.empty() ? vertex_str(v) : _labels[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
  if (!labels.empty() && labels.size() != order())
    throw InputError("label table size does not match graph order");
  Graph g(*this);
  g._labels = std::move(labels);
  return g;
}

DistanceTable const &Graph::distances() const
{
  std::call_once(_cache->once, [this] {
    _cache->distances = std::make_unique<DistanceTable>(*this);
  });
  return *_cache->distances;
}

bool Graph::operator==(Graph const &other) const
{
  return _adj == other._adj;
}

VertexPartition::VertexPartition(std::size_t order,
                                 std::vector<std::vector<Vertex>> cells)
: _cells(std::move(cells)),
  _cell_of(order, static_cast<std::size_t>(-1))
{
  for (std::size_t i = 0; i < _cells.size(); ++i) {
    if (_cells[i].empty())
      throw InputError("partition has an empty cell");
    for (Vertex v : _cells[i]) {
      check_vertex(order, v, "partition vertex");
      if (_cell_of[v] != static_cast<std::size_t>(-1))
        throw InputError("vertex " + vertex_str(v) + " lies in two cells");
      _cell_of[v] = i;
    }
  }
  for (Vertex v = 0; v < order; ++v)
    if (_cell_of[v] == static_cast<std::size_t>(-1))
      throw InputError("vertex " + vertex_str(v) + " is in no cell");
}

VertexPartition VertexPartition::singletons(std::size_t order)
{
  std::vector<std::vector<Vertex>> cells(order);
  for (Vertex v = 0; v < order; ++v)
    cells[v] = {v};
  return VertexPartition(order, std::move(cells));
}

std::optional<std::size_t> VertexPartition::uniform_cell_size() const
{
  if (_cells.empty())
    return std::nullopt;
  std::size_t s = _cells[0].size();
  for (auto const &c : _cells)
    if (c.size() != s)
      return std::nullopt;
  return s;
}

std::vector<Distance> bfs_distances(Graph const &graph, Vertex source)
{
  check_vertex(graph.order(), source, "source");
  std::vector<Distance> d(graph.order(), kUnreachable);
  std::queue<Vertex> q;
  d[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : graph.neighbors(x)) {
      if (d[y] == kUnreachable) {
        d[y] = d[x] + 1;
        q.push(y);
      }
    }
  }
  return d;
}

Metrics metrics(Graph const &graph)
{
  if (graph.order() == 0)
    throw InputError("metrics of the empty graph");
  auto const &dt = graph.distances();
  return {dt.girth(), dt.diameter(), graph.valency(), dt.connected()};
}

Graph complement(Graph const &graph)
{
  std::vector<Edge> edges;
  for (Vertex u = 0; u < graph.order(); ++u)
    for (Vertex v = u + 1; v < graph.order(); ++v)
      if (!graph.adjacent(u, v))
        edges.push_back({u, v});
  return Graph(graph.order(), edges, graph.labels());
}

Graph induced_subgraph(Graph const &graph, std::span<Vertex const> vertices)
{
  std::vector<Vertex> index(graph.order(), kUnreachable);
  std::vector<std::string> labels;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    check_vertex(graph.order(), vertices[i], "vertex");
    if (index[vertices[i]] != kUnreachable)
      throw InputError("repeated vertex in induced subgraph");
    index[vertices[i]] = i;
    labels.push_back(vertex_str(vertices[i]));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i)
    for (Vertex w : graph.neighbors(vertices[i]))
      if (index[w] != kUnreachable && i < index[w])
        edges.push_back({i, index[w]});
  return Graph(vertices.size(), edges, std::move(labels));
}

Graph local_graph(Graph const &graph, Vertex v)
{
  check_vertex(graph.order(), v, "vertex");
  return induced_subgraph(graph, graph.neighbors(v));
}

Graph distance_graph(Graph const &graph, Distance k)
{
  auto const &dt = graph.distances();
  if (!dt.connected())
    throw ConnectivityError("distance graph needs a connected graph");
  if (k < 1 || k > *dt.diameter())
    throw InputError("distance " + std::to_string(k) +
                     " outside 1..diameter (" + std::to_string(*dt.diameter()) +
                     ")");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < graph.order(); ++u)
    for (Vertex v = u + 1; v < graph.order(); ++v)
      if (dt(u, v) == k)
        edges.push_back({u, v});
  return Graph(graph.order(), edges, graph.labels());
}

std::optional<VertexPartition> antipodal_fibres(Graph const &graph)
{
  auto const &dt = graph.distances();
  if (graph.order() == 0 || !dt.connected())
    throw ConnectivityError("antipodality needs a connected graph");
  Distance d = *dt.diameter();
  if (d < 2)
    return std::nullopt;

  std::size_t n = graph.order();
  std::vector<std::size_t> fibre_of(n, n);
  std::vector<std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) {
    if (fibre_of[v] != n)
      continue;
    std::vector<Vertex> cell{v};
    for (Vertex w = 0; w < n; ++w)
      if (dt(v, w) == d)
        cell.push_back(w);
    std::sort(cell.begin(), cell.end());
    for (Vertex a : cell) {
      if (fibre_of[a] != n)
        return std::nullopt;
      fibre_of[a] = cells.size();
    }
    // every pair inside the cell must be at distance d
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j)
        if (dt(cell[i], cell[j]) != d)
          return std::nullopt;
    cells.push_back(std::move(cell));
  }
  return VertexPartition(n, std::move(cells));
}

Quotient quotient_graph(Graph const &graph, VertexPartition const &partition)
{
  if (partition.order() != graph.order())
    throw InputError("partition order " + std::to_string(partition.order()) +
                     " does not match graph order " +
                     std::to_string(graph.order()));

  std::size_t m = partition.size();
  std::vector<Edge> edges;
  for (auto const &e : graph.edges()) {
    auto a = static_cast<Vertex>(partition.cell_of(e.u));
    auto b = static_cast<Vertex>(partition.cell_of(e.v));
    if (a != b)
      edges.push_back({std::min(a, b), std::max(a, b)});
  }
  Graph q(m, edges);

  bool cover = true;
  std::vector<std::size_t> hits(m, 0);
  for (Vertex v = 0; v < graph.order() && cover; ++v) {
    auto own = static_cast<Vertex>(partition.cell_of(v));
    std::fill(hits.begin(), hits.end(), 0);
    for (Vertex w : graph.neighbors(v))
      ++hits[partition.cell_of(w)];
    for (Vertex b : q.neighbors(own)) {
      if (hits[b] != 1) {
        cover = false;
        break;
      }
    }
  }
  return {std::move(q), cover};
}

} // namespace geodt

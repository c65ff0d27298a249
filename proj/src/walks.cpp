#include "geodt/walks.hpp"

#include <algorithm>
#include <string>

#include "geodt/errors.hpp"
#include "geodt/log.hpp"

namespace geodt
{

void TupleList::push_back(std::span<Vertex const> tuple)
{
  if (tuple.size() != _width)
    throw InputError("tuple width mismatch");
  _data.insert(_data.end(), tuple.begin(), tuple.end());
}

namespace
{

void check_length(std::size_t s)
{
  if (s == 0)
    throw InputError("walk length must be positive");
}

void extend_arcs(Graph const &graph, std::size_t s, std::vector<Vertex> &walk,
                 TupleList &out)
{
  if (walk.size() == s + 1) {
    out.push_back(walk);
    return;
  }
  Vertex last = walk.back();
  bool has_prev = walk.size() >= 2;
  Vertex prev = has_prev ? walk[walk.size() - 2] : 0;
  for (Vertex w : graph.neighbors(last)) {
    if (has_prev && w == prev)
      continue;
    walk.push_back(w);
    extend_arcs(graph, s, walk, out);
    walk.pop_back();
  }
}

void extend_geodesics(Graph const &graph, DistanceTable const &dt,
                      std::size_t s, std::vector<Vertex> &path, TupleList &out)
{
  if (path.size() == s + 1) {
    out.push_back(path);
    return;
  }
  auto from_start = dt.row(path.front());
  auto next = static_cast<Distance>(path.size());
  for (Vertex w : graph.neighbors(path.back())) {
    if (from_start[w] != next)
      continue;
    path.push_back(w);
    extend_geodesics(graph, dt, s, path, out);
    path.pop_back();
  }
}

} // namespace

TupleList enumerate_s_arcs(Graph const &graph, std::size_t s)
{
  check_length(s);
  TupleList out(s + 1);
  std::vector<Vertex> walk;
  walk.reserve(s + 1);
  for (Vertex v = 0; v < graph.order(); ++v) {
    walk.assign(1, v);
    extend_arcs(graph, s, walk, out);
  }
  return out;
}

std::uint64_t count_s_arcs(Graph const &graph, std::size_t s)
{
  check_length(s);
  // counts[a] = number of t-arcs starting with the directed edge a
  std::size_t n = graph.order();
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex u = 0; u < n; ++u)
    offset[u + 1] = offset[u] + graph.degree(u);

  auto arc_index = [&](Vertex u, Vertex v) {
    auto nb = graph.neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    return offset[u] + static_cast<std::size_t>(it - nb.begin());
  };

  std::vector<std::uint64_t> counts(offset[n], 1), next(offset[n]);
  for (std::size_t t = 1; t < s; ++t) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : graph.neighbors(u)) {
        std::uint64_t total = 0;
        for (Vertex w : graph.neighbors(v))
          if (w != u)
            total += counts[arc_index(v, w)];
        next[arc_index(u, v)] = total;
      }
    }
    counts.swap(next);
  }
  std::uint64_t total = 0;
  for (auto c : counts)
    total += c;
  return total;
}

TupleList enumerate_s_geodesics(Graph const &graph, std::size_t s)
{
  check_length(s);
  auto const &dt = graph.distances();
  TupleList out(s + 1);
  std::vector<Vertex> path;
  path.reserve(s + 1);
  for (Vertex v = 0; v < graph.order(); ++v) {
    path.assign(1, v);
    extend_geodesics(graph, dt, s, path, out);
  }
  if (out.empty())
    warn("no " + std::to_string(s) + "-geodesics: length exceeds the diameter");
  return out;
}

std::uint64_t count_s_geodesics(Graph const &graph, std::size_t s)
{
  check_length(s);
  auto const &dt = graph.distances();
  std::size_t n = graph.order();
  std::uint64_t total = 0;
  std::vector<std::uint64_t> paths(n);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v) {
    auto r = dt.row(v);
    order.clear();
    for (Vertex w = 0; w < n; ++w)
      if (r[w] != kUnreachable && r[w] <= s)
        order.push_back(w);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return r[a] < r[b]; });
    std::fill(paths.begin(), paths.end(), 0);
    paths[v] = 1;
    for (Vertex w : order) {
      if (w == v)
        continue;
      std::uint64_t c = 0;
      for (Vertex x : graph.neighbors(w))
        if (r[x] + 1 == r[w])
          c += paths[x];
      paths[w] = c;
      if (r[w] == s)
        total += c;
    }
  }
  return total;
}

std::uint64_t count_distance_pairs(Graph const &graph, Distance t)
{
  auto const &dt = graph.distances();
  std::uint64_t total = 0;
  for (Vertex u = 0; u < graph.order(); ++u)
    for (Distance d : dt.row(u))
      if (d == t)
        ++total;
  return total;
}

} // namespace geodt

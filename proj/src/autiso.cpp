#include "geodt/autiso.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "geodt/errors.hpp"

namespace geodt
{

OrderedPartition::OrderedPartition(std::size_t order,
                                   std::vector<std::vector<Vertex>> cells)
: _order(order),
  _cells(std::move(cells))
{
  std::vector<bool> seen(order, false);
  std::size_t total = 0;
  for (auto &cell : _cells) {
    if (cell.empty())
      throw InputError("ordered partition has an empty cell");
    for (Vertex v : cell) {
      if (v >= order || seen[v])
        throw InputError("ordered partition cells overlap or leave range");
      seen[v] = true;
    }
    total += cell.size();
    std::sort(cell.begin(), cell.end());
  }
  if (total != order)
    throw InputError("ordered partition does not cover every vertex");
}

OrderedPartition OrderedPartition::unit(std::size_t order)
{
  if (order == 0)
    return OrderedPartition(0, {});
  std::vector<Vertex> all(order);
  for (Vertex v = 0; v < order; ++v)
    all[v] = v;
  return OrderedPartition(order, {std::move(all)});
}

OrderedPartition OrderedPartition::individualize(Vertex v) const
{
  if (v >= _order)
    throw InputError("vertex out of range");
  std::vector<std::vector<Vertex>> cells;
  for (auto const &cell : _cells) {
    if (std::find(cell.begin(), cell.end(), v) != cell.end() &&
        cell.size() > 1) {
      cells.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : cell)
        if (w != v)
          rest.push_back(w);
      cells.push_back(std::move(rest));
    } else {
      cells.push_back(cell);
    }
  }
  return OrderedPartition(_order, std::move(cells));
}

namespace
{

std::uint64_t splitmix(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
  return splitmix(h ^ splitmix(v));
}

// Cells are contiguous runs of elems; a cell is named by its start index.
struct Cells
{
  std::vector<Vertex> elems;
  std::vector<Vertex> pos;
  std::vector<Vertex> cell_of; // start of the cell holding v
  std::vector<Vertex> len;     // valid at cell starts
  std::size_t count = 0;

  bool discrete() const { return count == elems.size(); }

  std::vector<Vertex> starts() const
  {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < elems.size(); i += len[i])
      out.push_back(static_cast<Vertex>(i));
    return out;
  }

  // first largest non-singleton cell
  Vertex target() const
  {
    Vertex best = 0, best_len = 0;
    for (std::size_t i = 0; i < elems.size(); i += len[i]) {
      if (len[i] > best_len) {
        best_len = len[i];
        best = static_cast<Vertex>(i);
      }
    }
    return best;
  }

  std::vector<Vertex> cell(Vertex start) const
  {
    std::vector<Vertex> out(elems.begin() + start,
                            elems.begin() + start + len[start]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Returns the start of the new singleton cell.
  Vertex individualize(Vertex v)
  {
    Vertex s = cell_of[v];
    Vertex l = len[s];
    Vertex u = elems[s];
    elems[pos[v]] = u;
    pos[u] = pos[v];
    elems[s] = v;
    pos[v] = s;
    len[s] = 1;
    len[s + 1] = l - 1;
    for (Vertex k = s + 1; k < s + l; ++k)
      cell_of[elems[k]] = s + 1;
    ++count;
    return s;
  }
};

Cells make_cells(OrderedPartition const &p)
{
  Cells c;
  std::size_t n = p.order();
  c.elems.reserve(n);
  c.pos.resize(n);
  c.cell_of.resize(n);
  c.len.assign(n, 0);
  for (auto const &cell : p.cells()) {
    auto start = static_cast<Vertex>(c.elems.size());
    c.len[start] = static_cast<Vertex>(cell.size());
    for (Vertex v : cell) {
      c.pos[v] = static_cast<Vertex>(c.elems.size());
      c.cell_of[v] = start;
      c.elems.push_back(v);
    }
  }
  c.count = p.size();
  return c;
}

OrderedPartition to_partition(Cells const &c)
{
  std::vector<std::vector<Vertex>> cells;
  for (Vertex s : c.starts())
    cells.push_back(c.cell(s));
  return OrderedPartition(c.elems.size(), std::move(cells));
}

class Refiner
{
public:
  explicit Refiner(Graph const &graph)
  : _graph(graph),
    _counts(graph.order(), 0),
    _queued(graph.order(), 0),
    _marked(graph.order(), 0)
  {}

  // Refines to the coarsest equitable partition, starting from the given
  // splitter cells. Returns a hash of everything observed on the way; it
  // depends only on the isomorphism type of (graph, partition).
  std::uint64_t run(Cells &c, std::vector<Vertex> const &splitters)
  {
    std::deque<Vertex> queue;
    for (Vertex s : splitters) {
      queue.push_back(s);
      _queued[s] = 1;
    }

    std::uint64_t h = splitmix(c.count);
    while (!queue.empty()) {
      Vertex w = queue.front();
      queue.pop_front();
      _queued[w] = 0;

      _touched.clear();
      for (Vertex i = w; i < w + c.len[w]; ++i)
        for (Vertex y : _graph.neighbors(c.elems[i]))
          if (_counts[y]++ == 0)
            _touched.push_back(y);

      _cells.clear();
      for (Vertex y : _touched) {
        Vertex s = c.cell_of[y];
        if (!_marked[s]) {
          _marked[s] = 1;
          _cells.push_back(s);
        }
      }
      std::sort(_cells.begin(), _cells.end());
      h = mix(h, w);
      h = mix(h, _cells.size());

      for (Vertex s : _cells) {
        _marked[s] = 0;
        Vertex l = c.len[s];
        h = mix(h, s);
        if (l == 1) {
          h = mix(h, _counts[c.elems[s]]);
          continue;
        }
        auto first = c.elems.begin() + s;
        auto last = first + l;
        std::sort(first, last, [this](Vertex a, Vertex b) {
          return _counts[a] != _counts[b] ? _counts[a] < _counts[b] : a < b;
        });
        if (_counts[*first] == _counts[*(last - 1)]) {
          h = mix(h, _counts[*first]);
          continue;
        }

        bool was_queued = _queued[s];
        Vertex i = s;
        while (i < s + l) {
          Vertex j = i;
          auto value = _counts[c.elems[i]];
          while (j < s + l && _counts[c.elems[j]] == value)
            ++j;
          c.len[i] = j - i;
          for (Vertex k = i; k < j; ++k) {
            c.cell_of[c.elems[k]] = i;
            c.pos[c.elems[k]] = k;
          }
          h = mix(h, value);
          h = mix(h, j - i);
          if (i != s)
            ++c.count;
          if ((i != s || !was_queued) && !_queued[i]) {
            queue.push_back(i);
            _queued[i] = 1;
          }
          i = j;
        }
      }

      for (Vertex y : _touched)
        _counts[y] = 0;
    }
    return mix(h, c.count);
  }

private:
  Graph const &_graph;
  std::vector<std::uint32_t> _counts;
  std::vector<char> _queued;
  std::vector<char> _marked;
  std::vector<Vertex> _touched;
  std::vector<Vertex> _cells;
};

void check_scale(Graph const &graph)
{
  if (graph.order() > kMaxSearchOrder)
    throw ScaleError("graph has " + std::to_string(graph.order()) +
                     " vertices; the search supports at most " +
                     std::to_string(kMaxSearchOrder));
}

struct PathNode
{
  Cells cells;
  std::uint64_t trace = 0;
  Vertex target = 0; // start of the target cell (if not discrete)
  Vertex chosen = 0; // vertex individualized to reach the next node
};

class AutomorphismSearch
{
public:
  AutomorphismSearch(Graph const &graph, OrderedPartition const &start)
  : _graph(graph),
    _refiner(graph)
  {
    PathNode root;
    root.cells = make_cells(start);
    root.trace = _refiner.run(root.cells, root.cells.starts());
    _path.push_back(std::move(root));
    while (!_path.back().cells.discrete()) {
      auto &node = _path.back();
      node.target = node.cells.target();
      node.chosen = node.cells.cell(node.target).front();
      PathNode next;
      next.cells = node.cells;
      Vertex s = next.cells.individualize(node.chosen);
      next.trace = _refiner.run(next.cells, {s});
      _path.push_back(std::move(next));
    }
  }

  std::vector<Permutation> run()
  {
    std::size_t n = _graph.order();
    std::vector<Permutation> gens;
    std::vector<std::vector<Permutation>> by_level(_path.size());

    for (std::size_t lvl = _path.size() - 1; lvl-- > 0;) {
      auto const &node = _path[lvl];
      std::vector<Permutation> level_gens;
      for (std::size_t l = lvl; l < by_level.size(); ++l)
        level_gens.insert(level_gens.end(), by_level[l].begin(),
                          by_level[l].end());
      auto in_orbit = orbit_mask(level_gens, node.chosen);

      for (Vertex x : node.cells.cell(node.target)) {
        if (in_orbit[x])
          continue;
        auto found = descend(node.cells, x, lvl);
        if (!found)
          continue;
        by_level[lvl].push_back(*found);
        level_gens.push_back(*found);
        in_orbit = orbit_mask(level_gens, node.chosen);
      }
    }
    for (auto &lvl : by_level)
      for (auto &g : lvl)
        gens.push_back(std::move(g));
    (void)n;
    return gens;
  }

private:
  std::vector<char> orbit_mask(std::vector<Permutation> const &gens,
                               Vertex v) const
  {
    std::vector<char> mask(_graph.order(), 0);
    std::vector<Vertex> queue{v};
    mask[v] = 1;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (auto const &g : gens)
        if (!mask[g[queue[k]]]) {
          mask[g[queue[k]]] = 1;
          queue.push_back(g[queue[k]]);
        }
    return mask;
  }

  // Individualize x in a copy of cells (a node at depth lvl) and look for a
  // leaf equivalent to the first-path leaf.
  std::optional<Permutation> descend(Cells const &parent, Vertex x,
                                     std::size_t lvl)
  {
    Cells cells = parent;
    Vertex s = cells.individualize(x);
    auto trace = _refiner.run(cells, {s});
    auto const &twin = _path[lvl + 1];
    if (trace != twin.trace || cells.count != twin.cells.count)
      return std::nullopt;

    if (cells.discrete()) {
      std::vector<Vertex> images(_graph.order());
      auto const &leaf = _path.back().cells.elems;
      for (std::size_t t = 0; t < leaf.size(); ++t)
        images[leaf[t]] = cells.elems[t];
      Permutation gamma(std::move(images));
      if (is_automorphism(_graph, gamma))
        return gamma;
      return std::nullopt;
    }

    Vertex target = twin.target;
    if (cells.len[target] != twin.cells.len[target] ||
        cells.cell_of[cells.elems[target]] != target)
      return std::nullopt;
    for (Vertex y : cells.cell(target))
      if (auto found = descend(cells, y, lvl + 1))
        return found;
    return std::nullopt;
  }

  Graph const &_graph;
  Refiner _refiner;
  std::vector<PathNode> _path;
};

struct Leaf
{
  std::vector<std::uint64_t> traces;
  std::vector<Edge> edges;
  std::vector<Vertex> labeling;
};

class CanonicalSearch
{
public:
  CanonicalSearch(Graph const &graph, PermGroup const &aut)
  : _graph(graph),
    _refiner(graph)
  {
    Cells root = make_cells(OrderedPartition::unit(graph.order()));
    auto trace = _refiner.run(root, root.starts());
    std::vector<std::uint64_t> traces{trace};
    explore(root, traces, aut);
  }

  Leaf take() { return std::move(*_best); }

private:
  // true if no leaf below a node with these traces can beat the best leaf
  bool dominated(std::vector<std::uint64_t> const &traces) const
  {
    if (!_best)
      return false;
    auto const &bt = _best->traces;
    std::size_t m = std::min(traces.size(), bt.size());
    for (std::size_t i = 0; i < m; ++i)
      if (traces[i] != bt[i])
        return traces[i] > bt[i];
    return bt.size() < traces.size();
  }

  void explore(Cells const &cells, std::vector<std::uint64_t> &traces,
               PermGroup const &stab)
  {
    if (dominated(traces))
      return;

    if (cells.discrete()) {
      Leaf leaf;
      leaf.traces = traces;
      leaf.labeling = cells.pos;
      for (auto const &e : _graph.edges()) {
        Vertex a = cells.pos[e.u], b = cells.pos[e.v];
        leaf.edges.push_back({std::min(a, b), std::max(a, b)});
      }
      std::sort(leaf.edges.begin(), leaf.edges.end());
      if (!_best ||
          std::tie(leaf.traces, leaf.edges) <
            std::tie(_best->traces, _best->edges))
        _best = std::move(leaf);
      return;
    }

    Vertex target = cells.target();
    auto members = cells.cell(target);
    std::vector<char> done(_graph.order(), 0);
    for (Vertex y : members) {
      if (done[y])
        continue;
      for (Vertex z : stab.point_orbit(y))
        done[z] = 1;

      Cells child = cells;
      Vertex s = child.individualize(y);
      traces.push_back(_refiner.run(child, {s}));
      if (child.discrete())
        explore(child, traces, stab);
      else
        explore(child, traces, stab.stabilizer(std::vector<Vertex>{y}));
      traces.pop_back();
    }
  }

  Graph const &_graph;
  Refiner _refiner;
  std::optional<Leaf> _best;
};

std::string sha256_hex(std::string const &data)
{
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) !=
      1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i)
    os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

} // namespace

OrderedPartition refine(Graph const &graph, OrderedPartition const &partition)
{
  if (partition.order() != graph.order())
    throw InputError("partition order does not match graph order");
  Cells c = make_cells(partition);
  Refiner r(graph);
  r.run(c, c.starts());
  return to_partition(c);
}

PermGroup automorphism_group(Graph const &graph,
                             std::optional<OrderedPartition> const &colouring)
{
  check_scale(graph);
  std::size_t n = graph.order();
  if (n <= 1)
    return PermGroup(n);
  auto start = colouring ? *colouring : OrderedPartition::unit(n);
  if (start.order() != n)
    throw InputError("colouring order does not match graph order");
  AutomorphismSearch search(graph, start);
  return PermGroup(n, search.run());
}

CanonicalForm canonical_form(Graph const &graph)
{
  check_scale(graph);
  std::size_t n = graph.order();
  CanonicalForm out;
  if (n == 0) {
    out.labeling = Permutation(0);
  } else {
    auto aut = automorphism_group(graph);
    CanonicalSearch search(graph, aut);
    auto leaf = search.take();
    out.labeling = Permutation(std::move(leaf.labeling));
    out.edges = std::move(leaf.edges);
  }

  std::ostringstream os;
  os << "n=" << n << ';';
  for (auto const &e : out.edges)
    os << e.u << ',' << e.v << ';';
  out.certificate = sha256_hex(os.str());
  return out;
}

std::optional<Permutation> are_isomorphic(Graph const &a, Graph const &b)
{
  if (a.order() != b.order() || a.size() != b.size())
    return std::nullopt;
  auto degrees = [](Graph const &g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v)
      d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b))
    return std::nullopt;

  auto ca = canonical_form(a);
  auto cb = canonical_form(b);
  if (ca.edges != cb.edges)
    return std::nullopt;

  auto mapping = ca.labeling * cb.labeling.inverse();
  for (auto const &e : a.edges())
    if (!b.adjacent(mapping[e.u], mapping[e.v]))
      throw ContradictionError("canonical forms agree but mapping fails");
  return mapping;
}

Graph relabel(Graph const &graph, Permutation const &p)
{
  if (p.degree() != graph.order())
    throw InputError("permutation degree does not match graph order");
  std::vector<Edge> edges;
  for (auto const &e : graph.edges())
    edges.push_back({p[e.u], p[e.v]});
  std::vector<std::string> labels;
  if (graph.has_labels()) {
    labels.resize(graph.order());
    for (Vertex v = 0; v < graph.order(); ++v)
      labels[p[v]] = graph.label(v);
  }
  return Graph(graph.order(), edges, std::move(labels));
}

} // namespace geodt

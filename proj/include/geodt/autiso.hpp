#ifndef GEODT_AUTISO_HPP
#define GEODT_AUTISO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"

namespace geodt
{

/// Largest order accepted by the automorphism and canonical-labelling search.
inline constexpr std::size_t kMaxSearchOrder = 256;

/// An ordered sequence of disjoint cells covering 0..order-1.
class OrderedPartition
{
public:
  OrderedPartition() = default;

  /// Throws InputError unless the cells are non-empty, disjoint and cover
  /// 0..order-1.
  OrderedPartition(std::size_t order, std::vector<std::vector<Vertex>> cells);

  /// One cell holding every vertex.
  static OrderedPartition unit(std::size_t order);

  std::size_t order() const { return _order; }
  std::size_t size() const { return _cells.size(); }
  std::vector<std::vector<Vertex>> const &cells() const { return _cells; }
  bool is_discrete() const { return _cells.size() == _order; }

  /// Splits v's cell into {v} followed by the remainder.
  OrderedPartition individualize(Vertex v) const;

  bool operator==(OrderedPartition const &) const = default;

private:
  std::size_t _order = 0;
  std::vector<std::vector<Vertex>> _cells; // each cell sorted ascending
};

/// Coarsest equitable refinement: every vertex of a cell has the same number
/// of neighbours in each cell. Cells split in place into fragments ordered
/// by increasing neighbour count, so the result commutes with relabelling.
OrderedPartition refine(Graph const &graph, OrderedPartition const &partition);

/// Generators of the full automorphism group (of the coloured graph, when an
/// initial partition is supplied). Throws ScaleError above kMaxSearchOrder.
PermGroup automorphism_group(
  Graph const &graph, std::optional<OrderedPartition> const &colouring = {});

struct CanonicalForm
{
  Permutation labeling;     // vertex -> canonical position
  std::vector<Edge> edges;  // relabelled edge list, sorted
  std::string certificate;  // lowercase hex SHA-256 of order and edges
};

/// Relabelling-invariant form: two graphs are isomorphic iff their canonical
/// edge lists (hence certificates) coincide. Throws ScaleError above
/// kMaxSearchOrder.
CanonicalForm canonical_form(Graph const &graph);

/// An explicit isomorphism a -> b (checked edge by edge), or nullopt.
std::optional<Permutation> are_isomorphic(Graph const &a, Graph const &b);

/// Apply a vertex bijection to a graph: vertex v becomes p[v].
Graph relabel(Graph const &graph, Permutation const &p);

} // namespace geodt

#endif // GEODT_AUTISO_HPP

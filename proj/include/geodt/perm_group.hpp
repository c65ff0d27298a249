#ifndef GEODT_PERM_GROUP_HPP
#define GEODT_PERM_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph.hpp"
#include "permutation.hpp"
#include "walks.hpp"

namespace geodt
{

using GroupOrder = boost::multiprecision::cpp_int;

/// A permutation group given by generators.
///
/// The base and strong generating set is built on first use by a
/// deterministic Schreier-Sims: base points are taken as the smallest point
/// moved by the generator that forced a new level, and Schreier generators
/// are processed in orbit order. Transversals are explicit permutation
/// tables. Groups are immutable; copies share the chain.
class PermGroup
{
public:
  /// The trivial group of the given degree.
  explicit PermGroup(std::size_t degree = 0);

  /// Identity generators are dropped. Throws InputError on degree mismatch.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }

  GroupOrder order() const;
  bool contains(Permutation const &p) const;

  std::vector<Vertex> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;

  /// Pointwise stabilizer of the given points (in order).
  PermGroup stabilizer(std::span<Vertex const> points) const;

  /// Orbit of a single point, ascending.
  std::vector<Vertex> point_orbit(Vertex v) const;
  VertexPartition orbits() const;
  bool is_transitive() const;

  /// Every element, by running through the transversals. Meant for small
  /// groups only.
  std::vector<Permutation> elements() const;

private:
  struct Chain;

  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::shared_ptr<Chain const> chain);

  Chain const &chain() const;

  std::size_t _degree;
  std::vector<Permutation> _generators;

  struct Lazy;
  std::shared_ptr<Lazy> _lazy;

  friend PermGroup schreier_sims(std::vector<Permutation> generators,
                                 std::span<Vertex const> base_prefix);
};

/// Builds the group and its stabilizer chain eagerly. The chain's base starts
/// with base_prefix. Throws InputError if generators is empty or the degrees
/// differ.
PermGroup schreier_sims(std::vector<Permutation> generators,
                        std::span<Vertex const> base_prefix = {});

/// Orbit of a tuple under coordinatewise action, in breadth-first discovery
/// order starting from the seed.
TupleList orbit(PermGroup const &group, std::span<Vertex const> seed);

/// Splits a tuple list into orbits. Each orbit lists tuples in discovery
/// order; orbits appear in order of their first tuple in the input.
/// Throws InputError if some tuple's orbit leaves the given list.
std::vector<TupleList> orbits_on(PermGroup const &group,
                                 TupleList const &tuples);

struct CayleyLabelling
{
  Vertex base = 0;                     // plays the identity
  std::vector<Permutation> elements;   // elements[v] maps base to v
  std::vector<Vertex> connection_set;  // vertex labels of base's neighbours
};

/// If the group is regular on the vertices, label each vertex by the unique
/// element taking vertex 0 to it and return the connection set. nullopt if
/// the group is not regular. Throws InputError when a generator is not an
/// automorphism.
std::optional<CayleyLabelling>
regular_subgroup_to_cayley(Graph const &graph, PermGroup const &subgroup);

} // namespace geodt

#endif // GEODT_PERM_GROUP_HPP

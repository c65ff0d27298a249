#ifndef GEODT_PERMUTATION_HPP
#define GEODT_PERMUTATION_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace geodt
{

/// A bijection of 0..degree-1, stored as its image table.
///
/// Permutations act on the right: for g * h the image of i is (i^g)^h, i.e.
/// apply g first.
class Permutation
{
public:
  Permutation() = default;

  /// The identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws InputError if images is not a bijection.
  explicit Permutation(std::vector<Vertex> images);

  /// Build from disjoint cycles, e.g. from_cycles(4, {{0, 1}, {2, 3}}).
  static Permutation
  from_cycles(std::size_t degree,
              std::initializer_list<std::initializer_list<Vertex>> cycles);

  std::size_t degree() const { return _images.size(); }
  Vertex operator[](Vertex i) const { return _images[i]; }
  std::span<Vertex const> images() const { return _images; }

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Smallest point moved, or degree() for the identity.
  Vertex first_moved() const;

  std::size_t order() const;

  /// Coordinatewise image of a tuple.
  std::vector<Vertex> apply(std::span<Vertex const> tuple) const;

  bool operator==(Permutation const &) const = default;
  auto operator<=>(Permutation const &) const = default;

  std::string to_cycle_string() const;

private:
  std::vector<Vertex> _images;
};

std::ostream &operator<<(std::ostream &os, Permutation const &p);

/// True iff p maps edges to edges (and so, being a bijection, is an
/// automorphism).
bool is_automorphism(Graph const &graph, Permutation const &p);

} // namespace geodt

template <>
struct std::hash<geodt::Permutation>
{
  std::size_t operator()(geodt::Permutation const &p) const noexcept;
};

#endif // GEODT_PERMUTATION_HPP

#ifndef GEODT_WALKS_HPP
#define GEODT_WALKS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graph.hpp"

namespace geodt
{

/// A list of equal-length vertex tuples stored contiguously.
class TupleList
{
public:
  explicit TupleList(std::size_t width = 0) : _width(width) {}

  std::size_t width() const { return _width; }
  std::size_t size() const { return _width ? _data.size() / _width : 0; }
  bool empty() const { return _data.empty(); }

  std::span<Vertex const> operator[](std::size_t i) const
  { return {_data.data() + i * _width, _width}; }

  void push_back(std::span<Vertex const> tuple);

  std::vector<Vertex> const &data() const { return _data; }

  bool operator==(TupleList const &) const = default;

private:
  std::size_t _width;
  std::vector<Vertex> _data;
};

/// All s-arcs (v_0,...,v_s): consecutive vertices adjacent and
/// v_{j-1} != v_{j+1}. Closed arcs (v_0 == v_s) are included. Output is in
/// lexicographic order. Throws InputError for s == 0.
TupleList enumerate_s_arcs(Graph const &graph, std::size_t s);

/// Number of s-arcs, without materializing them.
std::uint64_t count_s_arcs(Graph const &graph, std::size_t s);

/// All s-geodesics (paths with d(v_0, v_s) == s) in lexicographic order.
/// Empty (with a warning) if s exceeds every finite distance in the graph.
TupleList enumerate_s_geodesics(Graph const &graph, std::size_t s);

/// Number of s-geodesics, by counting shortest paths.
std::uint64_t count_s_geodesics(Graph const &graph, std::size_t s);

/// Ordered pairs (u, v) with d(u, v) == t.
std::uint64_t count_distance_pairs(Graph const &graph, Distance t);

} // namespace geodt

#endif // GEODT_WALKS_HPP

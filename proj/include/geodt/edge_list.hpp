#ifndef GEODT_EDGE_LIST_HPP
#define GEODT_EDGE_LIST_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "graph.hpp"

namespace geodt
{

// Edge-list text format:
//
//   # optional comment lines
//   n
//   u v        (0 <= u < v < n, one edge per line)
//
// Blank lines are ignored. Parse failures throw ParseError with the line
// number.

Graph read_edge_list(std::istream &in);
Graph read_edge_list(std::filesystem::path const &path);

/// Writes a header line of the form "# <comment>" when comment is non-empty,
/// then the order and the edges in lexicographic order.
void write_edge_list(std::ostream &out, Graph const &graph,
                     std::string const &comment = {});
void write_edge_list(std::filesystem::path const &path, Graph const &graph,
                     std::string const &comment = {});

} // namespace geodt

#endif // GEODT_EDGE_LIST_HPP

#ifndef GEODT_FAMILIES_HPP
#define GEODT_FAMILIES_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace geodt
{

// Constructors. All throw InputError outside their parameter domain. Vertex
// numbering is fixed: subsets in lexicographic order, tuples by mixed-radix
// rank (first coordinate most significant), field elements by coefficient
// rank. Labels on subsets are 1-based.

Graph complete(std::uint32_t n);                          // n >= 1
Graph complete_bipartite(std::uint32_t m, std::uint32_t n); // m, n >= 1
Graph complete_multipartite(std::uint32_t m, std::uint32_t b); // K_{m[b]}
Graph cycle(std::uint32_t n);                             // n >= 3
Graph johnson(std::uint32_t n, std::uint32_t k);          // 1 <= k <= n/2
Graph hamming(std::uint32_t d, std::uint32_t n);          // d >= 1, n >= 2
Graph odd(std::uint32_t k); // k-subsets of a (2k+1)-set, adjacent if disjoint
Graph paley(std::uint32_t p, std::uint32_t e = 1);        // p^e = 1 mod 4

/// Point-line incidence graph of PG(2,q) for q in {2,3,4,5}; points first.
Graph pg2_incidence(std::uint32_t q);

/// Cay(Z_n, S u -S). Elements of S must lie in 1..n-1.
Graph circulant(std::uint32_t n, std::span<std::uint32_t const> connection);

/// The Taylor construction's graph (see psl2.hpp) with involution b^i g.
Graph taylor(std::uint32_t p, std::uint32_t alt_index = 0);

/// Directory holding the shipped edge-list files.
std::filesystem::path data_dir();

/// Reads an edge-list file, looking first relative to the working directory
/// and then in data_dir(). Files named foster.edges or biggs-smith.edges
/// must have order, valency and diameter (90, 3, 8) and (102, 3, 7) or
/// InputError is thrown. Malformed files raise ParseError.
Graph load_graph(std::filesystem::path const &path);

/// A parsed family string such as "johnson:6,3", "paley:3^2", "taylor:13,1",
/// "file:foster.edges" or "complement(paley:13)".
///
/// Tags (short forms in brackets): complete [k], kbip, kmb, cycle [c],
/// johnson [j], hamming [h], odd [o], paley, taylor, pg2, circulant, file.
struct FamilySpec
{
  std::string tag;                    // canonical long tag
  std::vector<std::uint32_t> params;  // paley holds (p, e)
  std::string path;                   // for file
  std::shared_ptr<FamilySpec const> inner; // for complement

  /// Throws InputError on unknown tags or malformed parameters.
  static FamilySpec parse(std::string const &text);
  std::string to_string() const;
  Graph build() const;
};

} // namespace geodt

#endif // GEODT_FAMILIES_HPP

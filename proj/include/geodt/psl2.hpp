#ifndef GEODT_PSL2_HPP
#define GEODT_PSL2_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "permutation.hpp"

namespace geodt
{

/// A finite group with its elements listed explicitly as 0..order-1.
class EnumeratedGroup
{
public:
  using Element = std::uint32_t;
  using Multiply = std::function<Element(Element, Element)>;
  using Invert = std::function<Element(Element)>;

  EnumeratedGroup() = default;

  /// Without an inversion rule, inverses are found by search.
  EnumeratedGroup(std::size_t order, Element identity, Multiply mul,
                  std::vector<std::string> labels, Invert inv = {});

  /// The group generated by some permutations; elements sorted by image
  /// table, labelled in cycle notation.
  static EnumeratedGroup from_permutations(std::vector<Permutation> const &gens);

  std::size_t order() const { return _order; }
  Element identity() const { return _identity; }
  Element mul(Element x, Element y) const { return _mul(x, y); }
  Element inverse(Element x) const { return _inverse[x]; }
  Element pow(Element x, std::uint64_t k) const;
  std::size_t element_order(Element x) const;

  std::string const &label(Element x) const { return _labels[x]; }
  std::optional<Element> find(std::string const &label) const;

  /// The subgroup generated, ascending.
  std::vector<Element> closure(std::span<Element const> generators) const;

private:
  std::size_t _order = 0;
  Element _identity = 0;
  Multiply _mul;
  std::vector<Element> _inverse;
  std::vector<std::string> _labels;
};

/// A 2x2 matrix over F_p of determinant 1, taken modulo +-I.
///
/// Of M and -M the stored one has its first nonzero entry (row-major) in
/// 1..(p-1)/2. Ordered lexicographically by (a, b, c, d).
struct ProjectiveMatrix
{
  std::uint32_t a = 1, b = 0, c = 0, d = 1;

  /// Reduces mod p and normalizes. Throws InputError unless ad - bc = 1.
  static ProjectiveMatrix make(std::uint32_t p, std::int64_t a, std::int64_t b,
                               std::int64_t c, std::int64_t d);

  auto operator<=>(ProjectiveMatrix const &) const = default;
};

ProjectiveMatrix multiply(std::uint32_t p, ProjectiveMatrix const &x,
                          ProjectiveMatrix const &y);

/// "(a,b,c,d)", row-major.
std::string to_string(ProjectiveMatrix const &m);

/// PSL(2,p) for an odd prime p, elements sorted as matrices.
class Psl2
{
public:
  using Element = EnumeratedGroup::Element;

  /// Throws InputError unless p is an odd prime no larger than 41.
  explicit Psl2(std::uint32_t p);

  std::uint32_t p() const { return _p; }
  EnumeratedGroup const &group() const { return _group; }
  ProjectiveMatrix const &matrix(Element x) const;
  Element index_of(ProjectiveMatrix const &m) const;
  Element element(std::int64_t a, std::int64_t b, std::int64_t c,
                  std::int64_t d) const;

private:
  struct Tables;
  std::uint32_t _p;
  std::shared_ptr<Tables const> _tables;
  EnumeratedGroup _group;
};

/// Cos(G, H, HgH): vertices are the right cosets Hx, ordered by their least
/// element, and Hx ~ Hy iff yx^-1 lies in HgH. Throws InputError if H is not
/// a subgroup or g^2 is not in H, ConnectivityError if <H, g> != G.
Graph coset_graph(EnumeratedGroup const &group,
                  std::span<EnumeratedGroup::Element const> subgroup,
                  EnumeratedGroup::Element g);

struct TaylorConstruction
{
  std::uint32_t p = 0;
  std::uint32_t primitive_root = 0; // t in b = diag(t, 1/t)
  std::uint32_t alt_index = 0;      // the involution used is b^i g
  std::shared_ptr<Psl2 const> group;
  Psl2::Element a = 0, b = 0, g = 0, involution = 0;
  std::vector<Psl2::Element> H; // <a, b^2>, ascending
  Graph graph;
};

/// The antipodal double cover of K_{p+1} as a coset graph of PSL(2,p), for a
/// prime p = 1 mod 4. H = <a, b^2> with a = [[1,1],[0,1]] and
/// b = diag(t, 1/t), t the least primitive root; the involution is b^i g with
/// g = [[0,1],[-1,0]] and i = alt_index.
///
/// Throws InputError for other p, ConstructionError if an internal check
/// fails (orders of a, b, g and H, the index 2p+2, and for p > 5 that
/// <b, g> is the whole normalizer of <b^2>, of order p-1).
TaylorConstruction taylor_construction(std::uint32_t p,
                                       std::uint32_t alt_index = 0);

} // namespace geodt

#endif // GEODT_PSL2_HPP

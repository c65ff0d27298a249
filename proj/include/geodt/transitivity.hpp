#ifndef GEODT_TRANSITIVITY_HPP
#define GEODT_TRANSITIVITY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "perm_group.hpp"

namespace geodt
{

/// Largest s tried when searching for s-arc transitivity.
inline constexpr std::size_t kArcSearchCap = 8;

// Each predicate holds iff the group is transitive on the vertices and, for
// every 1 <= t <= s, on the ordered pairs at distance t / the t-geodesics /
// the t-arcs. Decided by closing the orbit of one seed and comparing its size
// with a count of the whole set. All throw InputError if a generator is not
// an automorphism; the distance and geodesic forms also if s exceeds the
// largest finite distance.

bool is_s_distance_transitive(Graph const &graph, PermGroup const &group,
                              std::size_t s);
bool is_s_geodesic_transitive(Graph const &graph, PermGroup const &group,
                              std::size_t s);
bool is_s_arc_transitive(Graph const &graph, PermGroup const &group,
                         std::size_t s);

struct TransitivityProfile
{
  std::optional<Distance> girth;
  Distance diameter = 0;
  std::optional<std::size_t> valency;
  GroupOrder aut_order;
  bool group_supplied = false;

  bool vertex_transitive = false;
  // levels[t-1]: transitive on the level-t objects alone; distance and
  // geodesic levels run to the diameter, arc levels to the search cap. Levels
  // after the first failure are not computed and read false.
  std::vector<bool> distance_levels, geodesic_levels, arc_levels;

  std::size_t max_s_distance = 0; // 0 also when not vertex transitive
  std::size_t max_s_geodesic = 0;
  std::size_t max_s_arc = 0;
  bool distance_transitive = false;
  bool geodesic_transitive = false;
  bool arc_cap_exceeded = false;  // still transitive at kArcSearchCap

  bool s_distance_transitive(std::size_t s) const { return s <= max_s_distance && vertex_transitive; }
  bool s_geodesic_transitive(std::size_t s) const { return s <= max_s_geodesic && vertex_transitive; }
  bool s_arc_transitive(std::size_t s) const { return s <= max_s_arc && vertex_transitive; }
};

/// Full profile under the given group, or the full automorphism group when
/// none is given. Checks the hierarchy (arc => geodesic => distance up to
/// the diameter) and the girth criterion before returning; a violation
/// raises ContradictionError. Throws ConnectivityError on a disconnected
/// graph.
TransitivityProfile profile(Graph const &graph,
                            std::optional<PermGroup> const &group = {});

struct IntersectionData
{
  std::size_t x = 0;  // |G(v) n G(u)|
  std::size_t y = 0;  // |G2(v) n G(u)|
  std::size_t z = 0;  // |G(v) n G(w)|
  std::size_t t = 0;  // |G2(v) n G(w) n G(u)|
  std::size_t n2 = 0; // |G2(v)|
  std::size_t n3 = 0; // |G3(v)|

  bool operator==(IntersectionData const &) const = default;
};

/// Counts around the 2-geodesic (v, u, w). Throws InputError if it is not
/// one.
IntersectionData intersection_data(Graph const &graph, Vertex v, Vertex u,
                                   Vertex w);

enum class GirthCheck
{
  consistent,
  skipped,
};

struct GirthCheckResult
{
  GirthCheck status = GirthCheck::skipped;
  bool arc_transitive = false;
  bool girth_at_least_2s = false;
};

/// For an s-geodesic transitive graph with 1 <= s <= diameter, s-arc
/// transitivity must coincide with girth >= 2s. Skipped when that
/// precondition fails; ContradictionError if the equivalence does not hold.
GirthCheckResult girth_consistency_check(Graph const &graph,
                                         PermGroup const &group,
                                         std::size_t s);

} // namespace geodt

#endif // GEODT_TRANSITIVITY_HPP

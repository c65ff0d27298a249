#include "geodt/transitivity.hpp"

#include <algorithm>
#include <string>

#include "geodt/autiso.hpp"
#include "geodt/errors.hpp"
#include "geodt/walks.hpp"

namespace geodt
{

namespace
{

void check_automorphisms(Graph const &graph, PermGroup const &group)
{
  if (group.degree() != graph.order())
    throw InputError("group degree " + std::to_string(group.degree()) +
                     " differs from graph order " +
                     std::to_string(graph.order()));
  for (auto const &g : group.generators())
    if (!is_automorphism(graph, g))
      throw InputError("generator " + g.to_cycle_string() +
                       " is not an automorphism");
}

Distance max_finite_distance(Graph const &graph)
{
  auto const &dt = graph.distances();
  Distance best = 0;
  for (Vertex u = 0; u < graph.order(); ++u)
    for (Distance d : dt.row(u))
      if (d != kUnreachable)
        best = std::max(best, d);
  return best;
}

void check_range(Graph const &graph, std::size_t s)
{
  if (s > max_finite_distance(graph))
    throw InputError("s = " + std::to_string(s) +
                     " exceeds the largest distance in the graph");
}

// Depth-first search for the lexicographically first walk of length t whose
// steps satisfy ok(prefix, next).
template <typename Ok>
std::optional<std::vector<Vertex>> first_walk(Graph const &graph,
                                              std::size_t t, Ok ok)
{
  std::vector<Vertex> walk;
  auto extend = [&](auto &self) -> bool {
    if (walk.size() == t + 1)
      return true;
    for (Vertex x : graph.neighbors(walk.back())) {
      if (!ok(walk, x))
        continue;
      walk.push_back(x);
      if (self(self))
        return true;
      walk.pop_back();
    }
    return false;
  };
  for (Vertex v = 0; v < graph.order(); ++v) {
    walk.assign(1, v);
    if (extend(extend))
      return walk;
  }
  return std::nullopt;
}

bool single_orbit(PermGroup const &group,
                  std::optional<std::vector<Vertex>> const &seed,
                  std::uint64_t total)
{
  if (!seed)
    return total == 0;
  return orbit(group, *seed).size() == total;
}

bool distance_level(Graph const &graph, PermGroup const &group, Distance t)
{
  auto const &dt = graph.distances();
  std::optional<std::vector<Vertex>> seed;
  for (Vertex u = 0; u < graph.order() && !seed; ++u)
    for (Vertex v = 0; v < graph.order(); ++v)
      if (dt(u, v) == t) {
        seed = std::vector<Vertex>{u, v};
        break;
      }
  return single_orbit(group, seed, count_distance_pairs(graph, t));
}

bool geodesic_level(Graph const &graph, PermGroup const &group, std::size_t t)
{
  auto const &dt = graph.distances();
  auto seed = first_walk(graph, t, [&](auto const &walk, Vertex x) {
    return dt(walk.front(), x) == walk.size();
  });
  return single_orbit(group, seed, count_s_geodesics(graph, t));
}

bool arc_level(Graph const &graph, PermGroup const &group, std::size_t t)
{
  auto seed = first_walk(graph, t, [](auto const &walk, Vertex x) {
    return walk.size() < 2 || walk[walk.size() - 2] != x;
  });
  return single_orbit(group, seed, count_s_arcs(graph, t));
}

} // namespace

bool is_s_distance_transitive(Graph const &graph, PermGroup const &group,
                              std::size_t s)
{
  check_automorphisms(graph, group);
  check_range(graph, s);
  if (!group.is_transitive())
    return false;
  for (std::size_t t = 1; t <= s; ++t)
    if (!distance_level(graph, group, static_cast<Distance>(t)))
      return false;
  return true;
}

bool is_s_geodesic_transitive(Graph const &graph, PermGroup const &group,
                              std::size_t s)
{
  check_automorphisms(graph, group);
  check_range(graph, s);
  if (!group.is_transitive())
    return false;
  for (std::size_t t = 1; t <= s; ++t)
    if (!geodesic_level(graph, group, t))
      return false;
  return true;
}

bool is_s_arc_transitive(Graph const &graph, PermGroup const &group,
                         std::size_t s)
{
  check_automorphisms(graph, group);
  if (s == 0)
    throw InputError("s-arc transitivity needs s >= 1");
  if (!group.is_transitive())
    return false;
  for (std::size_t t = 1; t <= s; ++t)
    if (!arc_level(graph, group, t))
      return false;
  return true;
}

TransitivityProfile profile(Graph const &graph,
                            std::optional<PermGroup> const &group)
{
  auto m = metrics(graph);
  if (!m.connected)
    throw ConnectivityError("profile needs a connected graph");

  TransitivityProfile pr;
  pr.girth = m.girth;
  pr.diameter = *m.diameter;
  pr.valency = m.valency;
  pr.group_supplied = group.has_value();
  PermGroup A = group ? *group : automorphism_group(graph);
  if (group)
    check_automorphisms(graph, A);
  pr.aut_order = A.order();
  pr.vertex_transitive = A.is_transitive();

  pr.distance_levels.assign(pr.diameter, false);
  pr.geodesic_levels.assign(pr.diameter, false);
  pr.arc_levels.assign(kArcSearchCap, false);
  if (pr.vertex_transitive) {
    auto scan = [](std::vector<bool> &levels, std::size_t &max_s, auto level) {
      for (std::size_t t = 1; t <= levels.size(); ++t) {
        levels[t - 1] = level(t);
        if (!levels[t - 1])
          break;
        max_s = t;
      }
    };
    scan(pr.distance_levels, pr.max_s_distance, [&](std::size_t t) {
      return distance_level(graph, A, static_cast<Distance>(t));
    });
    scan(pr.geodesic_levels, pr.max_s_geodesic,
         [&](std::size_t t) { return geodesic_level(graph, A, t); });
    // Cycles are s-arc transitive for every s and simply run into the cap.
    if (graph.size() > 0)
      scan(pr.arc_levels, pr.max_s_arc,
           [&](std::size_t t) { return arc_level(graph, A, t); });
  }
  pr.distance_transitive =
    pr.vertex_transitive && pr.max_s_distance == pr.diameter;
  pr.geodesic_transitive =
    pr.vertex_transitive && pr.max_s_geodesic == pr.diameter;
  pr.arc_cap_exceeded = pr.max_s_arc == kArcSearchCap;

  for (std::size_t s = 1; s <= pr.diameter; ++s) {
    bool arc = pr.s_arc_transitive(s);
    bool geo = pr.s_geodesic_transitive(s);
    bool dist = pr.s_distance_transitive(s);
    if ((arc && !geo) || (geo && !dist))
      throw ContradictionError("transitivity hierarchy fails at s = " +
                               std::to_string(s));
    bool girth_ok = !pr.girth || *pr.girth >= 2 * s;
    if (geo && arc != girth_ok)
      throw ContradictionError("girth criterion fails at s = " +
                               std::to_string(s));
  }
  return pr;
}

IntersectionData intersection_data(Graph const &graph, Vertex v, Vertex u,
                                   Vertex w)
{
  std::size_t n = graph.order();
  if (v >= n || u >= n || w >= n)
    throw InputError("vertex out of range");
  auto const &dt = graph.distances();
  if (dt(v, u) != 1 || dt(u, w) != 1 || dt(v, w) != 2)
    throw InputError("(" + std::to_string(v) + "," + std::to_string(u) + "," +
                     std::to_string(w) + ") is not a 2-geodesic");

  IntersectionData d;
  for (Vertex x = 0; x < n; ++x) {
    Distance dv = dt(v, x);
    bool nu = dt(u, x) == 1, nw = dt(w, x) == 1;
    d.x += dv == 1 && nu;
    d.y += dv == 2 && nu;
    d.z += dv == 1 && nw;
    d.t += dv == 2 && nw && nu;
    d.n2 += dv == 2;
    d.n3 += dv == 3;
  }
  return d;
}

GirthCheckResult girth_consistency_check(Graph const &graph,
                                         PermGroup const &group,
                                         std::size_t s)
{
  check_automorphisms(graph, group);
  GirthCheckResult r;
  auto m = metrics(graph);
  if (!m.connected || s < 1 || s > *m.diameter ||
      !is_s_geodesic_transitive(graph, group, s))
    return r;
  r.arc_transitive = is_s_arc_transitive(graph, group, s);
  r.girth_at_least_2s = !m.girth || *m.girth >= 2 * s;
  if (r.arc_transitive != r.girth_at_least_2s)
    throw ContradictionError(
      "geodesic transitive graph with s = " + std::to_string(s) +
      (r.arc_transitive ? " is arc transitive but has girth below 2s"
                        : " has girth at least 2s but is not arc transitive"));
  r.status = GirthCheck::consistent;
  return r;
}

} // namespace geodt

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geodt/autiso.hpp"
#include "geodt/errors.hpp"
#include "geodt/families.hpp"
#include "geodt/transitivity.hpp"
#include "geodt/walks.hpp"
#include "oracles.hpp"

using namespace geodt;

namespace
{

Permutation shift(std::size_t n)
{
  std::vector<Vertex> img(n);
  for (Vertex i = 0; i < n; ++i)
    img[i] = static_cast<Vertex>((i + 1) % n);
  return Permutation(img);
}

PermGroup symmetric(std::size_t n)
{
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), shift(n)});
}

std::vector<std::pair<std::string, Graph>> corpus()
{
  return {{"taylor:13", taylor(13)},     {"taylor:5", taylor(5)},
          {"paley:5", paley(5)},         {"paley:9", paley(3, 2)},
          {"paley:13", paley(13)},       {"paley:17", paley(17)},
          {"johnson:5,2", johnson(5, 2)}, {"johnson:6,3", johnson(6, 3)},
          {"hamming:3,2", hamming(3, 2)}, {"hamming:2,3", hamming(2, 3)},
          {"odd:2", odd(2)},             {"odd:3", odd(3)},
          {"kmb:3,2", complete_multipartite(3, 2)},
          {"pg2:2", pg2_incidence(2)},   {"cycle:7", cycle(7)},
          {"complete:5", complete(5)},   {"kbip:3,3", complete_bipartite(3, 3)}};
}

} // namespace

TEST_CASE("distance transitivity")
{
  auto p13 = paley(13);
  auto a13 = automorphism_group(p13);
  CHECK(is_s_distance_transitive(p13, a13, 1));
  CHECK(is_s_distance_transitive(p13, a13, 2));

  auto k5 = complete(5);
  CHECK(is_s_distance_transitive(k5, symmetric(5), 0));
  CHECK(is_s_distance_transitive(k5, symmetric(5), 1));

  auto t13 = taylor(13);
  CHECK(is_s_distance_transitive(t13, automorphism_group(t13), 3));

  // translations of Z_13 act regularly, so they miss the 78 arcs
  PermGroup z13(13, {shift(13)});
  CHECK(is_s_distance_transitive(p13, z13, 0));
  CHECK_FALSE(is_s_distance_transitive(p13, z13, 1));

  CHECK_THROWS_AS(is_s_distance_transitive(p13, a13, 3), InputError);
}

TEST_CASE("geodesic transitivity")
{
  auto p13 = paley(13);
  CHECK(is_s_geodesic_transitive(p13, automorphism_group(p13), 1));
  CHECK_FALSE(is_s_geodesic_transitive(p13, automorphism_group(p13), 2));
  auto p9 = paley(3, 2);
  CHECK(is_s_geodesic_transitive(p9, automorphism_group(p9), 2));
  auto t13 = taylor(13);
  CHECK(is_s_geodesic_transitive(t13, automorphism_group(t13), 3));
}

TEST_CASE("arc transitivity")
{
  auto petersen = odd(2);
  auto ap = automorphism_group(petersen);
  CHECK(is_s_arc_transitive(petersen, ap, 3));
  CHECK_FALSE(is_s_arc_transitive(petersen, ap, 4));

  auto cube = hamming(3, 2);
  auto ac = automorphism_group(cube);
  CHECK(is_s_arc_transitive(cube, ac, 2));
  CHECK_FALSE(is_s_arc_transitive(cube, ac, 3));

  auto kmb = complete_multipartite(3, 2);
  CHECK_FALSE(is_s_arc_transitive(kmb, automorphism_group(kmb), 2));

  CHECK_THROWS_AS(is_s_arc_transitive(cube, ac, 0), InputError);
}

TEST_CASE("group generators must be automorphisms")
{
  auto c5 = cycle(5);
  PermGroup bogus(5, {Permutation::from_cycles(5, {{0, 2}})});
  CHECK_THROWS_AS(is_s_distance_transitive(c5, bogus, 1), InputError);
  CHECK_THROWS_AS(is_s_geodesic_transitive(c5, bogus, 1), InputError);
  CHECK_THROWS_AS(is_s_arc_transitive(c5, bogus, 1), InputError);
  CHECK_THROWS_AS(profile(c5, bogus), InputError);
  PermGroup wrong_degree(6, {shift(6)});
  CHECK_THROWS_AS(is_s_arc_transitive(c5, wrong_degree, 1), InputError);
}

TEST_CASE("profiles")
{
  auto foster = load_graph("foster.edges");
  auto pf = profile(foster);
  CHECK(*pf.valency == 3);
  CHECK(pf.max_s_arc == 5);
  CHECK(pf.diameter == 8);
  CHECK(pf.geodesic_transitive);
  CHECK(pf.aut_order == 4320);

  auto p13 = profile(paley(13));
  CHECK(p13.distance_transitive);
  CHECK(p13.max_s_geodesic == 1);
  CHECK(p13.max_s_arc == 1);
  CHECK_FALSE(p13.geodesic_transitive);
  CHECK_FALSE(p13.group_supplied);

  auto t13 = profile(taylor(13));
  CHECK(t13.geodesic_transitive);
  CHECK(t13.max_s_arc == 1);
  CHECK(t13.girth == 3u);
  CHECK(t13.aut_order == 2184);

  auto c7 = profile(cycle(7));
  CHECK(c7.arc_cap_exceeded);
  CHECK(c7.max_s_arc == kArcSearchCap);
  CHECK(c7.geodesic_transitive);

  auto z13 = profile(paley(13), PermGroup(13, {shift(13)}));
  CHECK(z13.group_supplied);
  CHECK(z13.vertex_transitive);
  CHECK(z13.max_s_distance == 0);
  CHECK(z13.aut_order == 13);

  // a graph whose group is not vertex transitive: a path
  std::vector<Edge> path{{0, 1}, {1, 2}};
  auto pp = profile(Graph(3, path));
  CHECK_FALSE(pp.vertex_transitive);
  CHECK(pp.max_s_arc == 0);
  CHECK_FALSE(pp.s_arc_transitive(0));

  std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(profile(Graph(4, split)), ConnectivityError);
}

TEST_CASE("intersection data")
{
  auto t13 = taylor(13);
  auto geo = enumerate_s_geodesics(t13, 2);
  auto const &g0 = geo[0];
  CHECK(intersection_data(t13, g0[0], g0[1], g0[2]) ==
        IntersectionData{6, 6, 6, 3, 13, 1});

  auto ico = taylor(5);
  auto ico_geo = enumerate_s_geodesics(ico, 2);
  auto gi = ico_geo[0];
  CHECK(intersection_data(ico, gi[0], gi[1], gi[2]) ==
        IntersectionData{2, 2, 2, 1, 5, 1});

  auto p13 = paley(13);
  auto p13_geo = enumerate_s_geodesics(p13, 2);
  auto gp = p13_geo[0];
  auto dp = intersection_data(p13, gp[0], gp[1], gp[2]);
  CHECK(dp.x == 2);
  CHECK(dp.y == 3);
  CHECK(dp.n3 == 0);

  // not 2-geodesics
  CHECK_THROWS_AS(intersection_data(t13, 0, 0, 0), InputError);
  auto tri = complete(3);
  CHECK_THROWS_AS(intersection_data(tri, 0, 1, 2), InputError);
}

TEST_CASE("intersection data does not depend on the 2-geodesic")
{
  std::mt19937_64 rng(8);
  for (auto const &[name, g] : corpus()) {
    CAPTURE(name);
    auto prof = profile(g);
    if (prof.diameter < 2 || !prof.s_geodesic_transitive(2))
      continue;
    auto geo = enumerate_s_geodesics(g, 2);
    auto ref = intersection_data(g, geo[0][0], geo[0][1], geo[0][2]);
    CHECK(ref.x + ref.y == *prof.valency - 1);
    CHECK(*prof.valency * ref.y == ref.n2 * ref.z);
    for (int k = 0; k < 10; ++k) {
      auto t = geo[rng() % geo.size()];
      CHECK(intersection_data(g, t[0], t[1], t[2]) == ref);
    }
  }
  // distance transitive only: x, y, z and the sphere sizes still agree
  auto p13 = paley(13);
  auto geo = enumerate_s_geodesics(p13, 2);
  auto ref = intersection_data(p13, geo[0][0], geo[0][1], geo[0][2]);
  CHECK(6 * ref.y == ref.n2 * ref.z);
  for (int k = 0; k < 10; ++k) {
    auto t = geo[rng() % geo.size()];
    auto d = intersection_data(p13, t[0], t[1], t[2]);
    CHECK(d.x == ref.x);
    CHECK(d.y == ref.y);
    CHECK(d.z == ref.z);
    CHECK(d.n2 == ref.n2);
  }
}

TEST_CASE("girth consistency")
{
  auto kmb = complete_multipartite(3, 2);
  auto r = girth_consistency_check(kmb, automorphism_group(kmb), 2);
  CHECK(r.status == GirthCheck::consistent);
  CHECK_FALSE(r.arc_transitive);
  CHECK_FALSE(r.girth_at_least_2s);

  auto cube = hamming(3, 2);
  r = girth_consistency_check(cube, automorphism_group(cube), 2);
  CHECK(r.status == GirthCheck::consistent);
  CHECK(r.arc_transitive);
  CHECK(r.girth_at_least_2s);

  auto o4 = odd(3); // valency 4
  r = girth_consistency_check(o4, automorphism_group(o4), 3);
  CHECK(r.status == GirthCheck::consistent);
  CHECK(r.arc_transitive);
  CHECK(r.girth_at_least_2s);

  // precondition fails: not 2-geodesic transitive, or s beyond the diameter
  auto p13 = paley(13);
  CHECK(girth_consistency_check(p13, automorphism_group(p13), 2).status ==
        GirthCheck::skipped);
  CHECK(girth_consistency_check(p13, automorphism_group(p13), 3).status ==
        GirthCheck::skipped);
}

TEST_CASE("hierarchy and girth criterion over the corpus")
{
  for (auto const &[name, g] : corpus()) {
    CAPTURE(name);
    auto a = automorphism_group(g);
    auto diam = *metrics(g).diameter;
    auto girth = metrics(g).girth;
    auto prof = profile(g, a);
    for (std::size_t s = 1; s <= diam; ++s) {
      CAPTURE(s);
      bool arc = is_s_arc_transitive(g, a, s);
      bool geo = is_s_geodesic_transitive(g, a, s);
      bool dist = is_s_distance_transitive(g, a, s);
      CHECK((!arc || geo));
      CHECK((!geo || dist));
      bool long_girth = girth && *girth >= 2 * s;
      if (geo)
        CHECK(arc == long_girth);
      CHECK(arc == prof.s_arc_transitive(s));
      CHECK(geo == prof.s_geodesic_transitive(s));
      CHECK(dist == prof.s_distance_transitive(s));
    }
    if (prof.max_s_arc <= diam)
      CHECK(prof.max_s_arc <= prof.max_s_geodesic);
    CHECK(prof.max_s_geodesic <= prof.max_s_distance);
  }
}

TEST_CASE("orbit counts on geodesics")
{
  for (auto const &[name, g] : corpus()) {
    CAPTURE(name);
    auto a = automorphism_group(g);
    auto diam = *metrics(g).diameter;
    for (std::size_t s = 1; s <= diam; ++s) {
      auto geo = enumerate_s_geodesics(g, s);
      CHECK(geo.size() == count_s_geodesics(g, s));
      auto parts = orbits_on(a, geo);
      std::size_t total = 0;
      for (auto const &o : parts)
        total += o.size();
      CHECK(total == geo.size());
      auto first = orbit(a, geo[0]);
      bool one = first.size() == geo.size();
      CHECK(one == (parts.size() == 1));
      if (is_s_geodesic_transitive(g, a, s))
        CHECK(one);
    }
  }
  auto p13 = paley(13);
  auto parts = orbits_on(automorphism_group(p13), enumerate_s_geodesics(p13, 2));
  CHECK(parts.size() == 3);
  for (auto const &o : parts)
    CHECK(o.size() == 78);
}

TEST_CASE("arc-transitive circulants of valency 6 on Z_13")
{
  std::size_t sets = 0, arc_transitive = 0, paley_like = 0;
  auto p13 = paley(13);
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3)
      continue;
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < 6; ++i)
      if (mask >> i & 1)
        s.push_back(i + 1);
    auto g = circulant(13, s);
    REQUIRE(*metrics(g).valency == 6);
    ++sets;
    auto a = automorphism_group(g);
    bool arc = is_s_arc_transitive(g, a, 1);
    bool iso = are_isomorphic(g, p13).has_value();
    arc_transitive += arc;
    paley_like += arc && iso;
    CHECK(arc == iso);
  }
  CHECK(sets == 20);
  CHECK(arc_transitive == 2);
  CHECK(paley_like == 2);
}

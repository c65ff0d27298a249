// Acceptance suite: one PASS/FAIL line per criterion; exits 1 if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "geodt/autiso.hpp"
#include "geodt/families.hpp"
#include "geodt/psl2.hpp"
#include "geodt/transitivity.hpp"
#include "geodt/walks.hpp"
#include "oracles.hpp"

using namespace geodt;

namespace
{

struct Check
{
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, std::string const &what)
  {
    ++checks;
    if (!ok)
      failures.push_back(what);
  }

  template <class A, class B>
  void equal(std::string const &what, A const &measured, B const &expected)
  {
    ++checks;
    if (!(measured == expected)) {
      std::ostringstream os;
      os << what << ": measured " << measured << ", expected " << expected;
      failures.push_back(os.str());
    }
  }
};

// Graphs visited by criteria 1-7, re-examined by criterion 8.
std::deque<std::pair<std::string, Graph>> visited;

Graph const &keep(std::string name, Graph g)
{
  visited.emplace_back(std::move(name), std::move(g));
  return visited.back().second;
}

bool isomorphic(Graph const &a, Graph const &b)
{
  return are_isomorphic(a, b).has_value();
}

// Icosahedron from the cyclic shifts of (0, +-1, +-phi): adjacent at
// Euclidean distance 2.
Graph icosahedron()
{
  double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<std::array<double, 3>> pts;
  for (int shift = 0; shift < 3; ++shift)
    for (double a : {-1.0, 1.0})
      for (double b : {-phi, phi}) {
        std::array<double, 3> p{0, a, b};
        std::rotate(p.begin(), p.begin() + shift, p.end());
        pts.push_back(p);
      }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < pts.size(); ++u)
    for (Vertex v = u + 1; v < pts.size(); ++v) {
      double d2 = 0;
      for (int i = 0; i < 3; ++i)
        d2 += (pts[u][i] - pts[v][i]) * (pts[u][i] - pts[v][i]);
      if (std::abs(d2 - 4) < 1e-9)
        edges.push_back({u, v});
    }
  return Graph(pts.size(), edges);
}

void taylor_13(Check &c)
{
  auto const &g = keep("taylor:13", taylor(13));
  auto m = metrics(g);
  c.equal("order", g.order(), 28u);
  c.equal("valency", m.valency.value_or(0), 13u);
  c.equal("girth", m.girth.value_or(0), 3u);
  c.equal("diameter", m.diameter.value_or(0), 3u);
  auto aut = automorphism_group(g);
  c.equal("|Aut|", aut.order(), GroupOrder(13 * 14 * 12));
  c.expect(is_s_geodesic_transitive(g, aut, 2), "2-geodesic transitive");
  c.expect(!is_s_arc_transitive(g, aut, 2), "not 2-arc transitive");

  auto fibres = antipodal_fibres(g);
  c.expect(fibres.has_value(), "antipodal");
  if (fibres) {
    c.equal("fibres", fibres->size(), 14u);
    c.equal("fibre size", fibres->uniform_cell_size().value_or(0), 2u);
    auto q = quotient_graph(g, *fibres);
    c.expect(isomorphic(q.graph, complete(14)), "quotient is K_14");
    c.expect(q.is_cover, "cover of the quotient");
  }
  for (Vertex v = 0; v < g.order(); ++v)
    c.expect(isomorphic(local_graph(g, v), paley(13)),
             "local graph at " + std::to_string(v) + " is P(13)");

  IntersectionData want{6, 6, 6, 3, 13, 1};
  auto geo = enumerate_s_geodesics(g, 2);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < geo.size(); ++i)
    bad += !(intersection_data(g, geo[i][0], geo[i][1], geo[i][2]) == want);
  c.equal("2-geodesics with other intersection data", bad, 0u);
}

void icosahedron_5(Check &c)
{
  auto const &g = keep("taylor:5", taylor(5));
  c.equal("order", g.order(), 12u);
  c.expect(isomorphic(g, icosahedron()), "isomorphic to the icosahedron");
  c.equal("|Aut|", automorphism_group(g).order(), GroupOrder(120));
  c.expect(profile(g).geodesic_transitive, "geodesic transitive");
}

void involution_choice(Check &c)
{
  std::vector<std::string> certs;
  for (std::uint32_t i : {0u, 1u, 2u}) {
    auto tc = taylor_construction(13, i);
    keep("taylor:13," + std::to_string(i), tc.graph);
    certs.push_back(canonical_form(tc.graph).certificate);
  }
  c.expect(certs[0] == certs[1], "g and b.g give the same certificate");
  c.expect(certs[0] == certs[2], "g and b^2.g give the same certificate");
  c.expect(certs[1] == certs[2], "b.g and b^2.g give the same certificate");
}

void paley_suite(Check &c)
{
  c.expect(isomorphic(keep("paley:5", paley(5)), cycle(5)), "P(5) = C_5");

  auto const &p9 = keep("paley:9", paley(3, 2));
  auto pr9 = profile(p9);
  c.expect(pr9.geodesic_transitive, "P(9) geodesic transitive");
  c.equal("|Aut P(9)|", pr9.aut_order, GroupOrder(72));

  auto const &p13 = keep("paley:13", paley(13));
  auto pr13 = profile(p13);
  c.expect(pr13.distance_transitive, "P(13) distance transitive");
  c.equal("diam P(13)", pr13.diameter, 2u);
  c.equal("|Aut P(13)|", pr13.aut_order, GroupOrder(78));
  c.expect(!pr13.s_geodesic_transitive(2), "P(13) not 2-geodesic transitive");
  auto geo = enumerate_s_geodesics(p13, 2);
  c.equal("2-geodesics of P(13)", geo.size(), 234u);
  c.equal("orbits on them", orbits_on(automorphism_group(p13), geo).size(), 3u);

  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
         {3, 2}, {13, 1}, {17, 1}, {5, 2}}) {
    auto const &g = keep("paley:" + std::to_string(p) + "^" + std::to_string(e),
                         paley(p, e));
    std::size_t q = g.order();
    auto const &dt = g.distances();
    std::size_t bad = 0;
    for (auto edge : g.edges())
      for (auto [u, v] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
        std::size_t common = 0, onward = 0;
        for (Vertex w : g.neighbors(v)) {
          common += dt(u, w) == 1;
          onward += dt(u, w) == 2;
        }
        bad += common != (q - 5) / 4 || onward != (q - 1) / 4;
      }
    c.equal("q=" + std::to_string(q) + " edges violating the counts", bad, 0u);
  }
}

void circulants_13(Check &c)
{
  auto p13 = paley(13);
  std::size_t sets = 0, arc = 0, arc_and_paley = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3)
      continue;
    std::vector<std::uint32_t> s;
    std::string name = "circulant:13";
    for (std::uint32_t i = 0; i < 6; ++i)
      if (mask >> i & 1) {
        s.push_back(i + 1);
        name += "," + std::to_string(i + 1);
      }
    auto const &g = keep(name, circulant(13, s));
    ++sets;
    bool at = is_s_arc_transitive(g, automorphism_group(g), 1);
    arc += at;
    arc_and_paley += at && isomorphic(g, p13);
  }
  c.equal("connection sets", sets, 20u);
  c.equal("arc transitive", arc, 2u);
  c.equal("arc transitive and isomorphic to P(13)", arc_and_paley, 2u);
}

void cubic_table(Check &c)
{
  auto heawood = profile(keep("pg2:2", pg2_incidence(2)));
  c.equal("Heawood max_s_arc", heawood.max_s_arc, 4u);
  c.equal("Heawood diameter", heawood.diameter, 3u);

  struct Row
  {
    char const *file;
    std::size_t valency, s, diameter;
  };
  for (auto row : {Row{"foster.edges", 3, 5, 8}, Row{"biggs-smith.edges", 3, 4, 7}}) {
    auto p = profile(keep(row.file, load_graph(row.file)));
    std::string n = row.file;
    c.equal(n + " valency", p.valency.value_or(0), row.valency);
    c.equal(n + " max_s_arc", p.max_s_arc, row.s);
    c.equal(n + " diameter", p.diameter, row.diameter);
    c.expect(p.geodesic_transitive, n + " geodesic transitive");
  }
}

void classical_families(Check &c)
{
  struct Row
  {
    char const *spec;
    std::size_t girth, max_s_arc;
    bool need_geodesic_transitive;
  };
  for (auto row : {Row{"johnson:5,2", 3, 1, true}, Row{"johnson:6,3", 3, 1, true},
                   Row{"hamming:3,2", 4, 2, true}, Row{"hamming:2,3", 3, 1, false},
                   Row{"odd:2", 5, 3, false}, Row{"odd:3", 6, 3, true}}) {
    auto const &g = keep(row.spec, FamilySpec::parse(row.spec).build());
    auto p = profile(g);
    std::string n = row.spec;
    c.equal(n + " girth", p.girth.value_or(0), row.girth);
    c.equal(n + " max_s_arc", p.max_s_arc, row.max_s_arc);
    if (row.need_geodesic_transitive)
      c.expect(p.geodesic_transitive, n + " geodesic transitive");
  }
}

void hierarchy(Check &c)
{
  std::size_t pairs = 0;
  for (auto const &[name, g] : visited) {
    auto a = automorphism_group(g);
    auto m = metrics(g);
    for (std::size_t s = 1; s <= *m.diameter; ++s) {
      bool arc = is_s_arc_transitive(g, a, s);
      bool geo = is_s_geodesic_transitive(g, a, s);
      bool dist = is_s_distance_transitive(g, a, s);
      bool long_girth = m.girth && *m.girth >= 2 * s;
      std::string at = name + " s=" + std::to_string(s);
      c.expect(!arc || geo, at + ": arc without geodesic");
      c.expect(!geo || dist, at + ": geodesic without distance");
      c.expect((geo && long_girth) == arc, at + ": girth criterion");
      ++pairs;
    }
  }
  c.expect(pairs > 50, "enough (graph, s) pairs examined");
}

void brute_force_orders(Check &c)
{
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto const &g : oracle::connected_graphs(n)) {
      c.equal("order-" + std::to_string(n) + " graph",
              automorphism_group(g).order(),
              GroupOrder(oracle::automorphism_count(g)));
      ++compared;
    }
  c.equal("connected graphs on <= 6 vertices", compared, 143u);

  std::mt19937_64 rng(20260);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = 7 + static_cast<std::size_t>(rng() % 2);
    auto g = oracle::random_graph(n, density(rng), rng);
    c.equal("random graph " + std::to_string(i), automorphism_group(g).order(),
            GroupOrder(oracle::automorphism_count(g)));
  }
}

void distance_identities(Check &c)
{
  auto j = johnson(6, 3);
  auto js = oracle::k_subsets(6, 3);
  std::size_t bad = 0;
  for (Vertex u = 0; u < j.order(); ++u)
    for (Vertex v = 0; v < j.order(); ++v)
      bad += j.distances()(u, v) != 3 - oracle::intersection_size(js[u], js[v]);
  c.equal("J(6,3) violations", bad, 0u);

  auto h = hamming(3, 3);
  bad = 0;
  for (Vertex u = 0; u < h.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) {
      auto a = oracle::digits(u, 3, 3), b = oracle::digits(v, 3, 3);
      std::size_t diff = 0;
      for (std::size_t i = 0; i < 3; ++i)
        diff += a[i] != b[i];
      bad += h.distances()(u, v) != diff;
    }
  c.equal("H(3,3) violations", bad, 0u);

  auto o = odd(3);
  auto os = oracle::k_subsets(7, 3);
  bad = 0;
  for (Vertex u = 0; u < o.order(); ++u)
    for (Vertex v = 0; v < o.order(); ++v) {
      std::size_t d = o.distances()(u, v);
      std::size_t meet = oracle::intersection_size(os[u], os[v]);
      bad += meet != (d % 2 ? d / 2 : 3 - d / 2);
    }
  c.equal("O_4 violations", bad, 0u);
}

} // namespace

int main()
{
  struct Criterion
  {
    char const *title;
    std::function<void(Check &)> run;
  };
  std::vector<Criterion> criteria{
    {"Taylor graph p=13", taylor_13},
    {"Taylor p=5 is the icosahedron", icosahedron_5},
    {"involutions g, b.g, b^2.g give isomorphic graphs", involution_choice},
    {"Paley suite", paley_suite},
    {"valency-6 circulants on Z_13", circulants_13},
    {"Heawood, Foster, Biggs-Smith", cubic_table},
    {"Johnson, Hamming and odd graph instances", classical_families},
    {"hierarchy and girth criterion", hierarchy},
    {"automorphism orders against brute force", brute_force_orders},
    {"distance identities", distance_identities},
  };

  std::size_t failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (std::exception const &e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": "
              << criteria[i].title << " (" << c.checks << " checks, "
              << static_cast<int>(secs * 1000) << " ms)\n";
    for (auto const &f : c.failures)
      std::cout << "        " << f << '\n';
  }
  double total = std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  std::cout << criteria.size() - failed << "/" << criteria.size()
            << " criteria pass (" << total << " s)\n";
  return failed ? 1 : 0;
}

#include "geodt/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <thread>

#include "geodt/autiso.hpp"
#include "geodt/errors.hpp"
#include "geodt/field.hpp"
#include "geodt/log.hpp"
#include "geodt/transitivity.hpp"
#include "geodt/walks.hpp"

namespace geodt
{

using nlohmann::json;

std::vector<std::string> const &claim_fields()
{
  static const std::vector<std::string> fields{
    "order",
    "size",
    "valency",
    "girth",
    "diameter",
    "aut_order",
    "vertex_transitive",
    "max_s_distance",
    "max_s_geodesic",
    "max_s_arc",
    "distance_transitive",
    "geodesic_transitive",
    "antipodal_fibre_size",
    "antipodal_cover_of",
    "local_graph_iso_to",
    "intersection_data",
    "two_geodesic_orbits",
  };
  return fields;
}

ClaimManifest ClaimManifest::parse(std::istream &in)
{
  json doc;
  try {
    doc = json::parse(in);
  } catch (json::parse_error const &e) {
    throw ParseError(0, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("claims") || !doc["claims"].is_array())
    throw ParseError(0, "manifest needs a \"claims\" array");

  auto const &known = claim_fields();
  ClaimManifest m;
  std::size_t index = 0;
  for (auto const &c : doc["claims"]) {
    ++index;
    auto where = "claim " + std::to_string(index) + ": ";
    if (!c.is_object() || !c.contains("graph") || !c["graph"].is_string())
      throw ParseError(0, where + "needs a \"graph\" string");
    if (!c.contains("expect") || !c["expect"].is_object() ||
        c["expect"].empty())
      throw ParseError(0, where + "needs a non-empty \"expect\" object");
    for (auto const &[field, value] : c["expect"].items())
      if (std::find(known.begin(), known.end(), field) == known.end())
        throw ParseError(0, where + "unknown field \"" + field + "\"");
    Claim claim;
    claim.graph = c["graph"];
    claim.citation = c.value("citation", "");
    claim.expect = c["expect"];
    m.claims.push_back(std::move(claim));
  }
  return m;
}

ClaimManifest ClaimManifest::load(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open manifest " + path.string());
  return parse(in);
}

std::filesystem::path default_manifest_path()
{
  return data_dir() / "default_manifest.json";
}

namespace
{

json order_json(GroupOrder const &n)
{
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return n.convert_to<std::uint64_t>();
  return n.str();
}

template <typename T>
json optional_json(std::optional<T> const &x)
{
  return x ? json(*x) : json(nullptr);
}

// Integers compare by value whether written as numbers or strings.
bool same(json const &expected, json const &measured)
{
  auto digits = [](json const &j) -> std::optional<std::string> {
    if (j.is_number_integer())
      return j.dump();
    if (j.is_string()) {
      auto s = j.get<std::string>();
      if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit))
        return s;
    }
    return std::nullopt;
  };
  auto a = digits(expected), b = digits(measured);
  if (a && b)
    return *a == *b;
  return expected == measured;
}

std::optional<std::array<Vertex, 3>> first_two_geodesic(Graph const &g)
{
  auto const &dt = g.distances();
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v))
      for (Vertex w : g.neighbors(u))
        if (dt(v, w) == 2)
          return std::array<Vertex, 3>{v, u, w};
  return std::nullopt;
}

json intersection_json(IntersectionData const &d)
{
  return json::array({d.x, d.y, d.z, d.t, d.n2, d.n3});
}

bool isomorphic_to(Graph const &g, std::string const &spec)
{
  return are_isomorphic(g, FamilySpec::parse(spec).build()).has_value();
}

// Lazily measured facts about one graph.
class Subject
{
public:
  explicit Subject(Graph g) : _graph(std::move(g)) {}

  Graph const &graph() const { return _graph; }
  Metrics const &m()
  {
    if (!_metrics)
      _metrics = metrics(_graph);
    return *_metrics;
  }
  PermGroup const &aut()
  {
    if (!_aut)
      _aut = automorphism_group(_graph);
    return *_aut;
  }
  TransitivityProfile const &pr()
  {
    if (!_profile)
      _profile = profile(_graph, aut());
    return *_profile;
  }

  json measure(std::string const &field, json const &expected)
  {
    if (field == "order")
      return _graph.order();
    if (field == "size")
      return _graph.size();
    if (field == "valency")
      return optional_json(m().valency);
    if (field == "girth")
      return optional_json(m().girth);
    if (field == "diameter")
      return optional_json(m().diameter);
    if (field == "aut_order")
      return order_json(aut().order());
    if (field == "vertex_transitive")
      return aut().is_transitive();
    if (field == "max_s_distance")
      return pr().max_s_distance;
    if (field == "max_s_geodesic")
      return pr().max_s_geodesic;
    if (field == "max_s_arc")
      return pr().max_s_arc;
    if (field == "distance_transitive")
      return pr().distance_transitive;
    if (field == "geodesic_transitive")
      return pr().geodesic_transitive;
    if (field == "antipodal_fibre_size") {
      auto f = antipodal_fibres(_graph);
      return f ? optional_json(f->uniform_cell_size()) : json(nullptr);
    }
    if (field == "antipodal_cover_of") {
      auto f = antipodal_fibres(_graph);
      if (!f)
        return "not antipodal";
      auto q = quotient_graph(_graph, *f);
      if (!q.is_cover)
        return "antipodal quotient is not covered";
      auto target = expected.get<std::string>();
      return isomorphic_to(q.graph, target)
               ? json(target)
               : json("quotient not isomorphic to " + target);
    }
    if (field == "local_graph_iso_to") {
      auto target = expected.get<std::string>();
      return isomorphic_to(local_graph(_graph, 0), target)
               ? json(target)
               : json("local graph not isomorphic to " + target);
    }
    if (field == "intersection_data") {
      auto geo = first_two_geodesic(_graph);
      if (!geo)
        return nullptr;
      auto [v, u, w] = *geo;
      return intersection_json(intersection_data(_graph, v, u, w));
    }
    if (field == "two_geodesic_orbits")
      return orbits_on(aut(), enumerate_s_geodesics(_graph, 2)).size();
    throw InputError("unknown field " + field);
  }

private:
  Graph _graph;
  std::optional<Metrics> _metrics;
  std::optional<PermGroup> _aut;
  std::optional<TransitivityProfile> _profile;
};

std::vector<ClaimResult> run_claim(Claim const &claim)
{
  std::vector<ClaimResult> out;
  auto base = [&](std::string const &field, json const &expected) {
    ClaimResult r;
    r.graph = claim.graph;
    r.citation = claim.citation;
    r.field = field;
    r.expected = expected;
    return r;
  };

  std::optional<Subject> subject;
  std::string build_error;
  try {
    subject.emplace(FamilySpec::parse(claim.graph).build());
  } catch (std::exception const &e) {
    build_error = e.what();
  }

  for (auto const &[field, expected] : claim.expect.items()) {
    auto r = base(field, expected);
    if (!subject) {
      r.measured = json{{"error", build_error}};
      r.status = "fail";
    } else {
      try {
        r.measured = subject->measure(field, expected);
        r.status = same(expected, r.measured) ? "pass" : "fail";
      } catch (ScaleError const &e) {
        r.measured = json{{"refused", e.what()}};
        r.status = "skipped";
      } catch (std::exception const &e) {
        r.measured = json{{"error", e.what()}};
        r.status = "fail";
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace

json Report::to_json() const
{
  json claims = json::array();
  for (auto const &r : results)
    claims.push_back({{"graph", r.graph},
                      {"citation", r.citation},
                      {"field", r.field},
                      {"expected", r.expected},
                      {"measured", r.measured},
                      {"status", r.status}});
  return {{"version", kVersion},
          {"claims", claims},
          {"summary",
           {{"total", results.size()},
            {"pass", passed},
            {"fail", failed},
            {"skipped", skipped}}},
          {"runtime_seconds", runtime_seconds}};
}

Report run_manifest(ClaimManifest const &manifest, unsigned jobs)
{
  auto start = std::chrono::steady_clock::now();
  if (manifest.claims.empty())
    warn("manifest has no claims");

  std::vector<std::vector<ClaimResult>> per_claim(manifest.claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < manifest.claims.size(); i = next++)
      per_claim[i] = run_claim(manifest.claims[i]);
  };
  jobs = std::max(1u, std::min<unsigned>(
                        jobs, static_cast<unsigned>(manifest.claims.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  Report report;
  for (auto &rs : per_claim)
    for (auto &r : rs) {
      report.passed += r.status == "pass";
      report.failed += r.status == "fail";
      report.skipped += r.status == "skipped";
      report.results.push_back(std::move(r));
    }
  report.runtime_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

namespace
{

// A few families of the local graph's order to try it against.
std::vector<std::string> local_candidates(std::size_t n)
{
  std::vector<std::string> out;
  auto N = std::to_string(n);
  if (n >= 1)
    out.push_back("complete:" + N);
  if (n >= 1)
    out.push_back("complement(complete:" + N + ")");
  if (n >= 3)
    out.push_back("cycle:" + N);
  if (n % 4 == 1) {
    std::size_t p = 2, q = n, e = 0;
    while (q % p)
      ++p;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (q == 1 && p < n + 1)
      out.push_back("paley:" + N);
  }
  for (std::size_t m = 2; m <= n; ++m)
    if (n % m == 0 && n / m >= 2)
    {
      auto kmb = "kmb:" + std::to_string(m) + "," + std::to_string(n / m);
      out.push_back(kmb);
      out.push_back("complement(" + kmb + ")");
    }
  return out;
}

} // namespace

json analyze(Graph const &graph, std::string const &family,
             AnalyzeOptions const &options)
{
  auto start = std::chrono::steady_clock::now();
  auto m = metrics(graph);
  auto A = automorphism_group(graph);

  json out;
  out["family"] = family;
  out["order"] = graph.order();
  out["size"] = graph.size();
  out["valency"] = optional_json(m.valency);
  out["girth"] = optional_json(m.girth);
  out["diameter"] = optional_json(m.diameter);
  out["aut_order"] = order_json(A.order());

  if (m.connected) {
    auto pr = profile(graph, A);
    out["profile"] = {
      {"vertex_transitive", pr.vertex_transitive},
      {"max_s_distance", pr.max_s_distance},
      {"max_s_geodesic", pr.max_s_geodesic},
      {"max_s_arc", pr.max_s_arc},
      {"distance_transitive", pr.distance_transitive},
      {"geodesic_transitive", pr.geodesic_transitive},
      {"arc_cap_exceeded", pr.arc_cap_exceeded},
      {"group_supplied", pr.group_supplied},
    };
    auto fibres = antipodal_fibres(graph);
    out["antipodal"] = {
      {"is_antipodal", fibres.has_value()},
      {"fibre_size",
       fibres ? optional_json(fibres->uniform_cell_size()) : json(nullptr)},
    };
  } else {
    warn("graph is disconnected; transitivity profile omitted");
    out["profile"] = nullptr;
    out["antipodal"] = {{"is_antipodal", false}, {"fibre_size", nullptr}};
    out["warning"] = "disconnected graph";
  }

  if (options.intersection) {
    auto geo = m.connected ? first_two_geodesic(graph) : std::nullopt;
    if (geo) {
      auto [v, u, w] = *geo;
      auto d = intersection_data(graph, v, u, w);
      out["intersection_data"] = {{"geodesic", {v, u, w}},
                                  {"x", d.x}, {"y", d.y}, {"z", d.z},
                                  {"t", d.t}, {"n2", d.n2}, {"n3", d.n3}};
    } else {
      out["intersection_data"] = nullptr;
    }
  }

  if (options.local && graph.order() > 0) {
    auto local = local_graph(graph, 0);
    auto lm = metrics(local);
    json found = nullptr;
    for (auto const &spec : local_candidates(local.order())) {
      try {
        if (isomorphic_to(local, spec)) {
          found = spec;
          break;
        }
      } catch (InputError const &) {
        // candidate outside its family's domain
      }
    }
    out["local_graph"] = {{"vertex", 0},
                          {"order", local.order()},
                          {"valency", optional_json(lm.valency)},
                          {"identified_as", found}};
  }

  out["version"] = kVersion;
  out["runtime_seconds"] = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return out;
}

} // namespace geodt

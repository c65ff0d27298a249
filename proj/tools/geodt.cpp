// geodt: construct graph families, analyze their symmetry, test isomorphism
// and check a manifest of claims.
//
// Exit codes: 0 success, 1 claim failure (or non-isomorphic), 2 usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "geodt/autiso.hpp"
#include "geodt/edge_list.hpp"
#include "geodt/errors.hpp"
#include "geodt/families.hpp"
#include "geodt/report.hpp"

namespace
{

using namespace geodt;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options
{
  bool json = false;
  std::string out;
  bool seedless = false;
  int alt_g = -1;
  unsigned jobs = 1;
  bool intersection = false;
  bool local = false;
};

// A bare path is read as a file; everything else as a family spec. --alt-g
// replaces the involution index of a taylor spec.
FamilySpec resolve(std::string const &text, int alt_g)
{
  FamilySpec spec;
  if (text.find(':') == std::string::npos &&
      text.rfind("complement(", 0) != 0) {
    spec.tag = "file";
    spec.path = text;
  } else {
    spec = FamilySpec::parse(text);
  }
  if (alt_g >= 0 && spec.tag == "taylor") {
    spec.params.resize(2);
    spec.params[1] = static_cast<std::uint32_t>(alt_g);
  }
  return spec;
}

void emit(json const &doc, Options const &opt)
{
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f)
      throw InputError("cannot write " + opt.out);
    f << doc.dump(2) << '\n';
  }
}

int cmd_construct(std::string const &text, Options const &opt)
{
  auto spec = resolve(text, opt.alt_g);
  Graph g = spec.build();
  if (!opt.out.empty())
    write_edge_list(std::filesystem::path(opt.out), g, spec.to_string());
  auto m = metrics(g);
  if (opt.json) {
    std::cout << json{{"family", spec.to_string()},
                      {"order", g.order()},
                      {"size", g.size()},
                      {"valency", m.valency ? json(*m.valency) : json()}}
                   .dump(2)
              << '\n';
  } else {
    std::cout << spec.to_string() << ": order " << g.order() << ", size "
              << g.size() << ", valency "
              << (m.valency ? std::to_string(*m.valency) : "irregular")
              << '\n';
    if (opt.out.empty())
      write_edge_list(std::cout, g, spec.to_string());
  }
  return kOk;
}

std::string show(json const &v)
{
  return v.is_null() ? "inf/none" : v.dump();
}

int cmd_analyze(std::string const &text, Options const &opt)
{
  auto spec = resolve(text, opt.alt_g);
  Graph g = spec.build();
  auto doc = analyze(g, spec.to_string(),
                     {.intersection = opt.intersection, .local = opt.local});
  emit(doc, opt);
  if (opt.json) {
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  std::cout << doc["family"].get<std::string>() << '\n'
            << "  order     " << doc["order"] << '\n'
            << "  valency   " << show(doc["valency"]) << '\n'
            << "  girth     " << show(doc["girth"]) << '\n'
            << "  diameter  " << show(doc["diameter"]) << '\n'
            << "  |Aut|     " << doc["aut_order"] << '\n';
  if (!doc["profile"].is_null()) {
    auto const &p = doc["profile"];
    std::cout << "  vertex transitive    " << p["vertex_transitive"] << '\n'
              << "  max s distance       " << p["max_s_distance"] << '\n'
              << "  max s geodesic       " << p["max_s_geodesic"] << '\n'
              << "  max s arc            " << p["max_s_arc"]
              << (p["arc_cap_exceeded"].get<bool>() ? " (search cap)" : "")
              << '\n'
              << "  distance transitive  " << p["distance_transitive"] << '\n'
              << "  geodesic transitive  " << p["geodesic_transitive"] << '\n'
              << "  antipodal            " << doc["antipodal"]["is_antipodal"];
    if (doc["antipodal"]["is_antipodal"].get<bool>())
      std::cout << ", fibre size " << show(doc["antipodal"]["fibre_size"]);
    std::cout << '\n';
  }
  if (doc.contains("intersection_data") && !doc["intersection_data"].is_null()) {
    auto const &d = doc["intersection_data"];
    std::cout << "  around " << d["geodesic"] << ": x=" << d["x"]
              << " y=" << d["y"] << " z=" << d["z"] << " t=" << d["t"]
              << " |G2|=" << d["n2"] << " |G3|=" << d["n3"] << '\n';
  }
  if (doc.contains("local_graph")) {
    auto const &l = doc["local_graph"];
    std::cout << "  local graph at 0: order " << l["order"] << ", valency "
              << show(l["valency"]) << ", identified as "
              << (l["identified_as"].is_null()
                    ? std::string("unknown")
                    : l["identified_as"].get<std::string>())
              << '\n';
  }
  return kOk;
}

int cmd_iso(std::string const &a_text, std::string const &b_text,
            Options const &opt)
{
  Graph a = resolve(a_text, -1).build();
  Graph b = resolve(b_text, opt.alt_g).build();
  auto mapping = are_isomorphic(a, b);
  if (opt.json) {
    json doc{{"isomorphic", mapping.has_value()}};
    if (mapping)
      doc["mapping"] = std::vector<Vertex>(mapping->images().begin(),
                                           mapping->images().end());
    emit(doc, opt);
    std::cout << doc.dump(2) << '\n';
  } else if (mapping) {
    std::cout << "isomorphic\n";
    for (Vertex v = 0; v < a.order(); ++v)
      std::cout << "  " << v << " -> " << (*mapping)[v] << '\n';
  } else {
    std::cout << "non-isomorphic\n";
  }
  return mapping ? kOk : kFail;
}

int cmd_verify(std::string const &which, Options const &opt)
{
  auto path = which == "default" ? default_manifest_path()
                                 : std::filesystem::path(which);
  auto manifest = ClaimManifest::load(path);
  auto report = run_manifest(manifest, opt.jobs);
  auto doc = report.to_json();
  emit(doc, opt);
  if (opt.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    for (auto const &r : report.results)
      std::cout << std::left << std::setw(8) << r.status << std::setw(26)
                << r.graph << std::setw(22) << r.field << "expected "
                << r.expected.dump() << ", measured " << r.measured.dump()
                << '\n';
    std::cout << report.results.size() << " checks: " << report.passed
              << " pass, " << report.failed << " fail, " << report.skipped
              << " skipped (" << std::fixed << std::setprecision(2)
              << report.runtime_seconds << " s)\n";
  }
  return report.failed ? kFail : kOk;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Symmetry analysis of distance-transitive graph families"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--out", opt.out, "Output file");
  app.add_flag("--seedless", opt.seedless,
               "Reject nondeterministic paths (all paths are deterministic)");
  app.add_option("--alt-g", opt.alt_g,
                 "Use the involution b^i g in a taylor spec");
  app.set_version_flag("--version", std::string(kVersion));

  std::string a, b;
  auto *construct = app.add_subcommand("construct", "Build a graph family");
  construct->add_option("spec", a, "Family spec, e.g. taylor:13")->required();

  auto *analyze_cmd = app.add_subcommand("analyze", "Symmetry profile");
  analyze_cmd->add_option("spec", a, "Family spec or edge-list file")
    ->required();
  analyze_cmd->add_flag("--intersection", opt.intersection,
                        "Counts around the first 2-geodesic");
  analyze_cmd->add_flag("--local", opt.local, "Identify the local graph");

  auto *iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso->add_option("a", a, "First graph")->required();
  iso->add_option("b", b, "Second graph")->required();

  auto *verify = app.add_subcommand("verify", "Check a claim manifest");
  verify->add_option("manifest", a, "Manifest path or 'default'")
    ->default_val("default");
  verify->add_option("--jobs", opt.jobs, "Claims evaluated concurrently")
    ->check(CLI::Range(1u, 256u));

  for (auto *sub : {construct, analyze_cmd, iso, verify}) {
    sub->add_flag("--json", opt.json, "Machine-readable output");
    sub->add_option("--out", opt.out, "Output file");
    sub->add_flag("--seedless", opt.seedless, "Deterministic paths only");
    sub->add_option("--alt-g", opt.alt_g,
                    "Use the involution b^i g in a taylor spec");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct)
      return cmd_construct(a, opt);
    if (*analyze_cmd)
      return cmd_analyze(a, opt);
    if (*iso)
      return cmd_iso(a, b, opt);
    return cmd_verify(a, opt);
  } catch (ScaleError const &e) {
    std::cerr << "geodt: refused: " << e.what() << '\n';
  } catch (InputError const &e) {
    std::cerr << "geodt: " << e.what() << '\n';
  } catch (std::exception const &e) {
    std::cerr << "geodt: internal error: " << e.what() << '\n';
  }
  return kUsage;
}

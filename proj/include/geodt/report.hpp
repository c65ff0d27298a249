#ifndef GEODT_REPORT_HPP
#define GEODT_REPORT_HPP

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "families.hpp"
#include "graph.hpp"

namespace geodt
{

inline constexpr char kVersion[] = "0.1.0";

/// Fields a claim may assert.
std::vector<std::string> const &claim_fields();

struct Claim
{
  std::string graph;      // FamilySpec text
  std::string citation;   // carried into the report verbatim
  nlohmann::json expect;  // field -> expected value
};

struct ClaimManifest
{
  std::vector<Claim> claims;

  /// {"claims": [{"graph": ..., "citation": ..., "expect": {...}}, ...]}.
  /// Throws ParseError on malformed JSON or unknown / missing fields.
  static ClaimManifest parse(std::istream &in);
  static ClaimManifest load(std::filesystem::path const &path);
};

/// Path of the shipped manifest.
std::filesystem::path default_manifest_path();

struct ClaimResult
{
  std::string graph;
  std::string citation;
  std::string field;
  nlohmann::json expected;
  nlohmann::json measured;
  std::string status; // pass | fail | skipped
};

struct Report
{
  std::vector<ClaimResult> results; // manifest order
  std::size_t passed = 0, failed = 0, skipped = 0;
  double runtime_seconds = 0;

  nlohmann::json to_json() const;
};

/// Runs every claim, up to `jobs` graphs at a time. Results are in manifest
/// order whatever the completion order.
Report run_manifest(ClaimManifest const &manifest, unsigned jobs = 1);

struct AnalyzeOptions
{
  bool intersection = false; // counts around the first 2-geodesic
  bool local = false;        // local graph at vertex 0
};

/// The analysis report: family, order, valency, girth, diameter, aut_order,
/// profile{...}, antipodal{is_antipodal, fibre_size}, plus optional blocks.
/// A disconnected graph gets a null profile and a "warning" entry.
nlohmann::json analyze(Graph const &graph, std::string const &family,
                       AnalyzeOptions const &options = {});

} // namespace geodt

#endif // GEODT_REPORT_HPP

#include "geodt/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "geodt/errors.hpp"

namespace geodt
{

namespace
{

bool read_uint(std::istringstream &ss, unsigned long long &value)
{
  std::string token;
  if (!(ss >> token))
    return false;
  if (token.find_first_not_of("0123456789") != std::string::npos)
    return false;
  try {
    value = std::stoull(token);
  } catch (std::exception const &) {
    return false;
  }
  return true;
}

} // namespace

Graph read_edge_list(std::istream &in)
{
  std::string line;
  std::size_t lineno = 0;
  bool have_order = false;
  unsigned long long order = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;

    std::istringstream ss(line);
    std::string rest;
    if (!have_order) {
      if (!read_uint(ss, order))
        throw ParseError(lineno, "expected vertex count");
      if (ss >> rest)
        throw ParseError(lineno, "trailing text after vertex count");
      if (order > (1ull << 24))
        throw ParseError(lineno, "vertex count too large");
      have_order = true;
      continue;
    }

    unsigned long long u = 0, v = 0;
    if (!read_uint(ss, u) || !read_uint(ss, v))
      throw ParseError(lineno, "expected two vertex indices");
    if (ss >> rest)
      throw ParseError(lineno, "trailing text after edge");
    if (u >= order || v >= order)
      throw ParseError(lineno, "vertex index out of range");
    if (u == v)
      throw ParseError(lineno, "loop edge");
    if (u > v)
      throw ParseError(lineno, "edge must be written as u v with u < v");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second)
      throw ParseError(lineno, "duplicate edge");
    edges.push_back(e);
  }
  if (!have_order)
    throw ParseError(lineno + 1, "missing vertex count");
  return Graph(order, edges);
}

Graph read_edge_list(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream &out, Graph const &graph,
                     std::string const &comment)
{
  if (!comment.empty())
    out << "# " << comment << '\n';
  out << graph.order() << '\n';
  for (auto const &e : graph.edges())
    out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(std::filesystem::path const &path, Graph const &graph,
                     std::string const &comment)
{
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write " + path.string());
  write_edge_list(out, graph, comment);
}

} // namespace geodt

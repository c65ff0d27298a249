#include "geodt/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

#include "geodt/edge_list.hpp"
#include "geodt/errors.hpp"
#include "geodt/field.hpp"
#include "geodt/psl2.hpp"

#ifndef GEODT_DATA_DIR
#define GEODT_DATA_DIR "data"
#endif

namespace geodt
{

namespace
{

constexpr std::uint64_t kMaxOrder = 1u << 20;

void require(bool ok, std::string const &what)
{
  if (!ok)
    throw InputError(what);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMaxOrder)
      return kMaxOrder + 1;
  }
  return r;
}

// k-subsets of {0..n-1}, lexicographic
std::vector<std::vector<std::uint32_t>> subsets(std::uint32_t n,
                                                std::uint32_t k)
{
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(k);
  for (std::uint32_t i = 0; i < k; ++i)
    cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && cur[i] == n - k + static_cast<std::uint32_t>(i))
      --i;
    if (i < 0)
      break;
    ++cur[i];
    for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j)
      cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t common(std::vector<std::uint32_t> const &a,
                   std::vector<std::uint32_t> const &b)
{
  std::size_t c = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] == b[j]) {
      ++c;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return c;
}

std::string subset_label(std::vector<std::uint32_t> const &s)
{
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

Graph subset_graph(std::uint32_t n, std::uint32_t k,
                   std::size_t adjacent_intersection)
{
  auto sets = subsets(n, k);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    labels.push_back(subset_label(sets[i]));
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (common(sets[i], sets[j]) == adjacent_intersection)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return Graph(sets.size(), edges, std::move(labels));
}

} // namespace

Graph complete(std::uint32_t n)
{
  require(n >= 1 && n <= 4096, "complete graph needs 1 <= n <= 4096");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.push_back({u, v});
  return Graph(n, edges);
}

Graph complete_bipartite(std::uint32_t m, std::uint32_t n)
{
  require(m >= 1 && n >= 1 && m + n <= 4096,
          "complete bipartite graph needs m, n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < m + n; ++v)
      edges.push_back({u, v});
  return Graph(m + n, edges);
}

Graph complete_multipartite(std::uint32_t m, std::uint32_t b)
{
  require(m >= 2 && b >= 1 && std::uint64_t{m} * b <= 4096,
          "complete multipartite graph needs m >= 2, b >= 1");
  std::uint32_t n = m * b;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / b != v / b)
        edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle(std::uint32_t n)
{
  require(n >= 3 && n <= kMaxOrder, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u)
    edges.push_back({u, u + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph johnson(std::uint32_t n, std::uint32_t k)
{
  require(n >= 3 && k >= 1 && 2 * k <= n,
          "Johnson graph needs n >= 3 and 1 <= k <= n/2");
  require(binomial(n, k) <= 20000, "Johnson graph too large");
  return subset_graph(n, k, k - 1);
}

Graph odd(std::uint32_t k)
{
  require(k >= 1, "odd graph needs k >= 1");
  require(binomial(2 * k + 1, k) <= 20000, "odd graph too large");
  return subset_graph(2 * k + 1, k, 0);
}

Graph hamming(std::uint32_t d, std::uint32_t n)
{
  require(d >= 1 && n >= 2, "Hamming graph needs d >= 1 and n >= 2");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    order *= n;
    require(order <= kMaxOrder, "Hamming graph too large");
  }
  std::vector<std::uint64_t> weight(d, 1); // place value of coordinate i
  for (std::size_t i = d - 1; i-- > 0;)
    weight[i] = weight[i + 1] * n;

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::uint64_t x = 0; x < order; ++x) {
    std::string label = "(";
    for (std::uint32_t i = 0; i < d; ++i) {
      std::uint64_t digit = (x / weight[i]) % n;
      label += (i ? "," : "") + std::to_string(digit);
      for (std::uint64_t c = digit + 1; c < n; ++c)
        edges.push_back({static_cast<Vertex>(x),
                         static_cast<Vertex>(x + (c - digit) * weight[i])});
    }
    labels.push_back(label + ")");
  }
  return Graph(order, edges, std::move(labels));
}

Graph paley(std::uint32_t p, std::uint32_t e)
{
  auto field = FiniteField::make(p, e);
  std::uint32_t q = field.order();
  require(q % 4 == 1, "Paley graph needs q = 1 mod 4, got q = " +
                        std::to_string(q));
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex u = 0; u < q; ++u) {
    labels.push_back(field.format(u));
    for (Vertex v = u + 1; v < q; ++v)
      if (field.is_square(field.sub(u, v)))
        edges.push_back({u, v});
  }
  return Graph(q, edges, std::move(labels));
}

Graph pg2_incidence(std::uint32_t q)
{
  require(q >= 2 && q <= 5, "PG(2,q) incidence graph needs q in {2,3,4,5}");
  std::uint32_t p = q == 4 ? 2 : q;
  auto field = FiniteField::make(p, q == 4 ? 2 : 1);

  // nonzero vectors of F_q^3 whose first nonzero coordinate is 1
  std::vector<std::array<std::uint32_t, 3>> reps;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y)
      for (std::uint32_t z = 0; z < q; ++z) {
        std::uint32_t lead = x ? x : (y ? y : z);
        if (lead == 1)
          reps.push_back({x, y, z});
      }
  std::size_t n = reps.size();
  if (n != q * q + q + 1)
    throw ConstructionError("wrong number of projective points");

  auto vec = [&](std::array<std::uint32_t, 3> const &r) {
    return "(" + field.format(r[0]) + "," + field.format(r[1]) + "," +
           field.format(r[2]) + ")";
  };
  std::vector<Edge> edges;
  std::vector<std::string> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "P" + vec(reps[i]);
    labels[n + i] = "L" + vec(reps[i]);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t dot = 0;
      for (int c = 0; c < 3; ++c)
        dot = field.add(dot, field.mul(reps[i][c], reps[j][c]));
      if (dot == 0)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(n + j)});
    }
  }
  return Graph(2 * n, edges, std::move(labels));
}

Graph circulant(std::uint32_t n, std::span<std::uint32_t const> connection)
{
  require(n >= 2 && n <= kMaxOrder, "circulant needs n >= 2");
  std::vector<bool> in_s(n, false);
  for (auto s : connection) {
    require(s >= 1 && s < n, "circulant connection element out of 1..n-1");
    in_s[s] = true;
    in_s[n - s] = true;
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (in_s[v - u])
        edges.push_back({u, v});
  return Graph(n, edges);
}

Graph taylor(std::uint32_t p, std::uint32_t alt_index)
{
  return taylor_construction(p, alt_index).graph;
}

std::filesystem::path data_dir()
{
  return GEODT_DATA_DIR;
}

Graph load_graph(std::filesystem::path const &path)
{
  std::filesystem::path resolved = path;
  if (!std::filesystem::exists(resolved) && path.is_relative() &&
      std::filesystem::exists(data_dir() / path))
    resolved = data_dir() / path;
  Graph g = read_edge_list(resolved);

  struct Expected
  {
    std::size_t order, valency;
    Distance diameter;
  };
  static const std::map<std::string, Expected> reserved{
    {"foster.edges", {90, 3, 8}},
    {"biggs-smith.edges", {102, 3, 7}},
  };
  auto it = reserved.find(path.filename().string());
  if (it != reserved.end()) {
    auto m = metrics(g);
    auto const &x = it->second;
    if (g.order() != x.order || m.valency != x.valency ||
        m.diameter != x.diameter)
      throw InputError(path.filename().string() +
                       " does not have order " + std::to_string(x.order) +
                       ", valency " + std::to_string(x.valency) +
                       " and diameter " + std::to_string(x.diameter));
  }
  return g;
}

namespace
{

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::uint32_t parse_uint(std::string const &text, std::string const &spec)
{
  std::string t = trim(text);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw InputError("bad number '" + text + "' in family spec '" + spec + "'");
  return value;
}

std::vector<std::string> split(std::string const &s, char sep)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos)
      break;
    start = pos + 1;
  }
  return out;
}

} // namespace

FamilySpec FamilySpec::parse(std::string const &raw)
{
  std::string text = trim(raw);
  FamilySpec spec;
  const std::string comp = "complement(";
  if (text.rfind(comp, 0) == 0) {
    if (text.back() != ')')
      throw InputError("unbalanced parentheses in '" + raw + "'");
    spec.tag = "complement";
    spec.inner = std::make_shared<FamilySpec const>(
      parse(text.substr(comp.size(), text.size() - comp.size() - 1)));
    return spec;
  }

  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InputError("family spec '" + raw + "' lacks a ':'");
  std::string tag = trim(text.substr(0, colon));
  std::string args = text.substr(colon + 1);

  static const std::map<std::string, std::string> aliases{
    {"complete", "complete"}, {"k", "complete"},
    {"kbip", "kbip"}, {"complete-bipartite", "kbip"},
    {"kmb", "kmb"}, {"complete-multipartite", "kmb"},
    {"cycle", "cycle"}, {"c", "cycle"},
    {"johnson", "johnson"}, {"j", "johnson"},
    {"hamming", "hamming"}, {"h", "hamming"},
    {"odd", "odd"}, {"o", "odd"},
    {"paley", "paley"}, {"taylor", "taylor"},
    {"pg2", "pg2"}, {"pg2-incidence", "pg2"},
    {"circulant", "circulant"}, {"file", "file"},
  };
  auto it = aliases.find(tag);
  if (it == aliases.end())
    throw InputError("unknown family '" + tag + "'");
  spec.tag = it->second;

  if (spec.tag == "file") {
    spec.path = trim(args);
    if (spec.path.empty())
      throw InputError("file spec needs a path");
    return spec;
  }

  if (spec.tag == "paley") {
    auto caret = args.find('^');
    std::uint32_t p = 0, e = 1;
    if (caret != std::string::npos) {
      p = parse_uint(args.substr(0, caret), raw);
      e = parse_uint(args.substr(caret + 1), raw);
    } else {
      std::uint32_t q = parse_uint(args, raw);
      require(q >= 2, "Paley order must be a prime power");
      p = 2;
      while (q % p)
        ++p;
      e = 0;
      while (q % p == 0) {
        q /= p;
        ++e;
      }
      require(q == 1, "Paley order must be a prime power");
    }
    spec.params = {p, e};
    return spec;
  }

  for (auto const &part : split(args, ','))
    spec.params.push_back(parse_uint(part, raw));
  static const std::map<std::string, std::pair<std::size_t, std::size_t>>
    arity{{"complete", {1, 1}}, {"kbip", {2, 2}},    {"kmb", {2, 2}},
          {"cycle", {1, 1}},    {"johnson", {2, 2}}, {"hamming", {2, 2}},
          {"odd", {1, 1}},      {"taylor", {1, 2}},  {"pg2", {1, 1}},
          {"circulant", {2, 1024}}};
  auto [lo, hi] = arity.at(spec.tag);
  if (spec.params.size() < lo || spec.params.size() > hi)
    throw InputError("wrong number of parameters in '" + raw + "'");
  return spec;
}

std::string FamilySpec::to_string() const
{
  if (tag == "complement")
    return "complement(" + inner->to_string() + ")";
  if (tag == "file")
    return "file:" + path;
  if (tag == "paley")
    return "paley:" + std::to_string(params[0]) +
           (params[1] == 1 ? "" : "^" + std::to_string(params[1]));
  std::string out = tag + ":";
  for (std::size_t i = 0; i < params.size(); ++i)
    out += (i ? "," : "") + std::to_string(params[i]);
  return out;
}

Graph FamilySpec::build() const
{
  auto const &x = params;
  if (tag == "complement")
    return complement(inner->build());
  if (tag == "file")
    return load_graph(path);
  if (tag == "complete")
    return complete(x[0]);
  if (tag == "kbip")
    return complete_bipartite(x[0], x[1]);
  if (tag == "kmb")
    return complete_multipartite(x[0], x[1]);
  if (tag == "cycle")
    return cycle(x[0]);
  if (tag == "johnson")
    return johnson(x[0], x[1]);
  if (tag == "hamming")
    return hamming(x[0], x[1]);
  if (tag == "odd")
    return odd(x[0]);
  if (tag == "paley")
    return paley(x[0], x[1]);
  if (tag == "taylor")
    return taylor(x[0], x.size() > 1 ? x[1] : 0);
  if (tag == "pg2")
    return pg2_incidence(x[0]);
  if (tag == "circulant")
    return circulant(x[0], std::span(x).subspan(1));
  throw InputError("unknown family '" + tag + "'");
}

} // namespace geodt

#include "geodt/psl2.hpp"

#include <algorithm>
#include <map>

#include "geodt/errors.hpp"
#include "geodt/field.hpp"
#include "geodt/perm_group.hpp"

namespace geodt
{

EnumeratedGroup::EnumeratedGroup(std::size_t order, Element identity,
                                 Multiply mul, std::vector<std::string> labels,
                                 Invert inv)
: _order(order),
  _identity(identity),
  _mul(std::move(mul)),
  _labels(std::move(labels))
{
  if (identity >= order)
    throw InputError("identity index out of range");
  if (_labels.size() != order)
    throw InputError("one label per element required");
  _inverse.assign(order, 0);
  for (Element x = 0; x < order; ++x) {
    if (inv) {
      _inverse[x] = inv(x);
      if (_mul(x, _inverse[x]) != _identity)
        throw InputError("inversion rule is wrong at " + _labels[x]);
      continue;
    }
    Element y = 0;
    while (y < order && _mul(x, y) != _identity)
      ++y;
    if (y == order)
      throw InputError("element " + _labels[x] + " has no inverse");
    _inverse[x] = y;
  }
}

EnumeratedGroup
EnumeratedGroup::from_permutations(std::vector<Permutation> const &gens)
{
  if (gens.empty())
    throw InputError("at least one generator required");
  auto elements = PermGroup(gens.front().degree(), gens).elements();
  std::sort(elements.begin(), elements.end());
  auto table = std::make_shared<std::map<Permutation, Element>>();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    table->emplace(elements[i], static_cast<Element>(i));
    labels.push_back(elements[i].to_cycle_string());
  }
  auto perms =
    std::make_shared<std::vector<Permutation>>(std::move(elements));
  Element id = table->at(Permutation(gens.front().degree()));
  return EnumeratedGroup(
    perms->size(), id,
    [perms, table](Element x, Element y) {
      return table->at((*perms)[x] * (*perms)[y]);
    },
    std::move(labels),
    [perms, table](Element x) { return table->at((*perms)[x].inverse()); });
}

EnumeratedGroup::Element EnumeratedGroup::pow(Element x, std::uint64_t k) const
{
  Element r = _identity;
  while (k) {
    if (k & 1)
      r = mul(r, x);
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

std::size_t EnumeratedGroup::element_order(Element x) const
{
  std::size_t k = 1;
  for (Element y = x; y != _identity; y = mul(y, x))
    ++k;
  return k;
}

std::optional<EnumeratedGroup::Element>
EnumeratedGroup::find(std::string const &label) const
{
  auto it = std::find(_labels.begin(), _labels.end(), label);
  if (it == _labels.end())
    return std::nullopt;
  return static_cast<Element>(it - _labels.begin());
}

std::vector<EnumeratedGroup::Element>
EnumeratedGroup::closure(std::span<Element const> generators) const
{
  std::vector<bool> seen(_order, false);
  std::vector<Element> out{_identity};
  seen[_identity] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Element s : generators) {
      Element y = mul(out[k], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProjectiveMatrix ProjectiveMatrix::make(std::uint32_t p, std::int64_t a,
                                        std::int64_t b, std::int64_t c,
                                        std::int64_t d)
{
  auto P = static_cast<std::int64_t>(p);
  auto red = [P](std::int64_t x) { return ((x % P) + P) % P; };
  a = red(a);
  b = red(b);
  c = red(c);
  d = red(d);
  if (red(a * d - b * c) != 1)
    throw InputError("matrix does not have determinant 1 mod " +
                     std::to_string(p));
  std::int64_t lead = a ? a : (b ? b : (c ? c : d));
  if (lead > P / 2) {
    a = red(-a);
    b = red(-b);
    c = red(-c);
    d = red(-d);
  }
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d)};
}

ProjectiveMatrix multiply(std::uint32_t p, ProjectiveMatrix const &x,
                          ProjectiveMatrix const &y)
{
  std::int64_t a = x.a, b = x.b, c = x.c, d = x.d;
  return ProjectiveMatrix::make(p, a * y.a + b * y.c, a * y.b + b * y.d,
                                c * y.a + d * y.c, c * y.b + d * y.d);
}

std::string to_string(ProjectiveMatrix const &m)
{
  return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + "," +
         std::to_string(m.c) + "," + std::to_string(m.d) + ")";
}

struct Psl2::Tables
{
  std::uint32_t p;
  std::vector<ProjectiveMatrix> matrices;
  std::vector<std::int32_t> lookup; // packed (a,b,c,d) -> index, or -1

  std::size_t key(ProjectiveMatrix const &m) const
  {
    return ((static_cast<std::size_t>(m.a) * p + m.b) * p + m.c) * p + m.d;
  }
  Element index(ProjectiveMatrix const &m) const
  {
    return static_cast<Element>(lookup[key(m)]);
  }
};

Psl2::Psl2(std::uint32_t p)
: _p(p)
{
  if (p < 3 || !is_prime(p))
    throw InputError("PSL(2,p) needs an odd prime, got " + std::to_string(p));
  if (p > 41)
    throw InputError("PSL(2," + std::to_string(p) + ") is too large to enumerate");

  auto tables = std::make_shared<Tables>();
  tables->p = p;
  std::int64_t P = p;
  for (std::int64_t a = 0; a < P; ++a)
    for (std::int64_t b = 0; b < P; ++b)
      for (std::int64_t c = 0; c < P; ++c)
        for (std::int64_t d = 0; d < P; ++d) {
          if (((a * d - b * c) % P + P) % P != 1)
            continue;
          auto m = ProjectiveMatrix::make(p, a, b, c, d);
          if (m.a == a && m.b == b && m.c == c && m.d == d)
            tables->matrices.push_back(m);
        }
  // loop order already yields lexicographic order
  tables->lookup.assign(static_cast<std::size_t>(P * P * P * P), -1);
  for (std::size_t i = 0; i < tables->matrices.size(); ++i)
    tables->lookup[tables->key(tables->matrices[i])] =
      static_cast<std::int32_t>(i);

  std::vector<std::string> labels;
  for (auto const &m : tables->matrices)
    labels.push_back(to_string(m));
  Element id = tables->index(ProjectiveMatrix{});
  _tables = tables;
  _group = EnumeratedGroup(
    tables->matrices.size(), id,
    [tables](Element x, Element y) {
      return tables->index(multiply(tables->p, tables->matrices[x],
                                    tables->matrices[y]));
    },
    std::move(labels),
    [tables](Element x) {
      auto const &m = tables->matrices[x];
      std::int64_t a = m.a, b = m.b, c = m.c, d = m.d;
      return tables->index(ProjectiveMatrix::make(tables->p, d, -b, -c, a));
    });
}

ProjectiveMatrix const &Psl2::matrix(Element x) const
{
  return _tables->matrices.at(x);
}

Psl2::Element Psl2::index_of(ProjectiveMatrix const &m) const
{
  auto n = ProjectiveMatrix::make(_p, m.a, m.b, m.c, m.d);
  return _tables->index(n);
}

Psl2::Element Psl2::element(std::int64_t a, std::int64_t b, std::int64_t c,
                            std::int64_t d) const
{
  return _tables->index(ProjectiveMatrix::make(_p, a, b, c, d));
}

Graph coset_graph(EnumeratedGroup const &group,
                  std::span<EnumeratedGroup::Element const> subgroup,
                  EnumeratedGroup::Element g)
{
  using Element = EnumeratedGroup::Element;
  std::size_t n = group.order();
  if (g >= n)
    throw InputError("element out of range");
  std::vector<bool> in_h(n, false);
  for (Element h : subgroup) {
    if (h >= n)
      throw InputError("element out of range");
    in_h[h] = true;
  }
  if (!in_h[group.identity()])
    throw InputError("subgroup does not contain the identity");
  for (Element x : subgroup)
    for (Element y : subgroup)
      if (!in_h[group.mul(x, y)])
        throw InputError("subset is not closed under multiplication");
  if (!in_h[group.mul(g, g)])
    throw InputError("g^2 does not lie in H");

  std::vector<Element> gens(subgroup.begin(), subgroup.end());
  gens.push_back(g);
  if (group.closure(gens).size() != n)
    throw ConnectivityError("H and g do not generate the group");

  std::vector<bool> in_hgh(n, false);
  for (Element x : subgroup) {
    Element xg = group.mul(x, g);
    for (Element y : subgroup)
      in_hgh[group.mul(xg, y)] = true;
  }

  // Scanning upwards, the first element of each coset is its least one.
  std::vector<std::int64_t> coset_of(n, -1);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] >= 0)
      continue;
    for (Element h : subgroup)
      coset_of[group.mul(h, x)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    labels.push_back(group.label(reps[i]));
    Element xinv = group.inverse(reps[i]);
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (in_hgh[group.mul(reps[j], xinv)])
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return Graph(reps.size(), edges, std::move(labels));
}

TaylorConstruction taylor_construction(std::uint32_t p,
                                       std::uint32_t alt_index)
{
  if (!is_prime(p) || p % 4 != 1)
    throw InputError("the Taylor construction needs a prime p = 1 mod 4, got " +
                     std::to_string(p));

  TaylorConstruction tc;
  tc.p = p;
  tc.alt_index = alt_index;
  tc.primitive_root = FiniteField::make(p, 1).primitive_element();
  auto group = std::make_shared<Psl2 const>(p);
  tc.group = group;
  auto const &G = group->group();
  std::int64_t t = tc.primitive_root;
  std::int64_t t_inv = FiniteField::make(p, 1).inv(tc.primitive_root);

  tc.a = group->element(1, 1, 0, 1);
  tc.b = group->element(t, 0, 0, t_inv);
  tc.g = group->element(0, 1, -1, 0);
  tc.involution = G.mul(G.pow(tc.b, alt_index), tc.g);

  auto check = [](bool ok, std::string const &what) {
    if (!ok)
      throw ConstructionError("Taylor construction: " + what);
  };
  check(G.element_order(tc.a) == p, "o(a) != p");
  check(G.element_order(tc.b) == (p - 1) / 2, "o(b) != (p-1)/2");
  check(G.element_order(tc.g) == 2, "g is not an involution");
  check(G.element_order(tc.involution) == 2, "b^i g is not an involution");

  Psl2::Element b2 = G.mul(tc.b, tc.b);
  std::vector<Psl2::Element> hgens{tc.a, b2};
  tc.H = G.closure(hgens);
  check(tc.H.size() == static_cast<std::size_t>(p) * (p - 1) / 4,
        "|H| != p(p-1)/4");
  check(G.order() % tc.H.size() == 0 &&
          G.order() / tc.H.size() == 2 * static_cast<std::size_t>(p) + 2,
        "|G:H| != 2p+2");

  // <b, g> inside the normalizer of <b^2>; for p > 5 it is all of it.
  std::vector<Psl2::Element> b2gen{b2};
  auto B = G.closure(b2gen);
  auto normalizes = [&](Psl2::Element x) {
    Psl2::Element conj = G.mul(G.mul(G.inverse(x), b2), x);
    return std::binary_search(B.begin(), B.end(), conj);
  };
  std::vector<Psl2::Element> bg{tc.b, tc.g};
  auto D = G.closure(bg);
  check(D.size() == p - 1, "|<b, g>| != p-1");
  check(std::all_of(D.begin(), D.end(), normalizes),
        "<b, g> does not normalize <b^2>");
  if (p > 5) {
    std::size_t count = 0;
    for (Psl2::Element x = 0; x < G.order(); ++x)
      count += normalizes(x);
    check(count == p - 1, "normalizer of <b^2> has order != p-1");
  }

  tc.graph = coset_graph(G, tc.H, tc.involution);
  check(tc.graph.order() == 2 * static_cast<std::size_t>(p) + 2,
        "vertex count != 2p+2");
  check(tc.graph.valency() == p, "valency != p");
  return tc;
}

} // namespace geodt

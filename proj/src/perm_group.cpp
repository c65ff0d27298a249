#include "geodt/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "geodt/errors.hpp"

namespace geodt
{

struct PermGroup::Chain
{
  struct Level
  {
    Vertex base_point = 0;
    std::vector<Permutation> generators;   // fix all earlier base points
    std::vector<Vertex> orbit;             // discovery order
    std::vector<std::int32_t> where;       // point -> index into orbit, or -1
    std::vector<Permutation> transversal;  // transversal[k]: base -> orbit[k]

    void rebuild(std::size_t degree)
    {
      orbit.assign(1, base_point);
      where.assign(degree, -1);
      where[base_point] = 0;
      transversal.assign(1, Permutation(degree));
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (auto const &s : generators) {
          Vertex y = s[orbit[k]];
          if (where[y] < 0) {
            where[y] = static_cast<std::int32_t>(orbit.size());
            orbit.push_back(y);
            transversal.push_back(transversal[k] * s);
          }
        }
      }
    }
  };

  std::size_t degree = 0;
  std::vector<Level> levels;

  // Strips p through levels [from, end). Returns the residue and the level
  // where stripping stopped (levels.size() if it went all the way).
  std::pair<Permutation, std::size_t> sift(Permutation p,
                                           std::size_t from) const
  {
    for (std::size_t l = from; l < levels.size(); ++l) {
      auto const &lev = levels[l];
      auto k = lev.where[p[lev.base_point]];
      if (k < 0)
        return {std::move(p), l};
      p = p * lev.transversal[static_cast<std::size_t>(k)].inverse();
    }
    return {std::move(p), levels.size()};
  }

  static std::shared_ptr<Chain const>
  build(std::size_t degree, std::vector<Permutation> const &gens,
        std::span<Vertex const> prefix)
  {
    auto chain = std::make_shared<Chain>();
    chain->degree = degree;

    std::vector<Vertex> base;
    for (Vertex b : prefix) {
      if (b >= degree)
        throw InputError("base point out of range");
      if (std::find(base.begin(), base.end(), b) == base.end())
        base.push_back(b);
    }
    for (auto const &g : gens) {
      bool fixes_base = std::all_of(base.begin(), base.end(),
                                    [&](Vertex b) { return g[b] == b; });
      if (fixes_base && !g.is_identity())
        base.push_back(g.first_moved());
    }

    auto &levels = chain->levels;
    levels.resize(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      levels[i].base_point = base[i];
      for (auto const &g : gens) {
        bool fixes = true;
        for (std::size_t j = 0; j < i && fixes; ++j)
          fixes = g[base[j]] == base[j];
        if (fixes && !g.is_identity())
          levels[i].generators.push_back(g);
      }
      levels[i].rebuild(degree);
    }

    std::size_t i = levels.size();
    while (i > 0) {
      std::size_t cur = i - 1;
      bool extended = false;
      auto &lev = levels[cur];
      for (std::size_t k = 0; k < lev.orbit.size() && !extended; ++k) {
        for (std::size_t gi = 0; gi < lev.generators.size() && !extended;
             ++gi) {
          auto const &s = lev.generators[gi];
          Vertex image = s[lev.orbit[k]];
          auto const &u_img =
            lev.transversal[static_cast<std::size_t>(lev.where[image])];
          Permutation us = lev.transversal[k] * s;
          if (us == u_img)
            continue;
          auto [residue, stop] = chain->sift(us * u_img.inverse(), cur + 1);
          if (stop == levels.size() && residue.is_identity())
            continue;

          if (stop == levels.size()) {
            Chain::Level fresh;
            fresh.base_point = residue.first_moved();
            levels.push_back(std::move(fresh));
          }
          for (std::size_t l = cur + 1; l <= stop && l < levels.size(); ++l) {
            levels[l].generators.push_back(residue);
            levels[l].rebuild(degree);
          }
          i = std::min(stop, levels.size() - 1) + 1;
          extended = true;
        }
      }
      if (!extended)
        --i;
    }
    return chain;
  }
};

struct PermGroup::Lazy
{
  std::once_flag once;
  std::shared_ptr<Chain const> chain;
};

PermGroup::PermGroup(std::size_t degree)
: _degree(degree),
  _lazy(std::make_shared<Lazy>())
{}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
: _degree(degree),
  _lazy(std::make_shared<Lazy>())
{
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " differs from group degree " + std::to_string(degree));
    if (!g.is_identity())
      _generators.push_back(std::move(g));
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::shared_ptr<Chain const> chain)
: PermGroup(degree, std::move(generators))
{
  std::call_once(_lazy->once, [&] { _lazy->chain = std::move(chain); });
}

PermGroup::Chain const &PermGroup::chain() const
{
  std::call_once(_lazy->once, [this] {
    _lazy->chain = Chain::build(_degree, _generators, {});
  });
  return *_lazy->chain;
}

GroupOrder PermGroup::order() const
{
  GroupOrder n = 1;
  for (auto const &lev : chain().levels)
    n *= lev.orbit.size();
  return n;
}

bool PermGroup::contains(Permutation const &p) const
{
  if (p.degree() != _degree)
    return false;
  auto [residue, stop] = chain().sift(p, 0);
  return stop == chain().levels.size() && residue.is_identity();
}

std::vector<Vertex> PermGroup::base() const
{
  std::vector<Vertex> b;
  for (auto const &lev : chain().levels)
    b.push_back(lev.base_point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const
{
  std::vector<std::size_t> out;
  for (auto const &lev : chain().levels)
    out.push_back(lev.orbit.size());
  return out;
}

PermGroup PermGroup::stabilizer(std::span<Vertex const> points) const
{
  for (Vertex v : points)
    if (v >= _degree)
      throw InputError("stabilized point out of range");

  std::vector<Vertex> prefix;
  for (Vertex v : points)
    if (std::find(prefix.begin(), prefix.end(), v) == prefix.end())
      prefix.push_back(v);

  // Reuse the strong generators of the existing chain so the rebuild is cheap.
  std::vector<Permutation> strong;
  for (auto const &lev : chain().levels)
    for (auto const &g : lev.generators)
      if (std::find(strong.begin(), strong.end(), g) == strong.end())
        strong.push_back(g);

  auto full = Chain::build(_degree, strong, prefix);
  auto tail = std::make_shared<Chain>();
  tail->degree = _degree;
  std::vector<Permutation> gens;
  if (full->levels.size() > prefix.size()) {
    tail->levels.assign(full->levels.begin() +
                          static_cast<std::ptrdiff_t>(prefix.size()),
                        full->levels.end());
    gens = tail->levels.front().generators;
  }
  return PermGroup(_degree, std::move(gens), std::move(tail));
}

std::vector<Vertex> PermGroup::point_orbit(Vertex v) const
{
  if (v >= _degree)
    throw InputError("point out of range");
  std::vector<bool> seen(_degree, false);
  std::vector<Vertex> orb{v};
  seen[v] = true;
  for (std::size_t k = 0; k < orb.size(); ++k) {
    for (auto const &g : _generators) {
      Vertex y = g[orb[k]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

VertexPartition PermGroup::orbits() const
{
  std::vector<bool> done(_degree, false);
  std::vector<std::vector<Vertex>> cells;
  for (Vertex v = 0; v < _degree; ++v) {
    if (done[v])
      continue;
    auto orb = point_orbit(v);
    for (Vertex w : orb)
      done[w] = true;
    cells.push_back(std::move(orb));
  }
  return VertexPartition(_degree, std::move(cells));
}

bool PermGroup::is_transitive() const
{
  return _degree == 0 || point_orbit(0).size() == _degree;
}

std::vector<Permutation> PermGroup::elements() const
{
  std::vector<Permutation> out{Permutation(_degree)};
  auto const &levels = chain().levels;
  // Every element is u_{k-1} * ... * u_0 with u_l from level l's transversal.
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels[l].transversal.size());
    for (auto const &partial : out)
      for (auto const &u : levels[l].transversal)
        next.push_back(partial * u);
    out.swap(next);
  }
  return out;
}

PermGroup schreier_sims(std::vector<Permutation> generators,
                        std::span<Vertex const> base_prefix)
{
  if (generators.empty())
    throw InputError("schreier_sims needs at least one generator");
  std::size_t degree = generators.front().degree();
  PermGroup g(degree, std::move(generators));
  auto chain = PermGroup::Chain::build(degree, g._generators, base_prefix);
  return PermGroup(degree, g._generators, std::move(chain));
}

namespace
{

struct TupleHash
{
  std::size_t operator()(std::vector<Vertex> const &t) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : t) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

TupleList orbit(PermGroup const &group, std::span<Vertex const> seed)
{
  for (Vertex v : seed)
    if (v >= group.degree())
      throw InputError("tuple entry out of range");

  TupleList out(seed.size());
  std::unordered_set<std::vector<Vertex>, TupleHash> seen;
  seen.emplace(seed.begin(), seed.end());
  out.push_back(seed);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (auto const &g : group.generators()) {
      auto image = g.apply(out[k]);
      if (seen.insert(image).second)
        out.push_back(image);
    }
  }
  return out;
}

std::vector<TupleList> orbits_on(PermGroup const &group,
                                 TupleList const &tuples)
{
  std::unordered_map<std::vector<Vertex>, std::size_t, TupleHash> index;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    index.emplace(std::vector<Vertex>(tuples[i].begin(), tuples[i].end()), i);

  std::vector<bool> done(tuples.size(), false);
  std::vector<TupleList> result;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (done[i])
      continue;
    auto orb = orbit(group, tuples[i]);
    for (std::size_t k = 0; k < orb.size(); ++k) {
      auto it = index.find(std::vector<Vertex>(orb[k].begin(), orb[k].end()));
      if (it == index.end())
        throw InputError("tuple list is not invariant under the group");
      done[it->second] = true;
    }
    result.push_back(std::move(orb));
  }
  return result;
}

std::optional<CayleyLabelling>
regular_subgroup_to_cayley(Graph const &graph, PermGroup const &subgroup)
{
  std::size_t n = graph.order();
  if (subgroup.degree() != n)
    throw InputError("group degree does not match graph order");
  for (auto const &g : subgroup.generators())
    if (!is_automorphism(graph, g))
      throw InputError("generator " + g.to_cycle_string() +
                       " is not an automorphism of the graph");
  if (n == 0 || !subgroup.is_transitive() || subgroup.order() != n)
    return std::nullopt;

  CayleyLabelling out;
  out.base = 0;
  out.elements.assign(n, Permutation());
  out.elements[0] = Permutation(n);
  std::vector<Vertex> queue{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto const &g : subgroup.generators()) {
      Vertex y = g[queue[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.elements[y] = out.elements[queue[k]] * g;
        queue.push_back(y);
      }
    }
  }

  auto nb = graph.neighbors(out.base);
  out.connection_set.assign(nb.begin(), nb.end());
  if (std::binary_search(nb.begin(), nb.end(), out.base))
    throw ConstructionError("connection set contains the identity");
  for (Vertex s : out.connection_set) {
    Vertex inv_label = out.elements[s].inverse()[out.base];
    if (!std::binary_search(nb.begin(), nb.end(), inv_label))
      throw ConstructionError("connection set is not closed under inverses");
  }
  return out;
}

} // namespace geodt

#include "geodt/permutation.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "geodt/errors.hpp"

namespace geodt
{

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Vertex{0});
}

Permutation::Permutation(std::vector<Vertex> images)
: _images(std::move(images))
{
  std::vector<bool> hit(_images.size(), false);
  for (Vertex x : _images) {
    if (x >= _images.size() || hit[x])
      throw InputError("image table is not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::from_cycles(
  std::size_t degree,
  std::initializer_list<std::initializer_list<Vertex>> cycles)
{
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    std::vector<Vertex> c(cycle);
    for (Vertex x : c) {
      if (x >= degree || used[x])
        throw InputError("cycles are not disjoint or out of range");
      used[x] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p._images[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree())
    throw InputError("degree mismatch in permutation product");
  Permutation r;
  r._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    r._images[i] = rhs._images[_images[i]];
  return r;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    r._images[_images[i]] = static_cast<Vertex>(i);
  return r;
}

bool Permutation::is_identity() const
{
  return first_moved() == degree();
}

Vertex Permutation::first_moved() const
{
  for (Vertex i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return i;
  return static_cast<Vertex>(_images.size());
}

std::size_t Permutation::order() const
{
  std::size_t result = 1;
  std::vector<bool> seen(_images.size(), false);
  for (Vertex i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Vertex j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<Vertex> Permutation::apply(std::span<Vertex const> tuple) const
{
  std::vector<Vertex> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    out[i] = _images[tuple[i]];
  return out;
}

std::string Permutation::to_cycle_string() const
{
  std::ostringstream os;
  std::vector<bool> seen(_images.size(), false);
  for (Vertex i = 0; i < _images.size(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    os << '(';
    for (Vertex j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      if (j != i)
        os << ' ';
      os << j;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << p.to_cycle_string();
}

bool is_automorphism(Graph const &graph, Permutation const &p)
{
  if (p.degree() != graph.order())
    return false;
  for (Vertex u = 0; u < graph.order(); ++u) {
    if (graph.degree(u) != graph.degree(p[u]))
      return false;
    for (Vertex v : graph.neighbors(u))
      if (!graph.adjacent(p[u], p[v]))
        return false;
  }
  return true;
}

} // namespace geodt

std::size_t
std::hash<geodt::Permutation>::operator()(geodt::Permutation const &p) const
  noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

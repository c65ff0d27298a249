#include "geodt/field.hpp"

#include <algorithm>

#include "geodt/errors.hpp"

namespace geodt
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace
{

using Poly = std::vector<std::uint32_t>; // coefficients, low degree first

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// remainder of a modulo a monic polynomial m over F_p
Poly poly_mod(Poly a, Poly const &m, std::uint32_t p)
{
  trim(a);
  std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>(
        (a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul(Poly const &a, Poly const &b, std::uint32_t p)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
        (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return r;
}

Poly digits(std::uint64_t k, std::uint32_t p, std::size_t len)
{
  Poly out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return out;
}

bool irreducible(Poly const &f, std::uint32_t p)
{
  std::size_t e = f.size() - 1;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g = digits(k, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t e,
                              std::optional<std::vector<std::uint32_t>> modulus)
{
  if (!is_prime(p))
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not prime");
  if (e == 0)
    throw InputError("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > 65536)
      throw InputError("field order exceeds 65536");
  }

  FiniteField f;
  f._p = p;
  f._e = e;
  f._q = static_cast<std::uint32_t>(q);
  f._pow_p.resize(e);
  for (std::uint32_t i = 0, v = 1; i < e; ++i, v *= p)
    f._pow_p[i] = v;

  if (modulus) {
    auto const &m = *modulus;
    if (m.size() != e + 1 || m.back() != 1)
      throw InputError("modulus must be monic of degree " + std::to_string(e));
    for (auto c : m)
      if (c >= p)
        throw InputError("modulus coefficient out of range");
    if (!irreducible(m, p))
      throw InputError("modulus is reducible over F_" + std::to_string(p));
    f._modulus = m;
  } else {
    for (std::uint64_t k = 0; k < q; ++k) {
      Poly m = digits(k, p, e);
      m.push_back(1);
      if (irreducible(m, p)) {
        f._modulus = std::move(m);
        break;
      }
    }
  }

  auto to_poly = [&](Element a) {
    Poly r = digits(a, p, e);
    trim(r);
    return r;
  };
  auto from_poly = [&](Poly const &a) {
    Element r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      r += a[i] * f._pow_p[i];
    return r;
  };
  auto slow_mul = [&](Element a, Element b) {
    return from_poly(poly_mod(poly_mul(to_poly(a), to_poly(b), p),
                              f._modulus, p));
  };
  auto slow_pow = [&](Element a, std::uint64_t k) {
    Element r = 1;
    while (k) {
      if (k & 1)
        r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };

  auto factors = prime_factors(q - 1);
  Element w = 0;
  for (Element a = 1; a < q && !w; ++a) {
    if (q == 2) {
      w = 1;
      break;
    }
    bool primitive = std::all_of(factors.begin(), factors.end(),
                                 [&](std::uint64_t r) {
                                   return slow_pow(a, (q - 1) / r) != 1;
                                 });
    if (primitive)
      w = a;
  }
  if (!w)
    throw ConstructionError("no primitive element found");
  f._primitive = w;

  f._exp.resize(q - 1);
  f._log.assign(q, 0);
  std::vector<bool> hit(q, false);
  Element x = 1;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    if (hit[x])
      throw ConstructionError("primitive element has order below q-1");
    hit[x] = true;
    f._exp[k] = x;
    f._log[x] = k;
    x = slow_mul(x, w);
  }
  if (x != 1)
    throw ConstructionError("primitive element order is not q-1");

  // Frobenius is a ring homomorphism; sample a few pairs.
  for (Element a = 0; a < q; a += 1 + q / 17) {
    for (Element b = 0; b < q; b += 1 + q / 13) {
      if (f.frobenius(f.add(a, b)) != f.add(f.frobenius(a), f.frobenius(b)) ||
          f.frobenius(f.mul(a, b)) != f.mul(f.frobenius(a), f.frobenius(b)))
        throw ConstructionError("Frobenius map is not a field automorphism");
    }
  }
  return f;
}

FiniteField::Element FiniteField::add(Element a, Element b) const
{
  if (_e == 1)
    return (a + b) % _p;
  Element r = 0;
  for (std::uint32_t i = 0; i < _e; ++i) {
    std::uint32_t da = a % _p, db = b % _p;
    r += ((da + db) % _p) * _pow_p[i];
    a /= _p;
    b /= _p;
  }
  return r;
}

FiniteField::Element FiniteField::neg(Element a) const
{
  Element r = 0;
  for (std::uint32_t i = 0; i < _e; ++i) {
    std::uint32_t d = a % _p;
    r += ((_p - d) % _p) * _pow_p[i];
    a /= _p;
  }
  return r;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const
{
  return add(a, neg(b));
}

FiniteField::Element FiniteField::mul(Element a, Element b) const
{
  if (a == 0 || b == 0)
    return 0;
  return _exp[(_log[a] + _log[b]) % (_q - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const
{
  if (a == 0)
    throw InputError("zero has no inverse");
  return _exp[(_q - 1 - _log[a]) % (_q - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t k) const
{
  if (k == 0)
    return 1;
  if (a == 0)
    return 0;
  return _exp[(_log[a] * (k % (_q - 1))) % (_q - 1)];
}

FiniteField::Element FiniteField::from_int(std::int64_t k) const
{
  auto m = static_cast<std::int64_t>(_p);
  return static_cast<Element>(((k % m) + m) % m);
}

std::vector<std::uint32_t> FiniteField::coefficients(Element a) const
{
  return digits(a, _p, _e);
}

bool FiniteField::is_square(Element a) const
{
  if (a == 0)
    return false;
  return _log[a] % 2 == 0 || _q % 2 == 0;
}

std::vector<FiniteField::Element> FiniteField::squares() const
{
  std::vector<Element> out;
  for (Element a = 1; a < _q; ++a)
    if (is_square(a))
      out.push_back(a);
  return out;
}

std::vector<FiniteField::Element> FiniteField::nonsquares() const
{
  std::vector<Element> out;
  for (Element a = 1; a < _q; ++a)
    if (!is_square(a))
      out.push_back(a);
  return out;
}

std::string FiniteField::format(Element a) const
{
  if (a == 0)
    return "0";
  auto c = coefficients(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0)
      continue;
    if (!out.empty())
      out += '+';
    if (c[i] != 1 || i == 0)
      out += std::to_string(c[i]);
    if (i >= 1)
      out += 'x';
    if (i >= 2)
      out += '^' + std::to_string(i);
  }
  return out;
}

} // namespace geodt

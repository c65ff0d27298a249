#ifndef GEODT_FIELD_HPP
#define GEODT_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geodt
{

bool is_prime(std::uint64_t n);

/// The finite field GF(p^e) built as F_p[x] / (f).
///
/// An element is identified with the rank of its coefficient vector:
/// c_0 + c_1 x + ... + c_{e-1} x^{e-1} has index c_0 + c_1 p + ... .
/// Multiplication goes through discrete log tables of the primitive element.
class FiniteField
{
public:
  using Element = std::uint32_t;

  /// Throws InputError if p is not prime, e is zero, the order exceeds
  /// 2^16, or the supplied modulus is not monic irreducible of degree e.
  /// The default modulus is the lexicographically smallest monic irreducible
  /// polynomial, comparing coefficients from x^{e-1} down to x^0.
  ///
  /// modulus lists coefficients from x^0 up to x^e (so it has e+1 entries
  /// and ends in 1).
  static FiniteField make(std::uint32_t p, std::uint32_t e,
                          std::optional<std::vector<std::uint32_t>> modulus = {});

  std::uint32_t characteristic() const { return _p; }
  std::uint32_t degree() const { return _e; }
  std::uint32_t order() const { return _q; }
  std::vector<std::uint32_t> const &modulus() const { return _modulus; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  /// Smallest element (by index) of multiplicative order q-1.
  Element primitive_element() const { return _primitive; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const; // throws InputError for zero
  Element pow(Element a, std::uint64_t k) const;
  Element frobenius(Element a) const { return pow(a, _p); }

  /// Element from an integer of the prime field.
  Element from_int(std::int64_t k) const;

  std::vector<std::uint32_t> coefficients(Element a) const;

  bool is_square(Element a) const;

  /// Nonzero squares, ascending by index.
  std::vector<Element> squares() const;
  /// Non-squares, ascending by index.
  std::vector<Element> nonsquares() const;

  /// Polynomial notation in x, e.g. "2x+1", "x^2+2", "0".
  std::string format(Element a) const;

private:
  FiniteField() = default;

  std::uint32_t _p = 0, _e = 0, _q = 0;
  std::vector<std::uint32_t> _modulus;
  Element _primitive = 0;
  std::vector<Element> _exp;           // _exp[k] = w^k, k in [0, q-1)
  std::vector<std::uint32_t> _log;     // _log[a] for a != 0
  std::vector<std::uint32_t> _pow_p;   // p^i
};

} // namespace geodt

#endif // GEODT_FIELD_HPP

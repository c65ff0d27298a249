#ifndef GEODT_ERRORS_HPP
#define GEODT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geodt
{

/// Bad arguments: out-of-range vertices, parameters outside a family's
/// domain, malformed partitions.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list or manifest text. Carries the 1-based line number.
class ParseError : public InputError
{
public:
  ParseError(std::size_t line, std::string const &what)
  : InputError("line " + std::to_string(line) + ": " + what),
    _line(line)
  {}

  std::size_t line() const { return _line; }

private:
  std::size_t _line;
};

/// An operation that needs a connected graph (or a generating set that
/// generates the whole group) got something else.
class ConnectivityError : public InputError
{
public:
  using InputError::InputError;
};

/// Refusal to run the automorphism search on graphs above the supported size.
class ScaleError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An internal verification failed during a construction. Signals a bug.
class ConstructionError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// A computed verdict contradicts a proven implication (for instance the
/// girth criterion relating geodesic and arc transitivity). Signals a bug.
class ContradictionError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace geodt

#endif // GEODT_ERRORS_HPP

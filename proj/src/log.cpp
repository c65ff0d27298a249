#include "geodt/log.hpp"

#include <atomic>
#include <iostream>

namespace geodt
{

namespace
{
std::atomic<bool> warnings_enabled{true};
}

void warn(std::string_view message)
{
  if (warnings_enabled.load(std::memory_order_relaxed))
    std::clog << "warning: " << message << '\n';
}

void set_warnings_enabled(bool enabled)
{
  warnings_enabled.store(enabled, std::memory_order_relaxed);
}

} // namespace geodt

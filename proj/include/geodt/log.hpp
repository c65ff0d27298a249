#ifndef GEODT_LOG_HPP
#define GEODT_LOG_HPP

#include <string_view>

namespace geodt
{

/// Writes "warning: <msg>" to stderr unless warnings are silenced.
void warn(std::string_view message);

void set_warnings_enabled(bool enabled);

} // namespace geodt

#endif // GEODT_LOG_HPP

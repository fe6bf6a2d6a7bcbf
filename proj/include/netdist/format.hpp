#pragma once

#include <string>

namespace netdist {

/// printf-style "%.{digits}g".
std::string format_significant(double x, int digits);
/// printf-style "%.{decimals}f".
std::string format_fixed(double x, int decimals);

}  // namespace netdist

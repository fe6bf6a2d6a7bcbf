#include "netdist/format.hpp"

#include <cstdio>

namespace netdist {

std::string format_significant(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x == 0.0 ? 0.0 : x);
    return buf;
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x == 0.0 ? 0.0 : x);
    return buf;
}

}  // namespace netdist

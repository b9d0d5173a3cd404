#pragma once

#include <cstdio>
#include <string>

namespace lcheb {

/// Round-trip-safe float formatting used for all file and stream output.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace lcheb

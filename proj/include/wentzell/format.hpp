#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace wentzell {

// Decimal text with the given number of significant digits ("%.*g").
inline std::string format_number(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

// The double nearest to the value printed with `digits` significant digits.
inline double round_significant(double v, int digits = 12) {
    return std::strtod(format_number(v, digits).c_str(), nullptr);
}

}  // namespace wentzell

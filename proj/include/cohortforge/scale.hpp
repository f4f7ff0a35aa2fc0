#pragma once

#include <string>

#include "cohortforge/errors.hpp"

namespace cohortforge {

/// Unit-conversion factor kept as an exact decimal ratio so that e.g.
/// scale "0.1" is applied as value/10 (exact when representable) instead
/// of value*0.1 (which drags in the binary rounding of 0.1).
struct Scale {
    double num = 1.0;
    double den = 1.0;

    double apply(double v) const { return v * num / den; }

    static Scale parse(const std::string& s) {
        std::string digits;
        long frac = 0;
        bool seen_point = false, seen_digit = false;
        for (char c : s) {
            if (c == '.') {
                if (seen_point) throw ValidationError("ParseError", "bad scale '" + s + "'");
                seen_point = true;
            } else if (c >= '0' && c <= '9') {
                digits.push_back(c);
                if (seen_point) ++frac;
                seen_digit = true;
            } else {
                throw ValidationError("ParseError", "bad scale '" + s + "'");
            }
        }
        if (!seen_digit || digits.size() > 15 || frac > 12)
            throw ValidationError("ParseError", "bad scale '" + s + "'");
        Scale out;
        out.num = static_cast<double>(std::stoll(digits));
        out.den = 1.0;
        for (long i = 0; i < frac; ++i) out.den *= 10.0;
        if (out.num == 0.0) throw ValidationError("ParseError", "scale must be positive: " + s);
        return out;
    }
};

}  // namespace cohortforge

#pragma once

#include "class16/integers.hpp"

namespace class16 {

// Integer 2x2 matrix [[a, b], [c, d]]. Mostly used with det = 1.
struct SL2 {
    Int a, b, c, d;

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    friend SL2 operator*(const SL2& l, const SL2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }

    friend bool operator==(const SL2& l, const SL2& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
    }

    static SL2 identity() { return {1, 0, 0, 1}; }
};

}  // namespace class16

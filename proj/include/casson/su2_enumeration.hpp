#pragma once

// Conjugacy classes of irreducible SU(2) representations of a
// Brieskorn sphere group, enumerated by rotation numbers. Generator i
// has eigenvalue angle pi*l_i/a_i; the central generator maps to
// (-1)^c. Everything is decided in exact rational arithmetic on
// angles measured in multiples of pi.

#include "casson/rational.hpp"
#include "casson/seifert.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace casson {

struct Su2Class {
    std::array<std::int64_t, 3> rotation{}; // l_i, 0 < l_i < a_i
    int central = 0;                        // c: image of h is (-1)^c

    bool operator==(const Su2Class&) const = default;
};

// The triple of classes with angles t_i*pi multiplies to the central
// element (-1)^e iff the adjusted third angle fits strictly inside
// the spherical-triangle window of the first two; boundary cases are
// the reducible triples and are excluded.
inline bool su2_triangle_condition(const Rational& t1, const Rational& t2, const Rational& t3, bool flip) {
    Rational adjusted = flip ? Rational(1) - t3 : t3;
    Rational lo = t1 > t2 ? t1 - t2 : t2 - t1;
    Rational hi = t1 + t2;
    if (Rational(2) - hi < hi) hi = Rational(2) - hi;
    return lo < adjusted && adjusted < hi;
}

inline std::vector<Su2Class> enumerate_su2(const SeifertPresentation& p) {
    std::vector<Su2Class> classes;
    for (int c = 0; c <= 1; ++c) {
        // x_i^{a_i} = h^{-b_i} forces the rotation-number parity.
        bool central_odd = c == 1 && (((p.b0 % 2) + 2) % 2 == 1);
        for (std::int64_t l1 = 1; l1 < p.a[0]; ++l1) {
            if (((l1 - c * p.b[0]) % 2 + 2) % 2 != 0) continue;
            for (std::int64_t l2 = 1; l2 < p.a[1]; ++l2) {
                if (((l2 - c * p.b[1]) % 2 + 2) % 2 != 0) continue;
                for (std::int64_t l3 = 1; l3 < p.a[2]; ++l3) {
                    if (((l3 - c * p.b[2]) % 2 + 2) % 2 != 0) continue;
                    if (su2_triangle_condition(Rational(l1, p.a[0]), Rational(l2, p.a[1]),
                                               Rational(l3, p.a[2]), central_odd))
                        classes.push_back({{l1, l2, l3}, c});
                }
            }
        }
    }
    return classes;
}

} // namespace casson

#pragma once

// Seifert presentation data for Brieskorn spheres Sigma(a1,a2,a3):
// generators x1,x2,x3,h with h central, x_i^{a_i} = h^{-b_i} and
// x1 x2 x3 = h^{-b0}, normalized so the homology-sphere identity
// a*b0 + sum_i (a/a_i)*b_i = 1 holds with a = a1*a2*a3.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace casson {

struct SeifertPresentation {
    std::array<std::int64_t, 3> a{};
    std::int64_t b0 = 0;
    std::array<std::int64_t, 3> b{};

    std::int64_t a_product() const noexcept { return a[0] * a[1] * a[2]; }

    // Value of a*b0 + sum (a/a_i)*b_i; +-1 for a homology sphere.
    std::int64_t euler_numerator() const noexcept {
        std::int64_t s = a_product() * b0;
        for (int i = 0; i < 3; ++i)
            s += (a_product() / a[i]) * b[i];
        return s;
    }
};

namespace detail {

// Smallest positive inverse of x modulo n (gcd(x, n) = 1).
inline std::int64_t inverse_mod(std::int64_t x, std::int64_t n) {
    std::int64_t r0 = n, r1 = ((x % n) + n) % n;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw std::domain_error("inverse_mod: arguments not coprime");
    return ((t0 % n) + n) % n;
}

} // namespace detail

inline SeifertPresentation seifert_presentation(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    std::array<std::int64_t, 3> a{a1, a2, a3};
    for (int i = 0; i < 3; ++i) {
        if (a[i] < 2)
            throw std::invalid_argument("seifert_presentation: multiplicities must be >= 2");
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(a[i], a[j]) != 1)
                throw std::invalid_argument("seifert_presentation: multiplicities must be pairwise coprime");
    }
    SeifertPresentation p;
    p.a = a;
    std::int64_t prod = p.a_product();
    std::int64_t rest = 1;
    for (int i = 0; i < 3; ++i) {
        std::int64_t m = prod / a[i];
        p.b[i] = detail::inverse_mod(m, a[i]);
        rest -= m * p.b[i];
    }
    p.b0 = rest / prod;
    if (p.euler_numerator() != 1)
        throw std::logic_error("seifert_presentation: normalization failed");
    return p;
}

} // namespace casson

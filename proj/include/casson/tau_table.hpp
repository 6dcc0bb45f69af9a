#pragma once

// Closed-form values of tau for the Brieskorn families Sigma(2,p,q),
// p in {3,5,7,9}, as quadratic polynomials in k where q = 2pk +- r.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace casson {

namespace detail {

struct TableRow {
    std::int64_t p, r;   // family Sigma(2, p, 2pk +- r)
    std::int64_t c2, c1, c0; // tau = c2*k^2 +- c1*k + c0
};

inline constexpr TableRow tau_table_rows[] = {
    {3, 1, 3, 1, 0},
    {5, 1, 33, 9, 0},
    {5, 3, 33, 19, 2},
    {7, 1, 138, 26, 0},
    {7, 3, 138, 62, 4},
    {7, 5, 138, 102, 16},
    {9, 1, 390, 58, 0},
    {9, 5, 390, 210, 24},
    {9, 7, 390, 298, 52},
};

} // namespace detail

// tau of Sigma(2,p,q) for the tabulated families; q is matched to a
// unique residue +-r mod 2p and the row polynomial is evaluated.
inline std::int64_t tau_table(std::int64_t p, std::int64_t q) {
    if (q < 2)
        throw std::domain_error("tau_table: q must be >= 2");
    for (const auto& row : detail::tau_table_rows) {
        if (row.p != p) continue;
        std::int64_t m = ((q % (2 * p)) + 2 * p) % (2 * p);
        if (m == row.r) {
            std::int64_t k = (q - row.r) / (2 * p);
            return row.c2 * k * k + row.c1 * k + row.c0;
        }
        if (m == 2 * p - row.r) {
            std::int64_t k = (q + row.r) / (2 * p);
            return row.c2 * k * k - row.c1 * k + row.c0;
        }
    }
    throw std::domain_error("tau_table: Sigma(2," + std::to_string(p) + "," + std::to_string(q) +
                            ") is outside the tabulated families");
}

} // namespace casson

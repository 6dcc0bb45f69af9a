#pragma once

// The integer-valued invariant tau and its relatives, computed from a
// validated moduli snapshot with exact arithmetic throughout. tau
// splits as a signed count of irreducible orbits plus a correction
// assembled from the reducible orbits' extremal spectral-flow data.

#include "casson/moduli.hpp"
#include "casson/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace casson {

struct FlatReducibleRecord {
    Rational rho;
    std::int64_t h1 = 0;
};

inline int sign_pow(std::int64_t exponent) noexcept {
    return (exponent % 2) == 0 ? 1 : -1;
}

// rho invariant of a flat reducible connection from its C^2 spectral
// flow, Chern-Simons value and h^1 dimension.
inline Rational rho(std::int64_t sf_c2, const Rational& cs, std::int64_t h1) {
    return Rational(sf_c2) - Rational(4) * cs + Rational(2) - Rational(h1, 2);
}

// Extremal values of rho over one reducible component, sampled at
// finitely many flat orbits: the limits along nearby irreducibles
// spread each sample by +-h1/2.
inline std::pair<Rational, Rational> alpha_pair(const std::vector<FlatReducibleRecord>& records) {
    if (records.empty())
        throw std::invalid_argument("alpha_pair: empty record list");
    Rational plus = records.front().rho + Rational(records.front().h1, 2);
    Rational minus = records.front().rho - Rational(records.front().h1, 2);
    for (std::size_t i = 1; i < records.size(); ++i) {
        Rational hi = records[i].rho + Rational(records[i].h1, 2);
        Rational lo = records[i].rho - Rational(records[i].h1, 2);
        if (hi > plus) plus = hi;
        if (lo < minus) minus = lo;
    }
    return {plus, minus};
}

// Signed count of irreducible orbits.
inline std::int64_t lambda_prime(const ModuliData& m) {
    require_valid(m, "lambda_prime");
    std::int64_t total = 0;
    for (const auto& o : m.irreducible_orbits)
        total += sign_pow(o.sf_theta);
    return total;
}

// Reducible correction term. Each orbit contributes a quarter of
// sf_from_plus + sf_from_minus + h1_minus, which the mod-4 invariant
// keeps integral.
inline std::int64_t tau_correction(const ModuliData& m) {
    require_valid(m, "tau_correction");
    std::int64_t total = 0;
    for (const auto& o : m.reducible_orbits) {
        const ReducibleComponent* c = m.find_component(o.component);
        std::int64_t quad = o.sf_from_plus + o.sf_from_minus + c->h1_minus;
        total += sign_pow(o.sf_theta) * quad;
    }
    return total / 4;
}

inline std::int64_t tau(const ModuliData& m) {
    require_valid(m, "tau");
    return lambda_prime(m) + tau_correction(m);
}

// Reducible counterpart of lambda_prime, weighted by the rho-style
// combination of the theta lift.
inline Rational lambda_double_prime(const ModuliData& m) {
    require_valid(m, "lambda_double_prime");
    Rational total(0);
    for (const auto& o : m.reducible_orbits) {
        Rational term = Rational(o.sf_hperp_theta) - Rational(4) * o.cs_hat + Rational(2);
        if (sign_pow(o.sf_theta) < 0) term = -term;
        total += term;
    }
    return total / Rational(2);
}

inline Rational lambda_su3(const ModuliData& m) {
    require_valid(m, "lambda_su3");
    return Rational(lambda_prime(m)) + lambda_double_prime(m);
}

// Walker-normalized su(2) count; even on genuine homology-sphere data.
inline std::int64_t lambda_su2(const ModuliData& m) {
    require_valid(m, "lambda_su2");
    std::int64_t total = 0;
    for (const auto& o : m.reducible_orbits)
        total += sign_pow(o.sf_theta);
    return total;
}

// Signed sum of alpha_plus + alpha_minus over reducible orbits, the
// quantity that measures lambda_su3 - tau (times 4). Evaluated purely
// from component alpha data, independent of the lift bookkeeping the
// other invariants read.
inline Rational signed_alpha_sum(const ModuliData& m) {
    require_valid(m, "signed_alpha_sum");
    Rational total(0);
    for (const auto& o : m.reducible_orbits) {
        const ReducibleComponent* c = m.find_component(o.component);
        Rational term = c->alpha_plus + c->alpha_minus;
        if (sign_pow(o.sf_theta) < 0) term = -term;
        total += term;
    }
    return total;
}

} // namespace casson

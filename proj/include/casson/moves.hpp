#pragma once

// Elementary perturbation moves: birth/death of orbit pairs and the
// bifurcation trading a reducible orbit's correction against the
// irreducible count. Every move maps valid data to valid data and
// leaves tau fixed; random_walk chains deterministically seeded moves.

#include "casson/moduli.hpp"
#include "casson/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace casson {

struct Move {
    enum class Kind { irreducible_pair, reducible_pair, bifurcation };
    Kind kind = Kind::irreducible_pair;

    std::int64_t sf = 0;              // irreducible_pair
    std::int64_t component = 0;       // reducible_pair
    ReducibleOrbit orbit_template;    // reducible_pair
    std::size_t orbit_index = 0;      // bifurcation
    int direction = 0;                // bifurcation, +1 or -1
};

// Birth of a canceling pair of irreducible orbits.
inline ModuliData apply_irreducible_pair(const ModuliData& m, std::int64_t sf) {
    require_valid(m, "apply_irreducible_pair");
    ModuliData out = m;
    out.irreducible_orbits.push_back({sf});
    out.irreducible_orbits.push_back({sf + 1});
    return out;
}

// Birth of a canceling pair of reducible orbits on one component. The
// template carries the shared hperp data; the two new orbits differ
// only by 1 in sf_theta.
inline ModuliData apply_reducible_pair(const ModuliData& m, std::int64_t component_id,
                                       const ReducibleOrbit& tmpl) {
    require_valid(m, "apply_reducible_pair");
    if (tmpl.component != component_id)
        throw std::invalid_argument("apply_reducible_pair: template names a different component");
    ModuliData out = m;
    ReducibleOrbit second = tmpl;
    second.sf_theta = tmpl.sf_theta + 1;
    out.reducible_orbits.push_back(tmpl);
    out.reducible_orbits.push_back(second);
    ValidationReport rep = validate(out);
    if (!rep.ok())
        throw std::invalid_argument("apply_reducible_pair: template violates " + rep.errors.front().rule +
                                    " (" + rep.errors.front().detail + ")");
    return out;
}

// Wall-crossing event: one hperp eigenvalue pair crosses zero on a
// reducible orbit, moving both relative flows by 2*direction, while a
// matching irreducible orbit is created (direction -1) or absorbed
// (direction +1). The parity of the paired irreducible orbit is the
// reducible orbit's own, so the two changes to tau cancel.
inline ModuliData apply_bifurcation(const ModuliData& m, std::size_t orbit_index, int direction) {
    require_valid(m, "apply_bifurcation");
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("apply_bifurcation: direction must be +1 or -1");
    if (orbit_index >= m.reducible_orbits.size())
        throw std::out_of_range("apply_bifurcation: orbit index out of range");
    ModuliData out = m;
    ReducibleOrbit& o = out.reducible_orbits[orbit_index];
    o.sf_from_plus += 2 * direction;
    o.sf_from_minus += 2 * direction;
    o.sf_hperp_theta += 2 * direction;
    if (direction == -1) {
        out.irreducible_orbits.push_back({o.sf_theta});
        return out;
    }
    for (std::size_t i = 0; i < out.irreducible_orbits.size(); ++i) {
        if ((out.irreducible_orbits[i].sf_theta - o.sf_theta) % 2 == 0) {
            out.irreducible_orbits.erase(out.irreducible_orbits.begin() + std::ptrdiff_t(i));
            return out;
        }
    }
    throw std::invalid_argument("apply_bifurcation: no irreducible orbit of matching parity to remove");
}

inline ModuliData apply_move(const ModuliData& m, const Move& mv) {
    switch (mv.kind) {
    case Move::Kind::irreducible_pair:
        return apply_irreducible_pair(m, mv.sf);
    case Move::Kind::reducible_pair:
        return apply_reducible_pair(m, mv.component, mv.orbit_template);
    case Move::Kind::bifurcation:
        return apply_bifurcation(m, mv.orbit_index, mv.direction);
    }
    throw std::invalid_argument("apply_move: unknown move kind");
}

// A component can host freshly drawn orbits only if its two lifts are
// compatible: equal Chern-Simons lifts and hperp flows differing by a
// multiple of 4.
inline bool component_accepts_orbits(const ReducibleComponent& c) noexcept {
    std::int64_t d = c.sf_hperp_theta_plus - c.sf_hperp_theta_minus;
    return c.cs_plus == c.cs_minus && ((d % 4) + 4) % 4 == 0;
}

// Deterministic chain of `steps` random moves. Draws that would fail
// (bifurcation absorbing with no parity match) are never emitted; the
// draw falls back to a direction or kind that applies.
inline ModuliData random_walk(const ModuliData& m, std::uint64_t seed, std::size_t steps) {
    require_valid(m, "random_walk");
    ModuliData cur = m;
    Rng rng(seed);

    for (std::size_t step = 0; step < steps; ++step) {
        std::vector<std::size_t> capable;
        for (std::size_t i = 0; i < cur.components.size(); ++i)
            if (component_accepts_orbits(cur.components[i])) capable.push_back(i);

        std::vector<Move::Kind> kinds{Move::Kind::irreducible_pair};
        if (!capable.empty()) kinds.push_back(Move::Kind::reducible_pair);
        if (!cur.reducible_orbits.empty()) kinds.push_back(Move::Kind::bifurcation);

        Move mv;
        mv.kind = kinds[rng.index(kinds.size())];
        switch (mv.kind) {
        case Move::Kind::irreducible_pair:
            mv.sf = rng.range(-12, 12);
            break;
        case Move::Kind::reducible_pair: {
            const ReducibleComponent& c = cur.components[capable[rng.index(capable.size())]];
            std::int64_t fp = 2 * rng.range(-4, 4);
            ReducibleOrbit t;
            t.component = c.id;
            t.sf_theta = rng.range(-12, 12);
            t.sf_from_plus = fp;
            t.sf_from_minus = fp + (c.sf_hperp_theta_plus - c.sf_hperp_theta_minus);
            t.sf_hperp_theta = c.sf_hperp_theta_plus + fp;
            t.cs_hat = c.cs_plus;
            mv.component = c.id;
            mv.orbit_template = t;
            break;
        }
        case Move::Kind::bifurcation: {
            mv.orbit_index = rng.index(cur.reducible_orbits.size());
            std::int64_t s = cur.reducible_orbits[mv.orbit_index].sf_theta;
            bool can_absorb = false;
            for (const auto& io : cur.irreducible_orbits)
                if ((io.sf_theta - s) % 2 == 0) { can_absorb = true; break; }
            mv.direction = can_absorb ? (rng.index(2) == 0 ? 1 : -1) : -1;
            break;
        }
        }
        cur = apply_move(cur, mv);
    }
    return cur;
}

} // namespace casson

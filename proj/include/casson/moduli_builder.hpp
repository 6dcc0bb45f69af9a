#pragma once

// Assembles ModuliData from a solver census. Spectral-flow signs are
// not computable from the census itself, so they come from a
// pluggable oracle keyed by canonical character keys; the default
// (all zeros, uniform positive signs, zero hperp data) encodes the
// vanishing-H^1 regime that holds for Sigma(2,p,q).

#include "casson/invariants.hpp"
#include "casson/moduli.hpp"
#include "casson/rational.hpp"
#include "casson/su3_solver.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace casson {

struct SignOracle {
    // sf_theta per cluster, looked up by canonical character key;
    // clusters without an entry get 0.
    std::map<std::string, std::int64_t> sf_by_character;

    // Optional hperp refinement for reducible clusters: may adjust
    // the component lift fields and the orbit's relative flows and
    // Chern-Simons lift. alpha values are recomputed afterwards.
    std::function<void(const RepCluster&, ReducibleComponent&, ReducibleOrbit&)> refine_hperp;

    std::int64_t sf_for(const std::string& key) const {
        auto it = sf_by_character.find(key);
        return it == sf_by_character.end() ? 0 : it->second;
    }
};

// One irreducible orbit per irreducible cluster, one component plus
// orbit per reducible-nonabelian cluster. Output must pass both the
// structural validation and the flat extremal bounds; an oracle that
// breaks either is rejected.
inline ModuliData moduli_from_enumeration(const Su3Census& census, const SignOracle& oracle = {}) {
    ModuliData m;
    const auto& a = census.presentation.a;
    m.name = "Sigma(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
    m.perturbation_label = "flat";

    std::int64_t next_id = 1;
    for (const auto& cl : census.reducible_nonabelian) {
        std::string key = character_key(cl.character);
        ReducibleComponent c;
        c.id = next_id++;
        ReducibleOrbit o;
        o.component = c.id;
        o.sf_theta = oracle.sf_for(key);
        if (oracle.refine_hperp)
            oracle.refine_hperp(cl, c, o);
        c.alpha_plus = Rational(c.sf_hperp_theta_plus) - Rational(4) * c.cs_plus + Rational(2);
        c.alpha_minus =
            Rational(c.sf_hperp_theta_minus) - Rational(4) * c.cs_minus + Rational(2) - Rational(c.h1_minus);
        m.components.push_back(std::move(c));
        m.reducible_orbits.push_back(std::move(o));
    }
    for (const auto& cl : census.irreducible) {
        IrreducibleOrbit o;
        o.sf_theta = oracle.sf_for(character_key(cl.character));
        m.irreducible_orbits.push_back(o);
    }

    ValidationReport rep = validate(m);
    if (!rep.ok())
        throw std::invalid_argument("moduli_from_enumeration: oracle output violates " +
                                    rep.errors.front().rule + " at " + rep.errors.front().record);
    for (const auto& w : rep.warnings)
        if (w.rule == "extremal_bound_plus" || w.rule == "extremal_bound_minus")
            throw std::invalid_argument("moduli_from_enumeration: flat data violates extremal bound (" +
                                        w.record + ")");
    return m;
}

} // namespace casson

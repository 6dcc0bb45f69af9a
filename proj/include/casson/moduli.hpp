#pragma once

// Data model for a perturbed flat-moduli snapshot of a homology
// 3-sphere: finitely many reducible components (each remembered
// through its two extremal spectral-flow lifts) plus finite sets of
// reducible and irreducible orbits, with structural validation and
// the deck-transformation relabeling of lifts.

#include "casson/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace casson {

struct ReducibleComponent {
    std::int64_t id = 0;
    Rational cs_mod1;               // Chern-Simons value mod 1, in [0, 1)
    Rational alpha_plus;            // extremal rho value at the + lift
    Rational alpha_minus;           // extremal rho value at the - lift
    std::int64_t h1_minus = 0;      // dim H^1 at the - extremum, divisible by 4
    std::int64_t sf_hperp_theta_plus = 0;
    std::int64_t sf_hperp_theta_minus = 0;
    Rational cs_plus;               // integer lift of cs_mod1 chosen at +
    Rational cs_minus;              // integer lift of cs_mod1 chosen at -

    bool operator==(const ReducibleComponent&) const = default;
};

struct ReducibleOrbit {
    std::int64_t component = 0;     // id of the component it lies on
    std::int64_t sf_theta = 0;      // full su(3) spectral flow from theta
    std::int64_t sf_from_plus = 0;  // even
    std::int64_t sf_from_minus = 0; // even
    std::int64_t sf_hperp_theta = 0;
    Rational cs_hat;

    bool operator==(const ReducibleOrbit&) const = default;
};

struct IrreducibleOrbit {
    std::int64_t sf_theta = 0;

    bool operator==(const IrreducibleOrbit&) const = default;
};

struct ModuliData {
    std::string name;
    std::string perturbation_label;
    std::vector<ReducibleComponent> components;
    std::vector<ReducibleOrbit> reducible_orbits;
    std::vector<IrreducibleOrbit> irreducible_orbits;

    const ReducibleComponent* find_component(std::int64_t id) const noexcept {
        for (const auto& c : components)
            if (c.id == id) return &c;
        return nullptr;
    }
    ReducibleComponent* find_component(std::int64_t id) noexcept {
        for (auto& c : components)
            if (c.id == id) return &c;
        return nullptr;
    }

    bool operator==(const ModuliData&) const = default;
};

struct Violation {
    std::string rule;    // short machine-friendly rule name
    std::string record;  // which record tripped it
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> errors;
    std::vector<Violation> warnings;

    bool ok() const noexcept { return errors.empty(); }
};

// Structural validation. Errors break the algebraic laws the
// invariants depend on; warnings flag data that is legal for a
// perturbed snapshot but impossible for unperturbed flat data.
inline ValidationReport validate(const ModuliData& m) {
    ValidationReport rep;
    auto err = [&](std::string rule, std::string record, std::string detail) {
        rep.errors.push_back({std::move(rule), std::move(record), std::move(detail)});
    };
    auto warn = [&](std::string rule, std::string record, std::string detail) {
        rep.warnings.push_back({std::move(rule), std::move(record), std::move(detail)});
    };

    for (std::size_t i = 0; i < m.components.size(); ++i) {
        const auto& c = m.components[i];
        std::string rec = "component id=" + std::to_string(c.id);
        for (std::size_t j = 0; j < i; ++j)
            if (m.components[j].id == c.id)
                err("duplicate_component_id", rec, "id already used");
        if (c.h1_minus < 0)
            err("h1_negative", rec, "h1_minus = " + std::to_string(c.h1_minus));
        else if (c.h1_minus % 4 != 0)
            err("h1_mod4", rec, "h1_minus = " + std::to_string(c.h1_minus) + " not divisible by 4");
        if (c.cs_mod1 < Rational(0) || c.cs_mod1 >= Rational(1))
            err("cs_mod1_range", rec, "cs_mod1 = " + c.cs_mod1.str());
        if ((c.cs_plus - c.cs_mod1).mod1() != Rational(0))
            err("cs_lift_congruence", rec, "cs_plus = " + c.cs_plus.str() + " is not a lift of " + c.cs_mod1.str());
        if ((c.cs_minus - c.cs_mod1).mod1() != Rational(0))
            err("cs_lift_congruence", rec, "cs_minus = " + c.cs_minus.str() + " is not a lift of " + c.cs_mod1.str());
        Rational want_plus = Rational(c.sf_hperp_theta_plus) - Rational(4) * c.cs_plus + Rational(2);
        if (c.alpha_plus != want_plus)
            err("alpha_plus_consistency", rec,
                "alpha_plus = " + c.alpha_plus.str() + ", lift data gives " + want_plus.str());
        Rational want_minus = Rational(c.sf_hperp_theta_minus) - Rational(4) * c.cs_minus + Rational(2) -
                              Rational(c.h1_minus);
        if (c.alpha_minus != want_minus)
            err("alpha_minus_consistency", rec,
                "alpha_minus = " + c.alpha_minus.str() + ", lift data gives " + want_minus.str());
        if (c.alpha_minus > c.alpha_plus)
            err("alpha_order", rec, "alpha_minus exceeds alpha_plus");
    }

    for (std::size_t i = 0; i < m.reducible_orbits.size(); ++i) {
        const auto& o = m.reducible_orbits[i];
        std::string rec = "reducible_orbit[" + std::to_string(i) + "]";
        const ReducibleComponent* c = m.find_component(o.component);
        if (!c) {
            err("unknown_component", rec, "component id " + std::to_string(o.component) + " not present");
            continue;
        }
        if (o.sf_from_plus % 2 != 0)
            err("sf_from_plus_even", rec, "sf_from_plus = " + std::to_string(o.sf_from_plus));
        if (o.sf_from_minus % 2 != 0)
            err("sf_from_minus_even", rec, "sf_from_minus = " + std::to_string(o.sf_from_minus));
        std::int64_t quad = o.sf_from_plus + o.sf_from_minus + c->h1_minus;
        if (((quad % 4) + 4) % 4 != 0)
            err("sf_pair_mod4", rec,
                "sf_from_plus + sf_from_minus + h1_minus = " + std::to_string(quad) + " not divisible by 4");
        if (o.sf_hperp_theta != c->sf_hperp_theta_plus + o.sf_from_plus)
            err("sf_lift_plus", rec, "sf_hperp_theta does not match the + lift");
        if (o.sf_hperp_theta != c->sf_hperp_theta_minus + o.sf_from_minus)
            err("sf_lift_minus", rec, "sf_hperp_theta does not match the - lift");
        if (o.cs_hat != c->cs_plus)
            err("cs_constant_plus", rec, "cs_hat = " + o.cs_hat.str() + " differs from cs_plus = " + c->cs_plus.str());
        if (o.cs_hat != c->cs_minus)
            err("cs_constant_minus", rec, "cs_hat = " + o.cs_hat.str() + " differs from cs_minus = " + c->cs_minus.str());
        if (o.sf_from_plus > 0)
            warn("extremal_bound_plus", rec, "sf_from_plus > 0 cannot occur for flat data");
        if (o.sf_from_minus + c->h1_minus < 0)
            warn("extremal_bound_minus", rec, "sf_from_minus < -h1_minus cannot occur for flat data");
    }

    if (m.reducible_orbits.size() % 2 != 0)
        warn("su2_count_parity", "reducible_orbits",
             "odd orbit count makes the Walker-normalized su(2) count odd");

    return rep;
}

inline void require_valid(const ModuliData& m, const char* what = "moduli data") {
    ValidationReport rep = validate(m);
    if (!rep.ok()) {
        const Violation& v = rep.errors.front();
        throw std::invalid_argument(std::string(what) + ": " + v.rule + " at " + v.record + " (" + v.detail + ")");
    }
}

struct OrbitKey {
    enum class Kind { reducible, irreducible };
    Kind kind = Kind::reducible;
    std::size_t index = 0;
};

// Relabel lifts by d deck transformations. An irreducible orbit only
// carries sf_theta, which moves by 12 per deck step. A reducible orbit
// drags its whole component (and every sibling orbit on it) along so
// the lift-consistency relations survive: the component's hperp flows
// move by 4, its Chern-Simons lifts by 1.
inline ModuliData deck_shift(const ModuliData& m, OrbitKey key, std::int64_t d) {
    ModuliData out = m;
    if (key.kind == OrbitKey::Kind::irreducible) {
        if (key.index >= out.irreducible_orbits.size())
            throw std::out_of_range("deck_shift: irreducible orbit index out of range");
        out.irreducible_orbits[key.index].sf_theta += 12 * d;
        return out;
    }
    if (key.index >= out.reducible_orbits.size())
        throw std::out_of_range("deck_shift: reducible orbit index out of range");
    std::int64_t cid = out.reducible_orbits[key.index].component;
    ReducibleComponent* c = out.find_component(cid);
    if (!c)
        throw std::out_of_range("deck_shift: orbit references unknown component");
    c->sf_hperp_theta_plus += 4 * d;
    c->sf_hperp_theta_minus += 4 * d;
    c->cs_plus += Rational(d);
    c->cs_minus += Rational(d);
    // alpha_plus/alpha_minus are untouched: sf_hperp -4*cs is deck-invariant.
    for (auto& o : out.reducible_orbits) {
        if (o.component != cid) continue;
        o.sf_theta += 12 * d;
        o.sf_hperp_theta += 4 * d;
        o.cs_hat += Rational(d);
    }
    return out;
}

} // namespace casson

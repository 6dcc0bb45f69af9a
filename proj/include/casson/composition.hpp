#pragma once

// Connected-sum composition of reducible strata and the
// orientation-reversal transform, plus the closed-form connected-sum
// formula for tau.

#include "casson/invariants.hpp"
#include "casson/moduli.hpp"
#include "casson/rational.hpp"

#include <cstdint>
#include <string>

namespace casson {

// Composed reducible data for X1 # X2. Nontrivial components pair up
// as C_{i,j}: pairs with the trivial connection on one side copy the
// other side verbatim (and inherit its orbits); doubly nontrivial
// pairs are SO(3)-style product components, which carry no orbits
// since their net signed count vanishes. alpha values add on the
// nose, which fixes the hperp theta-lifts of a product component as
// the sum plus 2 (the spectral shift of the gluing). The composed
// irreducible stratum is not synthesized.
inline ModuliData connected_sum_reducible(const ModuliData& m1, const ModuliData& m2) {
    require_valid(m1, "connected_sum_reducible (first input)");
    require_valid(m2, "connected_sum_reducible (second input)");

    ModuliData out;
    out.name = m1.name + " # " + m2.name;
    out.perturbation_label = m1.perturbation_label + " # " + m2.perturbation_label;

    std::int64_t next_id = 1;
    // i-th entry: new id of C_{i,0} (m1's component i paired with theta).
    std::vector<std::int64_t> left_ids, right_ids;

    for (const auto& c : m1.components) {
        ReducibleComponent nc = c;
        nc.id = next_id++;
        left_ids.push_back(nc.id);
        out.components.push_back(std::move(nc));
    }
    for (const auto& c : m2.components) {
        ReducibleComponent nc = c;
        nc.id = next_id++;
        right_ids.push_back(nc.id);
        out.components.push_back(std::move(nc));
    }
    for (const auto& c1 : m1.components) {
        for (const auto& c2 : m2.components) {
            ReducibleComponent nc;
            nc.id = next_id++;
            nc.cs_mod1 = (c1.cs_mod1 + c2.cs_mod1).mod1();
            nc.alpha_plus = c1.alpha_plus + c2.alpha_plus;
            nc.alpha_minus = c1.alpha_minus + c2.alpha_minus;
            nc.h1_minus = c1.h1_minus + c2.h1_minus;
            nc.sf_hperp_theta_plus = c1.sf_hperp_theta_plus + c2.sf_hperp_theta_plus + 2;
            nc.sf_hperp_theta_minus = c1.sf_hperp_theta_minus + c2.sf_hperp_theta_minus + 2;
            nc.cs_plus = c1.cs_plus + c2.cs_plus;
            nc.cs_minus = c1.cs_minus + c2.cs_minus;
            out.components.push_back(std::move(nc));
        }
    }

    auto copy_orbits = [&](const ModuliData& src, const std::vector<std::int64_t>& ids) {
        for (const auto& o : src.reducible_orbits) {
            ReducibleOrbit no = o;
            for (std::size_t i = 0; i < src.components.size(); ++i) {
                if (src.components[i].id == o.component) {
                    no.component = ids[i];
                    break;
                }
            }
            out.reducible_orbits.push_back(std::move(no));
        }
    };
    copy_orbits(m1, left_ids);
    copy_orbits(m2, right_ids);

    return out;
}

// Exactness of the correction under connected sum: the difference
// lambda_su3 - tau must be additive.
inline bool correction_additivity_check(const ModuliData& m1, const ModuliData& m2) {
    ModuliData sum = connected_sum_reducible(m1, m2);
    Rational lhs = lambda_su3(sum) - Rational(tau(sum));
    Rational rhs = (lambda_su3(m1) - Rational(tau(m1))) + (lambda_su3(m2) - Rational(tau(m2)));
    return lhs == rhs;
}

// Closed form for tau of a connected sum from the parts' tau and
// su(2) counts.
inline std::int64_t tau_connected_sum(std::int64_t tau1, std::int64_t tau2, std::int64_t l1, std::int64_t l2) {
    return tau1 + tau2 + 4 * l1 * l2;
}

// Mirror snapshot. Spectra reflect through zero: reducible theta-flows
// map to -s-7, irreducible to -s-8, hperp flows to -s-4, Chern-Simons
// values negate, and the two extremal lifts swap roles.
inline ModuliData orientation_reverse(const ModuliData& m) {
    require_valid(m, "orientation_reverse");
    ModuliData out;
    out.name = (!m.name.empty() && m.name.front() == '-') ? m.name.substr(1) : "-" + m.name;
    out.perturbation_label = m.perturbation_label;

    for (const auto& c : m.components) {
        ReducibleComponent nc;
        nc.id = c.id;
        nc.cs_mod1 = (-c.cs_mod1).mod1();
        nc.alpha_plus = -c.alpha_minus;
        nc.alpha_minus = -c.alpha_plus;
        nc.h1_minus = c.h1_minus;
        nc.sf_hperp_theta_plus = -c.sf_hperp_theta_minus + c.h1_minus - 4;
        nc.sf_hperp_theta_minus = -c.sf_hperp_theta_plus + c.h1_minus - 4;
        nc.cs_plus = -c.cs_minus;
        nc.cs_minus = -c.cs_plus;
        out.components.push_back(std::move(nc));
    }
    for (const auto& o : m.reducible_orbits) {
        const ReducibleComponent* c = m.find_component(o.component);
        ReducibleOrbit no;
        no.component = o.component;
        no.sf_theta = -o.sf_theta - 7;
        no.sf_from_plus = -o.sf_from_minus - c->h1_minus;
        no.sf_from_minus = -o.sf_from_plus - c->h1_minus;
        no.sf_hperp_theta = -o.sf_hperp_theta - 4;
        no.cs_hat = -o.cs_hat;
        out.reducible_orbits.push_back(std::move(no));
    }
    for (const auto& o : m.irreducible_orbits)
        out.irreducible_orbits.push_back({-o.sf_theta - 8});

    return out;
}

} // namespace casson

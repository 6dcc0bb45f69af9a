#include "casson/rational.hpp"
#include "casson/seifert.hpp"
#include "casson/su3_solver.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

using casson::Matrix3c;
using casson::Rational;
using casson::RotationAssignment;
using casson::SolverConfig;
using casson::seifert_presentation;
using casson::su3_candidates;

namespace {

constexpr double kGolden = 1.6180339887498948482;

SolverConfig quick_config(int restarts) {
    SolverConfig cfg;
    cfg.restarts = restarts;
    cfg.threads = 1;
    return cfg;
}

RotationAssignment scalar_assignment(std::array<std::array<Rational, 3>, 3> turns) {
    RotationAssignment ra;
    ra.turns = turns;
    ra.target_turns = {Rational(0), Rational(0), Rational(0)};
    return ra;
}

} // namespace

TEST_CASE("candidate assignments: counts and structure", "[solver]") {
    auto p235 = seifert_presentation(2, 3, 5);
    auto cands = su3_candidates(p235);
    std::size_t blocks = 0;
    std::set<std::string> keys;
    for (const auto& ra : cands) {
        keys.insert(ra.key());
        if (ra.block) ++blocks;
        // det = 1: the eigenvalue turns of each generator sum to an integer.
        for (const auto& g : ra.turns) {
            Rational s = g[0] + g[1] + g[2];
            REQUIRE(s.is_integer());
        }
    }
    CHECK(cands.size() == 142);
    CHECK(blocks == 2);
    CHECK(keys.size() == cands.size());

    auto p237 = seifert_presentation(2, 3, 7);
    cands = su3_candidates(p237);
    blocks = 0;
    for (const auto& ra : cands)
        if (ra.block) ++blocks;
    CHECK(cands.size() == 243);
    CHECK(blocks == 3);
}

TEST_CASE("assignment keys canonicalize the eigenvalue order", "[solver]") {
    auto a = scalar_assignment({{{Rational(0), Rational(1, 2), Rational(1, 2)},
                                 {Rational(0), Rational(1, 3), Rational(2, 3)},
                                 {Rational(0), Rational(1, 5), Rational(4, 5)}}});
    auto b = a;
    std::swap(b.turns[0][0], b.turns[0][2]);
    std::swap(b.turns[2][0], b.turns[2][1]);
    CHECK(a.key() == b.key());
    auto c = a;
    c.block = true;
    CHECK(a.key() != c.key());
}

TEST_CASE("icosahedral triple: descent finds the 3-dimensional representation", "[solver]") {
    // Eigenvalue classes of the standard icosahedral rotation triple.
    auto ra = scalar_assignment({{{Rational(0), Rational(1, 2), Rational(1, 2)},
                                  {Rational(0), Rational(1, 3), Rational(2, 3)},
                                  {Rational(0), Rational(1, 5), Rational(4, 5)}}});
    casson::SolveDiagnostics diag;
    auto clusters = casson::solve_triple(ra, quick_config(40), &diag);

    REQUIRE(clusters.size() == 1);
    const auto& cl = clusters[0];
    CHECK(cl.commutant_dim == 1);
    CHECK(cl.residual < 1e-18);
    CHECK(cl.multiplicity >= 2);
    CHECK(cl.spread < 1e-6);
    // Characters forced by the finite image: tr x1 = -1, tr x2 = 0,
    // tr x3 = the golden ratio.
    CHECK(std::abs(cl.character[0] - std::complex<double>(-1.0, 0.0)) < 1e-8);
    CHECK(std::abs(cl.character[1]) < 1e-8);
    CHECK(std::abs(cl.character[2] - std::complex<double>(kGolden, 0.0)) < 1e-8);
    CHECK(diag.converged + diag.stalled == diag.restarts);
    CHECK(diag.near_misses == 0);

    // The canonical representative is an exact-to-tolerance unitary
    // triple with diagonal first generator.
    const auto& x = cl.generators;
    for (const auto& xi : x)
        CHECK((xi.adjoint() * xi - Matrix3c::Identity()).norm() < 1e-12);
    CHECK(std::abs(x[0](0, 1)) + std::abs(x[0](0, 2)) + std::abs(x[0](1, 2)) < 1e-9);
    CHECK((x[0] * x[1] * x[2] - Matrix3c::Identity()).norm() < 1e-8);
}

TEST_CASE("block triple: descent finds the su(2)-reducible representation", "[solver]") {
    auto p = seifert_presentation(2, 3, 5);
    auto cands = su3_candidates(p);
    std::vector<RotationAssignment> blocks;
    for (const auto& ra : cands)
        if (ra.block) blocks.push_back(ra);
    REQUIRE(blocks.size() == 2);

    std::vector<double> traces;
    for (const auto& ra : blocks) {
        auto clusters = casson::solve_triple(ra, quick_config(40));
        REQUIRE(clusters.size() == 1);
        CHECK(clusters[0].commutant_dim == 2);
        CHECK(clusters[0].residual < 1e-18);
        traces.push_back(clusters[0].character[2].real());
        CHECK(std::abs(clusters[0].character[2].imag()) < 1e-8);
    }
    // tr x3 of the two classes: (golden ratio) + 1 and (1 - golden) + 1.
    std::sort(traces.begin(), traces.end());
    CHECK(std::abs(traces[0] - (2.0 - kGolden)) < 1e-8);
    CHECK(std::abs(traces[1] - (1.0 + kGolden)) < 1e-8);
}

TEST_CASE("an all-central assignment is solved exactly or stalls far away", "[solver]") {
    auto ra = scalar_assignment({{{Rational(0), Rational(0), Rational(0)},
                                  {Rational(0), Rational(0), Rational(0)},
                                  {Rational(0), Rational(0), Rational(0)}}});
    casson::SolveDiagnostics diag;
    auto clusters = casson::solve_triple(ra, quick_config(5), &diag);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].residual < 1e-24); // rounding noise only, far below the accept threshold
    CHECK(clusters[0].commutant_dim == 9);
    CHECK(std::abs(clusters[0].character[0] - std::complex<double>(3.0, 0.0)) < 1e-12);
    CHECK(diag.converged == diag.restarts);

    // Same classes but an unreachable central target.
    ra.target_turns = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    diag = {};
    clusters = casson::solve_triple(ra, quick_config(5), &diag);
    CHECK(clusters.empty());
    CHECK(diag.stalled == diag.restarts);
    CHECK(diag.near_misses == 0);
    CHECK(diag.best_rejected_residual > 1.0);
}

TEST_CASE("commutant dimension of handcrafted triples", "[solver]") {
    Matrix3c id = Matrix3c::Identity();
    CHECK(casson::detail::commutant_dimension({id, id, id}, 1e-6) == 9);

    Matrix3c d1 = Matrix3c::Zero(), d2 = Matrix3c::Zero(), perm = Matrix3c::Zero();
    d1.diagonal() << 1.0, -1.0, -1.0;
    std::complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
    d2.diagonal() << 1.0, w, std::conj(w);
    perm(0, 1) = 1.0;
    perm(1, 2) = 1.0;
    perm(2, 0) = 1.0;

    CHECK(casson::detail::commutant_dimension({d2, d2, d2}, 1e-6) == 3);
    CHECK(casson::detail::commutant_dimension({d1, id, id}, 1e-6) == 5); // C + M2 block
    CHECK(casson::detail::commutant_dimension({d1, perm, id}, 1e-6) == 1);
    CHECK(casson::detail::commutant_dimension({d1, d2, id}, 1e-6) == 3);
}

TEST_CASE("character keys are stable text", "[solver]") {
    std::array<std::complex<double>, 8> chi{};
    chi[0] = {-1e-9, 1e-9}; // rounds to zero, never "-0"
    chi[1] = {1.5, -2.25};
    std::string key = casson::character_key(chi);
    CHECK(key.find("-0.000000") == std::string::npos);
    CHECK(key.find("1.500000,-2.250000") != std::string::npos);
    CHECK(std::count(key.begin(), key.end(), ',') == 15);
}

TEST_CASE("full census of Sigma(2,3,5) at reduced restarts", "[solver][census]") {
    auto p = seifert_presentation(2, 3, 5);
    SolverConfig cfg = quick_config(12);
    cfg.seed = 7;
    auto census = casson::enumerate_su3(p, cfg);

    CHECK(census.assignment_count == 142);
    CHECK(census.irreducible.size() == 2);
    CHECK(census.reducible_nonabelian.size() == 2);
    CHECK(census.abelian_clusters == 1); // the trivial representation
    CHECK(census.errors.empty());
    CHECK(census.diagnostics.near_misses == 0);
    for (const auto& cl : census.irreducible) {
        CHECK(cl.commutant_dim == 1);
        CHECK(cl.residual < 1e-18);
    }

    // Census content is independent of the seed set.
    SolverConfig cfg2 = cfg;
    cfg2.seed = 1234567;
    auto census2 = casson::enumerate_su3(p, cfg2);
    REQUIRE(census2.irreducible.size() == census.irreducible.size());
    REQUIRE(census2.reducible_nonabelian.size() == census.reducible_nonabelian.size());
    for (std::size_t i = 0; i < census.irreducible.size(); ++i)
        CHECK(casson::character_key(census2.irreducible[i].character) ==
              casson::character_key(census.irreducible[i].character));
    for (std::size_t i = 0; i < census.reducible_nonabelian.size(); ++i)
        CHECK(casson::character_key(census2.reducible_nonabelian[i].character) ==
              casson::character_key(census.reducible_nonabelian[i].character));

    // And of the thread count.
    SolverConfig cfg4 = cfg;
    cfg4.threads = 4;
    auto census4 = casson::enumerate_su3(p, cfg4);
    CHECK(census4.irreducible.size() == census.irreducible.size());
    for (std::size_t i = 0; i < census.irreducible.size(); ++i)
        CHECK(casson::character_key(census4.irreducible[i].character) ==
              casson::character_key(census.irreducible[i].character));
}

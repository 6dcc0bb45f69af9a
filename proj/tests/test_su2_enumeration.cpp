#include "casson/rational.hpp"
#include "casson/seifert.hpp"
#include "casson/su2_enumeration.hpp"

#include <catch2/catch_amalgamated.hpp>

using casson::Rational;
using casson::enumerate_su2;
using casson::seifert_presentation;
using casson::su2_triangle_condition;

TEST_CASE("triangle condition is strict on the window", "[su2]") {
    Rational h(1, 2), t(2, 3);
    CHECK(su2_triangle_condition(h, t, Rational(2, 7), false));
    CHECK(su2_triangle_condition(h, t, Rational(4, 7), false));
    CHECK_FALSE(su2_triangle_condition(h, t, Rational(6, 7), false)); // above min(t1+t2, 2-t1-t2)
    CHECK_FALSE(su2_triangle_condition(h, t, Rational(1, 6), false)); // boundary |t1-t2|
    CHECK_FALSE(su2_triangle_condition(h, t, Rational(5, 6), false)); // boundary
    CHECK_FALSE(su2_triangle_condition(h, t, Rational(1, 12), false));

    // With the central flip the third angle reflects.
    CHECK(su2_triangle_condition(h, Rational(1, 3), Rational(1, 5), true));  // adjusted 4/5
    CHECK_FALSE(su2_triangle_condition(h, Rational(1, 3), Rational(7, 8), true)); // adjusted 1/8
}

TEST_CASE("rotation-number census of small Brieskorn spheres", "[su2]") {
    auto classes = enumerate_su2(seifert_presentation(2, 3, 5));
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].rotation == std::array<std::int64_t, 3>{1, 1, 1});
    CHECK(classes[1].rotation == std::array<std::int64_t, 3>{1, 1, 3});
    CHECK(classes[0].central == 1);
    CHECK(classes[1].central == 1);

    classes = enumerate_su2(seifert_presentation(2, 3, 7));
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].rotation == std::array<std::int64_t, 3>{1, 2, 2});
    CHECK(classes[1].rotation == std::array<std::int64_t, 3>{1, 2, 4});

    classes = enumerate_su2(seifert_presentation(2, 3, 11));
    REQUIRE(classes.size() == 4);
    for (std::int64_t l3 : {2, 4, 6, 8}) {
        bool found = false;
        for (const auto& cl : classes)
            found = found || cl.rotation == std::array<std::int64_t, 3>{1, 1, l3};
        INFO("l3 " << l3);
        CHECK(found);
    }
}

TEST_CASE("enumerated classes satisfy range and parity constraints", "[su2][property]") {
    const std::int64_t triples[][3] = {{2, 3, 5}, {2, 3, 7}, {2, 5, 7}, {3, 4, 5}, {2, 5, 9}, {2, 7, 9}};
    for (auto [a1, a2, a3] : triples) {
        auto p = seifert_presentation(a1, a2, a3);
        INFO("Sigma(" << a1 << "," << a2 << "," << a3 << ")");
        for (const auto& cl : enumerate_su2(p)) {
            for (int i = 0; i < 3; ++i) {
                REQUIRE(cl.rotation[i] > 0);
                REQUIRE(cl.rotation[i] < p.a[i]);
                REQUIRE(((cl.rotation[i] - cl.central * p.b[i]) % 2 + 2) % 2 == 0);
            }
        }
    }
}

TEST_CASE("census is exhaustive over the residue-compatible grid", "[su2][property]") {
    auto p = seifert_presentation(2, 3, 11);
    auto classes = enumerate_su2(p);
    std::size_t hits = 0;
    for (int c = 0; c <= 1; ++c) {
        bool flip = c == 1 && ((p.b0 % 2) + 2) % 2 == 1;
        for (std::int64_t l1 = 1; l1 < p.a[0]; ++l1)
            for (std::int64_t l2 = 1; l2 < p.a[1]; ++l2)
                for (std::int64_t l3 = 1; l3 < p.a[2]; ++l3) {
                    bool parity_ok = ((l1 - c * p.b[0]) % 2 + 2) % 2 == 0 &&
                                     ((l2 - c * p.b[1]) % 2 + 2) % 2 == 0 &&
                                     ((l3 - c * p.b[2]) % 2 + 2) % 2 == 0;
                    bool window = su2_triangle_condition(Rational(l1, p.a[0]), Rational(l2, p.a[1]),
                                                         Rational(l3, p.a[2]), flip);
                    bool listed = false;
                    for (const auto& cl : classes)
                        listed = listed ||
                                 (cl.rotation == std::array<std::int64_t, 3>{l1, l2, l3} && cl.central == c);
                    REQUIRE(listed == (parity_ok && window));
                    if (listed) ++hits;
                }
    }
    CHECK(hits == classes.size());
}

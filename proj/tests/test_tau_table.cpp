#include "casson/tau_table.hpp"

#include <catch2/catch_amalgamated.hpp>

using casson::tau_table;

TEST_CASE("closed-form tau values on the tabulated families", "[table]") {
    // p = 3.
    CHECK(tau_table(3, 5) == 2);
    CHECK(tau_table(3, 7) == 4);
    CHECK(tau_table(3, 11) == 10);
    CHECK(tau_table(3, 13) == 14);
    CHECK(tau_table(3, 17) == 24);
    CHECK(tau_table(3, 19) == 30);
    // p = 5.
    CHECK(tau_table(5, 7) == 16);
    CHECK(tau_table(5, 9) == 24);
    CHECK(tau_table(5, 11) == 42);
    CHECK(tau_table(5, 13) == 54);
    // p = 7.
    CHECK(tau_table(7, 9) == 52);
    CHECK(tau_table(7, 11) == 80);
    CHECK(tau_table(7, 13) == 112);
    CHECK(tau_table(7, 15) == 164);
    CHECK(tau_table(7, 17) == 204);
    CHECK(tau_table(7, 19) == 256);
    // p = 9.
    CHECK(tau_table(9, 11) == 144);
    CHECK(tau_table(9, 13) == 204);
    CHECK(tau_table(9, 17) == 332);
    CHECK(tau_table(9, 19) == 448);
    CHECK(tau_table(9, 23) == 624);
    CHECK(tau_table(9, 25) == 740);
}

TEST_CASE("the same sphere read through two families agrees", "[table]") {
    // Sigma(2,p,q) only depends on the multiplicity set.
    CHECK(tau_table(5, 3) == tau_table(3, 5));
    CHECK(tau_table(7, 3) == tau_table(3, 7));
    CHECK(tau_table(7, 5) == tau_table(5, 7));
    CHECK(tau_table(9, 5) == tau_table(5, 9));
    CHECK(tau_table(9, 7) == tau_table(7, 9));
}

TEST_CASE("values outside the families are refused", "[table]") {
    CHECK_THROWS_AS(tau_table(3, 1), std::domain_error);   // q < 2
    CHECK_THROWS_AS(tau_table(3, 9), std::domain_error);   // gcd(3, 9) > 1
    CHECK_THROWS_AS(tau_table(3, 4), std::domain_error);   // even q
    CHECK_THROWS_AS(tau_table(5, 15), std::domain_error);
    CHECK_THROWS_AS(tau_table(11, 13), std::domain_error); // p not tabulated
    CHECK_THROWS_AS(tau_table(9, 15), std::domain_error);
}

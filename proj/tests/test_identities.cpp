#include "doctest.h"

#include "braidties/identities.hpp"

#include <random>

using namespace braidties;

TEST_CASE("structural identities") {
    std::mt19937_64 rng(1);
    for (int n = 2; n <= 3; ++n) {
        const auto rep = structural_identities(n, rng, true, 0);
        CHECK(rep.pass);
        for (const auto& c : rep.checks) {
            INFO(c.name);
            CHECK(c.failures == 0);
            CHECK(c.instances > 0);
        }
    }
    CHECK(structural_identities(4, rng, false, 5).pass);
}

TEST_CASE("form identities and Gram matrix") {
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 3; ++n) CHECK(form_identities(n, rng, 30).pass);
    const std::vector<std::size_t> expect{1, 4, 30};
    for (int n = 1; n <= 3; ++n) {
        const auto g = gram_matrix(n);
        const auto rows = g.specialized_rows(Rational(1));
        REQUIRE(rows.has_value());
        CHECK(rows->size() == expect[static_cast<std::size_t>(n - 1)]);
        CHECK(rank_of(*rows) == expect[static_cast<std::size_t>(n - 1)]);
    }
}

#include <doctest.h>

#include "property_sweep.hpp"

TEST_SUITE("properties")
{
    TEST_CASE("structural properties on 200 random lifted pairs")
    {
        const sweep::Tally t = sweep::run(200, 424242);
        CHECK(t.pairs == 200);
        CHECK(t.shift_failures == 0);
        CHECK(t.involution_failures == 0);
        CHECK(t.skew_failures == 0);
        CHECK(t.no_reddening == 0);
        CHECK(t.coherence_failures == 0);
        CHECK(t.prefixes > 200);
    }

    TEST_CASE("random pairs are symplectic and reproducible")
    {
        const auto a = sweep::random_pairs(20, 9), b = sweep::random_pairs(20, 9);
        CHECK(a == b);
        for (const auto& p : a) CHECK(ysys::check_symplectic(p));
    }
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "ysys/errors.hpp"
#include "ysys/presets.hpp"
#include "ysys/seed.hpp"
#include "ysys/ysystem.hpp"

using namespace ysys;

namespace {

BMat a2()
{
    BMat b(2, 2, 0);
    b(0, 1) = 1;
    b(1, 0) = -1;
    return b;
}

BMat random_skew(std::mt19937_64& rng, std::size_t n)
{
    BMat b(n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            b(i, j) = static_cast<std::int64_t>(rng() % 5) - 2;
            b(j, i) = -b(i, j);
        }
    return b;
}

} // namespace

TEST_SUITE("seed")
{
    TEST_CASE("A2 mutation in the tropical semifield")
    {
        const auto s = initial_tropical(a2());
        const auto t = mutate(s, 0);
        CHECK(t.b(0, 1) == -1);
        CHECK(t.y[0].exponents == std::vector<std::int64_t>{-1, 0});
        // y2 * y1^{[1]+} * (1 + y1)^{-1} = y2 * y1 / 1 in Trop.
        CHECK(t.y[1].exponents == std::vector<std::int64_t>{1, 1});
        const auto u = mutate(s, 1);
        // B_21 = -1: y1 * (1 + y2)^{1} = y1 in Trop.
        CHECK(u.y[0].exponents == std::vector<std::int64_t>{1, 0});
        CHECK(u.y[1].exponents == std::vector<std::int64_t>{0, -1});
    }

    TEST_CASE("mutation is an involution on random seeds")
    {
        std::mt19937_64 rng(50);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 2 + rng() % 4;
            const BMat b = random_skew(rng, n);
            const int k = static_cast<int>(rng() % n);
            auto tr = initial_tropical(b);
            for (int w = 0; w < 3; ++w) tr = mutate(tr, static_cast<int>(rng() % n));
            const auto back = mutate(mutate(tr, k), k);
            CHECK(back.b == tr.b);
            CHECK(back.y == tr.y);
            CHECK(mutate(tr, k).y[k] == inv(tr.y[k]));

            std::vector<PosRat> vals;
            for (std::size_t v = 0; v < n; ++v) vals.push_back(PosRat(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 7)));
            const YSeed<PosRat> ps{b, vals};
            CHECK(mutate(mutate(ps, k), k).y == ps.y);

            auto table = std::make_shared<FactorTable>(static_cast<int>(n));
            const auto us = initial_universal(b, table);
            const auto uu = mutate(mutate(us, k), k);
            for (std::size_t v = 0; v < n; ++v) CHECK(ratfun_equal(uu.y[v], us.y[v]));
        }
    }

    TEST_CASE("skew-symmetry is preserved")
    {
        std::mt19937_64 rng(51);
        for (int trial = 0; trial < 50; ++trial) {
            BMat b = random_skew(rng, 5);
            for (int s = 0; s < 10; ++s) {
                b = mutate_b(b, static_cast<int>(rng() % 5));
                CHECK_NOTHROW(check_skew(b));
            }
        }
        BMat bad(2, 2, 0);
        bad(0, 1) = 1;
        CHECK_THROWS_AS(check_skew(bad), InternalError);
    }

    TEST_CASE("commuting mutations: every order of case 2's front")
    {
        const QuiverData q = build_quiver(row_pair(2));
        // Largest set of pairwise non-adjacent vertices.
        std::vector<int> set;
        const int n = static_cast<int>(q.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> cand;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (!(mask >> v & 1u)) continue;
                for (int w : cand) ok = ok && q.b(v, w) == 0;
                cand.push_back(v);
            }
            if (ok && cand.size() > set.size()) set = cand;
        }
        REQUIRE(set.size() >= 3);
        auto table = std::make_shared<FactorTable>(static_cast<int>(q.size()));
        const auto start = initial_universal(q.b, table);
        const auto ref = mutate_set(start, set);
        const auto tref = mutate_set(initial_tropical(q.b), set);
        std::sort(set.begin(), set.end());
        int orders = 0;
        do {
            auto s = start;
            auto t = initial_tropical(q.b);
            for (int k : set) {
                s = mutate(s, k);
                t = mutate(t, k);
            }
            CHECK(s.b == ref.b);
            CHECK(t.y == tref.y);
            for (std::size_t v = 0; v < q.size(); ++v) CHECK(ratfun_equal(s.y[v], ref.y[v]));
            ++orders;
        } while (std::next_permutation(set.begin(), set.end()));
        CHECK(orders >= 6);
    }

    TEST_CASE("mutation sets")
    {
        const auto s = initial_tropical(a2());
        CHECK(mutate_set(s, {1}).y == mutate(s, 1).y);
        CHECK_THROWS_AS(mutate_set(s, {0, 1}), ValidationError);
        CHECK_THROWS_AS(mutate(s, 2), ValidationError);
    }

    TEST_CASE("permutations")
    {
        const QuiverData q = build_quiver(row_pair(5));
        const auto s = initial_tropical(q.b);
        std::vector<int> id(q.size());
        for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<int>(v);
        CHECK(apply_permutation(s, id).y == s.y);
        const auto back = apply_permutation(apply_permutation(s, q.nu), q.nu_inv);
        CHECK(back.y == s.y);
        CHECK(back.b == s.b);
        CHECK_THROWS_AS(apply_permutation(s, std::vector<int>(q.size(), 0)), ValidationError);
    }

    TEST_CASE("C-matrices")
    {
        const QuiverData q = build_quiver(row_pair(1));
        const auto s = initial_tropical(q.b);
        CHECK(c_matrix(s) == IntMatrix::identity(q.size(), 1, 0));
        const int k = q.front[0];
        const IntMatrix c = c_matrix(mutate(s, k));
        for (std::size_t w = 0; w < q.size(); ++w) CHECK(c(k, w) == (static_cast<int>(w) == k ? -1 : 0));
        CHECK(rows_sign_coherent(c));
        IntMatrix mixed(1, 2, 0);
        mixed(0, 0) = 1;
        mixed(0, 1) = -1;
        CHECK_FALSE(rows_sign_coherent(mixed));
    }

    TEST_CASE("arrow list and JSON dump")
    {
        const QuiverData q = build_quiver(row_pair(1));
        CHECK(arrow_list(q.b, q.names) == "(1,0) -> (2,1) x1\n(2,0) -> (1,1) x1\n");
        const auto j = b_to_json(q.b, q.names);
        CHECK(j["vertices"].size() == 4);
    }
}

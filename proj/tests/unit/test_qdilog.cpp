#include <doctest.h>

#include <random>

#include "goldens.hpp"
#include "ysys/errors.hpp"
#include "ysys/presets.hpp"
#include "ysys/qdilog.hpp"

using namespace ysys;

namespace {

std::shared_ptr<const SkewForm> form_of(IntMatrix m) { return std::make_shared<const SkewForm>(std::move(m)); }

IntMatrix skew2(std::int64_t b)
{
    IntMatrix m(2, 2, 0);
    m(0, 1) = b;
    m(1, 0) = -b;
    return m;
}

TPoly t_poly(std::initializer_list<long> coeffs, int low = 0)
{
    TPoly p;
    int e = low;
    for (long c : coeffs) p += TPoly::monomial(e++, c);
    return p;
}

} // namespace

TEST_SUITE("qdilog")
{
    TEST_CASE("Laurent polynomials in t")
    {
        const TPoly a = t_poly({1, -1}), b = t_poly({1, 1});
        CHECK(a * b == t_poly({1, 0, -1}));
        CHECK((a + (-a)).is_zero());
        CHECK(a.shifted(-3).low() == -3);
        CHECK(universal_denominator(2) == t_poly({1, 0, -1}) * t_poly({1, 0, -1}) * t_poly({-1, 0, 0, 0, 1}));
    }

    TEST_CASE("the dilogarithm satisfies its functional equation")
    {
        // Rank one: Psi(q y) = (1 + t y) Psi(y) with y^k carrying N_k / Den_k.
        const int D = 7;
        const auto f = form_of(IntMatrix(1, 1, 0));
        const TorusSeries psi = dilog_factor(f, {1}, 1, D);
        for (int k = 1; k <= D; ++k) {
            const TPoly nk = psi.numerators().at({k});
            const TPoly nk1 = psi.numerators().at({k - 1});
            // Compare q^k N_k / Den_k with N_k / Den_k + t N_{k-1} / Den_{k-1}.
            const TPoly ratio = universal_denominator(k);
            const TPoly lhs = nk.shifted(2 * k) * universal_denominator(k - 1);
            const TPoly rhs = nk * universal_denominator(k - 1) + nk1.shifted(1) * ratio;
            CHECK(lhs == rhs);
        }
        // Lowest coefficient: t / (t^2 - 1).
        CHECK(psi.numerators().at({1}) == TPoly::monomial(1));
    }

    TEST_CASE("inverse and commuting factors")
    {
        const int D = 6;
        const auto f = form_of(skew2(1));
        const TorusSeries one = TorusSeries::one(f, D);
        for (auto beta : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
            CHECK(dilog_factor(f, beta, 1, D) * dilog_factor(f, beta, -1, D) == one);
            CHECK(dilog_factor(f, beta, -1, D) * dilog_factor(f, beta, 1, D) == one);
        }
        const auto g = form_of(skew2(0));
        CHECK(dilog_factor(g, {1, 0}, 1, D) * dilog_factor(g, {0, 1}, 1, D) ==
              dilog_factor(g, {0, 1}, 1, D) * dilog_factor(g, {1, 0}, 1, D));
        CHECK_FALSE(dilog_factor(f, {1, 0}, 1, D) * dilog_factor(f, {0, 1}, 1, D) ==
                    dilog_factor(f, {0, 1}, 1, D) * dilog_factor(f, {1, 0}, 1, D));
        CHECK_THROWS_AS(dilog_factor(f, {1, -1}, 1, D), ValidationError);
        CHECK_THROWS_AS(dilog_factor(f, {0, 0}, 1, D), ValidationError);
    }

    TEST_CASE("torus multiplication rules on random monomials")
    {
        std::mt19937_64 rng(8);
        IntMatrix m(3, 3, 0);
        m(0, 1) = 2;
        m(1, 0) = -2;
        m(0, 2) = -1;
        m(2, 0) = 1;
        m(1, 2) = 3;
        m(2, 1) = -3;
        const auto f = form_of(m);
        const int D = 9;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::vector<int>> v(3, std::vector<int>(3));
            for (auto& x : v)
                for (auto& c : x) c = static_cast<int>(rng() % 2);
            const auto X = [&](int k) { return TorusSeries::monomial(f, D, v[k]); };
            CHECK((X(0) * X(1)) * X(2) == X(0) * (X(1) * X(2)));
            // x^a x^b = q^{<a,b>} x^b x^a
            const auto w = static_cast<int>((*f)(v[0], v[1]));
            const TorusSeries lhs = X(0) * X(1);
            const TorusSeries rhs = TorusSeries::monomial(f, D, v[1], TPoly::monomial(2 * w)) * X(0);
            CHECK(lhs == rhs);
        }
        const auto s = dilog_factor(f, {1, 0, 0}, 1, 4), t = dilog_factor(f, {0, 1, 1}, -1, 4),
                   u = dilog_factor(f, {1, 1, 0}, 1, 4);
        CHECK((s * t) * u == s * (t * u));
    }

    TEST_CASE("empty sequence gives the unit")
    {
        const QuiverData q = build_quiver(row_pair(1));
        const TorusSeries e = dt_invariant(q, 0, 5);
        CHECK(e.numerators().size() == 1);
    }

    TEST_CASE("pentagon identity at degree 8")
    {
        const IdentityResult r = identity_check(row_pair(1), 8);
        CHECK(r.h_plus == 3);
        CHECK(r.h_minus == 2);
        CHECK(r.holds);
    }

    TEST_CASE("identities for rows 4, 5, 6 at degree 6 and rows 2, 3 at degree 4")
    {
        for (int id : {4, 5, 6}) CHECK(identity_check(row_pair(id), 6).holds);
        for (int id : {2, 3}) CHECK(identity_check(row_pair(id), 4).holds);
        for (int id = 1; id <= 6; ++id) CHECK(identity_check(opposite(row_pair(id)), 4).holds);
    }

    TEST_CASE("reordering a front set does not change the product")
    {
        for (int id = 1; id <= 6; ++id) {
            const QuiverData q = build_quiver(row_pair(id));
            DtOptions rev;
            rev.reverse_front = true;
            const int h = golden::rows[id - 1].h_plus;
            CHECK(dt_invariant(q, h, 4) == dt_invariant(q, h, 4, rev));
        }
    }

    TEST_CASE("a truncated product that stops early is rejected")
    {
        const QuiverData q = build_quiver(row_pair(1));
        CHECK_THROWS_AS(dt_invariant(q, 2, 4), PropertyError);
        // The wrong side of the noncommutative product breaks the identity.
        const TorusSeries a = dt_invariant(q, 3, 6), b = dt_invariant(q, -2, 6);
        CHECK(a == b);
        const auto f = a.form();
        const TorusSeries x = dilog_factor(f, {1, 0, 0, 0}, 1, 6), y = dilog_factor(f, {0, 0, 0, 1}, 1, 6);
        CHECK_FALSE(x * y == y * x);
    }
}

#include <doctest.h>

#include <random>

#include "ysys/classifier.hpp"
#include "ysys/errors.hpp"
#include "ysys/nahm.hpp"
#include "ysys/presets.hpp"

using namespace ysys;

namespace {

// Partitions of k into parts of size at most m, by brute recursion.
long partitions(int k, int m)
{
    if (k == 0) return 1;
    if (m == 0) return 0;
    long s = 0;
    for (int part = std::min(k, m); part >= 1; --part) s += partitions(k - part, part);
    return s;
}

} // namespace

TEST_SUITE("nahm")
{
    TEST_CASE("inverse q-Pochhammer symbols")
    {
        const QSeries p0 = pochhammer_inverse(0, 10);
        CHECK(p0.terms().size() == 1);
        CHECK(p0.coefficient(0) == 1);
        const QSeries p1 = pochhammer_inverse(1, 10);
        for (int k = 0; k < 10; ++k) CHECK(p1.coefficient(k) == 1);
        for (int m = 2; m <= 4; ++m) {
            const QSeries pm = pochhammer_inverse(m, 25);
            for (int k = 0; k < 25; ++k) CHECK(pm.coefficient(k) == partitions(k, m));
        }
    }

    TEST_CASE("series arithmetic truncates consistently")
    {
        QSeries a(mpq_class(5, 2)), b(3);
        a.add_term(mpq_class(1, 2), 1);
        a.add_term(0, 1);
        b.add_term(mpq_class(1, 3), 2);
        b.add_term(2, -1);
        const QSeries c = a * b;
        CHECK(c.order() == mpq_class(5, 2));
        CHECK(c.coefficient(mpq_class(5, 6)) == 2);
        CHECK(c.coefficient(2) == -1);
        CHECK(c.coefficient(mpq_class(5, 2)) == 0);
        CHECK(c.denominator() == 6);
    }

    TEST_CASE("compute K on examples")
    {
        const NahmMatrix k1 = compute_K(row_pair(1));
        CHECK(to_string(k1.K) == "[[4/3,2/3],[2/3,4/3]]");
        CHECK(k1.symmetric);
        CHECK(k1.positive_definite);
        CHECK(to_string(compute_K(opposite(row_pair(5))).K) == "[[2,-1],[-1,1]]");
        MatrixPair same = row_pair(3);
        same.minus = same.plus;
        CHECK(compute_K(same).K == QMat::identity(2, mpq_class(1), mpq_class(0)));
        const MatrixPair singular = ydatum_to_matrices(make_ydatum({"1"}, {2}, {{"1", "1", 1, 2}}));
        CHECK_THROWS_AS(compute_K(singular), ValidationError);
    }

    TEST_CASE("reference K matrices")
    {
        for (const auto& row : table2_rows()) {
            CAPTURE(row.name);
            MatrixPair p = row_pair(row.id);
            if (row.opposite) p = opposite(p);
            const NahmMatrix nk = compute_K(p);
            CHECK(nk.K == parse_qmat(row.K));
            CHECK(nk.positive_definite);
            CHECK(compute_K(opposite(p)).K == qmat_inverse(nk.K));
        }
        CHECK(compute_K(row_pair(3)).K == compute_K(row_pair(6)).K);
        const auto rep = table2_report(4);
        CHECK(rep.size() == 12);
        for (const auto& e : rep) CHECK(e["K_matches_reference"].get<bool>());
    }

    TEST_CASE("K is symmetric for lifted symplectic pairs")
    {
        std::mt19937_64 rng(77);
        int count = 0;
        while (count < 100) {
            const auto& fams = lift_families();
            const auto& f = fams[rng() % fams.size()];
            const int r = 1 + static_cast<int>(rng() % 6);
            const int a = 1 + static_cast<int>(rng() % (2 * r));
            auto p = f.make(r, a);
            if (!p) continue;
            if (rng() % 2) p = permute_indices(*p, {1, 0});
            const NahmMatrix nk = compute_K(*p);
            CHECK(nk.symmetric);
            CHECK(nk.positive_definite);
            CHECK(compute_K(opposite(*p)).K == qmat_inverse(nk.K));
            ++count;
        }
    }

    TEST_CASE("Rogers-Ramanujan identities to q^30")
    {
        const QMat A(1, 1, mpq_class(2));
        for (int b = 0; b <= 1; ++b)
            for (auto strategy : {NahmStrategy::box, NahmStrategy::shells}) {
                NahmOptions o;
                o.strategy = strategy;
                const QSeries s = nahm_expand(A, {mpq_class(b)}, 0, 31, o);
                const QSeries prod = rogers_ramanujan_product(b == 0 ? 1 : 2, 31);
                for (int k = 0; k <= 30; ++k) CHECK(s.coefficient(k) == prod.coefficient(k));
                CHECK(s == prod);
            }
    }

    TEST_CASE("identity K against a direct double sum")
    {
        const QMat I = QMat::identity(2, mpq_class(1), mpq_class(0));
        const QSeries s = nahm_expand(I, {0, 0}, 0, 3);
        // Oracle on the half-integer grid: sum over n1, n2 of q^{(n1^2+n2^2)/2} / (q)_{n1} (q)_{n2}.
        const int grid = 6; // exponents k/2 < 3
        std::vector<long> c(grid, 0);
        for (int n1 = 0; n1 < 4; ++n1)
            for (int n2 = 0; n2 < 4; ++n2) {
                const int base = n1 * n1 + n2 * n2;
                if (base >= grid) continue;
                // 1/(q)_{n1}(q)_{n2} has integer exponents: step 2 on the half grid.
                for (int k = 0; 2 * k + base < grid; ++k) {
                    long ways = 0;
                    for (int j = 0; j <= k; ++j) ways += partitions(j, n1) * partitions(k - j, n2);
                    c[2 * k + base] += ways;
                }
            }
        for (int k = 0; k < grid; ++k) CHECK(s.coefficient(mpq_class(k, 2)) == c[k]);
        CHECK(s.coefficient(mpq_class(1, 2)) == 2);
    }

    TEST_CASE("both enumeration strategies agree on every reference K")
    {
        for (const auto& row : table2_rows()) {
            CAPTURE(row.name);
            const QMat K = parse_qmat(row.K);
            const mpq_class C = -row.minus_24C / 24;
            NahmOptions box, shells;
            shells.strategy = NahmStrategy::shells;
            const QSeries a = nahm_expand(K, {0, 0}, C, 10, box);
            const QSeries b = nahm_expand(K, {0, 0}, C, 10, shells);
            CHECK(a == b);
            CHECK(a.coefficient(C) == 1);
        }
    }

    TEST_CASE("input checks")
    {
        QMat notpd(2, 2, mpq_class(1));
        CHECK_THROWS_AS(nahm_expand(notpd, {0, 0}, 0, 5), PropertyError);
        NahmOptions tight;
        tight.n_max = 2;
        CHECK_THROWS_AS(nahm_expand(QMat(1, 1, mpq_class(2)), {0}, 0, 40, tight), ResourceError);
        tight.strategy = NahmStrategy::shells;
        CHECK_THROWS_AS(nahm_expand(QMat(1, 1, mpq_class(2)), {0}, 0, 40, tight), ResourceError);
        CHECK_THROWS_AS(nahm_expand(QMat(1, 1, mpq_class(2)), {0, 0}, 0, 5), ValidationError);
    }
}

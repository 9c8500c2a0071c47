#include <doctest.h>

#include <algorithm>

#include "goldens.hpp"
#include "ysys/classifier.hpp"
#include "ysys/presets.hpp"
#include "ysys/slices.hpp"
#include "ysys/ysystem.hpp"

using namespace ysys;

namespace {

IntMatrix m2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    IntMatrix m(2, 2, 0);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

bool contains_orbit(const std::vector<CandidatePair1>& v, const CandidatePair1& c)
{
    const CandidatePair1 o = orient(c);
    return std::find(v.begin(), v.end(), o) != v.end();
}

const LiftFamily& family(int id)
{
    for (const auto& f : lift_families())
        if (f.id == id) return f;
    throw std::logic_error("no family");
}

} // namespace

TEST_SUITE("classifier")
{
    TEST_CASE("positivity")
    {
        CHECK(positivity_filter(m2(2, -1, -1, 2)));
        CHECK_FALSE(positivity_filter(m2(2, -1, -4, 2)));
        for (int n = 0; n < 10; ++n) CHECK(positivity_filter(m2(1, 0, -n, 1)));
        CHECK(positivity_filter(make_candidate(2, -1, -1, 2, 2, 0, 0, 2)));
        // Both matrices fine alone, but no common positive left vector.
        CHECK_FALSE(positivity_filter(make_candidate(1, -2, 0, 1, 1, 0, -2, 1)));
        CHECK(positivity_filter(make_candidate(1, -2, 0, 8, 8, 0, -2, 1)));
    }

    TEST_CASE("ban clauses")
    {
        auto v = ban_check(make_candidate(1, -1, -1, 2, 1, -1, -1, 2));
        REQUIRE(v);
        CHECK(v->clause == BanClause::unit_unit);
        v = ban_check(make_candidate(1, 0, -1, 2, 1, -2, 0, 2));
        REQUIRE(v);
        CHECK(v->clause == BanClause::one_zero);
        v = ban_check(make_candidate(2, 0, -1, 2, 2, 0, -3, 2));
        REQUIRE(v);
        CHECK(v->clause == BanClause::triangular);
        for (const auto& row : classification_rows()) CHECK_FALSE(ban_check(candidate_of(ydatum_to_matrices(row.datum))));
    }

    TEST_CASE("pair search")
    {
        const PairSearchResult r = pair_search();
        const golden::SearchCounts g;
        CHECK(r.matrices == g.matrices);
        CHECK(r.positive_matrices == g.positive_matrices);
        CHECK(r.pairs_positive == g.pairs_positive);
        CHECK(r.pairs_symplectic == g.pairs_symplectic);
        CHECK(r.banned == g.banned);
        CHECK(r.survivors.size() == g.survivors);
        CHECK(r.max_offdiag_surviving == g.max_offdiag);
        CHECK(r.max_offdiag_surviving <= 4);
        CHECK(r.min_diag_surviving == g.min_diag);
        CHECK(contains_orbit(r.survivors, make_candidate(2, -1, -1, 2, 2, 0, 0, 2)));
        CHECK(contains_orbit(r.survivors, make_candidate(2, -1, -3, 2, 2, 0, -2, 2)));
        for (const auto& row : classification_rows())
            CHECK(contains_orbit(r.survivors, candidate_of(ydatum_to_matrices(row.datum))));
        for (const auto& c : r.survivors) {
            CHECK(symplectic_at_one(c));
            CHECK(positivity_filter(c));
            CHECK(orient(swap_indices(c)) == c);
            CHECK(orient(opposite(c)) == c);
        }
    }

    TEST_CASE("families instantiate to symplectic pairs")
    {
        for (const auto& f : lift_families())
            for (int r = 1; r <= 5; ++r)
                for (int a = 0; a <= 2 * r; ++a) {
                    auto p = f.make(r, a);
                    if (!p) continue;
                    CHECK(check_symplectic(*p));
                    CHECK(candidate_of(*p) == f.at_one);
                }
    }

    TEST_CASE("family examples")
    {
        // A_- diagonal 1 + z^{2r} - z^r, A_+ off-diagonals z^a and z^{2r-a}.
        const auto& f4 = family(4);
        CHECK(f4.at_one == make_candidate(2, -1, -1, 2, 1, 0, 0, 1));
        const MatrixPair p = *f4.make(3, 2);
        CHECK(p.minus(0, 0) == 1 + ZPoly::monomial(6) - ZPoly::monomial(3));
        CHECK(p.plus(0, 1) == -ZPoly::monomial(2));
        CHECK(p.plus(1, 0) == -ZPoly::monomial(4));
        // r_1 = 2r, r_2 = 3r.
        const MatrixPair q = *family(5).make(2, 1);
        CHECK(r_values(q) == std::vector<int>{4, 6});
        // (r, a) = (2, 1) of the first family is the first row itself.
        CHECK(*family(1).make(2, 1) == row_pair(1));
    }

    TEST_CASE("lift search finds exactly the family instances")
    {
        for (const auto& g : golden::rows) {
            CAPTURE(g.id);
            const LiftResult lr = lift_to_z(candidate_of(row_pair(g.id)), 12);
            CHECK(lr.instances.size() == g.lift_instances);
            REQUIRE(lr.family);
            CHECK(lr.family->family->id == g.id);
            CHECK(lr.all_in_family);
            CHECK(lr.family_complete);
        }
    }

    TEST_CASE("canonical forms")
    {
        const MatrixPair ex = ydatum_to_matrices(*find_preset("slice-example"));
        CHECK(canonicalize(ex) == row_pair(1));
        for (int id = 1; id <= 6; ++id) {
            CHECK(canonicalize(row_pair(id)) == row_pair(id));
            CHECK(canonicalize(canonicalize(row_pair(id))) == row_pair(id));
        }
        for (int r = 1; r <= 4; ++r)
            for (int a = 1; a < r; ++a) {
                auto p = family(2).make(r, a);
                if (!p) continue;
                CHECK(canonicalize(*p) == row_pair(2));
                CHECK(canonicalize(permute_indices(*p, {1, 0})) == row_pair(2));
            }
        for (int r = 1; r <= 3; ++r)
            for (int a = 1; a < 2 * r; ++a) {
                CHECK(canonicalize(*family(4).make(r, a)) == row_pair(4));
                CHECK(canonicalize(*family(6).make(r, a)) == row_pair(6));
            }
    }

    TEST_CASE("partial classification at r_max = 2")
    {
        ClassifyOptions o;
        o.r_max = 2;
        const auto rep = classify(o);
        std::vector<int> ids;
        for (const auto& c : rep.classes) ids.push_back(c.id);
        CHECK(ids == std::vector<int>{1, 4, 6});
        for (const auto& c : rep.classes) CHECK(c.representative == row_pair(c.id));
    }

    TEST_CASE("without the ban stage the extra candidates have no lift")
    {
        PairSearchOptions po;
        po.apply_bans = false;
        const auto all = pair_search(po);
        const auto kept = pair_search();
        CHECK(all.survivors.size() == golden::SearchCounts{}.survivors_without_bans);
        int extra = 0;
        for (const auto& c : all.survivors) {
            if (std::find(kept.survivors.begin(), kept.survivors.end(), c) != kept.survivors.end()) continue;
            ++extra;
            CHECK(ban_check(c).has_value());
            CHECK(lift_to_z(c, 6).instances.empty());
        }
        CHECK(extra == 79);
    }
}
